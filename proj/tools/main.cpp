#include "tmfg/cli.hpp"

int main(int argc, char** argv) { return tmfg::cli::run_cli(argc, argv); }
