#include "tmfg/filter_result.hpp"

#include <stdexcept>

namespace tmfg {

std::string_view move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::T2: return "t2";
    case MoveKind::T2Inverse: return "t2_inverse";
    case MoveKind::T1: return "t1";
    case MoveKind::A: return "a";
    case MoveKind::AInverse: return "a_inverse";
    case MoveKind::S: return "s";
  }
  throw std::logic_error("bad move kind");
}

}  // namespace tmfg
