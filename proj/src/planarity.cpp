#include "tmfg/planarity.hpp"

#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace tmfg {

struct PlanarityTester::Impl {
  using Graph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g;
  int p = 0;
  int edges = 0;

  bool planar() const { return boost::boyer_myrvold_planarity_test(g); }
};

PlanarityTester::PlanarityTester(int p) : impl_(std::make_unique<Impl>()) {
  if (p < 1) throw std::invalid_argument("PlanarityTester: vertex count must be positive");
  impl_->p = p;
  impl_->g = Impl::Graph(static_cast<std::size_t>(p));
}

PlanarityTester::~PlanarityTester() = default;
PlanarityTester::PlanarityTester(PlanarityTester&& other) noexcept = default;
PlanarityTester& PlanarityTester::operator=(PlanarityTester&& other) noexcept = default;

int PlanarityTester::dimension() const { return impl_->p; }
int PlanarityTester::edge_count() const { return impl_->edges; }

bool PlanarityTester::can_add(VertexId i, VertexId j) {
  if (i == j || i < 0 || j < 0 || i >= impl_->p || j >= impl_->p)
    throw std::invalid_argument("PlanarityTester: bad edge endpoints");
  boost::add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j), impl_->g);
  bool ok = impl_->planar();
  boost::remove_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j), impl_->g);
  return ok;
}

bool PlanarityTester::try_add(VertexId i, VertexId j) {
  if (i == j || i < 0 || j < 0 || i >= impl_->p || j >= impl_->p)
    throw std::invalid_argument("PlanarityTester: bad edge endpoints");
  boost::add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j), impl_->g);
  if (impl_->planar()) {
    ++impl_->edges;
    return true;
  }
  boost::remove_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j), impl_->g);
  return false;
}

bool PlanarityTester::is_planar() const { return impl_->planar(); }

bool is_planar(int p, std::span<const Edge> edges) {
  boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> g(
      static_cast<std::size_t>(p));
  for (const Edge& e : edges) {
    if (e.a < 0 || e.b >= p)
      throw std::invalid_argument("is_planar: edge endpoint outside [0, p)");
    boost::add_edge(static_cast<std::size_t>(e.a), static_cast<std::size_t>(e.b), g);
  }
  return boost::boyer_myrvold_planarity_test(g);
}

}  // namespace tmfg
