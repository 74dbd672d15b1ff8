#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "torcol/surgery.hpp"

namespace torcol {

bool planarity_check(const Graph& g) {
  // Euler bound rejects dense graphs before building the Boost graph.
  if (g.order() >= 3 && g.size() > 3 * g.order() - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(g.order()));
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace torcol
