#pragma once

#include <cstddef>
#include <vector>

#include "kcausal/rational.hpp"

namespace kcausal {

// Dinic's algorithm over exact rational capacities. Each phase builds a BFS
// level graph and saturates it with blocking flows, so the number of phases
// is bounded by the node count regardless of the capacity values.
class MaxFlow {
 public:
  using NodeId = std::size_t;
  using EdgeId = std::size_t;

  explicit MaxFlow(std::size_t node_count);

  EdgeId add_edge(NodeId from, NodeId to, Rational capacity);

  Rational solve(NodeId source, NodeId sink);

  const Rational& flow(EdgeId edge) const;
  NodeId edge_from(EdgeId edge) const;
  NodeId edge_to(EdgeId edge) const;
  std::size_t edge_count() const noexcept { return arcs_.size() / 2; }

  // Nodes reachable from the source in the residual graph after solve():
  // the source side of a minimum cut.
  std::vector<bool> source_side() const;

 private:
  struct Arc {
    NodeId to;
    Rational residual;
  };

  bool build_levels();
  Rational push(NodeId node, const Rational& limit);

  std::size_t node_count_;
  NodeId source_ = 0;
  NodeId sink_ = 0;
  std::vector<Arc> arcs_;  // arc 2e is edge e, arc 2e+1 its reverse
  std::vector<Rational> capacity_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace kcausal
