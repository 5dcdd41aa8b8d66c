#include "kcausal/max_flow.hpp"

#include <queue>

#include "kcausal/errors.hpp"

namespace kcausal {

MaxFlow::MaxFlow(std::size_t node_count)
    : node_count_(node_count), adjacency_(node_count), level_(node_count), cursor_(node_count) {}

MaxFlow::EdgeId MaxFlow::add_edge(NodeId from, NodeId to, Rational capacity) {
  if (from >= node_count_ || to >= node_count_) throw ValidationError("flow edge outside graph");
  capacity.canonicalize();
  if (capacity < 0) throw ValidationError("negative flow capacity");
  const EdgeId id = arcs_.size() / 2;
  adjacency_[from].push_back(arcs_.size());
  arcs_.push_back({to, capacity});
  adjacency_[to].push_back(arcs_.size());
  arcs_.push_back({from, Rational(0)});
  capacity_.push_back(capacity);
  return id;
}

bool MaxFlow::build_levels() {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<NodeId> frontier;
  level_[source_] = 0;
  frontier.push(source_);
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop();
    for (std::size_t a : adjacency_[u]) {
      const Arc& arc = arcs_[a];
      if (arc.residual > 0 && level_[arc.to] < 0) {
        level_[arc.to] = level_[u] + 1;
        frontier.push(arc.to);
      }
    }
  }
  return level_[sink_] >= 0;
}

Rational MaxFlow::push(NodeId node, const Rational& limit) {
  if (node == sink_) return limit;
  for (std::size_t& i = cursor_[node]; i < adjacency_[node].size(); ++i) {
    const std::size_t a = adjacency_[node][i];
    Arc& arc = arcs_[a];
    if (arc.residual <= 0 || level_[arc.to] != level_[node] + 1) continue;
    const Rational pushed = push(arc.to, limit < arc.residual ? limit : arc.residual);
    if (pushed > 0) {
      arc.residual -= pushed;
      arcs_[a ^ 1U].residual += pushed;
      return pushed;
    }
  }
  return Rational(0);
}

Rational MaxFlow::solve(NodeId source, NodeId sink) {
  if (source >= node_count_ || sink >= node_count_ || source == sink) {
    throw ValidationError("invalid source/sink for max flow");
  }
  source_ = source;
  sink_ = sink;
  Rational total = 0;
  Rational unbounded = 1;
  for (const auto& c : capacity_) unbounded += c;
  while (build_levels()) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    for (;;) {
      const Rational pushed = push(source_, unbounded);
      if (pushed == 0) break;
      total += pushed;
    }
  }
  return total;
}

const Rational& MaxFlow::flow(EdgeId edge) const { return arcs_.at(2 * edge + 1).residual; }

MaxFlow::NodeId MaxFlow::edge_from(EdgeId edge) const { return arcs_.at(2 * edge + 1).to; }

MaxFlow::NodeId MaxFlow::edge_to(EdgeId edge) const { return arcs_.at(2 * edge).to; }

std::vector<bool> MaxFlow::source_side() const {
  std::vector<bool> seen(node_count_, false);
  std::queue<NodeId> frontier;
  seen[source_] = true;
  frontier.push(source_);
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop();
    for (std::size_t a : adjacency_[u]) {
      const Arc& arc = arcs_[a];
      if (arc.residual > 0 && !seen[arc.to]) {
        seen[arc.to] = true;
        frontier.push(arc.to);
      }
    }
  }
  return seen;
}

}  // namespace kcausal
