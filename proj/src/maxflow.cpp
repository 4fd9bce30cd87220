#include "cbcut/maxflow.hpp"

#include <queue>

#include "cbcut/error.hpp"

namespace cbcut {

FlowNetwork::FlowNetwork(int node_count) : adj_(static_cast<size_t>(node_count)) {
  if (node_count < 0) fail(Errc::Parameter, "negative node count");
}

void FlowNetwork::add_arc(int tail, int head, const Rat& capacity) {
  if (tail < 0 || tail >= node_count() || head < 0 || head >= node_count())
    fail(Errc::Parameter, "arc endpoint out of range");
  if (capacity < 0) fail(Errc::Parameter, "arc capacity must be nonnegative");
  adj_[static_cast<size_t>(tail)].push_back({head, adj_[static_cast<size_t>(head)].size(), capacity});
  adj_[static_cast<size_t>(head)].push_back({tail, adj_[static_cast<size_t>(tail)].size() - 1, Rat(0)});
}

bool FlowNetwork::build_levels(int source, int sink) {
  level_.assign(adj_.size(), -1);
  std::queue<int> queue;
  queue.push(source);
  level_[static_cast<size_t>(source)] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (const Arc& a : adj_[static_cast<size_t>(v)]) {
      if (a.cap > 0 && level_[static_cast<size_t>(a.to)] < 0) {
        level_[static_cast<size_t>(a.to)] = level_[static_cast<size_t>(v)] + 1;
        queue.push(a.to);
      }
    }
  }
  return level_[static_cast<size_t>(sink)] >= 0;
}

Rat FlowNetwork::push(int v, int sink, Rat limit) {
  if (v == sink) return limit;
  for (size_t& i = ptr_[static_cast<size_t>(v)]; i < adj_[static_cast<size_t>(v)].size(); ++i) {
    Arc& a = adj_[static_cast<size_t>(v)][i];
    if (a.cap <= 0 || level_[static_cast<size_t>(a.to)] != level_[static_cast<size_t>(v)] + 1) continue;
    Rat pushed = push(a.to, sink, std::min(limit, a.cap));
    if (pushed > 0) {
      a.cap -= pushed;
      adj_[static_cast<size_t>(a.to)][a.rev].cap += pushed;
      return pushed;
    }
  }
  return Rat(0);
}

Rat FlowNetwork::max_flow(int source, int sink) {
  if (source == sink) fail(Errc::Parameter, "source equals sink");
  Rat infinity = 1;
  for (const auto& arcs : adj_)
    for (const Arc& a : arcs) infinity += a.cap;

  Rat flow = 0;
  while (build_levels(source, sink)) {
    ptr_.assign(adj_.size(), 0);
    while (true) {
      Rat pushed = push(source, sink, infinity);
      if (pushed == 0) break;
      flow += pushed;
    }
  }

  // residual reachability gives the minimal source side
  side_.assign(adj_.size(), false);
  std::queue<int> queue;
  queue.push(source);
  side_[static_cast<size_t>(source)] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (const Arc& a : adj_[static_cast<size_t>(v)]) {
      if (a.cap > 0 && !side_[static_cast<size_t>(a.to)]) {
        side_[static_cast<size_t>(a.to)] = true;
        queue.push(a.to);
      }
    }
  }
  return flow;
}

}  // namespace cbcut
