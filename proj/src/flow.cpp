#include "ppart/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "ppart/errors.hpp"

namespace ppart {

int FlowNetwork::add_edge(int from, int to, std::int64_t capacity) {
  edges.push_back({from, to, capacity});
  return static_cast<int>(edges.size()) - 1;
}

void FlowNetwork::validate() const {
  auto bad_node = [&](int v) { return v < 0 || v >= node_count; };
  if (bad_node(source) || bad_node(sink) || source == sink)
    throw ContractViolation("invalid source/sink");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& edge = edges[e];
    if (bad_node(edge.from) || bad_node(edge.to))
      throw ContractViolation("edge " + std::to_string(e) + " has bad endpoint");
    if (edge.from == edge.to)
      throw ContractViolation("edge " + std::to_string(e) + " is a self-loop");
    if (edge.capacity < 0)
      throw ContractViolation("edge " + std::to_string(e) +
                              " has negative capacity");
  }
}

bool ScaledFlow::is_integral() const {
  return std::all_of(numerators.begin(), numerators.end(),
                     [&](std::int64_t f) { return f % denominator == 0; });
}

std::int64_t ScaledFlow::value_numerator(const FlowNetwork& net) const {
  std::int64_t v = 0;
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    if (net.edges[e].from == net.source) v += numerators[e];
    if (net.edges[e].to == net.source) v -= numerators[e];
  }
  return v;
}

std::int64_t ScaledFlow::value(const FlowNetwork& net) const {
  const auto v = value_numerator(net);
  if (v % denominator != 0)
    throw ContractViolation("flow value is not a whole number");
  return v / denominator;
}

ScaledFlow ScaledFlow::integral() const {
  if (!is_integral()) throw ContractViolation("flow is not integral");
  ScaledFlow out{1, numerators};
  for (auto& f : out.numerators) f /= denominator;
  return out;
}

std::string check_feasible(const FlowNetwork& net, const ScaledFlow& flow) {
  if (flow.denominator <= 0) return "denominator must be positive";
  if (flow.numerators.size() != net.edges.size())
    return "flow has " + std::to_string(flow.numerators.size()) +
           " entries for " + std::to_string(net.edges.size()) + " edges";
  std::vector<std::int64_t> balance(net.node_count, 0);
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    const auto& edge = net.edges[e];
    const auto f = flow.numerators[e];
    std::int64_t cap = 0;
    if (__builtin_mul_overflow(edge.capacity, flow.denominator, &cap))
      return "capacity overflow on edge " + std::to_string(e);
    if (f < 0 || f > cap)
      return "edge " + std::to_string(e) + " flow " + std::to_string(f) + "/" +
             std::to_string(flow.denominator) + " outside [0, " +
             std::to_string(edge.capacity) + "]";
    balance[edge.from] -= f;
    balance[edge.to] += f;
  }
  for (int v = 0; v < net.node_count; ++v) {
    if (v == net.source || v == net.sink) continue;
    if (balance[v] != 0)
      return "conservation fails at node " + std::to_string(v);
  }
  return {};
}

namespace {

/// Dinic over a residual graph of paired arcs (arc k and k^1 are reverses).
class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net)
      : net_(net), adj_(net.node_count), level_(net.node_count),
        next_(net.node_count) {
    arcs_.reserve(net.edges.size() * 2);
    for (const auto& e : net.edges) {
      adj_[e.from].push_back(static_cast<int>(arcs_.size()));
      arcs_.push_back({e.to, e.capacity});
      adj_[e.to].push_back(static_cast<int>(arcs_.size()));
      arcs_.push_back({e.from, 0});
    }
  }

  void run() {
    constexpr auto kInf = std::numeric_limits<std::int64_t>::max();
    while (bfs()) {
      std::fill(next_.begin(), next_.end(), 0);
      while (dfs(net_.source, kInf) > 0) {
      }
    }
  }

  ScaledFlow flow() const {
    ScaledFlow out{1, std::vector<std::int64_t>(net_.edges.size())};
    // flow on an edge = residual capacity of its reverse arc
    for (std::size_t e = 0; e < net_.edges.size(); ++e)
      out.numerators[e] = arcs_[2 * e + 1].residual;
    return out;
  }

 private:
  struct Arc {
    int to;
    std::int64_t residual;
  };

  bool bfs() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[net_.source] = 0;
    q.push(net_.source);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int a : adj_[v]) {
        if (arcs_[a].residual > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[v] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[net_.sink] >= 0;
  }

  std::int64_t dfs(int v, std::int64_t limit) {
    if (v == net_.sink) return limit;
    for (int& i = next_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
      const int a = adj_[v][i];
      Arc& arc = arcs_[a];
      if (arc.residual <= 0 || level_[arc.to] != level_[v] + 1) continue;
      const auto pushed = dfs(arc.to, std::min(limit, arc.residual));
      if (pushed > 0) {
        arc.residual -= pushed;
        arcs_[a ^ 1].residual += pushed;
        return pushed;
      }
    }
    return 0;
  }

  const FlowNetwork& net_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<int> next_;
};

}  // namespace

ScaledFlow max_flow_integral(const FlowNetwork& net) {
  net.validate();
  Dinic dinic(net);
  dinic.run();
  return dinic.flow();
}

ScaledFlow round_flow(const FlowNetwork& net, const ScaledFlow& fractional) {
  net.validate();
  if (auto err = check_feasible(net, fractional); !err.empty())
    throw ContractViolation("round_flow input infeasible: " + err);
  const std::int64_t D = fractional.denominator;
  std::vector<std::int64_t> num = fractional.numerators;
  auto is_frac = [&](int e) { return num[e] % D != 0; };

  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    const auto& edge = net.edges[e];
    const bool terminal = edge.from == net.source || edge.to == net.source ||
                          edge.from == net.sink || edge.to == net.sink;
    if (terminal && is_frac(static_cast<int>(e)))
      throw ContractViolation("round_flow needs whole flow on terminal edge " +
                              std::to_string(e));
  }

  const int V = net.node_count;
  auto other = [&](int e, int v) {
    return net.edges[e].from == v ? net.edges[e].to : net.edges[e].from;
  };

  // Incident fractional edges per node, ordered by (neighbour, edge id).
  std::vector<std::vector<int>> adj(V);
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    if (!is_frac(static_cast<int>(e))) continue;
    adj[net.edges[e].from].push_back(static_cast<int>(e));
    adj[net.edges[e].to].push_back(static_cast<int>(e));
  }
  for (int v = 0; v < V; ++v) {
    std::sort(adj[v].begin(), adj[v].end(), [&](int a, int b) {
      const int oa = other(a, v), ob = other(b, v);
      return oa != ob ? oa < ob : a < b;
    });
  }

  // Edges only ever go fractional -> whole, so cursors never move back.
  std::vector<std::size_t> cursor(V, 0);
  auto next_fractional = [&](int v, int skip) -> int {
    auto& c = cursor[v];
    while (c < adj[v].size() && !is_frac(adj[v][c])) ++c;
    for (std::size_t k = c; k < adj[v].size(); ++k) {
      const int e = adj[v][k];
      if (e != skip && is_frac(e)) return e;
    }
    return -1;
  };

  std::vector<int> path_nodes;
  std::vector<int> path_edges;  // path_edges[k] joins path_nodes[k], [k + 1]
  std::vector<int> pos(V, -1);
  int start = 0;

  while (true) {
    if (path_nodes.empty()) {
      while (start < V && next_fractional(start, -1) < 0) ++start;
      if (start == V) break;
      path_nodes.push_back(start);
      pos[start] = 0;
    }
    const int u = path_nodes.back();
    const int arrival = path_edges.empty() ? -1 : path_edges.back();
    const int e = next_fractional(u, arrival);
    if (e < 0 && path_edges.empty()) {
      pos[u] = -1;
      path_nodes.clear();
      continue;
    }
    if (e < 0)
      throw ContractViolation("fractional edge subgraph has a dead end at node " +
                              std::to_string(u));
    const int v = other(e, u);
    if (pos[v] < 0) {
      pos[v] = static_cast<int>(path_nodes.size());
      path_nodes.push_back(v);
      path_edges.push_back(e);
      continue;
    }

    // Cycle: path_nodes[pos[v]] .. u, closed by e back to v.
    const std::size_t first = pos[v];
    std::vector<int> cycle(path_edges.begin() + first, path_edges.end());
    cycle.push_back(e);
    std::vector<bool> forward(cycle.size());
    std::int64_t delta = std::numeric_limits<std::int64_t>::max();
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int tail = path_nodes[first + k];
      const int ce = cycle[k];
      forward[k] = net.edges[ce].from == tail;
      const std::int64_t r = num[ce] % D;
      delta = std::min(delta, forward[k] ? D - r : r);
    }
    std::size_t cut = cycle.size();
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      num[cycle[k]] += forward[k] ? delta : -delta;
      if (cut == cycle.size() && !is_frac(cycle[k])) cut = k;
    }
    // Keep the path up to the tail of the first edge that became whole.
    const std::size_t keep = first + cut + 1;
    while (path_nodes.size() > keep) {
      pos[path_nodes.back()] = -1;
      path_nodes.pop_back();
      path_edges.pop_back();
    }
  }

  ScaledFlow out{D, std::move(num)};
  if (auto err = check_feasible(net, out); !err.empty())
    throw ContractViolation("round_flow produced infeasible flow: " + err);
  if (out.value_numerator(net) != fractional.value_numerator(net))
    throw ContractViolation("round_flow changed the flow value");
  return out.integral();
}

}  // namespace ppart
