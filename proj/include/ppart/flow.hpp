#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ppart {

struct FlowEdge {
  int from = 0;
  int to = 0;
  std::int64_t capacity = 0;
};

/// Directed network with integral capacities. Edge ids are positions in
/// `edges`; parallel edges are allowed, self-loops are not.
struct FlowNetwork {
  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<FlowEdge> edges;

  int add_node() { return node_count++; }
  int add_edge(int from, int to, std::int64_t capacity);
  /// Throws ContractViolation on bad node ids, self-loops, negative capacity.
  void validate() const;
};

/// Flow on edge e is numerators[e] / denominator.
struct ScaledFlow {
  std::int64_t denominator = 1;
  std::vector<std::int64_t> numerators;

  bool is_integral() const;
  /// Net flow out of the source, in numerator units.
  std::int64_t value_numerator(const FlowNetwork& net) const;
  /// Net flow out of the source; requires the value to be a whole number.
  std::int64_t value(const FlowNetwork& net) const;
  /// Same flow with denominator 1; requires is_integral().
  ScaledFlow integral() const;
};

/// Capacity and conservation check in exact integer arithmetic. Returns an
/// empty string when the flow is feasible, else the first violation found.
std::string check_feasible(const FlowNetwork& net, const ScaledFlow& flow);

/// Maximum flow by Dinic's blocking-flow method; denominator 1.
ScaledFlow max_flow_integral(const FlowNetwork& net);

/**
 * Rounds a feasible fractional flow to an integral one of the same value.
 *
 * Edges touching the source or sink must already carry whole flow. While a
 * fractional edge remains, walk the undirected subgraph of fractional edges
 * (lowest node and edge ids first) until the walk closes a cycle, then push
 * around that cycle the smallest amount that makes one of its edges whole.
 * Every cycle push leaves node balances unchanged and never crosses an
 * integer boundary, so capacities and the value are preserved.
 */
ScaledFlow round_flow(const FlowNetwork& net, const ScaledFlow& fractional);

}  // namespace ppart
