#include "ppart/baranyai.hpp"

#include <algorithm>
#include <map>

#include "ppart/errors.hpp"

namespace ppart {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

void canonicalize(Schedule& schedule) {
  for (auto& round : schedule.rounds) {
    for (auto& s : round) std::sort(s.begin(), s.end(), std::greater<>());
    std::sort(round.begin(), round.end());
  }
  std::sort(schedule.rounds.begin(), schedule.rounds.end());
}

Block::Block(const std::vector<int>& elements) {
  if (elements.size() > 4) throw ArgumentError("block holds at most 4 elements");
  size_ = static_cast<int>(elements.size());
  std::copy(elements.begin(), elements.end(), elems_.begin());
  std::sort(elems_.begin(), elems_.begin() + size_, std::greater<>());
}

bool Block::contains(int e) const { return std::find(begin(), end(), e) != end(); }

Block Block::with(int e) const {
  if (size_ == 4) throw ContractViolation("cannot extend a full block");
  if (contains(e)) throw ContractViolation("element already in block");
  std::vector<int> v(begin(), end());
  v.push_back(e);
  return Block(v);
}

Subset4 Block::as_subset() const {
  if (size_ != 4) throw ContractViolation("block is not full: " + to_string());
  return elems_;
}

std::string Block::to_string() const {
  std::string out = "{";
  for (int k = 0; k < size_; ++k) {
    if (k) out += ',';
    out += std::to_string(elems_[k]);
  }
  return out + "}";
}

PartialState PartialState::initial(std::size_t n) {
  if (n == 0 || n % 4 != 0)
    throw ArgumentError("n must be a positive multiple of 4, got " +
                        std::to_string(n));
  PartialState state;
  state.n = n;
  state.inserted = 0;
  const auto rounds = binomial(n - 1, 3);
  state.rounds.assign(
      rounds, std::vector<SlotGroup>{{Block{}, static_cast<std::int64_t>(n / 4)}});
  return state;
}

std::string PartialState::check() const {
  const std::size_t slots = n / 4;
  if (rounds.size() != binomial(n - 1, 3)) return "wrong round count";
  std::map<Block, std::int64_t> global;
  for (std::size_t r = 0; r < rounds.size(); ++r) {
    std::int64_t total = 0;
    std::vector<int> seen(inserted, 0);
    for (const auto& g : rounds[r]) {
      if (g.multiplicity <= 0) return "round " + std::to_string(r) + " has empty group";
      total += g.multiplicity;
      global[g.block] += g.multiplicity;
      for (int e : g.block) {
        if (e < 0 || e >= inserted)
          return "round " + std::to_string(r) + " holds uninserted element";
        seen[e] += static_cast<int>(g.multiplicity);
      }
    }
    if (total != static_cast<std::int64_t>(slots))
      return "round " + std::to_string(r) + " has wrong slot count";
    for (int e = 0; e < inserted; ++e)
      if (seen[e] != 1)
        return "round " + std::to_string(r) + " covers element " +
               std::to_string(e) + " " + std::to_string(seen[e]) + " times";
  }
  std::vector<std::uint64_t> distinct(5, 0);
  for (const auto& [block, count] : global) {
    const auto expect = binomial(n - inserted, 4 - block.size());
    if (static_cast<std::uint64_t>(count) != expect)
      return "block " + block.to_string() + " occurs " + std::to_string(count) +
             " times, expected " + std::to_string(expect);
    ++distinct[block.size()];
  }
  for (int k = 0; k <= 4; ++k) {
    const bool present = binomial(n - inserted, 4 - k) > 0;
    const auto expect = present ? binomial(inserted, k) : 0;
    if (distinct[k] != expect)
      return std::to_string(distinct[k]) + " distinct blocks of size " +
             std::to_string(k) + ", expected " + std::to_string(expect);
  }
  return {};
}

StepNetwork build_step_network(const PartialState& state, int element) {
  if (element != state.inserted)
    throw ContractViolation("elements must be inserted in order");
  if (element < 0 || static_cast<std::size_t>(element) >= state.n)
    throw ContractViolation("element out of range");
  if (auto err = state.check(); !err.empty())
    throw ContractViolation("partial state invalid: " + err);

  const auto n = static_cast<std::int64_t>(state.n);
  const std::int64_t D = n - element;
  StepNetwork step;
  auto& net = step.network;
  net.source = net.add_node();

  std::map<Block, int> type_index;
  for (const auto& round : state.rounds)
    for (const auto& g : round)
      if (g.block.size() < 4) type_index.emplace(g.block, 0);
  for (auto& [block, idx] : type_index) {
    idx = static_cast<int>(step.block_types.size());
    step.block_types.push_back(block);
  }

  step.round_nodes.reserve(state.rounds.size());
  for (std::size_t r = 0; r < state.rounds.size(); ++r)
    step.round_nodes.push_back(net.add_node());
  for (std::size_t b = 0; b < step.block_types.size(); ++b)
    step.block_nodes.push_back(net.add_node());
  net.sink = net.add_node();

  auto& seed = step.seed.numerators;
  step.seed.denominator = D;
  for (int node : step.round_nodes) {
    net.add_edge(net.source, node, 1);
    seed.push_back(D);
  }
  for (std::size_t r = 0; r < state.rounds.size(); ++r) {
    for (const auto& g : state.rounds[r]) {
      if (g.block.size() == 4) continue;
      const int b = type_index.at(g.block);
      const int e = net.add_edge(step.round_nodes[r], step.block_nodes[b],
                                 g.multiplicity);
      seed.push_back((4 - g.block.size()) * g.multiplicity);
      step.middle_edges.push_back({e, static_cast<int>(r), b});
    }
  }
  for (std::size_t b = 0; b < step.block_types.size(); ++b) {
    const auto cap = static_cast<std::int64_t>(
        binomial(n - element - 1, 3 - step.block_types[b].size()));
    net.add_edge(step.block_nodes[b], net.sink, cap);
    seed.push_back(cap * D);
  }

  if (auto err = check_feasible(net, step.seed); !err.empty())
    throw ContractViolation("seed flow infeasible: " + err);
  return step;
}

PartialState apply_step(const PartialState& state, const StepNetwork& step,
                        const ScaledFlow& integral) {
  if (integral.denominator != 1 || integral.numerators.size() !=
                                       step.network.edges.size())
    throw ContractViolation("apply_step needs an integral flow on the step network");
  const int element = state.inserted;
  std::vector<int> chosen(state.rounds.size(), -1);
  for (const auto& m : step.middle_edges) {
    const auto f = integral.numerators[m.edge];
    if (f == 0) continue;
    if (f != 1 || chosen[m.round] >= 0)
      throw ContractViolation("round " + std::to_string(m.round) +
                              " sends more than one unit");
    chosen[m.round] = m.block_type;
  }

  PartialState next;
  next.n = state.n;
  next.inserted = element + 1;
  next.rounds.resize(state.rounds.size());
  for (std::size_t r = 0; r < state.rounds.size(); ++r) {
    if (chosen[r] < 0)
      throw ContractViolation("round " + std::to_string(r) + " receives no flow");
    const Block& pick = step.block_types[chosen[r]];
    std::map<Block, std::int64_t> groups;
    for (const auto& g : state.rounds[r]) groups[g.block] += g.multiplicity;
    auto it = groups.find(pick);
    if (it == groups.end() || pick.size() == 4)
      throw ContractViolation("flow selects a block absent from its round");
    if (--it->second == 0) groups.erase(it);
    groups[pick.with(element)] += 1;
    for (const auto& [block, count] : groups)
      next.rounds[r].push_back({block, count});
  }
  return next;
}

Schedule build_schedule(std::size_t n, FlowEngine engine,
                        const StepObserver& observer) {
  PartialState state = PartialState::initial(n);
  const auto rounds = static_cast<std::int64_t>(binomial(n - 1, 3));
  for (int element = 0; element < static_cast<int>(n); ++element) {
    StepNetwork step = build_step_network(state, element);
    ScaledFlow flow = engine == FlowEngine::Rounding
                          ? round_flow(step.network, step.seed)
                          : max_flow_integral(step.network);
    if (flow.value(step.network) != rounds)
      throw ContractViolation("step " + std::to_string(element) + " flow value " +
                              std::to_string(flow.value(step.network)) +
                              " != " + std::to_string(rounds));
    if (observer) observer(element, step, flow);
    state = apply_step(state, step, flow);
  }
  if (auto err = state.check(); !err.empty())
    throw ContractViolation("final state invalid: " + err);

  Schedule schedule;
  schedule.n = n;
  schedule.rounds.reserve(state.rounds.size());
  for (const auto& round : state.rounds) {
    Round out;
    for (const auto& g : round)
      for (std::int64_t c = 0; c < g.multiplicity; ++c)
        out.push_back(g.block.as_subset());
    schedule.rounds.push_back(std::move(out));
  }
  canonicalize(schedule);
  return schedule;
}

Schedule pad_and_build(std::size_t n, FlowEngine engine) {
  if (n < 4) throw ArgumentError("n must be at least 4, got " + std::to_string(n));
  const std::size_t padded = (n + 3) / 4 * 4;
  Schedule full = build_schedule(padded, engine);
  if (padded == n) return full;

  Schedule out;
  out.n = n;
  const int limit = static_cast<int>(n);
  for (auto& round : full.rounds) {
    Round kept;
    for (const auto& s : round)
      if (s[0] < limit) kept.push_back(s);  // s[0] is the largest element
    if (!kept.empty()) out.rounds.push_back(std::move(kept));
  }
  canonicalize(out);
  return out;
}

}  // namespace ppart
