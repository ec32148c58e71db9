#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ppart/flow.hpp"

namespace ppart {

/// Four distinct mode indices, sorted descending.
using Subset4 = std::array<int, 4>;
/// Pairwise-disjoint subsets; canonical form sorts them ascending.
using Round = std::vector<Subset4>;

struct Schedule {
  std::size_t n = 0;
  std::vector<Round> rounds;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Sorts each subset descending, each round's subsets ascending, and the
/// rounds ascending (all lexicographic).
void canonicalize(Schedule& schedule);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// A partially filled block of at most 4 inserted elements.
class Block {
 public:
  Block() = default;
  explicit Block(const std::vector<int>& elements);

  int size() const noexcept { return size_; }
  /// Elements in descending order.
  const int* begin() const noexcept { return elems_.data(); }
  const int* end() const noexcept { return elems_.data() + size_; }
  bool contains(int e) const;
  Block with(int e) const;
  Subset4 as_subset() const;

  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block& a, const Block& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.elems_ <=> b.elems_;
  }

  std::string to_string() const;

 private:
  std::array<int, 4> elems_{-1, -1, -1, -1};
  int size_ = 0;
};

/// Equal blocks inside one round, stored once with a count.
struct SlotGroup {
  Block block;
  std::int64_t multiplicity = 0;
};

/**
 * Intermediate state after inserting elements 0..inserted-1.
 *
 * Each of the C(n-1, 3) rounds holds n/4 slots whose blocks partition
 * {0..inserted-1}; slot groups are kept sorted by block. Across all rounds,
 * a block B occurs in exactly C(n - inserted, 4 - |B|) slots.
 */
struct PartialState {
  std::size_t n = 0;
  int inserted = 0;
  std::vector<std::vector<SlotGroup>> rounds;

  static PartialState initial(std::size_t n);
  /// Empty string when every invariant above holds.
  std::string check() const;
};

/// Network for inserting element `element` plus its fractional seed flow.
struct StepNetwork {
  FlowNetwork network;
  ScaledFlow seed;
  /// Node id of each round (index = round).
  std::vector<int> round_nodes;
  /// Distinct partial blocks of size < 4, one node each.
  std::vector<Block> block_types;
  std::vector<int> block_nodes;
  /// Middle edges: edge id -> (round, block type).
  struct Middle {
    int edge;
    int round;
    int block_type;
  };
  std::vector<Middle> middle_edges;
};

enum class FlowEngine {
  Rounding,  ///< round the fractional seed (primary path)
  Baseline,  ///< solve each step's max flow from scratch
};

/**
 * Source -> round (capacity 1); round -> block type B (capacity = copies
 * of B in that round); B -> sink (capacity C(n - i - 1, 3 - |B|)). The seed
 * uses denominator n - i and puts (4 - |B|) * copies on each middle edge.
 */
StepNetwork build_step_network(const PartialState& state, int element);

/// Adds `element` to the slot chosen by the unit of flow leaving each round.
PartialState apply_step(const PartialState& state, const StepNetwork& step,
                        const ScaledFlow& integral);

/// Called after each insertion with the step's network and integral flow.
using StepObserver = std::function<void(int element, const StepNetwork&,
                                        const ScaledFlow&)>;

/// 1-factorization of all 4-subsets of {0..n-1}; n must be a positive
/// multiple of 4. Deterministic; output is canonical.
Schedule build_schedule(std::size_t n, FlowEngine engine = FlowEngine::Rounding,
                        const StepObserver& observer = {});

/// Any n >= 4: builds at the next multiple of 4 and drops the subsets that
/// touch padding modes (and rounds left empty).
Schedule pad_and_build(std::size_t n, FlowEngine engine = FlowEngine::Rounding);

}  // namespace ppart
