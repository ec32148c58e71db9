#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "ppart/baranyai.hpp"
#include "ppart/fermion.hpp"
#include "ppart/pauli.hpp"

namespace ppart {

enum class FamilyOrigin { Dominant, Residual };

const char* to_string(FamilyOrigin origin);

/**
 * Pauli strings measured together. term_of[k] indexes `provenance` for
 * strings[k]; term_weights (parallel to provenance) carries the Hamiltonian
 * coefficient of each term, 1.0 when none was supplied.
 */
struct CommutingFamily {
  FamilyOrigin origin = FamilyOrigin::Dominant;
  std::vector<WeightedPauliString> strings;
  std::vector<std::size_t> term_of;
  std::vector<FermionicTerm> provenance;
  std::vector<double> term_weights;

  std::size_t size() const { return strings.size(); }
  /// Adds a term and returns its provenance index.
  std::size_t add_term(const FermionicTerm& term, double weight = 1.0);
  void add_string(WeightedPauliString s, std::size_t term);
};

/// Sparse h_pq / h_pqrs. Two-body keys are stored with p > q and r > s.
struct HamiltonianCoefficients {
  std::size_t n = 0;
  std::map<std::pair<int, int>, double> one_body;
  std::map<std::array<int, 4>, double> two_body;

  /// Coefficient of a supported term; 0 when absent.
  double coefficient(const FermionicTerm& term) const;
};

/**
 * Two families per round: the round's excitation strings with an even
 * number of Y factors, and those with an odd number. Every family is checked
 * all-pairs before it is returned (ContractViolation otherwise).
 */
std::vector<CommutingFamily> commuting_families(const Schedule& schedule);

/// Every one-body term, and every two-body term whose creation and
/// annihilation pairs share an index. Ordered one-body first.
std::vector<FermionicTerm> residual_terms(std::size_t n);

/// Upper bound on residual_families(n).size(): 1 + 2n(n-1)^2 <= 2n^3.
std::size_t residual_family_bound(std::size_t n);

/**
 * Families for the residual terms: all diagonal (I/Z only) terms share one
 * family; every other term is split into its even-Y and odd-Y halves. With
 * coefficients, zero-valued terms are skipped.
 */
std::vector<CommutingFamily> residual_families(
    std::size_t n, const HamiltonianCoefficients* coeffs = nullptr);

/// Drops strings of zero-coefficient terms and records term weights. The
/// family list itself (count and order) is unchanged.
void apply_coefficients(std::vector<CommutingFamily>& families,
                        const HamiltonianCoefficients& coeffs);

/// Throws ContractViolation unless all pairs in the family commute.
void certify(const CommutingFamily& family);

struct PartitionReport {
  std::size_t n = 0;
  std::size_t schedule_rounds = 0;
  std::vector<CommutingFamily> families;
  std::size_t dominant_family_count = 0;
  std::size_t residual_family_count = 0;
  std::size_t dominant_string_count = 0;
  std::size_t residual_string_count = 0;
  std::size_t max_family_size = 0;
  /// dominant_family_count / C(n-1, 3)
  double scaling_ratio = 0.0;
  bool coefficients_applied = false;

  std::size_t family_count() const { return families.size(); }
};

struct PartitionOptions {
  bool include_residual = true;
  const HamiltonianCoefficients* coefficients = nullptr;
};

PartitionReport build_partition(const Schedule& schedule,
                                const PartitionOptions& options = {});

/// Write-once-per-n store of schedules, optionally backed by a directory of
/// schedule files. Safe to share between threads.
class ScheduleCache {
 public:
  explicit ScheduleCache(std::optional<std::filesystem::path> directory = {},
                         FlowEngine engine = FlowEngine::Rounding);

  std::shared_ptr<const Schedule> get(std::size_t n);
  std::filesystem::path file_for(std::size_t n) const;

 private:
  std::optional<std::filesystem::path> directory_;
  FlowEngine engine_;
  std::mutex mutex_;
  std::map<std::size_t, std::shared_ptr<const Schedule>> schedules_;
};

}  // namespace ppart
