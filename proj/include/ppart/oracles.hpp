#pragma once

// Brute-force checks that share no code path with what they check: dense
// matrices are assembled from 2x2 constants, commutation is recounted
// character by character, and coverage is recounted from scratch.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppart/baranyai.hpp"
#include "ppart/fermion.hpp"
#include "ppart/partition.hpp"
#include "ppart/pauli.hpp"

namespace ppart::oracle {

/// Row-major 2^n x 2^n complex matrix. Qubit 0 is the most significant
/// tensor factor.
struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<std::complex<double>> data;

  static DenseMatrix zero(std::size_t dim);
  static DenseMatrix identity(std::size_t dim);
  std::complex<double>& at(std::size_t r, std::size_t c) { return data[r * dim + c]; }
  std::complex<double> at(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
};

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scaled(const DenseMatrix& a, std::complex<double> s);
DenseMatrix adjoint(const DenseMatrix& a);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
bool is_zero(const DenseMatrix& a);

/// Matrix of a Pauli string given as text ("XIZ").
DenseMatrix pauli_matrix(const std::string& text);
/// Occupation-basis ladder operator on `mode` with a Z string on lower modes.
DenseMatrix ladder_matrix(int mode, bool dagger, std::size_t n);
/// Product of ladder matrices for a term.
DenseMatrix term_matrix(const FermionicTerm& term);
DenseMatrix weighted_sum_matrix(const std::vector<WeightedPauliString>& strings,
                                std::size_t n);

/// Anti-commuting positions, counted on the text forms.
std::size_t count_anticommuting(const std::string& a, const std::string& b);

/// The 16 strings of an excitation generated directly from its pattern.
std::vector<std::string> pattern_strings(const FermionicTerm& term);

struct SplitCase {
  std::array<int, 4> first;   // p > q > r > s
  std::array<int, 4> second;  // i > j > k > l
  std::size_t anticommuting = 0;
  std::size_t pairs_checked = 0;
  bool all_commute = false;
  bool encoding_matches_pattern = false;
};

struct SplitReport {
  std::vector<SplitCase> cases;
  std::size_t min_count = 0;
  std::size_t max_count = 0;
  bool all_even = false;
  bool passed = false;
};

/// All 70 ways to split 8 modes into two excitations, 256 string pairs each.
SplitReport verify_disjoint_splits();

struct JwMatrixReport {
  std::size_t n = 0;
  std::size_t terms_checked = 0;
  std::size_t excitations_checked = 0;
  double max_abs_diff = 0.0;
  bool shapes_ok = false;  // 16 strings, |c| = 1/16, pattern match
  bool hermitian_ok = false;
  bool passed = false;
  std::string first_failure;
};

/// Every excitation, residual two-body term, and one-body term at n modes.
JwMatrixReport verify_jw_against_matrices(std::size_t n);

struct ScheduleReport {
  bool passed = false;
  std::size_t rounds = 0;
  std::size_t subsets = 0;
  std::size_t expected_subsets = 0;
  std::string counterexample;
};

/// Exact cover of all C(n, 4) subsets and disjoint rounds. When 4 | n,
/// rounds must also be full and number C(n-1, 3); otherwise rounds may be
/// partial and number at most C(n'-1, 3) for n' the next multiple of 4.
ScheduleReport validate_schedule(const Schedule& schedule);

struct FamilyReport {
  bool passed = false;
  std::size_t families = 0;
  std::size_t strings = 0;
  std::size_t pairs_checked = 0;
  std::string counterexample;
};

FamilyReport validate_families(const std::vector<CommutingFamily>& families);

/// Z*(X|Y)I* on n qubits: 2n strings, no two of which commute.
std::vector<PauliString> anticommuting_chain_fixture(std::size_t n);

struct SlidingReport {
  std::size_t trials = 0;
  std::size_t slides = 0;
  bool passed = false;
  std::string counterexample;
};

/// Random disjoint excitation pairs at n <= max_n; one endpoint of the first
/// term is moved within its gap between the second term's endpoints, and the
/// anti-commuting parity of every string pair must not change.
SlidingReport verify_sliding_invariance(std::size_t trials, std::size_t max_n,
                                        std::uint64_t seed);

nlohmann::json to_json(const SplitReport& r);
nlohmann::json to_json(const JwMatrixReport& r);
nlohmann::json to_json(const ScheduleReport& r);
nlohmann::json to_json(const FamilyReport& r);
nlohmann::json to_json(const SlidingReport& r);

}  // namespace ppart::oracle
