#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ppart/pauli.hpp"

namespace ppart {

/**
 * A product of creation operators followed by annihilation operators,
 * a+_{c0} a+_{c1} ... a_{a0} a_{a1} ..., on n fermionic modes.
 *
 * Index lists are strictly descending. Supported shapes are the one-body
 * term a+_p a_q and the two-body term a+_p a+_q a_r a_s (p > q, r > s).
 */
struct FermionicTerm {
  std::size_t n = 0;
  std::vector<int> creates;
  std::vector<int> annihilates;

  static FermionicTerm one_body(std::size_t n, int p, int q);
  static FermionicTerm two_body(std::size_t n, int p, int q, int r, int s);

  bool is_one_body() const { return creates.size() == 1; }
  /// Two-body with four distinct indices ordered p > q > r > s.
  bool is_excitation() const;

  friend bool operator==(const FermionicTerm&, const FermionicTerm&) = default;
  friend auto operator<=>(const FermionicTerm&, const FermionicTerm&) = default;

  /// "a+7 a+5 a-3 a-0"
  std::string to_string() const;
};

/// Endpoints and Z-segments of the encoded excitation a+_p a+_q a_r a_s.
struct JwPattern {
  std::size_t n = 0;
  std::array<int, 4> endpoints{};  // ascending: s, r, q, p
  /// Open intervals (lo, hi) carrying Z: (q, p) and (s, r).
  std::array<std::pair<int, int>, 2> z_segments{};

  bool in_z_segment(int t) const;
  bool is_endpoint(int t) const;
};

/// The two weighted strings of a single ladder operator: X and Y on `mode`,
/// Z on every lower mode, coefficients 1/2 and -i/2 (creation) or +i/2
/// (annihilation).
std::pair<WeightedPauliString, WeightedPauliString> jw_ladder(int mode,
                                                              bool dagger,
                                                              std::size_t n);

/// Full expansion of any supported term; like strings are merged and zero
/// coefficients dropped. Output sorted by string text.
std::vector<WeightedPauliString> jw_encode(const FermionicTerm& term);

/// Expansion of a distinct-index excitation: exactly 16 strings.
std::vector<WeightedPauliString> jw_excitation(const FermionicTerm& term);

JwPattern pattern_of(const FermionicTerm& term);

bool matches_pattern(const PauliString& s, const JwPattern& pattern);

}  // namespace ppart
