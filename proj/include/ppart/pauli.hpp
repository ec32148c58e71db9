#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ppart/dyadic.hpp"

namespace ppart {

enum class PauliOp : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliOp op);

/// Single-qubit product a*b = i^phase * result.
struct PauliProduct {
  PauliOp result;
  int phase;  // exponent of i, in [0, 4)
};
PauliProduct multiply(PauliOp a, PauliOp b);

/**
 * An n-qubit Pauli string stored in symplectic form: bit t of x_ / z_ says
 * whether qubit t carries an X / Z factor (Y sets both).
 *
 * Text form puts qubit 0 leftmost, so "XII" is X on qubit 0.
 */
class PauliString {
 public:
  PauliString() = default;
  /// All-identity string on n qubits.
  explicit PauliString(std::size_t n);
  explicit PauliString(const std::vector<PauliOp>& ops);

  std::size_t size() const noexcept { return n_; }
  PauliOp op(std::size_t t) const;
  void set(std::size_t t, PauliOp op);

  std::size_t weight() const;
  std::size_t count(PauliOp op) const;
  /// True when the string holds only I and Z.
  bool is_diagonal() const;

  const std::vector<std::uint64_t>& x_words() const noexcept { return x_; }
  const std::vector<std::uint64_t>& z_words() const noexcept { return z_; }

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString& a, const PauliString& b) {
    return a.to_string() <=> b.to_string();
  }

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

std::ostream& operator<<(std::ostream& os, const PauliString& p);

PauliString parse_pauli(std::string_view text);
std::string format_pauli(const PauliString& p);

/// Number of positions where both strings are non-identity and differ.
std::size_t anticommuting_index_count(const PauliString& p,
                                      const PauliString& q);

bool commutes(const PauliString& p, const PauliString& q);

struct WeightedPauliString {
  DyadicComplex coefficient;
  PauliString string;

  friend bool operator==(const WeightedPauliString&,
                         const WeightedPauliString&) = default;
};

/// Position-wise product with the global phase folded into the coefficient.
WeightedPauliString multiply(const WeightedPauliString& p,
                             const WeightedPauliString& q);

}  // namespace ppart
