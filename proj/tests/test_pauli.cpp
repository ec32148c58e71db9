#include <doctest.h>

#include <random>

#include "ppart/errors.hpp"
#include "ppart/oracles.hpp"
#include "ppart/pauli.hpp"

using namespace ppart;

namespace {

PauliString random_string(std::mt19937_64& rng, std::size_t n) {
  static constexpr char kOps[] = "IXYZ";
  std::string s;
  for (std::size_t t = 0; t < n; ++t) s += kOps[rng() % 4];
  return parse_pauli(s);
}

DyadicComplex random_phase_coefficient(std::mt19937_64& rng) {
  const DyadicComplex base{Dyadic(1, static_cast<int>(rng() % 3)), Dyadic(0)};
  return base.times_i_pow(static_cast<int>(rng() % 4));
}

bool dense_commute(const PauliString& a, const PauliString& b) {
  const auto A = oracle::pauli_matrix(a.to_string());
  const auto B = oracle::pauli_matrix(b.to_string());
  return oracle::is_zero(A * B - B * A);
}

}  // namespace

TEST_CASE("anticommuting_index_count") {
  CHECK(anticommuting_index_count(parse_pauli("XII"), parse_pauli("YII")) == 1);
  CHECK(anticommuting_index_count(parse_pauli("XXII"), parse_pauli("YYII")) == 2);
  CHECK(anticommuting_index_count(parse_pauli("ZZXI"), parse_pauli("ZZXI")) == 0);
  CHECK(anticommuting_index_count(parse_pauli("XYZI"), parse_pauli("IIII")) == 0);
  CHECK_THROWS_AS(anticommuting_index_count(parse_pauli("XI"), parse_pauli("XII")),
                  DimensionError);
}

TEST_CASE("commutes on the counterexample pairs and simple cases") {
  CHECK_FALSE(commutes(parse_pauli("ZXI"), parse_pauli("ZYI")));
  CHECK_FALSE(commutes(parse_pauli("XII"), parse_pauli("YII")));
  CHECK(commutes(parse_pauli("XYZX"), parse_pauli("IIII")));
  // Two anti-commuting positions; confirmed against the dense commutator.
  CHECK(commutes(parse_pauli("XXII"), parse_pauli("YYII")));
  CHECK(dense_commute(parse_pauli("XXII"), parse_pauli("YYII")));
  CHECK_THROWS_AS(commutes(parse_pauli("X"), parse_pauli("XX")), DimensionError);
}

TEST_CASE("commutation properties and dense-matrix agreement") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto p = random_string(rng, n);
    const auto q = random_string(rng, n);
    CHECK(commutes(p, q) == commutes(q, p));
    CHECK(commutes(p, p));
    CHECK(commutes(p, q) == dense_commute(p, q));
  }
}

TEST_CASE("commutation across the 64-bit word boundary") {
  std::string a(130, 'I'), b(130, 'I');
  a[63] = 'X';
  b[63] = 'Z';
  a[64] = 'Y';
  b[64] = 'X';
  a[129] = 'Z';
  b[129] = 'Y';
  CHECK(anticommuting_index_count(parse_pauli(a), parse_pauli(b)) == 3);
  CHECK_FALSE(commutes(parse_pauli(a), parse_pauli(b)));
}

TEST_CASE("single-qubit multiplication") {
  const WeightedPauliString x{DyadicComplex::one(), parse_pauli("X")};
  const WeightedPauliString y{DyadicComplex::one(), parse_pauli("Y")};
  const WeightedPauliString z{DyadicComplex::one(), parse_pauli("Z")};

  const auto xy = multiply(x, y);
  CHECK(xy.string == parse_pauli("Z"));
  CHECK(xy.coefficient == DyadicComplex::i());

  const auto zz = multiply(z, z);
  CHECK(zz.string == parse_pauli("I"));
  CHECK(zz.coefficient == DyadicComplex::one());

  const auto yx = multiply(y, x);
  CHECK(yx.coefficient == DyadicComplex::i().times_i_pow(2));
  CHECK_THROWS_AS(multiply(x, WeightedPauliString{DyadicComplex::one(), parse_pauli("XX")}),
                  DimensionError);
}

TEST_CASE("multiply matches dense matrix products") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const WeightedPauliString p{random_phase_coefficient(rng), random_string(rng, n)};
    const WeightedPauliString q{random_phase_coefficient(rng), random_string(rng, n)};
    const auto pq = multiply(p, q);
    const auto expected = oracle::weighted_sum_matrix({p}, n) * oracle::weighted_sum_matrix({q}, n);
    CHECK(oracle::max_abs_diff(oracle::weighted_sum_matrix({pq}, n), expected) == 0.0);
  }
}

TEST_CASE("Pauli involution") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const WeightedPauliString p{{Dyadic(3, 2), Dyadic(0)}, random_string(rng, n)};
    const auto pp = multiply(p, p);
    CHECK(pp.string == PauliString(n));
    CHECK(pp.coefficient == p.coefficient * p.coefficient);
  }
}

TEST_CASE("parse and format") {
  const auto p = parse_pauli("ZZX");
  REQUIRE(p.size() == 3);
  CHECK(p.op(0) == PauliOp::Z);
  CHECK(p.op(1) == PauliOp::Z);
  CHECK(p.op(2) == PauliOp::X);
  CHECK(format_pauli(parse_pauli("XIYZ")) == "XIYZ");
  CHECK_THROWS_AS(parse_pauli(""), ParseError);
  CHECK_THROWS_AS(parse_pauli("XQ"), ParseError);
  CHECK_THROWS_AS(parse_pauli("xz"), ParseError);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_string(rng, 1 + rng() % 90);
    CHECK(parse_pauli(format_pauli(s)) == s);
  }
}

TEST_CASE("dyadic arithmetic") {
  CHECK(Dyadic(2, 2) == Dyadic(1, 1));
  CHECK(Dyadic(1, 1) + Dyadic(1, 1) == Dyadic(1));
  CHECK(Dyadic(1, 2) * Dyadic(1, 2) == Dyadic(1, 4));
  CHECK((Dyadic(1, 4) - Dyadic(1, 4)).is_zero());
  CHECK(Dyadic(-3, 4).to_double() == -0.1875);
  CHECK(DyadicComplex::i().times_i_pow(3) == DyadicComplex::one());
}
