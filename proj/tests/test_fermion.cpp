#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ppart/errors.hpp"
#include "ppart/fermion.hpp"
#include "ppart/oracles.hpp"

using namespace ppart;

namespace {

const DyadicComplex kHalf{Dyadic::half(), Dyadic(0)};

std::set<std::string> texts(const std::vector<WeightedPauliString>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(w.string.to_string());
  return out;
}

}  // namespace

TEST_CASE("jw_ladder") {
  SUBCASE("annihilation on mode 0 has no Z chain") {
    auto [x, y] = jw_ladder(0, false, 1);
    CHECK(x.string.to_string() == "X");
    CHECK(x.coefficient == kHalf);
    CHECK(y.string.to_string() == "Y");
    CHECK(y.coefficient == DyadicComplex{Dyadic(0), Dyadic::half()});
  }
  SUBCASE("creation on mode 2 of 3") {
    auto [x, y] = jw_ladder(2, true, 3);
    CHECK(x.string.to_string() == "ZZX");
    CHECK(x.coefficient == kHalf);
    CHECK(y.string.to_string() == "ZZY");
    CHECK(y.coefficient == DyadicComplex{Dyadic(0), -Dyadic::half()});
  }
  SUBCASE("dense ladder matrices at n=3") {
    for (int mode = 0; mode < 3; ++mode)
      for (bool dagger : {false, true}) {
        auto [x, y] = jw_ladder(mode, dagger, 3);
        const auto sum = oracle::weighted_sum_matrix({x, y}, 3);
        CHECK(oracle::max_abs_diff(sum, oracle::ladder_matrix(mode, dagger, 3)) == 0.0);
      }
  }
  CHECK_THROWS_AS(jw_ladder(3, false, 3), ArgumentError);
  CHECK_THROWS_AS(jw_ladder(-1, true, 3), ArgumentError);
}

TEST_CASE("jw_excitation on adjacent endpoints") {
  const auto term = FermionicTerm::two_body(4, 3, 2, 1, 0);
  const auto strings = jw_excitation(term);
  REQUIRE(strings.size() == 16);
  for (const auto& w : strings) {
    CHECK(w.coefficient.norm() == Dyadic(1, 8));
    CHECK(w.string.count(PauliOp::X) + w.string.count(PauliOp::Y) == 4);
  }
  CHECK(oracle::max_abs_diff(oracle::weighted_sum_matrix(strings, 4),
                             oracle::term_matrix(term)) == 0.0);
}

TEST_CASE("jw_excitation Z segments sit strictly between endpoints") {
  const auto term = FermionicTerm::two_body(6, 5, 3, 2, 0);
  const auto strings = jw_excitation(term);
  REQUIRE(strings.size() == 16);
  for (const auto& w : strings) {
    const auto s = w.string.to_string();
    CHECK(s[1] == 'Z');
    CHECK(s[4] == 'Z');
    for (int t : {0, 2, 3, 5}) CHECK((s[t] == 'X' || s[t] == 'Y'));
  }
  CHECK(oracle::max_abs_diff(oracle::weighted_sum_matrix(strings, 6),
                             oracle::term_matrix(term)) == 0.0);
}

TEST_CASE("pattern_of") {
  const auto pat = pattern_of(FermionicTerm::two_body(8, 7, 5, 3, 0));
  CHECK(pat.endpoints == std::array<int, 4>{0, 3, 5, 7});
  CHECK(pat.z_segments[0] == std::pair{5, 7});
  CHECK(pat.z_segments[1] == std::pair{0, 3});
  CHECK(pat.in_z_segment(6));
  CHECK(pat.in_z_segment(1));
  CHECK(pat.in_z_segment(2));
  CHECK_FALSE(pat.in_z_segment(4));

  const auto adjacent = pattern_of(FermionicTerm::two_body(4, 3, 2, 1, 0));
  for (int t = 0; t < 4; ++t) CHECK_FALSE(adjacent.in_z_segment(t));
}

TEST_CASE("exactly the encoded strings match the pattern (all 4^8 strings)") {
  const auto term = FermionicTerm::two_body(8, 7, 5, 3, 0);
  const auto pat = pattern_of(term);
  std::set<std::string> matched;
  std::string s(8, 'I');
  static constexpr char kOps[] = "IXYZ";
  for (int code = 0; code < (1 << 16); ++code) {
    for (int t = 0; t < 8; ++t) s[t] = kOps[(code >> (2 * t)) & 3];
    if (matches_pattern(parse_pauli(s), pat)) matched.insert(s);
  }
  CHECK(matched.size() == 16);
  CHECK(matched == texts(jw_excitation(term)));
}

TEST_CASE("one-body terms") {
  const auto hop = FermionicTerm::one_body(2, 1, 0);
  const auto strings = jw_encode(hop);
  CHECK(strings.size() == 4);
  CHECK(oracle::max_abs_diff(oracle::weighted_sum_matrix(strings, 2),
                             oracle::term_matrix(hop)) == 0.0);

  // a+p a_p = (I - Z_p) / 2
  const auto number = jw_encode(FermionicTerm::one_body(3, 1, 1));
  CHECK(number.size() == 2);
  for (const auto& w : number) CHECK(w.string.is_diagonal());
}

TEST_CASE("unsupported terms are rejected") {
  CHECK_THROWS_AS(FermionicTerm::two_body(4, 2, 3, 1, 0), UnsupportedTerm);
  CHECK_THROWS_AS(FermionicTerm::two_body(4, 3, 3, 1, 0), UnsupportedTerm);
  CHECK_THROWS_AS(FermionicTerm::two_body(4, 4, 3, 1, 0), ArgumentError);
  CHECK_THROWS_AS(jw_encode(FermionicTerm{4, {3, 2, 1}, {0}}), UnsupportedTerm);
  CHECK_THROWS_AS(jw_encode(FermionicTerm{4, {3, 2}, {1}}), UnsupportedTerm);

  // Repeated index across the pairs: valid term, but not an excitation.
  const auto shared = FermionicTerm::two_body(5, 4, 2, 2, 0);
  CHECK_FALSE(shared.is_excitation());
  CHECK_THROWS_AS(jw_excitation(shared), UnsupportedTerm);
  CHECK_THROWS_AS(pattern_of(shared), UnsupportedTerm);
  // Four distinct indices in an interleaved order.
  CHECK_THROWS_AS(jw_excitation(FermionicTerm::two_body(5, 4, 1, 3, 0)), UnsupportedTerm);
}

TEST_CASE("every excitation yields 16 strings of magnitude 1/16") {
  for (std::size_t n : {4u, 6u, 9u}) {
    const int N = static_cast<int>(n);
    for (int p = 3; p < N; ++p)
      for (int q = 2; q < p; ++q)
        for (int r = 1; r < q; ++r)
          for (int s = 0; s < r; ++s) {
            const auto term = FermionicTerm::two_body(n, p, q, r, s);
            const auto strings = jw_excitation(term);
            REQUIRE(strings.size() == 16);
            const auto pat = pattern_of(term);
            for (const auto& w : strings) {
              CHECK(w.coefficient.norm() == Dyadic(1, 8));
              CHECK(matches_pattern(w.string, pat));
            }
          }
  }
}

TEST_CASE("disjoint excitations commute string by string") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 8 + rng() % 5;
    std::vector<int> modes(n);
    for (std::size_t k = 0; k < n; ++k) modes[k] = static_cast<int>(k);
    std::shuffle(modes.begin(), modes.end(), rng);
    std::vector<int> a(modes.begin(), modes.begin() + 4), b(modes.begin() + 4, modes.begin() + 8);
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    const auto sa = jw_excitation(FermionicTerm::two_body(n, a[0], a[1], a[2], a[3]));
    const auto sb = jw_excitation(FermionicTerm::two_body(n, b[0], b[1], b[2], b[3]));
    for (const auto& x : sa)
      for (const auto& y : sb) REQUIRE(commutes(x.string, y.string));
  }
}

TEST_CASE("two interleaved rectangles with four anti-commuting positions") {
  // term (7,5,3,1) against (6,4,2,0): 6 and 2 fall in the first term's Z runs,
  // 5 and 1 in the second's.
  const auto a = jw_excitation(FermionicTerm::two_body(8, 7, 5, 3, 1));
  const auto b = jw_excitation(FermionicTerm::two_body(8, 6, 4, 2, 0));
  for (const auto& x : a)
    for (const auto& y : b) {
      CHECK(anticommuting_index_count(x.string, y.string) == 4);
      CHECK(oracle::count_anticommuting(x.string.to_string(), y.string.to_string()) == 4);
    }
}
