#include "ppart/oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>

#include "ppart/errors.hpp"

namespace ppart::oracle {

using cplx = std::complex<double>;

DenseMatrix DenseMatrix::zero(std::size_t dim) {
  return {dim, std::vector<cplx>(dim * dim, cplx{})};
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  auto m = zero(dim);
  for (std::size_t k = 0; k < dim; ++k) m.at(k, k) = 1.0;
  return m;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  auto out = DenseMatrix::zero(a.dim * b.dim);
  for (std::size_t ar = 0; ar < a.dim; ++ar)
    for (std::size_t ac = 0; ac < a.dim; ++ac) {
      const cplx v = a.at(ar, ac);
      if (v == cplx{}) continue;
      for (std::size_t br = 0; br < b.dim; ++br)
        for (std::size_t bc = 0; bc < b.dim; ++bc)
          out.at(ar * b.dim + br, ac * b.dim + bc) = v * b.at(br, bc);
    }
  return out;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  auto out = DenseMatrix::zero(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k) {
      const cplx v = a.at(i, k);
      if (v == cplx{}) continue;
      for (std::size_t j = 0; j < a.dim; ++j) out.at(i, j) += v * b.at(k, j);
    }
  return out;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  auto out = a;
  for (std::size_t k = 0; k < out.data.size(); ++k) out.data[k] += b.data[k];
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  auto out = a;
  for (std::size_t k = 0; k < out.data.size(); ++k) out.data[k] -= b.data[k];
  return out;
}

DenseMatrix scaled(const DenseMatrix& a, cplx s) {
  auto out = a;
  for (auto& v : out.data) v *= s;
  return out;
}

DenseMatrix adjoint(const DenseMatrix& a) {
  auto out = DenseMatrix::zero(a.dim);
  for (std::size_t r = 0; r < a.dim; ++r)
    for (std::size_t c = 0; c < a.dim; ++c) out.at(c, r) = std::conj(a.at(r, c));
  return out;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.data.size(); ++k)
    worst = std::max(worst, std::abs(a.data[k] - b.data[k]));
  return worst;
}

bool is_zero(const DenseMatrix& a) {
  return std::all_of(a.data.begin(), a.data.end(), [](cplx v) { return v == cplx{}; });
}

namespace {

const cplx kI{0.0, 1.0};

DenseMatrix two_by_two(cplx a, cplx b, cplx c, cplx d) { return {2, {a, b, c, d}}; }

DenseMatrix single(char op) {
  switch (op) {
    case 'I':
      return two_by_two(1, 0, 0, 1);
    case 'X':
      return two_by_two(0, 1, 1, 0);
    case 'Y':
      return two_by_two(0, -kI, kI, 0);
    case 'Z':
      return two_by_two(1, 0, 0, -1);
  }
  throw ArgumentError(std::string("bad pauli character ") + op);
}

// |0> empty, |1> occupied: a|1> = |0>.
DenseMatrix lowering() { return two_by_two(0, 1, 0, 0); }
DenseMatrix raising() { return two_by_two(0, 0, 1, 0); }

DenseMatrix chain(const std::vector<DenseMatrix>& factors) {
  DenseMatrix out = DenseMatrix::identity(1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

bool anticommute_char(char a, char b) { return a != 'I' && b != 'I' && a != b; }

std::string set_text(const std::array<int, 4>& s) {
  return "{" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
         std::to_string(s[2]) + "," + std::to_string(s[3]) + "}";
}

}  // namespace

DenseMatrix pauli_matrix(const std::string& text) {
  std::vector<DenseMatrix> factors;
  for (char c : text) factors.push_back(single(c));
  return chain(factors);
}

DenseMatrix ladder_matrix(int mode, bool dagger, std::size_t n) {
  std::vector<DenseMatrix> factors;
  for (int t = 0; t < static_cast<int>(n); ++t) {
    if (t < mode)
      factors.push_back(single('Z'));
    else if (t == mode)
      factors.push_back(dagger ? raising() : lowering());
    else
      factors.push_back(single('I'));
  }
  return chain(factors);
}

DenseMatrix term_matrix(const FermionicTerm& term) {
  auto out = DenseMatrix::identity(std::size_t{1} << term.n);
  for (int c : term.creates) out = out * ladder_matrix(c, true, term.n);
  for (int a : term.annihilates) out = out * ladder_matrix(a, false, term.n);
  return out;
}

DenseMatrix weighted_sum_matrix(const std::vector<WeightedPauliString>& strings,
                                std::size_t n) {
  auto out = DenseMatrix::zero(std::size_t{1} << n);
  for (const auto& w : strings)
    out = out + scaled(pauli_matrix(w.string.to_string()), w.coefficient.to_complex());
  return out;
}

std::size_t count_anticommuting(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) throw DimensionError("length mismatch");
  std::size_t c = 0;
  for (std::size_t t = 0; t < a.size(); ++t) c += anticommute_char(a[t], b[t]);
  return c;
}

std::vector<std::string> pattern_strings(const FermionicTerm& term) {
  const int p = term.creates.at(0), q = term.creates.at(1);
  const int r = term.annihilates.at(0), s = term.annihilates.at(1);
  const std::array<int, 4> ends{p, q, r, s};
  std::string base(term.n, 'I');
  for (int t = q + 1; t < p; ++t) base[t] = 'Z';
  for (int t = s + 1; t < r; ++t) base[t] = 'Z';
  std::vector<std::string> out;
  for (int mask = 0; mask < 16; ++mask) {
    std::string str = base;
    for (int k = 0; k < 4; ++k) str[ends[k]] = (mask >> k) & 1 ? 'Y' : 'X';
    out.push_back(std::move(str));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SplitReport verify_disjoint_splits() {
  constexpr std::size_t n = 8;
  SplitReport report;
  report.min_count = SIZE_MAX;
  report.all_even = true;
  bool all_ok = true;
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (std::popcount(mask) != 4) continue;
    std::vector<int> a, b;
    for (int t = 7; t >= 0; --t) ((mask >> t) & 1 ? a : b).push_back(t);
    const auto ta = FermionicTerm::two_body(n, a[0], a[1], a[2], a[3]);
    const auto tb = FermionicTerm::two_body(n, b[0], b[1], b[2], b[3]);
    const auto sa = pattern_strings(ta);
    const auto sb = pattern_strings(tb);

    SplitCase c;
    c.first = {a[0], a[1], a[2], a[3]};
    c.second = {b[0], b[1], b[2], b[3]};
    c.anticommuting = count_anticommuting(sa.front(), sb.front());
    c.all_commute = true;

    auto encoded_matches = [](const FermionicTerm& t, const std::vector<std::string>& pat) {
      std::vector<std::string> enc;
      for (const auto& w : jw_excitation(t)) {
        if (w.coefficient.norm() != Dyadic(1, 8)) return false;  // |c| = 1/16
        enc.push_back(w.string.to_string());
      }
      std::sort(enc.begin(), enc.end());
      return enc == pat;
    };
    c.encoding_matches_pattern = encoded_matches(ta, sa) && encoded_matches(tb, sb);

    for (const auto& x : sa)
      for (const auto& y : sb) {
        const auto k = count_anticommuting(x, y);
        ++c.pairs_checked;
        if (k % 2 != 0) {
          c.all_commute = false;
          report.all_even = false;
        }
        // the library predicate has to agree with the recount
        if (commutes(parse_pauli(x), parse_pauli(y)) != (k % 2 == 0)) c.all_commute = false;
        if (k != c.anticommuting) c.all_commute = false;
      }
    report.min_count = std::min(report.min_count, c.anticommuting);
    report.max_count = std::max(report.max_count, c.anticommuting);
    all_ok = all_ok && c.all_commute && c.encoding_matches_pattern && c.pairs_checked == 256;
    report.cases.push_back(c);
  }
  report.passed = all_ok && report.all_even && report.cases.size() == 70;
  return report;
}

JwMatrixReport verify_jw_against_matrices(std::size_t n) {
  JwMatrixReport report;
  report.n = n;
  report.shapes_ok = true;
  report.hermitian_ok = true;
  const int N = static_cast<int>(n);
  std::vector<FermionicTerm> terms;
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) terms.push_back(FermionicTerm::one_body(n, p, q));
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < p; ++q)
      for (int r = 0; r < N; ++r)
        for (int s = 0; s < r; ++s) terms.push_back(FermionicTerm::two_body(n, p, q, r, s));

  auto fail = [&](const std::string& msg) {
    if (report.first_failure.empty()) report.first_failure = msg;
  };

  for (const auto& term : terms) {
    const auto strings = jw_encode(term);
    const auto encoded = weighted_sum_matrix(strings, n);
    const double diff = max_abs_diff(encoded, term_matrix(term));
    report.max_abs_diff = std::max(report.max_abs_diff, diff);
    if (diff != 0.0) fail("matrix mismatch for " + term.to_string());
    ++report.terms_checked;

    if (term.is_excitation()) {
      ++report.excitations_checked;
      std::vector<std::string> texts;
      bool ok = strings.size() == 16;
      for (const auto& w : strings) {
        ok = ok && w.coefficient.norm() == Dyadic(1, 8);
        texts.push_back(w.string.to_string());
      }
      std::sort(texts.begin(), texts.end());
      ok = ok && texts == pattern_strings(term);
      if (!ok) {
        report.shapes_ok = false;
        fail("excitation shape wrong for " + term.to_string());
      }
    }

    FermionicTerm conj = term;
    if (term.is_one_body()) {
      conj.creates = term.annihilates;
      conj.annihilates = term.creates;
    } else {
      // (a+p a+q a_r a_s)^dagger = a+r a+s a_p a_q
      conj.creates = term.annihilates;
      conj.annihilates = term.creates;
    }
    const auto herm = encoded + weighted_sum_matrix(jw_encode(conj), n);
    if (!is_zero(herm - adjoint(herm))) {
      report.hermitian_ok = false;
      fail("term plus adjoint not hermitian for " + term.to_string());
    }
  }
  report.passed = report.first_failure.empty();
  return report;
}

ScheduleReport validate_schedule(const Schedule& schedule) {
  ScheduleReport report;
  const std::size_t n = schedule.n;
  report.rounds = schedule.rounds.size();
  if (n < 4) {
    report.counterexample = "n must be at least 4";
    return report;
  }
  report.expected_subsets = binomial(n, 4);
  auto fail = [&](std::string msg) {
    if (report.counterexample.empty()) report.counterexample = std::move(msg);
  };

  std::map<std::array<int, 4>, std::size_t> first_round;
  for (std::size_t r = 0; r < schedule.rounds.size(); ++r) {
    const auto& round = schedule.rounds[r];
    if (round.empty()) fail("round " + std::to_string(r) + " is empty");
    std::vector<int> used(n, 0);
    for (const auto& s : round) {
      ++report.subsets;
      std::array<int, 4> key = s;
      std::sort(key.begin(), key.end(), std::greater<>());
      bool in_range = true;
      for (int e : key) in_range = in_range && e >= 0 && e < static_cast<int>(n);
      if (!in_range) {
        fail("subset " + set_text(s) + " in round " + std::to_string(r) +
             " has an index outside [0, n)");
        continue;
      }
      if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
        fail("subset " + set_text(s) + " repeats an index");
        continue;
      }
      for (int e : key)
        if (used[e]++)
          fail("round " + std::to_string(r) + " uses index " + std::to_string(e) +
               " twice (subset " + set_text(key) + ")");
      auto [it, inserted] = first_round.emplace(key, r);
      if (!inserted)
        fail("subset " + set_text(key) + " appears in rounds " +
             std::to_string(it->second) + " and " + std::to_string(r));
    }
    if (n % 4 == 0 && round.size() != n / 4)
      fail("round " + std::to_string(r) + " has " + std::to_string(round.size()) +
           " subsets, expected " + std::to_string(n / 4));
  }

  // Every 4-subset of [0, n) must be present.
  for (int a = 3; a < static_cast<int>(n) && report.counterexample.empty(); ++a)
    for (int b = 2; b < a; ++b)
      for (int c = 1; c < b; ++c)
        for (int d = 0; d < c; ++d)
          if (!first_round.contains({a, b, c, d}))
            fail("subset " + set_text({a, b, c, d}) + " is missing");

  if (n % 4 == 0) {
    if (report.rounds != binomial(n - 1, 3))
      fail(std::to_string(report.rounds) + " rounds, expected " +
           std::to_string(binomial(n - 1, 3)));
  } else {
    const std::size_t padded = (n + 3) / 4 * 4;
    if (report.rounds > binomial(padded - 1, 3))
      fail(std::to_string(report.rounds) + " rounds exceeds " +
           std::to_string(binomial(padded - 1, 3)));
  }
  if (report.subsets != report.expected_subsets)
    fail(std::to_string(report.subsets) + " subsets, expected " +
         std::to_string(report.expected_subsets));
  report.passed = report.counterexample.empty();
  return report;
}

FamilyReport validate_families(const std::vector<CommutingFamily>& families) {
  FamilyReport report;
  report.families = families.size();
  for (std::size_t f = 0; f < families.size(); ++f) {
    std::vector<std::string> texts;
    for (const auto& w : families[f].strings) texts.push_back(w.string.to_string());
    report.strings += texts.size();
    for (std::size_t a = 0; a < texts.size(); ++a)
      for (std::size_t b = a + 1; b < texts.size(); ++b) {
        ++report.pairs_checked;
        if (count_anticommuting(texts[a], texts[b]) % 2 != 0 &&
            report.counterexample.empty())
          report.counterexample = "family " + std::to_string(f) + ": " + texts[a] +
                                  " and " + texts[b] + " anticommute";
      }
  }
  report.passed = report.counterexample.empty();
  return report;
}

std::vector<PauliString> anticommuting_chain_fixture(std::size_t n) {
  std::vector<PauliString> out;
  for (std::size_t k = 0; k < n; ++k) {
    for (char head : {'X', 'Y'}) {
      std::string s(k, 'Z');
      s += head;
      s += std::string(n - k - 1, 'I');
      out.push_back(parse_pauli(s));
    }
  }
  return out;
}

SlidingReport verify_sliding_invariance(std::size_t trials, std::size_t max_n,
                                        std::uint64_t seed) {
  SlidingReport report;
  if (max_n < 9) throw ArgumentError("sliding check needs max_n >= 9");
  std::mt19937_64 rng(seed);
  auto parities = [](const FermionicTerm& a, const FermionicTerm& b) {
    std::vector<int> out;
    for (const auto& x : pattern_strings(a))
      for (const auto& y : pattern_strings(b)) out.push_back(count_anticommuting(x, y) % 2);
    return out;
  };

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(9, max_n)(rng);
    std::vector<int> modes(n);
    for (std::size_t k = 0; k < n; ++k) modes[k] = static_cast<int>(k);
    std::shuffle(modes.begin(), modes.end(), rng);
    std::vector<int> a(modes.begin(), modes.begin() + 4);
    std::vector<int> b(modes.begin() + 4, modes.begin() + 8);
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    const auto tb = FermionicTerm::two_body(n, b[0], b[1], b[2], b[3]);
    const auto base = parities(FermionicTerm::two_body(n, a[0], a[1], a[2], a[3]), tb);
    ++report.trials;

    const int which = std::uniform_int_distribution<int>(0, 3)(rng);
    const int hi = which == 0 ? static_cast<int>(n) : a[which - 1];
    const int lo = which == 3 ? -1 : a[which + 1];
    std::vector<int> candidates;
    for (int t = lo + 1; t < hi; ++t) {
      if (t == a[which] || std::find(b.begin(), b.end(), t) != b.end()) continue;
      const int lo_t = std::min(t, a[which]), hi_t = std::max(t, a[which]);
      const bool crosses = std::any_of(b.begin(), b.end(),
                                       [&](int e) { return e > lo_t && e < hi_t; });
      if (!crosses) candidates.push_back(t);
    }
    for (int t : candidates) {
      auto moved = a;
      moved[which] = t;
      const auto ta = FermionicTerm::two_body(n, moved[0], moved[1], moved[2], moved[3]);
      ++report.slides;
      if (parities(ta, tb) != base && report.counterexample.empty())
        report.counterexample = "sliding " + std::to_string(a[which]) + " -> " +
                                std::to_string(t) + " changed parity";
    }
  }
  report.passed = report.counterexample.empty();
  return report;
}

nlohmann::json to_json(const SplitReport& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases)
    cases.push_back({{"pqrs", c.first},
                     {"ijkl", c.second},
                     {"anticommuting_indices", c.anticommuting},
                     {"pairs_checked", c.pairs_checked},
                     {"all_commute", c.all_commute},
                     {"encoding_matches_pattern", c.encoding_matches_pattern}});
  return {{"check", "disjoint_excitations_commute"},
          {"passed", r.passed},
          {"cases", r.cases.size()},
          {"all_even", r.all_even},
          {"min_anticommuting", r.min_count},
          {"max_anticommuting", r.max_count},
          {"per_case", std::move(cases)}};
}

nlohmann::json to_json(const JwMatrixReport& r) {
  return {{"check", "jordan_wigner_dense_matrices"},
          {"passed", r.passed},
          {"n", r.n},
          {"terms_checked", r.terms_checked},
          {"excitations_checked", r.excitations_checked},
          {"max_abs_diff", r.max_abs_diff},
          {"shapes_ok", r.shapes_ok},
          {"hermitian_ok", r.hermitian_ok},
          {"first_failure", r.first_failure}};
}

nlohmann::json to_json(const ScheduleReport& r) {
  return {{"check", "schedule"},
          {"passed", r.passed},
          {"rounds", r.rounds},
          {"subsets", r.subsets},
          {"expected_subsets", r.expected_subsets},
          {"counterexample", r.counterexample}};
}

nlohmann::json to_json(const FamilyReport& r) {
  return {{"check", "families"},
          {"passed", r.passed},
          {"families", r.families},
          {"strings", r.strings},
          {"pairs_checked", r.pairs_checked},
          {"counterexample", r.counterexample}};
}

nlohmann::json to_json(const SlidingReport& r) {
  return {{"check", "endpoint_sliding"},
          {"passed", r.passed},
          {"trials", r.trials},
          {"slides", r.slides},
          {"counterexample", r.counterexample}};
}

}  // namespace ppart::oracle
