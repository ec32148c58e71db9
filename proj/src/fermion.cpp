#include "ppart/fermion.hpp"

#include <algorithm>
#include <map>

#include "ppart/errors.hpp"

namespace ppart {

namespace {

void check_mode(int mode, std::size_t n) {
  if (mode < 0 || static_cast<std::size_t>(mode) >= n)
    throw ArgumentError("mode index " + std::to_string(mode) +
                        " out of range for n=" + std::to_string(n));
}

void check_descending(const std::vector<int>& idx, const char* what) {
  for (std::size_t k = 1; k < idx.size(); ++k)
    if (idx[k - 1] <= idx[k])
      throw UnsupportedTerm(std::string(what) +
                            " indices must be strictly descending");
}

void check_term(const FermionicTerm& term) {
  const auto nc = term.creates.size();
  const auto na = term.annihilates.size();
  if (!((nc == 1 && na == 1) || (nc == 2 && na == 2)))
    throw UnsupportedTerm("only one-body and two-body terms are supported");
  for (int m : term.creates) check_mode(m, term.n);
  for (int m : term.annihilates) check_mode(m, term.n);
  check_descending(term.creates, "creation");
  check_descending(term.annihilates, "annihilation");
}

using Sum = std::vector<WeightedPauliString>;

Sum product(const Sum& lhs, const Sum& rhs) {
  std::map<std::string, WeightedPauliString> acc;
  for (const auto& a : lhs) {
    for (const auto& b : rhs) {
      auto c = multiply(a, b);
      auto key = c.string.to_string();
      auto [it, inserted] = acc.try_emplace(std::move(key), c);
      if (!inserted) it->second.coefficient = it->second.coefficient + c.coefficient;
    }
  }
  Sum out;
  out.reserve(acc.size());
  for (auto& [key, w] : acc)
    if (!w.coefficient.is_zero()) out.push_back(std::move(w));
  return out;
}

}  // namespace

FermionicTerm FermionicTerm::one_body(std::size_t n, int p, int q) {
  FermionicTerm t{n, {p}, {q}};
  check_term(t);
  return t;
}

FermionicTerm FermionicTerm::two_body(std::size_t n, int p, int q, int r,
                                      int s) {
  FermionicTerm t{n, {p, q}, {r, s}};
  check_term(t);
  return t;
}

bool FermionicTerm::is_excitation() const {
  return creates.size() == 2 && annihilates.size() == 2 &&
         creates[0] > creates[1] && creates[1] > annihilates[0] &&
         annihilates[0] > annihilates[1];
}

std::string FermionicTerm::to_string() const {
  std::string out;
  for (int c : creates) {
    if (!out.empty()) out += ' ';
    out += "a+" + std::to_string(c);
  }
  for (int a : annihilates) {
    if (!out.empty()) out += ' ';
    out += "a-" + std::to_string(a);
  }
  return out;
}

bool JwPattern::in_z_segment(int t) const {
  for (const auto& [lo, hi] : z_segments)
    if (t > lo && t < hi) return true;
  return false;
}

bool JwPattern::is_endpoint(int t) const {
  return std::find(endpoints.begin(), endpoints.end(), t) != endpoints.end();
}

std::pair<WeightedPauliString, WeightedPauliString> jw_ladder(int mode,
                                                              bool dagger,
                                                              std::size_t n) {
  check_mode(mode, n);
  PauliString xs(n);
  for (int t = 0; t < mode; ++t) xs.set(t, PauliOp::Z);
  PauliString ys = xs;
  xs.set(mode, PauliOp::X);
  ys.set(mode, PauliOp::Y);
  const DyadicComplex half{Dyadic::half(), Dyadic(0)};
  const DyadicComplex y_coeff{Dyadic(0), dagger ? -Dyadic::half() : Dyadic::half()};
  return {{half, std::move(xs)}, {y_coeff, std::move(ys)}};
}

std::vector<WeightedPauliString> jw_encode(const FermionicTerm& term) {
  check_term(term);
  Sum acc{{DyadicComplex::one(), PauliString(term.n)}};
  auto apply = [&](int mode, bool dagger) {
    auto [a, b] = jw_ladder(mode, dagger, term.n);
    acc = product(acc, Sum{a, b});
  };
  for (int c : term.creates) apply(c, true);
  for (int a : term.annihilates) apply(a, false);
  return acc;
}

std::vector<WeightedPauliString> jw_excitation(const FermionicTerm& term) {
  check_term(term);
  if (!term.is_excitation())
    throw UnsupportedTerm("jw_excitation needs four distinct indices p>q>r>s, got " +
                          term.to_string());
  auto out = jw_encode(term);
  if (out.size() != 16)
    throw ContractViolation("excitation expanded to " +
                            std::to_string(out.size()) + " strings");
  return out;
}

JwPattern pattern_of(const FermionicTerm& term) {
  check_term(term);
  if (!term.is_excitation())
    throw UnsupportedTerm("pattern_of needs four distinct indices p>q>r>s");
  const int p = term.creates[0], q = term.creates[1];
  const int r = term.annihilates[0], s = term.annihilates[1];
  JwPattern pat;
  pat.n = term.n;
  pat.endpoints = {s, r, q, p};
  pat.z_segments = {std::pair{q, p}, std::pair{s, r}};
  return pat;
}

bool matches_pattern(const PauliString& str, const JwPattern& pattern) {
  if (str.size() != pattern.n) return false;
  for (std::size_t t = 0; t < str.size(); ++t) {
    const int ti = static_cast<int>(t);
    const PauliOp op = str.op(t);
    if (pattern.is_endpoint(ti)) {
      if (op != PauliOp::X && op != PauliOp::Y) return false;
    } else if (pattern.in_z_segment(ti)) {
      if (op != PauliOp::Z) return false;
    } else if (op != PauliOp::I) {
      return false;
    }
  }
  return true;
}

}  // namespace ppart
