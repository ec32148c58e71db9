#include "ppart/partition.hpp"

#include <algorithm>
#include <cstdint>

#include "ppart/errors.hpp"
#include "ppart/io.hpp"

namespace ppart {

const char* to_string(FamilyOrigin origin) {
  return origin == FamilyOrigin::Dominant ? "dominant" : "residual";
}

std::size_t CommutingFamily::add_term(const FermionicTerm& term, double weight) {
  provenance.push_back(term);
  term_weights.push_back(weight);
  return provenance.size() - 1;
}

void CommutingFamily::add_string(WeightedPauliString s, std::size_t term) {
  strings.push_back(std::move(s));
  term_of.push_back(term);
}

double HamiltonianCoefficients::coefficient(const FermionicTerm& term) const {
  if (term.is_one_body()) {
    auto it = one_body.find({term.creates[0], term.annihilates[0]});
    return it == one_body.end() ? 0.0 : it->second;
  }
  auto it = two_body.find({term.creates[0], term.creates[1],
                           term.annihilates[0], term.annihilates[1]});
  return it == two_body.end() ? 0.0 : it->second;
}

void certify(const CommutingFamily& family) {
  const auto& s = family.strings;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (!commutes(s[a].string, s[b].string))
        throw ContractViolation("family members do not commute: " +
                                s[a].string.to_string() + " / " +
                                s[b].string.to_string());
}

namespace {

bool odd_y(const PauliString& s) { return s.count(PauliOp::Y) % 2 == 1; }

}  // namespace

std::vector<CommutingFamily> commuting_families(const Schedule& schedule) {
  std::vector<CommutingFamily> out;
  out.reserve(schedule.rounds.size() * 2);
  for (const auto& round : schedule.rounds) {
    CommutingFamily even, odd;
    even.origin = odd.origin = FamilyOrigin::Dominant;
    for (const auto& s : round) {
      const auto term = FermionicTerm::two_body(schedule.n, s[0], s[1], s[2], s[3]);
      const auto te = even.add_term(term);
      const auto to = odd.add_term(term);
      for (auto& w : jw_excitation(term)) {
        if (odd_y(w.string))
          odd.add_string(std::move(w), to);
        else
          even.add_string(std::move(w), te);
      }
    }
    certify(even);
    certify(odd);
    out.push_back(std::move(even));
    out.push_back(std::move(odd));
  }
  return out;
}

std::vector<FermionicTerm> residual_terms(std::size_t n) {
  const int N = static_cast<int>(n);
  std::vector<FermionicTerm> out;
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) out.push_back(FermionicTerm::one_body(n, p, q));
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < p; ++q)
      for (int r = 0; r < N; ++r)
        for (int s = 0; s < r; ++s) {
          const bool shares = p == r || p == s || q == r || q == s;
          if (shares) out.push_back(FermionicTerm::two_body(n, p, q, r, s));
        }
  return out;
}

std::size_t residual_family_bound(std::size_t n) {
  return n == 0 ? 1 : 1 + 2 * n * (n - 1) * (n - 1);
}

std::vector<CommutingFamily> residual_families(std::size_t n,
                                               const HamiltonianCoefficients* coeffs) {
  if (n == 0) throw ArgumentError("n must be positive");
  CommutingFamily diagonal;
  diagonal.origin = FamilyOrigin::Residual;
  std::vector<CommutingFamily> split;
  for (const auto& term : residual_terms(n)) {
    double weight = 1.0;
    if (coeffs) {
      weight = coeffs->coefficient(term);
      if (weight == 0.0) continue;
    }
    auto strings = jw_encode(term);
    const bool is_diag = std::all_of(strings.begin(), strings.end(), [](const auto& w) {
      return w.string.is_diagonal();
    });
    if (is_diag) {
      const auto t = diagonal.add_term(term, weight);
      for (auto& w : strings) diagonal.add_string(std::move(w), t);
      continue;
    }
    CommutingFamily even, odd;
    even.origin = odd.origin = FamilyOrigin::Residual;
    const auto te = even.add_term(term, weight);
    const auto to = odd.add_term(term, weight);
    for (auto& w : strings) {
      if (odd_y(w.string))
        odd.add_string(std::move(w), to);
      else
        even.add_string(std::move(w), te);
    }
    for (auto* f : {&even, &odd}) {
      if (f->strings.empty()) continue;
      certify(*f);
      split.push_back(std::move(*f));
    }
  }
  std::vector<CommutingFamily> out;
  if (!diagonal.strings.empty()) {
    certify(diagonal);
    out.push_back(std::move(diagonal));
  }
  for (auto& f : split) out.push_back(std::move(f));
  return out;
}

void apply_coefficients(std::vector<CommutingFamily>& families,
                        const HamiltonianCoefficients& coeffs) {
  for (auto& family : families) {
    CommutingFamily kept;
    kept.origin = family.origin;
    std::vector<std::size_t> remap(family.provenance.size(), SIZE_MAX);
    for (std::size_t t = 0; t < family.provenance.size(); ++t) {
      const double h = coeffs.coefficient(family.provenance[t]);
      if (h != 0.0) remap[t] = kept.add_term(family.provenance[t], h);
    }
    for (std::size_t k = 0; k < family.strings.size(); ++k) {
      const auto t = remap[family.term_of[k]];
      if (t != SIZE_MAX) kept.add_string(family.strings[k], t);
    }
    family = std::move(kept);
  }
}

PartitionReport build_partition(const Schedule& schedule,
                                const PartitionOptions& options) {
  PartitionReport report;
  report.n = schedule.n;
  report.schedule_rounds = schedule.rounds.size();
  report.families = commuting_families(schedule);
  if (options.coefficients) {
    if (options.coefficients->n != schedule.n)
      throw ArgumentError("coefficients are for n=" +
                          std::to_string(options.coefficients->n) +
                          " but schedule has n=" + std::to_string(schedule.n));
    apply_coefficients(report.families, *options.coefficients);
    report.coefficients_applied = true;
  }
  report.dominant_family_count = report.families.size();
  for (const auto& f : report.families) report.dominant_string_count += f.size();

  if (options.include_residual) {
    for (auto& f : residual_families(schedule.n, options.coefficients)) {
      report.residual_string_count += f.size();
      report.families.push_back(std::move(f));
    }
    report.residual_family_count = report.families.size() - report.dominant_family_count;
  }
  for (const auto& f : report.families)
    report.max_family_size = std::max(report.max_family_size, f.size());
  const auto full_rounds = binomial(schedule.n - 1, 3);
  report.scaling_ratio = full_rounds == 0 ? 0.0
                                          : static_cast<double>(report.dominant_family_count) /
                                                static_cast<double>(full_rounds);
  return report;
}

ScheduleCache::ScheduleCache(std::optional<std::filesystem::path> directory,
                             FlowEngine engine)
    : directory_(std::move(directory)), engine_(engine) {}

std::filesystem::path ScheduleCache::file_for(std::size_t n) const {
  if (!directory_) throw ArgumentError("schedule cache has no directory");
  return *directory_ / ("schedule_n" + std::to_string(n) + ".json");
}

std::shared_ptr<const Schedule> ScheduleCache::get(std::size_t n) {
  std::lock_guard lock(mutex_);
  if (auto it = schedules_.find(n); it != schedules_.end()) return it->second;
  std::shared_ptr<const Schedule> schedule;
  if (directory_ && std::filesystem::exists(file_for(n))) {
    schedule = std::make_shared<const Schedule>(load_schedule(file_for(n), n));
  } else {
    schedule = std::make_shared<const Schedule>(pad_and_build(n, engine_));
    if (directory_) {
      std::filesystem::create_directories(*directory_);
      save_schedule(*schedule, file_for(n));
    }
  }
  schedules_.emplace(n, schedule);
  return schedule;
}

}  // namespace ppart
