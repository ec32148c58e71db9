#include "ppart/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ppart/errors.hpp"
#include "ppart/oracles.hpp"

namespace ppart {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string schedule_to_json(const Schedule& schedule) {
  std::string out = "{\"n\": " + std::to_string(schedule.n) + ", \"rounds\": [";
  for (std::size_t r = 0; r < schedule.rounds.size(); ++r) {
    if (r) out += ", ";
    out += '[';
    const auto& round = schedule.rounds[r];
    for (std::size_t k = 0; k < round.size(); ++k) {
      if (k) out += ',';
      const auto& s = round[k];
      out += '[' + std::to_string(s[0]) + ',' + std::to_string(s[1]) + ',' +
             std::to_string(s[2]) + ',' + std::to_string(s[3]) + ']';
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

Schedule parse_schedule(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw LoadError(std::string("schedule is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("rounds"))
    throw LoadError("schedule needs \"n\" and \"rounds\"");
  if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() == 0)
    throw LoadError("schedule \"n\" must be a positive integer");
  if (!doc["rounds"].is_array()) throw LoadError("\"rounds\" must be an array");

  Schedule schedule;
  schedule.n = doc["n"].get<std::size_t>();
  for (const auto& round : doc["rounds"]) {
    if (!round.is_array()) throw LoadError("each round must be an array");
    Round out;
    for (const auto& subset : round) {
      if (!subset.is_array() || subset.size() != 4)
        throw LoadError("each subset must be an array of 4 integers");
      Subset4 s{};
      for (std::size_t k = 0; k < 4; ++k) {
        if (!subset[k].is_number_integer())
          throw LoadError("subset entries must be integers");
        s[k] = subset[k].get<int>();
      }
      out.push_back(s);
    }
    schedule.rounds.push_back(std::move(out));
  }
  return schedule;
}

std::string schedule_to_text(const Schedule& schedule) {
  std::string out;
  for (const auto& round : schedule.rounds) {
    for (std::size_t k = 0; k < round.size(); ++k) {
      if (k) out += "    ";
      const auto& s = round[k];
      out += "a+" + std::to_string(s[0]) + " a+" + std::to_string(s[1]) + " a-" +
             std::to_string(s[2]) + " a-" + std::to_string(s[3]);
    }
    out += '\n';
  }
  return out;
}

void save_schedule(const Schedule& schedule, const std::filesystem::path& path) {
  write_file(path, schedule_to_json(schedule));
}

Schedule load_schedule(const std::filesystem::path& path,
                       std::optional<std::size_t> expected_n) {
  Schedule schedule = parse_schedule(read_file(path));
  if (expected_n && schedule.n != *expected_n)
    throw LoadError("schedule file is for n=" + std::to_string(schedule.n) +
                    ", expected n=" + std::to_string(*expected_n));
  const auto report = oracle::validate_schedule(schedule);
  if (!report.passed)
    throw LoadError("schedule failed validation: " + report.counterexample);
  canonicalize(schedule);
  return schedule;
}

namespace {

std::vector<int> read_indices(const json& entry, const char* key, std::size_t count,
                              std::size_t n) {
  if (!entry.is_object() || !entry.contains(key) || !entry[key].is_array() ||
      entry[key].size() != count)
    throw LoadError(std::string("coefficient entry needs \"") + key + "\" with " +
                    std::to_string(count) + " indices");
  std::vector<int> idx;
  for (const auto& v : entry[key]) {
    if (!v.is_number_integer()) throw LoadError("indices must be integers");
    const auto i = v.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= n)
      throw LoadError("index " + std::to_string(i) + " out of range for n=" +
                      std::to_string(n));
    idx.push_back(static_cast<int>(i));
  }
  return idx;
}

double read_value(const json& entry) {
  if (!entry.contains("value") || !entry["value"].is_number())
    throw LoadError("coefficient entry needs a numeric \"value\"");
  return entry["value"].get<double>();
}

}  // namespace

HamiltonianCoefficients parse_coefficients(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw LoadError(std::string("coefficients are not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned() ||
      doc["n"].get<std::size_t>() == 0)
    throw LoadError("coefficients need a positive integer \"n\"");
  HamiltonianCoefficients c;
  c.n = doc["n"].get<std::size_t>();

  if (doc.contains("one_body")) {
    if (!doc["one_body"].is_array()) throw LoadError("\"one_body\" must be an array");
    for (const auto& entry : doc["one_body"]) {
      const auto idx = read_indices(entry, "pq", 2, c.n);
      if (!c.one_body.emplace(std::pair{idx[0], idx[1]}, read_value(entry)).second)
        throw LoadError("duplicate one-body entry (" + std::to_string(idx[0]) + "," +
                        std::to_string(idx[1]) + ")");
    }
  }
  if (doc.contains("two_body")) {
    if (!doc["two_body"].is_array()) throw LoadError("\"two_body\" must be an array");
    for (const auto& entry : doc["two_body"]) {
      auto idx = read_indices(entry, "pqrs", 4, c.n);
      double value = read_value(entry);
      if (idx[0] == idx[1] || idx[2] == idx[3])
        throw LoadError("two-body entry repeats a creation or annihilation index");
      // a+p a+q = -a+q a+p, a_r a_s = -a_s a_r
      if (idx[0] < idx[1]) {
        std::swap(idx[0], idx[1]);
        value = -value;
      }
      if (idx[2] < idx[3]) {
        std::swap(idx[2], idx[3]);
        value = -value;
      }
      const std::set<int> distinct(idx.begin(), idx.end());
      if (distinct.size() == 4 && idx[1] < idx[2])
        throw LoadError("two-body entry with four distinct indices must order as "
                        "p > q > r > s after pair swaps");
      const std::array<int, 4> key{idx[0], idx[1], idx[2], idx[3]};
      if (!c.two_body.emplace(key, value).second)
        throw LoadError("duplicate two-body entry");
    }
  }
  return c;
}

HamiltonianCoefficients load_coefficients(const std::filesystem::path& path) {
  return parse_coefficients(read_file(path));
}

namespace {

json term_json(const FermionicTerm& term) {
  return {{"term", term.to_string()},
          {"creates", term.creates},
          {"annihilates", term.annihilates}};
}

const char* y_parity(const CommutingFamily& f) {
  bool even = false, odd = false;
  for (const auto& s : f.strings) (s.string.count(PauliOp::Y) % 2 ? odd : even) = true;
  if (even && odd) return "mixed";
  return odd ? "odd" : "even";
}

}  // namespace

nlohmann::json summary_to_json(const PartitionReport& r) {
  return {{"n", r.n},
          {"schedule_rounds", r.schedule_rounds},
          {"family_count", r.family_count()},
          {"dominant_family_count", r.dominant_family_count},
          {"residual_family_count", r.residual_family_count},
          {"dominant_string_count", r.dominant_string_count},
          {"residual_string_count", r.residual_string_count},
          {"max_family_size", r.max_family_size},
          {"dominant_families_per_round", r.scaling_ratio},
          {"coefficients_applied", r.coefficients_applied},
          {"residual_grouping",
           "per-term even/odd-Y split, diagonal terms merged (not optimized)"}};
}

nlohmann::json families_to_json(const PartitionReport& report) {
  json families = json::array();
  std::size_t dominant_index = 0;
  for (std::size_t k = 0; k < report.families.size(); ++k) {
    const auto& f = report.families[k];
    json terms = json::array();
    for (std::size_t t = 0; t < f.provenance.size(); ++t) {
      auto tj = term_json(f.provenance[t]);
      tj["weight"] = f.term_weights[t];
      terms.push_back(std::move(tj));
    }
    json strings = json::array();
    for (std::size_t s = 0; s < f.strings.size(); ++s) {
      const auto c = f.strings[s].coefficient.to_complex() *
                     f.term_weights[f.term_of[s]];
      strings.push_back({{"pauli", f.strings[s].string.to_string()},
                         {"coefficient", {c.real(), c.imag()}},
                         {"term", f.term_of[s]}});
    }
    json fj = {{"index", k},
               {"origin", to_string(f.origin)},
               {"y_parity", y_parity(f)},
               {"size", f.size()},
               {"terms", std::move(terms)},
               {"strings", std::move(strings)}};
    if (f.origin == FamilyOrigin::Dominant) fj["round"] = dominant_index++ / 2;
    families.push_back(std::move(fj));
  }
  return {{"n", report.n},
          {"summary", summary_to_json(report)},
          {"families", std::move(families)}};
}

}  // namespace ppart
