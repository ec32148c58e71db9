#include "ppart/cli.hpp"

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ppart/baranyai.hpp"
#include "ppart/errors.hpp"
#include "ppart/io.hpp"
#include "ppart/oracles.hpp"
#include "ppart/partition.hpp"

namespace ppart {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FlowEngine parse_engine(const std::string& name) {
  return name == "baseline" ? FlowEngine::Baseline : FlowEngine::Rounding;
}

void check_n(std::size_t n) {
  if (n < 4) throw UsageError("--n must be at least 4, got " + std::to_string(n));
}

std::shared_ptr<const Schedule> obtain_schedule(std::size_t n, const std::string& engine,
                                                const std::string& cache_dir) {
  std::optional<std::filesystem::path> dir;
  if (!cache_dir.empty()) dir = cache_dir;
  ScheduleCache cache(dir, parse_engine(engine));
  return cache.get(n);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_file(path, text);
}

std::string summary_text(const PartitionReport& r) {
  std::ostringstream ss;
  ss << "n=" << r.n << " rounds=" << r.schedule_rounds << " families=" << r.family_count()
     << " dominant=" << r.dominant_family_count << " residual=" << r.residual_family_count
     << " dominant_strings=" << r.dominant_string_count
     << " residual_strings=" << r.residual_string_count
     << " max_family_size=" << r.max_family_size
     << " dominant_families_per_round=" << r.scaling_ratio << '\n';
  return ss.str();
}

struct StatsRow {
  std::size_t n;
  std::uint64_t terms;
  std::uint64_t strings;
  std::size_t rounds;
  std::size_t families;
  double families_per_round;
  double strings_per_family;
  double families_over_n3;
  double strings_over_n4;
  double build_ms;
};

StatsRow stats_row(std::size_t n) {
  const auto t0 = std::chrono::steady_clock::now();
  const Schedule schedule = pad_and_build(n);
  const auto t1 = std::chrono::steady_clock::now();
  PartitionOptions opts;
  opts.include_residual = false;
  const auto report = build_partition(schedule, opts);
  const double nd = static_cast<double>(n);
  StatsRow row{};
  row.n = n;
  row.terms = binomial(n, 4);
  row.strings = 16 * row.terms;
  row.rounds = schedule.rounds.size();
  row.families = report.dominant_family_count;
  row.families_per_round = static_cast<double>(row.families) / binomial(n - 1, 3);
  row.strings_per_family =
      static_cast<double>(report.dominant_string_count) / static_cast<double>(row.families);
  row.families_over_n3 = static_cast<double>(row.families) / (nd * nd * nd);
  row.strings_over_n4 = static_cast<double>(row.strings) / (nd * nd * nd * nd);
  row.build_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return row;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commuting-family scheduler for two-body excitation terms", "ppart"};
  app.require_subcommand(1);

  std::size_t n = 0;
  std::string format = "text";
  std::string out_path;
  std::string engine = "rounding";
  std::string cache_dir;
  std::string hamiltonian;
  bool dominant_only = false;
  bool deep = false;
  std::string schedule_file;
  std::string n_list = "8,12,16,20";

  auto* schedule_cmd = app.add_subcommand("schedule", "Build the 4-subset round schedule");
  schedule_cmd->add_option("--n", n, "Number of modes (>= 4)")->required();
  schedule_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  schedule_cmd->add_option("--out", out_path, "Write to FILE instead of stdout");
  schedule_cmd->add_option("--engine", engine)->check(CLI::IsMember({"rounding", "baseline"}));
  schedule_cmd->add_option("--cache-dir", cache_dir, "Directory of cached schedule files");

  auto* families_cmd = app.add_subcommand("families", "Emit commuting families as JSON");
  families_cmd->add_option("--n", n, "Number of modes (>= 4)")->required();
  families_cmd->add_option("--hamiltonian", hamiltonian, "Coefficients JSON file");
  families_cmd->add_option("--out", out_path, "Write families JSON to FILE");
  families_cmd->add_option("--format", format, "Summary format")
      ->check(CLI::IsMember({"text", "json"}));
  families_cmd->add_option("--engine", engine)->check(CLI::IsMember({"rounding", "baseline"}));
  families_cmd->add_option("--cache-dir", cache_dir, "Directory of cached schedule files");
  families_cmd->add_flag("--dominant-only", dominant_only, "Skip residual terms");

  auto* verify_cmd = app.add_subcommand("verify", "Run the brute-force oracle suite");
  verify_cmd->add_flag("--deep", deep, "Add n=6 matrices and endpoint-sliding checks");
  verify_cmd->add_option("--n", n, "Schedule size to validate (default 8)");
  verify_cmd->add_option("--schedule-file", schedule_file, "Validate this schedule file");

  auto* stats_cmd = app.add_subcommand("stats", "Scaling table over several n");
  stats_cmd->add_option("--n-list", n_list, "Comma-separated list of n");
  stats_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> argv_store{"ppart"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*schedule_cmd) {
      check_n(n);
      const auto schedule = obtain_schedule(n, engine, cache_dir);
      emit(format == "json" ? schedule_to_json(*schedule) : schedule_to_text(*schedule),
           out_path, out);
      return kExitOk;
    }

    if (*families_cmd) {
      check_n(n);
      std::optional<HamiltonianCoefficients> coeffs;
      if (!hamiltonian.empty()) {
        coeffs = load_coefficients(hamiltonian);
        if (coeffs->n != n)
          throw UsageError("coefficients file is for n=" + std::to_string(coeffs->n));
      }
      const auto schedule = obtain_schedule(n, engine, cache_dir);
      PartitionOptions opts;
      opts.include_residual = !dominant_only;
      opts.coefficients = coeffs ? &*coeffs : nullptr;
      const auto report = build_partition(*schedule, opts);
      const std::string summary =
          format == "json" ? summary_to_json(report).dump(2) + "\n" : summary_text(report);
      if (out_path.empty()) {
        out << families_to_json(report).dump() << '\n';
        err << summary;
      } else {
        write_file(out_path, families_to_json(report).dump() + "\n");
        out << summary;
      }
      return kExitOk;
    }

    if (*verify_cmd) {
      json checks = json::array();
      bool ok = true;
      auto record = [&](json j) {
        ok = ok && j["passed"].get<bool>();
        checks.push_back(std::move(j));
      };

      if (!schedule_file.empty()) {
        const Schedule loaded = parse_schedule(read_file(schedule_file));
        record(oracle::to_json(oracle::validate_schedule(loaded)));
      } else {
        const std::size_t vn = n == 0 ? 8 : n;
        check_n(vn);

        auto splits = oracle::verify_disjoint_splits();
        auto j = oracle::to_json(splits);
        j.erase("per_case");
        record(std::move(j));

        std::vector<std::size_t> sizes{4, 5};
        if (deep) sizes.push_back(6);
        for (auto m : sizes) record(oracle::to_json(oracle::verify_jw_against_matrices(m)));

        const Schedule schedule = pad_and_build(vn);
        record(oracle::to_json(oracle::validate_schedule(schedule)));
        record(oracle::to_json(oracle::validate_families(commuting_families(schedule))));

        bool chain_ok = true;
        for (std::size_t m = 1; m <= 8; ++m) {
          const auto chain = oracle::anticommuting_chain_fixture(m);
          for (std::size_t a = 0; a < chain.size(); ++a)
            for (std::size_t b = a + 1; b < chain.size(); ++b)
              chain_ok = chain_ok && !commutes(chain[a], chain[b]);
        }
        record({{"check", "anticommuting_chain"}, {"passed", chain_ok}});

        if (deep) record(oracle::to_json(oracle::verify_sliding_invariance(200, 12, 7)));
      }
      out << json{{"passed", ok}, {"checks", checks}}.dump(2) << '\n';
      return ok ? kExitOk : kExitVerifyFailed;
    }

    if (*stats_cmd) {
      std::vector<std::size_t> sizes;
      std::stringstream ss(n_list);
      for (std::string item; std::getline(ss, item, ',');) {
        std::size_t pos = 0;
        std::size_t v = 0;
        try {
          v = std::stoul(item, &pos);
        } catch (const std::exception&) {
          throw UsageError("bad --n-list entry '" + item + "'");
        }
        if (pos != item.size()) throw UsageError("bad --n-list entry '" + item + "'");
        check_n(v);
        sizes.push_back(v);
      }
      std::vector<StatsRow> rows;
      for (auto v : sizes) rows.push_back(stats_row(v));
      if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
          arr.push_back({{"n", r.n},
                         {"terms", r.terms},
                         {"strings", r.strings},
                         {"rounds", r.rounds},
                         {"dominant_families", r.families},
                         {"families_per_round", r.families_per_round},
                         {"strings_per_family", r.strings_per_family},
                         {"families_over_n3", r.families_over_n3},
                         {"strings_over_n4", r.strings_over_n4},
                         {"build_ms", r.build_ms}});
        out << arr.dump(2) << '\n';
      } else {
        char line[256];
        std::snprintf(line, sizeof line, "%4s %8s %9s %7s %9s %12s %12s %10s %10s %10s\n",
                      "N", "terms", "strings", "rounds", "families", "fam/round",
                      "str/family", "fam/N^3", "str/N^4", "build_ms");
        out << line;
        for (const auto& r : rows) {
          std::snprintf(line, sizeof line,
                        "%4zu %8llu %9llu %7zu %9zu %12.3f %12.3f %10.4f %10.4f %10.2f\n", r.n,
                        static_cast<unsigned long long>(r.terms),
                        static_cast<unsigned long long>(r.strings), r.rounds, r.families,
                        r.families_per_round, r.strings_per_family, r.families_over_n3,
                        r.strings_over_n4, r.build_ms);
          out << line;
        }
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LoadError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ppart
