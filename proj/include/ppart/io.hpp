#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ppart/baranyai.hpp"
#include "ppart/partition.hpp"

namespace ppart {

/// Canonical single-line schedule encoding, e.g.
/// {"n": 8, "rounds": [[[7,5,3,0],[6,4,2,1]], [[...],[...]]]}
std::string schedule_to_json(const Schedule& schedule);

/// Parses the schedule encoding without checking the combinatorics.
Schedule parse_schedule(std::string_view text);

/// One round per line: "a+7 a+5 a-3 a-0    a+6 a+4 a-2 a-1".
std::string schedule_to_text(const Schedule& schedule);

void save_schedule(const Schedule& schedule, const std::filesystem::path& path);

/// Parses and validates (exact cover, disjoint rounds). Throws LoadError.
Schedule load_schedule(const std::filesystem::path& path,
                       std::optional<std::size_t> expected_n = {});

HamiltonianCoefficients parse_coefficients(std::string_view text);
HamiltonianCoefficients load_coefficients(const std::filesystem::path& path);

nlohmann::json families_to_json(const PartitionReport& report);
nlohmann::json summary_to_json(const PartitionReport& report);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace ppart
