#pragma once

#include "polyspace/betti.hpp"
#include "polyspace/chambers.hpp"
#include "polyspace/experiments.hpp"
#include "polyspace/length_vector.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace polyspace {

using Json = nlohmann::ordered_json;

/// ["3/10", "7/10"]
Json to_json(const LengthVector& lengths);
/// Accepts an array of strings (rationals or decimals) or of JSON numbers.
LengthVector length_vector_from_json(const Json& j);

/// {"space": "planar", "n": 5, "betti": [1, 8, 1]}
Json to_json(const BettiProfile& profile);
BettiProfile betti_profile_from_json(const Json& j);

/// Array of one-based index arrays.
Json to_json(const ChamberCode& code);
Json to_json(const ChamberOrbit& orbit);

Json to_json(const Estimate& estimate);
Json to_json(const ExperimentConfig& config);
ExperimentConfig experiment_config_from_json(const Json& j);
Json to_json(const ExperimentResult& result);

struct RunInfo
{
    /// Seconds spent in the run; the only nondeterministic manifest content.
    double wall_clock_seconds = 0.0;
    int threads = 1;
};

/// Everything needed to rerun: config, shard layout, RNG algorithm, version,
/// results. Volatile data lives under "run_info" only.
Json make_manifest(const ExperimentResult& result, const RunInfo& info);

/// Throws std::runtime_error on I/O failure.
void write_manifest(const ExperimentResult& result, const RunInfo& info, const std::filesystem::path& path);
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const Json& j, const std::filesystem::path& path);

/// Config recorded in a manifest.
ExperimentConfig config_from_manifest(const Json& manifest);

std::string software_version();

} // namespace polyspace
