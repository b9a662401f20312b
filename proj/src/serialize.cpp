#include "polyspace/serialize.hpp"

#include "polyspace/errors.hpp"
#include "polyspace/rng.hpp"

#include <fstream>

#ifndef POLYSPACE_VERSION
#define POLYSPACE_VERSION "0.0.0"
#endif

namespace polyspace {

std::string software_version()
{
    return POLYSPACE_VERSION;
}

Json to_json(const LengthVector& lengths)
{
    Json arr = Json::array();
    for (const auto& s : to_strings(lengths)) arr.push_back(s);
    return arr;
}

LengthVector length_vector_from_json(const Json& j)
{
    if (!j.is_array()) throw DomainError("length vector must be a JSON array");
    std::vector<Rational> coords;
    for (const auto& item : j) {
        if (item.is_string())
            coords.push_back(parse_rational(item.get<std::string>()));
        else if (item.is_number_integer())
            coords.emplace_back(item.get<std::int64_t>());
        else if (item.is_number())
            coords.push_back(parse_rational(item.dump()));
        else
            throw DomainError("length vector entries must be strings or numbers");
    }
    return LengthVector(std::move(coords));
}

Json to_json(const BettiProfile& profile)
{
    Json j;
    j["space"] = std::string(to_string(profile.space));
    j["n"] = profile.n;
    j["betti"] = profile.values;
    return j;
}

BettiProfile betti_profile_from_json(const Json& j)
{
    BettiProfile p;
    p.space = parse_space(j.at("space").get<std::string>());
    p.n = j.at("n").get<int>();
    p.values = j.at("betti").get<std::vector<std::int64_t>>();
    return p;
}

Json to_json(const ChamberCode& code)
{
    Json arr = Json::array();
    for (const auto& m : code.maximal_shorts) arr.push_back(m.indices());
    return arr;
}

Json to_json(const ChamberOrbit& orbit)
{
    Json j;
    j["code"] = to_json(orbit.code);
    j["witness"] = to_json(orbit.witness);
    j["planar"] = orbit.planar.values;
    j["spatial"] = orbit.spatial.values;
    return j;
}

Json to_json(const Estimate& estimate)
{
    Json j;
    j["mean"] = estimate.mean;
    j["variance"] = estimate.variance;
    j["stderr"] = estimate.std_error;
    j["count"] = estimate.count;
    j["rejected"] = estimate.rejected;
    j["theory"] = estimate.theory ? Json(*estimate.theory) : Json(nullptr);
    return j;
}

Json to_json(const ExperimentConfig& config)
{
    Json j;
    j["measure"] = std::string(to_string(config.measure));
    j["invariant"] = std::string(to_string(config.invariant.kind));
    j["p"] = config.invariant.p;
    j["k"] = config.invariant.k;
    j["n"] = config.n;
    j["samples"] = config.samples;
    j["seed"] = config.seed;
    return j;
}

ExperimentConfig experiment_config_from_json(const Json& j)
{
    ExperimentConfig c;
    c.measure = parse_measure(j.at("measure").get<std::string>());
    c.invariant.kind = parse_invariant(j.at("invariant").get<std::string>());
    c.invariant.p = j.value("p", 0);
    c.invariant.k = j.value("k", 1);
    c.n = j.at("n").get<int>();
    c.samples = j.at("samples").get<std::int64_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    return c;
}

Json to_json(const ExperimentResult& result)
{
    Json j;
    j["config"] = to_json(result.config);
    j["estimate"] = to_json(result.estimate);
    j["exact_mean"] = to_string(result.exact_mean);
    Json bounds = Json::object();
    for (const auto& b : result.bounds) bounds[b.name] = {{"exact", to_string(b.value)}, {"decimal", to_decimal(b.value)}};
    j["bounds"] = bounds;
    if (!result.histogram.empty()) {
        Json h = Json::object();
        for (const auto& [v, c] : result.histogram) h[std::to_string(v)] = c;
        j["histogram"] = h;
    }
    return j;
}

Json make_manifest(const ExperimentResult& result, const RunInfo& info)
{
    const auto layout = result.config.layout();
    Json m;
    m["software"] = {{"name", "polyspace"}, {"version", software_version()}};
    m["config"] = to_json(result.config);
    m["shard_layout"] = {{"shards", layout.shards}, {"block_size", layout.block_size}, {"blocks", layout.blocks()}};
    m["rng"] = {{"algorithm", std::string(RngStream::kAlgorithm)}, {"substream", "block index"}};
    Json res = to_json(result);
    res.erase("config");
    m["results"] = res;
    m["run_info"] = {{"wall_clock_seconds", info.wall_clock_seconds}, {"threads", info.threads}};
    return m;
}

void write_json_file(const Json& j, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

void write_manifest(const ExperimentResult& result, const RunInfo& info, const std::filesystem::path& path)
{
    write_json_file(make_manifest(result, info), path);
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("invalid JSON in '" + path.string() + "': " + e.what());
    }
}

ExperimentConfig config_from_manifest(const Json& manifest)
{
    ExperimentConfig c = experiment_config_from_json(manifest.at("config"));
    if (manifest.contains("shard_layout")) {
        const auto& layout = manifest.at("shard_layout");
        c.shards = layout.value("shards", 1);
        c.block_size = layout.value("block_size", ShardLayout::kDefaultBlockSize);
    }
    return c;
}

} // namespace polyspace
