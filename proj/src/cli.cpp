#include "polyspace/cli.hpp"

#include "polyspace/betti.hpp"
#include "polyspace/chambers.hpp"
#include "polyspace/core.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/experiments.hpp"
#include "polyspace/measures.hpp"
#include "polyspace/serialize.hpp"
#include "polyspace/volume.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace polyspace::cli {

namespace {

std::string fmt(double x)
{
    if (std::isnan(x)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string join(const std::vector<std::int64_t>& values, const char* sep = ",")
{
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(values[i]);
    }
    return s;
}

std::string quote(const std::string& s)
{
    return "\"" + s + "\"";
}

struct Options
{
    std::string format = "text";

    OutputFormat output() const { return parse_format(format); }
};

void add_format(CLI::App* app, Options& opts)
{
    app->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
}

// ---------------------------------------------------------------- betti

struct BettiArgs : Options
{
    std::string lengths;
    std::string space = "planar";
    bool total = false;
    bool tc = false;
};

void run_betti(const BettiArgs& a, std::ostream& out)
{
    const LengthVector lengths = LengthVector::parse(a.lengths);
    const Space space = parse_space(a.space);
    const BettiProfile profile = space == Space::Planar ? planar_profile(lengths) : spatial_profile(lengths);

    switch (a.output()) {
    case OutputFormat::Json: {
        Json j = to_json(profile);
        if (a.total) {
            j["total"] = total_betti_m(lengths);
            j["total_bound"] = total_betti_m_bound(lengths.n());
        }
        if (a.tc) j["tc"] = tc_n(lengths);
        out << j.dump() << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "degree,betti\n";
        for (std::size_t d = 0; d < profile.values.size(); ++d) out << d << ',' << profile.values[d] << '\n';
        if (a.total) out << "total," << total_betti_m(lengths) << "\ntotal_bound," << total_betti_m_bound(lengths.n()) << '\n';
        if (a.tc) out << "tc," << tc_n(lengths) << '\n';
        break;
    case OutputFormat::PlainText:
        out << join(profile.values) << '\n';
        if (a.total) out << "total " << total_betti_m(lengths) << " (bound " << total_betti_m_bound(lengths.n()) << ")\n";
        if (a.tc) out << "tc " << tc_n(lengths) << '\n';
        break;
    }
}

// ------------------------------------------------------------- chambers

struct ChambersArgs : Options
{
    int n = 0;
    std::string out_path;
    std::string lengths;
};

void run_chambers_enumerate(const ChambersArgs& a, std::ostream& out)
{
    const auto orbits = enumerate_chamber_orbits(a.n);
    Json j;
    j["n"] = a.n;
    j["count"] = orbits.size();
    Json list = Json::array();
    for (const auto& o : orbits) list.push_back(to_json(o));
    j["orbits"] = list;
    if (!a.out_path.empty()) write_json_file(j, a.out_path);

    switch (a.output()) {
    case OutputFormat::Json: out << j.dump() << '\n'; break;
    case OutputFormat::Csv:
        out << "index,code,witness,planar,spatial\n";
        for (std::size_t i = 0; i < orbits.size(); ++i) {
            const auto& o = orbits[i];
            out << i << ',' << quote(o.code.str()) << ',' << quote(to_csv(o.witness)) << ',' << quote(join(o.planar.values)) << ','
                << quote(join(o.spatial.values)) << '\n';
        }
        break;
    case OutputFormat::PlainText:
        out << orbits.size() << " orbits\n";
        for (const auto& o : orbits)
            out << o.code.str() << "  witness " << to_csv(o.witness) << "  planar " << join(o.planar.values) << "  spatial "
                << join(o.spatial.values) << '\n';
        break;
    }
}

void run_chambers_code(const ChambersArgs& a, std::ostream& out)
{
    const LengthVector lengths = LengthVector::parse(a.lengths);
    const ChamberCode code = chamber_code(lengths);
    switch (a.output()) {
    case OutputFormat::Json: out << Json{{"n", code.n}, {"code", to_json(code)}}.dump() << '\n'; break;
    case OutputFormat::Csv: out << "n,code\n" << code.n << ',' << quote(code.str()) << '\n'; break;
    case OutputFormat::PlainText: out << code.str() << '\n'; break;
    }
}

// --------------------------------------------------------------- volume

struct VolumeArgs : Options
{
    std::string x = "0";
    int p = 1;
    int q = 1;
    int n = 1;
};

void print_quantities(const Options& a, const std::string& quantity, const Json& params,
                      const std::vector<std::pair<std::string, Rational>>& values, std::ostream& out)
{
    switch (a.output()) {
    case OutputFormat::Json: {
        Json j;
        j["quantity"] = quantity;
        j["params"] = params;
        for (const auto& [name, v] : values) j[name] = {{"exact", to_string(v)}, {"decimal", to_decimal(v)}};
        out << j.dump() << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "quantity,exact,decimal\n";
        for (const auto& [name, v] : values) out << name << ',' << to_string(v) << ',' << to_decimal(v) << '\n';
        break;
    case OutputFormat::PlainText:
        if (values.size() == 1) {
            out << to_string(values[0].second) << " ~ " << to_decimal(values[0].second) << '\n';
        } else {
            for (const auto& [name, v] : values) out << name << ' ' << to_string(v) << " ~ " << to_decimal(v) << '\n';
        }
        break;
    }
}

// --------------------------------------------------------------- sample

struct SampleArgs : Options
{
    std::string measure = "uniform";
    int n = 5;
    int count = 1;
    std::uint64_t seed = kDefaultSeed;
};

void run_sample(const SampleArgs& a, std::ostream& out)
{
    if (a.count < 0) throw DomainError("count must be >= 0");
    const MeasureSpec spec{parse_measure(a.measure), a.n};
    RngStream rng(a.seed, 0);
    std::vector<LengthVector> draws;
    std::int64_t resamples = 0;
    for (int i = 0; i < a.count; ++i) {
        auto d = sample(spec, rng);
        resamples += d.degenerate_resamples;
        draws.push_back(std::move(d.lengths));
    }
    switch (a.output()) {
    case OutputFormat::Json: {
        Json list = Json::array();
        for (const auto& d : draws) list.push_back(to_json(d));
        out << Json{{"measure", a.measure}, {"n", a.n}, {"seed", a.seed}, {"samples", list}, {"degenerate_resamples", resamples}}.dump() << '\n';
        break;
    }
    case OutputFormat::Csv:
        for (int i = 1; i <= a.n; ++i) out << (i > 1 ? "," : "") << 'l' << i;
        out << '\n';
        [[fallthrough]];
    case OutputFormat::PlainText:
        for (const auto& d : draws) {
            for (int i = 0; i < d.n(); ++i) out << (i ? "," : "") << to_decimal(d[static_cast<std::size_t>(i)], 15);
            out << '\n';
        }
        break;
    }
}

// ----------------------------------------------------------- experiment

struct ExperimentArgs : Options
{
    std::string measure = "uniform";
    std::string invariant = "bettiM";
    int p = 0;
    int k = 1;
    int n = 10;
    std::int64_t samples = 100000;
    std::uint64_t seed = kDefaultSeed;
    int shards = 8;
    int threads = 0;
    std::int64_t block_size = ShardLayout::kDefaultBlockSize;
    std::string out_path;
    int n_from = 8;
    int n_to = 20;
    std::string manifest;

    ExperimentConfig config() const
    {
        ExperimentConfig c;
        c.measure = parse_measure(measure);
        c.invariant = {parse_invariant(invariant), p, k};
        c.n = n;
        c.samples = samples;
        c.seed = seed;
        c.shards = shards;
        c.threads = threads > 0 ? threads : default_thread_count();
        c.block_size = block_size;
        return c;
    }
};

void add_experiment_options(CLI::App* app, ExperimentArgs& a, bool single_n)
{
    app->add_option("--measure", a.measure, "uniform or cube")->check(CLI::IsMember({"uniform", "cube"}))->capture_default_str();
    app->add_option("--invariant", a.invariant, "bettiM, bettiN, bettiM_pow, bettiN_pow, totalBettiM, gamma, normal, lambda")
        ->capture_default_str();
    app->add_option("--p", a.p, "Degree or subset size")->capture_default_str();
    app->add_option("--k", a.k, "Moment order")->capture_default_str();
    if (single_n)
        app->add_option("--n", a.n, "Number of links")->capture_default_str();
    else {
        app->add_option("--n-from", a.n_from)->capture_default_str();
        app->add_option("--n-to", a.n_to)->capture_default_str();
    }
    app->add_option("--samples", a.samples)->capture_default_str();
    app->add_option("--seed", a.seed)->capture_default_str();
    app->add_option("--shards", a.shards, "Contiguous block ranges processed as independent work units")->capture_default_str();
    app->add_option("--threads", a.threads, "Worker threads (default: POLYSPACE_THREADS or hardware concurrency)");
    app->add_option("--block-size", a.block_size, "Samples per random substream")->capture_default_str();
    add_format(app, a);
}

void print_result(const ExperimentResult& r, OutputFormat format, std::ostream& out)
{
    const auto& e = r.estimate;
    switch (format) {
    case OutputFormat::Json: out << to_json(r).dump() << '\n'; break;
    case OutputFormat::Csv:
        out << "invariant,measure,n,p,k,samples,seed,mean,stderr,count,rejected,theory\n";
        out << to_string(r.config.invariant.kind) << ',' << to_string(r.config.measure) << ',' << r.config.n << ',' << r.config.invariant.p
            << ',' << r.config.invariant.k << ',' << r.config.samples << ',' << r.config.seed << ',' << fmt(e.mean) << ','
            << fmt(e.std_error) << ',' << e.count << ',' << e.rejected << ',' << (e.theory ? fmt(*e.theory) : "") << '\n';
        break;
    case OutputFormat::PlainText:
        out << to_string(r.config.invariant.kind) << " n=" << r.config.n << " p=" << r.config.invariant.p;
        if (r.config.invariant.k != 1) out << " k=" << r.config.invariant.k;
        out << " measure=" << to_string(r.config.measure) << " seed=" << r.config.seed << '\n';
        out << "mean " << fmt(e.mean) << " +- " << fmt(e.std_error) << " (count " << e.count << ", rejected " << e.rejected << ")\n";
        if (e.theory) out << "theory " << fmt(*e.theory) << " abs_dev " << fmt(std::abs(e.mean - *e.theory)) << '\n';
        for (const auto& b : r.bounds) out << b.name << ' ' << to_decimal(b.value) << '\n';
        break;
    }
}

int run_experiment(const ExperimentArgs& a, std::ostream& out)
{
    const auto config = a.config();
    const auto start = std::chrono::steady_clock::now();
    const auto result = run_expectation(config);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!a.out_path.empty()) write_manifest(result, {seconds, config.threads}, a.out_path);
    print_result(result, a.output(), out);
    return kExitOk;
}

int run_replay(const ExperimentArgs& a, std::ostream& out, std::ostream& err)
{
    const Json manifest = read_json_file(a.manifest);
    ExperimentConfig config = config_from_manifest(manifest);
    config.threads = a.threads > 0 ? a.threads : default_thread_count();
    const auto start = std::chrono::steady_clock::now();
    const auto result = run_expectation(config);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!a.out_path.empty()) write_manifest(result, {seconds, config.threads}, a.out_path);
    print_result(result, a.output(), out);

    const std::string recorded = manifest.at("results").at("exact_mean").get<std::string>();
    if (recorded != to_string(result.exact_mean)) {
        err << "replay mismatch: manifest mean " << recorded << ", recomputed " << to_string(result.exact_mean) << '\n';
        return kExitDomain;
    }
    return kExitOk;
}

void print_scan(const std::vector<ScanRow>& rows, OutputFormat format, std::ostream& out)
{
    auto theory = [](const ScanRow& r) { return r.theory ? fmt(*r.theory) : std::string(); };
    switch (format) {
    case OutputFormat::Json: {
        Json list = Json::array();
        for (const auto& r : rows)
            list.push_back({{"n", r.n}, {"estimate", r.estimate.mean}, {"stderr", r.estimate.std_error},
                            {"theory", r.theory ? Json(*r.theory) : Json(nullptr)}, {"abs_dev", std::isnan(r.abs_dev) ? Json(nullptr) : Json(r.abs_dev)}});
        out << list.dump() << '\n';
        break;
    }
    case OutputFormat::Csv:
    case OutputFormat::PlainText:
        out << "n,estimate,stderr,theory,abs_dev\n";
        for (const auto& r : rows)
            out << r.n << ',' << fmt(r.estimate.mean) << ',' << fmt(r.estimate.std_error) << ',' << theory(r) << ','
                << (std::isnan(r.abs_dev) ? "" : fmt(r.abs_dev)) << '\n';
        break;
    }
}

void run_report(const ExperimentArgs& a, std::ostream& out)
{
    const auto config = a.config();
    const auto rows = convergence_scan(config, a.n_from, a.n_to);
    if (a.output() == OutputFormat::Json) {
        Json list = Json::array();
        for (const auto& r : rows)
            list.push_back({{"n", r.n}, {"abs_dev", std::isnan(r.abs_dev) ? Json(nullptr) : Json(r.abs_dev)}, {"stderr", r.estimate.std_error}});
        out << Json{{"invariant", a.invariant}, {"p", a.p}, {"measure", a.measure}, {"seed", a.seed}, {"y_scale", "log"}, {"rows", list}}.dump()
            << '\n';
        return;
    }
    out << "# " << a.invariant << " p=" << a.p << " measure=" << a.measure << " samples=" << a.samples << " seed=" << a.seed << '\n';
    out << "# plot abs_dev against n with a logarithmic y axis\n";
    out << "n,abs_dev,stderr,log10_abs_dev\n";
    for (const auto& r : rows) {
        out << r.n << ',' << fmt(r.abs_dev) << ',' << fmt(r.estimate.std_error) << ',';
        if (!std::isnan(r.abs_dev) && r.abs_dev > 0) out << fmt(std::log10(r.abs_dev));
        out << '\n';
    }
}

void run_kn(const ExperimentArgs& a, std::ostream& out, std::ostream& err)
{
    ShardLayout layout{a.samples, a.block_size, a.shards, a.threads > 0 ? a.threads : default_thread_count()};
    const auto e = estimate_kn(a.n, layout, a.seed);
    const double relative = e.mean != 0 ? e.std_error / e.mean : 0.0;
    if (relative > 0.05) err << "warning: relative standard error " << fmt(relative) << " exceeds 5%\n";
    switch (a.output()) {
    case OutputFormat::Json: out << Json{{"n", a.n}, {"seed", a.seed}, {"k_n", to_json(e)}, {"relative_stderr", relative}}.dump() << '\n'; break;
    case OutputFormat::Csv: out << "n,k_n,stderr,relative_stderr\n" << a.n << ',' << fmt(e.mean) << ',' << fmt(e.std_error) << ',' << fmt(relative) << '\n'; break;
    case OutputFormat::PlainText: out << "k_" << a.n << " ~ " << fmt(e.mean) << " +- " << fmt(e.std_error) << '\n'; break;
    }
}

} // namespace

OutputFormat parse_format(std::string_view text)
{
    if (text == "text") return OutputFormat::PlainText;
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    throw DomainError("unknown format '" + std::string(text) + "'");
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact topology of polygon spaces and Monte Carlo averages over length vectors", "polyspace"};
    app.require_subcommand(1);
    app.set_version_flag("--version", software_version());

    BettiArgs betti_args;
    auto* betti = app.add_subcommand("betti", "Betti numbers of a planar or spatial polygon space");
    betti->add_option("--lengths", betti_args.lengths, "Comma-separated bar lengths (rationals or decimals)")->required();
    betti->add_option("--space", betti_args.space, "planar or spatial")->check(CLI::IsMember({"planar", "spatial"}))->capture_default_str();
    betti->add_flag("--total", betti_args.total, "Also print the total planar Betti number and its bound");
    betti->add_flag("--tc", betti_args.tc, "Also print the topological complexity of the spatial space");
    add_format(betti, betti_args);

    ChambersArgs chambers_args;
    auto* chambers = app.add_subcommand("chambers", "Chamber codes and orbit enumeration");
    chambers->require_subcommand(1);
    auto* enumerate = chambers->add_subcommand("enumerate", "List every orbit of chambers for n links");
    enumerate->add_option("--n", chambers_args.n, "Number of links (3..9)")->required();
    enumerate->add_option("--out", chambers_args.out_path, "Write codes, witnesses and profiles as JSON");
    add_format(enumerate, chambers_args);
    auto* code = chambers->add_subcommand("code", "Chamber code of one length vector");
    code->add_option("--lengths", chambers_args.lengths)->required();
    add_format(code, chambers_args);

    VolumeArgs vol;
    auto* volume = app.add_subcommand("volume", "Exact simplex-slice volumes and bounds");
    volume->require_subcommand(1);
    auto* frustum = volume->add_subcommand("frustum", "r(x) for p vertices at -1 and q at +1");
    frustum->add_option("--x", vol.x)->capture_default_str();
    frustum->add_option("--p", vol.p)->required();
    frustum->add_option("--q", vol.q)->required();
    add_format(frustum, vol);
    auto* r0_cmd = volume->add_subcommand("r0", "r_{p,q} = r(0)");
    r0_cmd->add_option("--p", vol.p)->required();
    r0_cmd->add_option("--q", vol.q)->required();
    add_format(r0_cmd, vol);
    auto* vj = volume->add_subcommand("vj", "Relative volume where a fixed p-subset is not short");
    vj->add_option("--n", vol.n)->required();
    vj->add_option("--p", vol.p)->required();
    add_format(vj, vol);
    auto* gamma = volume->add_subcommand("gamma", "Lower bounds for the volume where all p-subsets are short");
    gamma->add_option("--n", vol.n)->required();
    gamma->add_option("--p", vol.p)->required();
    add_format(gamma, vol);
    auto* lambda = volume->add_subcommand("lambda", "Upper bound for the volume where the longest bar is >= 1/(2p)");
    lambda->add_option("--n", vol.n)->required();
    lambda->add_option("--p", vol.p)->required();
    add_format(lambda, vol);

    SampleArgs sample_args;
    auto* sample_cmd = app.add_subcommand("sample", "Draw normalized length vectors");
    sample_cmd->add_option("--measure", sample_args.measure)->check(CLI::IsMember({"uniform", "cube"}))->capture_default_str();
    sample_cmd->add_option("--n", sample_args.n)->capture_default_str();
    sample_cmd->add_option("--count", sample_args.count)->capture_default_str();
    sample_cmd->add_option("--seed", sample_args.seed)->capture_default_str();
    add_format(sample_cmd, sample_args);

    ExperimentArgs exp_args;
    auto* experiment = app.add_subcommand("experiment", "Monte Carlo averages of topological invariants");
    experiment->require_subcommand(1);
    auto* run = experiment->add_subcommand("run", "Estimate one average");
    add_experiment_options(run, exp_args, true);
    run->add_option("--out", exp_args.out_path, "Write a JSON run manifest");
    auto* scan = experiment->add_subcommand("scan", "Estimate over a range of n");
    add_experiment_options(scan, exp_args, false);
    auto* replay = experiment->add_subcommand("replay", "Rerun a manifest and check the mean is reproduced");
    replay->add_option("--manifest", exp_args.manifest)->required();
    replay->add_option("--threads", exp_args.threads);
    replay->add_option("--out", exp_args.out_path, "Write a fresh manifest");
    add_format(replay, exp_args);
    auto* kn = experiment->add_subcommand("kn", "Estimate the cube-measure normalizing constant k_n");
    kn->add_option("--n", exp_args.n)->required();
    kn->add_option("--samples", exp_args.samples)->capture_default_str();
    kn->add_option("--seed", exp_args.seed)->capture_default_str();
    kn->add_option("--shards", exp_args.shards)->capture_default_str();
    kn->add_option("--threads", exp_args.threads);
    add_format(kn, exp_args);

    ExperimentArgs report_args;
    auto* report = app.add_subcommand("report", "Plot-ready CSV of |estimate - theory| against n");
    add_experiment_options(report, report_args, false);
    report_args.format = "csv";

    std::vector<const char*> argv{"polyspace"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << software_version() << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        const CLI::App* target = &app;
        for (auto* sub : app.get_subcommands()) {
            target = sub;
            for (auto* subsub : sub->get_subcommands()) target = subsub;
        }
        err << target->help();
        return kExitUsage;
    }

    try {
        if (betti->parsed()) run_betti(betti_args, out);
        else if (enumerate->parsed()) run_chambers_enumerate(chambers_args, out);
        else if (code->parsed()) run_chambers_code(chambers_args, out);
        else if (frustum->parsed())
            print_quantities(vol, "frustum", {{"x", vol.x}, {"p", vol.p}, {"q", vol.q}}, {{"value", frustum_ratio(parse_rational(vol.x), vol.p, vol.q)}}, out);
        else if (r0_cmd->parsed())
            print_quantities(vol, "r0", {{"p", vol.p}, {"q", vol.q}}, {{"value", r0(vol.p, vol.q)}}, out);
        else if (vj->parsed())
            print_quantities(vol, "vj", {{"n", vol.n}, {"p", vol.p}}, {{"value", vj_ratio(vol.n, vol.p)}}, out);
        else if (gamma->parsed()) {
            const auto b = gamma_lower_bound(vol.n, vol.p);
            print_quantities(vol, "gamma", {{"n", vol.n}, {"p", vol.p}}, {{"headline", b.headline}, {"union", b.union_bound}}, out);
        } else if (lambda->parsed())
            print_quantities(vol, "lambda", {{"n", vol.n}, {"p", vol.p}}, {{"value", lambda_bound(vol.n, vol.p)}}, out);
        else if (sample_cmd->parsed()) run_sample(sample_args, out);
        else if (run->parsed()) return run_experiment(exp_args, out);
        else if (scan->parsed()) print_scan(convergence_scan(exp_args.config(), exp_args.n_from, exp_args.n_to), exp_args.output(), out);
        else if (replay->parsed()) return run_replay(exp_args, out, err);
        else if (kn->parsed()) run_kn(exp_args, out, err);
        else if (report->parsed()) run_report(report_args, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const GenericityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const EmptinessError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}

} // namespace polyspace::cli
