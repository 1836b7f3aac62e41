// Command-line front end: rank nodes, pick seed sets, simulate cascades,
// sweep grids, measure seed dispersion, and benchmark scoring methods.
// Every output file is written atomically and gets a JSON manifest.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cks/cks.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

// Error with a fixed process exit code (1 = input/parse, 2 = bad parameters).
struct CliError : std::runtime_error {
    CliError(int exit_code, const std::string& message)
        : std::runtime_error(message), code(exit_code) {}
    int code;
};

// ---------------------------------------------------------------------------
// formatting
// ---------------------------------------------------------------------------

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string fixed6(double v) { return fixed(v, 6); }

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string iso8601_utc_now() {
    const std::time_t t =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// ---------------------------------------------------------------------------
// artifacts
// ---------------------------------------------------------------------------

// One tabular artifact; rendered as CSV or as a JSON array of row objects.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }

    std::string render(const std::string& format) const {
        if (format == "json") {
            ordered_json arr = ordered_json::array();
            for (const auto& row : rows) {
                ordered_json obj;
                for (std::size_t i = 0; i < columns.size(); ++i)
                    obj[columns[i]] = row[i];
                arr.push_back(std::move(obj));
            }
            return arr.dump(2) + "\n";
        }
        std::string out;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(columns[i]);
        }
        out += '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                out += csv_escape(row[i]);
            }
            out += '\n';
        }
        return out;
    }
};

void atomic_write(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
    }
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CliError(1, "cannot write file: " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw CliError(1, "write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

// Shared provenance fields, filled per subcommand and reused for every
// artifact that invocation produces.
struct Manifest {
    std::string subcommand;
    ordered_json parameters;
    ordered_json wall_times_ms;
    ordered_json results;  // optional summary numbers

    void write_for(const fs::path& artifact) const {
        ordered_json m;
        m["tool"] = "cks";
        m["version"] = "0.1.0";
        m["subcommand"] = subcommand;
        m["artifact"] = artifact.filename().string();
        m["parameters"] = parameters;
        m["wall_times_ms"] = wall_times_ms;
        if (!results.empty()) m["results"] = results;
        m["timestamp"] = iso8601_utc_now();
        fs::path path = artifact;
        path += ".manifest.json";
        atomic_write(path, m.dump(2) + "\n");
    }
};

void emit(const fs::path& out, const Table& table, const std::string& format,
          const Manifest& manifest) {
    atomic_write(out, table.render(format));
    manifest.write_for(out);
}

// ---------------------------------------------------------------------------
// inputs
// ---------------------------------------------------------------------------

cks::Graph load_graph(const std::string& path, bool directed, double* parse_ms) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError(1, "cannot open input file: " + path);
    if (directed)
        std::cerr << "note: directed input is symmetrized; all analyses are "
                     "undirected\n";
    cks::Graph g;
    const double ms = cks::time_ms([&] { g = cks::parse_edge_list(in); });
    if (parse_ms) *parse_ms = ms;
    return g;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

// Seed list: one node label per line, '#'/'%' comments, optional
// "node_label" header (the `seeds` subcommand's own output is accepted).
std::vector<cks::NodeId> read_seeds_file(const cks::Graph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError(1, "cannot open seeds file: " + path);
    std::vector<cks::NodeId> seeds;
    std::string line;
    std::size_t line_number = 0;
    bool saw_content = false;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string token = trim(line);
        if (token.empty() || token[0] == '#' || token[0] == '%') continue;
        if (!saw_content && token == "node_label") {
            saw_content = true;
            continue;
        }
        saw_content = true;
        const auto id = g.find_label(token);
        if (!id)
            throw std::invalid_argument("unknown node label in seeds file (line " +
                                        std::to_string(line_number) + "): " + token);
        seeds.push_back(*id);
    }
    if (seeds.empty()) throw std::invalid_argument("seeds file holds no seeds");
    return seeds;
}

// Grid syntax: "lo:hi:step" (inclusive, step > 0) or "v1,v2,..." or "v".
std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        double lo = 0, hi = 0, step = 0;
        char tail = 0;
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &lo, &hi, &step, &tail) != 3)
            throw std::invalid_argument("bad grid (expected lo:hi:step): " + text);
        if (step <= 0 || hi < lo)
            throw std::invalid_argument("bad grid range: " + text);
        const auto count =
            static_cast<std::size_t>((hi - lo) / step + 1e-9) + 1;
        for (std::size_t i = 0; i < count; ++i)
            grid.push_back(lo + static_cast<double>(i) * step);
        return grid;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string token =
            trim(text.substr(start, comma == std::string::npos ? std::string::npos
                                                               : comma - start));
        if (token.empty()) throw std::invalid_argument("bad grid value: " + text);
        try {
            std::size_t used = 0;
            const double v = std::stod(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            grid.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad grid value: " + token);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return grid;
}

cks::EncMode parse_enc_mode(const std::string& name) {
    if (name == "basic") return cks::EncMode::Basic;
    if (name == "extended") return cks::EncMode::Extended;
    throw std::invalid_argument("unknown enc mode: " + name);
}

// ---------------------------------------------------------------------------
// subcommand payloads
// ---------------------------------------------------------------------------

struct CommonArgs {
    std::string input;
    std::string out;
    std::string format = "csv";
    std::size_t threads = 0;  // 0 = all cores
    bool directed = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--input", args.input, "edge-list file (whitespace-delimited)")
        ->required();
    cmd->add_option("--out", args.out, "output file")->required();
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--threads", args.threads,
                    "worker threads (0 = all cores); results never depend on it")
        ->capture_default_str();
    cmd->add_flag("--directed", args.directed,
                  "accept directed input (edges are symmetrized)");
}

ordered_json common_params(const CommonArgs& args) {
    ordered_json p;
    p["input"] = args.input;
    p["out"] = args.out;
    p["format"] = args.format;
    p["threads_requested"] = args.threads;
    p["threads_resolved"] = cks::resolve_threads(args.threads);
    p["directed"] = args.directed;
    return p;
}

struct RankArgs {
    CommonArgs common;
    std::string method = "cks";
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> top;
    double resolution = 1.0;
    bool exclude_own_community = false;
    std::string enc_mode = "extended";
    std::string communities_out;
    std::string shells_out;
};

void add_method_options(CLI::App* cmd, RankArgs& args) {
    cmd->add_option("--method", args.method, "scoring method")
        ->check(CLI::IsMember({"cks", "bc", "cc", "enc", "degree", "kshell"}))
        ->capture_default_str();
    cmd->add_option("--seed", args.seed, "master RNG seed")->required();
    cmd->add_option("--resolution", args.resolution,
                    "community detection resolution")
        ->capture_default_str();
    cmd->add_flag("--exclude-own-community", args.exclude_own_community,
                  "score only foreign-community connections");
    cmd->add_option("--enc-mode", args.enc_mode, "neighborhood-coreness variant")
        ->check(CLI::IsMember({"basic", "extended"}))
        ->capture_default_str();
}

cks::MethodOptions make_method_options(const RankArgs& args) {
    cks::MethodOptions options;
    options.rank.rng_seed = args.seed;
    options.rank.resolution = args.resolution;
    options.rank.exclude_own_community = args.exclude_own_community;
    options.rank.threads = args.common.threads;
    options.enc_mode = parse_enc_mode(args.enc_mode);
    return options;
}

ordered_json method_params(const RankArgs& args) {
    ordered_json p = common_params(args.common);
    p["method"] = args.method;
    p["seed"] = args.seed;
    p["resolution"] = args.resolution;
    p["exclude_own_community"] = args.exclude_own_community;
    p["enc_mode"] = args.enc_mode;
    return p;
}

// ---- rank -----------------------------------------------------------------

int run_rank(const RankArgs& args) {
    Manifest manifest;
    manifest.subcommand = "rank";
    manifest.parameters = method_params(args);
    if (args.top) manifest.parameters["top"] = *args.top;
    if (!args.communities_out.empty())
        manifest.parameters["communities_out"] = args.communities_out;
    if (!args.shells_out.empty())
        manifest.parameters["shells_out"] = args.shells_out;

    const cks::Method method = cks::parse_method(args.method);
    const bool wants_dumps =
        !args.communities_out.empty() || !args.shells_out.empty();
    if (wants_dumps && method != cks::Method::Cks)
        throw std::invalid_argument(
            "--communities/--shells only apply to --method cks");
    if (args.top && *args.top < 1)
        throw std::invalid_argument("--top must be at least 1");

    double parse_ms = 0;
    const cks::Graph g = load_graph(args.common.input, args.common.directed, &parse_ms);
    const auto options = make_method_options(args);

    cks::ScoreTable table;
    std::optional<cks::CksPipeline> pipeline;
    const double compute_ms = cks::time_ms([&] {
        if (method == cks::Method::Cks) {
            pipeline = cks::cks_pipeline(g, options.rank);
            table = pipeline->table;
        } else {
            table = cks::method_ranking(g, method, options).table;
        }
    });
    manifest.wall_times_ms["parse"] = parse_ms;
    manifest.wall_times_ms["compute"] = compute_ms;

    const std::size_t shown =
        args.top ? std::min<std::size_t>(*args.top, g.node_count())
                 : g.node_count();
    Table scores;
    scores.columns = {"rank", "node_label", "score"};
    for (std::size_t i = 0; i < shown; ++i) {
        const cks::NodeId v = table.ranking[i];
        scores.add_row({std::to_string(i + 1), g.label(v), fixed6(table.scores[v])});
    }
    emit(args.common.out, scores, args.common.format, manifest);

    if (!args.communities_out.empty()) {
        Table dump;
        dump.columns = {"node_label", "community_id"};
        for (cks::NodeId v = 0; v < g.node_count(); ++v)
            dump.add_row({g.label(v), std::to_string(pipeline->partition.assignment[v])});
        emit(args.communities_out, dump, args.common.format, manifest);
    }
    if (!args.shells_out.empty()) {
        const auto global = cks::kshell(g);
        Table dump;
        dump.columns = {"node_label", "community_id", "community_shell",
                        "global_shell"};
        for (cks::NodeId v = 0; v < g.node_count(); ++v)
            dump.add_row({g.label(v),
                          std::to_string(pipeline->partition.assignment[v]),
                          std::to_string(pipeline->community_shells.shell[v]),
                          std::to_string(global.shell[v])});
        emit(args.shells_out, dump, args.common.format, manifest);
    }
    return 0;
}

// ---- seeds ------------------------------------------------------------------

struct SeedsArgs {
    RankArgs rank;
    std::optional<std::uint64_t> k;
    std::optional<double> fraction;
};

int run_seeds(const SeedsArgs& args) {
    if (args.k.has_value() == args.fraction.has_value())
        throw std::invalid_argument("give exactly one of --k / --fraction");

    Manifest manifest;
    manifest.subcommand = "seeds";
    manifest.parameters = method_params(args.rank);
    if (args.k) manifest.parameters["k"] = *args.k;
    if (args.fraction) manifest.parameters["fraction"] = *args.fraction;

    double parse_ms = 0;
    const cks::Graph g =
        load_graph(args.rank.common.input, args.rank.common.directed, &parse_ms);
    const auto options = make_method_options(args.rank);
    const cks::Method method = cks::parse_method(args.rank.method);

    const std::size_t k =
        args.k ? static_cast<std::size_t>(*args.k)
               : cks::fraction_to_k(g.node_count(), *args.fraction);

    cks::ScoreTable table;
    const double compute_ms = cks::time_ms(
        [&] { table = cks::method_ranking(g, method, options).table; });
    const auto seeds = cks::select_seeds(table, k);
    manifest.wall_times_ms["parse"] = parse_ms;
    manifest.wall_times_ms["compute"] = compute_ms;
    manifest.results["k"] = k;

    Table out;
    out.columns = {"node_label"};
    for (const auto v : seeds) out.add_row({g.label(v)});
    emit(args.rank.common.out, out, args.rank.common.format, manifest);
    return 0;
}

// ---- simulate ---------------------------------------------------------------

struct SimulateArgs {
    CommonArgs common;
    std::string seeds_file;
    double p = 0.1;
    std::uint32_t runs = 100;
    std::uint64_t seed = 0;
};

int run_simulate(const SimulateArgs& args) {
    Manifest manifest;
    manifest.subcommand = "simulate";
    manifest.parameters = common_params(args.common);
    manifest.parameters["seeds_file"] = args.seeds_file;
    manifest.parameters["p"] = args.p;
    manifest.parameters["runs"] = args.runs;
    manifest.parameters["seed"] = args.seed;

    double parse_ms = 0;
    const cks::Graph g = load_graph(args.common.input, args.common.directed, &parse_ms);
    const auto seeds = read_seeds_file(g, args.seeds_file);

    cks::DiffusionConfig cfg;
    cfg.activation_probability = args.p;
    cfg.runs = args.runs;
    cfg.master_seed = args.seed;

    cks::DiffusionOutcome outcome;
    const double compute_ms = cks::time_ms(
        [&] { outcome = cks::monte_carlo(g, seeds, cfg, args.common.threads); });
    manifest.wall_times_ms["parse"] = parse_ms;
    manifest.wall_times_ms["compute"] = compute_ms;

    const double n = static_cast<double>(g.node_count());
    double mean_infected = 0;
    for (const auto c : outcome.infected_counts)
        mean_infected += static_cast<double>(c);
    mean_infected /= static_cast<double>(outcome.infected_counts.size());
    manifest.results["mean_fis"] = outcome.mean_fis;
    manifest.results["std_fis"] = outcome.std_fis;
    manifest.results["mean_infected"] = mean_infected;

    Table runs;
    runs.columns = {"run", "infected", "fis"};
    for (std::size_t i = 0; i < outcome.infected_counts.size(); ++i) {
        const auto c = outcome.infected_counts[i];
        runs.add_row({std::to_string(i + 1), std::to_string(c),
                      fixed6(static_cast<double>(c) / n)});
    }
    runs.add_row({"mean", fixed6(mean_infected), fixed6(outcome.mean_fis)});
    emit(args.common.out, runs, args.common.format, manifest);
    return 0;
}

// ---- sweep ------------------------------------------------------------------

struct SweepArgs {
    RankArgs rank;
    std::string sweep_var;
    std::string grid_text;
    double fraction = cks::kDefaultSweepFraction;
    double p = 0.1;
    std::uint32_t runs = 100;
    bool p_given = false;
    bool fraction_given = false;
};

int run_sweep(const SweepArgs& args) {
    if (args.sweep_var == "p" && args.p_given)
        throw std::invalid_argument("--p clashes with --sweep p (use --grid)");
    if (args.sweep_var == "fraction" && args.fraction_given)
        throw std::invalid_argument(
            "--fraction clashes with --sweep fraction (use --grid)");

    Manifest manifest;
    manifest.subcommand = "sweep";
    manifest.parameters = method_params(args.rank);
    manifest.parameters["sweep"] = args.sweep_var;
    manifest.parameters["grid"] = args.grid_text;
    manifest.parameters["fraction"] = args.fraction;
    manifest.parameters["p"] = args.p;
    manifest.parameters["runs"] = args.runs;

    double parse_ms = 0;
    const cks::Graph g =
        load_graph(args.rank.common.input, args.rank.common.directed, &parse_ms);
    const auto options = make_method_options(args.rank);
    const cks::Method method = cks::parse_method(args.rank.method);
    const auto grid = parse_grid(args.grid_text);

    cks::DiffusionConfig base;
    base.activation_probability = args.p;
    base.runs = args.runs;
    base.master_seed = args.rank.seed;

    cks::SweepResult result;
    const double compute_ms = cks::time_ms([&] {
        if (args.sweep_var == "p")
            result = cks::sweep_p(g, method, grid, args.fraction, base, options,
                                  args.rank.common.threads);
        else
            result = cks::sweep_fraction(g, method, grid, base, options,
                                         args.rank.common.threads);
    });
    manifest.wall_times_ms["parse"] = parse_ms;
    manifest.wall_times_ms["compute"] = compute_ms;

    Table sweep;
    sweep.columns = {"method", "grid_var", "grid_value",
                     "mean_fis", "std_fis", "runs"};
    for (const auto& point : result.points)
        sweep.add_row({cks::method_name(result.method), result.grid_var,
                       fixed6(point.grid_value), fixed6(point.mean_fis),
                       fixed6(point.std_fis), std::to_string(point.runs)});
    emit(args.rank.common.out, sweep, args.rank.common.format, manifest);
    return 0;
}

// ---- aspl -------------------------------------------------------------------

struct AsplArgs {
    CommonArgs common;
    std::string seeds_file;
};

int run_aspl(const AsplArgs& args) {
    Manifest manifest;
    manifest.subcommand = "aspl";
    manifest.parameters = common_params(args.common);
    manifest.parameters["seeds_file"] = args.seeds_file;

    double parse_ms = 0;
    const cks::Graph g = load_graph(args.common.input, args.common.directed, &parse_ms);
    const auto seeds = read_seeds_file(g, args.seeds_file);

    cks::AsplResult result;
    const double compute_ms =
        cks::time_ms([&] { result = cks::aspl_among_seeds(g, seeds); });
    manifest.wall_times_ms["parse"] = parse_ms;
    manifest.wall_times_ms["compute"] = compute_ms;
    if (result.mean) manifest.results["mean_aspl"] = *result.mean;

    Table out;
    out.columns = {"seed_count", "reachable_pairs", "unreachable_pairs",
                   "mean_aspl"};
    out.add_row({std::to_string(result.seed_count),
                 std::to_string(result.reachable_pairs),
                 std::to_string(result.unreachable_pairs),
                 result.mean ? fixed6(*result.mean) : "undefined"});
    emit(args.common.out, out, args.common.format, manifest);
    return 0;
}

// ---- bench ------------------------------------------------------------------

struct BenchArgs {
    RankArgs rank;
    std::string methods = "cks,bc,cc,enc,degree,kshell";
};

int run_bench(const BenchArgs& args) {
    Manifest manifest;
    manifest.subcommand = "bench";
    manifest.parameters = method_params(args.rank);
    manifest.parameters["methods"] = args.methods;
    manifest.parameters.erase("method");  // per-method rows instead

    double parse_ms = 0;
    const cks::Graph g =
        load_graph(args.rank.common.input, args.rank.common.directed, &parse_ms);
    const auto options = make_method_options(args.rank);
    manifest.wall_times_ms["parse"] = parse_ms;

    std::vector<cks::Method> methods;
    std::size_t start = 0;
    while (start <= args.methods.size()) {
        const auto comma = args.methods.find(',', start);
        const std::string token = trim(
            args.methods.substr(start, comma == std::string::npos
                                           ? std::string::npos
                                           : comma - start));
        if (token.empty())
            throw std::invalid_argument("bad --methods list: " + args.methods);
        methods.push_back(cks::parse_method(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }

    // Timing covers the complete scoring pass per method; for cks that
    // includes community detection, which is part of the pipeline.
    manifest.results["timing_note"] =
        "cks seconds include community detection (full scoring pipeline)";

    Table bench;
    bench.columns = {"method", "seconds"};
    for (const auto method : methods) {
        const auto timed = cks::time_method(g, method, options);
        bench.add_row({cks::method_name(method),
                       fixed(timed.milliseconds / 1000.0, 3)});
        manifest.results[std::string("ms_") + cks::method_name(method)] =
            timed.milliseconds;
    }
    emit(args.rank.common.out, bench, args.rank.common.format, manifest);
    return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// entry point: exit 0 success, 1 input/parse errors, 2 invalid parameters
// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{"community-aware k-shell influence toolkit"};
    app.require_subcommand(1);

    RankArgs rank_args;
    auto* rank_cmd = app.add_subcommand("rank", "score and rank every node");
    add_common(rank_cmd, rank_args.common);
    add_method_options(rank_cmd, rank_args);
    std::uint64_t top_value = 0;
    auto* top_opt = rank_cmd->add_option("--top", top_value,
                                         "only write the best K rows");
    rank_cmd->add_option("--communities", rank_args.communities_out,
                         "also dump node -> community (cks only)");
    rank_cmd->add_option("--shells", rank_args.shells_out,
                         "also dump per-community and global shells (cks only)");

    SeedsArgs seeds_args;
    auto* seeds_cmd = app.add_subcommand("seeds", "pick a top-k seed set");
    add_common(seeds_cmd, seeds_args.rank.common);
    add_method_options(seeds_cmd, seeds_args.rank);
    std::uint64_t k_value = 0;
    double fraction_value = 0;
    auto* k_opt = seeds_cmd->add_option("--k", k_value, "seed count");
    auto* fraction_opt = seeds_cmd->add_option(
        "--fraction", fraction_value, "seed fraction of n (k = max(1, round(f*n)))");

    SimulateArgs simulate_args;
    auto* simulate_cmd =
        app.add_subcommand("simulate", "Monte-Carlo independent-cascade runs");
    add_common(simulate_cmd, simulate_args.common);
    simulate_cmd->add_option("--seeds-file", simulate_args.seeds_file,
                             "file with one seed label per line")
        ->required();
    simulate_cmd->add_option("--p", simulate_args.p, "activation probability")
        ->capture_default_str();
    simulate_cmd->add_option("--runs", simulate_args.runs, "simulation runs")
        ->capture_default_str();
    simulate_cmd->add_option("--seed", simulate_args.seed, "master RNG seed")
        ->required();

    SweepArgs sweep_args;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "spread curves over a parameter grid");
    add_common(sweep_cmd, sweep_args.rank.common);
    add_method_options(sweep_cmd, sweep_args.rank);
    sweep_cmd->add_option("--sweep", sweep_args.sweep_var, "swept variable")
        ->check(CLI::IsMember({"p", "fraction"}))
        ->required();
    sweep_cmd->add_option("--grid", sweep_args.grid_text,
                          "grid: lo:hi:step or v1,v2,...")
        ->required();
    auto* sweep_fraction_opt =
        sweep_cmd->add_option("--fraction", sweep_args.fraction,
                              "seed fraction when sweeping p")
            ->capture_default_str();
    auto* sweep_p_opt = sweep_cmd->add_option(
        "--p", sweep_args.p, "activation probability when sweeping fraction");
    sweep_p_opt->capture_default_str();
    sweep_cmd->add_option("--runs", sweep_args.runs, "simulation runs per point")
        ->capture_default_str();

    AsplArgs aspl_args;
    auto* aspl_cmd = app.add_subcommand(
        "aspl", "average shortest-path length among seed nodes");
    add_common(aspl_cmd, aspl_args.common);
    aspl_cmd->add_option("--seeds-file", aspl_args.seeds_file,
                         "file with one seed label per line")
        ->required();

    BenchArgs bench_args;
    auto* bench_cmd =
        app.add_subcommand("bench", "wall-time one scoring pass per method");
    add_common(bench_cmd, bench_args.rank.common);
    add_method_options(bench_cmd, bench_args.rank);
    bench_cmd->add_option("--methods", bench_args.methods,
                          "comma list of methods to time")
        ->capture_default_str();

    try {
        app.parse(argc, argv);

        if (app.got_subcommand(rank_cmd)) {
            if (top_opt->count()) rank_args.top = top_value;
            return run_rank(rank_args);
        }
        if (app.got_subcommand(seeds_cmd)) {
            if (k_opt->count()) seeds_args.k = k_value;
            if (fraction_opt->count()) seeds_args.fraction = fraction_value;
            return run_seeds(seeds_args);
        }
        if (app.got_subcommand(simulate_cmd)) return run_simulate(simulate_args);
        if (app.got_subcommand(sweep_cmd)) {
            sweep_args.p_given = sweep_p_opt->count() > 0;
            sweep_args.fraction_given = sweep_fraction_opt->count() > 0;
            return run_sweep(sweep_args);
        }
        if (app.got_subcommand(aspl_cmd)) return run_aspl(aspl_args);
        if (app.got_subcommand(bench_cmd)) return run_bench(bench_args);
        return 2;  // unreachable: require_subcommand(1)
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code;
    } catch (const cks::ParseError& e) {
        std::cerr << "error: input line " << e.line << ": " << e.what() << '\n';
        return 1;
    } catch (const std::logic_error& e) {
        // invalid_argument / out_of_range / domain_error: bad parameters
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
