// rigikit: exact rigidity, spectral, and packing analysis of small graphs.
//
// Subcommands: analyze (graph6 -> per-graph reports), census (enumerate a
// regular stratum and tabulate), catalog (the built-in figure graphs).
// Exit codes: 0 ok, 2 parse error, 3 enumeration guard refusal,
// 4 expectation mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <condition_variable>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "rigi/catalog.hpp"
#include "rigi/census.hpp"
#include "rigi/graph.hpp"
#include "rigi/report.hpp"

using namespace rigi;
using ordered_json = nlohmann::ordered_json;

namespace {

int thread_budget(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("RIGIKIT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Order-preserving parallel map over input lines.
std::vector<std::string> parallel_reports(const std::vector<SimpleGraph>& graphs,
                                          const AnalyzeOptions& options, bool csv,
                                          int threads) {
    std::vector<std::string> out(graphs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= graphs.size()) return;
            PropertyReport r =
                analyze_graph(graphs[i], std::to_string(i + 1), options);
            out[i] = csv ? report_to_csv(r) : report_to_json(r);
        }
    };
    int used = std::max(1, std::min<int>(threads, static_cast<int>(graphs.size())));
    std::vector<std::thread> pool;
    for (int t = 0; t < used - 1; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

int run_analyze(const std::string& path, const std::vector<int>& dims, bool bounds,
                bool with_cross_check, const std::string& format, int threads) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) {
            std::cerr << "analyze: cannot open " << path << "\n";
            return 2;
        }
        in = &file;
    }
    std::vector<SimpleGraph> graphs;
    std::string line;
    long lineno = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1 && line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const Graph6ParseError& e) {
            std::cerr << "analyze: parse error on line " << lineno << ": " << e.what()
                      << "\n";
            return 2;
        }
    }
    AnalyzeOptions options;
    options.body_dimensions = dims;
    options.with_bounds = bounds;
    options.with_cross_check = with_cross_check;
    bool csv = format == "csv";
    if (csv) std::cout << report_csv_header() << "\n";
    for (const auto& s : parallel_reports(graphs, options, csv, thread_budget(threads)))
        std::cout << s << "\n";
    return 0;
}

struct Expectation {
    std::string field;
    long expected;
};

int run_census(int n, int k, bool bipartite, bool vertex_transitive, bool connected,
               bool force, const std::string& format, const std::string& dump_path,
               const std::vector<Expectation>& expectations) {
    CensusFilters filters;
    filters.connected = connected;
    filters.bipartite = bipartite;
    filters.vertex_transitive = vertex_transitive;

    std::ofstream dump;
    std::function<void(const SimpleGraph&)> dump_fn;
    if (!dump_path.empty()) {
        dump.open(dump_path);
        if (!dump) {
            std::cerr << "census: cannot open " << dump_path << "\n";
            return 2;
        }
        dump_fn = [&](const SimpleGraph& g) { dump << emit_graph6(g) << "\n"; };
    }

    CensusRow row;
    try {
        row = census_table(n, k, filters, force, dump_fn);
    } catch (const EnumerationGuardError& e) {
        std::cerr << "census: " << e.what() << "\n";
        return 3;
    }

    if (format == "csv") {
        std::cout << "n,k,connected,bipartite,vertex_transitive,total,ramanujan,rigid,"
                     "globally_rigid,rigid_not_gr\n";
        std::cout << row.n << ',' << row.k << ',' << (filters.connected ? 1 : 0) << ','
                  << (filters.bipartite ? 1 : 0) << ',' << (filters.vertex_transitive ? 1 : 0)
                  << ',' << row.total << ',' << row.ramanujan << ',' << row.rigid << ','
                  << row.globally_rigid << ',' << row.rigid_not_gr << "\n";
    } else {
        ordered_json j;
        j["n"] = row.n;
        j["k"] = row.k;
        j["filters"] = {{"connected", filters.connected},
                        {"bipartite", filters.bipartite},
                        {"vertex_transitive", filters.vertex_transitive}};
        j["total"] = row.total;
        j["ramanujan"] = row.ramanujan;
        j["rigid"] = row.rigid;
        j["globally_rigid"] = row.globally_rigid;
        j["rigid_not_gr"] = row.rigid_not_gr;
        ordered_json hist = ordered_json::object();
        for (auto [lambda, count] : row.edge_connectivity_histogram)
            hist[std::to_string(lambda)] = count;
        j["edge_connectivity_histogram"] = hist;
        std::cout << j.dump() << "\n";
    }

    for (const auto& e : expectations) {
        long actual = e.field == "total"            ? row.total
                      : e.field == "ramanujan"      ? row.ramanujan
                      : e.field == "rigid"          ? row.rigid
                      : e.field == "globally-rigid" ? row.globally_rigid
                                                    : row.rigid_not_gr;
        if (actual != e.expected) {
            std::cerr << "census: expected " << e.field << " = " << e.expected << ", got "
                      << actual << "\n";
            return 4;
        }
    }
    return 0;
}

int run_catalog(const std::string& action, const std::string& name) {
    if (action == "list") {
        for (const auto& entry_name : catalog_names()) {
            CatalogEntry e = catalog_get(entry_name);
            std::cout << entry_name << "  n=" << e.graph.vertex_count()
                      << " m=" << e.graph.edge_count() << "\n";
            for (const auto& f : e.asserted_facts)
                std::cout << "    " << f.property << " = " << f.expected << "  [" << f.source
                          << "]\n";
        }
        return 0;
    }
    if (action == "emit") {
        std::cout << emit_graph6(catalog_get(name).graph) << "\n";
        return 0;
    }
    if (action == "verify") {
        bool all_ok = true;
        for (const auto& entry_name : catalog_names()) {
            if (!name.empty() && name != entry_name) continue;
            auto fails = verify_catalog_entry(catalog_get(entry_name));
            if (fails.empty()) {
                std::cout << entry_name << ": pass\n";
            } else {
                all_ok = false;
                for (const auto& f : fails) std::cout << entry_name << ": FAIL " << f << "\n";
            }
        }
        return all_ok ? 0 : 4;
    }
    std::cerr << "catalog: unknown action " << action << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rigidity and spectral analysis of small graphs"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "analyze graph6 input, one report per line");
    std::string input = "-";
    std::vector<int> dims = {2, 3};
    bool with_bounds = false, with_cc = false;
    std::string format = "json";
    int threads = 0;
    analyze->add_option("input", input, "graph6 file ('-' for stdin)");
    analyze->add_option("--dims", dims, "body framework dimensions")->delimiter(',');
    analyze->add_flag("--bounds", with_bounds, "include the theorem-bound verdicts");
    analyze->add_flag("--cross-check", with_cc, "include cross-check violation list");
    analyze->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    analyze->add_option("--threads", threads, "parallelism (default RIGIKIT_THREADS)");

    // census
    auto* census = app.add_subcommand("census", "enumerate a regular stratum and tabulate");
    int n = 0, k = 0;
    bool bipartite = false, vertex_transitive = false, no_connected = false, force = false;
    std::string census_format = "json", dump_path;
    long exp_ramanujan = -1, exp_total = -1, exp_rigid = -1, exp_gr = -1, exp_rngr = -1;
    census->add_option("--n", n, "vertex count")->required();
    census->add_option("--k", k, "regular degree")->required();
    census->add_flag("--bipartite", bipartite, "restrict to bipartite graphs");
    census->add_flag("--vertex-transitive", vertex_transitive,
                     "vertex-transitive stratum (includes disconnected graphs; the "
                     "Ramanujan condition is applied to the non-trivial spectrum)");
    census->add_flag("--no-connected", no_connected, "include disconnected graphs");
    census->add_flag("--force", force, "override the desk-scale guards");
    census->add_option("--format", census_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    census->add_option("--dump-graph6", dump_path, "write the stratum as graph6 lines");
    census->add_option("--expect-ramanujan", exp_ramanujan, "exit 4 unless the count matches");
    census->add_option("--expect-total", exp_total, "exit 4 unless the count matches");
    census->add_option("--expect-rigid", exp_rigid, "exit 4 unless the count matches");
    census->add_option("--expect-globally-rigid", exp_gr, "exit 4 unless the count matches");
    census->add_option("--expect-rigid-not-gr", exp_rngr, "exit 4 unless the count matches");

    // catalog
    auto* catalog = app.add_subcommand("catalog", "the built-in figure graphs");
    std::string action = "list", catalog_name;
    catalog->add_option("action", action, "list | emit | verify")
        ->check(CLI::IsMember({"list", "emit", "verify"}));
    catalog->add_option("name", catalog_name, "catalog entry name");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed())
            return run_analyze(input, dims, with_bounds, with_cc, format, threads);
        if (census->parsed()) {
            std::vector<Expectation> expectations;
            if (exp_total >= 0) expectations.push_back({"total", exp_total});
            if (exp_ramanujan >= 0) expectations.push_back({"ramanujan", exp_ramanujan});
            if (exp_rigid >= 0) expectations.push_back({"rigid", exp_rigid});
            if (exp_gr >= 0) expectations.push_back({"globally-rigid", exp_gr});
            if (exp_rngr >= 0) expectations.push_back({"rigid-not-gr", exp_rngr});
            return run_census(n, k, bipartite, vertex_transitive, !no_connected, force,
                              census_format, dump_path, expectations);
        }
        if (catalog->parsed()) {
            if ((action == "emit") && catalog_name.empty()) {
                std::cerr << "catalog emit: name required\n";
                return 2;
            }
            return run_catalog(action, catalog_name);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
