// fracolor: build, color, and check fractional powers of graphs.
//
// Exit codes: 0 success, 1 verified negative result (an impossibility
// established by a completed search or a failed certificate check),
// 2 error (bad flags, unreadable input, exhausted search budget).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fracolor/builtins.hpp"
#include "fracolor/certificate.hpp"
#include "fracolor/construct.hpp"
#include "fracolor/enumerate.hpp"
#include "fracolor/fracpow.hpp"
#include "fracolor/graph.hpp"
#include "fracolor/oracle.hpp"
#include "json.hpp"

namespace {

using namespace fracolor;

constexpr uint64_t kDefaultBudget = 200'000'000ULL;

struct Options {
    std::string graph_name;
    std::string graph_file;
    int m = 0, n = 0, k = 0, delta = 0;
    uint64_t budget = kDefaultBudget;
    std::string out;
    std::string format = "json";
    uint64_t seed = 0;  // reserved; all algorithms are deterministic
    bool recompute = false;
    std::string cert_file;
    int max_vertices = 6;
};

Graph load_graph(const Options& opt) {
    if (!opt.graph_name.empty() && !opt.graph_file.empty())
        throw GraphError("give either --graph or --graph-file, not both");
    if (!opt.graph_name.empty()) return builtin_graph(opt.graph_name);
    if (opt.graph_file.empty()) throw GraphError("a graph is required: --graph or --graph-file");
    std::ifstream in(opt.graph_file);
    if (!in) throw GraphError("cannot read " + opt.graph_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void write_output(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw GraphError("cannot write " + out);
    f << text << "\n";
}

// Writes via a temporary file and rename, so readers never see half a file.
void write_atomic(const std::string& text, const std::filesystem::path& path) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp);
        if (!f) throw GraphError("cannot write " + tmp.string());
        f << text << "\n";
    }
    std::filesystem::rename(tmp, path);
}

int cmd_build(const Options& opt) {
    Graph g = load_graph(opt);
    FracPowGraph fp(g, opt.m, opt.n);
    if (opt.format == "dot") {
        write_output(export_dot(fp.as_graph()), opt.out);
    } else if (opt.format == "text") {
        std::ostringstream os;
        os << "power " << opt.m << "/" << opt.n << " of a graph with " << g.num_vertices()
           << " vertices and " << g.num_edges() << " edges\n"
           << "vertices: " << fp.num_vertices() << "\nedges: " << fp.power_edge_count();
        write_output(os.str(), opt.out);
    } else {
        nlohmann::json doc;
        doc["kind"] = "power-graph";
        doc["m"] = opt.m;
        doc["n"] = opt.n;
        doc["base_vertices"] = g.num_vertices();
        doc["base_edges"] = g.num_edges();
        doc["num_vertices"] = fp.num_vertices();
        doc["num_edges"] = fp.power_edge_count();
        nlohmann::json names = nlohmann::json::array();
        for (int id = 0; id < fp.num_vertices(); ++id) names.push_back(fp.vertex_name(id));
        doc["vertex_names"] = std::move(names);
        nlohmann::json edges = nlohmann::json::array();
        Graph pg = fp.as_graph();
        for (auto [u, v] : pg.edges()) edges.push_back({u, v});
        doc["edges"] = std::move(edges);
        write_output(doc.dump(2), opt.out);
    }
    return 0;
}

int cmd_omega(const Options& opt) {
    int delta = opt.delta;
    Graph g;
    bool have_graph = !opt.graph_name.empty() || !opt.graph_file.empty();
    if (have_graph) {
        g = load_graph(opt);
        delta = g.max_degree();
    }
    if (delta <= 0) throw GraphError("give --delta or a graph");
    const int omega = omega_formula(delta, opt.m);
    std::cout << omega << "\n";
    if (have_graph && opt.n > 0) {
        FracPowGraph fp(g, opt.m, opt.n);
        CliqueResult mc = max_clique(fp, opt.budget);
        if (!mc.completed) {
            std::cerr << "clique search budget exhausted\n";
            return 2;
        }
        std::cout << "brute-force clique number: " << mc.size << "\n";
        if (mc.size != omega) {
            std::cout << "FINDING: formula and brute force disagree\n";
            return 1;
        }
        std::cout << "formula confirmed\n";
    }
    return 0;
}

int cmd_color(const Options& opt) {
    Graph g = load_graph(opt);
    ConstructResult r = color_fractional(g, opt.m, opt.n, opt.budget);
    if (!r.ok) {
        std::cerr << r.diagnostic << "\n";
        return r.diagnostic.rfind("FINDING", 0) == 0 ? 1 : 2;
    }
    FracPowGraph fp(g, opt.m, opt.n);
    if (auto viol = verify_coloring(fp, r.coloring)) {
        std::cerr << "internal error: coloring failed verification: " << viol->describe(fp)
                  << "\n";
        return 2;
    }
    if (opt.format == "text") {
        std::ostringstream os;
        os << "method: " << r.method << "\ncolors: " << r.colors_used
           << "\nclique bound: " << r.omega << "\noptimal: " << (r.optimal ? "yes" : "no");
        if (!r.diagnostic.empty()) os << "\nnote: " << r.diagnostic;
        write_output(os.str(), opt.out);
    } else if (opt.format == "dot") {
        std::vector<std::string> cols;
        for (const Color& c : r.coloring.at) cols.push_back(c.to_string());
        write_output(export_dot(fp.as_graph(), cols), opt.out);
    } else {
        write_output(coloring_certificate(g, opt.m, opt.n, r), opt.out);
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    std::ifstream in(opt.cert_file);
    if (!in) throw GraphError("cannot read " + opt.cert_file);
    std::stringstream buf;
    buf << in.rdbuf();
    CertificateCheck ck = check_certificate(buf.str(), opt.recompute, opt.budget);
    if (ck.ok) {
        std::cout << "VALID" << (ck.kind.empty() ? "" : " (" + ck.kind + ")") << ": "
                  << ck.message << "\n";
        return 0;
    }
    std::cout << "INVALID" << (ck.kind.empty() ? "" : " (" + ck.kind + ")") << ": " << ck.message
              << "\n";
    const bool malformed = ck.message.rfind("not valid JSON", 0) == 0 ||
                           ck.message.rfind("malformed certificate", 0) == 0;
    return malformed ? 2 : 1;
}

int cmd_chi(const Options& opt) {
    Graph g = load_graph(opt);
    FracPowGraph fp(g, opt.m, opt.n);
    ColoringSearch s = exact_chromatic(fp, opt.k, opt.budget);
    if (!opt.out.empty() || opt.format == "json")
        write_output(decision_certificate(g, opt.m, opt.n, opt.k, s), opt.out);
    if (s.verdict == Verdict::Yes) {
        std::cout << "yes: a proper " << opt.k << "-coloring exists (nodes=" << s.nodes << ")\n";
        return 0;
    }
    if (s.verdict == Verdict::No) {
        std::cout << "no: no proper " << opt.k << "-coloring exists (completed search, nodes="
                  << s.nodes << ")\n";
        return 1;
    }
    std::cout << "undecided: budget exhausted (nodes=" << s.nodes << ")\n";
    return 2;
}

int cmd_counterexample(const Options& opt) {
    PrismStudy st = prove_prism_counterexample(opt.budget);
    for (const std::string& line : st.argument) std::cout << line << "\n";
    std::cout << "clique number: " << st.omega << "\n";
    std::cout << "chromatic number: " << (st.chi > 0 ? std::to_string(st.chi) : "undecided")
              << "\n";
    if (!opt.out.empty() || opt.format == "json")
        write_output(counterexample_certificate(st), opt.out);
    if (st.argument_complete && st.chi == 6) {
        std::cout << "verified: the chromatic number exceeds the clique number\n";
        return 1;  // a verified impossibility: no coloring with clique-many colors
    }
    std::cerr << "the study did not complete\n";
    return 2;
}

int cmd_hunt(const Options& opt) {
    if (opt.m % 2 == 0 || opt.m < 3) throw GraphError("hunt explores odd m >= 3");
    if (opt.max_vertices < 4 || opt.max_vertices > 10)
        throw GraphError("--max-vertices must be between 4 and 10");
    std::filesystem::path dir = opt.out.empty() ? "hunt-results" : opt.out;
    std::filesystem::create_directories(dir);
    std::vector<std::string> certs;
    int gaps = 0, instances = 0;
    for (int nv = 4; nv <= opt.max_vertices; nv += 2) {
        std::vector<Graph> gs = connected_cubic_graphs(nv);
        for (size_t idx = 0; idx < gs.size(); ++idx) {
            const Graph& g = gs[idx];
            const std::string gid = "cubic" + std::to_string(nv) + "_" + std::to_string(idx + 1);
            for (int n = opt.m + 2; n <= 2 * opt.m + 1; ++n) {
                ++instances;
                ConstructResult r = color_fractional(g, opt.m, n, opt.budget);
                std::ostringstream line;
                line << gid << " " << opt.m << "/" << n << ": ";
                if (!r.ok) {
                    line << "unresolved: " << r.diagnostic;
                    std::cout << line.str() << "\n";
                    continue;
                }
                line << r.colors_used << " colors (clique bound " << r.omega << ", method "
                     << r.method << ")";
                if (r.colors_used > r.omega) {
                    ++gaps;
                    line << " GAP";
                }
                std::cout << line.str() << "\n";
                std::string cert = coloring_certificate(g, opt.m, n, r);
                write_atomic(cert, dir / (gid + "_m" + std::to_string(opt.m) + "_n" +
                                          std::to_string(n) + ".json"));
                certs.push_back(std::move(cert));
            }
        }
    }
    write_atomic(hunt_certificate(certs), dir / "hunt.json");
    std::cout << instances << " instances, " << gaps
              << " with more colors than the clique bound\n";
    return gaps > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional graph power coloring toolkit"};
    app.require_subcommand(1);
    Options opt;
    if (const char* env = std::getenv("FRACOLOR_BUDGET")) opt.budget = std::strtoull(env, nullptr, 10);

    auto add_graph_opts = [&](CLI::App* c) {
        c->add_option("--graph", opt.graph_name, "builtin graph name (K4, prism, petersen, K33, Q3, C9(1,2), ...)");
        c->add_option("--graph-file", opt.graph_file, "edge-list file");
    };
    auto add_budget = [&](CLI::App* c) {
        c->add_option("--budget", opt.budget, "search node budget (env FRACOLOR_BUDGET)");
    };
    auto add_common = [&](CLI::App* c) {
        c->add_option("--out", opt.out, "output path (default stdout)");
        c->add_option("--format", opt.format, "json | dot | text")
            ->check(CLI::IsMember({"json", "dot", "text"}));
        c->add_option("--seed", opt.seed, "reserved for randomized generation; unused");
    };

    CLI::App* build = app.add_subcommand("build", "construct the m/n power of a graph");
    add_graph_opts(build);
    build->add_option("--m", opt.m, "numerator")->required();
    build->add_option("--n", opt.n, "denominator")->required();
    add_common(build);

    CLI::App* omega = app.add_subcommand("omega", "clique number from the degree formula");
    add_graph_opts(omega);
    omega->add_option("--m", opt.m, "numerator")->required();
    omega->add_option("--delta", opt.delta, "maximum degree (alternative to a graph)");
    omega->add_option("--n", opt.n, "denominator: also cross-check by brute force");
    add_budget(omega);

    CLI::App* color = app.add_subcommand("color", "construct and certify a proper coloring");
    add_graph_opts(color);
    color->add_option("--m", opt.m, "numerator")->required();
    color->add_option("--n", opt.n, "denominator")->required();
    add_budget(color);
    add_common(color);

    CLI::App* verify = app.add_subcommand("verify", "check a certificate file");
    verify->add_option("certificate", opt.cert_file, "certificate JSON file")->required();
    verify->add_flag("--recompute", opt.recompute, "re-derive negative verdicts by fresh search");
    add_budget(verify);

    CLI::App* chi = app.add_subcommand("chi", "exact k-colorability decision");
    add_graph_opts(chi);
    chi->add_option("--m", opt.m, "numerator")->required();
    chi->add_option("--n", opt.n, "denominator")->required();
    chi->add_option("--k", opt.k, "number of colors")->required();
    add_budget(chi);
    add_common(chi);

    CLI::App* ce = app.add_subcommand("counterexample",
                                      "replay the chromatic gap on the triangular prism");
    add_budget(ce);
    add_common(ce);

    CLI::App* hunt = app.add_subcommand(
        "hunt", "color all small connected cubic graphs and record any clique-bound gaps");
    hunt->add_option("--m", opt.m, "odd numerator (default 3)")->default_val(3);
    hunt->add_option("--max-vertices", opt.max_vertices,
                     "largest cubic graphs to include (even, 4..10; default 6)");
    add_budget(hunt);
    hunt->add_option("--out", opt.out, "results directory (default hunt-results)");
    hunt->add_option("--seed", opt.seed, "reserved for randomized generation; unused");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return 2;
    }

    try {
        if (build->parsed()) return cmd_build(opt);
        if (omega->parsed()) return cmd_omega(opt);
        if (color->parsed()) return cmd_color(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (chi->parsed()) return cmd_chi(opt);
        if (ce->parsed()) return cmd_counterexample(opt);
        if (hunt->parsed()) return cmd_hunt(opt);
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
