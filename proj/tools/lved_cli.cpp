#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lved/block_decompose.hpp"
#include "lved/block_solver.hpp"
#include "lved/exact.hpp"
#include "lved/generators.hpp"
#include "lved/graph.hpp"
#include "lved/interval.hpp"
#include "lved/io.hpp"
#include "lved/reduction.hpp"
#include "lved/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

bool is_block_graph(const lved::Graph& g) {
    try {
        for (const auto& comp : g.components())
            lved::block_cut_decompose(g.induced_subgraph(comp));
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void dump_labels(std::ostream& out, const lved::LabeledBlockGraph& lg,
                 const std::vector<int>& ids) {
    for (int v = 0; v < lg.base.num_vertices(); ++v)
        out << "v " << ids[v] << ' ' << (lg.t[v] == lved::TLabel::R ? 'R' : 'B') << ' '
            << lg.s[v] << '\n';
    for (int e = 0; e < lg.base.num_edges(); ++e) {
        auto [u, v] = lg.base.edge(e);
        out << "e " << ids[u] << ' ' << ids[v] << ' ' << lg.k[e] << '\n';
    }
}

struct SolveArgs {
    std::string input;
    std::string algo = "auto";
    std::string format = "text";
    bool debug_invariants = false;
    bool do_dump_labels = false;
    long time_cap_ms = 0;
};

int run_solve(const SolveArgs& args) {
    lved::GraphFile gf;
    try {
        gf = lved::read_graph_file(args.input);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    }
    const lved::Graph& g = gf.graph;

    std::string algo = args.algo;
    if (algo == "auto") {
        if (is_block_graph(g))
            algo = "block";
        else if (gf.intervals)
            algo = "proper-interval";
        else
            algo = "exact";
    }

    lved::VertexSet solution(g.num_vertices());
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (algo == "block") {
            if (args.do_dump_labels && g.connected() && g.num_edges() > 0) {
                lved::BlockSolver solver(g);
                solver.hooks.after_iteration = [&](int block) {
                    std::vector<int> ids;
                    auto lg = solver.snapshot(&ids);
                    std::cout << "c labels after support block " << block << '\n';
                    dump_labels(std::cout, lg, ids);
                };
                solution = solver.solve();
            } else {
                solution = lved::lved_block(g);
            }
        } else if (algo == "proper-interval") {
            if (!gf.intervals) {
                std::cerr << "input error: no interval section in " << args.input << '\n';
                return kExitInput;
            }
            lved::IntervalSolveOptions opts;
            opts.debug_invariants = args.debug_invariants;
            solution = lved::lved_proper_interval(g, *gf.intervals, opts);
        } else if (algo == "exact") {
            lved::ExactOptions opts;
            opts.time_cap = std::chrono::milliseconds(args.time_cap_ms);
            auto res = lved::min_lved_exact(g, opts);
            if (!res.solved()) {
                std::cerr << "cap exceeded: exact search gave up\n";
                return kExitCap;
            }
            solution = res.set;
        } else {
            std::cerr << "input error: unknown algorithm '" << algo << "'\n";
            return kExitInput;
        }
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    }
    auto elapsed = std::chrono::steady_clock::now() - t0;

    // never trust the solver: re-check with the independent verifier
    auto verdict = lved::is_lved_set(g, solution);
    auto members = solution.members();
    if (args.format == "json") {
        nlohmann::json report{
            {"instance", args.input},
            {"n", g.num_vertices()},
            {"m", g.num_edges()},
            {"algorithm", algo},
            {"size", static_cast<int>(members.size())},
            {"vertices", members},
            {"wall_time_ns",
             std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count()},
            {"verified", verdict.ok},
        };
        if (!verdict.ok) report["witness"] = verdict.describe(g);
        std::cout << report.dump(2) << '\n';
    } else {
        std::cout << "algorithm " << algo << "\nsize " << members.size() << "\nvertices";
        for (int v : members) std::cout << ' ' << v;
        std::cout << "\nverified " << (verdict.ok ? "ok" : verdict.describe(g)) << '\n';
    }
    return verdict.ok ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum liar's vertex-edge domination toolkit"};
    app.require_subcommand(1);

    SolveArgs sargs;
    auto* solve = app.add_subcommand("solve", "solve one instance file");
    solve->add_option("input", sargs.input, "graph file")->required();
    solve->add_option("--algo", sargs.algo, "auto|exact|block|proper-interval")
        ->check(CLI::IsMember({"auto", "exact", "block", "proper-interval"}));
    solve->add_option("--format", sargs.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    solve->add_flag("--debug-invariants", sargs.debug_invariants,
                    "enable per-iteration loop-invariant assertions");
    solve->add_flag("--dump-labels", sargs.do_dump_labels,
                    "emit labeled-graph records after each support-block iteration");
    solve->add_option("--time-cap-ms", sargs.time_cap_ms, "cap for the exact search (0 = none)");

    std::string vgraph, vset;
    auto* verify = app.add_subcommand("verify", "check a vertex set against a graph");
    verify->add_option("graph", vgraph, "graph file")->required();
    verify->add_option("set", vset, "vertex-set file, one id per line")->required();

    std::string gkind, gout;
    std::uint64_t gseed = 1;
    int gn = 10, gmax_block = 5, gq = 2, gp = 4;
    double gspread = 3.0, gprob = 0.3;
    bool gplanted = false;
    auto* generate = app.add_subcommand("generate", "emit a random instance");
    generate->add_option("--kind", gkind, "block|pig|random|3dm")
        ->required()
        ->check(CLI::IsMember({"block", "pig", "random", "3dm"}));
    generate->add_option("--seed", gseed, "RNG seed");
    generate->add_option("--n", gn, "vertex count");
    generate->add_option("--max-block", gmax_block, "max clique size (block)");
    generate->add_option("--spread", gspread, "density control (pig)");
    generate->add_option("--prob", gprob, "edge probability (random)");
    generate->add_option("--q", gq, "elements per coordinate (3dm)");
    generate->add_option("--p", gp, "triple count (3dm)");
    generate->add_flag("--planted", gplanted, "plant a perfect matching (3dm)");
    generate->add_option("--out", gout, "output file (default stdout)");

    std::string rinput, rout, rtree, rwitness, rwitness_out;
    auto* reduce = app.add_subcommand("reduce", "build the 3-DM hardness gadget");
    reduce->add_option("--input", rinput, "3-DM instance file")->required();
    reduce->add_option("--out", rout, "gadget graph file")->required();
    reduce->add_option("--tree", rtree, "clique tree file");
    reduce->add_option("--witness", rwitness, "matching file (triple indices, one per line)");
    reduce->add_option("--witness-out", rwitness_out, "where to write the witness set");

    std::string bkind = "block", bsizes = "1000,10000,100000";
    int breps = 3;
    std::uint64_t bseed = 1;
    auto* bench = app.add_subcommand("bench", "CSV timing rows for a size ladder");
    bench->add_option("--kind", bkind, "block|pig")->check(CLI::IsMember({"block", "pig"}));
    bench->add_option("--sizes", bsizes, "comma-separated vertex counts");
    bench->add_option("--reps", breps, "repetitions per size");
    bench->add_option("--seed", bseed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) return run_solve(sargs);

    if (verify->parsed()) {
        try {
            auto gf = lved::read_graph_file(vgraph);
            auto ids = lved::read_vertex_set_file(vset);
            lved::VertexSet l(gf.graph.num_vertices());
            for (int v : ids) {
                if (!gf.graph.valid_vertex(v)) {
                    std::cerr << "input error: vertex " << v << " out of range\n";
                    return kExitInput;
                }
                l.insert(v);
            }
            auto verdict = lved::is_lved_set(gf.graph, l);
            if (verdict.ok) {
                std::cout << "ok\n";
                return kExitOk;
            }
            std::cout << verdict.describe(gf.graph) << '\n';
            return kExitVerifyFail;
        } catch (const std::exception& e) {
            std::cerr << "input error: " << e.what() << '\n';
            return kExitInput;
        }
    }

    if (generate->parsed()) {
        try {
            std::ostringstream buf;
            if (gkind == "block") {
                lved::write_graph(buf, lved::gen_block_graph(gseed, gn, gmax_block));
            } else if (gkind == "pig") {
                auto [g, iv] = lved::gen_proper_interval(gseed, gn, gspread);
                lved::write_graph(buf, g, &iv);
            } else if (gkind == "random") {
                lved::write_graph(buf, lved::gen_random_graph(gseed, gn, gprob));
            } else {
                lved::write_3dm(buf, lved::gen_3dm(gseed, gq, gp, gplanted));
            }
            if (gout.empty()) {
                std::cout << buf.str();
            } else {
                std::ofstream out(gout);
                if (!out) throw std::runtime_error("cannot open " + gout + " for writing");
                out << buf.str();
            }
            return kExitOk;
        } catch (const std::exception& e) {
            std::cerr << "input error: " << e.what() << '\n';
            return kExitInput;
        }
    }

    if (reduce->parsed()) {
        try {
            auto inst = lved::read_3dm_file(rinput);
            auto out = lved::reduce_3dm(inst);
            lved::write_graph_file(rout, out.graph);
            if (!rtree.empty()) {
                std::ofstream tf(rtree);
                if (!tf) throw std::runtime_error("cannot open " + rtree + " for writing");
                for (const auto& node : out.clique_nodes) {
                    bool first = true;
                    for (int v : node) {
                        tf << (first ? "" : " ") << out.vertex_names[v];
                        first = false;
                    }
                    tf << '\n';
                }
                for (auto [a, b] : out.tree_edges) tf << "t " << a << ' ' << b << '\n';
            }
            std::cout << "vertices " << out.graph.num_vertices() << "\ncliques "
                      << out.clique_nodes.size() << "\ntarget " << out.target_k << '\n';
            if (!rwitness.empty()) {
                auto matching = lved::read_vertex_set_file(rwitness);
                auto witness = lved::build_witness(out, inst, matching);
                auto members = witness.members();
                if (rwitness_out.empty()) {
                    lved::write_vertex_set(std::cout, members);
                } else {
                    std::ofstream wf(rwitness_out);
                    if (!wf) throw std::runtime_error("cannot open " + rwitness_out);
                    lved::write_vertex_set(wf, members);
                }
                auto verdict = lved::is_lved_set(out.graph, witness);
                std::cout << "witness " << members.size() << ' '
                          << (verdict.ok ? "ok" : verdict.describe(out.graph)) << '\n';
                if (!verdict.ok) return kExitVerifyFail;
            }
            return kExitOk;
        } catch (const std::exception& e) {
            std::cerr << "input error: " << e.what() << '\n';
            return kExitInput;
        }
    }

    // bench
    std::vector<int> sizes;
    {
        std::istringstream ss(bsizes);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) sizes.push_back(std::stoi(tok));
    }
    std::cout << "n,m,algo,time_ns\n";
    for (int n : sizes) {
        for (int rep = 0; rep < breps; ++rep) {
            std::uint64_t seed = bseed + 1000003ULL * rep + 17ULL * n;
            if (bkind == "block") {
                auto g = lved::gen_block_graph(seed, n);
                auto t0 = std::chrono::steady_clock::now();
                auto l = lved::lved_block(g);
                auto dt = std::chrono::steady_clock::now() - t0;
                std::cout << n << ',' << g.num_edges() << ",block,"
                          << std::chrono::duration_cast<std::chrono::nanoseconds>(dt).count()
                          << '\n';
                (void)l;
            } else {
                auto [g, iv] = lved::gen_proper_interval(seed, n);
                auto t0 = std::chrono::steady_clock::now();
                auto l = lved::lved_proper_interval(g, iv);
                auto dt = std::chrono::steady_clock::now() - t0;
                std::cout << n << ',' << g.num_edges() << ",proper-interval,"
                          << std::chrono::duration_cast<std::chrono::nanoseconds>(dt).count()
                          << '\n';
                (void)l;
            }
        }
    }
    return kExitOk;
}
