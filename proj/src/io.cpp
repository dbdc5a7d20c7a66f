#include "lved/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lved {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

template <typename T>
T parse_one(std::istringstream& ss, int line_no, const char* what) {
    T value;
    if (!(ss >> value)) fail(line_no, std::string("expected ") + what);
    return value;
}

void expect_end(std::istringstream& ss, int line_no) {
    std::string rest;
    if (ss >> rest) fail(line_no, "unexpected trailing token '" + rest + "'");
}

}  // namespace

GraphFile read_graph(std::istream& in) {
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_k;
    std::vector<std::pair<double, double>> intervals;
    std::vector<char> has_interval;
    std::vector<std::pair<TLabel, int>> vlabels;
    std::vector<char> has_vlabel;
    bool any_k = false, any_vlabel = false;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag == "c") continue;
        if (tag == "p") {
            if (n != -1) fail(line_no, "duplicate p line");
            n = parse_one<int>(ss, line_no, "vertex count");
            m = parse_one<int>(ss, line_no, "edge count");
            expect_end(ss, line_no);
            if (n < 0 || m < 0) fail(line_no, "negative count in p line");
            has_interval.assign(n, 0);
            has_vlabel.assign(n, 0);
            intervals.resize(n);
            vlabels.resize(n);
        } else if (n == -1) {
            fail(line_no, "record before the p line");
        } else if (tag == "e") {
            int u = parse_one<int>(ss, line_no, "endpoint");
            int v = parse_one<int>(ss, line_no, "endpoint");
            int k = 2;
            if (ss >> k) {
                any_k = true;
                if (k < 0 || k > 2) fail(line_no, "edge label out of {0,1,2}");
            }
            expect_end(ss, line_no);
            edges.emplace_back(u, v);
            edge_k.push_back(k);
        } else if (tag == "i") {
            int v = parse_one<int>(ss, line_no, "vertex id");
            double l = parse_one<double>(ss, line_no, "left endpoint");
            double r = parse_one<double>(ss, line_no, "right endpoint");
            expect_end(ss, line_no);
            if (v < 0 || v >= n) fail(line_no, "interval vertex out of range");
            if (has_interval[v]) fail(line_no, "duplicate interval for vertex");
            has_interval[v] = 1;
            intervals[v] = {l, r};
        } else if (tag == "v") {
            int v = parse_one<int>(ss, line_no, "vertex id");
            std::string t = parse_one<std::string>(ss, line_no, "t label");
            int s = parse_one<int>(ss, line_no, "s label");
            expect_end(ss, line_no);
            if (v < 0 || v >= n) fail(line_no, "label vertex out of range");
            if (t != "B" && t != "R") fail(line_no, "t label must be B or R");
            if (s < 0) fail(line_no, "negative s label");
            if (has_vlabel[v]) fail(line_no, "duplicate label for vertex");
            has_vlabel[v] = 1;
            any_vlabel = true;
            vlabels[v] = {t == "R" ? TLabel::R : TLabel::B, s};
        } else {
            fail(line_no, "unknown record '" + tag + "'");
        }
    }
    if (n == -1) fail(line_no, "missing p line");
    if (static_cast<int>(edges.size()) != m)
        fail(line_no, "edge count mismatch: p line says " + std::to_string(m) + ", found " +
                          std::to_string(edges.size()));

    GraphFile out;
    try {
        out.graph = Graph(n, edges);
    } catch (const std::invalid_argument& e) {
        fail(line_no, e.what());
    }
    bool full_intervals = n > 0 && std::all_of(has_interval.begin(), has_interval.end(),
                                               [](char c) { return c != 0; });
    bool some_interval = std::any_of(has_interval.begin(), has_interval.end(),
                                     [](char c) { return c != 0; });
    if (some_interval && !full_intervals) fail(line_no, "interval section incomplete");
    if (full_intervals) {
        IntervalRepresentation iv;
        for (auto [l, r] : intervals) {
            iv.left.push_back(l);
            iv.right.push_back(r);
        }
        out.intervals = std::move(iv);
    }
    if (any_k || any_vlabel) {
        LabeledBlockGraph lg(out.graph);
        for (int v = 0; v < n; ++v)
            if (has_vlabel[v]) {
                lg.t[v] = vlabels[v].first;
                lg.s[v] = vlabels[v].second;
            }
        // dedup may reorder nothing, but edge ids follow first occurrence
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            for (int e = 0; e < out.graph.num_edges(); ++e) {
                auto [a, b] = out.graph.edge(e);
                if ((a == std::min(u, v)) && (b == std::max(u, v))) {
                    lg.k[e] = edge_k[i];
                    break;
                }
            }
        }
        out.labels = std::move(lg);
    }
    return out;
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return read_graph(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_graph(std::ostream& out, const Graph& g, const IntervalRepresentation* iv,
                 const LabeledBlockGraph* labels) {
    out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        out << "e " << u << ' ' << v;
        if (labels) out << ' ' << labels->k[e];
        out << '\n';
    }
    if (iv)
        for (int v = 0; v < g.num_vertices(); ++v)
            out << "i " << v << ' ' << iv->left[v] << ' ' << iv->right[v] << '\n';
    if (labels)
        for (int v = 0; v < g.num_vertices(); ++v)
            out << "v " << v << ' ' << (labels->t[v] == TLabel::R ? 'R' : 'B') << ' '
                << labels->s[v] << '\n';
}

void write_graph_file(const std::string& path, const Graph& g,
                      const IntervalRepresentation* iv, const LabeledBlockGraph* labels) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_graph(out, g, iv, labels);
}

std::vector<int> read_vertex_set(std::istream& in) {
    std::vector<int> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok) || tok == "c") continue;
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            fail(line_no, "expected a vertex id, got '" + tok + "'");
        }
        expect_end(ss, line_no);
    }
    return out;
}

std::vector<int> read_vertex_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return read_vertex_set(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_vertex_set(std::ostream& out, const std::vector<int>& set) {
    for (int v : set) out << v << '\n';
}

ThreeDMInstance read_3dm(std::istream& in) {
    ThreeDMInstance inst;
    int p = -1;
    std::string line;
    int line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag == "c") continue;
        if (tag == "q") {
            if (have_header) fail(line_no, "duplicate q line");
            have_header = true;
            inst.q = parse_one<int>(ss, line_no, "element count");
            p = parse_one<int>(ss, line_no, "triple count");
            expect_end(ss, line_no);
            if (inst.q < 1 || p < 0) fail(line_no, "bad dimensions in q line");
        } else if (tag == "t") {
            if (!have_header) fail(line_no, "t record before the q line");
            std::array<int, 3> t;
            for (int& c : t) c = parse_one<int>(ss, line_no, "coordinate");
            expect_end(ss, line_no);
            inst.triples.push_back(t);
        } else {
            fail(line_no, "unknown record '" + tag + "'");
        }
    }
    if (!have_header) fail(line_no, "missing q line");
    if (inst.p() != p) fail(line_no, "triple count mismatch with q line");
    try {
        inst.validate();
    } catch (const std::invalid_argument& e) {
        fail(line_no, e.what());
    }
    return inst;
}

ThreeDMInstance read_3dm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return read_3dm(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_3dm(std::ostream& out, const ThreeDMInstance& inst) {
    out << "q " << inst.q << ' ' << inst.p() << '\n';
    for (const auto& t : inst.triples) out << "t " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

}  // namespace lved
