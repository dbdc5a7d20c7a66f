#include "lved/verifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lved {

std::string Verdict::describe(const Graph& g) const {
    std::ostringstream os;
    auto edge_str = [&](int e) {
        auto [u, v] = g.edge(e);
        std::ostringstream s;
        s << "edge " << e << " (" << u << "," << v << ")";
        return s.str();
    };
    switch (kind) {
        case Kind::None:
            os << "ok";
            break;
        case Kind::EdgeCount:
            os << edge_str(edge_a) << ": |N[e] ∩ L| = " << actual << " < " << required;
            break;
        case Kind::PairCount:
            os << edge_str(edge_a) << " and " << edge_str(edge_b)
               << ": |(N[e] ∪ N[f]) ∩ L| = " << actual << " < " << required;
            break;
        case Kind::ForcedVertex:
            os << "vertex " << vertex << " has label R but is not in L";
            break;
        case Kind::VertexCount:
            os << "vertex " << vertex << ": |N[v] ∩ L| = " << actual << " < " << required;
            break;
    }
    return os.str();
}

namespace {

void check_host(const Graph& g, const VertexSet& l) {
    if (l.host_size() != g.num_vertices())
        throw std::invalid_argument("vertex set host size does not match graph");
}

// Members of N[e] ∩ L, sorted.
std::vector<int> edge_cover(const Graph& g, const VertexSet& l, int e) {
    std::vector<int> out;
    for (int v : g.closed_edge_neighborhood(e))
        if (l.contains(v)) out.push_back(v);
    return out;
}

int union_cover(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0, count = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j]))
            ++i;
        else if (i == a.size() || b[j] < a[i])
            ++j;
        else
            ++i, ++j;
        ++count;
    }
    return static_cast<int>(count);
}

Verdict lved_local(const Graph& g, const VertexSet& l) {
    const int m = g.num_edges();
    // Per-edge counts; remember the 2-element cover of tight edges. A pair
    // violates the >=3 bound iff both edges are covered by the same 2-set.
    std::map<std::pair<int, int>, std::pair<int, int>> tight;  // cover -> two lowest edge ids
    for (int e = 0; e < m; ++e) {
        int count = 0;
        int c0 = -1, c1 = -1;
        auto [x, y] = g.edge(e);
        auto scan = [&](int v) {
            if (l.contains(v)) {
                if (count == 0) c0 = v;
                else if (count == 1) c1 = v;
                ++count;
            }
        };
        // walk N[x] ∪ N[y] without materializing it
        auto nx = g.closed_vertex_neighborhood(x);
        auto ny = g.closed_vertex_neighborhood(y);
        std::size_t i = 0, j = 0;
        while (i < nx.size() || j < ny.size()) {
            int v;
            if (j == ny.size() || (i < nx.size() && nx[i] < ny[j]))
                v = nx[i++];
            else if (i == nx.size() || ny[j] < nx[i])
                v = ny[j++];
            else {
                v = nx[i++];
                ++j;
            }
            scan(v);
        }
        if (count < 2)
            return {false, Verdict::Kind::EdgeCount, e, -1, -1, 2, count};
        if (count == 2) {
            auto [it, fresh] = tight.try_emplace({c0, c1}, std::pair{e, -1});
            if (!fresh && it->second.second == -1) it->second.second = e;
        }
    }
    int best_a = -1, best_b = -1;
    for (const auto& [cover, ids] : tight) {
        auto [a, b] = ids;
        if (b == -1) continue;
        if (best_a == -1 || std::pair{a, b} < std::pair{best_a, best_b}) {
            best_a = a;
            best_b = b;
        }
    }
    if (best_a != -1)
        return {false, Verdict::Kind::PairCount, best_a, best_b, -1, 3, 2};
    return Verdict::pass();
}

Verdict lved_all_pairs(const Graph& g, const VertexSet& l) {
    const int m = g.num_edges();
    std::vector<std::vector<int>> cover(m);
    for (int e = 0; e < m; ++e) {
        cover[e] = edge_cover(g, l, e);
        if (static_cast<int>(cover[e].size()) < 2)
            return {false, Verdict::Kind::EdgeCount, e, -1, -1, 2,
                    static_cast<int>(cover[e].size())};
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            int u = union_cover(cover[a], cover[b]);
            if (u < 3) return {false, Verdict::Kind::PairCount, a, b, -1, 3, u};
        }
    return Verdict::pass();
}

}  // namespace

Verdict is_lved_set(const Graph& g, const VertexSet& l, PairCheck mode) {
    check_host(g, l);
    return mode == PairCheck::Local ? lved_local(g, l) : lved_all_pairs(g, l);
}

Verdict is_mlve_set(const LabeledBlockGraph& lg, const VertexSet& l, PairCheck mode) {
    const Graph& g = lg.base;
    check_host(g, l);
    if (!lg.labels_total()) throw std::invalid_argument("missing labels");
    const int n = g.num_vertices();
    const int m = g.num_edges();
    for (int v = 0; v < n; ++v)
        if (lg.t[v] == TLabel::R && !l.contains(v))
            return {false, Verdict::Kind::ForcedVertex, -1, -1, v, 0, 0};
    for (int v = 0; v < n; ++v) {
        if (lg.s[v] == 0) continue;
        int count = 0;
        for (int w : g.closed_vertex_neighborhood(v))
            if (l.contains(w)) ++count;
        if (count < lg.s[v])
            return {false, Verdict::Kind::VertexCount, -1, -1, v, lg.s[v], count};
    }
    std::vector<std::vector<int>> cover(m);
    for (int e = 0; e < m; ++e) {
        cover[e] = edge_cover(g, l, e);
        if (static_cast<int>(cover[e].size()) < lg.k[e])
            return {false, Verdict::Kind::EdgeCount, e, -1, -1, lg.k[e],
                    static_cast<int>(cover[e].size())};
    }
    // Pair condition. Disjoint-neighborhood pairs already follow from the
    // per-edge counts (k(e)+k(f) >= k(e)+k(f)-1), so Local restricts to
    // pairs whose closed neighborhoods intersect.
    std::vector<char> ball(n, 0);
    for (int a = 0; a < m; ++a) {
        std::vector<int> marked;
        if (mode == PairCheck::Local) {
            for (int w : g.closed_edge_neighborhood(a))
                for (int z : g.closed_vertex_neighborhood(w))
                    if (!ball[z]) {
                        ball[z] = 1;
                        marked.push_back(z);
                    }
        }
        for (int b = a + 1; b < m; ++b) {
            if (mode == PairCheck::Local) {
                auto [x, y] = g.edge(b);
                if (!ball[x] && !ball[y]) continue;  // N[a] ∩ N[b] == ∅
            }
            int required = std::max(lg.k[a] + lg.k[b] - 1, 0);
            if (required == 0) continue;
            int u = union_cover(cover[a], cover[b]);
            if (u < required) {
                for (int z : marked) ball[z] = 0;
                return {false, Verdict::Kind::PairCount, a, b, -1, required, u};
            }
        }
        for (int z : marked) ball[z] = 0;
    }
    return Verdict::pass();
}

}  // namespace lved
