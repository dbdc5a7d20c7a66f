#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "lved/interval.hpp"
#include "lved/verifier.hpp"

namespace lved {

void IntervalRepresentation::validate(const Graph& g) const {
    const int n = size();
    if (n != g.num_vertices() || static_cast<int>(right.size()) != n)
        throw std::invalid_argument("interval representation size mismatch");
    std::vector<double> endpoints;
    endpoints.reserve(2 * n);
    for (int v = 0; v < n; ++v) {
        if (!(left[v] < right[v])) throw std::invalid_argument("interval with l >= r");
        endpoints.push_back(left[v]);
        endpoints.push_back(right[v]);
    }
    std::sort(endpoints.begin(), endpoints.end());
    if (std::adjacent_find(endpoints.begin(), endpoints.end()) != endpoints.end())
        throw std::invalid_argument("interval endpoints are not distinct");

    // Proper: in left-endpoint order the right endpoints must also increase.
    std::vector<int> by_left(n);
    for (int v = 0; v < n; ++v) by_left[v] = v;
    std::sort(by_left.begin(), by_left.end(),
              [&](int a, int b) { return left[a] < left[b]; });
    for (int i = 0; i + 1 < n; ++i)
        if (right[by_left[i]] > right[by_left[i + 1]])
            throw std::invalid_argument("interval representation is not proper");

    // Consistency: every edge intersects, and the number of intersecting
    // pairs equals m (sweep over left endpoints).
    for (auto [u, v] : g.edges())
        if (!(left[u] < right[v] && left[v] < right[u]))
            throw std::invalid_argument("edge endpoints have disjoint intervals");
    long long pairs = 0;
    std::vector<double> active_rights;
    for (int idx : by_left) {
        double l = left[idx];
        active_rights.erase(
            std::remove_if(active_rights.begin(), active_rights.end(),
                           [&](double r) { return r < l; }),
            active_rights.end());
        pairs += static_cast<long long>(active_rights.size());
        active_rights.push_back(right[idx]);
        if (pairs > g.num_edges()) break;
    }
    if (pairs != g.num_edges())
        throw std::invalid_argument("interval intersections do not match edge set");
}

EdgeOrder edge_interval_order(const Graph& g, const IntervalRepresentation& iv) {
    iv.validate(g);
    EdgeOrder order;
    const int m = g.num_edges();
    order.oriented.resize(m);
    order.sigma.resize(m);
    for (int e = 0; e < m; ++e) {
        auto [a, b] = g.edge(e);
        order.oriented[e] = iv.right[a] < iv.right[b] ? std::pair{a, b} : std::pair{b, a};
        order.sigma[e] = e;
    }
    std::sort(order.sigma.begin(), order.sigma.end(), [&](int e, int f) {
        auto [ue, ve] = order.oriented[e];
        auto [uf, vf] = order.oriented[f];
        if (ve != vf) return iv.right[ve] < iv.right[vf];
        return iv.right[ue] < iv.right[uf];
    });
    return order;
}

std::vector<int> top_q(const std::vector<int>& s, int q, const IntervalRepresentation& iv) {
    if (q < 0 || q > static_cast<int>(s.size()))
        throw std::invalid_argument("top_q: q out of range for the given set");
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end(),
              [&](int a, int b) { return iv.right[a] > iv.right[b]; });
    sorted.resize(q);
    return sorted;
}

namespace {

// Solver for one connected component (vertex ids are component-local).
class IntervalSolver {
public:
    IntervalSolver(const Graph& g, const IntervalRepresentation& iv,
                   const IntervalSolveOptions& opts)
        : g_(g), iv_(iv), opts_(opts), order_(edge_interval_order(g, iv)),
          in_l_(g.num_vertices(), 0) {
        // closed neighborhoods sorted by decreasing right endpoint
        nbr_desc_.resize(g.num_vertices());
        for (int v = 0; v < g_.num_vertices(); ++v) {
            auto nb = g_.neighbors(v);
            auto& list = nbr_desc_[v];
            list.assign(nb.begin(), nb.end());
            list.push_back(v);
            std::sort(list.begin(), list.end(),
                      [&](int a, int b) { return iv_.right[a] > iv_.right[b]; });
        }
    }

    VertexSet run() {
        const int m = g_.num_edges();
        int i = 0;
        while (i < m) {
            int cnt = prefix_count(order_.sigma[i]);
            if (cnt >= 3) {
                ++i;
                continue;
            }
            add_top(order_.sigma[i], 2 - cnt);
            if (opts_.debug_invariants && prefix_count_exact(order_.sigma[i]) < 2)
                throw std::logic_error("round 1 left the current edge under-covered");
            int min_idx = -1;
            bool via_min1 = false;
            for (int k = i + 1; k < m; ++k) {
                int ck = prefix_count(order_.sigma[k]);
                if (ck <= 2) {
                    min_idx = k;
                    via_min1 = ck < 2;
                    break;
                }
            }
            if (opts_.debug_invariants) check_skipped(i, min_idx);
            if (min_idx == -1) {
                if (opts_.debug_invariants) check_processed(m - 1, m);
                break;
            }
            if (via_min1)
                add_top(order_.sigma[min_idx], 2 - prefix_count(order_.sigma[min_idx]));
            else
                add_top(order_.sigma[min_idx], 1);
            if (opts_.debug_invariants) check_processed(i, min_idx);
            i = min_idx;
        }
        VertexSet out(g_.num_vertices());
        for (int v : l_) out.insert(v);
        return out;
    }

private:
    // |N[e] ∩ L| capped at 3. Members of L covering any earlier edge form a
    // prefix of the decreasing-right-endpoint order, so it suffices to count
    // leading entries with r(v) >= l(e).
    int prefix_count(int edge) const {
        double le = iv_.left[order_.oriented[edge].first];
        int cnt = 0;
        for (int v : l_) {
            if (iv_.right[v] < le || cnt == 3) break;
            ++cnt;
        }
        return cnt;
    }

    int prefix_count_exact(int edge) const {
        int cnt = 0;
        for (int v : g_.closed_edge_neighborhood(edge))
            if (in_l_[v]) ++cnt;
        return cnt;
    }

    // Insert the top-q vertices of N[e] \ L (by right endpoint) into L.
    void add_top(int edge, int q) {
        if (q <= 0) return;
        auto [u, v] = order_.oriented[edge];
        const auto& a = nbr_desc_[u];
        const auto& b = nbr_desc_[v];
        std::size_t ia = 0, ib = 0;
        int added = 0;
        int last = -1;
        while (added < q) {
            int pick = -1;
            if (ia < a.size() && ib < b.size())
                pick = iv_.right[a[ia]] > iv_.right[b[ib]] ? a[ia++] : b[ib++];
            else if (ia < a.size())
                pick = a[ia++];
            else if (ib < b.size())
                pick = b[ib++];
            else
                throw std::logic_error("top_q pool exhausted in interval solver");
            if (pick == last || in_l_[pick]) continue;
            last = pick;
            insert_sorted(pick);
            ++added;
        }
    }

    void insert_sorted(int v) {
        in_l_[v] = 1;
        auto pos = l_.begin();
        int depth = 0;
        while (pos != l_.end() && iv_.right[*pos] > iv_.right[v]) {
            ++pos;
            ++depth;
        }
        if (opts_.debug_invariants && depth > 3)
            throw std::logic_error("insertion fell outside the first positions of L");
        l_.insert(pos, v);
    }

    // Skipped edges must already be covered three times.
    void check_skipped(int i, int min_idx) const {
        int hi = min_idx == -1 ? g_.num_edges() : min_idx;
        for (int j = i + 1; j < hi; ++j)
            if (prefix_count_exact(order_.sigma[j]) < 3)
                throw std::logic_error("skipped edge lacks triple coverage");
    }

    // Processed edges satisfy the per-edge bound; processed pairs (and pairs
    // reaching up to min or sharing neighborhood with e_i) the pair bound.
    void check_processed(int i, int min_idx) const {
        auto cover = [&](int pos) {
            std::vector<int> out;
            for (int v : g_.closed_edge_neighborhood(order_.sigma[pos]))
                if (in_l_[v]) out.push_back(v);
            return out;
        };
        auto union_size = [](const std::vector<int>& a, const std::vector<int>& b) {
            std::vector<int> u;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
            return static_cast<int>(u.size());
        };
        for (int k = 0; k <= i; ++k)
            if (static_cast<int>(cover(k).size()) < 2)
                throw std::logic_error("processed edge lacks double coverage");
        for (int k = 0; k <= i; ++k) {
            auto ck = cover(k);
            for (int a = k + 1; a < g_.num_edges(); ++a) {
                bool in_scope = a <= i || a <= min_idx;
                if (!in_scope) {
                    auto na = g_.closed_edge_neighborhood(order_.sigma[i]);
                    auto nb = g_.closed_edge_neighborhood(order_.sigma[a]);
                    std::vector<int> isect;
                    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                                          std::back_inserter(isect));
                    in_scope = !isect.empty();
                }
                if (in_scope && union_size(ck, cover(a)) < 3)
                    throw std::logic_error("edge pair lacks triple coverage");
            }
        }
    }

    const Graph& g_;
    const IntervalRepresentation& iv_;
    IntervalSolveOptions opts_;
    EdgeOrder order_;
    std::deque<int> l_;         // solution, decreasing right endpoint
    std::vector<char> in_l_;
    std::vector<std::vector<int>> nbr_desc_;
};

}  // namespace

VertexSet lved_proper_interval(const Graph& g, const IntervalRepresentation& iv,
                               const IntervalSolveOptions& opts) {
    iv.validate(g);
    VertexSet result(g.num_vertices());
    if (g.num_edges() == 0) return result;
    if (g.connected()) {
        VertexSet part = IntervalSolver(g, iv, opts).run();
        for (int v : part.members()) result.insert(v);
        return result;
    }
    for (const auto& comp : g.components()) {
        Graph sub = g.induced_subgraph(comp);
        if (sub.num_edges() == 0) continue;
        IntervalRepresentation sub_iv;
        for (int v : comp) {
            sub_iv.left.push_back(iv.left[v]);
            sub_iv.right.push_back(iv.right[v]);
        }
        VertexSet part = IntervalSolver(sub, sub_iv, opts).run();
        for (int v : part.members()) result.insert(comp[v]);
    }
    return result;
}

}  // namespace lved
