#include "lved/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "lved/verifier.hpp"

namespace lved {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point at;
    bool armed = false;
    bool expired() const { return armed && Clock::now() > at; }
};

Deadline make_deadline(std::chrono::milliseconds cap) {
    Deadline d;
    if (cap.count() > 0) {
        d.armed = true;
        d.at = Clock::now() + cap;
    }
    return d;
}

// Candidate feasibility over bitmask graphs (n <= 22): per-edge counts plus
// the tight-cover duplicate test for the pair condition.
bool feasible_mask(const std::vector<uint64_t>& cov, uint64_t l) {
    std::vector<uint64_t> tight;
    for (uint64_t c : cov) {
        uint64_t hit = c & l;
        int count = std::popcount(hit);
        if (count < 2) return false;
        if (count == 2) {
            for (uint64_t t : tight)
                if (t == hit) return false;
            tight.push_back(hit);
        }
    }
    return true;
}

ExactResult enumerate_exact(const Graph& g, const Deadline& deadline) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    std::vector<uint64_t> cov(m);
    for (int e = 0; e < m; ++e) {
        uint64_t mask = 0;
        for (int v : g.closed_edge_neighborhood(e)) mask |= uint64_t{1} << v;
        cov[e] = mask;
    }
    int start = m >= 2 ? 3 : 2;
    for (int s = std::min(start, n); s <= n; ++s) {
        std::vector<int> c(s);
        for (int i = 0; i < s; ++i) c[i] = i;
        while (true) {
            if (deadline.expired()) return {ExactResult::Status::CapExceeded, VertexSet(n)};
            uint64_t l = 0;
            for (int v : c) l |= uint64_t{1} << v;
            if (feasible_mask(cov, l))
                return {ExactResult::Status::Solved, VertexSet(n, c)};
            // next combination in lexicographic order
            int i = s - 1;
            while (i >= 0 && c[i] == n - s + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
        }
    }
    // unreachable for m >= 1: V(G) is always feasible
    return {ExactResult::Status::Solved, VertexSet(n)};
}

struct BnB {
    const Graph& g;
    Deadline deadline;
    bool hit_cap = false;
    int best_size;  // strict upper bound on sizes still searched
    std::optional<VertexSet> best;
    int decision_k = -1;  // >= 0: stop as soon as a set of size <= k is found

    BnB(const Graph& g_, Deadline d, int initial_bound)
        : g(g_), deadline(d), best_size(initial_bound) {}

    bool done() const {
        return hit_cap || (decision_k >= 0 && best.has_value());
    }

    void search(VertexSet& cur, VertexSet& forbidden) {
        if (done()) return;
        if (deadline.expired()) {
            hit_cap = true;
            return;
        }
        if (cur.size() >= best_size) return;
        Verdict v = is_lved_set(g, cur, PairCheck::Local);
        if (v.ok) {
            best = cur;
            best_size = cur.size();
            return;
        }
        std::vector<int> cands;
        if (v.kind == Verdict::Kind::EdgeCount) {
            cands = g.closed_edge_neighborhood(v.edge_a);
        } else {
            auto a = g.closed_edge_neighborhood(v.edge_a);
            auto b = g.closed_edge_neighborhood(v.edge_b);
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(cands));
        }
        std::erase_if(cands, [&](int x) { return cur.contains(x) || forbidden.contains(x); });
        std::vector<int> newly_forbidden;
        for (int x : cands) {
            cur.insert(x);
            search(cur, forbidden);
            cur.erase(x);
            if (done()) break;
            forbidden.insert(x);
            newly_forbidden.push_back(x);
        }
        for (int x : newly_forbidden) forbidden.erase(x);
    }
};

}  // namespace

ExactResult min_lved_exact(const Graph& g, const ExactOptions& opts) {
    const int n = g.num_vertices();
    if (g.num_edges() == 0) return {ExactResult::Status::Solved, VertexSet(n)};
    Deadline deadline = make_deadline(opts.time_cap);
    if (n <= opts.enumeration_limit && n <= 62) return enumerate_exact(g, deadline);
    BnB bnb(g, deadline, n + 1);
    VertexSet cur(n), forbidden(n);
    bnb.search(cur, forbidden);
    if (bnb.hit_cap)
        return {ExactResult::Status::CapExceeded,
                bnb.best.value_or(VertexSet(n))};
    return {ExactResult::Status::Solved, *bnb.best};
}

ProbeResult probe_min_exceeds(const Graph& g, int k, std::chrono::milliseconds cap) {
    if (g.num_edges() == 0) return k >= 0 ? ProbeResult::Refuted : ProbeResult::Confirmed;
    BnB bnb(g, make_deadline(cap), k + 1);
    bnb.decision_k = k;
    VertexSet cur(g.num_vertices()), forbidden(g.num_vertices());
    bnb.search(cur, forbidden);
    if (bnb.best.has_value()) return ProbeResult::Refuted;
    return bnb.hit_cap ? ProbeResult::Unknown : ProbeResult::Confirmed;
}

}  // namespace lved
