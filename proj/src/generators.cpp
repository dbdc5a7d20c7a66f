#include "lved/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace lved {

Graph gen_block_graph(std::uint64_t seed, int n, int max_block_size) {
    if (n < 1) throw std::invalid_argument("gen_block_graph: n must be >= 1");
    if (max_block_size < 2) throw std::invalid_argument("gen_block_graph: max block size < 2");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    int built = 1;
    while (built < n) {
        int attach = std::uniform_int_distribution<int>(0, built - 1)(rng);
        int size = std::uniform_int_distribution<int>(2, max_block_size)(rng);
        size = std::min(size, n - built + 1);
        std::vector<int> clique{attach};
        for (int j = 0; j < size - 1; ++j) clique.push_back(built++);
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b)
                edges.emplace_back(clique[a], clique[b]);
    }
    return Graph(n, edges);
}

std::pair<Graph, IntervalRepresentation> gen_proper_interval(std::uint64_t seed, int n,
                                                             double spread) {
    if (n < 1) throw std::invalid_argument("gen_proper_interval: n must be >= 1");
    std::mt19937_64 rng(seed);
    // Distinct integer left endpoints from bounded random gaps; a common
    // unit length u = k + 0.5 with k >= max gap makes consecutive intervals
    // intersect (connected), keeps every endpoint distinct, and unit length
    // rules out containment. `spread` scales the window relative to the
    // average gap of 2.5, so larger spread means denser graphs.
    constexpr int kMaxGap = 4;
    double u = std::max(kMaxGap, static_cast<int>(spread * 2.5)) + 0.5;
    std::uniform_int_distribution<int> gap(1, kMaxGap);
    std::vector<long long> sorted(n);
    long long cur = gap(rng);
    for (int i = 0; i < n; ++i) {
        sorted[i] = cur;
        cur += gap(rng);
    }
    // assign sorted positions to vertex ids via a random permutation
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    IntervalRepresentation iv;
    iv.left.resize(n);
    iv.right.resize(n);
    for (int pos = 0; pos < n; ++pos) {
        int v = perm[pos];
        iv.left[v] = static_cast<double>(sorted[pos]);
        iv.right[v] = sorted[pos] + u;
    }
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n && sorted[b] - sorted[a] < u; ++b)
            edges.emplace_back(perm[a], perm[b]);
    return {Graph(n, edges), std::move(iv)};
}

Graph gen_random_graph(std::uint64_t seed, int n, double edge_prob) {
    if (n < 0) throw std::invalid_argument("gen_random_graph: negative n");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(std::clamp(edge_prob, 0.0, 1.0));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

ThreeDMInstance gen_3dm(std::uint64_t seed, int q, int p, bool planted) {
    if (q < 1 || p < 0) throw std::invalid_argument("gen_3dm: bad dimensions");
    if (planted && p < q) throw std::invalid_argument("gen_3dm: planted needs p >= q");
    long long max_triples = static_cast<long long>(q) * q * q;
    if (p > max_triples) throw std::invalid_argument("gen_3dm: p exceeds distinct triples");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, q - 1);
    std::set<std::array<int, 3>> seen;
    ThreeDMInstance inst;
    inst.q = q;
    if (planted) {
        std::vector<int> pu(q), pv(q), pw(q);
        std::iota(pu.begin(), pu.end(), 0);
        pv = pu;
        pw = pu;
        std::shuffle(pu.begin(), pu.end(), rng);
        std::shuffle(pv.begin(), pv.end(), rng);
        std::shuffle(pw.begin(), pw.end(), rng);
        for (int i = 0; i < q; ++i) {
            std::array<int, 3> t{pu[i], pv[i], pw[i]};
            seen.insert(t);
            inst.triples.push_back(t);
        }
    }
    while (static_cast<int>(inst.triples.size()) < p) {
        std::array<int, 3> t{pick(rng), pick(rng), pick(rng)};
        if (seen.insert(t).second) inst.triples.push_back(t);
    }
    inst.validate();
    return inst;
}

}  // namespace lved
