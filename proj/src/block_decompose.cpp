#include "lved/block_decompose.hpp"

#include <algorithm>
#include <stdexcept>

namespace lved {

namespace {

// Edge ids of each biconnected component, via iterative Tarjan DFS.
std::vector<std::vector<int>> biconnected_components(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> disc(n, 0), low(n, 0), iter(n, 0), parent_edge(n, -1);
    std::vector<int> node_stack, edge_stack;
    std::vector<std::vector<int>> comps;
    int timer = 0;
    for (int s = 0; s < n; ++s) {
        if (disc[s]) continue;
        node_stack.push_back(s);
        disc[s] = low[s] = ++timer;
        while (!node_stack.empty()) {
            int v = node_stack.back();
            auto nbrs = g.neighbors(v);
            auto incs = g.incident_edges(v);
            if (iter[v] < static_cast<int>(nbrs.size())) {
                int idx = iter[v]++;
                int w = nbrs[idx], eid = incs[idx];
                if (eid == parent_edge[v]) continue;
                if (!disc[w]) {
                    edge_stack.push_back(eid);
                    parent_edge[w] = eid;
                    disc[w] = low[w] = ++timer;
                    node_stack.push_back(w);
                } else if (disc[w] < disc[v]) {
                    edge_stack.push_back(eid);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                node_stack.pop_back();
                if (node_stack.empty()) continue;
                int pv = node_stack.back();
                low[pv] = std::min(low[pv], low[v]);
                if (low[v] >= disc[pv]) {
                    comps.emplace_back();
                    while (true) {
                        int eid = edge_stack.back();
                        edge_stack.pop_back();
                        comps.back().push_back(eid);
                        if (eid == parent_edge[v]) break;
                    }
                }
            }
        }
    }
    return comps;
}

}  // namespace

BlockDecomposition block_cut_decompose(const Graph& g) {
    const int n = g.num_vertices();
    if (!g.connected()) throw std::invalid_argument("disconnected input");
    BlockDecomposition d;
    d.is_cut.assign(n, 0);
    if (g.num_edges() == 0) {
        if (n == 1) {
            d.blocks.push_back({0});
            d.block_parent_cut.assign(1, -1);
            d.block_child_cuts.resize(1);
            d.sigma_b.push_back(0);
        }
        d.cut_parent_block.assign(n, -1);
        d.cut_child_blocks.resize(n);
        return d;
    }

    auto comps = biconnected_components(g);
    std::vector<int> membership_count(n, 0);
    std::vector<char> mark(n, 0);
    for (const auto& comp : comps) {
        std::vector<int> verts;
        for (int e : comp) {
            auto [u, v] = g.edge(e);
            for (int x : {u, v})
                if (!mark[x]) {
                    mark[x] = 1;
                    verts.push_back(x);
                }
        }
        for (int x : verts) {
            mark[x] = 0;
            ++membership_count[x];
        }
        std::sort(verts.begin(), verts.end());
        auto b = static_cast<long long>(verts.size());
        if (static_cast<long long>(comp.size()) != b * (b - 1) / 2)
            throw std::invalid_argument("not a block graph");
        d.blocks.push_back(std::move(verts));
    }
    for (int v = 0; v < n; ++v)
        if (membership_count[v] > 1) {
            d.is_cut[v] = 1;
            d.cut_vertices.push_back(v);
        }

    const int x = static_cast<int>(d.blocks.size());
    d.block_parent_cut.assign(x, -1);
    d.block_child_cuts.resize(x);
    d.cut_parent_block.assign(n, -1);
    d.cut_child_blocks.resize(n);

    if (d.cut_vertices.empty()) {
        d.sigma_b.push_back(0);
        return d;
    }
    d.root_cut = d.cut_vertices.front();

    std::vector<std::vector<int>> blocks_of_cut(n);
    for (int b = 0; b < x; ++b)
        for (int v : d.blocks[b])
            if (d.is_cut[v]) blocks_of_cut[v].push_back(b);

    // BFS on the alternating cut tree from the root cut vertex.
    std::vector<char> block_seen(x, 0), cut_seen(n, 0);
    std::vector<int> bfs_blocks;
    std::vector<int> cut_frontier{d.root_cut};
    cut_seen[d.root_cut] = 1;
    while (!cut_frontier.empty()) {
        std::vector<int> next_cuts;
        for (int c : cut_frontier) {
            for (int b : blocks_of_cut[c]) {
                if (block_seen[b]) continue;
                block_seen[b] = 1;
                d.block_parent_cut[b] = c;
                d.cut_child_blocks[c].push_back(b);
                bfs_blocks.push_back(b);
                for (int v : d.blocks[b]) {
                    if (!d.is_cut[v] || cut_seen[v]) continue;
                    cut_seen[v] = 1;
                    d.cut_parent_block[v] = b;
                    d.block_child_cuts[b].push_back(v);
                    next_cuts.push_back(v);
                }
            }
        }
        cut_frontier = std::move(next_cuts);
    }
    d.sigma_b.assign(bfs_blocks.rbegin(), bfs_blocks.rend());
    return d;
}

}  // namespace lved
