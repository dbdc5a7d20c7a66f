#include "lved/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace lved {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edge_list) {
        if (u == v)
            throw std::invalid_argument("self-loop (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("vertex id out of range in edge (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        auto key = std::minmax(u, v);
        if (seen.insert(key).second) edges_.push_back(key);
    }
    adj_start_.assign(n_ + 1, 0);
    for (auto [u, v] : edges_) {
        ++adj_start_[u + 1];
        ++adj_start_[v + 1];
    }
    for (int v = 0; v < n_; ++v) adj_start_[v + 1] += adj_start_[v];
    adj_.resize(2 * edges_.size());
    inc_.resize(2 * edges_.size());
    std::vector<int> fill(adj_start_.begin(), adj_start_.end() - 1);
    for (int e = 0; e < num_edges(); ++e) {
        auto [u, v] = edges_[e];
        adj_[fill[u]] = v;
        inc_[fill[u]++] = e;
        adj_[fill[v]] = u;
        inc_[fill[v]++] = e;
    }
    // sort each adjacency slice by neighbor id, keeping edge ids aligned
    for (int v = 0; v < n_; ++v) {
        int lo = adj_start_[v], hi = adj_start_[v + 1];
        std::vector<std::pair<int, int>> slice;
        slice.reserve(hi - lo);
        for (int i = lo; i < hi; ++i) slice.emplace_back(adj_[i], inc_[i]);
        std::sort(slice.begin(), slice.end());
        for (int i = lo; i < hi; ++i) {
            adj_[i] = slice[i - lo].first;
            inc_[i] = slice[i - lo].second;
        }
    }
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> Graph::closed_vertex_neighborhood(int v) const {
    if (!valid_vertex(v)) throw std::invalid_argument("invalid vertex id");
    std::vector<int> out(neighbors(v).begin(), neighbors(v).end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

std::vector<int> Graph::closed_edge_neighborhood(int e) const {
    if (!valid_edge(e)) throw std::invalid_argument("invalid edge id");
    auto [x, y] = edges_[e];
    auto a = closed_vertex_neighborhood(x);
    auto b = closed_vertex_neighborhood(y);
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> visited(n_, 0);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (visited[s]) continue;
        comps.emplace_back();
        visited[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (int w : neighbors(v))
                if (!visited[w]) {
                    visited[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

Graph Graph::induced_subgraph(const std::vector<int>& verts) const {
    std::vector<int> remap(n_, -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) remap[verts[i]] = i;
    std::vector<std::pair<int, int>> sub_edges;
    for (auto [u, v] : edges_)
        if (remap[u] != -1 && remap[v] != -1) sub_edges.emplace_back(remap[u], remap[v]);
    return Graph(static_cast<int>(verts.size()), sub_edges);
}

bool Graph::connected() const {
    return n_ <= 1 || components().size() == 1;
}

}  // namespace lved
