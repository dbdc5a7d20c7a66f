#ifndef LVED_GRAPH_HPP
#define LVED_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lved {

/// Immutable simple undirected graph with dense vertex ids 0..n-1 and
/// stable edge ids 0..m-1 (assigned in input order after deduplication).
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges are collapsed;
    /// self-loops and out-of-range ids throw std::invalid_argument.
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    bool valid_vertex(int v) const { return v >= 0 && v < n_; }
    bool valid_edge(int e) const { return e >= 0 && e < num_edges(); }

    /// Endpoints of edge e, with first < second.
    std::pair<int, int> edge(int e) const { return edges_[e]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Sorted open neighborhood of v.
    std::span<const int> neighbors(int v) const {
        return {adj_.data() + adj_start_[v], adj_.data() + adj_start_[v + 1]};
    }
    int degree(int v) const { return adj_start_[v + 1] - adj_start_[v]; }

    /// Edge ids incident to v, aligned with neighbors(v).
    std::span<const int> incident_edges(int v) const {
        return {inc_.data() + adj_start_[v], inc_.data() + adj_start_[v + 1]};
    }

    bool has_edge(int u, int v) const;

    /// N_G[v] = N_G(v) ∪ {v}, sorted.
    std::vector<int> closed_vertex_neighborhood(int v) const;

    /// N_G[e] = N_G[x] ∪ N_G[y] for e = xy, sorted.
    std::vector<int> closed_edge_neighborhood(int e) const;

    bool connected() const;

    /// Vertex sets of the connected components.
    std::vector<std::vector<int>> components() const;

    /// Subgraph induced by `verts` (sorted, distinct); new ids are positions
    /// in `verts`. Edge ids follow the host's edge-id order.
    Graph induced_subgraph(const std::vector<int>& verts) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> adj_;        // flattened sorted adjacency
    std::vector<int> inc_;        // edge ids parallel to adj_
    std::vector<int> adj_start_;  // n+1 offsets
};

/// Set of vertex ids of a host graph. Bitmap plus cardinality; order-free.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : bits_(n, 0) {}
    VertexSet(int n, const std::vector<int>& members) : bits_(n, 0) {
        for (int v : members) insert(v);
    }

    int host_size() const { return static_cast<int>(bits_.size()); }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(int v) const { return bits_[v] != 0; }
    void insert(int v) {
        if (!bits_[v]) { bits_[v] = 1; ++count_; }
    }
    void erase(int v) {
        if (bits_[v]) { bits_[v] = 0; --count_; }
    }

    /// Sorted member list.
    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count_);
        for (int v = 0; v < host_size(); ++v)
            if (bits_[v]) out.push_back(v);
        return out;
    }

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<uint8_t> bits_;
    int count_ = 0;
};

}  // namespace lved

#endif
