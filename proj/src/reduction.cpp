#include "lved/reduction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lved {

namespace {

// Per-triple families, in id order within a triple gadget.
enum Family { A, B, C, D, E, F, G, H, J, K, N, O, P, Q, Y, Z, kFamilies };
constexpr const char* kFamilyName[kFamilies] = {"A", "B", "C", "D", "E", "F", "G", "H",
                                                "J", "K", "N", "O", "P", "Q", "Y", "Z"};

}  // namespace

int ReductionOutput::name_to_id(const std::string& name) const {
    for (int v = 0; v < static_cast<int>(vertex_names.size()); ++v)
        if (vertex_names[v] == name) return v;
    return -1;
}

ReductionOutput reduce_3dm(const ThreeDMInstance& inst) {
    inst.validate();
    const int p = inst.p();
    const int q = inst.q;
    ReductionOutput out;
    out.target_k = 4 * p + 10 * q;

    // id layout: triple gadgets first (16 vertices each), then the chain
    // gadgets of U, V, W elements (6 vertices each).
    auto tv = [&](int i, Family f) { return 16 * i + static_cast<int>(f); };
    auto chain = [&](int coord, int j, int level) { return 16 * p + 6 * (coord * q + j) + level; };

    out.vertex_names.resize(16 * p + 18 * q);
    for (int i = 0; i < p; ++i)
        for (int f = 0; f < kFamilies; ++f)
            out.vertex_names[tv(i, Family(f))] =
                std::string(kFamilyName[f]) + "_" + std::to_string(i + 1);
    constexpr const char* kChainName[3] = {"R", "S", "T"};
    for (int coord = 0; coord < 3; ++coord)
        for (int j = 0; j < q; ++j)
            for (int level = 0; level <= 5; ++level) {
                std::string name = kChainName[coord];
                if (level > 0) name += std::to_string(level);
                out.vertex_names[chain(coord, j, level)] = name + "_" + std::to_string(j + 1);
            }

    // the eight cliques of one triple gadget, and the tree edges among them
    // (0-based within the gadget; -1 = the central clique)
    auto add_triple_cliques = [&](int i) {
        const std::vector<std::vector<Family>> fams = {
            {A, B, C, D, E, F},        // 0
            {A, B, D, E, F, N, P, Q},  // 1
            {C, D, E, H, J},           // 2
            {A, B, E, F, G},           // 3
            {A, E, G, Y},              // 4
            {B, F, G, Z},              // 5
            {E, Y, O},                 // 6
            {F, Z, K},                 // 7
        };
        int base = static_cast<int>(out.clique_nodes.size());
        for (const auto& fam : fams) {
            std::vector<int> node;
            for (Family f : fam) node.push_back(tv(i, f));
            std::sort(node.begin(), node.end());
            out.clique_nodes.push_back(std::move(node));
        }
        constexpr std::pair<int, int> kLocalEdges[] = {{0, 1}, {0, 2}, {1, 3}, {3, 4},
                                                       {3, 5}, {4, 6}, {5, 7}};
        for (auto [a, b] : kLocalEdges) out.tree_edges.emplace_back(base + a, base + b);
        return base;  // index of the {A,B,C,D,E,F} clique
    };

    std::vector<int> triple_entry(p);
    for (int i = 0; i < p; ++i) triple_entry[i] = add_triple_cliques(i);

    // per-element gadget: the clique of matching triple gadget vertices plus
    // the chain anchor, then the five chain cliques
    constexpr Family kCoordFamily[3] = {A, B, C};
    std::vector<int> element_entry(3 * q);
    for (int coord = 0; coord < 3; ++coord)
        for (int j = 0; j < q; ++j) {
            std::vector<int> node;
            for (int i = 0; i < p; ++i)
                if (inst.triples[i][coord] == j) node.push_back(tv(i, kCoordFamily[coord]));
            node.push_back(chain(coord, j, 0));
            std::sort(node.begin(), node.end());
            int base = static_cast<int>(out.clique_nodes.size());
            element_entry[coord * q + j] = base;
            out.clique_nodes.push_back(std::move(node));
            for (int level = 0; level < 5; ++level) {
                out.clique_nodes.push_back(
                    {chain(coord, j, level), chain(coord, j, level + 1)});
                out.tree_edges.emplace_back(base + level, base + level + 1);
            }
        }

    // central clique {A_i, B_i, C_i : all i}
    std::vector<int> center;
    for (int i = 0; i < p; ++i)
        for (Family f : {A, B, C}) center.push_back(tv(i, f));
    std::sort(center.begin(), center.end());
    int center_idx = static_cast<int>(out.clique_nodes.size());
    out.clique_nodes.push_back(std::move(center));
    for (int i = 0; i < p; ++i) out.tree_edges.emplace_back(center_idx, triple_entry[i]);
    for (int e : element_entry) out.tree_edges.emplace_back(center_idx, e);

    std::set<std::pair<int, int>> edge_set;
    for (const auto& node : out.clique_nodes)
        for (std::size_t a = 0; a < node.size(); ++a)
            for (std::size_t b = a + 1; b < node.size(); ++b)
                edge_set.insert(std::minmax(node[a], node[b]));
    out.graph = Graph(16 * p + 18 * q,
                      std::vector<std::pair<int, int>>(edge_set.begin(), edge_set.end()));
    return out;
}

CliqueTreeVerdict verify_clique_tree(const ReductionOutput& out) {
    auto bad = [](std::string reason) { return CliqueTreeVerdict{false, std::move(reason)}; };
    const int nodes = static_cast<int>(out.clique_nodes.size());
    if (static_cast<int>(out.tree_edges.size()) != nodes - 1)
        return bad("tree edge count is not nodes-1");
    std::vector<std::vector<int>> adj(nodes);
    for (auto [a, b] : out.tree_edges) {
        if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b)
            return bad("tree edge with invalid endpoints");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> depth(nodes, -1), parent(nodes, -1);
    std::vector<int> stack{0};
    depth[0] = 0;
    int seen = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++seen;
        for (int y : adj[x])
            if (depth[y] == -1) {
                depth[y] = depth[x] + 1;
                parent[y] = x;
                stack.push_back(y);
            }
    }
    if (seen != nodes) return bad("tree is disconnected");  // acyclic follows from edge count

    for (int idx = 0; idx < nodes; ++idx) {
        const auto& node = out.clique_nodes[idx];
        for (std::size_t a = 0; a < node.size(); ++a)
            for (std::size_t b = a + 1; b < node.size(); ++b)
                if (!out.graph.has_edge(node[a], node[b]))
                    return bad("node " + std::to_string(idx) + " is not a clique");
    }

    std::set<std::pair<int, int>> covered;
    for (const auto& node : out.clique_nodes)
        for (std::size_t a = 0; a < node.size(); ++a)
            for (std::size_t b = a + 1; b < node.size(); ++b)
                covered.insert(std::minmax(node[a], node[b]));
    for (auto [u, v] : out.graph.edges())
        if (!covered.count({u, v}))
            return bad("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") lies in no clique node");

    // path property: the nodes holding vertex v must form a path, i.e. a
    // connected subtree with max degree 2 inside the subtree
    std::vector<std::vector<int>> holders(out.graph.num_vertices());
    for (int idx = 0; idx < nodes; ++idx)
        for (int v : out.clique_nodes[idx]) {
            if (v < 0 || v >= out.graph.num_vertices())
                return bad("clique node mentions an invalid vertex");
            holders[v].push_back(idx);
        }
    for (int v = 0; v < out.graph.num_vertices(); ++v) {
        const auto& h = holders[v];
        if (h.empty()) continue;
        std::set<int> member(h.begin(), h.end());
        // connectivity within the tree: every holder except the shallowest
        // must have its tree parent among the holders
        int shallow = h[0];
        for (int idx : h)
            if (depth[idx] < depth[shallow]) shallow = idx;
        std::vector<int> deg(out.clique_nodes.size(), 0);
        for (int idx : h) {
            if (idx == shallow) continue;
            if (!member.count(parent[idx]))
                return bad("vertex " + std::to_string(v) + " spans disconnected tree nodes");
            ++deg[idx];
            ++deg[parent[idx]];
        }
        for (int idx : h)
            if (deg[idx] > 2)
                return bad("vertex " + std::to_string(v) + " branches in the clique tree");
    }
    return {};
}

VertexSet build_witness(const ReductionOutput& out, const ThreeDMInstance& inst,
                        const std::vector<int>& matching) {
    const int p = inst.p();
    const int q = inst.q;
    if (static_cast<int>(matching.size()) != q)
        throw std::invalid_argument("matching must contain exactly q triples");
    std::vector<char> used_u(q, 0), used_v(q, 0), used_w(q, 0), in_matching(p, 0);
    for (int idx : matching) {
        if (idx < 0 || idx >= p) throw std::invalid_argument("matching index out of range");
        if (in_matching[idx]) throw std::invalid_argument("matching repeats a triple");
        in_matching[idx] = 1;
        auto [u, v, w] = inst.triples[idx];
        if (used_u[u]++ || used_v[v]++ || used_w[w]++)
            throw std::invalid_argument("matching triples clash in a coordinate");
    }

    auto tv = [&](int i, Family f) { return 16 * i + static_cast<int>(f); };
    auto chain = [&](int coord, int j, int level) { return 16 * p + 6 * (coord * q + j) + level; };
    VertexSet l(out.graph.num_vertices());
    for (int i = 0; i < p; ++i) {
        if (in_matching[i])
            for (Family f : {A, B, C, E, G}) l.insert(tv(i, f));
        else
            for (Family f : {D, E, F, G}) l.insert(tv(i, f));
    }
    for (int coord = 0; coord < 3; ++coord)
        for (int j = 0; j < q; ++j)
            for (int level : {2, 3, 4}) l.insert(chain(coord, j, level));
    return l;
}

}  // namespace lved
