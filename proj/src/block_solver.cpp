#include "lved/block_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace lved {

BlockSolver::BlockSolver(const Graph& g)
    : g_(g),
      lg_(g),
      dec_(block_cut_decompose(g)),
      alive_(g.num_vertices(), 1),
      solution_(g.num_vertices()),
      l2_cut_(g.num_vertices(), -1) {
    for (auto& cuts : dec_.block_child_cuts) std::sort(cuts.begin(), cuts.end());
    for (auto& blks : dec_.cut_child_blocks) std::sort(blks.begin(), blks.end());
}

std::vector<int> BlockSolver::block_vertices(int block) const {
    return dec_.blocks[block];
}

int BlockSolver::count_r(const std::vector<int>& verts) const {
    int r = 0;
    for (int v : verts)
        if (lg_.t[v] == TLabel::R) ++r;
    return r;
}

std::vector<int> BlockSolver::closed_neighborhood_alive(int v) const {
    std::vector<int> out;
    bool placed = false;
    for (int w : g_.neighbors(v)) {
        if (!placed && v < w) {
            out.push_back(v);
            placed = true;
        }
        if (alive_[w]) out.push_back(w);
    }
    if (!placed) out.push_back(v);
    return out;
}

int BlockSolver::r_closed_neighborhood(int v) const {
    int r = lg_.t[v] == TLabel::R ? 1 : 0;
    for (int w : g_.neighbors(v))
        if (alive_[w] && lg_.t[w] == TLabel::R) ++r;
    return r;
}

int BlockSolver::r_hanging(int cut) const {
    int r = 0;
    for (int b : dec_.cut_child_blocks[cut])
        for (int v : dec_.blocks[b])
            if (v != cut && alive_[v] && lg_.t[v] == TLabel::R) ++r;
    return r;
}

// l2/l1 of an end block: edges with both endpoints among the non-cut
// vertices, bucketed by k-label.
void BlockSolver::end_block_stats(int block, int cut, int& l2, int& l1) const {
    l2 = l1 = 0;
    const auto& verts = dec_.blocks[block];
    for (int u : verts) {
        if (u == cut) continue;
        auto nbrs = g_.neighbors(u);
        auto incs = g_.incident_edges(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            int w = nbrs[i];
            if (w <= u || w == cut) continue;
            if (!std::binary_search(verts.begin(), verts.end(), w)) continue;
            int kk = lg_.k[incs[i]];
            if (kk == 2) ++l2;
            else if (kk == 1) ++l1;
        }
    }
}

void BlockSolver::relabel_r(const std::vector<int>& pool, int count,
                            const std::vector<int>& priority) {
    if (count <= 0) return;
    int picked = 0;
    auto take = [&](int v) {
        if (picked < count && alive_[v] && lg_.t[v] == TLabel::B) {
            lg_.t[v] = TLabel::R;
            ++picked;
        }
    };
    for (int v : priority) take(v);
    for (int v : pool) take(v);
    if (picked < count) throw std::logic_error("relabel pool exhausted: malformed labels");
    step("relabel");
}

void BlockSolver::process_end_blocks_round1(int block) {
    for (int ci : dec_.block_child_cuts[block]) {
        for (int eb : dec_.cut_child_blocks[ci]) {
            const auto& verts = dec_.blocks[eb];
            int l2, l1;
            end_block_stats(eb, ci, l2, l1);
            int r = count_r(verts);
            if (l2 >= 2)
                relabel_r(verts, std::max(3 - r, 0), {ci});
            else if (l2 == 1)
                relabel_r(verts, std::max(2 - r, 0), {ci});
            else if (l1 >= 1)
                relabel_r(verts, std::max(1 - r, 0), {ci});
            r = count_r(verts);
            int s_max = 0;
            for (int v : verts)
                if (v != ci) s_max = std::max(s_max, lg_.s[v]);
            relabel_r(verts, std::max(s_max - r, 0), {ci});
        }
    }
}

void BlockSolver::process_cut_vertices_round2(int block) {
    const auto& bverts = dec_.blocks[block];
    // Priority within V(B') for the w(c_i) relabels: the parent cut vertex
    // first (it keeps covering the rest of the graph after the end blocks
    // are pruned), then the other cut vertices, then the remaining block
    // vertices. Picking an arbitrary block vertex here can cost one extra
    // vertex overall.
    std::vector<int> priority;
    int ch = dec_.block_parent_cut[block];
    if (ch != -1) priority.push_back(ch);
    for (int c : dec_.block_child_cuts[block]) priority.push_back(c);
    for (int v : bverts) priority.push_back(v);
    for (int ci : dec_.block_child_cuts[block]) {
        int l2 = 0, max1 = 0, max2 = 0;
        auto nbrs = g_.neighbors(ci);
        auto incs = g_.incident_edges(ci);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            int w = nbrs[i];
            if (!alive_[w]) continue;
            if (std::binary_search(bverts.begin(), bverts.end(), w)) continue;
            int kk = lg_.k[incs[i]];  // edge into an end block of ci
            if (kk == 2) ++l2;
            if (kk >= max1) {
                max2 = max1;
                max1 = kk;
            } else if (kk > max2) {
                max2 = kk;
            }
        }
        l2_cut_[ci] = l2;
        int rn = r_closed_neighborhood(ci);
        int w_ci = std::max(max1 - rn, std::max(max1 + max2 - 1, 0) - rn);
        if (w_ci > 0) relabel_r(closed_neighborhood_alive(ci), w_ci, priority);
    }
}

void BlockSolver::support_block_fixups(int block) {
    const auto& bverts = dec_.blocks[block];
    const auto& cuts = dec_.block_child_cuts[block];
    int ch = dec_.block_parent_cut[block];

    int bare = 0;  // cut vertices with l2 == 1 and no R vertex hanging below
    for (int ci : cuts)
        if (l2_cut_[ci] == 1 && r_hanging(ci) == 0) ++bare;
    if (bare >= 2) relabel_r(bverts, std::max(3 - count_r(bverts), 0), {ch});

    int q = -1, rq = 0;
    for (int ci : cuts) {
        if (l2_cut_[ci] != 1) continue;
        int rn = r_closed_neighborhood(ci);
        if (q == -1 || rn < rq) {
            q = ci;
            rq = rn;
        }
    }
    if (q == -1) return;

    // A pair (end-block edge at c_q with k = 2, edge c_q--v) demands three
    // set vertices in N[c_q] union N[v].  When that demand is pushed onto
    // s(v), only the R vertices of N[c_q] lying OUTSIDE N[v] may be
    // subtracted: the ones inside N[v] would otherwise be counted both here
    // and when the s-demand on v is later satisfied.
    auto residual_pair_demand = [&](int v) {
        int outside = 0;
        for (int u : closed_neighborhood_alive(q))
            if (lg_.t[u] == TLabel::R && u != v && !g_.has_edge(u, v)) ++outside;
        return 3 - outside;
    };
    bool has_noncut = static_cast<int>(bverts.size()) > static_cast<int>(cuts.size()) + 1;
    if (has_noncut) {
        relabel_r(bverts, std::max(3 - rq, 0), {ch});
    } else {
        for (int ci : cuts) {
            if (ci == q || r_hanging(ci) != 0) continue;
            int target = std::max(lg_.s[ci], residual_pair_demand(ci));
            if (target != lg_.s[ci]) {
                lg_.s[ci] = target;
                step("fixup-s-cut");
            }
        }
    }
    int target = std::max(lg_.s[ch], residual_pair_demand(ch));
    if (target != lg_.s[ch]) {
        lg_.s[ch] = target;
        step("fixup-s-ch");
    }
}

void BlockSolver::prune_end_blocks(int block) {
    const auto& bverts = dec_.blocks[block];
    for (int ci : dec_.block_child_cuts[block]) {
        std::vector<int> removed, removed_r;
        for (int eb : dec_.cut_child_blocks[ci])
            for (int v : dec_.blocks[eb]) {
                if (v == ci) continue;
                removed.push_back(v);
                if (lg_.t[v] == TLabel::R) removed_r.push_back(v);
            }
        if (hooks.before_prune) hooks.before_prune(removed_r);
        for (int v : removed) {
            alive_[v] = 0;
            if (lg_.t[v] == TLabel::R) solution_.insert(v);
        }
        int di = static_cast<int>(removed_r.size());
        if (di > 0) {
            auto nbrs = g_.neighbors(ci);
            auto incs = g_.incident_edges(ci);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                int w = nbrs[i];
                if (!alive_[w]) continue;
                if (!std::binary_search(bverts.begin(), bverts.end(), w)) continue;
                lg_.k[incs[i]] = std::max(lg_.k[incs[i]] - di, 0);
            }
            lg_.s[ci] = std::max(lg_.s[ci] - di, 0);
        }
        step("prune");
    }
}

VertexSet BlockSolver::star_block_solve() {
    int cprime;
    std::vector<int> end_blocks;
    if (dec_.root_cut != -1) {
        cprime = dec_.root_cut;
        end_blocks = dec_.cut_child_blocks[cprime];
    } else {
        cprime = dec_.blocks[0].front();
        end_blocks = {0};
    }
    for (int eb : end_blocks) {
        const auto& verts = dec_.blocks[eb];
        int l2, l1;
        end_block_stats(eb, cprime, l2, l1);
        int r = count_r(verts);
        if (l2 >= 2)
            relabel_r(verts, std::max(3 - r, 0), {cprime});
        else if (l2 == 1)
            relabel_r(verts, std::max(2 - r, 0), {cprime});
        else if (l1 >= 1)
            relabel_r(verts, std::max(1 - r, 0), {cprime});
        r = count_r(verts);
        int s_max = 0;
        for (int v : verts)
            if (v != cprime) s_max = std::max(s_max, lg_.s[v]);
        relabel_r(verts, std::max(s_max - r, 0), {cprime});
    }
    int max1 = 0, max2 = 0;
    auto nbrs = g_.neighbors(cprime);
    auto incs = g_.incident_edges(cprime);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (!alive_[nbrs[i]]) continue;
        int kk = lg_.k[incs[i]];
        if (kk >= max1) {
            max2 = max1;
            max1 = kk;
        } else if (kk > max2) {
            max2 = kk;
        }
    }
    int rn = r_closed_neighborhood(cprime);
    int w_c = std::max(max1 - rn, std::max(max1 + max2 - 1, 0) - rn);
    if (w_c > 0) relabel_r(closed_neighborhood_alive(cprime), w_c, {cprime});
    rn = r_closed_neighborhood(cprime);
    relabel_r(closed_neighborhood_alive(cprime), std::max(lg_.s[cprime] - rn, 0), {});

    VertexSet d(g_.num_vertices());
    for (int v = 0; v < g_.num_vertices(); ++v)
        if (alive_[v] && lg_.t[v] == TLabel::R) d.insert(v);
    return d;
}

VertexSet BlockSolver::solve() {
    if (g_.num_edges() == 0) return VertexSet(g_.num_vertices());
    for (int b : dec_.sigma_b) {
        if (dec_.block_child_cuts[b].empty()) continue;  // not (yet) a support block
        process_end_blocks_round1(b);
        process_cut_vertices_round2(b);
        support_block_fixups(b);
        prune_end_blocks(b);
        if (hooks.after_iteration) hooks.after_iteration(b);
    }
    VertexSet star = star_block_solve();
    for (int v : star.members()) solution_.insert(v);
    return solution_;
}

LabeledBlockGraph BlockSolver::snapshot(std::vector<int>* old_ids) const {
    std::vector<int> verts;
    for (int v = 0; v < g_.num_vertices(); ++v)
        if (alive_[v]) verts.push_back(v);
    LabeledBlockGraph out;
    out.base = g_.induced_subgraph(verts);
    out.t.reserve(verts.size());
    out.s.reserve(verts.size());
    for (int v : verts) {
        out.t.push_back(lg_.t[v]);
        out.s.push_back(lg_.s[v]);
    }
    for (int e = 0; e < g_.num_edges(); ++e) {
        auto [u, v] = g_.edge(e);
        if (alive_[u] && alive_[v]) out.k.push_back(lg_.k[e]);
    }
    if (old_ids) *old_ids = std::move(verts);
    return out;
}

VertexSet lved_block(const Graph& g) {
    VertexSet result(g.num_vertices());
    if (g.num_edges() == 0) return result;
    if (g.connected()) return BlockSolver(g).solve();
    for (const auto& comp : g.components()) {
        Graph sub = g.induced_subgraph(comp);
        if (sub.num_edges() == 0) continue;
        VertexSet part = BlockSolver(sub).solve();
        for (int v : part.members()) result.insert(comp[v]);
    }
    return result;
}

}  // namespace lved
