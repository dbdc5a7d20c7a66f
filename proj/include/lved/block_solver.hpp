#ifndef LVED_BLOCK_SOLVER_HPP
#define LVED_BLOCK_SOLVER_HPP

#include <functional>
#include <string_view>
#include <vector>

#include "lved/block_decompose.hpp"
#include "lved/graph.hpp"
#include "lved/labels.hpp"

namespace lved {

/// Linear-time solver for connected block graphs. Processes support blocks
/// bottom-up over the cut tree, maintaining (t,s,k) labels, and finishes on
/// the residual star. The phase methods are public so tests can drive a
/// single support block through its rounds.
class BlockSolver {
public:
    /// Throws on disconnected input or non-block-graph input.
    explicit BlockSolver(const Graph& g);

    VertexSet solve();

    /// Relabel `count` B-labeled vertices of `pool` as R: priority vertices
    /// first (in the given order), then by increasing id. Throws
    /// std::logic_error if the pool has too few B-labeled vertices.
    void relabel_r(const std::vector<int>& pool, int count, const std::vector<int>& priority);

    // Support-block phases, in application order.
    void process_end_blocks_round1(int block);
    void process_cut_vertices_round2(int block);
    void support_block_fixups(int block);
    void prune_end_blocks(int block);

    /// Final stage on the residual star (or single block).
    VertexSet star_block_solve();

    /// Labeled subgraph induced by the still-alive vertices. old_ids[i], when
    /// requested, is the original id of new vertex i.
    LabeledBlockGraph snapshot(std::vector<int>* old_ids = nullptr) const;

    const LabeledBlockGraph& labeled() const { return lg_; }
    const BlockDecomposition& decomposition() const { return dec_; }
    bool alive(int v) const { return alive_[v] != 0; }

    struct Hooks {
        /// After every individual relabeling / s-label update.
        std::function<void(std::string_view step)> after_step;
        /// Before the end blocks of one cut vertex are deleted; `removed_r`
        /// lists the R-labeled vertices about to leave the graph.
        std::function<void(const std::vector<int>& removed_r)> before_prune;
        /// After one full support-block iteration (rounds, fixups, prune).
        std::function<void(int block)> after_iteration;
    };
    Hooks hooks;

private:
    void step(std::string_view what) {
        if (hooks.after_step) hooks.after_step(what);
    }

    std::vector<int> block_vertices(int block) const;  // all alive by invariant
    int count_r(const std::vector<int>& verts) const;
    std::vector<int> closed_neighborhood_alive(int v) const;
    int r_closed_neighborhood(int v) const;
    int r_hanging(int cut) const;  // R count in the end blocks of `cut`, cut excluded
    void end_block_stats(int block, int cut, int& l2, int& l1) const;

    Graph g_;
    LabeledBlockGraph lg_;
    BlockDecomposition dec_;
    std::vector<char> alive_;
    VertexSet solution_;
    std::vector<int> l2_cut_;  // per-vertex l2(c_i), valid within one support block
};

/// Minimum liar's ve-dominating set of a block graph. Disconnected inputs
/// are split into components and the per-component solutions unioned.
VertexSet lved_block(const Graph& g);

}  // namespace lved

#endif
