#ifndef LVED_VERIFIER_HPP
#define LVED_VERIFIER_HPP

#include <string>

#include "lved/graph.hpp"
#include "lved/labels.hpp"

namespace lved {

/// Outcome of a domination check. When ok is false, the witness fields
/// describe the first violated constraint (edge-id order, then pair
/// lexicographic order).
struct Verdict {
    enum class Kind { None, EdgeCount, PairCount, ForcedVertex, VertexCount };

    bool ok = true;
    Kind kind = Kind::None;
    int edge_a = -1;
    int edge_b = -1;
    int vertex = -1;
    int required = 0;
    int actual = 0;

    static Verdict pass() { return {}; }
    std::string describe(const Graph& g) const;
};

/// Pair-condition strategy. Local skips edge pairs with disjoint closed
/// neighborhoods (their bound follows from the per-edge counts); AllPairs
/// is the naive quadratic check kept as a cross-checking oracle.
enum class PairCheck { Local, AllPairs };

/// Liar's ve-domination check: every edge covered twice, every pair of
/// distinct edges jointly covered three times.
Verdict is_lved_set(const Graph& g, const VertexSet& l, PairCheck mode = PairCheck::Local);

/// Labeled check: forced R vertices, per-vertex s demands, per-edge k
/// demands, pairwise max{k(e)+k(f)-1, 0} demands.
Verdict is_mlve_set(const LabeledBlockGraph& g, const VertexSet& l,
                    PairCheck mode = PairCheck::Local);

}  // namespace lved

#endif
