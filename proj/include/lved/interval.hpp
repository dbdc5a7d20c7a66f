#ifndef LVED_INTERVAL_HPP
#define LVED_INTERVAL_HPP

#include <utility>
#include <vector>

#include "lved/graph.hpp"

namespace lved {

/// Per-vertex intervals [l(u), r(u)] with all 2n endpoints distinct and no
/// containment between distinct intervals.
struct IntervalRepresentation {
    std::vector<double> left;
    std::vector<double> right;

    int size() const { return static_cast<int>(left.size()); }

    /// Throws std::invalid_argument on endpoint collisions, inverted or
    /// containing intervals, or inconsistency with the graph's edge set.
    void validate(const Graph& g) const;
};

/// Edge interval ordering: edges sorted by right endpoint of the later
/// endpoint, ties broken by the earlier endpoint.
struct EdgeOrder {
    std::vector<int> sigma;                        // edge ids, sigma_E order
    std::vector<std::pair<int, int>> oriented;     // per edge id, (u,v) with r(u) < r(v)
};

EdgeOrder edge_interval_order(const Graph& g, const IntervalRepresentation& iv);

/// The q members of s with the largest right endpoints. Throws if |s| < q.
std::vector<int> top_q(const std::vector<int>& s, int q, const IntervalRepresentation& iv);

struct IntervalSolveOptions {
    /// Run the per-iteration loop-invariant assertions (quadratic; for tests
    /// and --debug-invariants). Throws std::logic_error on violation.
    bool debug_invariants = false;
};

/// Minimum liar's ve-dominating set of a proper interval graph. Disconnected
/// inputs are solved per component.
VertexSet lved_proper_interval(const Graph& g, const IntervalRepresentation& iv,
                               const IntervalSolveOptions& opts = {});

}  // namespace lved

#endif
