#ifndef LVED_EXACT_HPP
#define LVED_EXACT_HPP

#include <chrono>
#include <optional>

#include "lved/graph.hpp"

namespace lved {

struct ExactOptions {
    /// Graphs up to this many vertices are solved by size-increasing subset
    /// enumeration; larger ones fall back to branch-and-bound under the cap.
    int enumeration_limit = 22;
    /// 0 = no cap.
    std::chrono::milliseconds time_cap{0};
};

struct ExactResult {
    enum class Status { Solved, CapExceeded };
    Status status = Status::Solved;
    VertexSet set;  // optimal when Solved; best known (possibly empty) otherwise

    bool solved() const { return status == Status::Solved; }
};

/// Ground-truth minimum liar's ve-dominating set. Deterministic: the
/// lexicographically smallest set among those of minimum size.
ExactResult min_lved_exact(const Graph& g, const ExactOptions& opts = {});

enum class ProbeResult { Confirmed, Refuted, Unknown };

/// Branch-and-bound probe for "every liar's ve-dominating set has size > k".
/// Confirmed: proven; Refuted: a set of size <= k exists; Unknown: cap hit.
ProbeResult probe_min_exceeds(const Graph& g, int k, std::chrono::milliseconds cap);

}  // namespace lved

#endif
