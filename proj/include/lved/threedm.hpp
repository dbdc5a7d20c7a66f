#ifndef LVED_THREEDM_HPP
#define LVED_THREEDM_HPP

#include <array>
#include <optional>
#include <vector>

namespace lved {

/// 3-dimensional matching instance: triples over three disjoint q-element
/// coordinate sets, indices 0..q-1 each.
struct ThreeDMInstance {
    int q = 0;
    std::vector<std::array<int, 3>> triples;

    int p() const { return static_cast<int>(triples.size()); }
    /// Throws std::invalid_argument on out-of-range indices or duplicates.
    void validate() const;
};

/// Perfect matching as triple indices (q pairwise coordinate-disjoint
/// triples), or nullopt. Deterministic: backtracking in triple-index order.
std::optional<std::vector<int>> solve_3dm(const ThreeDMInstance& inst);

}  // namespace lved

#endif
