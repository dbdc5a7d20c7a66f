#include "lved/threedm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lved {

void ThreeDMInstance::validate() const {
    std::set<std::array<int, 3>> seen;
    for (const auto& t : triples) {
        for (int c : t)
            if (c < 0 || c >= q) throw std::invalid_argument("3-DM coordinate out of range");
        if (!seen.insert(t).second) throw std::invalid_argument("duplicate 3-DM triple");
    }
}

namespace {

// Cover u-elements 0..q-1 in order; triples tried in index order so the
// first matching found is deterministic.
bool match_u(const ThreeDMInstance& inst, int u, uint64_t used_v, uint64_t used_w,
             std::vector<int>& picked) {
    if (u == inst.q) return true;
    for (int i = 0; i < inst.p(); ++i) {
        const auto& t = inst.triples[i];
        if (t[0] != u) continue;
        uint64_t vb = uint64_t{1} << t[1], wb = uint64_t{1} << t[2];
        if ((used_v & vb) || (used_w & wb)) continue;
        picked.push_back(i);
        if (match_u(inst, u + 1, used_v | vb, used_w | wb, picked)) return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> solve_3dm(const ThreeDMInstance& inst) {
    inst.validate();
    if (inst.q > 62) throw std::invalid_argument("3-DM solver supports q <= 62");
    std::vector<int> picked;
    if (inst.q == 0) return picked;
    if (match_u(inst, 0, 0, 0, picked)) return picked;
    return std::nullopt;
}

}  // namespace lved
