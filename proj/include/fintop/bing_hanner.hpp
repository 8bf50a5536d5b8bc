#pragma once

#include <vector>

#include "space.hpp"

namespace fintop {

/// τ(M): points outside M get singleton neighborhoods; points of M keep
/// their τ-neighborhood. M may be empty (result is discrete) or the whole
/// ground set (result is τ).
inline FiniteSpace bing_hanner(const FiniteSpace& tau, PointSet m) {
    const int n = tau.size();
    if (m.universe() != n)
        throw Error(Errc::size_mismatch, "M " + m.str() + " is not a subset of a " + std::to_string(n) + "-point space");
    std::vector<PointSet> nbhd;
    nbhd.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        nbhd.push_back(m.contains(x) ? tau.min_nbhd(x) : PointSet::single(n, x));
    return FiniteSpace::from_min_nbhds(n, std::move(nbhd));
}

/// Literal {U ∪ K : U ∈ τ, K ⊆ X \ M}, deduplicated and validated as a
/// topology. Exponential; guarded to 5 points by default.
inline FiniteSpace bing_hanner_oracle(const FiniteSpace& tau, PointSet m, int max_points = 5) {
    const int n = tau.size();
    if (n > max_points)
        throw Error(Errc::size_guard_exceeded, "bing_hanner_oracle on " + std::to_string(n) + " points exceeds guard of " +
                                                   std::to_string(max_points));
    if (m.universe() != n)
        throw Error(Errc::size_mismatch, "M " + m.str() + " is not a subset of a " + std::to_string(n) + "-point space");
    std::vector<PointSet> family;
    for (const PointSet u : tau.opens())
        for_each_subset(m.complement(), [&](PointSet k) { family.push_back(u | k); });
    return FiniteSpace::from_opens(n, std::move(family));
}

} // namespace fintop
