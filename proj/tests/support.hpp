#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fintop/fintop.hpp"

namespace fintop::testing {

inline PointSet ps(int n, std::initializer_list<int> xs) { return PointSet::of(n, xs); }

inline std::vector<PointSet> opens_of(std::initializer_list<std::initializer_list<int>> sets, int n) {
    std::vector<PointSet> out;
    for (auto s : sets)
        out.push_back(PointSet::of(n, s));
    return out;
}

inline std::vector<PointSet> sorted_opens(const FiniteSpace& x) {
    std::vector<PointSet> v(x.opens().begin(), x.opens().end());
    std::sort(v.begin(), v.end(), [](PointSet a, PointSet b) { return a.bits() < b.bits(); });
    return v;
}

/// Subset families as bitmasks over the 2^n subsets of an n-point set.
inline bool family_is_topology(std::uint32_t fam, int n) {
    const std::uint32_t full = (1U << n) - 1;
    auto has = [&](std::uint32_t s) { return ((fam >> s) & 1U) != 0; };
    if (!has(0) || !has(full))
        return false;
    for (std::uint32_t a = 0; a <= full; ++a)
        for (std::uint32_t b = 0; b <= full; ++b)
            if (has(a) && has(b) && (!has(a | b) || !has(a & b)))
                return false;
    return true;
}

/// Every topology on n ≤ 3 points by testing all 2^(2^n) subset families.
inline std::vector<FiniteSpace> naive_topologies(int n) {
    std::vector<FiniteSpace> out;
    const std::uint32_t subsets = 1U << n;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
        if (!family_is_topology(static_cast<std::uint32_t>(fam), n))
            continue;
        std::vector<PointSet> opens;
        for (std::uint32_t s = 0; s < subsets; ++s)
            if ((fam >> s) & 1U) {
                std::vector<int> xs;
                for (int i = 0; i < n; ++i)
                    if ((s >> i) & 1U)
                        xs.push_back(i);
                opens.push_back(PointSet::of(n, xs));
            }
        out.push_back(FiniteSpace::from_opens(n, opens));
    }
    return out;
}

/// Closure straight from the definition: x ∈ cl(s) iff every open containing x meets s.
inline PointSet closure_by_opens(const FiniteSpace& x, PointSet s) {
    PointSet out = PointSet::none(x.size());
    for (int p = 0; p < x.size(); ++p) {
        bool all_meet = true;
        for (auto o : x.opens())
            if (o.contains(p) && !o.intersects(s))
                all_meet = false;
        if (all_meet)
            out = out.with(p);
    }
    return out;
}

inline std::vector<FiniteSpace> all_spaces_upto(int n) {
    std::vector<FiniteSpace> out;
    for (int k = 1; k <= n; ++k)
        for (auto& x : enumerate_topologies(k))
            out.push_back(std::move(x));
    return out;
}

inline FiniteSpace left_open2() {
    return FiniteSpace::from_opens(2, {PointSet::none(2), PointSet::of(2, {0}), PointSet::all(2)});
}

} // namespace fintop::testing
