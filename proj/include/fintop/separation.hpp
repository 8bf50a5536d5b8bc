#pragma once

#include <string>
#include <vector>

#include "space.hpp"

namespace fintop {

/// Separation flags. The T1 clause is not folded into regular/normal, so
/// e.g. `regular` here is not T3.
struct SeparationProfile {
    bool t0 = false;
    bool t1 = false;
    bool t2 = false;
    bool regular = false;
    bool normal = false;
    bool hereditarily_normal = false;
    bool collectionwise_normal = false;
    bool hereditarily_collectionwise_normal = false;

    friend bool operator==(const SeparationProfile&, const SeparationProfile&) = default;
};

// In a finite space two sets have disjoint open neighborhoods iff their open
// hulls (smallest open supersets) are disjoint; all tests below use that.

inline bool is_t0(const FiniteSpace& x) {
    for (int a = 0; a < x.size(); ++a)
        for (int b = a + 1; b < x.size(); ++b)
            if (x.min_nbhd(a).contains(b) && x.min_nbhd(b).contains(a))
                return false;
    return true;
}

inline bool is_t1(const FiniteSpace& x) {
    for (int a = 0; a < x.size(); ++a)
        if (!x.is_closed(PointSet::single(x.size(), a)))
            return false;
    return true;
}

inline bool is_t2(const FiniteSpace& x) {
    for (int a = 0; a < x.size(); ++a)
        for (int b = a + 1; b < x.size(); ++b)
            if (x.min_nbhd(a).intersects(x.min_nbhd(b)))
                return false;
    return true;
}

inline bool is_regular(const FiniteSpace& x) {
    for (const PointSet f : x.closed_sets())
        for (int p = 0; p < x.size(); ++p)
            if (!f.contains(p) && x.min_nbhd(p).intersects(x.open_hull(f)))
                return false;
    return true;
}

inline bool is_normal(const FiniteSpace& x) {
    const auto closed = x.closed_sets();
    for (std::size_t i = 0; i < closed.size(); ++i)
        for (std::size_t j = i + 1; j < closed.size(); ++j)
            if (!closed[i].intersects(closed[j]) && x.open_hull(closed[i]).intersects(x.open_hull(closed[j])))
                return false;
    return true;
}

/// Separated-sets test: every E, F with cl E ∩ F = E ∩ cl F = ∅ have disjoint
/// open neighborhoods.
inline bool is_hereditarily_normal(const FiniteSpace& x) {
    const PointSet full = x.ground();
    bool ok = true;
    // Each pair (E, F) of disjoint sets is visited once as E ⊆ X, F ⊆ X \ E.
    for_each_subset(full, [&](PointSet e) {
        if (!ok || e.empty())
            return;
        const PointSet cl_e = x.closure(e);
        const PointSet hull_e = x.open_hull(e);
        for_each_subset(full - cl_e, [&](PointSet f) {
            if (!ok || f.empty())
                return;
            if (!x.closure(f).intersects(e) && hull_e.intersects(x.open_hull(f)))
                ok = false;
        });
    });
    return ok;
}

/// Every family of pairwise-disjoint nonempty closed sets expands to
/// pairwise-disjoint open sets. Disjoint closed families are automatically
/// discrete here, and "pairwise disjoint expansion" is a condition on pairs,
/// so checking all pairs of members covers every family.
inline bool is_collectionwise_normal(const FiniteSpace& x) {
    const auto closed = x.closed_sets();
    std::vector<PointSet> hull;
    hull.reserve(closed.size());
    for (const auto& f : closed)
        hull.push_back(x.open_hull(f));
    for (std::size_t i = 0; i < closed.size(); ++i) {
        if (closed[i].empty())
            continue;
        for (std::size_t j = i + 1; j < closed.size(); ++j)
            if (!closed[j].empty() && !closed[i].intersects(closed[j]) && hull[i].intersects(hull[j]))
                return false;
    }
    return true;
}

/// Collectionwise normality in every subspace (the empty subspace is vacuous).
inline bool is_hereditarily_collectionwise_normal(const FiniteSpace& x) {
    bool ok = true;
    for_each_subset(x.ground(), [&](PointSet s) {
        if (ok && !s.empty())
            ok = is_collectionwise_normal(subspace(x, s).space);
    });
    return ok;
}

/// Definitional oracle for hereditary normality: every subspace is normal.
inline bool is_hereditarily_normal_by_subspaces(const FiniteSpace& x) {
    bool ok = true;
    for_each_subset(x.ground(), [&](PointSet s) {
        if (ok && !s.empty())
            ok = is_normal(subspace(x, s).space);
    });
    return ok;
}

inline SeparationProfile separation_profile(const FiniteSpace& x) {
    SeparationProfile p;
    p.t0 = is_t0(x);
    p.t1 = is_t1(x);
    p.t2 = is_t2(x);
    p.regular = is_regular(x);
    p.normal = is_normal(x);
    p.hereditarily_normal = is_hereditarily_normal(x);
    p.collectionwise_normal = is_collectionwise_normal(x);
    p.hereditarily_collectionwise_normal = p.hereditarily_normal && is_hereditarily_collectionwise_normal(x);
    return p;
}

} // namespace fintop
