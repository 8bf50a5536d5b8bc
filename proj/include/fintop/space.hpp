#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "point_set.hpp"

namespace fintop {

/// A topology on the points {0, ..., n-1}.
///
/// The canonical form is the minimal-neighborhood table: `min_nbhd(x)` is the
/// smallest open set containing x. The full list of open sets is derived from
/// it once at construction and kept in ascending bit order.
///
/// Instances are immutable; every constructor validates the topology axioms.
class FiniteSpace {
public:
    /// Builds from an open-set family. Throws AxiomViolation naming the
    /// offending set or pair of sets when the family is not a topology.
    static FiniteSpace from_opens(int n, std::vector<PointSet> opens) {
        check_size(n);
        const PointSet full = PointSet::all(n);
        for (const auto& o : opens)
            if (o.universe() != n)
                throw Error(Errc::size_mismatch, "open set " + o.str() + " has universe " +
                                                     std::to_string(o.universe()) + ", expected " + std::to_string(n));
        std::sort(opens.begin(), opens.end());
        opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
        if (!std::binary_search(opens.begin(), opens.end(), PointSet::none(n)))
            throw Error(Errc::axiom_violation, "empty set is not open");
        if (!std::binary_search(opens.begin(), opens.end(), full))
            throw Error(Errc::axiom_violation, "ground set " + full.str() + " is not open");

        std::vector<char> member(std::size_t{1} << n, 0);
        for (const auto& o : opens)
            member[o.bits()] = 1;
        for (std::size_t i = 0; i < opens.size(); ++i) {
            for (std::size_t j = i + 1; j < opens.size(); ++j) {
                const PointSet u = opens[i] | opens[j];
                if (!member[u.bits()])
                    throw Error(Errc::axiom_violation, "union of " + opens[i].str() + " and " + opens[j].str() +
                                                           " = " + u.str() + " is not open");
                const PointSet v = opens[i] & opens[j];
                if (!member[v.bits()])
                    throw Error(Errc::axiom_violation, "intersection of " + opens[i].str() + " and " +
                                                           opens[j].str() + " = " + v.str() + " is not open");
            }
        }

        std::vector<PointSet> nbhd(static_cast<std::size_t>(n), full);
        for (const auto& o : opens)
            o.for_each([&](int x) { nbhd[x] &= o; });
        FiniteSpace s(n, std::move(nbhd));
        // Union/intersection closure makes the derived family identical to the input.
        assert(s.opens_ == opens);
        return s;
    }

    /// Builds from a minimal-neighborhood table. Throws AxiomViolation naming
    /// the offending point when x is missing from its own neighborhood or when
    /// a neighborhood is not itself open.
    static FiniteSpace from_min_nbhds(int n, std::vector<PointSet> nbhd) {
        check_size(n);
        if (static_cast<int>(nbhd.size()) != n)
            throw Error(Errc::size_mismatch, "table has " + std::to_string(nbhd.size()) + " rows for " +
                                                 std::to_string(n) + " points");
        for (int x = 0; x < n; ++x) {
            if (nbhd[x].universe() != n)
                throw Error(Errc::size_mismatch, "row " + std::to_string(x) + " has the wrong universe");
            if (!nbhd[x].contains(x))
                throw Error(Errc::axiom_violation, "point " + std::to_string(x) + " is not in its neighborhood " +
                                                       nbhd[x].str());
        }
        for (int x = 0; x < n; ++x) {
            nbhd[x].for_each([&](int y) {
                if (!nbhd[y].subset_of(nbhd[x]))
                    throw Error(Errc::axiom_violation,
                                "point " + std::to_string(x) + ": neighborhood " + nbhd[x].str() + " contains " +
                                    std::to_string(y) + " but not its neighborhood " + nbhd[y].str());
            });
        }
        return FiniteSpace(n, std::move(nbhd));
    }

    static FiniteSpace discrete(int n) {
        check_size(n);
        std::vector<PointSet> t;
        for (int x = 0; x < n; ++x)
            t.push_back(PointSet::single(n, x));
        return FiniteSpace(n, std::move(t));
    }

    static FiniteSpace indiscrete(int n) {
        check_size(n);
        return FiniteSpace(n, std::vector<PointSet>(static_cast<std::size_t>(n), PointSet::all(n)));
    }

    /// Opens ∅ ⊂ {1} ⊂ {0,1}.
    static FiniteSpace sierpinski() { return from_min_nbhds(2, {PointSet::of(2, {0, 1}), PointSet::of(2, {1})}); }

    /// The chain space on n points: min_nbhd(x) = {x, ..., n-1}.
    static FiniteSpace chain(int n) {
        check_size(n);
        std::vector<PointSet> t;
        for (int x = 0; x < n; ++x)
            t.emplace_back(n, PointSet::full_mask(n) & ~PointSet::full_mask(x));
        return FiniteSpace(n, std::move(t));
    }

    int size() const { return n_; }
    PointSet ground() const { return PointSet::all(n_); }
    PointSet min_nbhd(int x) const { return nbhd_[static_cast<std::size_t>(x)]; }
    std::span<const PointSet> min_nbhds() const { return nbhd_; }
    std::span<const PointSet> opens() const { return opens_; }

    bool is_open(PointSet s) const {
        bool ok = true;
        s.for_each([&](int x) { ok = ok && nbhd_[x].subset_of(s); });
        return ok;
    }
    bool is_closed(PointSet s) const { return is_open(s.complement()); }

    /// Smallest closed superset: points whose every neighborhood meets s.
    PointSet closure(PointSet s) const {
        PointSet::Word out = 0;
        for (int x = 0; x < n_; ++x)
            if (nbhd_[x].intersects(s))
                out |= PointSet::Word{1} << x;
        return PointSet(n_, out);
    }

    PointSet interior(PointSet s) const { return closure(s.complement()).complement(); }

    PointSet boundary(PointSet s) const { return closure(s) - interior(s); }

    /// Smallest open superset: the union of the minimal neighborhoods of its points.
    PointSet open_hull(PointSet s) const {
        PointSet out = PointSet::none(n_);
        s.for_each([&](int x) { out |= nbhd_[x]; });
        return out;
    }

    /// Closed sets in ascending bit order.
    std::vector<PointSet> closed_sets() const {
        std::vector<PointSet> out;
        out.reserve(opens_.size());
        for (const auto& o : opens_)
            out.push_back(o.complement());
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
        return a.n_ == b.n_ && a.nbhd_ == b.nbhd_;
    }

    /// Lexicographic on min-nbhd tables.
    friend bool operator<(const FiniteSpace& a, const FiniteSpace& b) {
        if (a.n_ != b.n_)
            return a.n_ < b.n_;
        return a.nbhd_ < b.nbhd_;
    }

private:
    FiniteSpace(int n, std::vector<PointSet> nbhd) : n_(n), nbhd_(std::move(nbhd)) { opens_ = derive_opens(); }

    static void check_size(int n) {
        if (n < 0 || n > max_points)
            throw Error(Errc::size_out_of_range, "point count " + std::to_string(n) + " not in [0, 16]");
    }

    // Closes {∅} under union with each minimal neighborhood.
    std::vector<PointSet> derive_opens() const {
        std::vector<char> seen(std::size_t{1} << n_, 0);
        std::vector<PointSet> out{PointSet::none(n_)};
        seen[0] = 1;
        for (int x = 0; x < n_; ++x) {
            const std::size_t current = out.size();
            for (std::size_t i = 0; i < current; ++i) {
                const PointSet u = out[i] | nbhd_[x];
                if (!seen[u.bits()]) {
                    seen[u.bits()] = 1;
                    out.push_back(u);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    int n_ = 0;
    std::vector<PointSet> nbhd_;
    std::vector<PointSet> opens_;
};

/// A subspace together with the map from its point indices to the parent's.
struct Subspace {
    FiniteSpace space;
    std::vector<int> to_parent;
};

/// Relative topology on `s`, re-indexed 0..|s|-1 in ascending original order.
inline Subspace subspace(const FiniteSpace& x, PointSet s) {
    if (s.empty())
        throw Error(Errc::empty_carrier, "subspace of the empty set");
    std::vector<int> to_parent = s.indices();
    const int m = static_cast<int>(to_parent.size());
    std::vector<int> to_child(static_cast<std::size_t>(x.size()), -1);
    for (int i = 0; i < m; ++i)
        to_child[to_parent[i]] = i;
    std::vector<PointSet> nbhd;
    nbhd.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        PointSet::Word bits = 0;
        (x.min_nbhd(to_parent[i]) & s).for_each([&](int y) { bits |= PointSet::Word{1} << to_child[y]; });
        nbhd.emplace_back(m, bits);
    }
    return {FiniteSpace::from_min_nbhds(m, std::move(nbhd)), std::move(to_parent)};
}

/// Subspace on `s`, where `s` may be empty (giving the 0-point space).
inline FiniteSpace subspace_or_empty(const FiniteSpace& x, PointSet s) {
    if (s.empty())
        return FiniteSpace::discrete(0);
    return subspace(x, s).space;
}

/// Maps a set of parent points into the child indexing of `sub` (points outside are dropped).
inline PointSet to_child(const Subspace& sub, PointSet parent_set) {
    PointSet::Word bits = 0;
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
        if (parent_set.contains(sub.to_parent[i]))
            bits |= PointSet::Word{1} << i;
    return PointSet(sub.space.size(), bits);
}

/// Maps a child set back into the parent universe.
inline PointSet to_parent(const Subspace& sub, PointSet child_set, int parent_n) {
    PointSet::Word bits = 0;
    child_set.for_each([&](int i) { bits |= PointSet::Word{1} << sub.to_parent[i]; });
    return PointSet(parent_n, bits);
}

inline PointSet isolated_points(const FiniteSpace& x) {
    PointSet::Word bits = 0;
    for (int p = 0; p < x.size(); ++p)
        if (x.min_nbhd(p).size() == 1)
            bits |= PointSet::Word{1} << p;
    return PointSet(x.size(), bits);
}

/// Minimum cardinality of a dense subset, found by trying sizes in increasing order.
inline int density(const FiniteSpace& x) {
    const int n = x.size();
    if (n == 0)
        return 0;
    const PointSet full = x.ground();
    for (int k = 1; k <= n; ++k) {
        // Gosper's hack over k-subsets.
        PointSet::Word c = (PointSet::Word{1} << k) - 1;
        const PointSet::Word limit = PointSet::Word{1} << n;
        while (c < limit) {
            if (x.closure(PointSet(n, c)) == full)
                return k;
            const PointSet::Word lo = c & (~c + 1);
            const PointSet::Word r = c + lo;
            c = (((r ^ c) >> 2) / lo) | r;
        }
    }
    return n;
}

} // namespace fintop
