#pragma once

#include <algorithm>
#include <climits>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "canonical.hpp"
#include "parallel.hpp"
#include "space.hpp"

namespace fintop {

/// Extended dimension value: -1, 0, 1, ..., or ∞, totally ordered.
class DimValue {
public:
    constexpr DimValue() = default;

    static constexpr DimValue neg_one() { return DimValue(-1); }
    static constexpr DimValue finite(int k) {
        if (k < 0)
            throw Error(Errc::size_out_of_range, "finite dimension must be >= 0");
        return DimValue(k);
    }
    static constexpr DimValue infinite() { return DimValue(inf_raw); }
    /// -1 maps to neg_one; anything else must be >= 0.
    static constexpr DimValue from_int(int k) { return k == -1 ? neg_one() : finite(k); }

    constexpr bool is_neg_one() const { return raw_ == -1; }
    constexpr bool is_infinite() const { return raw_ == inf_raw; }
    constexpr bool is_finite() const { return raw_ >= 0 && raw_ != inf_raw; }
    /// Integer value; -1 for neg_one. Meaningless for ∞.
    constexpr int value() const { return raw_; }

    constexpr DimValue successor() const { return is_infinite() ? *this : DimValue(raw_ + 1); }

    friend constexpr auto operator<=>(DimValue, DimValue) = default;

    std::string str() const { return is_infinite() ? "inf" : std::to_string(raw_); }

    static DimValue parse(const std::string& s) {
        if (s == "inf" || s == "∞")
            return infinite();
        try {
            std::size_t used = 0;
            const int v = std::stoi(s, &used);
            if (used == s.size() && v >= -1)
                return from_int(v);
        } catch (const std::exception&) {
        }
        throw Error(Errc::parse_error, "'" + s + "' is not a dimension value");
    }

private:
    static constexpr int inf_raw = INT_MAX;
    constexpr explicit DimValue(int raw) : raw_(raw) {}
    int raw_ = -1;
};

/// Witness for a partition L = X \ (U ∪ V) between A ⊆ U and B ⊆ V.
struct Partition {
    PointSet l;
    PointSet u;
    PointSet v;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// ord of a family: -1 when every member is empty, otherwise one less than the
/// largest number of distinct members sharing a point.
inline DimValue ord(std::span<const PointSet> family) {
    if (family.empty())
        throw Error(Errc::empty_family, "ord of an empty family");
    std::vector<PointSet> distinct(family.begin(), family.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const int n = distinct.front().universe();
    int best = 0;
    for (int x = 0; x < n; ++x) {
        int c = 0;
        for (const auto& s : distinct)
            c += s.contains(x) ? 1 : 0;
        best = std::max(best, c);
    }
    return best == 0 ? DimValue::neg_one() : DimValue::finite(best - 1);
}

namespace detail {

using DimMemo = Memo<CanonicalCode, DimValue, CanonicalCodeHash>;

inline DimMemo& large_ind_memo() {
    static DimMemo memo;
    return memo;
}
inline DimMemo& ind_boundary_memo() {
    static DimMemo memo;
    return memo;
}
inline DimMemo& ind_partition_memo() {
    static DimMemo memo;
    return memo;
}

/// Looks up `x` in `memo` by canonical code (when small enough to have one),
/// computing and storing on a miss.
template <class Compute>
DimValue memoized(DimMemo& memo, const FiniteSpace& x, Compute&& compute) {
    if (x.size() > canonical_max_points)
        return compute(x);
    const CanonicalCode code = canonical_code(x);
    if (auto hit = memo.find(code))
        return *hit;
    // Evaluate on the canonical representative so the stored value does not
    // depend on which labeled copy arrived first.
    const DimValue v = compute(code.decode());
    memo.insert(code, v);
    return v;
}

/// First disjoint open pair (U, V) in ascending order with A ⊆ U, B ⊆ V and
/// L ∩ avoid = ∅. No closedness checks.
inline std::optional<Partition> search_partition(const FiniteSpace& x, PointSet a, PointSet b, PointSet avoid) {
    const PointSet full = x.ground();
    for (const PointSet u : x.opens()) {
        if (!a.subset_of(u))
            continue;
        for (const PointSet v : x.opens()) {
            if (!b.subset_of(v) || u.intersects(v))
                continue;
            const PointSet l = full - (u | v);
            if (!l.intersects(avoid))
                return Partition{l, u, v};
        }
    }
    return std::nullopt;
}

/// Minimum of `dimfn` over all partitions between A and B, or ∞ when there is
/// no partition. `skip_full` drops L = X (only reachable with A = B = ∅).
template <class DimFn>
DimValue min_partition_dim(const FiniteSpace& x, PointSet a, PointSet b, DimFn&& dimfn) {
    DimValue best = DimValue::infinite();
    bool found = false;
    const PointSet full = x.ground();
    for (const PointSet u : x.opens()) {
        if (!a.subset_of(u))
            continue;
        for (const PointSet v : x.opens()) {
            if (!b.subset_of(v) || u.intersects(v))
                continue;
            const PointSet l = full - (u | v);
            if (l == full)
                continue;
            found = true;
            const DimValue d = l.empty() ? DimValue::neg_one() : dimfn(subspace(x, l).space);
            best = std::min(best, d);
            if (best.is_neg_one())
                return best;
        }
    }
    return found ? best : DimValue::infinite();
}

} // namespace detail

/// Partition between closed disjoint A and B with L ∩ avoid = ∅, if any.
/// Pass avoid = ∅ for an unconstrained search.
inline std::optional<Partition> find_partition(const FiniteSpace& x, PointSet a, PointSet b, PointSet avoid) {
    if (a.universe() != x.size() || b.universe() != x.size() || avoid.universe() != x.size())
        throw Error(Errc::size_mismatch, "partition arguments do not match the space");
    if (!x.is_closed(a))
        throw Error(Errc::not_closed, "A = " + a.str() + " is not closed");
    if (!x.is_closed(b))
        throw Error(Errc::not_closed, "B = " + b.str() + " is not closed");
    if (a.intersects(b))
        throw Error(Errc::not_disjoint, "A = " + a.str() + " and B = " + b.str() + " intersect");
    return detail::search_partition(x, a, b, avoid);
}

/// Partition between the point p and a closed set A not containing it.
inline std::optional<Partition> find_point_partition(const FiniteSpace& x, int p, PointSet a, PointSet avoid) {
    if (a.universe() != x.size() || avoid.universe() != x.size())
        throw Error(Errc::size_mismatch, "partition arguments do not match the space");
    if (!x.is_closed(a))
        throw Error(Errc::not_closed, "A = " + a.str() + " is not closed");
    if (a.contains(p))
        throw Error(Errc::not_disjoint, "point " + std::to_string(p) + " lies in A = " + a.str());
    return detail::search_partition(x, PointSet::single(x.size(), p), a, avoid);
}

/// Large inductive dimension, by recursion over partitions between disjoint
/// closed pairs. ∞ as soon as some pair admits no partition at all.
inline DimValue large_ind(const FiniteSpace& x) {
    if (x.size() == 0)
        return DimValue::neg_one();
    return detail::memoized(detail::large_ind_memo(), x, [](const FiniteSpace& s) {
        const auto closed = s.closed_sets();
        DimValue result = DimValue::finite(0);
        for (std::size_t i = 0; i < closed.size(); ++i) {
            if (closed[i].empty())
                continue;
            for (std::size_t j = i + 1; j < closed.size(); ++j) {
                if (closed[j].empty() || closed[i].intersects(closed[j]))
                    continue;
                const DimValue best = detail::min_partition_dim(s, closed[i], closed[j],
                                                                [](const FiniteSpace& l) { return large_ind(l); });
                if (best.is_infinite())
                    return best;
                result = std::max(result, best.successor());
            }
        }
        return result;
    });
}

inline DimValue ind_boundary(const FiniteSpace& x);

/// Local small inductive dimension at p in boundary form. Any open U with
/// p ∈ U ⊆ N(p) equals N(p), so ind_p = 1 + ind Bd N(p).
inline DimValue ind_at(const FiniteSpace& x, int p) {
    const PointSet nb = x.min_nbhd(p);
    const PointSet bd = x.closure(nb) - nb;
    return bd.empty() ? DimValue::finite(0) : ind_boundary(subspace(x, bd).space).successor();
}

/// Small inductive dimension, boundary form: sup over points of ind_at.
inline DimValue ind_boundary(const FiniteSpace& x) {
    if (x.size() == 0)
        return DimValue::neg_one();
    return detail::memoized(detail::ind_boundary_memo(), x, [](const FiniteSpace& s) {
        DimValue result = DimValue::finite(0);
        for (int p = 0; p < s.size(); ++p)
            result = std::max(result, ind_at(s, p));
        return result;
    });
}

/// Boundary-form ind with the full quantifier: every open O ∋ p, every open
/// U with p ∈ U ⊆ O. Unmemoized; reference for ind_boundary.
inline DimValue ind_boundary_literal(const FiniteSpace& x) {
    if (x.size() == 0)
        return DimValue::neg_one();
    DimValue result = DimValue::finite(0);
    for (int p = 0; p < x.size(); ++p) {
        for (const PointSet o : x.opens()) {
            if (!o.contains(p))
                continue;
            DimValue best = DimValue::infinite();
            for (const PointSet u : x.opens()) {
                if (!u.contains(p) || !u.subset_of(o))
                    continue;
                const PointSet bd = x.boundary(u);
                const DimValue d = bd.empty() ? DimValue::neg_one() : ind_boundary_literal(subspace(x, bd).space);
                best = std::min(best, d);
            }
            result = std::max(result, best.successor());
        }
    }
    return result;
}

/// Small inductive dimension, partition form: every point p and closed A ∌ p
/// need a partition L between them with ind L ≤ n - 1.
inline DimValue ind_partition(const FiniteSpace& x) {
    if (x.size() == 0)
        return DimValue::neg_one();
    return detail::memoized(detail::ind_partition_memo(), x, [](const FiniteSpace& s) {
        DimValue result = DimValue::finite(0);
        for (const PointSet a : s.closed_sets()) {
            if (a.empty())
                continue;
            for (int p = 0; p < s.size(); ++p) {
                if (a.contains(p))
                    continue;
                const DimValue best = detail::min_partition_dim(s, PointSet::single(s.size(), p), a,
                                                                [](const FiniteSpace& l) { return ind_partition(l); });
                if (best.is_infinite())
                    return best;
                result = std::max(result, best.successor());
            }
        }
        return result;
    });
}

namespace detail {

// Is there a cover of every point by distinct members of `cands` (each an open
// set) in which no point lies in more than `cap` members?
inline bool cover_with_multiplicity(std::span<const PointSet> cands, int n, int cap) {
    std::vector<int> load(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto& self, PointSet covered) -> bool {
        const PointSet todo = covered.complement();
        if (todo.empty())
            return true;
        const int p = todo.first();
        for (const PointSet w : cands) {
            if (!w.contains(p))
                continue;
            bool fits = true;
            w.for_each([&](int y) { fits = fits && load[y] < cap; });
            if (!fits)
                continue;
            w.for_each([&](int y) { ++load[y]; });
            const bool ok = self(self, covered | w);
            w.for_each([&](int y) { --load[y]; });
            if (ok)
                return true;
        }
        return false;
    };
    return rec(rec, PointSet::none(n));
}

} // namespace detail

/// Covering dimension. The min-nbhd cover refines every open cover, so dim is
/// the least order of an open cover refining {N(x)}; covers are searched with
/// an order cap, smallest cap first.
inline DimValue cov_dim(const FiniteSpace& x) {
    const int n = x.size();
    if (n == 0)
        return DimValue::neg_one();
    std::vector<PointSet> cands;
    for (const PointSet w : x.opens()) {
        if (w.empty())
            continue;
        for (int y = 0; y < n; ++y) {
            if (w.subset_of(x.min_nbhd(y))) {
                cands.push_back(w);
                break;
            }
        }
    }
    for (int k = 0; k < n; ++k)
        if (detail::cover_with_multiplicity(cands, n, k + 1))
            return DimValue::finite(k);
    // {N(x)} itself has order at most n - 1.
    assert(false);
    return DimValue::finite(n - 1);
}

/// Covering dimension straight from the definition: for every finite open
/// cover C, the least ord of an open cover refining C; dim is the worst case.
/// Doubly exponential, guarded to 4 points.
inline DimValue cov_dim_oracle(const FiniteSpace& x, int max_points = 4) {
    const int n = x.size();
    if (n > max_points)
        throw Error(Errc::size_guard_exceeded, "cov_dim_oracle on " + std::to_string(n) + " points exceeds guard of " +
                                                   std::to_string(max_points));
    if (n == 0)
        return DimValue::neg_one();
    std::vector<PointSet> opens;
    for (const PointSet o : x.opens())
        if (!o.empty())
            opens.push_back(o);
    const std::size_t m = opens.size();
    const PointSet full = x.ground();
    const std::uint32_t family_count = std::uint32_t{1} << m;

    auto union_of = [&](std::uint32_t mask) {
        PointSet u = PointSet::none(n);
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1U)
                u |= opens[i];
        return u;
    };
    auto family = [&](std::uint32_t mask) {
        std::vector<PointSet> f;
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1U)
                f.push_back(opens[i]);
        return f;
    };

    // Minimum ord over covers drawn from a candidate mask, memoized because
    // many covers C share the same set of refining opens.
    std::unordered_map<std::uint32_t, DimValue> best_for;
    auto best_refinement = [&](std::uint32_t cand) {
        if (auto it = best_for.find(cand); it != best_for.end())
            return it->second;
        DimValue best = DimValue::infinite();
        for (std::uint32_t nu = 1; nu < family_count; ++nu) {
            if ((nu & ~cand) != 0 || union_of(nu) != full)
                continue;
            const auto f = family(nu);
            best = std::min(best, ord(f));
        }
        best_for.emplace(cand, best);
        return best;
    };

    DimValue result = DimValue::neg_one();
    for (std::uint32_t c = 1; c < family_count; ++c) {
        if (union_of(c) != full)
            continue;
        std::uint32_t cand = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (((c >> j) & 1U) && opens[i].subset_of(opens[j])) {
                    cand |= std::uint32_t{1} << i;
                    break;
                }
        result = std::max(result, best_refinement(cand));
    }
    return result;
}

/// Which dimension function to use where one is selectable.
enum class DimKind { ind, Ind, dim };

inline DimValue dimension(const FiniteSpace& x, DimKind kind) {
    switch (kind) {
    case DimKind::ind: return ind_boundary(x);
    case DimKind::Ind: return large_ind(x);
    case DimKind::dim: return cov_dim(x);
    }
    return DimValue::infinite();
}

inline std::string_view dim_kind_name(DimKind k) {
    switch (k) {
    case DimKind::ind: return "ind";
    case DimKind::Ind: return "Ind";
    case DimKind::dim: return "dim";
    }
    return "?";
}

} // namespace fintop
