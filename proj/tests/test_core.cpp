#include <gtest/gtest.h>

#include "support.hpp"

using namespace fintop;
using namespace fintop::testing;

namespace {

template <class F>
Errc error_code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return Errc::io_error;
}

} // namespace

TEST(BuildSpace, SierpinskiFromOpens) {
    const FiniteSpace s = FiniteSpace::from_opens(2, opens_of({{}, {1}, {0, 1}}, 2));
    EXPECT_EQ(s.min_nbhd(0), ps(2, {0, 1}));
    EXPECT_EQ(s.min_nbhd(1), ps(2, {1}));
    EXPECT_EQ(s, FiniteSpace::sierpinski());
}

TEST(BuildSpace, MissingUnionIsAxiomViolation) {
    EXPECT_EQ(error_code_of([] { FiniteSpace::from_opens(3, opens_of({{}, {1}, {2}, {0, 1, 2}}, 3)); }),
              Errc::axiom_violation);
    try {
        FiniteSpace::from_opens(3, opens_of({{}, {1}, {2}, {0, 1, 2}}, 3));
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("{1,2}"), std::string::npos) << e.what();
    }
}

TEST(BuildSpace, ChainFromNeighborhoods) {
    const FiniteSpace c = FiniteSpace::from_min_nbhds(3, opens_of({{0, 1, 2}, {1, 2}, {2}}, 3));
    EXPECT_EQ(sorted_opens(c), opens_of({{}, {2}, {1, 2}, {0, 1, 2}}, 3));
    EXPECT_EQ(c, FiniteSpace::chain(3));
}

TEST(BuildSpace, Errors) {
    EXPECT_EQ(error_code_of([] { FiniteSpace::from_opens(2, opens_of({{1}, {0, 1}}, 2)); }), Errc::axiom_violation);
    EXPECT_EQ(error_code_of([] { FiniteSpace::from_opens(2, opens_of({{}, {1}}, 2)); }), Errc::axiom_violation);
    EXPECT_EQ(error_code_of([] { FiniteSpace::from_opens(17, {}); }), Errc::size_out_of_range);
    EXPECT_EQ(error_code_of([] { FiniteSpace::from_min_nbhds(2, opens_of({{1}, {1}}, 2)); }), Errc::axiom_violation);
    EXPECT_EQ(error_code_of([] { FiniteSpace::from_min_nbhds(3, opens_of({{0, 1}, {1, 2}, {2}}, 3)); }),
              Errc::axiom_violation);
    EXPECT_EQ(error_code_of([] { FiniteSpace::from_min_nbhds(3, opens_of({{0}, {1}}, 3)); }), Errc::size_mismatch);
}

TEST(BuildSpace, OpensFamilyRoundTrips) {
    for (const auto& x : all_spaces_upto(4)) {
        const FiniteSpace y = FiniteSpace::from_opens(x.size(), sorted_opens(x));
        EXPECT_EQ(x, y);
    }
}

TEST(Closure, Examples) {
    const FiniteSpace s = FiniteSpace::sierpinski();
    EXPECT_EQ(s.closure(ps(2, {1})), ps(2, {0, 1}));
    EXPECT_EQ(s.closure(PointSet::none(2)), PointSet::none(2));
    EXPECT_EQ(FiniteSpace::chain(3).closure(ps(3, {0})), ps(3, {0}));
}

TEST(Boundary, Examples) {
    EXPECT_EQ(FiniteSpace::sierpinski().boundary(ps(2, {1})), ps(2, {0}));
    const FiniteSpace d = FiniteSpace::discrete(3);
    for_each_subset(d.ground(), [&](PointSet s) { EXPECT_TRUE(d.boundary(s).empty()); });
    EXPECT_EQ(FiniteSpace::chain(3).boundary(ps(3, {2})), ps(3, {0, 1}));
}

TEST(Subspace, Examples) {
    EXPECT_EQ(subspace(FiniteSpace::chain(3), ps(3, {0, 1})).space, FiniteSpace::sierpinski());
    const FiniteSpace c = FiniteSpace::chain(3);
    EXPECT_EQ(subspace(c, c.ground()).space, c);
    EXPECT_EQ(subspace(FiniteSpace::discrete(3), ps(3, {0, 2})).space, FiniteSpace::discrete(2));
    EXPECT_EQ(error_code_of([&] { subspace(c, PointSet::none(3)); }), Errc::empty_carrier);
}

TEST(Separation, Examples) {
    const SeparationProfile s = separation_profile(FiniteSpace::sierpinski());
    EXPECT_TRUE(s.t0);
    EXPECT_FALSE(s.t1);
    EXPECT_TRUE(s.normal);
    EXPECT_TRUE(s.hereditarily_normal);

    const SeparationProfile d = separation_profile(FiniteSpace::discrete(3));
    EXPECT_TRUE(d.t0 && d.t1 && d.t2 && d.regular && d.normal && d.hereditarily_normal && d.collectionwise_normal &&
                d.hereditarily_collectionwise_normal);

    const SeparationProfile i = separation_profile(FiniteSpace::indiscrete(2));
    EXPECT_FALSE(i.t0);
    EXPECT_TRUE(i.normal);
    EXPECT_TRUE(i.hereditarily_normal);
}

TEST(Density, Examples) {
    EXPECT_EQ(density(FiniteSpace::sierpinski()), 1);
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(density(FiniteSpace::discrete(n)), n);
        EXPECT_EQ(density(FiniteSpace::indiscrete(n)), 1);
    }
}

TEST(IsolatedPoints, Examples) {
    EXPECT_EQ(isolated_points(FiniteSpace::sierpinski()), ps(2, {1}));
    EXPECT_TRUE(isolated_points(FiniteSpace::indiscrete(2)).empty());
    EXPECT_TRUE(isolated_points(FiniteSpace::discrete(4)).is_full());
}

TEST(SpaceIo, ReadsDataFiles) {
    const std::string dir = FINTOP_DATA_DIR;
    EXPECT_EQ(read_space_file(dir + "/sierpinski.topo"), FiniteSpace::sierpinski());
    EXPECT_EQ(read_space_file(dir + "/chain3.topo"), FiniteSpace::chain(3));
    EXPECT_EQ(error_code_of([&] { read_space_file(dir + "/not_closed.topo"); }), Errc::axiom_violation);
    EXPECT_EQ(error_code_of([&] { read_space_file(dir + "/missing.topo"); }), Errc::io_error);
}

TEST(SpaceIo, RejectsMalformedObjects) {
    EXPECT_EQ(error_code_of([] { space_from_json(json::parse(R"({"points":2})")); }), Errc::parse_error);
    EXPECT_EQ(error_code_of([] {
                  space_from_json(json::parse(R"({"points":2,"opens":[[],[0,1]],"min_nbhds":[[0,1],[0,1]]})"));
              }),
              Errc::parse_error);
    EXPECT_EQ(error_code_of([] { space_from_json(json::parse(R"({"points":2,"opens":[[],[1,0]]})")); }),
              Errc::parse_error);
    EXPECT_EQ(error_code_of([] { space_from_json(json::parse(R"({"points":0,"opens":[[]]})")); }),
              Errc::size_out_of_range);
}

TEST(SpaceIo, RoundTripsBothForms) {
    for (const auto& x : all_spaces_upto(3)) {
        EXPECT_EQ(space_from_json(space_to_json(x, true)), x);
        EXPECT_EQ(space_from_json(space_to_json(x, false)), x);
    }
}

// Properties over every labeled topology with n ≤ 4.

TEST(CoreProperties, ClosureMatchesDefinitionAndKuratowskiLaws) {
    for (const auto& x : all_spaces_upto(4)) {
        for_each_subset(x.ground(), [&](PointSet s) {
            const PointSet c = x.closure(s);
            EXPECT_EQ(c, closure_by_opens(x, s));
            EXPECT_TRUE(s.subset_of(c));
            EXPECT_EQ(x.closure(c), c);
            EXPECT_TRUE(x.is_closed(c));
            EXPECT_EQ(x.boundary(s), x.boundary(s.complement()));
            for_each_subset(x.ground(), [&](PointSet t) {
                if (s.subset_of(t))
                    EXPECT_TRUE(c.subset_of(x.closure(t)));
            });
        });
    }
}

TEST(CoreProperties, SubspaceComposition) {
    for (const auto& x : all_spaces_upto(4)) {
        for_each_subset(x.ground(), [&](PointSet s) {
            if (s.empty())
                return;
            const Subspace outer = subspace(x, s);
            for_each_subset(outer.space.ground(), [&](PointSet t) {
                if (t.empty())
                    return;
                const Subspace inner = subspace(outer.space, t);
                EXPECT_EQ(inner.space, subspace(x, to_parent(outer, t, x.size())).space);
            });
        });
    }
}

TEST(CoreProperties, SubspaceOpensAreTraces) {
    for (const auto& x : all_spaces_upto(4)) {
        for_each_subset(x.ground(), [&](PointSet s) {
            if (s.empty())
                return;
            const Subspace sub = subspace(x, s);
            std::vector<PointSet> traces;
            for (auto o : x.opens())
                traces.push_back(to_child(sub, o));
            std::sort(traces.begin(), traces.end());
            traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
            EXPECT_EQ(std::vector<PointSet>(sub.space.opens().begin(), sub.space.opens().end()), traces);
        });
    }
}

TEST(CoreProperties, HereditaryNormalityTwoWays) {
    for (const auto& x : all_spaces_upto(4))
        EXPECT_EQ(is_hereditarily_normal(x), is_hereditarily_normal_by_subspaces(x));
}

TEST(CoreProperties, ProfileImplications) {
    for (const auto& x : all_spaces_upto(4)) {
        const SeparationProfile p = separation_profile(x);
        EXPECT_TRUE(!p.t2 || p.t1);
        EXPECT_TRUE(!p.t1 || p.t0);
        EXPECT_TRUE(!p.hereditarily_normal || p.normal);
        EXPECT_TRUE(!p.hereditarily_collectionwise_normal || p.collectionwise_normal);
        EXPECT_TRUE(!p.hereditarily_collectionwise_normal || p.hereditarily_normal);
        EXPECT_TRUE(!p.collectionwise_normal || p.normal);
    }
}

TEST(CoreProperties, DensityBoundAndT1IsDiscrete) {
    for (const auto& x : all_spaces_upto(4)) {
        const int d = density(x);
        EXPECT_LE(d, x.size());
        EXPECT_EQ(d == x.size(), is_t1(x));
        EXPECT_EQ(is_t1(x), x == FiniteSpace::discrete(x.size()));
    }
}

TEST(CoreProperties, InteriorIsLargestOpenSubset) {
    for (const auto& x : all_spaces_upto(4)) {
        for_each_subset(x.ground(), [&](PointSet s) {
            PointSet best = PointSet::none(x.size());
            for (auto o : x.opens())
                if (o.subset_of(s))
                    best = best | o;
            EXPECT_EQ(x.interior(s), best);
        });
    }
}
