#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace fintop;
using namespace fintop::testing;

namespace {

const ClassPredicate ind0 = class_by_name("ind0");
const ClassPredicate dim0 = class_by_name("dim0");

void expect_valid_witness(const FiniteSpace& tau, const ClassPredicate& pred, const SnValue& v) {
    ASSERT_TRUE(v.is_finite());
    ASSERT_EQ(static_cast<int>(v.witness.size()), v.k);
    for (const auto& mu : v.witness) {
        EXPECT_TRUE(is_extension(tau, mu));
        for (auto a : atom_names)
            if (pred.atoms & atom_bit(a.first))
                EXPECT_TRUE(eval_atom(mu, a.first)) << a.second;
    }
    EXPECT_EQ(meet(v.witness), tau);
}

Errc error_code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::io_error;
}

} // namespace

TEST(Classes, NamesAndAtoms) {
    for (const char* name : {"ind0", "Ind0", "dim0", "hn", "hn-ind0", "hn-Ind0", "hn-dim0", "hcn-ind0", "hcn-Ind0",
                             "hcn-dim0"})
        EXPECT_EQ(class_by_name(name).name, name);
    EXPECT_EQ(class_by_name("hn+dim0"), class_by_name("hn-dim0"));
    EXPECT_TRUE(class_by_name("hn-dim0").subclass_of(class_by_name("dim0")));
    EXPECT_FALSE(class_by_name("dim0").subclass_of(class_by_name("hn-dim0")));
    EXPECT_EQ(error_code_of([] { class_by_name("bogus"); }), Errc::parse_error);
}

TEST(Classes, CachedAnswerMatchesDirectEvaluation) {
    for (const auto& x : all_spaces_upto(4))
        for (const auto& c : named_classes()) {
            bool direct = true;
            for (auto a : atom_names)
                if (c.atoms & atom_bit(a.first))
                    direct = direct && eval_atom(x, a.first);
            EXPECT_EQ(c(x), direct) << c.name;
        }
}

TEST(AExtensions, Examples) {
    const FiniteSpace s = FiniteSpace::sierpinski();
    EXPECT_EQ(a_extensions(s, ind0), std::vector<FiniteSpace>{FiniteSpace::discrete(2)});
    const auto d = a_extensions(s, dim0);
    EXPECT_EQ(std::set<FiniteSpace>(d.begin(), d.end()), (std::set<FiniteSpace>{s, FiniteSpace::discrete(2)}));
    for (const auto& c : named_classes())
        EXPECT_EQ(a_extensions(FiniteSpace::discrete(3), c), std::vector<FiniteSpace>{FiniteSpace::discrete(3)});
}

TEST(Sn, Examples) {
    const FiniteSpace s = FiniteSpace::sierpinski();
    const SnValue a = sn(s, ind0);
    EXPECT_FALSE(a.is_finite());
    ASSERT_TRUE(a.certificate);
    EXPECT_EQ(*a.certificate, ps(2, {0}));

    const SnValue b = sn(s, dim0);
    ASSERT_TRUE(b.is_finite());
    EXPECT_EQ(b.k, 1);
    EXPECT_EQ(b.witness, std::vector<FiniteSpace>{s});

    const SnValue c = sn(FiniteSpace::discrete(3), dim0);
    ASSERT_TRUE(c.is_finite());
    EXPECT_EQ(c.k, 1);
}

TEST(Sn, RelabelledSierpinskiBehavesTheSame) {
    const SnValue v = sn(left_open2(), ind0);
    EXPECT_FALSE(v.is_finite());
    ASSERT_TRUE(v.certificate);
    EXPECT_EQ(*v.certificate, ps(2, {1}));
}

TEST(Sn, BoundExhaustedIsNotInfinity) {
    EXPECT_TRUE(sn(FiniteSpace::chain(3), dim0, 1).is_finite());
    int seen = 0;
    for (const auto& cls : enumerate_classes_upto(4))
        for (const auto& pred : named_classes()) {
            const SnValue full = sn(cls.space, pred);
            if (!full.is_finite() || full.k < 2)
                continue;
            ++seen;
            EXPECT_EQ(error_code_of([&] { sn(cls.space, pred, full.k - 1); }), Errc::bound_exhausted);
            EXPECT_EQ(sn(cls.space, pred, full.k).k, full.k);
        }
    EXPECT_GT(seen, 0);
}

TEST(SnNaive, Examples) {
    EXPECT_EQ(error_code_of([] { sn_naive(FiniteSpace::sierpinski(), ind0, 3); }), Errc::bound_exhausted);
    const SnValue v = sn_naive(FiniteSpace::indiscrete(2), dim0, 3);
    ASSERT_TRUE(v.is_finite());
    EXPECT_EQ(v.k, 1);
    EXPECT_EQ(error_code_of([] { sn_naive(FiniteSpace::indiscrete(4), dim0, 3); }), Errc::size_guard_exceeded);
}

TEST(SnNaive, AgreesWithSnOnThreePoints) {
    for (const auto& cls : enumerate_classes_upto(3))
        for (const auto& pred : {ind0, dim0, class_by_name("Ind0"), class_by_name("hn-ind0")}) {
            const SnValue fast = sn(cls.space, pred);
            try {
                const SnValue slow = sn_naive(cls.space, pred, 4);
                ASSERT_TRUE(fast.is_finite()) << cls.code.str();
                EXPECT_EQ(fast.k, slow.k) << cls.code.str() << " " << pred.name;
            } catch (const Error& e) {
                ASSERT_EQ(e.code(), Errc::bound_exhausted);
                EXPECT_TRUE(!fast.is_finite() || fast.k > 4) << cls.code.str() << " " << pred.name;
            }
        }
}

TEST(Sn, WitnessesVerifyIndependently) {
    for (const auto& cls : enumerate_classes_upto(4))
        for (const auto& pred : named_classes()) {
            const SnValue v = sn(cls.space, pred, 0, EnumerationGuard{6});
            if (v.is_finite())
                expect_valid_witness(cls.space, pred, v);
            else if (v.certificate) {
                const PointSet s = *v.certificate;
                EXPECT_FALSE(cls.space.is_open(s));
                for (const auto& mu : a_extensions(cls.space, pred))
                    EXPECT_TRUE(mu.is_open(s));
            }
        }
}

TEST(Sn, InfinityCertificateMeansNoFamilyAtAll) {
    for (const auto& cls : enumerate_classes_upto(3))
        for (const auto& pred : named_classes()) {
            if (sn(cls.space, pred).is_finite())
                continue;
            const auto all = a_extensions(cls.space, pred);
            if (!all.empty())
                EXPECT_NE(meet(all), cls.space);
        }
}

TEST(Sn, MonotoneAcrossClasses) {
    for (const auto& cls : enumerate_classes_upto(4))
        for (const auto& a : named_classes())
            for (const auto& b : named_classes())
                if (a.subclass_of(b))
                    EXPECT_TRUE(sn(cls.space, b) <= sn(cls.space, a)) << cls.code.str() << a.name << b.name;
}

TEST(SnBh, Examples) {
    const SnValue d = sn_bh(FiniteSpace::discrete(3), dim0);
    ASSERT_TRUE(d.is_finite());
    EXPECT_EQ(d.k, 1);

    const FiniteSpace s = FiniteSpace::sierpinski();
    const SnValue v = sn_bh(s, dim0);
    ASSERT_TRUE(v.is_finite());
    EXPECT_EQ(v.k, 1);
    EXPECT_EQ(v.witness.front(), s);
    EXPECT_EQ(v.witness_sets.front(), ps(2, {0, 1}));

    EXPECT_FALSE(sn_bh(s, ind0).is_finite());
}

TEST(SnBh, BoundsSnAndSingletonCover) {
    for (const auto& cls : enumerate_classes_upto(4))
        for (const auto& pred : named_classes()) {
            const FiniteSpace& x = cls.space;
            const SnValue general = sn(x, pred, 0, EnumerationGuard{6});
            const SnValue bh = sn_bh(x, pred);
            EXPECT_TRUE(general <= bh) << cls.code.str() << " " << pred.name;
            if (bh.is_finite()) {
                expect_valid_witness(x, pred, bh);
                for (std::size_t i = 0; i < bh.witness.size(); ++i)
                    EXPECT_EQ(bh.witness[i], bing_hanner(x, bh.witness_sets[i]));
            }
            bool singletons_ok = true;
            for (int p = 0; p < x.size(); ++p)
                singletons_ok = singletons_ok && pred(bing_hanner(x, PointSet::single(x.size(), p)));
            if (singletons_ok)
                EXPECT_TRUE(bh.is_finite() && bh.k <= x.size());
        }
}

TEST(SnValue, Order) {
    const SnValue inf = SnValue::infinite(std::nullopt);
    const SnValue one = SnValue::finite({FiniteSpace::discrete(1)});
    const SnValue two = SnValue::finite({FiniteSpace::discrete(1), FiniteSpace::discrete(1)});
    EXPECT_TRUE(one <= two);
    EXPECT_FALSE(two <= one);
    EXPECT_TRUE(two <= inf);
    EXPECT_TRUE(inf <= inf);
    EXPECT_FALSE(inf <= one);
    EXPECT_EQ(inf.str(), "inf");
}

TEST(Decompose, Examples) {
    const FiniteSpace c = FiniteSpace::chain(3);
    const Decomposition a = decompose_zero_dim(c, DimKind::ind);
    EXPECT_EQ(a.k, 3);
    const Decomposition b = decompose_zero_dim(c, DimKind::dim);
    EXPECT_EQ(b.k, 1);
    EXPECT_EQ(b.pieces, std::vector<PointSet>{c.ground()});
    for (auto kind : {DimKind::ind, DimKind::Ind, DimKind::dim})
        EXPECT_EQ(decompose_zero_dim(FiniteSpace::discrete(4), kind).k, 1);
    EXPECT_EQ(error_code_of([] { decompose_zero_dim(FiniteSpace::discrete(0), DimKind::dim); }), Errc::empty_carrier);
}

TEST(Decompose, PiecesCoverAndQualify) {
    for (const auto& x : all_spaces_upto(4))
        for (auto kind : {DimKind::ind, DimKind::Ind, DimKind::dim}) {
            const Decomposition d = decompose_zero_dim(x, kind);
            EXPECT_EQ(static_cast<int>(d.pieces.size()), d.k);
            EXPECT_LE(d.k, x.size());
            PointSet u = PointSet::none(x.size());
            for (auto p : d.pieces) {
                u |= p;
                EXPECT_LE(dimension(subspace(x, p).space, kind), DimValue::finite(0));
            }
            EXPECT_TRUE(u.is_full());
            if (dimension(x, kind) <= DimValue::finite(0))
                EXPECT_EQ(d.k, 1);
        }
}

TEST(Decompose, ChainNeedsOnePiecePerPointForInd) {
    for (int n = 1; n <= 6; ++n)
        EXPECT_EQ(decompose_zero_dim(FiniteSpace::chain(n), DimKind::ind).k, n);
}
