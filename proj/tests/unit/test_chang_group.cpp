#include <gtest/gtest.h>

#include "blchang/chang_group.hpp"
#include "blchang/errors.hpp"
#include "fixtures.hpp"

using namespace blchang;
using namespace blchang::test;

namespace {

GroupElt elt(const ChangGroup& G, const char* a, const char* b) {
    return G.make(seq(G.algebra(), a), seq(G.algebra(), b));
}

const Strategy kChain = Strategy::chain_search();

} // namespace

TEST(ClassEq, LukasiewiczCancellative) {
    ChangGroup G(luk_q());
    EXPECT_EQ(G.eq(elt(G, "(3/4)", "(1/4)"), elt(G, "(1/2)", "(0)"), Strategy::cancellative()), EqDecision::Equal);
    EXPECT_EQ(G.eq(elt(G, "(3/4)", "(1/4)"), elt(G, "(1/2)", "(0)"), kChain), EqDecision::Equal);
    EXPECT_EQ(G.eq(elt(G, "(3/4)", "(0)"), elt(G, "(1/2)", "(0)"), kChain), EqDecision::NotEqual);
}

TEST(ClassEq, GodelNeedsWitness) {
    ChangGroup G(godel_q());
    auto g = elt(G, "(1/2)", "(3/4)");
    EXPECT_EQ(G.eq(g, G.zero(), kChain), EqDecision::Equal);
    auto w = G.eq_witness(g, G.zero(), kChain);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(gs_add(g.pos(), *w), gs_add(g.neg(), *w));
    // The hand-checked witness (1/2).
    auto k = seq(G.algebra(), "(1/2)");
    EXPECT_EQ(gs_add(g.pos(), k), seq(G.algebra(), "(1,1/2)"));
    EXPECT_EQ(gs_add(g.neg(), k), seq(G.algebra(), "(1,1/2)"));
    EXPECT_THROW(G.eq(g, G.zero(), Strategy::cancellative()), StrategyMisuse);
}

TEST(ClassEq, ProductNotEqual) {
    ChangGroup G(product_q());
    EXPECT_EQ(G.eq(elt(G, "(1/2)", "(1/4)"), G.zero(), Strategy::cancellative()), EqDecision::NotEqual);
    EXPECT_EQ(G.eq(elt(G, "(1/2)", "(1/4)"), G.zero(), kChain), EqDecision::NotEqual);
}

TEST(ClassEq, StructuralImpliesEqual) {
    ChangGroup G(godel(4));
    auto g = elt(G, "(1,1/3)", "(2/3)");
    EXPECT_EQ(G.eq(g, g, kChain), EqDecision::Equal);
    EXPECT_EQ(G.eq(g, g, Strategy::bounded()), EqDecision::Equal);
}

TEST(ClassEq, BoundedNeverSaysNotEqual) {
    ChangGroup G(godel(4));
    auto d = G.eq(G.unit(), G.zero(), Strategy::bounded(2));
    EXPECT_EQ(d, EqDecision::Unknown);
    EXPECT_EQ(G.eq(G.unit(), G.zero(), kChain), EqDecision::NotEqual);
}

TEST(ClassEq, ForeignElementRejected) {
    ChangGroup G(luk_q()), H(luk_q());
    EXPECT_THROW(G.eq(G.zero(), H.zero(), kChain), DomainError);
}

TEST(ChainSearch, RefusedOnNonChainNonProduct) {
    auto A = std::make_shared<DirectProduct>(std::vector<AlgebraPtr>{luk(2), luk(3)});
    auto sub = std::make_shared<Subalgebra>(A, std::vector<Elt>{A->bottom(), A->top()});
    ChangGroup P(A);
    EXPECT_TRUE(P.chain_search_applies());
    ChangGroup S(sub);
    EXPECT_TRUE(S.chain_search_applies()); // a two-element subalgebra is a chain
}

TEST(GroupOps, Examples) {
    ChangGroup G(luk_q());
    auto g = elt(G, "(1/2)", "(0)"), h = elt(G, "(3/4)", "(0)");
    EXPECT_EQ(G.add(g, h), elt(G, "(1,1/4)", "(0)"));
    EXPECT_EQ(G.eq(G.add(g, G.neg(g)), G.zero(), kChain), EqDecision::Equal);
    auto s = elt(G, "(1,1/2)", "(0)");
    EXPECT_EQ(G.leq(s, G.times(2, G.unit()), kChain), OrderDecision::Leq);
    EXPECT_EQ(G.leq(G.zero(), G.unit(), kChain), OrderDecision::Leq);
    EXPECT_EQ(G.leq(G.unit(), G.zero(), kChain), OrderDecision::NotLeq);
}

TEST(GroupOps, Join) {
    ChangGroup G(luk_q());
    auto g = elt(G, "(1/4)", "(1/2)");
    auto j = G.join(g, G.zero());
    EXPECT_EQ(j, elt(G, "(1/2)", "(1/2)"));
    EXPECT_EQ(G.eq(j, G.zero(), kChain), EqDecision::Equal);
    EXPECT_EQ(G.eq(G.join(g, g), g, kChain), EqDecision::Equal);
}

TEST(GroupOps, ProductOrderExample) {
    ChangGroup G(product_q());
    auto lo = elt(G, "(1/4)", "(1/2)"), hi = elt(G, "(1/2)", "(1/4)");
    EXPECT_EQ(G.leq(lo, G.zero(), kChain), OrderDecision::Leq);
    EXPECT_EQ(G.leq(G.zero(), hi, kChain), OrderDecision::Leq);
    EXPECT_EQ(G.leq(hi, G.zero(), kChain), OrderDecision::NotLeq);
}

TEST(GroupOps, TimesNegative) {
    ChangGroup G(luk(5));
    auto g = elt(G, "(1/4)", "(0)");
    EXPECT_EQ(G.eq(G.times(-3, g), G.neg(G.times(3, g)), kChain), EqDecision::Equal);
    EXPECT_EQ(G.times(0, g), G.zero());
}

TEST(IntervalOps, RecoverLukasiewicz) {
    auto L = luk(5);
    ChangGroup G(L);
    for (const auto& x : L->elements())
        for (const auto& y : L->elements()) {
            auto gx = G.of(GoodSeq::make(L, {x})), gy = G.of(GoodSeq::make(L, {y}));
            EXPECT_EQ(G.eq(G.interval_otimes(gx, gy), G.of(GoodSeq::make(L, {L->otimes(x, y)})), kChain),
                      EqDecision::Equal);
            EXPECT_EQ(G.eq(G.interval_imp(gx, gy), G.of(GoodSeq::make(L, {L->imp(x, y)})), kChain),
                      EqDecision::Equal);
        }
}

TEST(Theta, ProductChain) {
    ChangGroup G(product_q());
    auto g = elt(G, "(1/2)", "(1/4)");
    EXPECT_TRUE(G.in_S(g));
    auto t = G.theta(g);
    ASSERT_NE(G.mv_group(), nullptr);
    EXPECT_EQ(G.mv_group()->eq(t.mv_part, G.mv_group()->zero(), kChain), EqDecision::Equal);
    EXPECT_EQ(G.eq(t.s_part, g, kChain), EqDecision::Equal);
    EXPECT_EQ(G.eq(G.add(t.mv_embedded, t.s_part), g, kChain), EqDecision::Equal);
    EXPECT_EQ(G.embed_mv(t.mv_part), t.mv_embedded);
}

TEST(Theta, GodelChain) {
    ChangGroup G(godel_q());
    auto g = elt(G, "(1,1/2)", "(3/4)");
    auto t = G.theta(g);
    EXPECT_EQ(G.eq(t.s_part, G.zero(), kChain), EqDecision::Equal);
    EXPECT_EQ(G.eq(t.mv_embedded, g, kChain), EqDecision::Equal);
    EXPECT_EQ(G.eq(t.mv_embedded, G.unit(), kChain), EqDecision::Equal);
}

TEST(Theta, MvAlgebraHasTrivialS) {
    ChangGroup G(luk(4));
    Rng rng(4);
    for (int i = 0; i < 50; ++i) {
        GroupElt g(random_good_seq(G.algebra(), rng, 3), random_good_seq(G.algebra(), rng, 3));
        EXPECT_EQ(G.eq(G.theta(g).s_part, G.zero(), kChain), EqDecision::Equal);
    }
}

TEST(InS, Examples) {
    ChangGroup G(product_q());
    EXPECT_TRUE(G.in_S(G.zero()));
    EXPECT_TRUE(G.in_S(elt(G, "(1/2)", "(1/4)")));
    EXPECT_FALSE(G.in_S(G.unit()));
}

TEST(Canonical, Rewrites) {
    ChangGroup G(luk_q());
    auto c = chain_canonical(elt(G, "(0)", "(1/2)"));
    EXPECT_EQ(c.rep, elt(G, "(1)", "(1,1/2)"));
    EXPECT_EQ(c.p, 0u);
    EXPECT_EQ(c.a, q("1"));
    EXPECT_EQ(c.q, 1u);
    EXPECT_EQ(c.b, q("1/2"));
    EXPECT_EQ(render_canonical(c, *G.algebra()), "[(1),(1,1/2)]");
    c = chain_canonical(elt(G, "(1/2)", "(0)"));
    EXPECT_EQ(c.rep, elt(G, "(1,1/2)", "(1)"));
    auto g = elt(G, "(1,1,1/3)", "(1/4)");
    EXPECT_EQ(chain_canonical(g).rep, g);
    EXPECT_EQ(render_canonical(chain_canonical(g), *G.algebra()), "[(1^2,1/3),(1/4)]");
}

TEST(Canonical, ClassPreserved) {
    for (auto A : {luk_q(), godel_q(), product_q()}) {
        ChangGroup G(A);
        Rng rng(12);
        for (int i = 0; i < 100; ++i) {
            GroupElt g(random_good_seq(A, rng, 3), random_good_seq(A, rng, 3));
            EXPECT_EQ(G.eq(chain_canonical(g).rep, g, kChain), EqDecision::Equal);
        }
    }
}

TEST(Godel, ToInt) {
    ChangGroup G(godel_q());
    EXPECT_EQ(godel_to_int(G.zero()), 0);
    EXPECT_EQ(godel_to_int(G.unit()), 1);
    auto g = elt(G, "(1,1,1/2)", "(1/3)");
    EXPECT_EQ(godel_to_int(g), 2);
    EXPECT_EQ(G.eq(G.sub(g, G.times(2, G.unit())), G.zero(), kChain), EqDecision::Equal);
    EXPECT_EQ(G.eq(godel_from_int(G, -3), G.times(-3, G.unit()), kChain), EqDecision::Equal);
    ChangGroup L(luk_q());
    EXPECT_THROW(godel_to_int(L.unit()), UnsupportedShape);
    ChangGroup F(godel(4));
    EXPECT_EQ(godel_to_int(F.unit()), 1);
}

TEST(ProductIso, Examples) {
    ChangGroup G(product_q());
    EXPECT_EQ(product_iso(G.zero()), (ProductIsoValue{0, 1}));
    EXPECT_EQ(product_iso(elt(G, "(1/2)", "(1/4)")), (ProductIsoValue{0, 2}));
    EXPECT_EQ(product_iso(elt(G, "(1^2,1/3)", "(1,1/2)")), (ProductIsoValue{1, Rational(2, 3)}));
    EXPECT_EQ(render(ProductIsoValue{1, Rational(2, 3)}), "φ=(1, 2/3)");
    for (auto v : {ProductIsoValue{3, Rational(5, 2)}, ProductIsoValue{-2, Rational(1, 7)}, ProductIsoValue{0, 1}})
        EXPECT_EQ(product_iso(product_iso_inverse(G, v)), v);
    EXPECT_TRUE(lex_leq({0, 5}, {1, Rational(1, 9)}));
    EXPECT_FALSE(lex_leq({1, 2}, {1, 1}));
}

TEST(HGroup, Examples) {
    auto P = product_q();
    HGroup H(P);
    ChangGroup G(P);
    EXPECT_EQ(G.eq(H.to_chang(H.identity()), G.zero(), kChain), EqDecision::Equal);
    auto s = H.add(H.make(q("1/2"), q("1/4")), H.make(q("1/3"), q("1")));
    EXPECT_EQ(s.a, q("1/6"));
    EXPECT_EQ(s.b, q("1/4"));
    for (int k = 1; k <= 20; ++k)
        EXPECT_TRUE(H.leq(H.make(Elt::rational(Rational(1, k)), q("1")), H.identity()));
    EXPECT_THROW(H.make(q("0"), q("1")), DomainError);
    EXPECT_THROW(HGroup{luk_q()}, UnsupportedShape);
}

TEST(Cache, FillsAndStaysConsistent) {
    ChangGroup G(godel(5));
    auto g = elt(G, "(1/2)", "(3/4)");
    const auto first = G.eq(g, G.zero(), kChain);
    const auto size = G.cache_size();
    EXPECT_GT(size, 0u);
    EXPECT_EQ(G.eq(g, G.zero(), kChain), first);
    EXPECT_EQ(G.cache_size(), size);
}

TEST(Products, FactorwiseAgreesWithBounded) {
    auto A = std::make_shared<DirectProduct>(std::vector<AlgebraPtr>{luk(2), godel(3)});
    ChangGroup G(A);
    auto all = enumerate_good_seqs(A, 2);
    std::size_t checked = 0;
    for (std::size_t i = 0; i < all.size(); i += 3)
        for (std::size_t j = 0; j < all.size(); j += 5) {
            GroupElt g(all[i], all[j]);
            auto c = G.eq(g, G.zero(), kChain);
            auto b = G.eq(g, G.zero(), Strategy::bounded());
            ASSERT_NE(c, EqDecision::Unknown);
            if (b != EqDecision::Unknown)
                EXPECT_EQ(b, c) << render(g);
            if (c == EqDecision::Equal) {
                auto w = G.eq_witness(g, G.zero(), kChain);
                ASSERT_TRUE(w);
                EXPECT_EQ(gs_add(g.pos(), *w), gs_add(g.neg(), *w));
            }
            ++checked;
        }
    EXPECT_GT(checked, 0u);
}
