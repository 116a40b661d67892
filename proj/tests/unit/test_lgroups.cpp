#include <gtest/gtest.h>

#include "blchang/blalg_io.hpp"
#include "blchang/errors.hpp"
#include "blchang/lgroups.hpp"
#include "blchang/structure.hpp"
#include "fixtures.hpp"

using namespace blchang;
using namespace blchang::test;

namespace {

Elt z(long n) { return Elt::rational(Rational(n)); }

Elt pair(const char* m, const char* x) { return Elt::tuple({q(m), q(x)}); }

} // namespace

TEST(LGroup, ParseAndRender) {
    for (const char* d : {"Z(u=3)", "Qpos", "lex(Z(u=1), Qpos)", "prod(Z(u=1), Z(u=2))", "Qpos(u=3/2)"})
        EXPECT_EQ(parse_lgroup(d)->name(), d);
    EXPECT_EQ(parse_lgroup("Z")->name(), "Z(u=1)");
    EXPECT_THROW(parse_lgroup("Z(u=0)"), ParseError);
    EXPECT_THROW(parse_lgroup("Z(u=1/2)"), ParseError);
    EXPECT_THROW(parse_lgroup("lex(prod(Z, Z), Z)"), ParseError);
    EXPECT_THROW(parse_lgroup("lex(lex(Z, Z), Z)"), ParseError);
    EXPECT_THROW(parse_lgroup("R"), ParseError);
    EXPECT_THROW(parse_lgroup("prod(Z"), ParseError);
    auto G = parse_lgroup("lex(Z(u=1), Qpos)");
    EXPECT_EQ(G->render(G->unit()), "(1,1)");
    EXPECT_EQ(G->parse_value("(2, 4)"), pair("2", "4"));
    EXPECT_THROW(G->parse_value("(2, 0)"), ParseError);
}

TEST(LGroup, LexOrder) {
    auto G = parse_lgroup("lex(Z(u=1), Qpos)");
    EXPECT_TRUE(G->leq(pair("0", "100"), pair("1", "1/100")));
    EXPECT_TRUE(G->leq(pair("1", "1/2"), pair("1", "1")));
    EXPECT_EQ(G->meet(pair("1", "1/2"), pair("1", "3")), pair("1", "1/2"));
    EXPECT_EQ(G->join(pair("0", "5"), pair("1", "1/5")), pair("1", "1/5"));
    EXPECT_EQ(G->add(pair("1", "2"), pair("-1", "1/4")), pair("0", "1/2"));
    EXPECT_EQ(G->zero(), pair("0", "1"));
}

TEST(LGroup, JoinViaPositivePart) {
    for (const char* d : {"Z(u=3)", "Qpos", "lex(Z(u=1), Qpos)", "prod(Z(u=1), Z(u=2))", "lex(Z(u=2), Z(u=1))"}) {
        auto G = parse_lgroup(d);
        Rng rng(Rng::salt_of(d));
        for (int i = 0; i < 200; ++i) {
            Elt a = G->sample(rng), b = G->sample(rng);
            EXPECT_EQ(G->join(a, b), G->add(G->positive_part(G->sub(a, b)), b)) << d;
            EXPECT_EQ(G->sub(G->positive_part(a), G->negative_part(a)), a);
            Elt c = G->sample(rng);
            EXPECT_EQ(G->leq(a, b), G->leq(G->add(a, c), G->add(b, c)));
        }
    }
}

TEST(Gamma, IntegersThree) {
    auto L = gamma_interval(parse_lgroup("Z(u=3)"));
    ASSERT_EQ(L->size(), 4u);
    EXPECT_EQ(L->otimes(z(2), z(2)), z(1));
    EXPECT_EQ(L->imp(z(2), z(1)), z(2));
    EXPECT_TRUE(validate_bl_axioms(*L).ok());
    EXPECT_TRUE(is_mv_algebra(*L));
    EXPECT_TRUE(L->is_chain());
    // Same tables as the four-element Lukasiewicz chain up to the scaling x -> 3x.
    auto L4 = luk(4);
    for (long i = 0; i <= 3; ++i)
        for (long j = 0; j <= 3; ++j) {
            auto e = [](long k) { return Elt::rational(Rational(k, 3)); };
            EXPECT_EQ(L->otimes(z(i), z(j)).value() / 3, L4->otimes(e(i), e(j)).value());
            EXPECT_EQ(L->imp(z(i), z(j)).value() / 3, L4->imp(e(i), e(j)).value());
        }
}

TEST(Gamma, UnitOneIsBoolean) {
    auto L = gamma_interval(parse_lgroup("Z(u=1)"));
    EXPECT_EQ(L->size(), 2u);
    EXPECT_TRUE(validate_bl_axioms(*L).ok());
}

TEST(Gamma, ProductOfIntegersIsProductOfChains) {
    auto L = gamma_interval(parse_lgroup("prod(Z(u=1), Z(u=2))"));
    EXPECT_EQ(L->size(), 6u);
    EXPECT_FALSE(L->is_chain());
    EXPECT_TRUE(validate_bl_axioms(*L).ok());
    EXPECT_TRUE(is_mv_algebra(*L));
}

TEST(Gamma, LexIntegerRationals) {
    auto L = gamma_interval(parse_lgroup("lex(Z(u=1), Qpos)"));
    EXPECT_FALSE(L->is_finite());
    EXPECT_TRUE(L->contains(pair("0", "7")));
    EXPECT_TRUE(L->contains(pair("0", "1")));
    EXPECT_FALSE(L->contains(pair("0", "1/2")));
    EXPECT_TRUE(L->contains(pair("1", "1/2")));
    EXPECT_TRUE(L->contains(pair("1", "1")));
    EXPECT_FALSE(L->contains(pair("1", "2")));
    EXPECT_FALSE(L->contains(pair("2", "1/9")));
    auto r = validate_bl_axioms(*L, {2000, 3});
    EXPECT_TRUE(r.ok()) << r.render(*L);
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        Elt x = L->sample(rng);
        EXPECT_TRUE(L->contains(x));
        EXPECT_EQ(L->double_neg(x), x);
    }
}

TEST(GoodSeqOfPositive, Examples) {
    auto L = gamma_interval(parse_lgroup("Z(u=3)"));
    EXPECT_EQ(good_seq_of_positive(L, z(7)), GoodSeq::make(L, {z(3), z(3), z(1)}));
    EXPECT_TRUE(good_seq_of_positive(L, z(0)).is_zero());
    EXPECT_THROW(good_seq_of_positive(L, z(-1)), DomainError);
    auto M = gamma_interval(parse_lgroup("lex(Z(u=1), Qpos)"));
    auto g = good_seq_of_positive(M, pair("2", "4"));
    EXPECT_EQ(g, GoodSeq::make(M, {pair("1", "1"), pair("1", "1"), pair("0", "4")}));
    EXPECT_EQ(sum_in_group(*M, g), pair("2", "4"));
}

TEST(GoodSeqOfPositive, UniqueOnSmallIntegers) {
    for (long n = 1; n <= 4; ++n) {
        auto L = gamma_interval(LGroup::integers(n));
        const auto all = enumerate_good_seqs(L, static_cast<std::size_t>(4 * n));
        for (long a = 0; a <= 4 * n; ++a) {
            std::size_t hits = 0;
            for (const auto& s : all)
                if (sum_in_group(*L, s) == z(a)) {
                    ++hits;
                    EXPECT_EQ(s, good_seq_of_positive(L, z(a)));
                }
            EXPECT_EQ(hits, 1u) << "n=" << n << " a=" << a;
        }
    }
}

TEST(Psi, Examples) {
    auto L = gamma_interval(parse_lgroup("Z(u=3)"));
    ChangGroup G(L);
    EXPECT_EQ(psi(G, z(0)), G.zero());
    EXPECT_EQ(psi(G, z(-2)), G.make(GoodSeq::zero(L), GoodSeq::make(L, {z(2)})));
    EXPECT_EQ(G.eq(psi(G, z(3)), G.unit(), Strategy::cancellative()), EqDecision::Equal);
    EXPECT_EQ(psi_inverse(G, psi(G, z(-8))), z(-8));
    ChangGroup H(luk(3));
    EXPECT_THROW(psi(H, z(1)), DomainError);
}

TEST(Psi, HomomorphismOnRange) {
    for (long n = 1; n <= 3; ++n) {
        auto L = gamma_interval(LGroup::integers(n));
        ChangGroup G(L);
        const auto s = Strategy::cancellative();
        for (long a = -4 * n; a <= 4 * n; ++a)
            for (long b = -4 * n; b <= 4 * n; b += 3) {
                EXPECT_EQ(G.eq(psi(G, z(a + b)), G.add(psi(G, z(a)), psi(G, z(b))), s), EqDecision::Equal);
                EXPECT_EQ(G.leq(psi(G, z(a)), psi(G, z(b)), s) == OrderDecision::Leq, a <= b);
            }
    }
}

TEST(Eta, Examples) {
    ChangGroup G(godel_q());
    EXPECT_EQ(eta(G, q("0")), G.zero());
    EXPECT_EQ(G.eq(eta(G, q("1")), G.unit(), Strategy::chain_search()), EqDecision::Equal);
    EXPECT_EQ(eta(G, q("1/2")), G.unit());
    ChangGroup L(luk_q());
    EXPECT_EQ(eta(L, q("1/2")), L.of(seq(L.algebra(), "(1/2)")));
}

TEST(Eta, PreservesOperations) {
    for (auto A : {two_plus_l3(), godel(4), luk(4)}) {
        ChangGroup G(A);
        const auto s = Strategy::chain_search();
        for (const auto& x : A->elements())
            for (const auto& y : A->elements()) {
                EXPECT_EQ(G.eq(eta(G, A->otimes(x, y)), G.interval_otimes(eta(G, x), eta(G, y)), s),
                          EqDecision::Equal);
                EXPECT_EQ(G.eq(eta(G, A->imp(x, y)), G.interval_imp(eta(G, x), eta(G, y)), s), EqDecision::Equal);
            }
    }
}

TEST(Morphism, TableValidation) {
    auto L4 = luk(4);
    auto B = luk(2);
    // Sending 1/3 and 2/3 to 0 breaks ->.
    EXPECT_THROW(BLMorphism::from_table(L4, B, {q("0"), q("0"), q("0"), q("1")}), ConstructionError);
    auto c = check_bl_morphism(*L4, *B, [](const Elt& x) { return x.value() == 1 ? q("1") : q("0"); });
    EXPECT_FALSE(c.ok);
    EXPECT_FALSE(c.witness.empty());
    auto id = BLMorphism::identity(L4);
    EXPECT_TRUE(id.certificate().ok);
    EXPECT_TRUE(id.certificate().exhaustive);
}

TEST(Morphism, XiOfIdentityAndInclusion) {
    auto A = two_plus_l3();
    ChangGroup G(A);
    auto id = BLMorphism::identity(A);
    Rng rng(6);
    for (int i = 0; i < 30; ++i) {
        GroupElt g(random_good_seq(A, rng, 3), random_good_seq(A, rng, 3));
        EXPECT_EQ(xi_map(id, G, g), g);
    }
    ASSERT_NE(G.mv_group(), nullptr);
    auto inc = BLMorphism::closed_form(G.mv_group()->algebra(), A, [](const Elt& x) { return x; }, "inclusion");
    for (int i = 0; i < 30; ++i) {
        GroupElt g(random_good_seq(A, rng, 3), random_good_seq(A, rng, 3));
        auto t = G.theta(g);
        EXPECT_EQ(xi_map(inc, G, t.mv_part), G.embed_mv(t.mv_part));
    }
    EXPECT_EQ(xi_map(inc, G, G.mv_group()->unit()), G.unit());
}

TEST(Homs, LukasiewiczToGodel) {
    auto L4 = tabulate(*luk(4)).table;
    auto G3 = tabulate(*godel(3)).table;
    auto there = enumerate_homs(L4, G3);
    EXPECT_TRUE(there.empty());
    auto back = enumerate_homs(G3, L4);
    ASSERT_EQ(back.size(), 1u);
    // The only map kills the middle element's double negation.
    EXPECT_EQ(render_table(back[0]), "0->0, 1/2->1, 1->1");
}

TEST(Homs, CollapseOnProductInterval) {
    auto A = gamma_interval(parse_lgroup("prod(Z(u=1), Z(u=2))"));
    auto G3 = godel(3);
    auto homs = enumerate_homs(A, G3);
    ASSERT_FALSE(homs.empty());
    for (const auto& f : homs) {
        auto c = check_two_valued_collapse(f);
        EXPECT_TRUE(c.applies);
        EXPECT_TRUE(c.holds);
    }
}

TEST(Homs, BooleanToBoolean) {
    auto B = luk(2);
    auto homs = enumerate_homs(B, B);
    ASSERT_EQ(homs.size(), 1u);
    EXPECT_EQ(homs[0].table(), B->elements());
}

TEST(Homs, RestrictionToCenterIsBijective) {
    auto L = two_plus_l3();
    auto B = luk(2);
    auto center = mv_center(L);
    auto full = enumerate_homs(L, B);
    auto restricted = enumerate_homs(center, B);
    ASSERT_EQ(full.size(), restricted.size());
    for (const auto& g : restricted) {
        auto h = BLMorphism::closed_form(L, B, [&](const Elt& x) { return g(L->double_neg(x)); }, "extension");
        bool matched = false;
        for (const auto& f : full)
            matched = matched || f.table() == h.table();
        EXPECT_TRUE(matched);
    }
}

TEST(Homs, RefusesLargeCarriers) {
    EXPECT_THROW(enumerate_homs(luk(20), luk(2)), UnsupportedShape);
    EXPECT_THROW(enumerate_homs(luk_q(), luk(2)), UnsupportedShape);
}

TEST(LuMorphism, LexWitnesses) {
    auto G = parse_lgroup("lex(Z(u=1), Qpos)");
    auto id = check_lu_morphism(*G, *G, [](const Elt& v) { return v; }, 300, 1);
    EXPECT_TRUE(id.ok);
    auto flat = check_lu_morphism(*G, *G, [](const Elt& v) { return Elt::tuple({v.parts()[0], q("1")}); }, 300, 1);
    EXPECT_TRUE(flat.ok);
    auto bad = check_lu_morphism(*G, *G, [](const Elt& v) { return Elt::tuple({v.parts()[0], q("2")}); }, 300, 1);
    EXPECT_FALSE(bad.ok);
}

TEST(Gamma, CaseSplitMapToProductChain) {
    auto A = gamma_interval(parse_lgroup("lex(Z(u=1), Qpos)"));
    auto P = product_q();
    auto f = BLMorphism::closed_form(
        A, P, [](const Elt& v) { return v.parts()[0].value() == 0 ? q("0") : q("1"); }, "collapse", {2000, 7});
    EXPECT_FALSE(f.certificate().exhaustive);
    EXPECT_GE(f.certificate().cases, 2000u);
    auto c = check_two_valued_collapse(f);
    EXPECT_TRUE(c.applies);
    EXPECT_TRUE(c.holds);
}
