#include <gtest/gtest.h>

#include "blchang/errors.hpp"
#include "fixtures.hpp"

using namespace blchang;
using namespace blchang::test;

namespace {

std::shared_ptr<const DirectProduct> pair_of(AlgebraPtr a, AlgebraPtr b) {
    return std::make_shared<DirectProduct>(std::vector<AlgebraPtr>{std::move(a), std::move(b)});
}

// Straight from the definition, independent of GoodSeq: entries indexed from 1.
std::vector<Elt> definition_sum(const Algebra& A, const std::vector<Elt>& a, const std::vector<Elt>& b) {
    auto at = [&](const std::vector<Elt>& s, std::size_t i) { return i >= 1 && i <= s.size() ? s[i - 1] : A.bottom(); };
    std::vector<Elt> c;
    for (std::size_t i = 1; i <= a.size() + b.size(); ++i) {
        Elt acc = at(a, i);
        for (std::size_t j = 1; j < i; ++j)
            acc = A.add(acc, A.otimes(at(a, i - j), at(b, j)));
        c.push_back(A.add(acc, at(b, i)));
    }
    while (!c.empty() && A.is_bottom(c.back()))
        c.pop_back();
    return c;
}

} // namespace

TEST(IsGood, Examples) {
    auto L = luk_q();
    EXPECT_TRUE(is_good(*L, {}));
    EXPECT_TRUE(is_good(*L, {q("1")}));
    EXPECT_TRUE(is_good(*L, {q("1"), q("3/10")}));
    EXPECT_FALSE(is_good(*L, {q("3/10"), q("1/10")}));
    EXPECT_TRUE(is_good(*godel_q(), {q("1"), q("1"), q("1/2")}));
    EXPECT_THROW(GoodSeq::make(L, {q("3/10"), q("1/10")}), DomainError);
}

TEST(GoodSeq, TrimsTrailingZeros) {
    auto L = luk_q();
    auto a = GoodSeq::make(L, {q("1"), q("1/2"), q("0"), q("0")});
    EXPECT_EQ(a.support(), 2u);
    EXPECT_EQ(a.at(5), q("0"));
    EXPECT_TRUE(GoodSeq::make(L, {q("0")}).is_zero());
}

TEST(GsAdd, Examples) {
    auto L = luk_q();
    EXPECT_EQ(gs_add(seq(L, "(7/10)"), seq(L, "(3/5)")), seq(L, "(1,3/10)"));
    auto G = godel_q();
    EXPECT_EQ(gs_add(seq(G, "(1/2)"), seq(G, "(3/4)")), seq(G, "(1,1/2)"));
    EXPECT_EQ(gs_add(seq(G, "(1,1/2)"), GoodSeq::zero(G)), seq(G, "(1,1/2)"));
}

TEST(GsAdd, ChainFormulaMatchesDefinition) {
    for (auto A : {luk_q(), godel_q(), product_q(), two_plus_l3()}) {
        Rng rng(21);
        for (int i = 0; i < 200; ++i) {
            auto a = random_good_seq(A, rng, 4), b = random_good_seq(A, rng, 4);
            auto chain = gs_add_chain(a, b);
            EXPECT_EQ(chain, gs_add_convolution(a, b));
            EXPECT_EQ(chain.entries(), definition_sum(*A, a.entries(), b.entries()));
            auto na = chain_normal_form(a), nb = chain_normal_form(b);
            auto full = gs_prepend_units(na.p + nb.p,
                                         GoodSeq::make(A, {A->add(na.tail, nb.tail), A->otimes(na.tail, nb.tail)}));
            EXPECT_EQ(chain, full);
        }
    }
}

TEST(GsAdd, ProductsUseConvolution) {
    auto P = pair_of(luk(3), godel(3));
    Rng rng(2);
    for (int i = 0; i < 200; ++i) {
        auto a = random_good_seq(P, rng, 4), b = random_good_seq(P, rng, 4);
        auto c = gs_add(a, b);
        EXPECT_TRUE(is_good(*P, c.entries()));
        EXPECT_EQ(c.entries(), definition_sum(*P, a.entries(), b.entries()));
        EXPECT_LE(c.support(), a.support() + b.support());
        for (std::size_t k = 0; k < 2; ++k)
            EXPECT_EQ(project_goodseq(c, k), gs_add(project_goodseq(a, k), project_goodseq(b, k)));
    }
}

TEST(GsAdd, ChainFormulaRejectsProducts) {
    auto P = pair_of(luk(2), luk(2));
    auto a = GoodSeq::units(P, 1);
    EXPECT_THROW(gs_add_chain(a, a), UnsupportedShape);
}

TEST(GsAdd, MixedAlgebrasRejected) {
    EXPECT_THROW(gs_add(GoodSeq::units(luk_q(), 1), GoodSeq::units(luk_q(), 1)), DomainError);
}

TEST(GsLattice, Examples) {
    auto L = luk_q();
    auto a = seq(L, "(1,1/4)"), b = seq(L, "(1/2)");
    EXPECT_EQ(gs_join(a, b), a);
    EXPECT_EQ(gs_meet(a, b), b);
    EXPECT_EQ(gs_join(a, GoodSeq::zero(L)), a);
    EXPECT_TRUE(gs_leq(b, a));
    EXPECT_FALSE(gs_leq(a, b));
    EXPECT_EQ(gs_join(seq(L, "(1,1/2)"), seq(L, "(1^3,1/4)")), seq(L, "(1^3,1/4)"));
}

TEST(ChainNormalForm, Examples) {
    auto G = godel_q();
    auto n = chain_normal_form(seq(G, "(1,1,1/2)"));
    EXPECT_EQ(n.p, 2u);
    EXPECT_EQ(n.tail, q("1/2"));
    n = chain_normal_form(GoodSeq::zero(G));
    EXPECT_EQ(n.p, 0u);
    EXPECT_EQ(n.tail, q("0"));
    n = chain_normal_form(seq(G, "(1,1,1)"));
    EXPECT_EQ(n.p, 3u);
    EXPECT_EQ(n.tail, q("0"));
    EXPECT_EQ(from_chain_normal_form(G, 3, q("0")), GoodSeq::units(G, 3));
    EXPECT_THROW(chain_normal_form(GoodSeq::zero(pair_of(luk(2), luk(2)))), UnsupportedShape);
}

TEST(Project, Examples) {
    auto P = pair_of(luk(3), luk(2));
    auto a = GoodSeq::make(P, {P->parse_element("(1,1)"), P->parse_element("(1/2,0)")});
    EXPECT_EQ(project_goodseq(a, 0), seq(P->factors()[0], "(1,1/2)"));
    EXPECT_EQ(project_goodseq(a, 1), seq(P->factors()[1], "(1)"));
    EXPECT_TRUE(project_goodseq(GoodSeq::zero(P), 1).is_zero());
    EXPECT_THROW(project_goodseq(a, 2), DomainError);
}

TEST(Render, RoundTrip) {
    auto L = luk_q();
    EXPECT_EQ(render(GoodSeq::zero(L)), "(0)");
    EXPECT_EQ(render(seq(L, "(1,1,1,1/3)")), "(1^3,1/3)");
    EXPECT_EQ(render(seq(L, "(1,1/3)")), "(1,1/3)");
    EXPECT_EQ(seq(L, "(1^2,1/3)"), seq(L, "(1,1,1/3)"));
    EXPECT_THROW(parse_goodseq(L, "(1,1/3"), ParseError);
}

TEST(Enumerate, CountsOnSmallChains) {
    // Over a chain with n elements the good sequences of support <= m are
    // (1^p, t) with p + [t nonzero, t < 1] <= m.
    auto L = luk(4);
    auto all = enumerate_good_seqs(L, 3);
    EXPECT_EQ(all.front(), GoodSeq::zero(L));
    std::size_t expected = 0;
    for (std::size_t len = 0; len <= 3; ++len)
        expected += len == 0 ? 1 : 1 + 2; // (1^len) plus two proper tails
    EXPECT_EQ(all.size(), expected);
    for (const auto& s : all)
        EXPECT_TRUE(is_good(*L, s.entries()));
    for (const auto& s : enumerate_good_seqs(L, 3, true))
        EXPECT_TRUE(s.is_zero() || !L->is_top(s.entries().front()));
}

TEST(Monoid, Laws) {
    std::vector<AlgebraPtr> algebras{luk_q(), godel_q(), product_q(), two_plus_l3(), pair_of(luk(3), godel(3))};
    for (const auto& A : algebras) {
        Rng rng(Rng::salt_of(A->name()));
        for (int i = 0; i < 100; ++i) {
            auto a = random_good_seq(A, rng, 5), b = random_good_seq(A, rng, 5), c = random_good_seq(A, rng, 5);
            EXPECT_EQ(gs_add(a, b), gs_add(b, a));
            EXPECT_EQ(gs_add(gs_add(a, b), c), gs_add(a, gs_add(b, c)));
            EXPECT_EQ(gs_add(a, GoodSeq::zero(A)), a);
            if (gs_add(a, b).is_zero()) {
                EXPECT_TRUE(a.is_zero());
                EXPECT_TRUE(b.is_zero());
            }
            EXPECT_EQ(gs_add(gs_join(a, b), c), gs_join(gs_add(a, c), gs_add(b, c)));
            EXPECT_EQ(gs_add(gs_meet(a, b), c), gs_meet(gs_add(a, c), gs_add(b, c)));
            EXPECT_EQ(gs_add(GoodSeq::units(A, 2), a), gs_prepend_units(2, a));
            EXPECT_EQ(gs_double_neg(gs_add(a, b)), gs_add(gs_double_neg(a), gs_double_neg(b)));
        }
    }
}

TEST(Monoid, CancellationOnCancellativeChains) {
    for (auto A : {luk_q(), product_q()}) {
        Rng rng(8);
        for (int i = 0; i < 300; ++i) {
            auto a = random_good_seq(A, rng, 3), b = random_good_seq(A, rng, 3), c = random_good_seq(A, rng, 3);
            if (gs_add(a, c) == gs_add(b, c))
                EXPECT_EQ(a, b);
        }
    }
}

TEST(Monoid, GodelCancellationFails) {
    auto G = godel_q();
    auto a = seq(G, "(1/2)"), b = seq(G, "(3/4)"), c = seq(G, "(1/2)");
    EXPECT_EQ(gs_add(a, c), gs_add(b, c));
    EXPECT_NE(a, b);
}
