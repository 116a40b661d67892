#include <gtest/gtest.h>

#include <algorithm>

#include "blchang/blalg_io.hpp"
#include "blchang/errors.hpp"
#include "blchang/structure.hpp"
#include "blchang/validate.hpp"
#include "fixtures.hpp"

using namespace blchang;
using namespace blchang::test;

namespace {

Rational luk_tnorm(const Rational& x, const Rational& y) {
    Rational s = x + y - 1;
    return s < 0 ? Rational(0) : s;
}

} // namespace

TEST(StandardChain, ProductOperations) {
    auto P = product_q();
    EXPECT_EQ(P->otimes(q("1/2"), q("1/3")), q("1/6"));
    EXPECT_EQ(P->imp(q("1/2"), q("1/4")), q("1/2"));
    EXPECT_EQ(P->imp(q("0"), q("1/4")), q("1"));
}

TEST(StandardChain, GodelNegation) {
    auto G = godel_q();
    EXPECT_EQ(G->neg(q("1/2")), q("0"));
    EXPECT_EQ(G->neg(q("0")), q("1"));
}

TEST(StandardChain, LukasiewiczAgainstHandFormula) {
    auto L = luk_q();
    EXPECT_EQ(L->otimes(q("7/10"), q("3/5")), q("3/10"));
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational x = rng.unit_rational(20), y = rng.unit_rational(20);
        EXPECT_EQ(L->otimes(Elt::rational(x), Elt::rational(y)).value(), luk_tnorm(x, y));
    }
}

TEST(StandardChain, MeetJoinFollowOrder) {
    for (auto A : {luk_q(), godel_q(), product_q()}) {
        Rng rng(3);
        for (int i = 0; i < 100; ++i) {
            Elt x = A->sample(rng), y = A->sample(rng);
            const bool le = x.value() <= y.value();
            EXPECT_EQ(A->leq(x, y), le);
            EXPECT_EQ(A->meet(x, y), le ? x : y);
            EXPECT_EQ(A->join(x, y), le ? y : x);
        }
    }
}

TEST(StandardChain, ForeignElementRejected) {
    EXPECT_THROW(luk(4)->otimes(q("1/2"), q("1")), DomainError);
    EXPECT_THROW(luk_q()->otimes(Elt::index(0), q("1")), DomainError);
}

TEST(StandardChain, ProductFiniteCarrierMustBeClosed) {
    EXPECT_THROW(StandardChain::evenly_spaced(ChainKind::Product, 3), ConstructionError);
}

TEST(Addition, Examples) {
    auto P = product_q();
    auto L = luk_q();
    EXPECT_EQ(P->add(q("1/2"), q("1/3")), q("1"));
    EXPECT_EQ(L->add(q("7/10"), q("3/5")), q("1"));
    EXPECT_EQ(L->add(q("1/4"), q("1/2")), q("3/4"));
    for (auto A : {luk_q(), godel_q(), product_q(), two_plus_l3()}) {
        Rng rng(11);
        for (int i = 0; i < 50; ++i) {
            Elt x = A->sample(rng);
            EXPECT_EQ(A->add(x, A->bottom()), x);
            EXPECT_EQ(A->add(x, A->top()), A->top());
        }
    }
}

TEST(Addition, LukasiewiczIsTruncatedSum) {
    auto L = luk_q();
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        Rational x = rng.unit_rational(30), y = rng.unit_rational(30);
        Rational s = x + y;
        EXPECT_EQ(L->add(Elt::rational(x), Elt::rational(y)).value(), s > 1 ? Rational(1) : s);
    }
}

TEST(OrdinalSum, TwoPlusTwoIsGodelThreeChain) {
    auto A = ordinal_sum({luk(2), luk(2)});
    ASSERT_EQ(A->size(), 3u);
    const Elt m = A->parse_element("c1:0");
    EXPECT_EQ(A->otimes(m, m), m);
    EXPECT_TRUE(A->lt(A->bottom(), m));
    EXPECT_TRUE(A->lt(m, A->top()));
    EXPECT_TRUE(A->is_chain());
}

TEST(OrdinalSum, TwoPlusL3) {
    auto A = two_plus_l3();
    ASSERT_EQ(A->size(), 4u);
    const Elt b = A->parse_element("c1:0"), m = A->parse_element("c1:1/2");
    EXPECT_EQ(A->otimes(m, m), b);
    // An element of a lower component absorbs under * and ->.
    const Elt zero = A->bottom();
    EXPECT_EQ(A->otimes(zero, m), zero);
    EXPECT_EQ(A->imp(m, zero), zero);
    EXPECT_EQ(A->imp(m, b), m);
}

TEST(OrdinalSum, SingleComponentUnchanged) {
    auto L = luk(3);
    EXPECT_EQ(ordinal_sum({L}), L);
}

TEST(OrdinalSum, UnboundedInitialComponentRejected) {
    EXPECT_THROW(ordinal_sum({StandardChain::positive_hoop(ChainKind::Product), luk(2)}), ConstructionError);
}

TEST(OrdinalSum, AdditionCollapsesAboveInitialComponent) {
    auto A = std::make_shared<OrdinalSum>(std::vector<AlgebraPtr>{luk(3), luk(3)});
    for (const auto& x : A->elements())
        for (const auto& y : A->elements()) {
            if (A->is_bottom(x) || A->is_bottom(y))
                continue;
            if (*A->in_initial_component(x) && *A->in_initial_component(y)) {
                Rational s = x.inner().value() + y.inner().value();
                EXPECT_EQ(A->add(x, y), A->embed(0, Elt::rational(s > 1 ? Rational(1) : s)));
            } else {
                EXPECT_EQ(A->add(x, y), A->top());
            }
        }
}

TEST(Validate, FiniteChainsPass) {
    for (auto A : {luk(4), luk(2), godel(5), two_plus_l3(), ordinal_sum({luk(3), luk(2), luk(2)})}) {
        auto r = validate_bl_axioms(*A);
        EXPECT_TRUE(r.ok()) << r.render(*A);
        EXPECT_TRUE(r.exhaustive);
    }
}

TEST(Validate, ProductsPass) {
    auto A = std::make_shared<DirectProduct>(std::vector<AlgebraPtr>{luk(2), luk(3)});
    EXPECT_TRUE(validate_bl_axioms(*A).ok());
    EXPECT_FALSE(A->is_chain());
}

TEST(DirectProduct, ComponentwiseOperationsMatchDerivedForms) {
    auto P = std::make_shared<DirectProduct>(std::vector<AlgebraPtr>{luk(3), two_plus_l3()});
    for (const auto& x : P->elements())
        for (const auto& y : P->elements()) {
            const Elt to = P->imp(x, y);
            EXPECT_EQ(P->meet(x, y), P->otimes(x, to));
            EXPECT_EQ(P->join(x, y), P->meet(P->imp(to, y), P->imp(P->imp(y, x), x)));
            EXPECT_EQ(P->leq(x, y), P->is_top(to));
            EXPECT_EQ(P->add(x, y), P->meet(P->pseudo_add(x, y), P->pseudo_add(y, x)));
        }
}

TEST(Validate, RationalChainsSampled) {
    for (auto A : {luk_q(), godel_q(), product_q()}) {
        auto r = validate_bl_axioms(*A, {500, 9});
        EXPECT_TRUE(r.ok()) << r.render(*A);
        EXPECT_FALSE(r.exhaustive);
        EXPECT_EQ(r.triples, 500u);
    }
}

TEST(Validate, MutatedCellDetected) {
    auto base = tabulate(*luk(4)).table;
    auto ot = base->otimes_table();
    auto it = base->imp_table();
    // Corrupt one cell of * at a time; every corruption must be caught.
    const std::size_t n = base->labels().size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto bad = ot;
            bad[i][j] = (bad[i][j] + 1) % n;
            FiniteTable T(base->labels(), base->bottom_index(), base->top_index(), bad, it);
            auto r = validate_bl_axioms(T);
            ASSERT_FALSE(r.ok()) << "cell " << i << "," << j;
            EXPECT_FALSE(r.first_failure()->witness.empty());
        }
}

TEST(Validate, ReportDeterministic) {
    auto A = luk_q();
    EXPECT_EQ(validate_bl_axioms(*A, {200, 4}).render(*A), validate_bl_axioms(*A, {200, 4}).render(*A));
}

TEST(MvCenter, ClosedForms) {
    auto g = mv_center(godel_q());
    ASSERT_TRUE(g->is_finite());
    EXPECT_EQ(g->elements(), (std::vector<Elt>{q("0"), q("1")}));
    auto l = mv_center(luk_q());
    EXPECT_TRUE(l->is_whole());
    auto p = mv_center(product_q());
    EXPECT_EQ(p->size(), 2u);
}

TEST(MvCenter, TwoPlusL3) {
    auto A = two_plus_l3();
    auto c = mv_center(A);
    EXPECT_EQ(c->elements(), (std::vector<Elt>{A->bottom(), A->top()}));
    EXPECT_TRUE(is_mv_algebra(*c));
    EXPECT_FALSE(is_mv_algebra(*A));
}

TEST(MvCenter, ImageOfNegationOracle) {
    for (auto A : {luk(5), godel(4), ordinal_sum({luk(3), luk(3)})}) {
        std::vector<Elt> image;
        for (const auto& x : A->elements())
            if (std::find(image.begin(), image.end(), A->neg(x)) == image.end())
                image.push_back(A->neg(x));
        auto c = mv_center(A);
        EXPECT_EQ(c->size(), image.size());
        for (const auto& x : image)
            EXPECT_TRUE(c->contains(x));
        for (const auto& x : c->elements())
            EXPECT_EQ(A->double_neg(x), x);
    }
}

TEST(Cancellative, ClosedForms) {
    EXPECT_EQ(is_cancellative_type(*luk_q()).verdict, Verdict::True);
    EXPECT_EQ(is_cancellative_type(*product_q()).verdict, Verdict::True);
    auto g = is_cancellative_type(*godel_q());
    ASSERT_EQ(g.verdict, Verdict::False);
    ASSERT_EQ(g.witness.size(), 3u);
    EXPECT_EQ(g.witness[0], q("1/2"));
    EXPECT_EQ(g.witness[1], q("3/4"));
    EXPECT_EQ(g.witness[2], q("7/8"));
}

TEST(Cancellative, GodelWitnessChecksByHand) {
    auto G = godel_q();
    const Elt x = q("1/2"), y = q("3/4"), z = q("7/8");
    EXPECT_EQ(G->add(x, y), G->top());
    EXPECT_EQ(G->add(x, z), G->top());
    EXPECT_EQ(G->otimes(x, y), x);
    EXPECT_EQ(G->otimes(x, z), x);
}

TEST(Cancellative, FiniteAndProducts) {
    EXPECT_EQ(is_cancellative_type(*luk(5)).verdict, Verdict::True);
    EXPECT_EQ(is_cancellative_type(*godel(3)).verdict, Verdict::False);
    auto prod = std::make_shared<DirectProduct>(std::vector<AlgebraPtr>{luk(2), godel(3)});
    auto r = is_cancellative_type(*prod);
    ASSERT_EQ(r.verdict, Verdict::False);
    EXPECT_EQ(prod->add(r.witness[0], r.witness[1]), prod->add(r.witness[0], r.witness[2]));
    EXPECT_EQ(prod->otimes(r.witness[0], r.witness[1]), prod->otimes(r.witness[0], r.witness[2]));
    EXPECT_NE(r.witness[1], r.witness[2]);
    EXPECT_EQ(is_cancellative_type(*StandardChain::positive_hoop(ChainKind::Product)).verdict, Verdict::Undecided);
}

TEST(Blalg, RoundTrip) {
    for (auto A : {luk(4), two_plus_l3()}) {
        const std::string text = write_blalg(*A);
        auto T = parse_blalg(text, A->name());
        EXPECT_EQ(T->size(), A->size());
        EXPECT_TRUE(validate_bl_axioms(*T).ok());
        EXPECT_EQ(write_blalg(*T), text);
    }
}

TEST(Blalg, Errors) {
    const std::string good = write_blalg(*luk(2));
    EXPECT_NO_THROW(parse_blalg(good));
    try {
        parse_blalg("blalg v1\nelements: 0 1 1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(parse_blalg("blalg v2\n"), ParseError);
    EXPECT_THROW(parse_blalg("blalg v1\nelements: 0 1\nbottom: 0\ntop: 1\notimes:\n0 0\n0 x\nimp:\n1 1\n0 1\n"),
                 ParseError);
    EXPECT_THROW(parse_blalg("blalg v1\nelements: 0 1\nbottom: 0\ntop: 1\notimes:\n0 0 0\n0 1\nimp:\n1 1\n0 1\n"),
                 ParseError);
    EXPECT_THROW(parse_blalg("blalg v1\nelements: 0 1\nbottom: 0\ntop: 1\notimes:\n0 0\n0 1\n"), ParseError);
    EXPECT_THROW(load_blalg("/nonexistent/file.blalg"), std::runtime_error);
}
