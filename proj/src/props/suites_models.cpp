// Concrete Chang groups (Godel and product chains) and the interval functor:
// Gamma of unital l-groups, g(a), psi, eta, Xi and homomorphism sets.

#include <algorithm>
#include <memory>

#include "blchang/errors.hpp"
#include "blchang/lgroups.hpp"
#include "blchang/structure.hpp"
#include "blchang/validate.hpp"
#include "suites.hpp"

namespace blchang::detail {

namespace {

AlgebraPtr chain(ChainKind kind, std::size_t n) { return StandardChain::evenly_spaced(kind, n); }
AlgebraPtr rationals(ChainKind kind, const GeneratorConfig& config) {
    return StandardChain::rationals(kind, config.denominator_cap);
}

Elt integer(std::int64_t n) { return Elt::rational(Rational(n)); }

Source class_pairs(const AlgebraPtr& A, std::size_t n, Rng rng) {
    auto r = std::make_shared<Rng>(rng);
    return sampled(n, [A, r]() {
        Case c;
        for (int i = 0; i < 2; ++i)
            c.emplace_back(GroupElt(random_good_seq(A, *r, 3), random_good_seq(A, *r, 3)));
        return c;
    });
}

void add(SuiteReport& report, const AlgebraPtr& A, const GeneratorConfig& config, const char* id,
         const char* statement, const Check& check) {
    report.properties.push_back(run_property(
        id, statement, A, class_pairs(A, config.pair_samples, stream_for(config, report.suite, A->name(), id)), check));
}

void godel_checks(SuiteReport& report, const AlgebraPtr& A, const GeneratorConfig& config) {
    auto grp = std::make_shared<ChangGroup>(A);
    const Judge J{*grp, Strategy::chain_search()};
    add(report, A, config, "S9.godel-add", "n(g + h) = n(g) + n(h)", [grp](const Case& c) {
        return holds(godel_to_int(grp->add(G(c, 0), G(c, 1))) == godel_to_int(G(c, 0)) + godel_to_int(G(c, 1)));
    });
    add(report, A, config, "S9.godel-order", "g <= h iff n(g) <= n(h), and g ~ h iff n(g) = n(h)",
        [grp, J](const Case& c) {
            const auto a = godel_to_int(G(c, 0)), b = godel_to_int(G(c, 1));
            const Tri le = J.leq(G(c, 0), G(c, 1)), eq = J.eq(G(c, 0), G(c, 1));
            if (le == Tri::Unknown || eq == Tri::Unknown)
                return Outcome::Undecided;
            return holds((le == Tri::True) == (a <= b) && (eq == Tri::True) == (a == b));
        });
    add(report, A, config, "S9.godel-S", "S(L) is trivial: the summand part of every class is 0",
        [grp, J](const Case& c) { return outcome(J.eq(grp->theta(G(c, 0)).s_part, grp->zero())); });
    bool ok = godel_to_int(grp->unit()) == 1 && godel_to_int(grp->zero()) == 0;
    for (std::int64_t n = -5; n <= 5; ++n)
        ok = ok && godel_to_int(godel_from_int(*grp, n)) == n;
    report.properties.push_back(fact("S9.godel-unit", "n(u) = 1 and n is onto Z", A->name(), ok, 13));
}

void product_checks(SuiteReport& report, const AlgebraPtr& A, const GeneratorConfig& config) {
    auto grp = std::make_shared<ChangGroup>(A);
    const Judge J{*grp, preferred_strategy(*grp)};
    add(report, A, config, "S9.product-add", "phi(g + h) = phi(g) + phi(h) in Z x Q+", [grp](const Case& c) {
        const auto x = product_iso(G(c, 0)), y = product_iso(G(c, 1));
        return holds(product_iso(grp->add(G(c, 0), G(c, 1))) == ProductIsoValue{x.m + y.m, x.r * y.r});
    });
    add(report, A, config, "S9.product-order", "g <= h iff phi(g) <= phi(h) lexicographically, g ~ h iff equal",
        [J](const Case& c) {
            const auto x = product_iso(G(c, 0)), y = product_iso(G(c, 1));
            const Tri le = J.leq(G(c, 0), G(c, 1)), eq = J.eq(G(c, 0), G(c, 1));
            if (le == Tri::Unknown || eq == Tri::Unknown)
                return Outcome::Undecided;
            return holds((le == Tri::True) == lex_leq(x, y) && (eq == Tri::True) == (x == y));
        });
    add(report, A, config, "S9.product-inverse", "phi is inverted by phi^-1", [J, grp](const Case& c) {
        return outcome(J.eq(product_iso_inverse(*grp, product_iso(G(c, 0))), G(c, 0)));
    });
    add(report, A, config, "S9.product-formula", "phi([(a), (b)]) = (0, a/b) for nonzero a, b",
        [grp](const Case& c) {
            const auto& a = G(c, 0).pos();
            const auto& b = G(c, 1).pos();
            const Elt x = a.is_zero() ? a.algebra()->top() : a.entries().back();
            const Elt y = b.is_zero() ? b.algebra()->top() : b.entries().back();
            const auto v = product_iso(grp->make(GoodSeq::make(a.algebra(), {x}), GoodSeq::make(a.algebra(), {y})));
            return holds(v == ProductIsoValue{0, x.value() / y.value()});
        });
    auto h = std::make_shared<HGroup>(A);
    add(report, A, config, "S9.hgroup", "[a, b] -> [(a), (b)] is an order isomorphism of H onto S(L)",
        [grp, J, h](const Case& c) {
            auto pick = [&](const GoodSeq& s, std::size_t k) {
                return s.support() > k ? s.entries()[k] : s.algebra()->top();
            };
            const auto x = h->make(pick(G(c, 0).pos(), 0), pick(G(c, 0).neg(), 0));
            const auto y = h->make(pick(G(c, 1).pos(), 0), pick(G(c, 1).neg(), 0));
            const auto gx = h->to_chang(x), gy = h->to_chang(y);
            if (!grp->in_S(gx) || !grp->in_S(gy))
                return Outcome::Fails;
            const Tri le = J.leq(gx, gy), eq = J.eq(gx, gy);
            if (le == Tri::Unknown || eq == Tri::Unknown)
                return Outcome::Undecided;
            if ((le == Tri::True) != h->leq(x, y) || (eq == Tri::True) != h->eq(x, y))
                return Outcome::Fails;
            return outcome(J.eq(h->to_chang(h->add(x, y)), grp->add(gx, gy)) &&
                           J.eq(h->to_chang(h->neg(x)), grp->neg(gx)));
        });
}

void order_checks(SuiteReport& report, const std::vector<AlgebraPtr>& corpus, const GeneratorConfig& config) {
    for (const auto& A : corpus) {
        if (!A->is_chain())
            continue;
        auto grp = std::make_shared<ChangGroup>(A);
        const Judge J{*grp, preferred_strategy(*grp)};
        add(report, A, config, "S9.total", "over a chain G_L is totally ordered",
            [J](const Case& c) { return outcome(tri(J.leq(G(c, 0), G(c, 1)) == Tri::True || J.leq(G(c, 1), G(c, 0)) == Tri::True)); });
    }
    const auto P = fixed_products().front();
    ChangGroup grp(P);
    const Judge J{grp, preferred_strategy(grp)};
    Rng rng = stream_for(config, report.suite, P->name(), "S9.incomparable");
    std::size_t tried = 0;
    bool found = false;
    std::string note;
    while (!found && tried < config.pair_samples) {
        ++tried;
        GroupElt g(random_good_seq(P, rng, 3), random_good_seq(P, rng, 3));
        GroupElt h(random_good_seq(P, rng, 3), random_good_seq(P, rng, 3));
        if (J.leq(g, h) == Tri::False && J.leq(h, g) == Tri::False) {
            found = true;
            note = render(g) + " || " + render(h);
        }
    }
    report.properties.push_back(
        fact("S9.incomparable", "over a product of chains some classes are incomparable", P->name(), found, tried, note));
}

} // namespace


void run_concrete_suite(SuiteReport& report, const std::vector<AlgebraPtr>& corpus, const GeneratorConfig& config) {
    for (std::size_t n = 3; n <= 6; ++n)
        godel_checks(report, chain(ChainKind::Godel, n), config);
    godel_checks(report, rationals(ChainKind::Godel, config), config);
    product_checks(report, rationals(ChainKind::Product, config), config);
    order_checks(report, corpus, config);
}

namespace {

GammaPtr gamma_of(const char* descriptor) { return gamma_interval(parse_lgroup(descriptor)); }

void gamma_checks(SuiteReport& report, const GeneratorConfig& config) {
    for (std::int64_t n = 1; n <= 5; ++n) {
        const auto A = gamma_interval(LGroup::integers(n));
        const auto v = validate_bl_axioms(*A, {config.element_samples, config.seed});
        report.properties.push_back(fact("S10.gamma-mv", "[0, u] of Z(u=n) is an MV-algebra", A->name(),
                                         v.ok() && is_mv_algebra(*A), v.triples));
    }
    for (const char* d : {"lex(Z(u=1), Qpos)", "prod(Z(u=1), Z(u=2))", "prod(Z(u=2), Qpos)"}) {
        const auto A = gamma_of(d);
        const auto v = validate_bl_axioms(*A, {config.element_samples / 10, config.seed});
        bool mv = true;
        Rng rng = stream_for(config, report.suite, A->name(), "S10.gamma-mv");
        for (std::size_t i = 0; i < config.element_samples / 10; ++i) {
            const Elt x = A->sample(rng);
            mv = mv && A->double_neg(x) == x;
        }
        report.properties.push_back(fact("S10.gamma-mv", "[0, u] of a unital l-group is an MV-algebra", A->name(),
                                         v.ok() && mv, v.triples + config.element_samples / 10,
                                         v.exhaustive ? "" : "sampled"));
    }
    for (const char* d : {"Z(u=3)", "Qpos", "prod(Z(u=1), Qpos)", "lex(Z(u=1), Qpos)"}) {
        const auto L = parse_lgroup(d);
        Rng rng = stream_for(config, report.suite, L->name(), "S10.join");
        bool ok = true;
        for (std::size_t i = 0; i < config.pair_samples; ++i) {
            const Elt a = L->sample(rng), b = L->sample(rng), c = L->sample(rng);
            ok = ok && L->join(a, b) == L->add(L->positive_part(L->sub(a, b)), b) &&
                 L->add(L->join(a, b), c) == L->join(L->add(a, c), L->add(b, c)) &&
                 L->leq(a, L->join(a, b)) && L->leq(L->meet(a, b), a);
        }
        report.properties.push_back(fact("S10.join", "a v b = ((a - b) v 0) + b, and + distributes over v",
                                         L->name(), ok, config.pair_samples));
    }
}

void good_seq_checks(SuiteReport& report, const GeneratorConfig& config) {
    for (std::int64_t n = 1; n <= 4; ++n) {
        const auto A = gamma_interval(LGroup::integers(n));
        const std::int64_t top = 4 * n;
        const auto all = enumerate_good_seqs(A, static_cast<std::size_t>(top));
        std::vector<Case> cases;
        for (std::int64_t a = 0; a <= top; ++a)
            cases.push_back({integer(a)});
        report.properties.push_back(run_property(
            "S10.g-unique", "g(a) is the only good sequence with entry sum a", A, from_list(std::move(cases), true),
            [A, &all](const Case& c) {
                const auto g = good_seq_of_positive(A, E(c, 0));
                if (sum_in_group(*A, g) != E(c, 0))
                    return Outcome::Fails;
                std::size_t matches = 0;
                for (const auto& s : all)
                    matches += sum_in_group(*A, s) == E(c, 0);
                return holds(matches == 1 && std::find(all.begin(), all.end(), g) != all.end());
            }));
    }
    (void)config;
}

void psi_checks(SuiteReport& report, const GeneratorConfig& config) {
    for (std::int64_t n = 1; n <= 4; ++n) {
        const auto A = gamma_interval(LGroup::integers(n));
        auto grp = std::make_shared<ChangGroup>(A);
        const Judge J{*grp, preferred_strategy(*grp)};
        std::vector<Case> cases;
        for (std::int64_t a = -10 * n; a <= 10 * n; ++a)
            for (std::int64_t b = -10 * n; b <= 10 * n; ++b)
                cases.push_back({integer(a), integer(b)});
        report.properties.push_back(run_property(
            "S10.psi", "psi(a + b) ~ psi(a) + psi(b), a <= b iff psi(a) <= psi(b), psi(u) ~ u", A,
            from_list(std::move(cases), true), [grp, J, n](const Case& c) {
                const Elt &a = E(c, 0), &b = E(c, 1);
                const auto pa = psi(*grp, a), pb = psi(*grp, b);
                const Tri le = J.leq(pa, pb);
                if (le == Tri::Unknown)
                    return Outcome::Undecided;
                if ((le == Tri::True) != (a.value() <= b.value()))
                    return Outcome::Fails;
                return outcome(J.eq(psi(*grp, integer(a.value().get_num().get_si() + b.value().get_num().get_si())),
                                    grp->add(pa, pb)) &&
                               J.eq(psi(*grp, integer(n)), grp->unit()));
            }));
        report.properties.push_back(run_property(
            "S10.psi-onto", "psi(psi^-1(g)) ~ g and psi^-1(psi(a)) = a", A,
            class_pairs(A, config.group_samples, stream_for(config, report.suite, A->name(), "S10.psi-onto")),
            [grp, J](const Case& c) {
                const Elt a = psi_inverse(*grp, G(c, 0));
                return outcome(J.eq(psi(*grp, a), G(c, 0)) && tri(psi_inverse(*grp, psi(*grp, a)) == a));
            }));
    }
    const auto A = gamma_of("lex(Z(u=1), Qpos)");
    const auto& L = A->group();
    auto grp = std::make_shared<ChangGroup>(A);
    const Judge J{*grp, preferred_strategy(*grp)};
    auto rng = std::make_shared<Rng>(stream_for(config, report.suite, A->name(), "S10.psi"));
    report.properties.push_back(run_property(
        "S10.psi", "psi(a + b) ~ psi(a) + psi(b), a <= b iff psi(a) <= psi(b), psi(u) ~ u", A,
        sampled(config.pair_samples, [L, rng]() { return Case{L->sample(*rng), L->sample(*rng)}; }),
        [grp, J, L](const Case& c) {
            const Elt &a = E(c, 0), &b = E(c, 1);
            const auto pa = psi(*grp, a), pb = psi(*grp, b);
            const Tri le = J.leq(pa, pb);
            if (le == Tri::Unknown)
                return Outcome::Undecided;
            if ((le == Tri::True) != L->leq(a, b))
                return Outcome::Fails;
            return outcome(J.eq(psi(*grp, L->add(a, b)), grp->add(pa, pb)) &&
                           J.eq(psi(*grp, L->unit()), grp->unit()) && tri(psi_inverse(*grp, pa) == a));
        }));
}

// Finite algebras small enough for enumerate_homs.
std::vector<AlgebraPtr> hom_models(const std::vector<AlgebraPtr>& corpus) {
    std::vector<AlgebraPtr> out;
    for (const auto& A : corpus)
        if (A->is_finite() && A->elements().size() <= 6)
            out.push_back(A);
    out.push_back(gamma_of("prod(Z(u=1), Z(u=2))"));
    return out;
}

void eta_checks(SuiteReport& report, const std::vector<AlgebraPtr>& models, const GeneratorConfig& config) {
    for (const auto& A : models) {
        auto grp = std::make_shared<ChangGroup>(A);
        const Judge J{*grp, preferred_strategy(*grp)};
        report.properties.push_back(run_property(
            "S10.eta", "eta preserves *, -> and 0 into the interval [0, u] of G_L", A,
            element_tuples(A, 2, config.element_samples, stream_for(config, report.suite, A->name(), "S10.eta")),
            [grp, J, A](const Case& c) {
                const Elt &x = E(c, 0), &y = E(c, 1);
                return outcome(J.eq(eta(*grp, A->otimes(x, y)), grp->interval_otimes(eta(*grp, x), eta(*grp, y))) &&
                               J.eq(eta(*grp, A->imp(x, y)), grp->interval_imp(eta(*grp, x), eta(*grp, y))) &&
                               J.eq(eta(*grp, A->bottom()), grp->zero()));
            }));
    }
    // Naturality: Xi(f) . eta_A = eta_B . f for every f: A -> B among small models.
    const std::vector<AlgebraPtr> small = {chain(ChainKind::Lukasiewicz, 2), chain(ChainKind::Lukasiewicz, 3),
                                           chain(ChainKind::Godel, 3), ordinal_sum({chain(ChainKind::Lukasiewicz, 2),
                                                                                    chain(ChainKind::Lukasiewicz, 3)}),
                                           gamma_of("prod(Z(u=1), Z(u=2))")};
    for (const auto& A : small) {
        ChangGroup GA(A);
        for (const auto& B : small) {
            ChangGroup GB(B);
            const Judge J{GB, preferred_strategy(GB)};
            std::size_t cases = 0;
            bool ok = true;
            for (const auto& f : enumerate_homs(A, B))
                for (const auto& x : A->elements()) {
                    ++cases;
                    ok = ok && J.eq(xi_map(f, GB, eta(GA, x)), eta(GB, f(x))) == Tri::True;
                }
            report.properties.push_back(fact("S10.eta-natural", "Xi(f)(eta(x)) ~ eta(f(x)) for every morphism f",
                                             A->name() + " -> " + B->name(), ok, cases));
        }
    }
}

void hom_checks(SuiteReport& report, const std::vector<AlgebraPtr>& models) {
    const auto G3 = chain(ChainKind::Godel, 3);
    for (const AlgebraPtr& A : std::vector<AlgebraPtr>{tabulate(*chain(ChainKind::Lukasiewicz, 4)).table, gamma_of("prod(Z(u=1), Z(u=2))")}) {
        const AlgebraPtr& dom = A;
        bool ok = true;
        const auto homs = enumerate_homs(dom, G3);
        for (const auto& f : homs) {
            const auto c = check_two_valued_collapse(f);
            ok = ok && c.applies && c.holds;
        }
        report.properties.push_back(fact("S10.collapse",
                                         "morphisms from an MV-algebra into a chain with MV part {0, 1} send a <= ~a "
                                         "to 0 and a >= ~a to 1",
                                         dom->name() + " -> " + G3->name(), ok, homs.size(),
                                         homs.empty() ? "no morphisms; vacuous" : ""));
    }
    const auto B = chain(ChainKind::Lukasiewicz, 2);
    for (const auto& L : models) {
        const auto center = mv_center(L);
        const auto full = enumerate_homs(L, B);
        const auto restricted = enumerate_homs(center, B);
        bool ok = full.size() == restricted.size();
        for (const auto& g : restricted) {
            std::vector<Elt> images;
            for (const auto& x : L->elements())
                images.push_back(g(L->double_neg(x)));
            ok = ok && std::any_of(full.begin(), full.end(), [&](const auto& f) { return f.table() == images; });
        }
        report.properties.push_back(fact("S10.center-homs", "Hom(L, 2) and Hom(MV(L), 2) correspond by restriction",
                                         L->name(), ok, full.size() + restricted.size()));
    }
}

void lex_checks(SuiteReport& report, const GeneratorConfig& config) {
    const auto A = gamma_of("lex(Z(u=1), Qpos)");
    const auto P = rationals(ChainKind::Product, config);
    const auto zero = Elt::rational(0), one = Elt::rational(1);
    const auto cert = check_bl_morphism(
        *A, *P, [&](const Elt& v) { return v.parts()[0].value() == 0 ? zero : one; },
        {config.element_samples, config.seed});
    report.properties.push_back(fact("S10.lex-map", "(m, x) -> [m > 0] is a BL-morphism onto {0, 1} of the product chain",
                                     A->name() + " -> " + P->name(), cert.ok, cert.cases));
    const auto& L = *A->group();
    const auto id = check_lu_morphism(L, L, [](const Elt& v) { return v; }, config.pair_samples, config.seed);
    const auto flat = check_lu_morphism(
        L, L, [&](const Elt& v) { return Elt::tuple({v.parts()[0], one}); }, config.pair_samples, config.seed);
    const Elt w = Elt::tuple({integer(0), Elt::rational(2)});
    const bool distinct = L.contains(w) && w != Elt::tuple({w.parts()[0], one});
    report.properties.push_back(fact("S10.lu-maps", "the identity and (m, x) -> (m, 1) are distinct lu-morphisms",
                                     L.name(), id.ok && flat.ok && distinct, id.cases + flat.cases));
}

} // namespace

void run_functor_suite(SuiteReport& report, const std::vector<AlgebraPtr>& corpus, const GeneratorConfig& config) {
    gamma_checks(report, config);
    good_seq_checks(report, config);
    psi_checks(report, config);
    const auto models = hom_models(corpus);
    eta_checks(report, models, config);
    hom_checks(report, models);
    lex_checks(report, config);
}

} // namespace blchang::detail
