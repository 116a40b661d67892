// Good-sequence suite (monoid, lattice, distributivity) and Chang-group suite
// (order, lattice, strong unit, summand decomposition, cancellation,
// strategy agreement).

#include <algorithm>
#include <memory>

#include "blchang/errors.hpp"
#include "suites.hpp"

namespace blchang::detail {

Strategy preferred_strategy(const ChangGroup& grp) {
    if (grp.cancellative_licensed())
        return Strategy::cancellative();
    if (grp.chain_search_applies())
        return Strategy::chain_search();
    return Strategy::bounded();
}

namespace {

constexpr std::size_t kSeqExhaustive = 30'000;
constexpr std::size_t kSampleSupport = 6;

// Tuples of good sequences: every tuple over the sequences of small support
// when that stays cheap, otherwise seeded samples.
Source seq_tuples(const AlgebraPtr& A, std::size_t arity, const GeneratorConfig& config, Rng rng) {
    if (A->is_finite()) {
        for (std::size_t len : {3u, 2u, 1u}) {
            auto all = enumerate_good_seqs(A, len);
            std::size_t total = 1;
            for (std::size_t i = 0; i < arity; ++i)
                total *= all.size();
            if (total > kSeqExhaustive)
                continue;
            std::vector<Case> cases;
            std::vector<std::size_t> idx(arity, 0);
            while (true) {
                Case c;
                for (std::size_t i : idx)
                    c.emplace_back(all[i]);
                cases.push_back(std::move(c));
                std::size_t k = arity;
                while (k > 0 && ++idx[k - 1] == all.size())
                    idx[--k] = 0;
                if (k == 0)
                    break;
            }
            return from_list(std::move(cases), true);
        }
    }
    auto r = std::make_shared<Rng>(rng);
    return sampled(config.sequence_samples, [A, r, arity]() {
        Case c;
        for (std::size_t i = 0; i < arity; ++i)
            c.emplace_back(random_good_seq(A, *r, kSampleSupport));
        return c;
    });
}

struct SeqLaw {
    const char* id;
    const char* statement;
    std::size_t arity;
    enum Scope { All, Chains, Products } scope;
    std::function<bool(const Case&)> holds;
};

std::vector<SeqLaw> seq_laws() {
    return {
        {"S7.closure", "a + b is a good sequence with support <= support(a) + support(b)", 2, SeqLaw::All,
         [](const Case& c) {
             const auto s = gs_add(S(c, 0), S(c, 1));
             return is_good(*s.algebra(), s.entries()) && s.support() <= S(c, 0).support() + S(c, 1).support();
         }},
        {"S7.comm", "a + b = b + a", 2, SeqLaw::All,
         [](const Case& c) { return gs_add(S(c, 0), S(c, 1)) == gs_add(S(c, 1), S(c, 0)); }},
        {"S7.assoc", "(a + b) + c = a + (b + c)", 3, SeqLaw::All,
         [](const Case& c) {
             return gs_add(gs_add(S(c, 0), S(c, 1)), S(c, 2)) == gs_add(S(c, 0), gs_add(S(c, 1), S(c, 2)));
         }},
        {"S7.identity", "a + (0) = a", 1, SeqLaw::All,
         [](const Case& c) { return gs_add(S(c, 0), GoodSeq::zero(S(c, 0).algebra())) == S(c, 0); }},
        {"S7.conical", "a + b = (0) implies a = b = (0)", 2, SeqLaw::All,
         [](const Case& c) { return !gs_add(S(c, 0), S(c, 1)).is_zero() || (S(c, 0).is_zero() && S(c, 1).is_zero()); }},
        {"S7.prepend", "(1^m) + a = (1^m, a) for m = 1, 2, 3", 1, SeqLaw::All,
         [](const Case& c) {
             for (std::size_t m = 1; m <= 3; ++m)
                 if (gs_add(GoodSeq::units(S(c, 0).algebra(), m), S(c, 0)) != gs_prepend_units(m, S(c, 0)))
                     return false;
             return true;
         }},
        {"S7.lattice", "a v b and a ^ b are good, bound a and b, and absorb", 2, SeqLaw::All,
         [](const Case& c) {
             const auto &a = S(c, 0), &b = S(c, 1);
             const auto j = gs_join(a, b), m = gs_meet(a, b);
             const auto& A = *a.algebra();
             return is_good(A, j.entries()) && is_good(A, m.entries()) && gs_leq(a, j) && gs_leq(b, j) &&
                    gs_leq(m, a) && gs_leq(m, b) && gs_join(a, m) == a && gs_meet(a, j) == a;
         }},
        {"S7.distrib", "(a v b) + c = (a + c) v (b + c) and (a ^ b) + c = (a + c) ^ (b + c)", 3, SeqLaw::All,
         [](const Case& c) {
             const auto &a = S(c, 0), &b = S(c, 1), &d = S(c, 2);
             return gs_add(gs_join(a, b), d) == gs_join(gs_add(a, d), gs_add(b, d)) &&
                    gs_add(gs_meet(a, b), d) == gs_meet(gs_add(a, d), gs_add(b, d));
         }},
        {"S7.double-neg", "~~ commutes with +, v and ^ of good sequences", 2, SeqLaw::All,
         [](const Case& c) {
             const auto &a = S(c, 0), &b = S(c, 1);
             const auto na = gs_double_neg(a), nb = gs_double_neg(b);
             return gs_double_neg(gs_add(a, b)) == gs_add(na, nb) && gs_double_neg(gs_join(a, b)) == gs_join(na, nb) &&
                    gs_double_neg(gs_meet(a, b)) == gs_meet(na, nb);
         }},
        {"S7.chain-form", "over a chain every good sequence is (1^p, a)", 1, SeqLaw::Chains,
         [](const Case& c) { return S(c, 0).leading_units() + 1 >= S(c, 0).support(); }},
        {"S7.chain-sum", "(1^p, a) + (1^q, b) = (1^(p+q), a + b, a * b) agrees with the convolution", 2,
         SeqLaw::Chains,
         [](const Case& c) { return gs_add_chain(S(c, 0), S(c, 1)) == gs_add_convolution(S(c, 0), S(c, 1)); }},
        {"S7.project", "projections are good and commute with +", 2, SeqLaw::Products,
         [](const Case& c) {
             const auto &a = S(c, 0), &b = S(c, 1);
             const auto s = gs_add(a, b);
             const auto& factors = product_factors(*a.algebra());
             for (std::size_t i = 0; i < factors.size(); ++i) {
                 const auto pa = project_goodseq(a, i);
                 if (!is_good(*factors[i], pa.entries()))
                     return false;
                 if (project_goodseq(s, i) != gs_add(pa, project_goodseq(b, i)))
                     return false;
             }
             return true;
         }},
    };
}

GroupElt random_class(const AlgebraPtr& A, Rng& rng) {
    return GroupElt(random_good_seq(A, rng, 3), random_good_seq(A, rng, 3));
}

Source class_tuples(const AlgebraPtr& A, std::size_t n, Rng rng) {
    auto r = std::make_shared<Rng>(rng);
    return sampled(n, [A, r]() {
        Case c;
        for (int i = 0; i < 3; ++i)
            c.emplace_back(random_class(A, *r));
        return c;
    });
}

struct GroupLaw {
    const char* id;
    const char* statement;
    std::function<Outcome(const ChangGroup&, const Judge&, const Case&)> check;
};

std::vector<GroupLaw> group_laws() {
    return {
        {"S8.assoc", "(g + h) + m ~ g + (h + m)",
         [](const ChangGroup& grp, const Judge& J, const Case& c) {
             return outcome(J.eq(grp.add(grp.add(G(c, 0), G(c, 1)), G(c, 2)), grp.add(G(c, 0), grp.add(G(c, 1), G(c, 2)))));
         }},
        {"S8.comm", "g + h ~ h + g",
         [](const ChangGroup& grp, const Judge& J, const Case& c) {
             return outcome(J.eq(grp.add(G(c, 0), G(c, 1)), grp.add(G(c, 1), G(c, 0))));
         }},
        {"S8.inverse", "g + (-g) ~ 0 and g + 0 ~ g",
         [](const ChangGroup& grp, const Judge& J, const Case& c) {
             return outcome(J.eq(grp.add(G(c, 0), grp.neg(G(c, 0))), grp.zero()) && J.eq(grp.add(G(c, 0), grp.zero()), G(c, 0)));
         }},
        {"S8.order", "<= is reflexive, antisymmetric and transitive",
         [](const ChangGroup& grp, const Judge& J, const Case& c) {
             const auto &g = G(c, 0), &h = G(c, 1), &m = G(c, 2);
             const Tri refl = J.leq(g, g);
             if (refl != Tri::True)
                 return outcome(refl);
             const Outcome anti = implies(J.leq(g, h) && J.leq(h, g), J.eq(g, h));
             if (anti != Outcome::Holds)
                 return anti;
             // g <= g + [h+, 0] <= g + [h+, 0] + [m+, 0].
             const auto h2 = grp.add(g, grp.of(h.pos()));
             const auto m2 = grp.add(h2, grp.of(m.pos()));
             return outcome(J.leq(g, h2) && J.leq(h2, m2) && J.leq(g, m2));
         }},
        {"S8.translation", "g <= h iff g + m <= h + m",
         [](const ChangGroup& grp, const Judge& J, const Case& c) {
             const Tri a = J.leq(G(c, 0), G(c, 1));
             const Tri b = J.leq(grp.add(G(c, 0), G(c, 2)), grp.add(G(c, 1), G(c, 2)));
             if (a == Tri::Unknown || b == Tri::Unknown)
                 return Outcome::Undecided;
             return holds(a == b);
         }},
        {"S8.join", "g v h is above g and h and below every common upper bound; dually for g ^ h",
         [](const ChangGroup& grp, const Judge& J, const Case& c) {
             const auto &g = G(c, 0), &h = G(c, 1), &m = G(c, 2);
             const auto j = grp.join(g, h), w = grp.meet(g, h);
             Tri t = J.leq(g, j) && J.leq(h, j) && J.leq(w, g) && J.leq(w, h);
             const auto n = static_cast<std::int64_t>(std::max(grp.unit_bound(g), grp.unit_bound(h)));
             const auto top = grp.times(n, grp.unit());
             t = t && J.leq(j, top) && J.leq(grp.neg(top), w);
             if (t != Tri::True)
                 return outcome(t);
             const Outcome up = implies(J.leq(g, m) && J.leq(h, m), J.leq(j, m));
             if (up != Outcome::Holds)
                 return up;
             return implies(J.leq(m, g) && J.leq(m, h), J.leq(m, w));
         }},
        {"S8.join-zero", "[a, b] v 0 ~ [a v b, b]",
         [](const ChangGroup& grp, const Judge& J, const Case& c) {
             const auto& g = G(c, 0);
             return outcome(J.eq(grp.join(g, grp.zero()), grp.make(gs_join(g.pos(), g.neg()), g.neg())));
         }},
        {"S8.l-group", "(g v h) + m ~ (g + m) v (h + m) and (g ^ h) + m ~ (g + m) ^ (h + m)",
         [](const ChangGroup& grp, const Judge& J, const Case& c) {
             const auto &g = G(c, 0), &h = G(c, 1), &m = G(c, 2);
             return outcome(J.eq(grp.add(grp.join(g, h), m), grp.join(grp.add(g, m), grp.add(h, m))) &&
                            J.eq(grp.add(grp.meet(g, h), m), grp.meet(grp.add(g, m), grp.add(h, m))));
         }},
        {"S8.strong-unit", "g <= n u with n = max support, at least 1",
         [](const ChangGroup& grp, const Judge& J, const Case& c) {
             const auto& g = G(c, 0);
             const std::size_t n = grp.unit_bound(g);
             if (n > std::max<std::size_t>({g.pos().support(), g.neg().support(), 1}))
                 return Outcome::Fails;
             return outcome(J.leq(g, grp.times(static_cast<std::int64_t>(n), grp.unit())) && J.leq(grp.zero(), grp.unit()));
         }},
        {"S8.theta", "g ~ [~~a, ~~b] + [a + ~~b, b + ~~a] with the second part in S(L)",
         [](const ChangGroup& grp, const Judge& J, const Case& c) {
             const auto t = grp.theta(G(c, 0));
             if (!grp.in_S(t.s_part) || !(t.mv_embedded == grp.embed_mv(t.mv_part)))
                 return Outcome::Fails;
             return outcome(J.eq(G(c, 0), grp.add(t.mv_embedded, t.s_part)));
         }},
        {"S8.theta-additive", "theta(g + h) ~ theta(g) + theta(h) in both parts",
         [](const ChangGroup& grp, const Judge& J, const Case& c) {
             const auto& M = *grp.mv_group();
             const Judge JM{M, preferred_strategy(M)};
             const auto tg = grp.theta(G(c, 0)), th = grp.theta(G(c, 1)), ts = grp.theta(grp.add(G(c, 0), G(c, 1)));
             return outcome(JM.eq(ts.mv_part, M.add(tg.mv_part, th.mv_part)) &&
                            J.eq(ts.s_part, grp.add(tg.s_part, th.s_part)));
         }},
        {"S8.theta-order", "g <= h implies theta(g) <= theta(h) lexicographically",
         [](const ChangGroup& grp, const Judge& J, const Case& c) {
             const auto& M = *grp.mv_group();
             const Judge JM{M, preferred_strategy(M)};
             const auto &g = G(c, 0), &h = G(c, 1);
             // Compare g with a class above it, so the hypothesis is not vacuous.
             const auto up = grp.join(g, h);
             const auto tg = grp.theta(g), tu = grp.theta(up);
             const Tri first = JM.leq(tg.mv_part, tu.mv_part);
             if (first != Tri::True)
                 return outcome(first);
             return implies(JM.eq(tg.mv_part, tu.mv_part), J.leq(tg.s_part, tu.s_part));
         }},
        {"S8.S-class", "membership in S(L) does not depend on the representative",
         [](const ChangGroup& grp, const Judge&, const Case& c) {
             const auto& g = G(c, 0);
             const auto& k = G(c, 1).pos();
             return holds(grp.in_S(g) == grp.in_S(grp.make(gs_add(g.pos(), k), gs_add(g.neg(), k))));
         }},
        {"S8.S-subgroup", "S(L) is closed under +, -, v and ^; it meets the MV part only in 0",
         [](const ChangGroup& grp, const Judge& J, const Case& c) {
             const auto s1 = grp.theta(G(c, 0)).s_part, s2 = grp.theta(G(c, 1)).s_part;
             if (!(grp.in_S(grp.add(s1, s2)) && grp.in_S(grp.neg(s1)) && grp.in_S(grp.join(s1, s2)) && grp.in_S(grp.meet(s1, s2))))
                 return Outcome::Fails;
             const auto mv = grp.theta(G(c, 2)).mv_embedded;
             return implies(tri(grp.in_S(mv)), J.eq(mv, grp.zero()));
         }},
    };
}

void run_convexity(SuiteReport& report, const ChangGroup& grp, const Judge& J, const GeneratorConfig& config) {
    const auto& A = grp.algebra();
    auto src = class_tuples(A, config.sandwich_samples, stream_for(config, report.suite, A->name(), "S8.convex"));
    report.properties.push_back(run_property(
        "S8.convex", "s1 <= g <= s2 with s1, s2 in S(L) forces g into S(L)", A, std::move(src),
        [&grp, &J](const Case& c) {
            const auto s1 = grp.theta(G(c, 0)).s_part;
            const auto s2 = grp.join(s1, grp.theta(G(c, 1)).s_part);
            const auto g = grp.meet(grp.join(G(c, 2), s1), s2);
            const Tri sandwich = J.leq(s1, g) && J.leq(g, s2);
            if (sandwich != Tri::True)
                return outcome(sandwich);
            return holds(grp.in_S(g));
        }));
}

void run_cancellation(SuiteReport& report, const ChangGroup& grp, const Judge& J, const GeneratorConfig& config) {
    const auto& A = grp.algebra();
    auto src = seq_tuples(A, 3, config, stream_for(config, report.suite, A->name(), "S8.cancel"));
    report.properties.push_back(run_property("S8.cancel", "a + c = b + c implies a = b", A, std::move(src),
                                             [](const Case& c) {
                                                 return holds(gs_add(S(c, 0), S(c, 2)) != gs_add(S(c, 1), S(c, 2)) ||
                                                              S(c, 0) == S(c, 1));
                                             }));
    auto src2 = seq_tuples(A, 2, config, stream_for(config, report.suite, A->name(), "S8.cone"));
    report.properties.push_back(run_property(
        "S8.cone", "0 <= [a, 0], and [a, 0] <= [b, 0] iff a <= b", A, std::move(src2), [&grp, &J](const Case& c) {
            const auto ga = grp.of(S(c, 0)), gb = grp.of(S(c, 1));
            const Tri order = J.leq(ga, gb);
            if (order == Tri::Unknown)
                return Outcome::Undecided;
            return outcome(J.leq(grp.zero(), ga) && tri((order == Tri::True) == gs_leq(S(c, 0), S(c, 1))));
        }));
}

// Cancellative, ChainSearch and BoundedGeneral must never contradict each
// other; Bounded may only fall short.
void run_strategy_agreement(SuiteReport& report, const ChangGroup& grp, const GeneratorConfig& config) {
    const auto& A = grp.algebra();
    if (!A->is_finite())
        return;
    auto src = class_tuples(A, config.group_samples, stream_for(config, report.suite, A->name(), "S8.agree"));
    report.properties.push_back(run_property(
        "S8.agree", "Cancellative, ChainSearch and BoundedGeneral agree on = and <=", A, std::move(src),
        [&grp](const Case& c) {
            const auto &g = G(c, 0), &h = G(c, 1);
            std::vector<Strategy> decisive;
            if (grp.cancellative_licensed())
                decisive.push_back(Strategy::cancellative());
            if (grp.chain_search_applies())
                decisive.push_back(Strategy::chain_search());
            if (decisive.empty())
                return Outcome::Undecided;
            for (const auto* rel : {"eq", "leq"}) {
                const bool eq = rel[1] == 'q';
                auto ask = [&](const Strategy& s) {
                    return eq ? tri(grp.eq(g, h, s)) : tri(grp.leq(g, h, s));
                };
                const Tri ref = ask(decisive.front());
                if (ref == Tri::Unknown)
                    return Outcome::Undecided;
                for (std::size_t i = 1; i < decisive.size(); ++i) {
                    const Tri other = ask(decisive[i]);
                    if (other == Tri::Unknown)
                        return Outcome::Undecided;
                    if (other != ref)
                        return Outcome::Fails;
                }
                const Tri bounded = ask(Strategy::bounded());
                if (bounded == Tri::False || (bounded == Tri::True && ref != Tri::True))
                    return Outcome::Fails;
            }
            return Outcome::Holds;
        }));
}

} // namespace

void run_sequence_suite(SuiteReport& report, const std::vector<AlgebraPtr>& corpus, const GeneratorConfig& config) {
    const auto laws = seq_laws();
    for (const auto& A : corpus)
        for (const auto& law : laws) {
            if (law.scope == SeqLaw::Chains && !A->is_chain())
                continue;
            if (law.scope == SeqLaw::Products && (A->is_chain() || !is_product_of_chains(*A)))
                continue;
            auto src = seq_tuples(A, law.arity, config, stream_for(config, report.suite, A->name(), law.id));
            const auto& f = law.holds;
            report.properties.push_back(run_property(law.id, law.statement, A, std::move(src),
                                                     [&f](const Case& c) { return holds(f(c)); }));
        }
}

void run_group_suite(SuiteReport& report, const std::vector<AlgebraPtr>& corpus, const GeneratorConfig& config) {
    const auto laws = group_laws();
    for (const auto& A : corpus) {
        ChangGroup grp(A);
        const Judge J{grp, preferred_strategy(grp)};
        for (const auto& law : laws) {
            if (!grp.mv_group() && std::string(law.id).rfind("S8.theta", 0) == 0)
                continue;
            auto src = class_tuples(A, config.group_samples, stream_for(config, report.suite, A->name(), law.id));
            const auto& f = law.check;
            auto rec = run_property(law.id, law.statement, A, std::move(src),
                                    [&grp, &J, &f](const Case& c) { return f(grp, J, c); });
            rec.note = rec.note.empty() ? "strategy " + to_string(J.s) : rec.note;
            report.properties.push_back(std::move(rec));
        }
        if (grp.mv_group())
            run_convexity(report, grp, J, config);
        if (grp.cancellative_licensed())
            run_cancellation(report, grp, J, config);
        run_strategy_agreement(report, grp, config);
    }
    const auto proof = no_difference_case_split(config.denominator_cap);
    report.properties.push_back(fact("S8.no-difference", "no good sequence a has (1/2) = (1/4) + a",
                                     StandardChain::rationals(ChainKind::Product, config.denominator_cap)->name(),
                                     proof.holds(), proof.cases.size() + proof.brute_force_points,
                                     "case split x = 0 / x > 0, plus every x up to the denominator cap"));
}

} // namespace blchang::detail
