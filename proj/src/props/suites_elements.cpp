// Element-level suites: pseudo-addition, addition, addition in ordinal sums,
// identities of BL-chains and the key identity.

#include <functional>
#include <optional>

#include "blchang/errors.hpp"
#include "blchang/validate.hpp"
#include "harness.hpp"
#include "suites.hpp"

namespace blchang::detail {

namespace {

using Xs = std::vector<Elt>;

struct Law {
    const char* id;
    const char* statement;
    std::size_t arity;
    bool chains_only;
    std::function<bool(const Algebra&, const Xs&)> holds;
};

bool implies(bool a, bool b) { return !a || b; }

std::vector<Law> pseudo_add_laws() {
    return {
        {"S2.assoc", "(x (/) y) (/) z = x (/) (y (/) z)", 3, false,
         [](const Algebra& A, const Xs& v) {
             return A.pseudo_add(A.pseudo_add(v[0], v[1]), v[2]) == A.pseudo_add(v[0], A.pseudo_add(v[1], v[2]));
         }},
        {"S2.monotone", "x <= y and z <= t imply x (/) z <= y (/) t", 4, false,
         [](const Algebra& A, const Xs& v) {
             return implies(A.leq(v[0], v[1]) && A.leq(v[2], v[3]),
                            A.leq(A.pseudo_add(v[0], v[2]), A.pseudo_add(v[1], v[3])));
         }},
        {"S2.distrib", "(/) distributes over v and ^ on both sides", 3, false,
         [](const Algebra& A, const Xs& v) {
             const Elt &x = v[0], &y = v[1], &z = v[2];
             return A.pseudo_add(x, A.join(y, z)) == A.join(A.pseudo_add(x, y), A.pseudo_add(x, z)) &&
                    A.pseudo_add(A.join(x, y), z) == A.join(A.pseudo_add(x, z), A.pseudo_add(y, z)) &&
                    A.pseudo_add(x, A.meet(y, z)) == A.meet(A.pseudo_add(x, y), A.pseudo_add(x, z)) &&
                    A.pseudo_add(A.meet(x, y), z) == A.meet(A.pseudo_add(x, z), A.pseudo_add(y, z));
         }},
        {"S2.exchange", "x (/) (y (/) z) = y (/) (x (/) z)", 3, false,
         [](const Algebra& A, const Xs& v) {
             return A.pseudo_add(v[0], A.pseudo_add(v[1], v[2])) == A.pseudo_add(v[1], A.pseudo_add(v[0], v[2]));
         }},
    };
}

std::vector<Law> add_laws() {
    return {
        {"S3.comm", "x + y = y + x", 2, false,
         [](const Algebra& A, const Xs& v) { return A.add(v[0], v[1]) == A.add(v[1], v[0]); }},
        {"S3.assoc", "(x + y) + z = x + (y + z)", 3, false,
         [](const Algebra& A, const Xs& v) {
             return A.add(A.add(v[0], v[1]), v[2]) == A.add(v[0], A.add(v[1], v[2]));
         }},
        {"S3.monotone", "x <= y and z <= t imply x + z <= y + t", 4, false,
         [](const Algebra& A, const Xs& v) {
             return implies(A.leq(v[0], v[1]) && A.leq(v[2], v[3]), A.leq(A.add(v[0], v[2]), A.add(v[1], v[3])));
         }},
        {"S3.identity", "x + 0 = x", 1, false,
         [](const Algebra& A, const Xs& v) { return A.add(v[0], A.bottom()) == v[0]; }},
        {"S3.absorb", "x + 1 = 1", 1, false,
         [](const Algebra& A, const Xs& v) { return A.is_top(A.add(v[0], A.top())); }},
        {"S3.upper", "x <= x + y and y <= x + y", 2, false,
         [](const Algebra& A, const Xs& v) {
             const Elt s = A.add(v[0], v[1]);
             return A.leq(v[0], s) && A.leq(v[1], s);
         }},
        {"S3.excluded", "~~(x + ~x) = 1", 1, false,
         [](const Algebra& A, const Xs& v) { return A.is_top(A.double_neg(A.add(v[0], A.neg(v[0])))); }},
        {"S3.cover", "x + y = 1 implies ~x <= y", 2, false,
         [](const Algebra& A, const Xs& v) { return implies(A.is_top(A.add(v[0], v[1])), A.leq(A.neg(v[0]), v[1])); }},
        {"S3.double-neg", "~~(x + y) = ~~x + ~~y", 2, false,
         [](const Algebra& A, const Xs& v) {
             return A.double_neg(A.add(v[0], v[1])) == A.add(A.double_neg(v[0]), A.double_neg(v[1]));
         }},
    };
}

std::vector<Law> chain_laws() {
    return {
        {"S5.i", "x + y < 1 implies x * y = 0", 2, true,
         [](const Algebra& A, const Xs& v) {
             return implies(!A.is_top(A.add(v[0], v[1])), A.is_bottom(A.otimes(v[0], v[1])));
         }},
        {"S5.ii", "x + y = x + z and x * y = x * z imply ~y = ~z", 3, true,
         [](const Algebra& A, const Xs& v) {
             return implies(A.add(v[0], v[1]) == A.add(v[0], v[2]) && A.otimes(v[0], v[1]) == A.otimes(v[0], v[2]),
                            A.neg(v[1]) == A.neg(v[2]));
         }},
        {"S5.iii", "x + y = x + z < 1 implies ~y = ~z", 3, true,
         [](const Algebra& A, const Xs& v) {
             const Elt s = A.add(v[0], v[1]);
             return implies(s == A.add(v[0], v[2]) && !A.is_top(s), A.neg(v[1]) == A.neg(v[2]));
         }},
        {"S5.iv", "x + y = x implies x = 1 or y = 0", 2, true,
         [](const Algebra& A, const Xs& v) {
             return implies(A.add(v[0], v[1]) == v[0], A.is_top(v[0]) || A.is_bottom(v[1]));
         }},
        {"S5.v", "(x + y) + (x * y) = x + y", 2, false,
         [](const Algebra& A, const Xs& v) {
             const Elt s = A.add(v[0], v[1]);
             return A.add(s, A.otimes(v[0], v[1])) == s;
         }},
        {"S5.vi", "(x * y) + ((x + y) * z) = (x + y) * ((x * y) + z)", 3, false,
         [](const Algebra& A, const Xs& v) {
             const Elt p = A.otimes(v[0], v[1]);
             const Elt s = A.add(v[0], v[1]);
             return A.add(p, A.otimes(s, v[2])) == A.otimes(s, A.add(p, v[2]));
         }},
        {"S5.vii", "(x v y) + z = (x + z) v (y + z) and (x ^ y) + z = (x + z) ^ (y + z)", 3, false,
         [](const Algebra& A, const Xs& v) {
             const Elt &x = v[0], &y = v[1], &z = v[2];
             return A.add(A.join(x, y), z) == A.join(A.add(x, z), A.add(y, z)) &&
                    A.add(A.meet(x, y), z) == A.meet(A.add(x, z), A.add(y, z));
         }},
        {"S5.viii", "x + y = x iff ~x + ~y = ~y", 2, true,
         [](const Algebra& A, const Xs& v) {
             return (A.add(v[0], v[1]) == v[0]) == (A.add(A.neg(v[0]), A.neg(v[1])) == A.neg(v[1]));
         }},
    };
}

std::vector<Law> key_identity() {
    return {{"S6.identity", "(x * y) + ((x + y) * z) = (x * z) + ((x + z) * y)", 3, false,
             [](const Algebra& A, const Xs& v) {
                 const Elt &x = v[0], &y = v[1], &z = v[2];
                 return A.add(A.otimes(x, y), A.otimes(A.add(x, y), z)) ==
                        A.add(A.otimes(x, z), A.otimes(A.add(x, z), y));
             }}};
}

void run_laws(SuiteReport& report, const std::vector<Law>& laws, const std::vector<AlgebraPtr>& corpus,
              const GeneratorConfig& config) {
    for (const auto& A : corpus)
        for (const auto& law : laws) {
            if (law.chains_only && !A->is_chain())
                continue;
            auto src = element_tuples(A, law.arity, config.element_samples,
                                      stream_for(config, report.suite, A->name(), law.id));
            const auto& f = law.holds;
            report.properties.push_back(run_property(law.id, law.statement, A, std::move(src), [A, &f](const Case& c) {
                Xs xs;
                for (const auto& v : c)
                    xs.push_back(std::get<Elt>(v));
                return holds(f(*A, xs));
            }));
        }
}

// x (+)_0 y computed inside the initial MV-component, independently of the
// algebra's own addition; nullopt when the decomposition is not known.
std::optional<Elt> initial_sum(const Algebra& A, const Elt& x, const Elt& y) {
    if (A.shape() == Shape::OrdinalSum) {
        const auto& S = static_cast<const OrdinalSum&>(A);
        const auto& c0 = *S.components().front();
        const Elt s = c0.imp(c0.neg(x.inner()), y.inner());
        return S.embed(0, s);
    }
    if (A.shape() == Shape::StandardChain) {
        const auto& C = static_cast<const StandardChain&>(A);
        if (C.kind() == ChainKind::Lukasiewicz) {
            Rational s = x.value() + y.value();
            return Elt::rational(s > 1 ? Rational(1) : s);
        }
        // The initial component is {0, 1}; both summands are nonzero.
        return A.top();
    }
    return std::nullopt;
}

void run_ordinal_sum_addition(SuiteReport& report, const std::vector<AlgebraPtr>& corpus,
                              const GeneratorConfig& config) {
    const std::string id = "S4.sum";
    const std::string statement = "x, y != 0: x + y = x (+)_0 y if x, y lie in the initial component, else 1";
    for (const auto& A : corpus) {
        if (!A->is_chain())
            continue;
        if (!A->bounded() || !initial_sum(*A, A->top(), A->top())) {
            PropertyRecord r;
            r.id = id;
            r.statement = statement;
            r.algebra = A->name();
            r.note = "not applicable: ordinal-sum decomposition unknown";
            report.properties.push_back(std::move(r));
            continue;
        }
        auto src = element_tuples(A, 2, config.element_samples, stream_for(config, report.suite, A->name(), id));
        report.properties.push_back(run_property(id, statement, A, std::move(src), [A](const Case& c) {
            const Elt &x = E(c, 0), &y = E(c, 1);
            if (A->is_bottom(x) || A->is_bottom(y))
                return Outcome::Holds;
            const auto ix = A->in_initial_component(x), iy = A->in_initial_component(y);
            if (!ix || !iy)
                return Outcome::Undecided;
            const Elt expect = (*ix && *iy) ? *initial_sum(*A, x, y) : A->top();
            return holds(A->add(x, y) == expect);
        }));
    }
}

void run_tower_validation(SuiteReport& report, const std::vector<AlgebraPtr>& corpus, const GeneratorConfig& config) {
    for (const auto& A : corpus) {
        if (!A->is_chain())
            continue;
        ValidationConfig vc;
        vc.seed = config.seed;
        auto r = validate_bl_axioms(*A, vc);
        std::string note;
        if (const auto* f = r.first_failure())
            note = "axiom " + f->id + " fails";
        report.properties.push_back(fact("S5.tower", "the chain satisfies the BL axioms", A->name(), r.ok(),
                                         r.triples, std::move(note)));
        report.properties.back().exhaustive = r.exhaustive;
    }
}

} // namespace

void run_element_suite(SuiteReport& report, const std::vector<AlgebraPtr>& corpus, const GeneratorConfig& config) {
    const std::string& id = report.suite;
    if (id == "S2")
        run_laws(report, pseudo_add_laws(), corpus, config);
    else if (id == "S3")
        run_laws(report, add_laws(), corpus, config);
    else if (id == "S4")
        run_ordinal_sum_addition(report, corpus, config);
    else if (id == "S5") {
        run_tower_validation(report, corpus, config);
        run_laws(report, chain_laws(), corpus, config);
    } else if (id == "S6")
        run_laws(report, key_identity(), corpus, config);
}

} // namespace blchang::detail
