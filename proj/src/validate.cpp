#include "blchang/validate.hpp"

#include <functional>
#include <sstream>

namespace blchang {

namespace {

using Law = std::function<bool(const Algebra&, const Elt&, const Elt&, const Elt&)>;

struct LawSpec {
    const char* id;
    const char* statement;
    bool needs_bottom;
    Law holds;
};

bool implies(bool a, bool b) { return !a || b; }

const std::vector<LawSpec>& laws() {
    static const std::vector<LawSpec> table = {
        {"monoid.comm", "x*y = y*x", false,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt&) { return A.otimes(x, y) == A.otimes(y, x); }},
        {"monoid.assoc", "(x*y)*z = x*(y*z)", false,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt& z) {
             return A.otimes(A.otimes(x, y), z) == A.otimes(x, A.otimes(y, z));
         }},
        {"monoid.unit", "x*1 = x", false,
         [](const Algebra& A, const Elt& x, const Elt&, const Elt&) { return A.otimes(x, A.top()) == x; }},
        {"hoop.refl", "x->x = 1", false,
         [](const Algebra& A, const Elt& x, const Elt&, const Elt&) { return A.is_top(A.imp(x, x)); }},
        {"hoop.div", "x*(x->y) = y*(y->x)", false,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt&) {
             return A.otimes(x, A.imp(x, y)) == A.otimes(y, A.imp(y, x));
         }},
        {"hoop.curry", "x->(y->z) = (x*y)->z", false,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt& z) {
             return A.imp(x, A.imp(y, z)) == A.imp(A.otimes(x, y), z);
         }},
        {"residuation", "x*y <= z iff x <= y->z", false,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt& z) {
             return A.leq(A.otimes(x, y), z) == A.leq(x, A.imp(y, z));
         }},
        {"order", "<= is a partial order", false,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt& z) {
             return A.leq(x, x) && implies(A.leq(x, y) && A.leq(y, x), x == y) &&
                    implies(A.leq(x, y) && A.leq(y, z), A.leq(x, z));
         }},
        {"lattice", "meet and join are glb and lub", false,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt& z) {
             const Elt m = A.meet(x, y), j = A.join(x, y);
             return A.leq(m, x) && A.leq(m, y) && implies(A.leq(z, x) && A.leq(z, y), A.leq(z, m)) &&
                    A.leq(x, j) && A.leq(y, j) && implies(A.leq(x, z) && A.leq(y, z), A.leq(j, z));
         }},
        {"bounded", "0 <= x", true,
         [](const Algebra& A, const Elt& x, const Elt&, const Elt&) { return A.leq(A.bottom(), x); }},
        {"prelinearity", "(x->y)->z <= ((y->x)->z)->z", false,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt& z) {
             return A.leq(A.imp(A.imp(x, y), z), A.imp(A.imp(A.imp(y, x), z), z));
         }},
        {"(1)", "x <= y iff x->y = 1; x*y <= x^y", false,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt&) {
             return A.leq(x, y) == A.is_top(A.imp(x, y)) && A.leq(A.otimes(x, y), A.meet(x, y));
         }},
        {"(2)", "x->(y->z) = (x*y)->z", false,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt& z) {
             return A.imp(x, A.imp(y, z)) == A.imp(A.otimes(x, y), z);
         }},
        {"(3)", "x->(y->z) = y->(x->z)", false,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt& z) {
             return A.imp(x, A.imp(y, z)) == A.imp(y, A.imp(x, z));
         }},
        {"(4)", "x <= y implies y->z <= x->z and z->x <= z->y", false,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt& z) {
             return implies(A.leq(x, y), A.leq(A.imp(y, z), A.imp(x, z)) && A.leq(A.imp(z, x), A.imp(z, y)));
         }},
        {"(5)", "x <= y->(x*y); x*(x->y) <= y", false,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt&) {
             return A.leq(x, A.imp(y, A.otimes(x, y))) && A.leq(A.otimes(x, A.imp(x, y)), y);
         }},
        {"(6)", "1->x = x; x->x = 1; x->1 = 1; x <= y->x; x <= ~~x; ~~~x = ~x", true,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt&) {
             const Elt& one = A.top();
             return A.imp(one, x) == x && A.is_top(A.imp(x, x)) && A.is_top(A.imp(x, one)) &&
                    A.leq(x, A.imp(y, x)) && A.leq(x, A.double_neg(x)) && A.neg(A.double_neg(x)) == A.neg(x);
         }},
        {"(7)", "x*~x = 0; x*y = 0 iff x <= ~y", true,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt&) {
             return A.is_bottom(A.otimes(x, A.neg(x))) && A.is_bottom(A.otimes(x, y)) == A.leq(x, A.neg(y));
         }},
        {"(8)", "x <= y implies x*z <= y*z, z->x <= z->y, y->z <= x->z, ~y <= ~x", true,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt& z) {
             return implies(A.leq(x, y), A.leq(A.otimes(x, z), A.otimes(y, z)) && A.leq(A.imp(z, x), A.imp(z, y)) &&
                                             A.leq(A.imp(y, z), A.imp(x, z)) && A.leq(A.neg(y), A.neg(x)));
         }},
        {"(9)", "~(x*y) = x->~y; ~(x^y) = ~x v ~y; ~(x v y) = ~x ^ ~y; ~0 = 1; ~1 = 0", true,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt&) {
             return A.neg(A.otimes(x, y)) == A.imp(x, A.neg(y)) &&
                    A.neg(A.meet(x, y)) == A.join(A.neg(x), A.neg(y)) &&
                    A.neg(A.join(x, y)) == A.meet(A.neg(x), A.neg(y)) && A.is_top(A.neg(A.bottom())) &&
                    A.is_bottom(A.neg(A.top()));
         }},
        {"(10)", "~~ preserves ->, ^, v and *", true,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt&) {
             const Elt nx = A.double_neg(x), ny = A.double_neg(y);
             return A.double_neg(A.imp(x, y)) == A.imp(nx, ny) && A.double_neg(A.meet(x, y)) == A.meet(nx, ny) &&
                    A.double_neg(A.join(x, y)) == A.join(nx, ny) && A.otimes(nx, ny) == A.double_neg(A.otimes(x, y));
         }},
        {"(11)", "x*(y v z) = x*y v x*z; x*(y^z) = x*y ^ x*z", false,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt& z) {
             return A.otimes(x, A.join(y, z)) == A.join(A.otimes(x, y), A.otimes(x, z)) &&
                    A.otimes(x, A.meet(y, z)) == A.meet(A.otimes(x, y), A.otimes(x, z));
         }},
        {"(12)", "x->(y^z) = (x->y)^(x->z); x->(y v z) = (x->y) v (x->z)", false,
         [](const Algebra& A, const Elt& x, const Elt& y, const Elt& z) {
             return A.imp(x, A.meet(y, z)) == A.meet(A.imp(x, y), A.imp(x, z)) &&
                    A.imp(x, A.join(y, z)) == A.join(A.imp(x, y), A.imp(x, z));
         }},
    };
    return table;
}

} // namespace

bool ValidationReport::ok() const {
    return first_failure() == nullptr;
}

const AxiomCheck* ValidationReport::first_failure() const {
    for (const auto& c : checks)
        if (c.applicable && !c.passed())
            return &c;
    return nullptr;
}

std::string ValidationReport::render(const Algebra& a) const {
    std::ostringstream out;
    out << "algebra " << algebra << ": " << (exhaustive ? "exhaustive" : "sampled") << ", " << triples
        << " triples";
    if (!exhaustive)
        out << ", seed " << seed;
    out << "\n";
    for (const auto& c : checks) {
        if (!c.applicable) {
            out << "  [skip] " << c.id << "  " << c.statement << "  (no bottom)\n";
            continue;
        }
        out << "  [" << (c.passed() ? " ok " : "FAIL") << "] " << c.id << "  " << c.statement;
        if (!c.passed()) {
            out << "  " << c.failures << "/" << c.cases << " failing, witness x=" << a.render(c.witness[0])
                << " y=" << a.render(c.witness[1]) << " z=" << a.render(c.witness[2]);
        }
        out << "\n";
    }
    out << (ok() ? "all axioms hold\n" : "axiom failure\n");
    return out.str();
}

ValidationReport validate_bl_axioms(const Algebra& a, const ValidationConfig& config) {
    ValidationReport report;
    report.algebra = a.name();
    report.exhaustive = a.is_finite();
    report.seed = config.seed;
    for (const auto& law : laws()) {
        AxiomCheck c;
        c.id = law.id;
        c.statement = law.statement;
        c.applicable = !law.needs_bottom || a.bounded();
        report.checks.push_back(std::move(c));
    }

    auto run = [&](const Elt& x, const Elt& y, const Elt& z) {
        ++report.triples;
        const auto& specs = laws();
        for (std::size_t k = 0; k < specs.size(); ++k) {
            auto& c = report.checks[k];
            if (!c.applicable)
                continue;
            ++c.cases;
            if (!specs[k].holds(a, x, y, z)) {
                if (c.failures++ == 0)
                    c.witness = {x, y, z};
            }
        }
    };

    if (report.exhaustive) {
        const auto& e = a.elements();
        for (const auto& x : e)
            for (const auto& y : e)
                for (const auto& z : e)
                    run(x, y, z);
    } else {
        Rng rng = Rng::stream(config.seed, Rng::salt_of("validate:" + a.name()));
        for (std::size_t i = 0; i < config.budget; ++i) {
            Elt x = a.sample(rng);
            Elt y = a.sample(rng);
            Elt z = a.sample(rng);
            run(x, y, z);
        }
    }
    return report;
}

} // namespace blchang
