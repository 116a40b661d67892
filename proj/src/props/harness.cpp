#include "harness.hpp"

#include <exception>
#include <optional>

#include "blchang/errors.hpp"

namespace blchang::detail {

Source element_tuples(const AlgebraPtr& a, std::size_t arity, std::size_t samples, Rng rng) {
    if (a->is_finite()) {
        const auto& elems = a->elements();
        std::size_t total = 1;
        bool small = true;
        for (std::size_t i = 0; i < arity && small; ++i) {
            total *= elems.size();
            small = total <= kExhaustiveLimit;
        }
        if (small) {
            auto idx = std::make_shared<std::vector<std::size_t>>(arity, 0);
            auto done = std::make_shared<bool>(elems.empty());
            return {true, [a, idx, done](Case& c) {
                        if (*done)
                            return false;
                        const auto& el = a->elements();
                        c.clear();
                        for (std::size_t i : *idx)
                            c.emplace_back(el[i]);
                        std::size_t k = idx->size();
                        while (k > 0) {
                            --k;
                            if (++(*idx)[k] < el.size())
                                return true;
                            (*idx)[k] = 0;
                        }
                        *done = true;
                        return true;
                    }};
        }
    }
    auto r = std::make_shared<Rng>(rng);
    return sampled(samples, [a, r, arity]() {
        Case c;
        for (std::size_t i = 0; i < arity; ++i)
            c.emplace_back(a->sample(*r));
        return c;
    });
}

Source from_list(std::vector<Case> cases, bool exhaustive) {
    auto list = std::make_shared<std::vector<Case>>(std::move(cases));
    auto pos = std::make_shared<std::size_t>(0);
    return {exhaustive, [list, pos](Case& c) {
                if (*pos >= list->size())
                    return false;
                c = (*list)[(*pos)++];
                return true;
            }};
}

Source sampled(std::size_t n, std::function<Case()> draw) {
    auto left = std::make_shared<std::size_t>(n);
    return {false, [left, draw = std::move(draw)](Case& c) {
                if (*left == 0)
                    return false;
                --*left;
                c = draw();
                return true;
            }};
}

std::string render_value(const Value& v, const Algebra& a) {
    if (const auto* e = std::get_if<Elt>(&v))
        return a.render(*e);
    if (const auto* s = std::get_if<GoodSeq>(&v))
        return render(*s);
    return render(std::get<GroupElt>(v));
}

namespace {

// Rank used by shrinking; smaller is simpler. Finite carriers use element
// order, rationals denominator then numerator, other values bottom < top < rest.
struct Rank {
    std::size_t major = 0;
    Rational minor;
};

bool simpler(const Rank& x, const Rank& y) { return x.major != y.major ? x.major < y.major : x.minor < y.minor; }

Rank rank_of(const Elt& x, const Algebra& a) {
    if (a.is_finite()) {
        const auto& el = a.elements();
        for (std::size_t i = 0; i < el.size(); ++i)
            if (el[i] == x)
                return {i, 0};
    }
    if (x.is(Elt::Kind::Rational))
        return {0, Rational(x.value().get_den()) * 1024 + abs(x.value().get_num())};
    if (a.is_bottom(x))
        return {0, 0};
    if (a.is_top(x))
        return {1, 0};
    return {2, 0};
}

std::vector<Elt> element_candidates(const Elt& x, const Algebra& a) {
    std::vector<Elt> raw;
    if (a.bounded())
        raw.push_back(a.bottom());
    raw.push_back(a.top());
    if (a.is_finite()) {
        for (const auto& e : a.elements())
            raw.push_back(e);
    } else if (x.is(Elt::Kind::Rational)) {
        Rational scale = 1;
        for (int k = 1; k <= 6; ++k) {
            scale *= 2;
            mpz_class num = x.value().get_num() * scale.get_num();
            mpz_class den = x.value().get_den();
            mpz_class fl;
            mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            raw.push_back(Elt::rational(Rational(fl) / scale));
            raw.push_back(Elt::rational(Rational(fl + 1) / scale));
        }
    }
    const Rank rx = rank_of(x, a);
    std::vector<Elt> out;
    for (auto& e : raw)
        if (e != x && a.contains(e) && simpler(rank_of(e, a), rx))
            out.push_back(std::move(e));
    return out;
}

std::vector<GoodSeq> seq_candidates(const GoodSeq& s) {
    std::vector<GoodSeq> out;
    const auto& A = s.algebra();
    if (s.is_zero())
        return out;
    auto entries = s.entries();
    entries.pop_back();
    out.push_back(GoodSeq::unchecked(A, entries));
    for (std::size_t i = 0; i < s.support(); ++i)
        for (const auto& e : element_candidates(s.entries()[i], *A)) {
            auto next = s.entries();
            next[i] = e;
            if (is_good(*A, next))
                out.push_back(GoodSeq::unchecked(A, next));
        }
    return out;
}

std::vector<Value> candidates(const Value& v, const Algebra& a) {
    std::vector<Value> out;
    if (const auto* e = std::get_if<Elt>(&v)) {
        for (auto& x : element_candidates(*e, a))
            out.emplace_back(std::move(x));
    } else if (const auto* s = std::get_if<GoodSeq>(&v)) {
        for (auto& x : seq_candidates(*s))
            out.emplace_back(std::move(x));
    } else {
        const auto& g = std::get<GroupElt>(v);
        for (auto& x : seq_candidates(g.pos()))
            out.emplace_back(GroupElt(std::move(x), g.neg()));
        for (auto& x : seq_candidates(g.neg()))
            out.emplace_back(GroupElt(g.pos(), std::move(x)));
    }
    return out;
}

constexpr std::size_t kMaxShrinkChecks = 4000;

} // namespace

Case shrink(Case c, const AlgebraPtr& a, const Check& check, std::size_t& steps) {
    bool improved = true;
    std::size_t checks = 0;
    while (improved && checks < kMaxShrinkChecks) {
        improved = false;
        for (std::size_t i = 0; i < c.size() && !improved; ++i) {
            for (auto& cand : candidates(c[i], *a)) {
                if (++checks > kMaxShrinkChecks)
                    break;
                Case next = c;
                next[i] = std::move(cand);
                Outcome o = Outcome::Holds;
                try {
                    o = check(next);
                } catch (const std::exception&) {
                    o = Outcome::Holds;
                }
                if (o == Outcome::Fails) {
                    c = std::move(next);
                    ++steps;
                    improved = true;
                    break;
                }
            }
        }
    }
    return c;
}

PropertyRecord run_property(const std::string& id, const std::string& statement, const AlgebraPtr& a, Source source,
                            const Check& check) {
    PropertyRecord r;
    r.id = id;
    r.statement = statement;
    r.algebra = a->name();
    r.exhaustive = source.exhaustive;
    std::optional<Case> failing, undecided;
    Case c;
    while (source.next(c)) {
        ++r.cases;
        Outcome o;
        try {
            o = check(c);
        } catch (const std::exception& e) {
            o = Outcome::Fails;
            if (r.note.empty())
                r.note = std::string("threw: ") + e.what();
        }
        if (o == Outcome::Fails) {
            ++r.failures;
            if (!failing)
                failing = c;
        } else if (o == Outcome::Undecided) {
            ++r.undecided;
            if (!undecided)
                undecided = c;
        }
    }
    if (failing) {
        Case w = shrink(*failing, a, check, r.shrink_steps);
        for (const auto& v : w)
            r.witness.push_back(render_value(v, *a));
    } else if (undecided) {
        for (const auto& v : *undecided)
            r.witness.push_back(render_value(v, *a));
        if (r.note.empty())
            r.note = "search bound reached";
    }
    return r;
}

Rng stream_for(const GeneratorConfig& config, const std::string& suite, const std::string& algebra,
               const std::string& property) {
    return Rng::stream(config.seed, Rng::salt_of(suite + "|" + algebra + "|" + property));
}

PropertyRecord fact(const std::string& id, const std::string& statement, const std::string& algebra, bool ok,
                    std::size_t cases, std::string note) {
    PropertyRecord r;
    r.id = id;
    r.statement = statement;
    r.algebra = algebra;
    r.exhaustive = true;
    r.cases = cases;
    r.failures = ok ? 0 : 1;
    r.note = std::move(note);
    return r;
}

} // namespace blchang::detail
