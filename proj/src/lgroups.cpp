#include "blchang/lgroups.hpp"

#include <map>
#include <optional>

#include "blchang/errors.hpp"
#include "blchang/structure.hpp"
#include "text_util.hpp"

namespace blchang {

// ---------------------------------------------------------------------------
// LGroup

namespace {

bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

Rational power(const Rational& x, std::int64_t n) {
    Rational base = n < 0 ? Rational(1) / x : x;
    std::uint64_t k = static_cast<std::uint64_t>(n < 0 ? -n : n);
    Rational out = 1;
    while (k) {
        if (k & 1)
            out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

Elt tuple_map(const std::vector<LGroupPtr>& fs, const std::function<Elt(const LGroup&, std::size_t)>& f) {
    std::vector<Elt> parts;
    parts.reserve(fs.size());
    for (std::size_t k = 0; k < fs.size(); ++k)
        parts.push_back(f(*fs[k], k));
    return Elt::tuple(std::move(parts));
}

} // namespace

LGroup::LGroup(Kind kind, std::vector<LGroupPtr> factors, Rational scalar_unit)
    : kind_(kind), factors_(std::move(factors)) {
    switch (kind_) {
    case Kind::Integers:
        zero_ = Elt::rational(0);
        unit_ = Elt::rational(std::move(scalar_unit));
        break;
    case Kind::PositiveRationals:
        zero_ = Elt::rational(1);
        unit_ = Elt::rational(std::move(scalar_unit));
        break;
    case Kind::Product:
        zero_ = tuple_map(factors_, [](const LGroup& g, std::size_t) { return g.zero(); });
        unit_ = tuple_map(factors_, [](const LGroup& g, std::size_t) { return g.unit(); });
        break;
    case Kind::Lex:
        zero_ = tuple_map(factors_, [](const LGroup& g, std::size_t) { return g.zero(); });
        unit_ = Elt::tuple({factors_[0]->unit(), factors_[1]->zero()});
        break;
    }
}

LGroupPtr LGroup::integers(std::int64_t unit) {
    if (unit <= 0)
        throw ConstructionError("unit of Z must be positive, got " + std::to_string(unit));
    return LGroupPtr(new LGroup(Kind::Integers, {}, Rational(static_cast<long>(unit))));
}

LGroupPtr LGroup::positive_rationals(Rational unit) {
    if (unit <= 1)
        throw ConstructionError("unit of Qpos must exceed 1, got " + to_string(unit));
    return LGroupPtr(new LGroup(Kind::PositiveRationals, {}, std::move(unit)));
}

LGroupPtr LGroup::product(std::vector<LGroupPtr> factors) {
    if (factors.empty())
        throw ConstructionError("prod needs at least one factor");
    return LGroupPtr(new LGroup(Kind::Product, std::move(factors), 0));
}

LGroupPtr LGroup::lex(LGroupPtr first, LGroupPtr second) {
    if (first->kind() == Kind::Lex || second->kind() == Kind::Lex)
        throw ConstructionError("lex products nest at most one level");
    if (!first->is_total())
        throw ConstructionError("first factor of lex must be totally ordered, got " + first->name());
    return LGroupPtr(new LGroup(Kind::Lex, {std::move(first), std::move(second)}, 0));
}

std::string LGroup::name() const {
    switch (kind_) {
    case Kind::Integers:
        return "Z(u=" + to_string(unit_.value()) + ")";
    case Kind::PositiveRationals:
        return unit_.value() == 2 ? "Qpos" : "Qpos(u=" + to_string(unit_.value()) + ")";
    case Kind::Product:
    case Kind::Lex: {
        std::string s = kind_ == Kind::Product ? "prod(" : "lex(";
        for (std::size_t k = 0; k < factors_.size(); ++k)
            s += (k ? ", " : "") + factors_[k]->name();
        return s + ")";
    }
    }
    return "?";
}

bool LGroup::is_total() const {
    switch (kind_) {
    case Kind::Integers:
    case Kind::PositiveRationals:
        return true;
    case Kind::Product:
        return factors_.size() == 1 && factors_[0]->is_total();
    case Kind::Lex:
        return factors_[1]->is_total();
    }
    return false;
}

bool LGroup::contains(const Elt& v) const {
    switch (kind_) {
    case Kind::Integers:
        return v.is(Elt::Kind::Rational) && is_integer(v.value());
    case Kind::PositiveRationals:
        return v.is(Elt::Kind::Rational) && v.value() > 0;
    case Kind::Product:
    case Kind::Lex:
        if (!v.is(Elt::Kind::Tuple) || v.parts().size() != factors_.size())
            return false;
        for (std::size_t k = 0; k < factors_.size(); ++k)
            if (!factors_[k]->contains(v.parts()[k]))
                return false;
        return true;
    }
    return false;
}

Elt LGroup::add(const Elt& a, const Elt& b) const {
    switch (kind_) {
    case Kind::Integers:
        return Elt::rational(a.value() + b.value());
    case Kind::PositiveRationals:
        return Elt::rational(a.value() * b.value());
    default:
        return tuple_map(factors_, [&](const LGroup& g, std::size_t k) { return g.add(a.parts()[k], b.parts()[k]); });
    }
}

Elt LGroup::neg(const Elt& a) const {
    switch (kind_) {
    case Kind::Integers:
        return Elt::rational(-a.value());
    case Kind::PositiveRationals:
        return Elt::rational(1 / a.value());
    default:
        return tuple_map(factors_, [&](const LGroup& g, std::size_t k) { return g.neg(a.parts()[k]); });
    }
}

Elt LGroup::times(std::int64_t n, const Elt& a) const {
    switch (kind_) {
    case Kind::Integers:
        return Elt::rational(a.value() * Rational(static_cast<long>(n)));
    case Kind::PositiveRationals:
        return Elt::rational(power(a.value(), n));
    default:
        return tuple_map(factors_, [&](const LGroup& g, std::size_t k) { return g.times(n, a.parts()[k]); });
    }
}

bool LGroup::leq(const Elt& a, const Elt& b) const {
    switch (kind_) {
    case Kind::Integers:
    case Kind::PositiveRationals:
        return a.value() <= b.value();
    case Kind::Product:
        for (std::size_t k = 0; k < factors_.size(); ++k)
            if (!factors_[k]->leq(a.parts()[k], b.parts()[k]))
                return false;
        return true;
    case Kind::Lex:
        if (a.parts()[0] != b.parts()[0])
            return factors_[0]->leq(a.parts()[0], b.parts()[0]);
        return factors_[1]->leq(a.parts()[1], b.parts()[1]);
    }
    return false;
}

Elt LGroup::meet(const Elt& a, const Elt& b) const {
    switch (kind_) {
    case Kind::Integers:
    case Kind::PositiveRationals:
        return a.value() <= b.value() ? a : b;
    case Kind::Product:
        return tuple_map(factors_, [&](const LGroup& g, std::size_t k) { return g.meet(a.parts()[k], b.parts()[k]); });
    case Kind::Lex:
        if (a.parts()[0] != b.parts()[0])
            return factors_[0]->leq(a.parts()[0], b.parts()[0]) ? a : b;
        return Elt::tuple({a.parts()[0], factors_[1]->meet(a.parts()[1], b.parts()[1])});
    }
    return a;
}

Elt LGroup::join(const Elt& a, const Elt& b) const {
    switch (kind_) {
    case Kind::Integers:
    case Kind::PositiveRationals:
        return a.value() <= b.value() ? b : a;
    case Kind::Product:
        return tuple_map(factors_, [&](const LGroup& g, std::size_t k) { return g.join(a.parts()[k], b.parts()[k]); });
    case Kind::Lex:
        if (a.parts()[0] != b.parts()[0])
            return factors_[0]->leq(a.parts()[0], b.parts()[0]) ? b : a;
        return Elt::tuple({a.parts()[0], factors_[1]->join(a.parts()[1], b.parts()[1])});
    }
    return a;
}

std::string LGroup::render(const Elt& v) const {
    if (!contains(v))
        throw DomainError("value does not belong to " + name());
    if (kind_ == Kind::Integers || kind_ == Kind::PositiveRationals)
        return to_string(v.value());
    std::string s = "(";
    for (std::size_t k = 0; k < factors_.size(); ++k)
        s += (k ? "," : "") + factors_[k]->render(v.parts()[k]);
    return s + ")";
}

Elt LGroup::parse_value(std::string_view text) const {
    const auto t = detail::trim(text);
    Elt v;
    if (kind_ == Kind::Integers || kind_ == Kind::PositiveRationals) {
        v = Elt::rational(parse_rational(t));
    } else {
        if (t.size() < 2 || t.front() != '(' || t.back() != ')')
            throw ParseError("expected a tuple for " + name() + ": '" + std::string(t) + "'");
        const auto items = detail::split_top_level(t.substr(1, t.size() - 2), ',');
        if (items.size() != factors_.size())
            throw ParseError("expected " + std::to_string(factors_.size()) + " coordinates for " + name());
        std::vector<Elt> parts;
        for (std::size_t k = 0; k < items.size(); ++k)
            parts.push_back(factors_[k]->parse_value(items[k]));
        v = Elt::tuple(std::move(parts));
    }
    if (!contains(v))
        throw ParseError("'" + std::string(t) + "' is not a value of " + name());
    return v;
}

Elt LGroup::sample(Rng& rng, std::int64_t spread) const {
    switch (kind_) {
    case Kind::Integers: {
        const auto u = unit_.value().get_num().get_si();
        return Elt::rational(Rational(static_cast<long>(rng.between(-spread * u, spread * u))));
    }
    case Kind::PositiveRationals:
        return Elt::rational(Rational(static_cast<long>(1 + rng.below(12)), static_cast<unsigned long>(1 + rng.below(12))));
    default:
        return tuple_map(factors_, [&](const LGroup& g, std::size_t) { return g.sample(rng, spread); });
    }
}

Elt LGroup::sample_sign(Rng& rng, int sign) const {
    const Elt p = positive_part(sample(rng));
    return sign > 0 ? p : neg(p);
}

Elt LGroup::sample_interval(Rng& rng) const {
    switch (kind_) {
    case Kind::Integers:
        return Elt::rational(
            Rational(static_cast<long>(rng.between(0, unit_.value().get_num().get_si()))));
    case Kind::PositiveRationals:
        return Elt::rational(1 + (unit_.value() - 1) * rng.unit_rational(16));
    case Kind::Product:
        return tuple_map(factors_, [&](const LGroup& g, std::size_t) { return g.sample_interval(rng); });
    case Kind::Lex: {
        const LGroup& f = *factors_[0];
        const LGroup& s = *factors_[1];
        const auto pick = rng.below(3);
        const Elt m = pick == 0 ? f.zero() : pick == 1 ? f.unit() : f.sample_interval(rng);
        // Above the bottom layer the second coordinate is free; on the
        // layers of 0 and u it must lie on the right side of 0.
        Elt x = m == f.zero() ? s.sample_sign(rng, 1) : m == f.unit() ? s.sample_sign(rng, -1) : s.sample(rng);
        return Elt::tuple({m, x});
    }
    }
    return zero_;
}

bool LGroup::interval_finite() const {
    switch (kind_) {
    case Kind::Integers:
        return true;
    case Kind::Product:
        for (const auto& f : factors_)
            if (!f->interval_finite())
                return false;
        return true;
    default:
        return false;
    }
}

std::vector<Elt> LGroup::interval_elements() const {
    if (!interval_finite())
        throw UnsupportedShape("interval [0,u] of " + name() + " is infinite");
    if (kind_ == Kind::Integers) {
        std::vector<Elt> out;
        for (long i = 0; i <= unit_.value().get_num().get_si(); ++i)
            out.push_back(Elt::rational(Rational(i)));
        return out;
    }
    std::vector<std::vector<Elt>> acc{{}};
    for (const auto& f : factors_) {
        std::vector<std::vector<Elt>> next;
        const auto values = f->interval_elements();
        for (const auto& prefix : acc)
            for (const auto& v : values) {
                auto t = prefix;
                t.push_back(v);
                next.push_back(std::move(t));
            }
        acc = std::move(next);
    }
    std::vector<Elt> out;
    for (auto& t : acc)
        out.push_back(Elt::tuple(std::move(t)));
    return out;
}

namespace {

// "head(args)" -> args, or nullopt if `t` does not have that shape.
std::optional<std::string_view> call_args(std::string_view t, std::string_view head) {
    if (t.size() < head.size() + 2 || t.substr(0, head.size()) != head || t[head.size()] != '(' || t.back() != ')')
        return std::nullopt;
    return t.substr(head.size() + 1, t.size() - head.size() - 2);
}

Rational unit_arg(std::string_view args) {
    const auto a = detail::trim(args);
    if (a.substr(0, 2) != "u=")
        throw ParseError("expected u=<value>, got '" + std::string(a) + "'");
    return parse_rational(a.substr(2));
}

} // namespace

LGroupPtr parse_lgroup(std::string_view text) {
    const auto t = detail::trim(text);
    if (!detail::balanced(t))
        throw ParseError("unbalanced parentheses in group descriptor '" + std::string(t) + "'");
    try {
        if (t == "Z")
            return LGroup::integers(1);
        if (t == "Qpos")
            return LGroup::positive_rationals();
        if (auto a = call_args(t, "Z")) {
            const Rational u = unit_arg(*a);
            if (!is_integer(u))
                throw ParseError("unit of Z must be an integer");
            return LGroup::integers(u.get_num().get_si());
        }
        if (auto a = call_args(t, "Qpos"))
            return LGroup::positive_rationals(unit_arg(*a));
        if (auto a = call_args(t, "prod")) {
            std::vector<LGroupPtr> fs;
            for (const auto& item : detail::split_top_level(*a, ','))
                fs.push_back(parse_lgroup(item));
            return LGroup::product(std::move(fs));
        }
        if (auto a = call_args(t, "lex")) {
            const auto items = detail::split_top_level(*a, ',');
            if (items.size() != 2)
                throw ParseError("lex takes exactly two factors");
            return LGroup::lex(parse_lgroup(items[0]), parse_lgroup(items[1]));
        }
    } catch (const ConstructionError& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown group descriptor '" + std::string(t) + "'");
}

// ---------------------------------------------------------------------------
// Gamma

GammaAlgebra::GammaAlgebra(LGroupPtr group) : Algebra(group->unit(), group->zero()), group_(std::move(group)) {
    if (group_->interval_finite())
        set_elements(group_->interval_elements());
}

bool GammaAlgebra::contains(const Elt& x) const {
    return group_->contains(x) && group_->leq(group_->zero(), x) && group_->leq(x, group_->unit());
}

Elt GammaAlgebra::parse_element(std::string_view text) const {
    Elt v = group_->parse_value(text);
    if (!contains(v))
        throw ParseError("'" + std::string(detail::trim(text)) + "' is outside [0,u] of " + group_->name());
    return v;
}

Elt GammaAlgebra::do_otimes(const Elt& x, const Elt& y) const {
    const auto& G = *group_;
    const Elt& u = G.unit();
    return G.sub(u, G.meet(G.sub(G.sub(G.times(2, u), x), y), u));
}

Elt GammaAlgebra::do_imp(const Elt& x, const Elt& y) const {
    const auto& G = *group_;
    const Elt& u = G.unit();
    return G.meet(G.add(G.sub(u, x), y), u);
}

GoodSeq good_seq_of_positive(const GammaPtr& interval, const Elt& a) {
    const auto& G = *interval->group();
    if (!G.contains(a) || !G.leq(G.zero(), a))
        throw DomainError("g(a) needs a positive element, got " + (G.contains(a) ? G.render(a) : "a foreign value"));
    constexpr std::size_t kMaxSteps = 1 << 20;
    std::vector<Elt> entries;
    Elt rest = a;
    while (rest != G.zero()) {
        if (entries.size() == kMaxSteps)
            throw DomainError("g(a) did not terminate; is u a strong unit?");
        entries.push_back(G.meet(rest, G.unit()));
        rest = G.sub(rest, entries.back());
    }
    return GoodSeq::make(interval, std::move(entries));
}

Elt sum_in_group(const GammaAlgebra& interval, const GoodSeq& s) {
    const auto& G = *interval.group();
    Elt acc = G.zero();
    for (const auto& x : s.entries())
        acc = G.add(acc, x);
    return acc;
}

namespace {

GammaPtr interval_of(const ChangGroup& G) {
    auto L = std::dynamic_pointer_cast<const GammaAlgebra>(G.algebra());
    if (!L)
        throw DomainError(G.algebra()->name() + " is not an interval algebra");
    return L;
}

} // namespace

GroupElt psi(const ChangGroup& G, const Elt& a) {
    const auto L = interval_of(G);
    const auto& H = *L->group();
    if (!H.contains(a))
        throw DomainError("value does not belong to " + H.name());
    return G.make(good_seq_of_positive(L, H.positive_part(a)), good_seq_of_positive(L, H.negative_part(a)));
}

Elt psi_inverse(const ChangGroup& G, const GroupElt& g) {
    const auto L = interval_of(G);
    return L->group()->sub(sum_in_group(*L, g.pos()), sum_in_group(*L, g.neg()));
}

GroupElt eta(const ChangGroup& G, const Elt& a) {
    const auto& A = G.algebra();
    return G.of(GoodSeq::make(A, {A->double_neg(a)}));
}

// ---------------------------------------------------------------------------
// Morphisms

MorphismCheck check_bl_morphism(const Algebra& dom, const Algebra& cod, const EltMap& f,
                                const ValidationConfig& config) {
    MorphismCheck r;
    r.seed = config.seed;
    auto fail = [&](std::string law, std::vector<Elt> w) {
        r.ok = false;
        r.law = std::move(law);
        r.witness = std::move(w);
    };
    auto image = [&](const Elt& x) -> std::optional<Elt> {
        Elt y = f(x);
        if (!cod.contains(y))
            return std::nullopt;
        return y;
    };
    auto check_point = [&](const Elt& x) {
        if (!image(x)) {
            fail("f(x) in codomain", {x});
            return false;
        }
        return true;
    };
    if (!check_point(dom.top()) || f(dom.top()) != cod.top()) {
        if (r.ok)
            fail("f(1) = 1", {dom.top()});
        return r;
    }
    if (dom.bounded()) {
        if (!cod.bounded() || !check_point(dom.bottom()) || f(dom.bottom()) != cod.bottom()) {
            if (r.ok)
                fail("f(0) = 0", {dom.bottom()});
            return r;
        }
    }
    auto check_pair = [&](const Elt& x, const Elt& y) {
        ++r.cases;
        auto fx = image(x), fy = image(y);
        if (!fx || !fy) {
            fail("f(x) in codomain", {fx ? y : x});
            return false;
        }
        if (f(dom.otimes(x, y)) != cod.otimes(*fx, *fy)) {
            fail("f(x*y) = f(x)*f(y)", {x, y});
            return false;
        }
        if (f(dom.imp(x, y)) != cod.imp(*fx, *fy)) {
            fail("f(x->y) = f(x)->f(y)", {x, y});
            return false;
        }
        return true;
    };
    if (dom.is_finite()) {
        for (const auto& x : dom.elements())
            for (const auto& y : dom.elements())
                if (!check_pair(x, y))
                    return r;
        return r;
    }
    r.exhaustive = false;
    Rng rng = Rng::stream(config.seed, Rng::salt_of("morphism:" + dom.name() + "->" + cod.name()));
    for (std::size_t i = 0; i < config.budget; ++i) {
        Elt x = dom.sample(rng), y = dom.sample(rng);
        if (!check_pair(x, y))
            return r;
    }
    return r;
}

MorphismCheck check_lu_morphism(const LGroup& dom, const LGroup& cod, const EltMap& f, std::size_t samples,
                                std::uint64_t seed) {
    MorphismCheck r;
    r.exhaustive = false;
    r.seed = seed;
    auto fail = [&](std::string law, std::vector<Elt> w) {
        r.ok = false;
        r.law = std::move(law);
        r.witness = std::move(w);
        return r;
    };
    if (f(dom.unit()) != cod.unit())
        return fail("f(u) = u'", {dom.unit()});
    Rng rng = Rng::stream(seed, Rng::salt_of("lu-morphism:" + dom.name() + "->" + cod.name()));
    for (std::size_t i = 0; i < samples; ++i) {
        ++r.cases;
        const Elt a = dom.sample(rng), b = dom.sample(rng);
        const Elt fa = f(a), fb = f(b);
        if (!cod.contains(fa) || !cod.contains(fb))
            return fail("f(a) in codomain", {a, b});
        if (f(dom.add(a, b)) != cod.add(fa, fb))
            return fail("f(a+b) = f(a)+f(b)", {a, b});
        if (f(dom.meet(a, b)) != cod.meet(fa, fb))
            return fail("f(a^b) = f(a)^f(b)", {a, b});
        if (f(dom.join(a, b)) != cod.join(fa, fb))
            return fail("f(avb) = f(a)vf(b)", {a, b});
    }
    return r;
}

namespace {

std::string describe_failure(const Algebra& dom, const MorphismCheck& c) {
    std::string s = "not a BL-morphism: " + c.law + " fails at";
    for (const auto& w : c.witness)
        s += " " + dom.render(w);
    return s;
}

} // namespace

BLMorphism::BLMorphism(AlgebraPtr dom, AlgebraPtr cod, EltMap f, std::string name, MorphismCheck check)
    : dom_(std::move(dom)), cod_(std::move(cod)), f_(std::move(f)), name_(std::move(name)), check_(std::move(check)) {}

BLMorphism BLMorphism::from_table(AlgebraPtr dom, AlgebraPtr cod, std::vector<Elt> images) {
    if (!dom->is_finite())
        throw UnsupportedShape("table morphisms need a finite domain");
    const auto& xs = dom->elements();
    if (images.size() != xs.size())
        throw ConstructionError("morphism table has " + std::to_string(images.size()) + " entries, domain has " +
                                std::to_string(xs.size()));
    auto table = std::make_shared<std::map<Elt, Elt>>();
    for (std::size_t i = 0; i < xs.size(); ++i)
        (*table)[xs[i]] = images[i];
    EltMap f = [table](const Elt& x) {
        auto it = table->find(x);
        if (it == table->end())
            throw DomainError("element outside the morphism's domain");
        return it->second;
    };
    auto check = check_bl_morphism(*dom, *cod, f);
    if (!check.ok)
        throw ConstructionError(describe_failure(*dom, check));
    return BLMorphism(std::move(dom), std::move(cod), std::move(f), "table", std::move(check));
}

BLMorphism BLMorphism::closed_form(AlgebraPtr dom, AlgebraPtr cod, EltMap f, std::string name,
                                   const ValidationConfig& config) {
    auto check = check_bl_morphism(*dom, *cod, f, config);
    if (!check.ok)
        throw ConstructionError(describe_failure(*dom, check));
    return BLMorphism(std::move(dom), std::move(cod), std::move(f), std::move(name), std::move(check));
}

BLMorphism BLMorphism::identity(AlgebraPtr a) {
    auto cod = a;
    return closed_form(std::move(a), std::move(cod), [](const Elt& x) { return x; }, "id");
}

std::vector<Elt> BLMorphism::table() const {
    std::vector<Elt> out;
    for (const auto& x : dom_->elements())
        out.push_back(f_(x));
    return out;
}

std::string render_table(const BLMorphism& f) {
    std::string s;
    const auto& xs = f.domain()->elements();
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? ", " : "") + f.domain()->render(xs[i]) + "->" + f.codomain()->render(f(xs[i]));
    return s;
}

GroupElt xi_map(const BLMorphism& f, const ChangGroup& GY, const GroupElt& g) {
    if (g.algebra() != f.domain())
        throw DomainError("group element is not over the morphism's domain " + f.domain()->name());
    if (GY.algebra() != f.codomain())
        throw DomainError("target group is not over the morphism's codomain " + f.codomain()->name());
    auto apply = [&](const Elt& x) { return f(x); };
    return GY.make(gs_map(g.pos(), f.codomain(), apply), gs_map(g.neg(), f.codomain(), apply));
}

std::vector<BLMorphism> enumerate_homs(const AlgebraPtr& A, const AlgebraPtr& B, std::size_t cap) {
    if (!A->is_finite() || !B->is_finite())
        throw UnsupportedShape("hom enumeration needs finite algebras");
    if (A->size() > cap || B->size() > cap)
        throw UnsupportedShape("hom enumeration refused: carriers of size " + std::to_string(A->size()) + " and " +
                               std::to_string(B->size()) + " exceed the cap " + std::to_string(cap));
    const auto ta = tabulate(*A);
    const auto tb = tabulate(*B);
    const auto& at = *ta.table;
    const auto& bt = *tb.table;
    const std::size_t n = ta.source.size();
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> img(n, kUnset);
    img[at.bottom_index()] = bt.bottom_index();
    img[at.top_index()] = bt.top_index();

    auto consistent = [&](std::size_t i, std::size_t j) {
        if (img[i] == kUnset || img[j] == kUnset)
            return true;
        const std::size_t k = at.otimes_table()[i][j], m = at.imp_table()[i][j];
        if (img[k] != kUnset && img[k] != bt.otimes_table()[img[i]][img[j]])
            return false;
        if (img[m] != kUnset && img[m] != bt.imp_table()[img[i]][img[j]])
            return false;
        return true;
    };
    auto all_consistent = [&]() {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!consistent(i, j))
                    return false;
        return true;
    };

    std::vector<std::vector<std::size_t>> found;
    // Table index order follows A->elements(), so filling positions 0..n-1 in
    // order and images in B order yields tables in lexicographic order.
    auto dfs = [&](auto&& self, std::size_t pos) -> void {
        if (pos == n) {
            found.push_back(img);
            return;
        }
        if (img[pos] != kUnset && (pos == at.bottom_index() || pos == at.top_index())) {
            self(self, pos + 1);
            return;
        }
        for (std::size_t b = 0; b < bt.labels().size(); ++b) {
            img[pos] = b;
            if (all_consistent())
                self(self, pos + 1);
        }
        img[pos] = kUnset;
    };
    if (all_consistent())
        dfs(dfs, 0);

    std::vector<BLMorphism> out;
    for (const auto& t : found) {
        std::vector<Elt> images;
        for (std::size_t i = 0; i < n; ++i)
            images.push_back(tb.source[t[i]]);
        out.push_back(BLMorphism::from_table(A, B, std::move(images)));
    }
    return out;
}

CollapseCheck check_two_valued_collapse(const BLMorphism& f) {
    CollapseCheck c;
    const auto& A = *f.domain();
    const auto& L = f.codomain();
    try {
        if (!is_mv_algebra(A) || mv_center(L)->size() != 2)
            return c;
    } catch (const UnsupportedShape&) {
        return c;
    }
    c.applies = true;
    auto check = [&](const Elt& a) {
        const Elt na = A.neg(a);
        if ((A.leq(a, na) && f(a) != L->bottom()) || (A.leq(na, a) && f(a) != L->top())) {
            c.holds = false;
            c.witness = {a};
            return false;
        }
        return true;
    };
    if (A.is_finite()) {
        for (const auto& a : A.elements())
            if (!check(a))
                break;
    } else {
        Rng rng = Rng::stream(1, Rng::salt_of("collapse:" + A.name()));
        for (int i = 0; i < 256; ++i)
            if (!check(A.sample(rng)))
                break;
    }
    return c;
}

} // namespace blchang
