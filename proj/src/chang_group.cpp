#include "blchang/chang_group.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "blchang/errors.hpp"

namespace blchang {

GroupElt::GroupElt(GoodSeq pos, GoodSeq neg) : pos_(std::move(pos)), neg_(std::move(neg)) {
    if (pos_.algebra() != neg_.algebra())
        throw DomainError("group element sides over different algebras");
}

std::string render(const GroupElt& g) {
    return "[" + render(g.pos()) + "," + render(g.neg()) + "]";
}

const char* to_string(EqDecision d) {
    switch (d) {
    case EqDecision::Equal:
        return "Equal";
    case EqDecision::NotEqual:
        return "NotEqual";
    case EqDecision::Unknown:
        return "Unknown";
    }
    return "?";
}

const char* to_string(OrderDecision d) {
    switch (d) {
    case OrderDecision::Leq:
        return "Leq";
    case OrderDecision::NotLeq:
        return "NotLeq";
    case OrderDecision::Unknown:
        return "Unknown";
    }
    return "?";
}

std::string to_string(const Strategy& s) {
    switch (s.kind) {
    case Strategy::Kind::Cancellative:
        return "cancellative";
    case Strategy::Kind::ChainSearch:
        return "chain";
    case Strategy::Kind::BoundedGeneral:
        return "bounded(" + std::to_string(s.bound) + ")";
    }
    return "?";
}

namespace {

// Grows the closure and calls `visit` on every value as it appears; stops
// early when `visit` returns true. Returns whether the closure is complete.
bool grow_closure(const Algebra& a, const std::vector<Elt>& seeds, std::size_t cap, std::vector<Elt>& values,
                  const std::function<bool(const Elt&)>& visit, bool& stopped) {
    std::set<Elt> seen;
    stopped = false;
    auto push = [&](const Elt& v) {
        if (!seen.insert(v).second)
            return false;
        values.push_back(v);
        if (visit(v)) {
            stopped = true;
            return true;
        }
        return false;
    };
    if (push(a.bottom()) || push(a.top()))
        return false;
    for (const auto& s : seeds)
        if (push(s))
            return false;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const Elt x = values[i], y = values[j];
            for (const Elt& v : {a.otimes(x, y), a.add(x, y), a.meet(x, y)}) {
                if (values.size() >= cap && !seen.count(v))
                    return false;
                if (push(v))
                    return false;
            }
        }
    }
    return true;
}

std::vector<Elt> entries_of(const GoodSeq& x, const GoodSeq& y) {
    std::vector<Elt> out = x.entries();
    out.insert(out.end(), y.entries().begin(), y.entries().end());
    return out;
}

bool is_godel_chain(const Algebra& a) {
    if (a.shape() == Shape::StandardChain)
        return static_cast<const StandardChain&>(a).kind() == ChainKind::Godel && a.bounded();
    if (!a.is_finite() || !a.is_chain() || !a.bounded())
        return false;
    for (const auto& x : a.elements())
        if (a.otimes(x, x) != x)
            return false;
    return true;
}

bool is_product_chain(const Algebra& a) {
    return a.shape() == Shape::StandardChain && static_cast<const StandardChain&>(a).kind() == ChainKind::Product &&
           a.bounded();
}

} // namespace

Closure value_closure(const Algebra& a, const std::vector<Elt>& seeds, std::size_t cap) {
    Closure c;
    bool stopped = false;
    c.complete = grow_closure(
        a, seeds, cap, c.values, [](const Elt&) { return false; }, stopped);
    return c;
}

// ---------------------------------------------------------------------------
// ChangGroup

ChangGroup::ChangGroup(AlgebraPtr algebra) : ChangGroup(std::move(algebra), true) {}

ChangGroup::ChangGroup(AlgebraPtr algebra, bool with_center)
    : algebra_(std::move(algebra)), cancellative_(is_cancellative_type(*algebra_)) {
    if (!algebra_->bounded())
        throw UnsupportedShape("Chang group needs a bounded algebra; " + algebra_->name() + " has no bottom");
    if (!algebra_->is_chain() && algebra_->shape() == Shape::DirectProduct && is_product_of_chains(*algebra_)) {
        for (const auto& f : static_cast<const DirectProduct&>(*algebra_).factors())
            factor_groups_.push_back(std::unique_ptr<ChangGroup>(new ChangGroup(f, false)));
    }
    if (with_center) {
        try {
            mv_algebra_ = mv_center(algebra_);
            mv_group_ = std::unique_ptr<ChangGroup>(new ChangGroup(mv_algebra_, false));
        } catch (const UnsupportedShape&) {
            mv_algebra_.reset();
        }
    }
}

bool ChangGroup::chain_search_applies() const {
    return algebra_->is_chain() || !factor_groups_.empty();
}

std::size_t ChangGroup::default_bound() const {
    return algebra_->is_finite() ? algebra_->size() + 2 : 3;
}

void ChangGroup::require(const GroupElt& g) const {
    if (g.algebra() != algebra_)
        throw DomainError("group element over " + g.algebra()->name() + " used in the Chang group of " +
                          algebra_->name());
}

GroupElt ChangGroup::make(GoodSeq a, GoodSeq b) const {
    GroupElt g(std::move(a), std::move(b));
    require(g);
    return g;
}

GroupElt ChangGroup::of(GoodSeq a) const {
    return make(std::move(a), GoodSeq::zero(algebra_));
}

GroupElt ChangGroup::zero() const {
    return make(GoodSeq::zero(algebra_), GoodSeq::zero(algebra_));
}

GroupElt ChangGroup::unit() const {
    return make(GoodSeq::units(algebra_, 1), GoodSeq::zero(algebra_));
}

GroupElt ChangGroup::add(const GroupElt& g, const GroupElt& h) const {
    require(g);
    require(h);
    return GroupElt(gs_add(g.pos(), h.pos()), gs_add(g.neg(), h.neg()));
}

GroupElt ChangGroup::neg(const GroupElt& g) const {
    require(g);
    return GroupElt(g.neg(), g.pos());
}

GroupElt ChangGroup::sub(const GroupElt& g, const GroupElt& h) const {
    return add(g, neg(h));
}

GroupElt ChangGroup::times(std::int64_t n, const GroupElt& g) const {
    require(g);
    const GroupElt base = n < 0 ? neg(g) : g;
    const auto k = static_cast<std::size_t>(n < 0 ? -n : n);
    return GroupElt(gs_times(k, base.pos()), gs_times(k, base.neg()));
}

GroupElt ChangGroup::join(const GroupElt& g, const GroupElt& h) const {
    require(g);
    require(h);
    return GroupElt(gs_join(gs_add(g.pos(), h.neg()), gs_add(g.neg(), h.pos())), gs_add(g.neg(), h.neg()));
}

GroupElt ChangGroup::meet(const GroupElt& g, const GroupElt& h) const {
    require(g);
    require(h);
    return GroupElt(gs_meet(gs_add(g.pos(), h.neg()), gs_add(g.neg(), h.pos())), gs_add(g.neg(), h.neg()));
}

void ChangGroup::check_strategy(const Strategy& s) const {
    if (s.kind == Strategy::Kind::Cancellative && !cancellative_licensed())
        throw StrategyMisuse("cancellative strategy refused: " + algebra_->name() +
                             " is not known to be of cancellative type (" + cancellative_.reason + ")");
    if (s.kind == Strategy::Kind::ChainSearch && !chain_search_applies())
        throw StrategyMisuse("chain search needs a chain or a product of chains; " + algebra_->name() +
                             " is neither");
}

EqDecision ChangGroup::eq(const GroupElt& g, const GroupElt& h, const Strategy& s) const {
    require(g);
    require(h);
    check_strategy(s);
    const auto r = decide(gs_add(g.pos(), h.neg()), gs_add(g.neg(), h.pos()), Relation::Equal, s).first;
    return r == OrderDecision::Leq ? EqDecision::Equal
                                   : r == OrderDecision::NotLeq ? EqDecision::NotEqual : EqDecision::Unknown;
}

OrderDecision ChangGroup::leq(const GroupElt& g, const GroupElt& h, const Strategy& s) const {
    require(g);
    require(h);
    check_strategy(s);
    return decide(gs_add(g.pos(), h.neg()), gs_add(g.neg(), h.pos()), Relation::Leq, s).first;
}

std::optional<GoodSeq> ChangGroup::eq_witness(const GroupElt& g, const GroupElt& h, const Strategy& s) const {
    require(g);
    require(h);
    check_strategy(s);
    return decide(gs_add(g.pos(), h.neg()), gs_add(g.neg(), h.pos()), Relation::Equal, s).second;
}

std::pair<OrderDecision, std::optional<GoodSeq>> ChangGroup::decide(const GoodSeq& x, const GoodSeq& y, Relation rel,
                                                                    const Strategy& s) const {
    const bool holds0 = rel == Relation::Equal ? x == y : gs_leq(x, y);
    if (holds0)
        return {OrderDecision::Leq, GoodSeq::zero(algebra_)};
    if (s.kind == Strategy::Kind::Cancellative)
        return {OrderDecision::NotLeq, std::nullopt};
    // On an infinite chain of cancellative type k cancels (using distributivity
    // of + over v for <=), so k = (0) is the only witness worth trying.
    if (s.kind == Strategy::Kind::ChainSearch && !algebra_->is_finite() && algebra_->is_chain() &&
        cancellative_licensed())
        return {OrderDecision::NotLeq, std::nullopt};

    const std::size_t bound = s.kind == Strategy::Kind::BoundedGeneral ? (s.bound ? s.bound : default_bound()) : 0;
    CacheKey key{static_cast<int>(s.kind), bound, static_cast<int>(rel), x, y};
    {
        std::shared_lock lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end())
            return it->second;
    }
    std::pair<OrderDecision, std::optional<GoodSeq>> result;
    if (s.kind == Strategy::Kind::BoundedGeneral) {
        result = bounded_search(x, y, rel, bound);
    } else if (algebra_->is_chain()) {
        result = chain_search(x, y, rel);
    } else {
        // Factorwise: a witness in each factor combines into one for the
        // product, and a product witness projects to each factor.
        std::vector<GoodSeq> parts;
        result.first = OrderDecision::Leq;
        for (std::size_t i = 0; i < factor_groups_.size(); ++i) {
            auto r = factor_groups_[i]->decide(project_goodseq(x, i), project_goodseq(y, i), rel, s);
            if (r.first == OrderDecision::NotLeq) {
                result = {OrderDecision::NotLeq, std::nullopt};
                break;
            }
            if (r.first == OrderDecision::Unknown)
                result.first = OrderDecision::Unknown;
            else
                parts.push_back(*r.second);
        }
        if (result.first == OrderDecision::Leq) {
            std::size_t len = 0;
            for (const auto& p : parts)
                len = std::max(len, p.support());
            std::vector<Elt> k;
            for (std::size_t j = 0; j < len; ++j) {
                std::vector<Elt> t;
                for (const auto& p : parts)
                    t.push_back(p.at(j));
                k.push_back(Elt::tuple(std::move(t)));
            }
            result.second = GoodSeq::make(algebra_, std::move(k));
        }
    }
    std::unique_lock lock(mutex_);
    return cache_.emplace(std::move(key), std::move(result)).first->second;
}

std::pair<OrderDecision, std::optional<GoodSeq>> ChangGroup::chain_search(const GoodSeq& x, const GoodSeq& y,
                                                                          Relation rel) const {
    std::optional<GoodSeq> found;
    auto test = [&](const Elt& t) {
        const GoodSeq k = GoodSeq::unchecked(algebra_, {t});
        const GoodSeq kx = gs_add(x, k), ky = gs_add(y, k);
        if (rel == Relation::Equal ? kx == ky : gs_leq(kx, ky)) {
            found = k;
            return true;
        }
        return false;
    };
    if (algebra_->is_finite()) {
        for (const auto& t : algebra_->elements())
            if (test(t))
                return {OrderDecision::Leq, found};
        return {OrderDecision::NotLeq, std::nullopt};
    }
    std::vector<Elt> values;
    bool stopped = false;
    const bool complete = grow_closure(*algebra_, entries_of(x, y), kClosureCap, values, test, stopped);
    if (stopped)
        return {OrderDecision::Leq, found};
    return {complete ? OrderDecision::NotLeq : OrderDecision::Unknown, std::nullopt};
}

std::shared_ptr<const std::vector<GoodSeq>> ChangGroup::bounded_candidates(std::size_t bound, const GoodSeq& x,
                                                                           const GoodSeq& y) const {
    if (algebra_->is_finite()) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = candidates_.find(bound); it != candidates_.end())
                return it->second;
        }
        auto list = std::make_shared<const std::vector<GoodSeq>>(enumerate_good_seqs(algebra_, bound, true));
        std::unique_lock lock(mutex_);
        return candidates_.emplace(bound, std::move(list)).first->second;
    }
    // Infinite carrier: entries come from the closure of the inputs; a
    // truncated pool only loses witnesses, which is sound here.
    const auto pool = value_closure(*algebra_, entries_of(x, y)).values;
    const auto& A = *algebra_;
    auto out = std::make_shared<std::vector<GoodSeq>>();
    out->push_back(GoodSeq::zero(algebra_));
    std::vector<Elt> prefix;
    auto dfs = [&](auto&& self) -> void {
        if (prefix.size() == bound)
            return;
        for (const auto& v : pool) {
            if (A.is_bottom(v))
                continue;
            if (prefix.empty() ? A.is_top(v) : A.add(prefix.back(), v) != prefix.back())
                continue;
            prefix.push_back(v);
            out->push_back(GoodSeq::unchecked(algebra_, prefix));
            self(self);
            prefix.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

std::pair<OrderDecision, std::optional<GoodSeq>> ChangGroup::bounded_search(const GoodSeq& x, const GoodSeq& y,
                                                                            Relation rel, std::size_t bound) const {
    const auto candidates = bounded_candidates(bound, x, y);
    for (const auto& k : *candidates) {
        const GoodSeq kx = gs_add(x, k), ky = gs_add(y, k);
        if (rel == Relation::Equal ? kx == ky : gs_leq(kx, ky))
            return {OrderDecision::Leq, k};
    }
    return {OrderDecision::Unknown, std::nullopt};
}

GroupElt ChangGroup::interval_otimes(const GroupElt& x, const GroupElt& y) const {
    const GroupElt u = unit();
    return sub(u, meet(sub(sub(times(2, u), x), y), u));
}

GroupElt ChangGroup::interval_imp(const GroupElt& x, const GroupElt& y) const {
    const GroupElt u = unit();
    return meet(add(sub(u, x), y), u);
}

std::size_t ChangGroup::unit_bound(const GroupElt& g) const {
    require(g);
    return std::max<std::size_t>({1, g.pos().support(), g.neg().support()});
}

bool ChangGroup::in_S(const GroupElt& g) const {
    require(g);
    return gs_double_neg(g.pos()) == gs_double_neg(g.neg());
}

ThetaParts ChangGroup::theta(const GroupElt& g) const {
    require(g);
    if (!mv_group_)
        throw UnsupportedShape("MV-center of " + algebra_->name() + " is not representable");
    const GoodSeq nna = gs_double_neg(g.pos()), nnb = gs_double_neg(g.neg());
    GroupElt mv(gs_rebase(nna, mv_algebra_), gs_rebase(nnb, mv_algebra_));
    GroupElt embedded(nna, nnb);
    GroupElt s(gs_add(g.pos(), nnb), gs_add(g.neg(), nna));
    return {std::move(mv), std::move(embedded), std::move(s)};
}

GroupElt ChangGroup::embed_mv(const GroupElt& g) const {
    if (!mv_group_ || g.algebra() != mv_group_->algebra())
        throw DomainError("element is not in the Chang group of the MV-center of " + algebra_->name());
    return GroupElt(gs_rebase(g.pos(), algebra_), gs_rebase(g.neg(), algebra_));
}

std::size_t ChangGroup::cache_size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

// ---------------------------------------------------------------------------
// Chains

ChainCanonical chain_canonical(const GroupElt& g) {
    const auto& A = g.algebra();
    if (!A->is_chain())
        throw UnsupportedShape("canonical form needs a chain; " + A->name() + " is not one");
    GoodSeq a = g.pos(), b = g.neg();
    if (a.is_zero()) {
        a = GoodSeq::units(A, 1);
        b = gs_prepend_units(1, b);
    } else if (b.is_zero()) {
        a = gs_prepend_units(1, a);
        b = GoodSeq::units(A, 1);
    }
    ChainCanonical c{a.support() - 1, a.entries().back(), b.support() - 1, b.entries().back(), GroupElt(a, b)};
    return c;
}

std::string render_canonical(const ChainCanonical& c, const Algebra& a) {
    auto side = [&](std::size_t p, const Elt& x) {
        std::string s = "(";
        if (p == 1)
            s += a.render(a.top()) + ",";
        else if (p > 1)
            s += a.render(a.top()) + "^" + std::to_string(p) + ",";
        return s + a.render(x) + ")";
    };
    return "[" + side(c.p, c.a) + "," + side(c.q, c.b) + "]";
}

std::int64_t godel_to_int(const GroupElt& g) {
    if (!is_godel_chain(*g.algebra()))
        throw UnsupportedShape(g.algebra()->name() + " is not a Godel chain");
    const auto c = chain_canonical(g);
    return static_cast<std::int64_t>(c.p) - static_cast<std::int64_t>(c.q);
}

GroupElt godel_from_int(const ChangGroup& G, std::int64_t n) {
    if (!is_godel_chain(*G.algebra()))
        throw UnsupportedShape(G.algebra()->name() + " is not a Godel chain");
    return G.times(n, G.unit());
}

ProductIsoValue product_iso(const GroupElt& g) {
    if (!is_product_chain(*g.algebra()))
        throw UnsupportedShape(g.algebra()->name() + " is not a product chain");
    const auto c = chain_canonical(g);
    Rational r = c.a.value() / c.b.value();
    return {static_cast<std::int64_t>(c.p) - static_cast<std::int64_t>(c.q), r};
}

GroupElt product_iso_inverse(const ChangGroup& G, const ProductIsoValue& v) {
    const auto& A = G.algebra();
    if (!is_product_chain(*A))
        throw UnsupportedShape(A->name() + " is not a product chain");
    if (v.r <= 0)
        throw DomainError("second coordinate must be a positive rational");
    Rational a = 1, b = 1;
    if (v.r <= 1)
        a = v.r;
    else
        b = 1 / v.r;
    const auto p = static_cast<std::size_t>(std::max<std::int64_t>(v.m, 0));
    const auto q = static_cast<std::size_t>(std::max<std::int64_t>(-v.m, 0));
    return G.make(from_chain_normal_form(A, p, Elt::rational(a)), from_chain_normal_form(A, q, Elt::rational(b)));
}

bool lex_leq(const ProductIsoValue& x, const ProductIsoValue& y) {
    return x.m < y.m || (x.m == y.m && x.r <= y.r);
}

std::string render(const ProductIsoValue& v) {
    return "φ=(" + std::to_string(v.m) + ", " + to_string(v.r) + ")";
}

// ---------------------------------------------------------------------------
// HGroup

HGroup::HGroup(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
    if (!is_product_chain(*algebra_))
        throw UnsupportedShape(algebra_->name() + " is not a product chain");
}

HGroup::Pair HGroup::make(const Elt& a, const Elt& b) const {
    algebra_->require(a);
    algebra_->require(b);
    if (algebra_->is_bottom(a) || algebra_->is_bottom(b))
        throw DomainError("pair components must be nonzero");
    return {a, b};
}

HGroup::Pair HGroup::identity() const {
    return {algebra_->top(), algebra_->top()};
}

HGroup::Pair HGroup::add(const Pair& x, const Pair& y) const {
    return make(algebra_->otimes(x.a, y.a), algebra_->otimes(x.b, y.b));
}

HGroup::Pair HGroup::neg(const Pair& x) const {
    return {x.b, x.a};
}

bool HGroup::eq(const Pair& x, const Pair& y) const {
    return algebra_->otimes(x.a, y.b) == algebra_->otimes(x.b, y.a);
}

bool HGroup::leq(const Pair& x, const Pair& y) const {
    return algebra_->leq(algebra_->otimes(x.a, y.b), algebra_->otimes(x.b, y.a));
}

GroupElt HGroup::to_chang(const Pair& x) const {
    return GroupElt(GoodSeq::make(algebra_, {x.a}), GoodSeq::make(algebra_, {x.b}));
}

} // namespace blchang
