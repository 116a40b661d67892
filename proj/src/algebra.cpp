#include "blchang/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "blchang/errors.hpp"
#include "text_util.hpp"

namespace blchang {

const char* to_string(ChainKind k) {
    switch (k) {
    case ChainKind::Lukasiewicz:
        return "lukasiewicz";
    case ChainKind::Godel:
        return "godel";
    case ChainKind::Product:
        return "product";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Algebra

void Algebra::require(const Elt& x) const {
    if (!contains(x))
        throw DomainError("element does not belong to algebra " + name());
}

Elt Algebra::otimes(const Elt& x, const Elt& y) const {
    require(x);
    require(y);
    return do_otimes(x, y);
}

Elt Algebra::imp(const Elt& x, const Elt& y) const {
    require(x);
    require(y);
    return do_imp(x, y);
}

Elt Algebra::meet(const Elt& x, const Elt& y) const {
    require(x);
    require(y);
    return do_meet(x, y);
}

Elt Algebra::join(const Elt& x, const Elt& y) const {
    require(x);
    require(y);
    return do_join(x, y);
}

Elt Algebra::neg(const Elt& x) const {
    require(x);
    return do_neg(x);
}

Elt Algebra::double_neg(const Elt& x) const {
    require(x);
    return do_neg(do_neg(x));
}

Elt Algebra::pseudo_add(const Elt& x, const Elt& y) const {
    require(x);
    require(y);
    return do_imp(do_neg(x), y);
}

Elt Algebra::add(const Elt& x, const Elt& y) const {
    require(x);
    require(y);
    return do_add(x, y);
}

bool Algebra::leq(const Elt& x, const Elt& y) const {
    require(x);
    require(y);
    return do_leq(x, y);
}

const Elt& Algebra::bottom() const {
    if (!bottom_)
        throw UnsupportedShape(name() + " is an unbounded hoop and has no bottom");
    return *bottom_;
}

const std::vector<Elt>& Algebra::elements() const {
    if (!is_finite())
        throw UnsupportedShape(name() + " has an infinite carrier");
    return elements_;
}

std::optional<bool> Algebra::in_initial_component(const Elt&) const {
    return std::nullopt;
}

Elt Algebra::do_meet(const Elt& x, const Elt& y) const {
    return do_otimes(x, do_imp(x, y));
}

Elt Algebra::do_join(const Elt& x, const Elt& y) const {
    return do_meet(do_imp(do_imp(x, y), y), do_imp(do_imp(y, x), x));
}

bool Algebra::do_leq(const Elt& x, const Elt& y) const {
    return do_imp(x, y) == top_;
}

Elt Algebra::do_add(const Elt& x, const Elt& y) const {
    return do_meet(do_imp(do_neg(x), y), do_imp(do_neg(y), x));
}

// ---------------------------------------------------------------------------
// FiniteTable

namespace {

void check_table(const FiniteTable::Table& t, std::size_t n, const char* which) {
    if (t.size() != n)
        throw ConstructionError(std::string(which) + " table has " + std::to_string(t.size()) + " rows, expected " +
                                std::to_string(n));
    for (const auto& row : t) {
        if (row.size() != n)
            throw ConstructionError(std::string(which) + " table is not square");
        for (auto v : row)
            if (v >= n)
                throw ConstructionError(std::string(which) + " table entry out of range");
    }
}

} // namespace

FiniteTable::FiniteTable(std::vector<std::string> labels, std::size_t bottom, std::size_t top, Table otimes,
                         Table imp, std::string name)
    : Algebra(Elt::index(top), Elt::index(bottom)), name_(std::move(name)), labels_(std::move(labels)),
      otimes_(std::move(otimes)), imp_(std::move(imp)) {
    const auto n = labels_.size();
    if (n == 0)
        throw ConstructionError("finite algebra needs at least one element");
    if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n)
        throw ConstructionError("duplicate element label");
    if (bottom >= n || top >= n)
        throw ConstructionError("bottom/top index out of range");
    check_table(otimes_, n, "otimes");
    check_table(imp_, n, "imp");

    std::vector<Elt> elems;
    for (std::size_t i = 0; i < n; ++i)
        elems.push_back(Elt::index(i));
    set_elements(std::move(elems));

    meet_.assign(n, std::vector<std::size_t>(n));
    join_.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            meet_[i][j] = otimes_[i][imp_[i][j]];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            join_[i][j] = meet_[imp_[imp_[i][j]][j]][imp_[imp_[j][i]][i]];

    chain_ = true;
    for (std::size_t i = 0; i < n && chain_; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (imp_[i][j] != top && imp_[j][i] != top) {
                chain_ = false;
                break;
            }
}

bool FiniteTable::contains(const Elt& x) const {
    return x.is(Elt::Kind::Index) && x.index() < labels_.size();
}

Elt FiniteTable::sample(Rng& rng) const {
    return Elt::index(rng.below(labels_.size()));
}

std::string FiniteTable::render(const Elt& x) const {
    require(x);
    return labels_[x.index()];
}

Elt FiniteTable::parse_element(std::string_view text) const {
    const auto t = detail::trim(text);
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == t)
            return Elt::index(i);
    throw ParseError("unknown element label '" + std::string(t) + "' in " + name_);
}

Elt FiniteTable::do_otimes(const Elt& x, const Elt& y) const {
    return Elt::index(otimes_[x.index()][y.index()]);
}

Elt FiniteTable::do_imp(const Elt& x, const Elt& y) const {
    return Elt::index(imp_[x.index()][y.index()]);
}

Elt FiniteTable::do_meet(const Elt& x, const Elt& y) const {
    return Elt::index(meet_[x.index()][y.index()]);
}

Elt FiniteTable::do_join(const Elt& x, const Elt& y) const {
    return Elt::index(join_[x.index()][y.index()]);
}

// ---------------------------------------------------------------------------
// StandardChain

Rational StandardChain::t_norm(ChainKind kind, const Rational& x, const Rational& y) {
    switch (kind) {
    case ChainKind::Lukasiewicz: {
        Rational s = x + y - 1;
        return s > 0 ? s : Rational(0);
    }
    case ChainKind::Godel:
        return x < y ? x : y;
    case ChainKind::Product:
        return x * y;
    }
    return 0;
}

Rational StandardChain::residuum(ChainKind kind, const Rational& x, const Rational& y) {
    if (x <= y)
        return 1;
    switch (kind) {
    case ChainKind::Lukasiewicz:
        return 1 - x + y;
    case ChainKind::Godel:
        return y;
    case ChainKind::Product:
        return y / x;
    }
    return 0;
}

StandardChain::StandardChain(ChainKind kind, std::optional<std::vector<Rational>> carrier, bool include_zero,
                             std::uint64_t denom_cap)
    : Algebra(Elt::rational(1), include_zero ? std::optional<Elt>(Elt::rational(0)) : std::nullopt), kind_(kind),
      carrier_(std::move(carrier)), include_zero_(include_zero), denom_cap_(denom_cap == 0 ? 1 : denom_cap) {
    if (!include_zero_ && kind_ == ChainKind::Lukasiewicz)
        throw ConstructionError("the positive part of the Lukasiewicz chain is not closed under the t-norm");
    if (!carrier_)
        return;
    auto& c = *carrier_;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.empty() || c.back() != 1)
        throw ConstructionError("chain carrier must contain 1");
    if (include_zero_ && c.front() != 0)
        throw ConstructionError("chain carrier must contain 0");
    for (const auto& q : c)
        if (q < 0 || q > 1 || (!include_zero_ && q == 0))
            throw ConstructionError("chain carrier value " + to_string(q) + " outside the chain");
    for (const auto& x : c)
        for (const auto& y : c) {
            if (!std::binary_search(c.begin(), c.end(), t_norm(kind_, x, y)) ||
                !std::binary_search(c.begin(), c.end(), residuum(kind_, x, y)))
                throw ConstructionError("carrier is not closed under the " + std::string(to_string(kind_)) +
                                        " operations at (" + to_string(x) + ", " + to_string(y) + ")");
        }
    std::vector<Elt> elems;
    for (const auto& q : c)
        elems.push_back(Elt::rational(q));
    set_elements(std::move(elems));
}

std::shared_ptr<const StandardChain> StandardChain::rationals(ChainKind kind, std::uint64_t denom_cap) {
    return std::shared_ptr<const StandardChain>(new StandardChain(kind, std::nullopt, true, denom_cap));
}

std::shared_ptr<const StandardChain> StandardChain::finite(ChainKind kind, std::vector<Rational> carrier) {
    return std::shared_ptr<const StandardChain>(new StandardChain(kind, std::move(carrier), true, 1));
}

std::shared_ptr<const StandardChain> StandardChain::evenly_spaced(ChainKind kind, std::size_t n) {
    if (n < 2)
        throw ConstructionError("a standard chain needs at least the two elements 0 and 1");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < n; ++i) {
        Rational q(static_cast<unsigned long>(i), static_cast<unsigned long>(n - 1));
        q.canonicalize();
        c.push_back(q);
    }
    return finite(kind, std::move(c));
}

std::shared_ptr<const StandardChain> StandardChain::positive_hoop(ChainKind kind, std::uint64_t denom_cap) {
    return std::shared_ptr<const StandardChain>(new StandardChain(kind, std::nullopt, false, denom_cap));
}

std::string StandardChain::name() const {
    std::string base = to_string(kind_);
    if (!include_zero_)
        base += "-hoop";
    if (!carrier_)
        return base + ":q";
    const auto& c = *carrier_;
    bool even = include_zero_;
    for (std::size_t i = 0; even && i < c.size(); ++i) {
        Rational q(static_cast<unsigned long>(i), static_cast<unsigned long>(c.size() - 1));
        q.canonicalize();
        even = c[i] == q;
    }
    if (even)
        return base + ":" + std::to_string(c.size());
    std::string s = base + "{";
    for (std::size_t i = 0; i < c.size(); ++i)
        s += (i ? "," : "") + to_string(c[i]);
    return s + "}";
}

bool StandardChain::contains(const Elt& x) const {
    if (!x.is(Elt::Kind::Rational))
        return false;
    const auto& q = x.value();
    if (q < 0 || q > 1 || (!include_zero_ && q == 0))
        return false;
    return !carrier_ || std::binary_search(carrier_->begin(), carrier_->end(), q);
}

Elt StandardChain::sample(Rng& rng) const {
    if (carrier_)
        return Elt::rational((*carrier_)[rng.below(carrier_->size())]);
    const auto r = rng.below(8);
    if (r == 0 && include_zero_)
        return Elt::rational(0);
    if (r == 1)
        return Elt::rational(1);
    for (;;) {
        auto q = rng.unit_rational(denom_cap_);
        if (include_zero_ || q != 0)
            return Elt::rational(std::move(q));
    }
}

std::string StandardChain::render(const Elt& x) const {
    require(x);
    return to_string(x.value());
}

Elt StandardChain::parse_element(std::string_view text) const {
    Elt e = Elt::rational(parse_rational(text));
    if (!contains(e))
        throw ParseError("'" + std::string(detail::trim(text)) + "' is not in " + name());
    return e;
}

std::optional<bool> StandardChain::in_initial_component(const Elt& x) const {
    require(x);
    if (!include_zero_)
        return std::nullopt;
    if (kind_ == ChainKind::Lukasiewicz)
        return true;
    return x.value() == 0 || x.value() == 1;
}

Elt StandardChain::do_otimes(const Elt& x, const Elt& y) const {
    return Elt::rational(t_norm(kind_, x.value(), y.value()));
}

Elt StandardChain::do_imp(const Elt& x, const Elt& y) const {
    return Elt::rational(residuum(kind_, x.value(), y.value()));
}

Elt StandardChain::do_meet(const Elt& x, const Elt& y) const {
    return x.value() <= y.value() ? x : y;
}

Elt StandardChain::do_join(const Elt& x, const Elt& y) const {
    return x.value() >= y.value() ? x : y;
}

bool StandardChain::do_leq(const Elt& x, const Elt& y) const {
    return x.value() <= y.value();
}

// ---------------------------------------------------------------------------
// OrdinalSum

namespace {

std::string join_names(const char* head, const std::vector<AlgebraPtr>& parts) {
    std::string s = std::string(head) + "(";
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? "," : "") + parts[i]->name();
    return s + ")";
}

const std::vector<AlgebraPtr>& checked_components(const std::vector<AlgebraPtr>& components) {
    if (components.empty())
        throw ConstructionError("ordinal sum needs at least one component");
    for (const auto& c : components)
        if (!c)
            throw ConstructionError("null ordinal-sum component");
    if (!components.front()->bounded())
        throw ConstructionError("initial component " + components.front()->name() +
                                " of an ordinal sum must be bounded");
    return components;
}

} // namespace

OrdinalSum::OrdinalSum(std::vector<AlgebraPtr> components, std::string name)
    : Algebra(Elt::summand(0, checked_components(components).front()->top()),
              Elt::summand(0, components.front()->bottom())),
      components_(std::move(components)), name_(name.empty() ? join_names("tower", components_) : std::move(name)) {
    if (is_finite()) {
        std::vector<Elt> elems;
        for (std::size_t i = 0; i < components_.size(); ++i)
            for (const auto& e : components_[i]->elements())
                if (e != components_[i]->top())
                    elems.push_back(Elt::summand(i, e));
        elems.push_back(top());
        set_elements(std::move(elems));
    }
}

AlgebraPtr ordinal_sum(std::vector<AlgebraPtr> components, std::string name) {
    checked_components(components);
    if (components.size() == 1)
        return components.front();
    return std::make_shared<const OrdinalSum>(std::move(components), std::move(name));
}

bool OrdinalSum::contains(const Elt& x) const {
    if (!x.is(Elt::Kind::Summand) || x.index() >= components_.size())
        return false;
    const auto& c = *components_[x.index()];
    if (!c.contains(x.inner()))
        return false;
    return x.index() == 0 || x.inner() != c.top();
}

bool OrdinalSum::is_finite() const {
    return std::all_of(components_.begin(), components_.end(), [](const AlgebraPtr& c) { return c->is_finite(); });
}

bool OrdinalSum::is_chain() const {
    return std::all_of(components_.begin(), components_.end(), [](const AlgebraPtr& c) { return c->is_chain(); });
}

Elt OrdinalSum::embed(std::size_t i, const Elt& x) const {
    if (i >= components_.size())
        throw DomainError("component index out of range");
    components_[i]->require(x);
    if (x == components_[i]->top())
        return top();
    return Elt::summand(i, x);
}

Elt OrdinalSum::sample(Rng& rng) const {
    if (is_finite())
        return elements()[rng.below(elements().size())];
    const auto i = rng.below(components_.size());
    return embed(i, components_[i]->sample(rng));
}

std::string OrdinalSum::render(const Elt& x) const {
    require(x);
    if (x == top())
        return "1";
    if (x.index() == 0)
        return components_[0]->render(x.inner());
    return "c" + std::to_string(x.index()) + ":" + components_[x.index()]->render(x.inner());
}

Elt OrdinalSum::parse_element(std::string_view text) const {
    auto t = detail::trim(text);
    if (t == "1")
        return top();
    if (t.size() > 2 && t[0] == 'c') {
        const auto colon = t.find(':');
        if (colon != std::string_view::npos) {
            const auto digits = t.substr(1, colon - 1);
            if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
                const auto i = static_cast<std::size_t>(std::stoul(std::string(digits)));
                if (i >= components_.size())
                    throw ParseError("component index out of range in '" + std::string(t) + "'");
                return embed(i, components_[i]->parse_element(t.substr(colon + 1)));
            }
        }
    }
    return embed(0, components_[0]->parse_element(t));
}

std::optional<bool> OrdinalSum::in_initial_component(const Elt& x) const {
    require(x);
    return x.index() == 0;
}

Elt OrdinalSum::do_otimes(const Elt& x, const Elt& y) const {
    if (x == top())
        return y;
    if (y == top())
        return x;
    const auto i = x.index(), j = y.index();
    if (i == j) {
        Elt r = components_[i]->do_otimes(x.inner(), y.inner());
        return r == components_[i]->top() ? top() : Elt::summand(i, std::move(r));
    }
    return i < j ? x : y;
}

Elt OrdinalSum::do_imp(const Elt& x, const Elt& y) const {
    if (x == top())
        return y;
    if (y == top())
        return top();
    const auto i = x.index(), j = y.index();
    if (i == j) {
        Elt r = components_[i]->do_imp(x.inner(), y.inner());
        return r == components_[i]->top() ? top() : Elt::summand(i, std::move(r));
    }
    return i < j ? top() : y;
}

// ---------------------------------------------------------------------------
// DirectProduct

namespace {

const std::vector<AlgebraPtr>& checked_factors(const std::vector<AlgebraPtr>& factors) {
    if (factors.empty())
        throw ConstructionError("direct product needs at least one factor");
    for (const auto& f : factors)
        if (!f)
            throw ConstructionError("null direct-product factor");
    return factors;
}

Elt tuple_of_tops(const std::vector<AlgebraPtr>& factors) {
    std::vector<Elt> t;
    for (const auto& f : checked_factors(factors))
        t.push_back(f->top());
    return Elt::tuple(std::move(t));
}

std::optional<Elt> tuple_of_bottoms(const std::vector<AlgebraPtr>& factors) {
    std::vector<Elt> t;
    for (const auto& f : factors) {
        if (!f->bounded())
            return std::nullopt;
        t.push_back(f->bottom());
    }
    return Elt::tuple(std::move(t));
}

} // namespace

DirectProduct::DirectProduct(std::vector<AlgebraPtr> factors, std::string name)
    : Algebra(tuple_of_tops(factors), tuple_of_bottoms(factors)), factors_(std::move(factors)),
      name_(name.empty() ? join_names("prod", factors_) : std::move(name)) {
    if (is_finite()) {
        std::vector<Elt> elems;
        std::vector<std::size_t> idx(factors_.size(), 0);
        for (;;) {
            std::vector<Elt> t;
            for (std::size_t k = 0; k < factors_.size(); ++k)
                t.push_back(factors_[k]->elements()[idx[k]]);
            elems.push_back(Elt::tuple(std::move(t)));
            std::size_t k = factors_.size();
            while (k > 0) {
                --k;
                if (++idx[k] < factors_[k]->elements().size())
                    break;
                idx[k] = 0;
                if (k == 0) {
                    set_elements(std::move(elems));
                    return;
                }
            }
        }
    }
}

bool DirectProduct::contains(const Elt& x) const {
    if (!x.is(Elt::Kind::Tuple) || x.parts().size() != factors_.size())
        return false;
    for (std::size_t k = 0; k < factors_.size(); ++k)
        if (!factors_[k]->contains(x.parts()[k]))
            return false;
    return true;
}

bool DirectProduct::is_finite() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const AlgebraPtr& f) { return f->is_finite(); });
}

bool DirectProduct::is_chain() const {
    std::size_t nontrivial = 0;
    for (const auto& f : factors_) {
        if (f->is_finite() && f->size() == 1)
            continue;
        if (!f->is_chain())
            return false;
        ++nontrivial;
    }
    return nontrivial <= 1;
}

Elt DirectProduct::sample(Rng& rng) const {
    std::vector<Elt> t;
    for (const auto& f : factors_)
        t.push_back(f->sample(rng));
    return Elt::tuple(std::move(t));
}

std::string DirectProduct::render(const Elt& x) const {
    require(x);
    std::string s = "(";
    for (std::size_t k = 0; k < factors_.size(); ++k)
        s += (k ? "," : "") + factors_[k]->render(x.parts()[k]);
    return s + ")";
}

Elt DirectProduct::parse_element(std::string_view text) const {
    auto t = detail::trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw ParseError("product element must be written (x1,...,xn): '" + std::string(t) + "'");
    const auto items = detail::split_top_level(t.substr(1, t.size() - 2), ',');
    if (items.size() != factors_.size())
        throw ParseError("product element has " + std::to_string(items.size()) + " coordinates, expected " +
                         std::to_string(factors_.size()));
    std::vector<Elt> parts;
    for (std::size_t k = 0; k < items.size(); ++k)
        parts.push_back(factors_[k]->parse_element(items[k]));
    return Elt::tuple(std::move(parts));
}

Elt DirectProduct::do_otimes(const Elt& x, const Elt& y) const {
    std::vector<Elt> t;
    t.reserve(factors_.size());
    for (std::size_t k = 0; k < factors_.size(); ++k)
        t.push_back(factors_[k]->do_otimes(x.parts()[k], y.parts()[k]));
    return Elt::tuple(std::move(t));
}

Elt DirectProduct::do_imp(const Elt& x, const Elt& y) const {
    std::vector<Elt> t;
    t.reserve(factors_.size());
    for (std::size_t k = 0; k < factors_.size(); ++k)
        t.push_back(factors_[k]->do_imp(x.parts()[k], y.parts()[k]));
    return Elt::tuple(std::move(t));
}

// Every derived operation is componentwise, so the factors compute it directly.
Elt DirectProduct::do_meet(const Elt& x, const Elt& y) const {
    std::vector<Elt> t;
    t.reserve(factors_.size());
    for (std::size_t k = 0; k < factors_.size(); ++k)
        t.push_back(factors_[k]->do_meet(x.parts()[k], y.parts()[k]));
    return Elt::tuple(std::move(t));
}

Elt DirectProduct::do_join(const Elt& x, const Elt& y) const {
    std::vector<Elt> t;
    t.reserve(factors_.size());
    for (std::size_t k = 0; k < factors_.size(); ++k)
        t.push_back(factors_[k]->do_join(x.parts()[k], y.parts()[k]));
    return Elt::tuple(std::move(t));
}

bool DirectProduct::do_leq(const Elt& x, const Elt& y) const {
    for (std::size_t k = 0; k < factors_.size(); ++k)
        if (!factors_[k]->do_leq(x.parts()[k], y.parts()[k]))
            return false;
    return true;
}

Elt DirectProduct::do_add(const Elt& x, const Elt& y) const {
    std::vector<Elt> t;
    t.reserve(factors_.size());
    for (std::size_t k = 0; k < factors_.size(); ++k)
        t.push_back(factors_[k]->do_add(x.parts()[k], y.parts()[k]));
    return Elt::tuple(std::move(t));
}

// ---------------------------------------------------------------------------
// Subalgebra

namespace {

const AlgebraPtr& checked_parent(const AlgebraPtr& parent) {
    if (!parent)
        throw ConstructionError("subalgebra needs a parent");
    if (!parent->bounded())
        throw ConstructionError("subalgebra parent must be bounded");
    return parent;
}

} // namespace

Subalgebra::Subalgebra(AlgebraPtr parent, std::optional<std::vector<Elt>> carrier, std::string name)
    : Algebra(checked_parent(parent)->top(), parent->bottom()), parent_(std::move(parent)),
      carrier_(std::move(carrier)), name_(name.empty() ? "sub(" + parent_->name() + ")" : std::move(name)) {
    if (!carrier_) {
        chain_ = parent_->is_chain();
        if (parent_->is_finite())
            set_elements(parent_->elements());
        return;
    }
    auto& c = *carrier_;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (const auto& x : c)
        if (!parent_->contains(x))
            throw ConstructionError("subalgebra carrier element outside parent " + parent_->name());
    auto member = [&](const Elt& x) { return std::binary_search(c.begin(), c.end(), x); };
    if (!member(parent_->top()) || !member(parent_->bottom()))
        throw ConstructionError("subalgebra carrier must contain 0 and 1");
    for (const auto& x : c)
        for (const auto& y : c)
            if (!member(parent_->do_otimes(x, y)) || !member(parent_->do_imp(x, y)))
                throw ConstructionError("subalgebra carrier not closed at (" + parent_->render(x) + ", " +
                                        parent_->render(y) + ")");
    chain_ = true;
    for (const auto& x : c)
        for (const auto& y : c)
            if (!parent_->do_leq(x, y) && !parent_->do_leq(y, x))
                chain_ = false;
    // Keep the carrier in the parent's canonical order when the parent is finite.
    if (parent_->is_finite()) {
        std::vector<Elt> ordered;
        for (const auto& e : parent_->elements())
            if (member(e))
                ordered.push_back(e);
        set_elements(std::move(ordered));
    } else {
        set_elements(c);
    }
}

bool Subalgebra::contains(const Elt& x) const {
    if (!parent_->contains(x))
        return false;
    return !carrier_ || std::binary_search(carrier_->begin(), carrier_->end(), x);
}

Elt Subalgebra::sample(Rng& rng) const {
    if (carrier_)
        return elements()[rng.below(elements().size())];
    return parent_->sample(rng);
}

Elt Subalgebra::parse_element(std::string_view text) const {
    Elt e = parent_->parse_element(text);
    if (!contains(e))
        throw ParseError("'" + std::string(detail::trim(text)) + "' is not in " + name_);
    return e;
}

std::optional<bool> Subalgebra::in_initial_component(const Elt& x) const {
    require(x);
    return parent_->in_initial_component(x);
}

// ---------------------------------------------------------------------------

Tabulation tabulate(const Algebra& a) {
    Tabulation t;
    t.source = a.elements();
    for (std::size_t i = 0; i < t.source.size(); ++i)
        t.index_of.emplace(t.source[i], i);
    const auto n = t.source.size();
    FiniteTable::Table ot(n, std::vector<std::size_t>(n)), it(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ot[i][j] = t.index_of.at(a.otimes(t.source[i], t.source[j]));
            it[i][j] = t.index_of.at(a.imp(t.source[i], t.source[j]));
        }
    std::vector<std::string> labels;
    for (const auto& e : t.source)
        labels.push_back(a.render(e));
    t.table = std::make_shared<const FiniteTable>(std::move(labels), t.index_of.at(a.bottom()),
                                                  t.index_of.at(a.top()), std::move(ot), std::move(it), a.name());
    return t;
}

bool is_product_of_chains(const Algebra& a) {
    if (a.shape() == Shape::Subalgebra)
        return is_product_of_chains(*static_cast<const Subalgebra&>(a).parent());
    if (a.shape() != Shape::DirectProduct)
        return false;
    const auto& f = static_cast<const DirectProduct&>(a).factors();
    return std::all_of(f.begin(), f.end(), [](const AlgebraPtr& c) { return c->is_chain(); });
}

} // namespace blchang
