#include "blchang/good_seq.hpp"

#include <algorithm>

#include "blchang/errors.hpp"
#include "text_util.hpp"

namespace blchang {

namespace {

void require_bounded(const Algebra& a) {
    if (!a.bounded())
        throw UnsupportedShape("good sequences need a bottom element; " + a.name() + " has none");
}

void require_same(const GoodSeq& a, const GoodSeq& b) {
    if (a.algebra() != b.algebra())
        throw DomainError("good sequences over different algebras: " + a.algebra()->name() + " and " +
                          b.algebra()->name());
}

void trim(const Algebra& a, std::vector<Elt>& entries) {
    while (!entries.empty() && a.is_bottom(entries.back()))
        entries.pop_back();
}

} // namespace

GoodSeq::GoodSeq(AlgebraPtr algebra, std::vector<Elt> entries)
    : algebra_(std::move(algebra)), entries_(std::move(entries)) {
    trim(*algebra_, entries_);
}

GoodSeq GoodSeq::make(AlgebraPtr algebra, std::vector<Elt> entries) {
    if (!algebra)
        throw DomainError("good sequence without an algebra");
    if (!is_good(*algebra, entries)) {
        std::string shown;
        for (const auto& e : entries)
            shown += (shown.empty() ? "" : ",") + algebra->render(e);
        throw DomainError("(" + shown + ") is not a good sequence in " + algebra->name());
    }
    return GoodSeq(std::move(algebra), std::move(entries));
}

GoodSeq GoodSeq::zero(AlgebraPtr algebra) {
    require_bounded(*algebra);
    return GoodSeq(std::move(algebra), {});
}

GoodSeq GoodSeq::units(AlgebraPtr algebra, std::size_t m) {
    require_bounded(*algebra);
    std::vector<Elt> e(m, algebra->top());
    return GoodSeq(std::move(algebra), std::move(e));
}

GoodSeq GoodSeq::unchecked(AlgebraPtr algebra, std::vector<Elt> entries) {
    return GoodSeq(std::move(algebra), std::move(entries));
}

const Elt& GoodSeq::at(std::size_t i) const {
    return i < entries_.size() ? entries_[i] : algebra_->bottom();
}

std::size_t GoodSeq::leading_units() const {
    std::size_t p = 0;
    while (p < entries_.size() && algebra_->is_top(entries_[p]))
        ++p;
    return p;
}

bool operator==(const GoodSeq& a, const GoodSeq& b) {
    return a.algebra_ == b.algebra_ && a.entries_ == b.entries_;
}

std::strong_ordering operator<=>(const GoodSeq& a, const GoodSeq& b) {
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                  b.entries_.end());
}

bool is_good(const Algebra& a, const std::vector<Elt>& entries) {
    require_bounded(a);
    for (const auto& e : entries)
        a.require(e);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Elt& next = i + 1 < entries.size() ? entries[i + 1] : a.bottom();
        if (a.add(entries[i], next) != entries[i])
            return false;
    }
    return true;
}

GoodSeq gs_add_convolution(const GoodSeq& a, const GoodSeq& b) {
    require_same(a, b);
    const auto& A = *a.algebra();
    const std::size_t n = a.support(), m = b.support();
    std::vector<Elt> c;
    c.reserve(n + m);
    // 1-based: c_i = a_i + sum_{j=1}^{i-1} (a_{i-j} * b_j) + b_i
    for (std::size_t i = 1; i <= n + m; ++i) {
        // 0 is neutral and 1 absorbing for +, so those terms are skipped.
        Elt acc = a.at(i - 1);
        for (std::size_t j = 1; j < i && !A.is_top(acc); ++j) {
            const Elt& x = a.at(i - j - 1);
            const Elt& y = b.at(j - 1);
            if (A.is_bottom(x) || A.is_bottom(y))
                continue;
            acc = A.add(acc, A.otimes(x, y));
        }
        if (!A.is_top(acc) && !A.is_bottom(b.at(i - 1)))
            acc = A.add(acc, b.at(i - 1));
        c.push_back(std::move(acc));
    }
    return GoodSeq::unchecked(a.algebra(), std::move(c));
}

GoodSeq gs_add_chain(const GoodSeq& a, const GoodSeq& b) {
    require_same(a, b);
    const auto& A = *a.algebra();
    const auto x = chain_normal_form(a), y = chain_normal_form(b);
    std::vector<Elt> c(x.p + y.p, A.top());
    c.push_back(A.add(x.tail, y.tail));
    c.push_back(A.otimes(x.tail, y.tail));
    return GoodSeq::unchecked(a.algebra(), std::move(c));
}

GoodSeq gs_add(const GoodSeq& a, const GoodSeq& b) {
    require_same(a, b);
    if (a.algebra()->is_chain())
        return gs_add_chain(a, b);
    return gs_add_convolution(a, b);
}

GoodSeq gs_times(std::size_t n, const GoodSeq& a) {
    GoodSeq acc = GoodSeq::zero(a.algebra());
    for (std::size_t i = 0; i < n; ++i)
        acc = gs_add(acc, a);
    return acc;
}

namespace {

template <class Op>
GoodSeq componentwise(const GoodSeq& a, const GoodSeq& b, Op op) {
    require_same(a, b);
    const auto len = std::max(a.support(), b.support());
    std::vector<Elt> c;
    c.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        c.push_back(op(*a.algebra(), a.at(i), b.at(i)));
    return GoodSeq::unchecked(a.algebra(), std::move(c));
}

} // namespace

GoodSeq gs_join(const GoodSeq& a, const GoodSeq& b) {
    return componentwise(a, b, [](const Algebra& A, const Elt& x, const Elt& y) { return A.join(x, y); });
}

GoodSeq gs_meet(const GoodSeq& a, const GoodSeq& b) {
    return componentwise(a, b, [](const Algebra& A, const Elt& x, const Elt& y) { return A.meet(x, y); });
}

bool gs_leq(const GoodSeq& a, const GoodSeq& b) {
    require_same(a, b);
    const auto len = std::max(a.support(), b.support());
    for (std::size_t i = 0; i < len; ++i)
        if (!a.algebra()->leq(a.at(i), b.at(i)))
            return false;
    return true;
}

GoodSeq gs_prepend_units(std::size_t m, const GoodSeq& a) {
    std::vector<Elt> c(m, a.algebra()->top());
    c.insert(c.end(), a.entries().begin(), a.entries().end());
    return GoodSeq::unchecked(a.algebra(), std::move(c));
}

GoodSeq gs_double_neg(const GoodSeq& a) {
    std::vector<Elt> c;
    c.reserve(a.support());
    for (const auto& x : a.entries())
        c.push_back(a.algebra()->double_neg(x));
    return GoodSeq::unchecked(a.algebra(), std::move(c));
}

GoodSeq gs_rebase(const GoodSeq& a, AlgebraPtr target) {
    for (const auto& x : a.entries())
        target->require(x);
    return GoodSeq::unchecked(std::move(target), a.entries());
}

ChainNormalForm chain_normal_form(const GoodSeq& a) {
    const auto& A = *a.algebra();
    if (!A.is_chain())
        throw UnsupportedShape("chain normal form needs a chain; " + A.name() + " is not one");
    const auto p = a.leading_units();
    if (a.support() > p + 1)
        throw DomainError("sequence over a chain is not of the form (1^p, a)");
    return {p, a.at(p)};
}

GoodSeq from_chain_normal_form(AlgebraPtr algebra, std::size_t p, const Elt& tail) {
    std::vector<Elt> c(p, algebra->top());
    c.push_back(tail);
    return GoodSeq::make(std::move(algebra), std::move(c));
}

const std::vector<AlgebraPtr>& product_factors(const Algebra& a) {
    if (a.shape() == Shape::DirectProduct)
        return static_cast<const DirectProduct&>(a).factors();
    if (a.shape() == Shape::Subalgebra)
        return product_factors(*static_cast<const Subalgebra&>(a).parent());
    throw UnsupportedShape(a.name() + " is not a product of algebras");
}

GoodSeq project_goodseq(const GoodSeq& a, std::size_t i) {
    const auto& factors = product_factors(*a.algebra());
    if (i >= factors.size())
        throw DomainError("factor index " + std::to_string(i) + " out of range for " + a.algebra()->name());
    std::vector<Elt> c;
    c.reserve(a.support());
    for (const auto& x : a.entries())
        c.push_back(x.parts()[i]);
    return GoodSeq::make(factors[i], std::move(c));
}

std::string render(const GoodSeq& a) {
    if (a.is_zero())
        return "(0)";
    const auto& A = *a.algebra();
    std::string s = "(";
    std::size_t i = 0;
    const auto p = a.leading_units();
    if (p >= 2) {
        s += A.render(A.top()) + "^" + std::to_string(p);
        i = p;
    }
    for (; i < a.support(); ++i) {
        if (s.size() > 1)
            s += ",";
        s += A.render(a.entries()[i]);
    }
    return s + ")";
}

GoodSeq parse_goodseq(const AlgebraPtr& algebra, std::string_view text) {
    auto t = detail::trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')' || !detail::balanced(t))
        throw ParseError("good sequence must be written (a1,...,an): '" + std::string(t) + "'");
    std::vector<Elt> entries;
    for (const auto& item : detail::split_top_level(t.substr(1, t.size() - 2), ',')) {
        if (item.empty())
            throw ParseError("empty entry in '" + std::string(t) + "'");
        std::string_view body = item;
        std::size_t count = 1;
        if (const auto caret = item.rfind('^'); caret != std::string::npos && caret + 1 < item.size() &&
                                                std::all_of(item.begin() + static_cast<std::ptrdiff_t>(caret) + 1,
                                                            item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            body = std::string_view(item).substr(0, caret);
            count = std::stoul(item.substr(caret + 1));
        }
        const Elt e = algebra->parse_element(body);
        entries.insert(entries.end(), count, e);
    }
    return GoodSeq::make(algebra, std::move(entries));
}

std::vector<GoodSeq> enumerate_good_seqs(const AlgebraPtr& algebra, std::size_t max_len, bool first_not_top) {
    const auto& A = *algebra;
    const auto& elems = A.elements();
    std::vector<GoodSeq> out{GoodSeq::zero(algebra)};
    std::vector<Elt> prefix;
    // Zeros can only trail, so every proper prefix ends in a nonzero entry.
    auto dfs = [&](auto&& self) -> void {
        if (prefix.size() == max_len)
            return;
        for (const auto& x : elems) {
            if (A.is_bottom(x))
                continue;
            if (prefix.empty() ? (first_not_top && A.is_top(x)) : A.add(prefix.back(), x) != prefix.back())
                continue;
            prefix.push_back(x);
            out.push_back(GoodSeq::unchecked(algebra, prefix));
            self(self);
            prefix.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

namespace {

GoodSeq random_chain_seq(const AlgebraPtr& algebra, Rng& rng, std::size_t max_len) {
    std::size_t p = rng.below(max_len);
    Elt t = algebra->sample(rng);
    if (algebra->is_top(t)) {
        ++p;
        t = algebra->bottom();
    }
    std::vector<Elt> c(p, algebra->top());
    c.push_back(std::move(t));
    return GoodSeq::unchecked(algebra, std::move(c));
}

} // namespace

GoodSeq random_good_seq(const AlgebraPtr& algebra, Rng& rng, std::size_t max_len) {
    const auto& A = *algebra;
    require_bounded(A);
    if (max_len == 0)
        return GoodSeq::zero(algebra);
    if (A.is_chain())
        return random_chain_seq(algebra, rng, max_len);
    if (A.shape() == Shape::DirectProduct && is_product_of_chains(A)) {
        const auto& factors = static_cast<const DirectProduct&>(A).factors();
        std::vector<GoodSeq> parts;
        std::size_t len = 0;
        for (const auto& f : factors) {
            parts.push_back(random_chain_seq(f, rng, max_len));
            len = std::max(len, parts.back().support());
        }
        std::vector<Elt> c;
        for (std::size_t i = 0; i < len; ++i) {
            std::vector<Elt> t;
            for (const auto& s : parts)
                t.push_back(s.at(i));
            c.push_back(Elt::tuple(std::move(t)));
        }
        return GoodSeq::unchecked(algebra, std::move(c));
    }
    if (A.is_finite()) {
        std::vector<Elt> c{A.sample(rng)};
        while (c.size() < max_len && !A.is_bottom(c.back())) {
            std::vector<Elt> next;
            for (const auto& x : A.elements())
                if (A.add(c.back(), x) == c.back())
                    next.push_back(x);
            c.push_back(next[rng.below(next.size())]);
        }
        return GoodSeq::unchecked(algebra, std::move(c));
    }
    throw UnsupportedShape("no good-sequence generator for " + A.name());
}

} // namespace blchang
