#include "blchang/structure.hpp"

#include <set>

#include "blchang/errors.hpp"

namespace blchang {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::True:
        return "true";
    case Verdict::False:
        return "false";
    case Verdict::Undecided:
        return "undecided";
    }
    return "?";
}

namespace {

// `whole` stands for the entire algebra; otherwise `elements` is the carrier.
struct CenterCarrier {
    bool whole = false;
    std::vector<Elt> elements;
};

CenterCarrier center_of(const Algebra& a) {
    if (a.is_finite()) {
        std::set<Elt> image;
        for (const auto& x : a.elements())
            image.insert(a.neg(x));
        return {false, {image.begin(), image.end()}};
    }
    switch (a.shape()) {
    case Shape::StandardChain: {
        const auto& c = static_cast<const StandardChain&>(a);
        if (!c.bounded())
            break;
        if (c.kind() == ChainKind::Lukasiewicz)
            return {true, {}};
        return {false, {Elt::rational(0), Elt::rational(1)}};
    }
    case Shape::Interval:
        return {true, {}};
    case Shape::OrdinalSum: {
        const auto& s = static_cast<const OrdinalSum&>(a);
        auto inner = center_of(*s.components().front());
        if (inner.whole) {
            if (!s.components().front()->is_finite())
                break;
            inner.elements = s.components().front()->elements();
        }
        std::vector<Elt> out;
        for (const auto& x : inner.elements)
            out.push_back(s.embed(0, x));
        return {false, out};
    }
    case Shape::DirectProduct: {
        const auto& p = static_cast<const DirectProduct&>(a);
        std::vector<CenterCarrier> parts;
        bool all_whole = true, all_finite = true;
        for (const auto& f : p.factors()) {
            parts.push_back(center_of(*f));
            all_whole = all_whole && parts.back().whole;
            all_finite = all_finite && !parts.back().whole;
        }
        if (all_whole)
            return {true, {}};
        if (!all_finite)
            break;
        std::vector<std::vector<Elt>> acc{{}};
        for (const auto& part : parts) {
            std::vector<std::vector<Elt>> next;
            for (const auto& prefix : acc)
                for (const auto& x : part.elements) {
                    auto t = prefix;
                    t.push_back(x);
                    next.push_back(std::move(t));
                }
            acc = std::move(next);
        }
        std::vector<Elt> out;
        for (auto& t : acc)
            out.push_back(Elt::tuple(std::move(t)));
        return {false, out};
    }
    case Shape::Subalgebra: {
        const auto& s = static_cast<const Subalgebra&>(a);
        if (s.is_whole())
            return center_of(*s.parent());
        break;
    }
    default:
        break;
    }
    throw UnsupportedShape("MV-center of " + a.name() + " is not computable in this representation");
}

// Exhaustive search for a failure of the cancellation quasi-identity.
std::vector<Elt> cancellation_failure(const Algebra& a, const std::vector<Elt>& carrier) {
    for (const auto& x : carrier)
        for (const auto& y : carrier)
            for (const auto& z : carrier) {
                if (y == z)
                    continue;
                if (a.add(x, y) == a.add(x, z) && a.otimes(x, y) == a.otimes(x, z))
                    return {x, y, z};
            }
    return {};
}

CancellativeReport from_search(const Algebra& a, const std::vector<Elt>& carrier, const char* true_reason) {
    auto w = cancellation_failure(a, carrier);
    if (!w.empty())
        return {Verdict::False, std::move(w), "cancellation fails on a triple"};
    return {Verdict::True, {}, true_reason};
}

} // namespace

std::shared_ptr<const Subalgebra> mv_center(const AlgebraPtr& a) {
    auto c = center_of(*a);
    std::optional<std::vector<Elt>> carrier;
    if (!c.whole)
        carrier = std::move(c.elements);
    return std::make_shared<const Subalgebra>(a, std::move(carrier), "MV(" + a->name() + ")");
}

bool is_mv_algebra(const Algebra& a) {
    if (a.is_finite()) {
        for (const auto& x : a.elements())
            if (a.double_neg(x) != x)
                return false;
        return true;
    }
    return center_of(a).whole;
}

CancellativeReport is_cancellative_type(const Algebra& a) {
    if (!a.bounded())
        return {Verdict::Undecided, {}, "unbounded hoop: addition needs a bottom"};

    if (a.shape() == Shape::Interval)
        return {Verdict::True, {}, "MV-algebra"};

    if (a.is_finite() && a.is_chain())
        return from_search(a, a.elements(), "finite chain, all triples checked");

    switch (a.shape()) {
    case Shape::StandardChain: {
        const auto& c = static_cast<const StandardChain&>(a);
        if (c.kind() == ChainKind::Lukasiewicz)
            return {Verdict::True, {}, "MV-algebra"};
        if (c.kind() == ChainKind::Product)
            return {Verdict::True, {}, "product chain: nonzero part is a cancellative hoop"};
        return {Verdict::False, {Elt::rational(Rational(1, 2)), Elt::rational(Rational(3, 4)), Elt::rational(Rational(7, 8))},
                "Godel chain: nonzero elements add to 1 and meet idempotently"};
    }
    case Shape::DirectProduct: {
        const auto& p = static_cast<const DirectProduct&>(a);
        bool all_true = true;
        std::string undecided;
        for (std::size_t k = 0; k < p.factors().size(); ++k) {
            auto r = is_cancellative_type(*p.factors()[k]);
            if (r.verdict == Verdict::False) {
                std::vector<Elt> xs, ys, zs;
                for (std::size_t j = 0; j < p.factors().size(); ++j) {
                    const Elt& t = p.factors()[j]->top();
                    xs.push_back(j == k ? r.witness[0] : t);
                    ys.push_back(j == k ? r.witness[1] : t);
                    zs.push_back(j == k ? r.witness[2] : t);
                }
                return {Verdict::False,
                        {Elt::tuple(std::move(xs)), Elt::tuple(std::move(ys)), Elt::tuple(std::move(zs))},
                        "factor " + std::to_string(k) + " (" + p.factors()[k]->name() + ") is not of cancellative type"};
            }
            if (r.verdict == Verdict::Undecided) {
                all_true = false;
                undecided = "factor " + std::to_string(k) + ": " + r.reason;
            }
        }
        if (all_true)
            return {Verdict::True, {}, "every factor is of cancellative type"};
        return {Verdict::Undecided, {}, undecided};
    }
    case Shape::Subalgebra: {
        const auto& s = static_cast<const Subalgebra&>(a);
        if (s.is_whole())
            return is_cancellative_type(*s.parent());
        auto w = cancellation_failure(a, a.elements());
        if (!w.empty())
            return {Verdict::False, std::move(w), "cancellation fails on a triple"};
        if (a.is_chain())
            return {Verdict::True, {}, "finite chain, all triples checked"};
        auto parent = is_cancellative_type(*s.parent());
        if (parent.verdict == Verdict::True)
            return {Verdict::True, {}, "subalgebra of an algebra of cancellative type"};
        if (is_product_of_chains(*s.parent()) && s.parent()->shape() == Shape::DirectProduct) {
            // The projections are subchains of the factors; check each image.
            const auto& p = static_cast<const DirectProduct&>(*s.parent());
            for (std::size_t k = 0; k < p.factors().size(); ++k) {
                std::set<Elt> image;
                for (const auto& x : a.elements())
                    image.insert(x.parts()[k]);
                if (!cancellation_failure(*p.factors()[k], {image.begin(), image.end()}).empty())
                    return {Verdict::Undecided, {}, "projection " + std::to_string(k) + " is not of cancellative type"};
            }
            return {Verdict::True, {}, "every projection is a chain of cancellative type"};
        }
        return {Verdict::Undecided, {}, parent.reason};
    }
    case Shape::OrdinalSum: {
        const auto& s = static_cast<const OrdinalSum&>(a);
        // A nonzero x below 1 in the initial component absorbs any two
        // distinct elements y, z of a higher component.
        const auto& c0 = *s.components().front();
        if (c0.is_finite()) {
            for (const auto& x : c0.elements()) {
                if (c0.is_top(x) || c0.is_bottom(x))
                    continue;
                for (std::size_t i = 1; i < s.components().size(); ++i) {
                    const auto& ci = *s.components()[i];
                    Rng rng(1);
                    for (int tries = 0; tries < 16; ++tries) {
                        Elt y = ci.sample(rng), z = ci.sample(rng);
                        if (y != z && !ci.is_top(y) && !ci.is_top(z))
                            return {Verdict::False, {s.embed(0, x), s.embed(i, y), s.embed(i, z)},
                                    "initial component absorbs a higher one"};
                    }
                }
            }
        }
        break;
    }
    default:
        break;
    }
    if (a.is_finite()) {
        auto w = cancellation_failure(a, a.elements());
        if (!w.empty())
            return {Verdict::False, std::move(w), "cancellation fails on a triple"};
    }
    return {Verdict::Undecided, {}, "no subdirect decomposition known for " + a.name()};
}

} // namespace blchang
