#include "blchang/element.hpp"

namespace blchang {

Elt Elt::index(std::size_t i) {
    Elt e;
    e.kind_ = Kind::Index;
    e.index_ = i;
    return e;
}

Elt Elt::rational(Rational q) {
    Elt e;
    e.kind_ = Kind::Rational;
    e.value_ = std::move(q);
    e.value_.canonicalize();
    return e;
}

Elt Elt::summand(std::size_t component, Elt inner) {
    Elt e;
    e.kind_ = Kind::Summand;
    e.index_ = component;
    e.parts_.push_back(std::move(inner));
    return e;
}

Elt Elt::tuple(std::vector<Elt> parts) {
    Elt e;
    e.kind_ = Kind::Tuple;
    e.parts_ = std::move(parts);
    return e;
}

bool operator==(const Elt& a, const Elt& b) {
    if (a.kind_ != b.kind_)
        return false;
    switch (a.kind_) {
    case Elt::Kind::Index:
        return a.index_ == b.index_;
    case Elt::Kind::Rational:
        return a.value_ == b.value_;
    case Elt::Kind::Summand:
        return a.index_ == b.index_ && a.parts_ == b.parts_;
    case Elt::Kind::Tuple:
        return a.parts_ == b.parts_;
    }
    return false;
}

std::strong_ordering operator<=>(const Elt& a, const Elt& b) {
    if (a.kind_ != b.kind_)
        return a.kind_ <=> b.kind_;
    switch (a.kind_) {
    case Elt::Kind::Index:
        return a.index_ <=> b.index_;
    case Elt::Kind::Rational: {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    case Elt::Kind::Summand:
        if (a.index_ != b.index_)
            return a.index_ <=> b.index_;
        [[fallthrough]];
    case Elt::Kind::Tuple: {
        const auto n = std::min(a.parts_.size(), b.parts_.size());
        for (std::size_t i = 0; i < n; ++i) {
            auto c = a.parts_[i] <=> b.parts_[i];
            if (c != 0)
                return c;
        }
        return a.parts_.size() <=> b.parts_.size();
    }
    }
    return std::strong_ordering::equal;
}

} // namespace blchang
