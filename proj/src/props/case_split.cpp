// No good sequence a over the rational product chain has (1/2) = (1/4) + a.
//
// On a chain a = (1^p, x). If p >= 1 the first entry of the sum is
// 1/4 + 1 = 1. If p = 0 then a = (x): x = 0 leaves (1/4), and for x > 0 both
// negations vanish, so 1/4 + x = (0 -> x) ^ (0 -> 1/4) = 1.

#include <numeric>
#include <sstream>

#include "blchang/props.hpp"

namespace blchang {

namespace {

std::string show(const Algebra& A, const Elt& x) { return A.render(x); }

} // namespace

CaseSplitProof no_difference_case_split(std::uint64_t denominator_cap) {
    const auto P = StandardChain::rationals(ChainKind::Product, denominator_cap);
    const Algebra& A = *P;
    const Elt quarter = Elt::rational(Rational(1, 4)), half = Elt::rational(Rational(1, 2));
    const GoodSeq target = GoodSeq::make(P, {half});
    const GoodSeq q = GoodSeq::make(P, {quarter});
    CaseSplitProof proof;

    {
        const Elt first = A.add(quarter, A.top());
        proof.cases.push_back({"a = (1^p, x) with p >= 1",
                               "the first entry of (1/4) + a is 1/4 + 1 = 1, not 1/2", A.is_top(first),
                               "1/4 + 1 = " + show(A, first)});
    }
    {
        const GoodSeq s = gs_add(q, GoodSeq::zero(P));
        proof.cases.push_back({"a = (0)", "(1/4) + (0) = (1/4), not (1/2)", s == q && s != target,
                               "(1/4) + (0) = " + render(s)});
    }
    {
        // For x > 0 the product chain has ~x = 0; then x (/) y = 0 -> y = 1.
        const Elt nq = A.neg(quarter);
        const bool zero_imp = A.is_top(A.imp(A.bottom(), quarter)) && A.is_top(A.imp(A.bottom(), A.top()));
        bool negations = A.is_bottom(nq);
        std::size_t checked = 0;
        for (std::uint64_t d = 1; d <= denominator_cap; ++d)
            for (std::uint64_t n = 1; n <= d; ++n)
                if (std::gcd(n, d) == 1) {
                    ++checked;
                    negations = negations && A.is_bottom(A.neg(Elt::rational(Rational(n, d))));
                }
        proof.cases.push_back({"a = (x) with 0 < x <= 1",
                               "~x = ~(1/4) = 0, so 1/4 + x = (0 -> x) ^ (0 -> 1/4) = 1, not 1/2",
                               negations && zero_imp,
                               "~(1/4) = " + show(A, nq) + "; ~x = 0 on " + std::to_string(checked) +
                                   " positive points; 0 -> y = 1"});
    }

    proof.brute_force_ok = true;
    for (std::uint64_t d = 1; d <= denominator_cap; ++d)
        for (std::uint64_t n = 0; n <= d; ++n) {
            if (std::gcd(n, d) != 1)
                continue;
            const Elt x = Elt::rational(Rational(n, d));
            for (std::size_t p = 0; p <= 2; ++p) {
                ++proof.brute_force_points;
                const GoodSeq a = from_chain_normal_form(P, p, x);
                proof.brute_force_ok = proof.brute_force_ok && gs_add(q, a) != target;
            }
        }
    return proof;
}

bool CaseSplitProof::holds() const {
    if (!brute_force_ok || cases.empty())
        return false;
    for (const auto& c : cases)
        if (!c.verified)
            return false;
    return true;
}

std::string CaseSplitProof::render() const {
    std::ostringstream s;
    for (const auto& c : cases)
        s << (c.verified ? "[ok]   " : "[FAIL] ") << c.condition << ": " << c.claim << " (" << c.evidence << ")\n";
    s << (brute_force_ok ? "[ok]   " : "[FAIL] ") << "direct check of (1/4) + (1^p, x) != (1/2) on "
      << brute_force_points << " points\n";
    s << "verdict: " << (holds() ? "no such a" : "not established") << "\n";
    return s.str();
}

} // namespace blchang
