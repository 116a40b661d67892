#include <algorithm>
#include <functional>

#include "blchang/errors.hpp"
#include "blchang/props.hpp"

namespace blchang {

void GeneratorConfig::check() const {
    if (max_chain_size < 2 || max_chain_size > 8)
        throw ConstructionError("max chain size must lie in [2, 8]");
    for (std::size_t v : {max_tower_components, product_arity, element_samples, sequence_samples, group_samples,
                          sandwich_samples, pair_samples})
        if (v == 0)
            throw ConstructionError("generator bounds must be at least 1");
    if (denominator_cap == 0)
        throw ConstructionError("denominator cap must be at least 1");
}

namespace {

AlgebraPtr lukasiewicz(std::size_t k) { return StandardChain::evenly_spaced(ChainKind::Lukasiewicz, k); }

AlgebraPtr build_tower(const std::vector<std::size_t>& sizes) {
    if (sizes.size() == 1)
        return lukasiewicz(sizes[0]);
    std::vector<AlgebraPtr> parts;
    std::string name = "tower(";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        parts.push_back(lukasiewicz(sizes[i]));
        name += (i ? "," : "") + std::string("L") + std::to_string(sizes[i]);
    }
    return ordinal_sum(std::move(parts), name + ")");
}

// Tower shapes with exactly `total` elements: k0 >= 2 and every later
// component k >= 2 contributes k - 1 new elements.
std::vector<std::vector<std::size_t>> shapes_of_size(std::size_t total, std::size_t max_components) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> extend = [&](std::size_t left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (cur.size() == max_components)
            return;
        for (std::size_t add = 1; add <= left; ++add) {
            cur.push_back(add + 1);
            extend(left - add);
            cur.pop_back();
        }
    };
    for (std::size_t k0 = 2; k0 <= total && max_components > 0; ++k0) {
        cur = {k0};
        extend(total - k0);
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

} // namespace

std::vector<AlgebraPtr> finite_bl_chains_of_size(std::size_t n) {
    if (n > 8)
        throw ConstructionError("finite chains are generated up to size 8");
    std::vector<AlgebraPtr> out;
    if (n < 2)
        return out;
    for (const auto& s : shapes_of_size(n, n))
        out.push_back(build_tower(s));
    return out;
}

std::vector<AlgebraPtr> gen_finite_bl_chains(std::size_t n, std::size_t max_components) {
    if (n > 8)
        throw ConstructionError("finite chains are generated up to size 8");
    std::vector<AlgebraPtr> out;
    for (std::size_t m = 2; m <= n; ++m)
        for (const auto& s : shapes_of_size(m, max_components))
            out.push_back(build_tower(s));
    return out;
}

std::vector<AlgebraPtr> fixed_products() {
    auto L2 = lukasiewicz(2);
    auto L3 = lukasiewicz(3);
    auto G3 = build_tower({2, 2});
    auto T = build_tower({2, 3});
    return {std::make_shared<const DirectProduct>(std::vector<AlgebraPtr>{L2, L3}, "prod(L2,L3)"),
            std::make_shared<const DirectProduct>(std::vector<AlgebraPtr>{G3, L3}, "prod(G3,L3)"),
            std::make_shared<const DirectProduct>(std::vector<AlgebraPtr>{T, L2}, "prod(tower(L2,L3),L2)")};
}

std::vector<AlgebraPtr> Corpus::finite() const {
    std::vector<AlgebraPtr> out = chains;
    out.insert(out.end(), products.begin(), products.end());
    return out;
}

std::vector<AlgebraPtr> Corpus::all() const {
    std::vector<AlgebraPtr> out = finite();
    out.insert(out.end(), rational.begin(), rational.end());
    return out;
}

Corpus make_corpus(const GeneratorConfig& config) {
    config.check();
    Corpus c;
    c.chains = gen_finite_bl_chains(config.max_chain_size, config.max_tower_components);
    c.products = fixed_products();
    const auto small = gen_finite_bl_chains(3);
    Rng rng = Rng::stream(config.seed, Rng::salt_of("products"));
    for (std::size_t i = 0; i < config.random_products; ++i) {
        std::vector<AlgebraPtr> factors;
        std::string name = "prod(";
        for (std::size_t j = 0; j < config.product_arity; ++j) {
            factors.push_back(small[rng.below(small.size())]);
            name += (j ? "," : "") + factors.back()->name();
        }
        c.products.push_back(std::make_shared<const DirectProduct>(std::move(factors), name + ")"));
    }
    for (auto kind : {ChainKind::Lukasiewicz, ChainKind::Godel, ChainKind::Product})
        c.rational.push_back(StandardChain::rationals(kind, config.denominator_cap));
    return c;
}

} // namespace blchang
