#include "blchang/builtins.hpp"

#include <filesystem>
#include <optional>

#include "blchang/blalg_io.hpp"
#include "blchang/errors.hpp"
#include "blchang/lgroups.hpp"
#include "text_util.hpp"

namespace blchang {

namespace {

std::optional<std::string_view> call_args(std::string_view t, std::string_view head) {
    if (t.size() < head.size() + 2 || t.substr(0, head.size()) != head || t[head.size()] != '(' || t.back() != ')')
        return std::nullopt;
    return t.substr(head.size() + 1, t.size() - head.size() - 2);
}

std::optional<std::size_t> size_arg(std::string_view s) {
    if (s.empty() || s.size() > 3)
        return std::nullopt;
    std::size_t n = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            return std::nullopt;
        n = n * 10 + static_cast<std::size_t>(c - '0');
    }
    return n;
}

std::optional<AlgebraPtr> standard(std::string_view t, std::uint64_t cap) {
    struct Kind {
        std::string_view name, short_name;
        ChainKind kind;
    };
    for (const Kind& k : {Kind{"lukasiewicz:", "L", ChainKind::Lukasiewicz}, Kind{"godel:", "G", ChainKind::Godel},
                          Kind{"product:", "", ChainKind::Product}}) {
        std::string_view rest;
        if (t.substr(0, k.name.size()) == k.name)
            rest = t.substr(k.name.size());
        else if (!k.short_name.empty() && t.substr(0, k.short_name.size()) == k.short_name && size_arg(t.substr(1)))
            rest = t.substr(k.short_name.size());
        else
            continue;
        if (rest == "q")
            return AlgebraPtr(StandardChain::rationals(k.kind, cap));
        const auto n = size_arg(rest);
        if (!n || *n < 2)
            throw ParseError("expected a size >= 2 or 'q' in '" + std::string(t) + "'");
        if (k.kind == ChainKind::Product && *n != 2)
            throw ParseError("finite product chains other than product:2 are not closed");
        return AlgebraPtr(StandardChain::evenly_spaced(k.kind, *n));
    }
    return std::nullopt;
}

std::vector<AlgebraPtr> resolve_all(std::string_view args, std::uint64_t cap) {
    std::vector<AlgebraPtr> out;
    for (const auto& item : detail::split_top_level(args, ','))
        out.push_back(resolve_algebra(item, cap));
    if (out.empty())
        throw ParseError("empty argument list");
    return out;
}

std::string short_name(const AlgebraPtr& a) {
    const auto n = a->name();
    if (n.rfind("lukasiewicz:", 0) == 0 && n != "lukasiewicz:q")
        return "L" + n.substr(12);
    if (n.rfind("godel:", 0) == 0 && n != "godel:q")
        return "G" + n.substr(6);
    return n;
}

} // namespace

AlgebraPtr resolve_algebra(std::string_view spec, std::uint64_t denominator_cap) {
    const auto t = detail::trim(spec);
    if (t.empty())
        throw ParseError("empty algebra name");
    try {
        if (auto a = standard(t, denominator_cap))
            return *a;
        if (auto args = call_args(t, "tower")) {
            auto parts = resolve_all(*args, denominator_cap);
            std::string name = "tower(";
            for (std::size_t i = 0; i < parts.size(); ++i)
                name += (i ? "," : "") + short_name(parts[i]);
            return ordinal_sum(std::move(parts), name + ")");
        }
        if (auto args = call_args(t, "prod")) {
            auto parts = resolve_all(*args, denominator_cap);
            std::string name = "prod(";
            for (std::size_t i = 0; i < parts.size(); ++i)
                name += (i ? "," : "") + short_name(parts[i]);
            return std::make_shared<DirectProduct>(std::move(parts), name + ")");
        }
        if (auto args = call_args(t, "gamma"))
            return gamma_interval(parse_lgroup(*args));
    } catch (const ConstructionError& e) {
        throw ParseError(e.what());
    }
    const std::string path(t);
    if (!std::filesystem::exists(path) && path.find('(') != std::string::npos)
        throw ParseError("malformed algebra name '" + path + "'");
    if (!std::filesystem::exists(path))
        throw std::runtime_error("'" + path + "' is neither a builtin algebra nor a readable file");
    return load_blalg(path);
}

} // namespace blchang
