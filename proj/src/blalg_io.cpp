#include "blchang/blalg_io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "blchang/errors.hpp"
#include "text_util.hpp"

namespace blchang {

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

std::vector<std::string> words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w)
        out.push_back(w);
    return out;
}

} // namespace

std::shared_ptr<const FiniteTable> parse_blalg(std::string_view text, std::string name) {
    std::vector<Line> lines;
    {
        std::istringstream in{std::string(text)};
        std::string raw;
        std::size_t n = 0;
        while (std::getline(in, raw)) {
            ++n;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            auto t = detail::trim(raw);
            if (!t.empty())
                lines.push_back({n, std::string(t)});
        }
        if (lines.empty())
            throw ParseError("empty input, expected 'blalg v1'", n == 0 ? 1 : n);
    }
    if (words(lines[0].text) != std::vector<std::string>{"blalg", "v1"})
        throw ParseError("expected header 'blalg v1'", lines[0].number);

    std::optional<std::vector<std::string>> labels;
    std::map<std::string, std::size_t> index;
    std::optional<std::size_t> bottom, top;
    std::optional<FiniteTable::Table> otimes, imp;

    auto lookup = [&](const std::string& label, std::size_t line) {
        auto it = index.find(label);
        if (it == index.end())
            throw ParseError("unknown element label '" + label + "'", line);
        return it->second;
    };

    std::size_t i = 1;
    while (i < lines.size()) {
        const auto& ln = lines[i];
        const auto colon = ln.text.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'key:' but found '" + ln.text + "'", ln.number);
        const std::string key(detail::trim(std::string_view(ln.text).substr(0, colon)));
        const auto rest = words(std::string_view(ln.text).substr(colon + 1));
        ++i;
        if (key == "elements") {
            if (labels)
                throw ParseError("duplicate 'elements:' section", ln.number);
            if (rest.empty())
                throw ParseError("'elements:' lists no labels", ln.number);
            labels = rest;
            for (std::size_t k = 0; k < rest.size(); ++k)
                if (!index.emplace(rest[k], k).second)
                    throw ParseError("duplicate element label '" + rest[k] + "'", ln.number);
        } else if (key == "bottom" || key == "top") {
            if (!labels)
                throw ParseError("'" + key + ":' before 'elements:'", ln.number);
            if (rest.size() != 1)
                throw ParseError("'" + key + ":' takes exactly one label", ln.number);
            auto& slot = key == "bottom" ? bottom : top;
            if (slot)
                throw ParseError("duplicate '" + key + ":'", ln.number);
            slot = lookup(rest[0], ln.number);
        } else if (key == "otimes" || key == "imp") {
            if (!labels)
                throw ParseError("'" + key + ":' before 'elements:'", ln.number);
            if (!rest.empty())
                throw ParseError("table rows must start on the line after '" + key + ":'", ln.number);
            auto& slot = key == "otimes" ? otimes : imp;
            if (slot)
                throw ParseError("duplicate '" + key + ":' table", ln.number);
            const auto n = labels->size();
            FiniteTable::Table table;
            for (std::size_t r = 0; r < n; ++r) {
                if (i >= lines.size())
                    throw ParseError("'" + key + "' table has " + std::to_string(r) + " rows, expected " +
                                         std::to_string(n),
                                     lines.back().number);
                const auto& row_line = lines[i];
                const auto cells = words(row_line.text);
                if (row_line.text.find(':') != std::string::npos)
                    throw ParseError("'" + key + "' table has " + std::to_string(r) + " rows, expected " +
                                         std::to_string(n),
                                     row_line.number);
                if (cells.size() != n)
                    throw ParseError("'" + key + "' row has " + std::to_string(cells.size()) + " entries, expected " +
                                         std::to_string(n) + " (table must be square)",
                                     row_line.number);
                std::vector<std::size_t> row;
                for (const auto& c : cells)
                    row.push_back(lookup(c, row_line.number));
                table.push_back(std::move(row));
                ++i;
            }
            slot = std::move(table);
        } else {
            throw ParseError("unknown section '" + key + "'", ln.number);
        }
    }

    const auto end = lines.back().number;
    if (!labels)
        throw ParseError("missing 'elements:'", end);
    if (!bottom)
        throw ParseError("missing 'bottom:'", end);
    if (!top)
        throw ParseError("missing 'top:'", end);
    if (!otimes)
        throw ParseError("missing 'otimes:' table", end);
    if (!imp)
        throw ParseError("missing 'imp:' table", end);
    return std::make_shared<const FiniteTable>(std::move(*labels), *bottom, *top, std::move(*otimes), std::move(*imp),
                                               std::move(name));
}

std::shared_ptr<const FiniteTable> load_blalg(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_blalg(buf.str(), std::filesystem::path(path).stem().string());
}

std::string write_blalg(const Algebra& a) {
    const auto& e = a.elements();
    std::vector<std::string> label;
    for (const auto& x : e) {
        auto s = a.render(x);
        for (auto& c : s)
            if (c == ' ' || c == '#' || c == ':')
                c = '_';
        label.push_back(s);
    }
    std::ostringstream out;
    out << "blalg v1\n# " << a.name() << "\nelements:";
    for (const auto& l : label)
        out << ' ' << l;
    auto label_of = [&](const Elt& r) {
        std::size_t k = 0;
        while (e[k] != r)
            ++k;
        return label[k];
    };
    out << "\nbottom: " << label_of(a.bottom()) << "\ntop: " << label_of(a.top()) << "\n";
    auto table = [&](const char* key, auto op) {
        out << key << ":\n";
        for (const auto& x : e) {
            out << " ";
            for (const auto& y : e) {
                out << ' ' << label_of(op(x, y));
            }
            out << "\n";
        }
    };
    table("otimes", [&](const Elt& x, const Elt& y) { return a.otimes(x, y); });
    table("imp", [&](const Elt& x, const Elt& y) { return a.imp(x, y); });
    return out.str();
}

} // namespace blchang
