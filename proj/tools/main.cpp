// blchang command-line front end.
//
// Exit codes: 0 pass, 1 property or equation failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blchang/blalg_io.hpp"
#include "blchang/builtins.hpp"
#include "blchang/chang_group.hpp"
#include "blchang/errors.hpp"
#include "blchang/lgroups.hpp"
#include "blchang/props.hpp"
#include "blchang/structure.hpp"
#include "blchang/validate.hpp"

namespace {

using namespace blchang;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
    std::uint64_t seed = 1;
    std::uint64_t denominator_cap = StandardChain::kDefaultDenominatorCap;
};

std::string set_of(const Algebra& a, const std::vector<Elt>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? ", " : "") + a.render(xs[i]);
    return s + "}";
}

std::string describe_center(const AlgebraPtr& a) {
    const auto c = mv_center(a);
    if (c->is_whole())
        return "MV(L) = L";
    if (c->is_finite())
        return "MV(L) = " + set_of(*a, c->elements());
    return "MV(L) = " + c->name();
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& spec, std::size_t budget, const Options& o) {
    const auto a = resolve_algebra(spec, o.denominator_cap);
    const auto report = validate_bl_axioms(*a, {budget, o.seed});
    std::cout << "seed: " << o.seed << "\n" << report.render(*a);
    return report.ok() ? kPass : kFail;
}

int cmd_mv_center(const std::string& spec, const Options& o) {
    const auto a = resolve_algebra(spec, o.denominator_cap);
    std::cout << "algebra: " << a->name() << "\n" << describe_center(a) << "\n";
    std::cout << "MV-algebra: " << (is_mv_algebra(*a) ? "yes" : "no") << "\n";
    return kPass;
}

int cmd_good_seqs(const std::string& spec, std::size_t max_len, bool first_not_top, const Options& o) {
    const auto a = resolve_algebra(spec, o.denominator_cap);
    const auto all = enumerate_good_seqs(a, max_len, first_not_top);
    std::cout << "algebra: " << a->name() << "\nsupport <= " << max_len << (first_not_top ? ", first entry < 1" : "")
              << ": " << all.size() << " good sequences\n";
    for (const auto& s : all)
        std::cout << "  " << render(s) << "\n";
    return kPass;
}

// Decides whether L is the Lukasiewicz chain with n+1 elements by matching it
// against Gamma(Z, n), then checks psi on [-3n, 3n].
std::string lukasiewicz_data(const AlgebraPtr& a, bool& ok) {
    const std::size_t n = a->size() - 1;
    const auto g = gamma_interval(LGroup::integers(static_cast<std::int64_t>(n)));
    const auto& ge = g->elements();
    const auto& le = a->elements();
    bool iso = ge.size() == le.size();
    for (std::size_t i = 0; iso && i < le.size(); ++i)
        for (std::size_t j = 0; iso && j < le.size(); ++j) {
            auto index = [&](const std::vector<Elt>& v, const Elt& x) {
                return static_cast<std::size_t>(std::find(v.begin(), v.end(), x) - v.begin());
            };
            iso = index(le, a->otimes(le[i], le[j])) == index(ge, g->otimes(ge[i], ge[j])) &&
                  index(le, a->imp(le[i], le[j])) == index(ge, g->imp(ge[i], ge[j]));
        }
    if (!iso)
        return "";
    ChangGroup G(g);
    const auto s = Strategy::cancellative();
    const auto lim = static_cast<std::int64_t>(3 * n);
    for (std::int64_t k = -lim; k <= lim && ok; ++k) {
        const Elt v = Elt::rational(Rational(k));
        ok = psi_inverse(G, psi(G, v)) == v && G.eq(psi(G, Elt::rational(Rational(static_cast<long>(n)))), G.unit(), s) ==
                                                   EqDecision::Equal;
    }
    return "unit image n=" + std::to_string(n) + " (Gamma(Z(u=" + std::to_string(n) +
           ")) has the same tables; psi round trip on [" + std::to_string(-lim) + ", " + std::to_string(lim) + "]" +
           (ok ? "" : " FAILED") + ")";
}

int cmd_chang(const std::string& spec, const std::string& strategy, std::size_t bound, std::size_t samples,
              const Options& o) {
    const auto a = resolve_algebra(spec, o.denominator_cap);
    ChangGroup G(a);
    Strategy s;
    if (strategy == "auto")
        s = G.cancellative_licensed() ? Strategy::cancellative()
            : G.chain_search_applies() ? Strategy::chain_search()
                                       : Strategy::bounded(bound);
    else if (strategy == "cancellative")
        s = Strategy::cancellative();
    else if (strategy == "chain")
        s = Strategy::chain_search();
    else
        s = Strategy::bounded(bound);
    if (s.kind == Strategy::Kind::Cancellative && !G.cancellative_licensed())
        throw StrategyMisuse("Cancellative is not licensed on " + a->name() + ": " +
                             G.cancellative_type().reason);

    std::cout << "algebra: " << a->name() << "\nseed: " << o.seed << "\n";
    std::cout << "carrier: " << (a->is_chain() ? "chain" : "not a chain") << ", "
              << (a->is_finite() ? std::to_string(a->size()) + " elements" : "infinite") << "\n";
    std::cout << describe_center(a) << "\n";
    const auto& ct = G.cancellative_type();
    std::cout << "cancellative type: " << to_string(ct.verdict) << (ct.reason.empty() ? "" : " (" + ct.reason + ")")
              << "\n";
    std::cout << "strategy: " << to_string(s) << "\n";
    std::cout << "strong unit: u_L = " << render(G.unit()) << "\n";

    Rng rng = Rng::stream(o.seed, Rng::salt_of("chang|" + a->name()));
    std::vector<GroupElt> sample;
    for (std::size_t i = 0; i < samples; ++i)
        sample.emplace_back(random_good_seq(a, rng, 3), random_good_seq(a, rng, 3));

    // S(L): the summand part of every sampled class, decided against 0.
    std::size_t unknown = 0, nonzero = 0;
    std::string witness;
    std::string s_status;
    if (!G.mv_group()) {
        s_status = "unknown (MV-center not representable)";
    } else {
        for (const auto& g : sample) {
            const auto part = G.theta(g).s_part;
            const auto d = G.eq(part, G.zero(), s);
            if (d == EqDecision::Unknown)
                ++unknown;
            else if (d == EqDecision::NotEqual && nonzero++ == 0)
                witness = render(part) + " from " + render(g);
        }
        if (nonzero)
            s_status = "nontrivial (" + std::to_string(nonzero) + " of " + std::to_string(samples) +
                       " sampled classes; e.g. " + witness + ")";
        else if (unknown)
            s_status = "unknown (" + std::to_string(unknown) + " undecided of " + std::to_string(samples) + ")";
        else
            s_status = "trivial on " + std::to_string(samples) + " sampled classes";
    }
    std::cout << "S(L): " << s_status << "\n";

    int code = kPass;
    std::string iso;
    bool godel = true, product = true;
    try {
        (void)godel_to_int(G.unit());
    } catch (const UnsupportedShape&) {
        godel = false;
    }
    try {
        (void)product_iso(G.unit());
    } catch (const UnsupportedShape&) {
        product = false;
    }
    if (godel) {
        bool ok = godel_to_int(G.unit()) == 1 && nonzero == 0 && unknown == 0;
        for (std::size_t i = 0; i + 1 < sample.size(); ++i) {
            const auto &g = sample[i], &h = sample[i + 1];
            const auto x = godel_to_int(g), y = godel_to_int(h);
            ok = ok && godel_to_int(G.add(g, h)) == x + y &&
                 (G.leq(g, h, s) == OrderDecision::Leq) == (x <= y);
        }
        iso = "G_L ≅ Z; S(L) trivial";
        if (!ok) {
            iso += " FAILED on the sampled classes";
            code = kFail;
        }
    } else if (product) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < sample.size(); ++i) {
            const auto &g = sample[i], &h = sample[i + 1];
            const auto x = product_iso(g), y = product_iso(h);
            ok = ok && product_iso(G.add(g, h)) == ProductIsoValue{x.m + y.m, x.r * y.r} &&
                 (G.leq(g, h, s) == OrderDecision::Leq) == lex_leq(x, y);
        }
        iso = "G_L ≅ Z ×lex Q+ (desk-scale model of Z ×lex R+)";
        if (!ok) {
            iso += " FAILED on the sampled classes";
            code = kFail;
        }
    } else if (is_mv_algebra(*a)) {
        iso = "MV-algebra; S(L) = 0";
        if (a->is_finite() && a->is_chain()) {
            bool ok = true;
            const auto data = lukasiewicz_data(a, ok);
            if (!data.empty())
                iso += "; " + data;
            if (!ok)
                code = kFail;
        }
    }
    if (!iso.empty())
        std::cout << "classification: " << iso << "\n";

    std::cout << "sample classes:\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(5, sample.size()); ++i) {
        std::cout << "  " << render(sample[i]);
        if (a->is_chain())
            std::cout << " = " << render_canonical(chain_canonical(sample[i]), *a);
        if (godel)
            std::cout << "  n = " << godel_to_int(sample[i]);
        if (product)
            std::cout << "  " << render(product_iso(sample[i]));
        std::cout << "\n";
    }
    std::cout << "undecided: " << unknown << "\n";
    return code;
}

int cmd_gamma(const std::string& desc, std::size_t budget, const Options& o) {
    const auto A = gamma_interval(parse_lgroup(desc));
    const auto report = validate_bl_axioms(*A, {budget, o.seed});
    std::cout << "group: " << A->group()->name() << "\nunit: " << A->group()->render(A->group()->unit()) << "\n";
    if (A->is_finite())
        std::cout << write_blalg(*A);
    else
        std::cout << "interval: infinite\nseed: " << o.seed << "\n";
    std::cout << "MV-algebra: " << (report.ok() && is_mv_algebra(*A) ? "yes" : "no") << " ("
              << (report.exhaustive ? "exhaustive" : "sampled") << ", " << report.triples << " triples)\n";
    return report.ok() ? kPass : kFail;
}

int cmd_homs(const std::string& from, const std::string& to, std::size_t cap, const Options& o) {
    const auto A = resolve_algebra(from, o.denominator_cap);
    const auto B = resolve_algebra(to, o.denominator_cap);
    const auto homs = enumerate_homs(A, B, cap);
    std::cout << "Hom(" << A->name() << ", " << B->name() << "): " << homs.size() << " morphism"
              << (homs.size() == 1 ? "" : "s") << "\n";
    int code = kPass;
    for (std::size_t i = 0; i < homs.size(); ++i) {
        const auto c = check_two_valued_collapse(homs[i]);
        std::cout << "  f" << i + 1 << ": " << render_table(homs[i]) << "\n      collapse (a <= ~a to 0, a >= ~a to 1): ";
        if (!c.applies) {
            std::cout << "not applicable\n";
        } else if (c.holds) {
            std::cout << "holds\n";
        } else {
            std::cout << "FAILS at " << set_of(*A, c.witness) << "\n";
            code = kFail;
        }
    }
    return code;
}

GeneratorConfig suite_config(std::size_t sizes, std::size_t samples, const Options& o) {
    GeneratorConfig c;
    c.max_chain_size = sizes;
    if (samples)
        c.element_samples = samples;
    c.seed = o.seed;
    c.denominator_cap = o.denominator_cap;
    c.check();
    return c;
}

std::vector<AlgebraPtr> pick_corpus(const Corpus& c, const std::string& which) {
    if (which == "chains")
        return c.chains;
    if (which == "finite")
        return c.finite();
    if (which == "all")
        return c.all();
    throw ParseError("unknown corpus '" + which + "' (chains, finite or all)");
}

int cmd_suite(std::vector<std::string> ids, std::size_t sizes, std::size_t samples, const std::string& corpus_name,
              const std::string& json_path, bool timing, const Options& o) {
    const bool everything = ids.size() == 1 && ids.front() == "all";
    if (everything)
        ids = suite_ids();
    for (const auto& id : ids)
        (void)suite_title(id);
    const auto config = suite_config(sizes, samples, o);
    const auto corpus = pick_corpus(make_corpus(config), corpus_name);
    std::cout << "seed: " << o.seed << "\ncorpus: " << corpus.size() << " algebras (chains up to size " << sizes
              << ", " << corpus_name << ")\n";
    std::vector<SuiteReport> reports;
    for (const auto& id : ids) {
        reports.push_back(run_suite(id, corpus, config));
        std::cout << reports.back().render_text(timing);
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out)
            throw std::runtime_error("cannot write '" + json_path + "'");
        out << "[";
        for (std::size_t i = 0; i < reports.size(); ++i)
            out << (i ? ",\n" : "\n") << reports[i].to_json(timing);
        out << "\n]\n";
    }
    bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    if (everything) {
        const auto v = summarize(reports);
        std::cout << v.render();
        ok = v.pass;
    } else {
        std::cout << "summary: " << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? kPass : kFail;
}

int cmd_counterexample(const std::string& formula, const std::vector<std::string>& on, std::size_t sizes,
                       std::size_t samples, const Options& o) {
    std::vector<AlgebraPtr> corpus;
    if (on.empty()) {
        const auto config = suite_config(sizes, samples, o);
        corpus = make_corpus(config).all();
    } else {
        for (const auto& s : on)
            corpus.push_back(resolve_algebra(s, o.denominator_cap));
    }
    const auto r = find_counterexample(formula, corpus, samples, o.seed);
    std::cout << "seed: " << o.seed << "\n" << r.render() << "\n";
    return r.found ? kFail : kPass;
}

int cmd_export(const std::string& spec, const Options& o) {
    std::cout << write_blalg(*resolve_algebra(spec, o.denominator_cap));
    return kPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"BL-algebras, good sequences and their Chang l-groups"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--seed", o.seed, "Seed for every random choice")->capture_default_str();
    app.add_option("--denominator-cap", o.denominator_cap, "Largest denominator sampled on rational chains")
        ->capture_default_str();

    std::string alg, alg2, strategy = "auto", desc, json_path, corpus_name = "all", formula;
    std::size_t budget = 1000, max_len = 3, bound = 0, samples = 200, sizes = 5, cap = kHomCarrierCap,
                suite_samples = 0, search_samples = 10000;
    bool first_not_top = false, timing = false;
    std::vector<std::string> ids, on;
    int code = kUsage;

    auto* validate = app.add_subcommand("validate", "Check the BL axioms (exit 1 on failure)");
    validate->add_option("algebra", alg, "Builtin name or blalg v1 file")->required();
    validate->add_option("--budget", budget, "Sampled triples on infinite carriers")->capture_default_str();
    validate->callback([&] { code = cmd_validate(alg, budget, o); });

    auto* center = app.add_subcommand("mv-center", "Print the MV-center {~x}");
    center->add_option("algebra", alg)->required();
    center->callback([&] { code = cmd_mv_center(alg, o); });

    auto* seqs = app.add_subcommand("good-seqs", "List the good sequences of bounded support");
    seqs->add_option("algebra", alg)->required();
    seqs->add_option("--max-len", max_len)->capture_default_str();
    seqs->add_flag("--first-not-top", first_not_top, "Leave out sequences starting with 1");
    seqs->callback([&] { code = cmd_good_seqs(alg, max_len, first_not_top, o); });

    auto* chang = app.add_subcommand("chang", "Describe the Chang l-group of an algebra");
    chang->add_option("algebra", alg)->required();
    chang->add_option("--strategy", strategy, "auto, cancellative, chain or bounded")
        ->check(CLI::IsMember({"auto", "cancellative", "chain", "bounded"}))
        ->capture_default_str();
    chang->add_option("--bound", bound, "Support bound for the bounded strategy (0: default)");
    chang->add_option("--samples", samples, "Random classes examined")->capture_default_str();
    chang->callback([&] { code = cmd_chang(alg, strategy, bound, samples, o); });

    auto* gamma = app.add_subcommand("gamma", "The MV-algebra [0, u] of a unital l-group");
    gamma->add_option("group", desc, "Group descriptor, e.g. \"Z(u=3)\"")->required();
    gamma->add_option("--budget", budget)->capture_default_str();
    gamma->callback([&] { code = cmd_gamma(desc, budget, o); });

    auto* suite = app.add_subcommand("suite", "Run verification suites S2..S10, or all");
    suite->add_option("ids", ids, "Suite ids, or 'all'")->required();
    suite->add_option("--sizes", sizes, "Largest generated chain")->capture_default_str();
    suite->add_option("--samples", suite_samples, "Element tuples per property on infinite carriers");
    suite->add_option("--corpus", corpus_name, "chains, finite or all")->capture_default_str();
    suite->add_option("--json", json_path, "Also write the reports as JSON");
    suite->add_flag("--timing", timing, "Print elapsed times (output is then not byte-stable)");
    suite->callback([&] { code = cmd_suite(ids, sizes, suite_samples, corpus_name, json_path, timing, o); });

    auto* homs = app.add_subcommand("homs", "Enumerate BL-morphisms between finite algebras");
    homs->add_option("from", alg)->required();
    homs->add_option("to", alg2)->required();
    homs->add_option("--cap", cap, "Largest carrier accepted")->capture_default_str();
    homs->callback([&] { code = cmd_homs(alg, alg2, cap, o); });

    auto* search = app.add_subcommand("counterexample", "Search the corpus for a failing assignment");
    search->add_option("formula", formula, "e.g. \"x + y = x + z ; x * y = x * z => y = z\"")->required();
    search->add_option("--on", on, "Algebras to search instead of the generated corpus");
    search->add_option("--sizes", sizes)->capture_default_str();
    search->add_option("--samples", search_samples, "Assignments per infinite algebra")->capture_default_str();
    search->callback([&] { code = cmd_counterexample(formula, on, sizes, search_samples, o); });

    auto* exp = app.add_subcommand("export", "Write a finite algebra in blalg v1 format");
    exp->add_option("algebra", alg)->required();
    exp->callback([&] { code = cmd_export(alg, o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int r = app.exit(e);
        return r == 0 ? kPass : kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return code;
}
