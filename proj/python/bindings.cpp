// Python bindings. Elements cross the boundary as their rendered text.

#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blchang/blalg_io.hpp"
#include "blchang/builtins.hpp"
#include "blchang/chang_group.hpp"
#include "blchang/errors.hpp"
#include "blchang/lgroups.hpp"
#include "blchang/props.hpp"
#include "blchang/structure.hpp"
#include "blchang/validate.hpp"

namespace py = pybind11;
using namespace blchang;

namespace {

struct PyAlgebra {
    AlgebraPtr a;

    Elt elt(const std::string& s) const { return a->parse_element(s); }
    std::string str(const Elt& x) const { return a->render(x); }

    std::vector<std::string> elements() const {
        std::vector<std::string> out;
        for (const auto& x : a->elements())
            out.push_back(str(x));
        return out;
    }
};

using BinOp = Elt (Algebra::*)(const Elt&, const Elt&) const;

template <BinOp op>
std::string binary(const PyAlgebra& p, const std::string& x, const std::string& y) {
    return p.str(((*p.a).*op)(p.elt(x), p.elt(y)));
}

Strategy strategy_of(const ChangGroup& G, const std::string& name, std::size_t bound) {
    if (name == "cancellative")
        return Strategy::cancellative();
    if (name == "chain")
        return Strategy::chain_search();
    if (name == "bounded")
        return Strategy::bounded(bound);
    if (name != "auto")
        throw ParseError("unknown strategy '" + name + "'");
    return G.cancellative_licensed() ? Strategy::cancellative()
           : G.chain_search_applies() ? Strategy::chain_search()
                                      : Strategy::bounded(bound);
}

struct PyChang {
    PyAlgebra alg;
    std::shared_ptr<ChangGroup> G;

    explicit PyChang(const PyAlgebra& p) : alg(p), G(std::make_shared<ChangGroup>(p.a)) {}

    GroupElt make(const std::string& pos, const std::string& neg) const {
        return G->make(parse_goodseq(alg.a, pos), parse_goodseq(alg.a, neg));
    }
};

py::object loads(const std::string& json) { return py::module_::import("json").attr("loads")(json); }

} // namespace

PYBIND11_MODULE(blchang, m) {
    m.doc() = "BL-algebras, good sequences and their Chang l-groups";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UnsupportedShape>(m, "UnsupportedShape", PyExc_RuntimeError);
    py::register_exception<StrategyMisuse>(m, "StrategyMisuse", PyExc_RuntimeError);

    py::class_<PyAlgebra>(m, "Algebra")
        .def_property_readonly("name", [](const PyAlgebra& p) { return p.a->name(); })
        .def_property_readonly("is_finite", [](const PyAlgebra& p) { return p.a->is_finite(); })
        .def_property_readonly("is_chain", [](const PyAlgebra& p) { return p.a->is_chain(); })
        .def_property_readonly("is_mv", [](const PyAlgebra& p) { return is_mv_algebra(*p.a); })
        .def("__len__", [](const PyAlgebra& p) { return p.a->size(); })
        .def("__repr__", [](const PyAlgebra& p) { return "<Algebra " + p.a->name() + ">"; })
        .def("elements", &PyAlgebra::elements)
        .def_property_readonly("top", [](const PyAlgebra& p) { return p.str(p.a->top()); })
        .def_property_readonly("bottom", [](const PyAlgebra& p) { return p.str(p.a->bottom()); })
        .def("otimes", &binary<&Algebra::otimes>)
        .def("imp", &binary<&Algebra::imp>)
        .def("meet", &binary<&Algebra::meet>)
        .def("join", &binary<&Algebra::join>)
        .def("pseudo_add", &binary<&Algebra::pseudo_add>)
        .def("add", &binary<&Algebra::add>)
        .def("neg", [](const PyAlgebra& p, const std::string& x) { return p.str(p.a->neg(p.elt(x))); })
        .def("leq", [](const PyAlgebra& p, const std::string& x, const std::string& y) {
            return p.a->leq(p.elt(x), p.elt(y));
        })
        .def("mv_center",
             [](const PyAlgebra& p) {
                 const auto c = mv_center(p.a);
                 return PyAlgebra{c};
             })
        .def(
            "validate",
            [](const PyAlgebra& p, std::size_t budget, std::uint64_t seed) {
                const auto r = validate_bl_axioms(*p.a, {budget, seed});
                py::dict d;
                d["ok"] = r.ok();
                d["exhaustive"] = r.exhaustive;
                d["triples"] = r.triples;
                py::list failing;
                for (const auto& c : r.checks)
                    if (!c.passed()) {
                        std::vector<std::string> w;
                        for (const auto& x : c.witness)
                            w.push_back(p.str(x));
                        failing.append(py::dict(py::arg("id") = c.id, py::arg("failures") = c.failures,
                                                py::arg("witness") = w));
                    }
                d["failing"] = failing;
                d["report"] = r.render(*p.a);
                return d;
            },
            py::arg("budget") = 1000, py::arg("seed") = 1)
        .def("good_seqs",
             [](const PyAlgebra& p, std::size_t max_len, bool first_not_top) {
                 std::vector<std::string> out;
                 for (const auto& s : enumerate_good_seqs(p.a, max_len, first_not_top))
                     out.push_back(render(s));
                 return out;
             },
             py::arg("max_len") = 3, py::arg("first_not_top") = false)
        .def("seq_add",
             [](const PyAlgebra& p, const std::string& a, const std::string& b) {
                 return render(gs_add(parse_goodseq(p.a, a), parse_goodseq(p.a, b)));
             })
        .def("to_blalg", [](const PyAlgebra& p) { return write_blalg(*p.a); });

    m.def(
        "algebra", [](const std::string& spec, std::uint64_t cap) { return PyAlgebra{resolve_algebra(spec, cap)}; },
        py::arg("spec"), py::arg("denominator_cap") = StandardChain::kDefaultDenominatorCap,
        "A builtin algebra (lukasiewicz:4, godel:q, tower(L3,L2), ...) or a blalg file.");
    m.def(
        "parse_blalg",
        [](const std::string& text, const std::string& name) { return PyAlgebra{parse_blalg(text, name)}; },
        py::arg("text"), py::arg("name") = "table");
    m.def("gamma", [](const std::string& group) { return PyAlgebra{gamma_interval(parse_lgroup(group))}; },
          "The MV-algebra [0, u] of a unital l-group descriptor such as \"Z(u=3)\".");

    py::class_<GroupElt>(m, "GroupElt")
        .def("__str__", [](const GroupElt& g) { return render(g); })
        .def("__repr__", [](const GroupElt& g) { return "<GroupElt " + render(g) + ">"; })
        .def("__eq__", [](const GroupElt& g, const GroupElt& h) { return g == h; })
        .def_property_readonly("pos", [](const GroupElt& g) { return render(g.pos()); })
        .def_property_readonly("neg", [](const GroupElt& g) { return render(g.neg()); });

    py::class_<PyChang>(m, "ChangGroup")
        .def(py::init<const PyAlgebra&>())
        .def_property_readonly("cancellative",
                               [](const PyChang& c) { return std::string(to_string(c.G->cancellative_type().verdict)); })
        .def_property_readonly("chain_search_applies", [](const PyChang& c) { return c.G->chain_search_applies(); })
        .def("make", &PyChang::make, py::arg("pos"), py::arg("neg") = "(0)")
        .def("zero", [](const PyChang& c) { return c.G->zero(); })
        .def("unit", [](const PyChang& c) { return c.G->unit(); })
        .def("add", [](const PyChang& c, const GroupElt& g, const GroupElt& h) { return c.G->add(g, h); })
        .def("neg", [](const PyChang& c, const GroupElt& g) { return c.G->neg(g); })
        .def("join", [](const PyChang& c, const GroupElt& g, const GroupElt& h) { return c.G->join(g, h); })
        .def("meet", [](const PyChang& c, const GroupElt& g, const GroupElt& h) { return c.G->meet(g, h); })
        .def(
            "eq",
            [](const PyChang& c, const GroupElt& g, const GroupElt& h, const std::string& s, std::size_t bound) {
                return std::string(to_string(c.G->eq(g, h, strategy_of(*c.G, s, bound))));
            },
            py::arg("g"), py::arg("h"), py::arg("strategy") = "auto", py::arg("bound") = 0)
        .def(
            "leq",
            [](const PyChang& c, const GroupElt& g, const GroupElt& h, const std::string& s, std::size_t bound) {
                return std::string(to_string(c.G->leq(g, h, strategy_of(*c.G, s, bound))));
            },
            py::arg("g"), py::arg("h"), py::arg("strategy") = "auto", py::arg("bound") = 0)
        .def("in_S", [](const PyChang& c, const GroupElt& g) { return c.G->in_S(g); })
        .def("canonical",
             [](const PyChang& c, const GroupElt& g) { return render_canonical(chain_canonical(g), *c.alg.a); })
        .def("godel_to_int", [](const PyChang&, const GroupElt& g) { return godel_to_int(g); })
        .def("product_iso", [](const PyChang&, const GroupElt& g) {
            const auto v = product_iso(g);
            return py::make_tuple(v.m, to_string(v.r));
        });

    m.def("suite_ids", &suite_ids);
    m.def(
        "run_suite",
        [](const std::string& id, std::size_t sizes, std::uint64_t seed, std::size_t samples) {
            GeneratorConfig c;
            c.max_chain_size = sizes;
            c.seed = seed;
            c.element_samples = samples;
            const auto corpus = make_corpus(c).all();
            std::string json;
            {
                py::gil_scoped_release release;
                json = run_suite(id, corpus, c).to_json(false);
            }
            return loads(json);
        },
        py::arg("id"), py::arg("sizes") = 5, py::arg("seed") = 1, py::arg("samples") = 10000,
        "Runs one verification suite and returns its report as a dict.");
    m.def(
        "counterexample",
        [](const std::string& formula, const std::vector<PyAlgebra>& on, std::size_t samples,
           std::uint64_t seed) -> py::object {
            std::vector<AlgebraPtr> corpus;
            for (const auto& p : on)
                corpus.push_back(p.a);
            const auto r = find_counterexample(formula, corpus, samples, seed);
            if (!r.found)
                return py::none();
            py::dict assignment;
            for (const auto& [k, v] : r.assignment)
                assignment[py::str(k)] = v;
            return py::dict(py::arg("algebra") = r.algebra, py::arg("assignment") = assignment,
                            py::arg("cases") = r.cases);
        },
        py::arg("formula"), py::arg("on"), py::arg("samples") = 10000, py::arg("seed") = 1);
    m.def(
        "homs",
        [](const PyAlgebra& from, const PyAlgebra& to) {
            py::list out;
            for (const auto& f : enumerate_homs(from.a, to.a)) {
                const auto c = check_two_valued_collapse(f);
                std::vector<std::string> images;
                for (const auto& y : f.table())
                    images.push_back(to.str(y));
                out.append(py::dict(py::arg("images") = images, py::arg("collapse_applies") = c.applies,
                                    py::arg("collapse_holds") = c.holds));
            }
            return out;
        },
        "Every BL-morphism between two finite algebras, with the two-valued collapse check.");
    m.def("no_difference_proof", [] { return no_difference_case_split().render(); });
}
