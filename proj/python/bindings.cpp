#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "syllogic/io.hpp"
#include "syllogic/opposition.hpp"
#include "syllogic/proof.hpp"
#include "syllogic/report.hpp"
#include "syllogic/starb.hpp"

namespace py = pybind11;
using namespace syllogic;

namespace {

Reading readingFrom(const std::string& name)
{
    if (name == "direct")
        return Reading::Direct;
    if (name == "literal")
        return Reading::DerivedLiteral;
    if (name == "charitable")
        return Reading::DerivedCharitable;
    throw std::invalid_argument("unknown reading: " + name);
}

Semantics semanticsFrom(const std::string& kind, bool existentialImport, const std::string& reading, bool allowEmpty)
{
    if (kind == "analytic")
        return AnalyticSemantics{{existentialImport}};
    if (kind == "synthetic")
        return SyntheticSemantics{{readingFrom(reading), allowEmpty}};
    throw std::invalid_argument("unknown semantics: " + kind);
}

std::string checkProof(const std::string& script, bool axiom6, bool axiom7, bool axiom8, bool definitional)
{
    AxiomSet ax;
    ax.axiom6 = axiom6;
    ax.axiom7 = axiom7;
    ax.axiom8 = axiom8;
    ax.definitional = definitional;
    const ProofVerdict v = checkDerivation(parseProofScript(script), ax);
    Json j;
    j["ok"] = v.ok;
    j["rejected_line"] = v.rejectedLine ? Json(*v.rejectedLine) : Json(nullptr);
    j["reason"] = v.reason;
    j["conclusion"] = v.conclusion ? Json(render(*v.conclusion)) : Json(nullptr);
    j["schemas"] = v.schemasUsed;
    return j.dump();
}

std::string catalogJson(unsigned bound, bool allowEmpty)
{
    Json out = Json::array();
    for (const auto& r : runCatalog(bound, {Reading::Direct, allowEmpty})) {
        Json e;
        e["id"] = r.entry.id;
        e["source"] = sourceName(r.entry.source);
        e["formula"] = render(r.entry.schema.body());
        e["verdict"] = verdictToJson(r.verdict);
        out.push_back(e);
    }
    return out.dump();
}

std::string casesJson(const starb::UltraElement& x)
{
    Json out = Json::array();
    for (const auto& c : starb::classifyCases(x).cases)
        out.push_back({{"number", c.number},
                       {"hypothesis", c.hypothesis},
                       {"conclusion", c.conclusion},
                       {"hypothesis_holds", c.hypothesisHolds},
                       {"conclusion_holds", c.conclusionHolds}});
    return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Bounded model checking for categorical propositions.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ScriptError>(m, "ScriptError", PyExc_ValueError);
    py::register_exception<ModelFormatError>(m, "ModelFormatError", PyExc_ValueError);
    py::register_exception<BoundError>(m, "BoundError", PyExc_ValueError);
    py::register_exception<SemanticsError>(m, "SemanticsError", PyExc_ValueError);

    m.def("normalize", [](const std::string& text) { return render(parse(text)); }, py::arg("formula"));
    m.def("is_tautology", [](const std::string& text) { return isTautology(parse(text)); }, py::arg("formula"));

    m.def(
        "evaluate",
        [](const std::string& formula, const std::string& model, const std::string& semantics, bool existentialImport,
           const std::string& reading, bool allowEmpty) {
            return evaluate(semanticsFrom(semantics, existentialImport, reading, allowEmpty), modelFromText(model),
                            parse(formula));
        },
        py::arg("formula"), py::arg("model_json"), py::arg("semantics") = "synthetic",
        py::arg("existential_import") = true, py::arg("reading") = "direct", py::arg("allow_empty") = false);

    m.def(
        "decide",
        [](const std::string& formula, unsigned bound, const std::string& semantics, bool existentialImport,
           const std::string& reading, bool allowEmpty) {
            const Semantics s = semanticsFrom(semantics, existentialImport, reading, allowEmpty);
            return verdictToJson(decideValidity(parse(formula), s, bound)).dump();
        },
        py::arg("formula"), py::arg("bound"), py::arg("semantics") = "synthetic",
        py::arg("existential_import") = true, py::arg("reading") = "direct", py::arg("allow_empty") = false);

    m.def(
        "classify",
        [](const std::string& phi, const std::string& psi, const std::vector<std::string>& metavariables, unsigned bound,
           const std::string& semantics, bool existentialImport, const std::string& reading, bool allowEmpty) {
            const Semantics s = semanticsFrom(semantics, existentialImport, reading, allowEmpty);
            return relationToJson(
                       classifyPair(Schema::fromText(phi, metavariables), Schema::fromText(psi, metavariables), s, bound))
                .dump();
        },
        py::arg("phi"), py::arg("psi"), py::arg("metavariables") = std::vector<std::string>{"S", "P"},
        py::arg("bound") = 3, py::arg("semantics") = "synthetic", py::arg("existential_import") = true,
        py::arg("reading") = "direct", py::arg("allow_empty") = false);

    m.def(
        "square",
        [](const std::string& semantics, unsigned bound, bool existentialImport, const std::string& reading,
           bool allowEmpty) {
            const Semantics s = semanticsFrom(semantics, existentialImport, reading, allowEmpty);
            const SquareSpec spec = semantics == "analytic" ? analyticSquare() : syntheticSquare();
            return squareToJson(verifySquare(spec, s, bound)).dump();
        },
        py::arg("semantics") = "synthetic", py::arg("bound") = 3, py::arg("existential_import") = true,
        py::arg("reading") = "direct", py::arg("allow_empty") = false);

    m.def("catalog", &catalogJson, py::arg("bound") = 3, py::arg("allow_empty") = false);

    m.def("check_proof", &checkProof, py::arg("script"), py::arg("axiom6") = false, py::arg("axiom7") = false,
          py::arg("axiom8") = false, py::arg("definitional") = true);

    m.def(
        "verify_paper",
        [](unsigned modelBound, unsigned atomCount) {
            return runVerifyPaper({modelBound, atomCount}).toJson().dump();
        },
        py::arg("model_bound") = 3, py::arg("atom_count") = 2);

    py::class_<starb::UltraElement>(m, "UltraElement")
        .def(py::init([](unsigned atoms, starb::Element f0, starb::Element f1) {
                 const starb::BooleanAlgebra alg(atoms);
                 if (!alg.contains(f0) || !alg.contains(f1))
                     throw std::invalid_argument("value outside the algebra");
                 return starb::UltraElement{atoms, f0, f1};
             }),
             py::arg("atoms"), py::arg("f0"), py::arg("f1"))
        .def_readonly("atoms", &starb::UltraElement::atoms)
        .def_readonly("f0", &starb::UltraElement::f0)
        .def_readonly("f1", &starb::UltraElement::f1)
        .def("is_standard", &starb::UltraElement::isStandard)
        .def("__eq__", [](const starb::UltraElement& a, const starb::UltraElement& b) { return a == b; })
        .def("__hash__", [](const starb::UltraElement& a) { return (a.atoms << 16) ^ (a.f0 << 8) ^ a.f1; })
        .def("__repr__", [](const starb::UltraElement& a) { return starb::notation(a); });

    m.def(
        "standard", [](unsigned atoms, starb::Element value) { return starb::mkStandard(starb::BooleanAlgebra(atoms), value); },
        py::arg("atoms"), py::arg("value"));
    m.def("carrier", [](unsigned atoms) { return starb::carrier(starb::BooleanAlgebra(atoms)); }, py::arg("atoms"));
    m.def("fneg", &starb::fneg);
    m.def("neg", &starb::neg);
    m.def("inf", &starb::inf);
    m.def("sup", &starb::sup);
    m.def(
        "leq",
        [](const starb::UltraElement& x, const starb::UltraElement& y, bool fiat) {
            return starb::leq(x, y, fiat ? starb::OrderMode::PaperFiat : starb::OrderMode::Pointwise);
        },
        py::arg("x"), py::arg("y"), py::arg("fiat") = false);
    m.def("classify_cases", &casesJson);
    m.def("conventional_condition", &starb::conventionalCondition);
    m.def("synthetic_condition", &starb::syntheticCondition);
    m.def(
        "verify_two_squares",
        [](unsigned maxAtoms) {
            const auto rep = starb::verifyTwoSquaresUpTo(maxAtoms);
            return py::make_tuple(rep.pass, rep.findings);
        },
        py::arg("max_atoms") = 3);
}
