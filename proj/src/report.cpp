#include "syllogic/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "syllogic/proof.hpp"
#include "syllogic/starb.hpp"

namespace syllogic {

namespace {

const char* passFail(bool ok) { return ok ? "pass" : "fail"; }

SyntheticOptions directNonempty() { return {Reading::Direct, false}; }

Json catalogToJson(const std::vector<CatalogResult>& results, const std::string& semantics)
{
    Json arr = Json::array();
    for (const auto& r : results) {
        Json j;
        j["id"] = r.entry.id;
        j["schema"] = render(r.entry.schema.body());
        j["source"] = sourceName(r.entry.source);
        j["citation"] = r.entry.citation;
        j["semantics"] = semantics;
        j["expected"] = r.entry.expectValid ? "valid" : "counterexample";
        const Json v = verdictToJson(r.verdict);
        for (const auto& [k, val] : v.items())
            j[k] = val;
        j["outcome"] = r.outcome;
        arr.push_back(std::move(j));
    }
    return arr;
}

Json elementJson(const starb::UltraElement& x)
{
    Json j;
    j["element"] = starb::notation(x);
    j["f0"] = x.f0;
    j["f1"] = x.f1;
    return j;
}

Json hypothesisJson(const starb::HypothesisSweep& s)
{
    Json j;
    j["hypothesis"] = s.hypothesis;
    j["satisfying"] = s.satisfying;
    j["nonstandard_satisfying"] = s.nonstandardSatisfying;
    Json fails = Json::array();
    for (const auto& x : s.relationFailures)
        fails.push_back(starb::notation(x));
    j["relation_failures"] = std::move(fails);
    return j;
}

struct Builder {
    PaperReport rep;

    void expect(std::string id, std::string description, std::string expected, std::string observed,
                std::string status)
    {
        rep.expectations.push_back(
            {std::move(id), std::move(description), std::move(expected), std::move(observed), std::move(status)});
    }

    void squares(unsigned bound)
    {
        const auto an = verifySquare(analyticSquare(), AnalyticSemantics{{true}}, bound);
        rep.sections["analytic_square"] = squareToJson(an);
        expect("analytic-square", "conventional square, existential import on", "all six relations hold",
               an.pass ? "all six relations hold" : "relation mismatch", passFail(an.pass));

        const auto off = decideAnalyticValidity(parse("S a P -> S i P"), bound, {false});
        bool emptyS = false;
        if (off.counterexample) {
            const auto& m = std::get<AnalyticModel>(*off.counterexample);
            const auto& s = m.ext.at("S");
            emptyS = std::none_of(s.begin(), s.end(), [](bool b) { return b; });
        }
        Json offJ;
        offJ["formula"] = "S a P -> S i P";
        offJ["verdict"] = verdictToJson(off);
        rep.sections["analytic_import_off"] = std::move(offJ);
        expect("analytic-import-off", "without import, a => i fails", "counterexample with empty S",
               off.valid ? "valid" : (emptyS ? "counterexample with empty S" : "counterexample, S nonempty"),
               passFail(!off.valid && emptyS));

        const auto syn = verifySquare(syntheticSquare(), SyntheticSemantics{directNonempty()}, bound);
        rep.sections["synthetic_square"] = squareToJson(syn);
        expect("synthetic-square", "synthetic square, direct reading, nonempty universe", "all six relations hold",
               syn.pass ? "all six relations hold" : "relation mismatch", passFail(syn.pass));

        const auto empty = verifySquare(syntheticSquare(), SyntheticSemantics{{Reading::Direct, true}}, bound);
        rep.sections["synthetic_square_empty"] = squareToJson(empty);
        bool aiBroken = false;
        for (const auto& p : empty.pairs)
            if (p.expected.first == "a" && p.expected.second == "i")
                aiBroken = !p.pass && p.observed.bothTrue && modelSize(*p.observed.bothTrue) == 0;
        expect("synthetic-square-empty", "empty universe admitted: a-i contrariety fails",
               "a-i both true at U={}", aiBroken ? "a-i both true at U={}" : "not observed", passFail(aiBroken));

        Json derived = Json::array();
        const unsigned dBound = std::min(bound, kMaxDerivedUniverse);
        for (Reading r : {Reading::DerivedLiteral, Reading::DerivedCharitable})
            derived.push_back(squareToJson(verifySquare(syntheticSquare(), SyntheticSemantics{{r, false}}, dBound)));
        rep.sections["synthetic_square_derived"] = std::move(derived);
    }

    void catalogs(unsigned bound)
    {
        const auto results = runCatalog(bound, directNonempty());
        rep.sections["catalog"] = catalogToJson(results, describe(Semantics{SyntheticSemantics{directNonempty()}}));
        for (const auto& r : results) {
            std::string observed = r.verdict.valid ? "valid up to " + std::to_string(bound)
                                                   : "counterexample of size " +
                                                         std::to_string(modelSize(*r.verdict.counterexample));
            if (r.outcome == "inconclusive")
                observed = "no counterexample found up to bound " + std::to_string(bound);
            std::string expected = r.entry.expectValid
                                       ? "valid"
                                       : "counterexample of size " + std::to_string(*r.entry.expectedCounterexampleSize);
            expect(r.entry.id, render(r.entry.schema.body()), expected, observed, r.outcome);
        }

        const SyntheticOptions withEmpty{Reading::Direct, true};
        const auto emptyResults = runCatalog(bound, withEmpty);
        rep.sections["catalog_empty"] = catalogToJson(emptyResults, describe(Semantics{SyntheticSemantics{withEmpty}}));
        bool t19 = false;
        for (const auto& r : emptyResults)
            if (r.entry.id == "T19")
                t19 = !r.verdict.valid && modelSize(*r.verdict.counterexample) == 0;
        expect("T19-empty", "empty universe admitted: ~(S sa P & S si P)", "counterexample U={}",
               t19 ? "counterexample U={}" : "not observed", passFail(t19));
    }

    void starbCases(unsigned atoms)
    {
        const starb::BooleanAlgebra alg(atoms);
        Json elems = Json::array();
        bool consistent = true, standardBounds = true;
        for (const auto& x : starb::carrier(alg)) {
            const auto cr = starb::classifyCases(x);
            consistent = consistent && cr.consistent();
            const auto lo = starb::inf(x, starb::fneg(x));
            const auto hi = starb::sup(x, starb::fneg(x));
            standardBounds = standardBounds && lo.isStandard() && hi.isStandard();
            Json ej = elementJson(x);
            Json held = Json::array();
            for (const auto& c : cr.cases)
                if (c.hypothesisHolds)
                    held.push_back(c.number);
            ej["cases_held"] = std::move(held);
            ej["conclusions_ok"] = cr.consistent();
            ej["inf_with_fneg"] = starb::notation(lo);
            ej["sup_with_fneg"] = starb::notation(hi);
            elems.push_back(std::move(ej));
        }
        Json j;
        j["atoms"] = atoms;
        j["order"] = "pointwise";
        j["elements"] = std::move(elems);
        j["consistent"] = consistent;
        j["inf_sup_with_fneg_standard"] = standardBounds;
        rep.sections["starb_cases"] = std::move(j);
        expect("starb-cases", "cases 1-12: every holding hypothesis meets its stated bound", "no violation",
               consistent ? "no violation" : "violation", passFail(consistent));
        expect("starb-standard-bounds", "inf and sup of [f], [f¬] are standard", "standard for all x",
               standardBounds ? "standard for all x" : "nonstandard value found", passFail(standardBounds));
    }

    void proposition1(unsigned atoms)
    {
        const auto p = starb::verifyTwoSquaresUpTo(atoms);
        Json sweeps = Json::array();
        for (const auto& s : p.sweeps) {
            Json j;
            j["atoms"] = s.atoms;
            j["elements"] = s.elementCount;
            j["conventional"] = hypothesisJson(s.conventional);
            j["conventional_caption"] = hypothesisJson(s.conventionalCaption);
            j["conventional_proof_bullet"] = hypothesisJson(s.conventionalProof);
            j["synthetic"] = hypothesisJson(s.synthetic);
            j["synthetic_caption"] = hypothesisJson(s.syntheticCaption);
            j["synthetic_proof_bullet"] = hypothesisJson(s.syntheticProof);
            j["conventional_caption_equivalent"] = s.conventionalCaptionEquivalent;
            j["synthetic_caption_equivalent"] = s.syntheticCaptionEquivalent;
            j["synthetic_forces_fixpoint"] = s.syntheticForcesFixpoint;
            j["conventional_realized_nonstandard"] = s.conventionalRealizedNonstandard;
            j["pass"] = s.pass;
            sweeps.push_back(std::move(j));
        }
        Json j;
        j["sweeps"] = std::move(sweeps);
        Json findings = Json::array();
        for (const auto& f : p.findings)
            findings.push_back(f);
        j["findings"] = std::move(findings);
        j["pass"] = p.pass;
        rep.sections["proposition1"] = std::move(j);

        bool realized = true, forces = true;
        for (const auto& s : p.sweeps) {
            realized = realized && s.conventionalRealizedNonstandard;
            forces = forces && s.syntheticForcesFixpoint;
        }
        expect("two-squares", "both algebraic squares hold under their hypotheses", "all relations hold",
               p.pass ? "all relations hold" : "relation failure", passFail(p.pass));
        expect("two-squares-realizability", "conventional hypothesis realized by nonstandard elements; synthetic "
               "hypothesis forces [f] = [f¬]", "realized; forced",
               std::string(realized ? "realized" : "not realized") + "; " + (forces ? "forced" : "not forced"),
               passFail(realized && forces));
    }

    void matrix(unsigned atoms)
    {
        const starb::MatrixLogic ml{starb::BooleanAlgebra(atoms)};
        const auto elems = starb::carrier(ml.algebra);
        const auto top = ml.top();
        bool dn = true, mp = true, impTop = true, order = true;
        for (const auto& x : elems) {
            dn = dn && ml.negation(ml.negation(x)) == x;
            impTop = impTop && ml.implication(top, x) == x;
            for (const auto& y : elems) {
                const auto imp = ml.implication(x, y);
                if (ml.designated(x) && ml.designated(imp))
                    mp = mp && ml.designated(y);
                order = order && (ml.designated(imp) == starb::leq(x, y));
            }
        }
        Json j;
        j["atoms"] = atoms;
        j["double_negation"] = dn;
        j["modus_ponens"] = mp;
        j["implication_from_top"] = impTop;
        j["designation_matches_order"] = order;
        rep.sections["matrix"] = std::move(j);
        const bool all = dn && mp && impTop && order;
        expect("matrix-logic", "double negation, modus ponens, *1 => x = x, designation matches order",
               "all hold", all ? "all hold" : "property failure", passFail(all));
    }

    void bridge(unsigned atoms)
    {
        const starb::BooleanAlgebra alg(atoms);
        std::vector<starb::UltraElement> generators = {starb::mkStandard(alg, alg.top())};
        for (const auto& x : starb::carrier(alg))
            if (!x.isStandard() && starb::conventionalCondition(x)) {
                generators.push_back(x);
                break;
            }
        std::vector<std::pair<std::string, Formula>> rows;
        for (const char* a : {"S sa P", "S si P", "S se P", "S so P", "S a P", "S i P", "S e P", "S o P"})
            rows.emplace_back(a, parse(a));
        for (const auto& e : catalog())
            rows.emplace_back(e.id, e.schema.body());

        Json tables = Json::array();
        for (const auto& g : generators)
            for (auto column : {starb::AssignmentColumn::Primary, starb::AssignmentColumn::Alternate})
                for (bool strict : {true, false}) {
                    starb::BridgeModel bm{g, column,
                                          strict ? starb::Designation::strict() : starb::Designation::filter(g)};
                    Json t;
                    t["generator"] = starb::notation(g);
                    t["column"] = column == starb::AssignmentColumn::Primary ? "primary" : "alternate";
                    t["designation"] = strict ? "strict" : "filter(>= generator)";
                    Json sat = Json::object();
                    for (const auto& [name, f] : rows)
                        sat[name] = starb::bridgeSatisfies(bm, f);
                    t["satisfied"] = std::move(sat);
                    tables.push_back(std::move(t));
                }
        rep.sections["bridge"] = std::move(tables);
    }

    void proofs(unsigned bound)
    {
        const AxiomSet ax;  // axiom 5 + definitional schemas
        Json arr = Json::array();
        bool allOk = true, allValid = true;
        for (const auto& b : bundledDerivations()) {
            const auto pv = checkDerivation(b.derivation, ax);
            bool valid = true;
            if (pv.ok)
                for (const auto& line : b.derivation.lines)
                    valid = valid && decideSyntheticValidity(line.formula, bound, directNonempty()).valid;
            allOk = allOk && pv.ok;
            allValid = allValid && valid;
            Json j;
            j["id"] = b.id;
            j["goal"] = render(*b.derivation.goal);
            j["lines"] = b.derivation.lines.size();
            j["ok"] = pv.ok;
            if (!pv.ok)
                j["reason"] = pv.reason;
            Json used = Json::array();
            for (const auto& s : pv.schemasUsed)
                used.push_back(s);
            j["schemas"] = std::move(used);
            j["semantically_valid"] = valid;
            arr.push_back(std::move(j));
        }
        rep.sections["proof_kernel"] = std::move(arr);
        expect("proof-kernel", "bundled derivations check under axiom 5 + definitional schemas",
               "all 20 accepted", allOk ? "all 20 accepted" : "rejection", passFail(allOk));
        expect("proof-kernel-soundness", "every accepted line is valid in the synthetic semantics",
               "valid up to bound " + std::to_string(bound), allValid ? "valid" : "invalid line", passFail(allValid));
    }
};

}  // namespace

PaperReport runVerifyPaper(const PaperBounds& bounds)
{
    if (bounds.modelBound < 1 || bounds.modelBound > kMaxDirectUniverse)
        throw BoundError("model bound must be between 1 and " + std::to_string(kMaxDirectUniverse));
    if (bounds.atomCount < 1 || bounds.atomCount > 3)
        throw BoundError("atom count must be between 1 and 3");

    Builder b;
    b.rep.bounds = bounds;
    b.rep.sections = Json::object();
    b.squares(bounds.modelBound);
    b.catalogs(bounds.modelBound);
    b.starbCases(bounds.atomCount);
    b.proposition1(bounds.atomCount);
    b.matrix(bounds.atomCount);
    b.bridge(bounds.atomCount);
    b.proofs(bounds.modelBound);

    b.rep.pass = std::none_of(b.rep.expectations.begin(), b.rep.expectations.end(),
                              [](const Expectation& e) { return e.status == "fail"; });
    return std::move(b.rep);
}

Json PaperReport::toJson() const
{
    Json j;
    j["tool"] = "syllogic";
    j["version"] = kToolVersion;
    j["bounds"] = {{"model_bound", bounds.modelBound}, {"atom_count", bounds.atomCount}};
    Json ex = Json::array();
    for (const auto& e : expectations)
        ex.push_back({{"id", e.id},
                      {"description", e.description},
                      {"expected", e.expected},
                      {"observed", e.observed},
                      {"status", e.status}});
    j["expectations"] = std::move(ex);
    j["sections"] = sections;
    j["pass"] = pass;
    return j;
}

std::string PaperReport::summary() const
{
    std::size_t idW = 2, obsW = 8;
    for (const auto& e : expectations) {
        idW = std::max(idW, e.id.size());
        obsW = std::max(obsW, e.observed.size());
    }
    std::ostringstream os;
    os << "syllogic " << kToolVersion << "  model bound " << bounds.modelBound << ", atoms " << bounds.atomCount
       << "\n";
    os << std::left << std::setw(static_cast<int>(idW)) << "id" << "  " << std::setw(12) << "status"
       << "  " << "observed\n";
    for (const auto& e : expectations)
        os << std::left << std::setw(static_cast<int>(idW)) << e.id << "  " << std::setw(12) << e.status << "  "
           << e.observed << "\n";
    os << (pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

std::string displayCorner(const std::string& rendered)
{
    // "S sa P" -> "S𝔞P"; analytic "S a P" -> "SaP"
    std::istringstream is(rendered);
    std::string s, c, p;
    is >> s >> c >> p;
    static const std::map<std::string, std::string> fraktur = {
        {"sa", "𝔞"}, {"se", "𝔢"}, {"si", "𝔦"}, {"so", "𝔬"}};
    auto it = fraktur.find(c);
    return s + (it == fraktur.end() ? c : it->second) + p;
}

std::string edgeStyle(RelationKind k)
{
    switch (k) {
    case RelationKind::Contrary: return "dir=none, style=dashed";
    case RelationKind::Subcontrary: return "dir=none, style=dotted";
    case RelationKind::Contradictory: return "dir=none, style=bold";
    case RelationKind::SubalternationForward:
    case RelationKind::SubalternationBackward: return "style=solid";
    case RelationKind::Independent: return "dir=none, style=invis";
    }
    return "";
}

std::string relationLabel(RelationKind k)
{
    switch (k) {
    case RelationKind::SubalternationForward:
    case RelationKind::SubalternationBackward: return "subalternation";
    default: return relationName(k);
    }
}

// The model that refutes the expected relation.
const std::optional<Model>& offendingWitness(const PairResult& p)
{
    const auto& o = p.observed;
    switch (p.expected.kind) {
    case RelationKind::Contrary: return o.bothTrue ? o.bothTrue : o.bothFalse;
    case RelationKind::Subcontrary: return o.bothFalse ? o.bothFalse : o.bothTrue;
    case RelationKind::Contradictory: return o.bothTrue ? o.bothTrue : o.bothFalse;
    case RelationKind::SubalternationForward: return o.firstOnly ? o.firstOnly : o.secondOnly;
    case RelationKind::SubalternationBackward: return o.secondOnly ? o.secondOnly : o.firstOnly;
    case RelationKind::Independent: break;
    }
    return o.bothTrue;
}

}  // namespace

std::string emitDiagram(const SquareReport& square)
{
    std::ostringstream os;
    os << "digraph \"" << square.name << " square\" {\n";
    os << "  // semantics: " << square.semantics << ", bound " << square.bound << ", "
       << (square.pass ? "PASS" : "FAIL") << "\n";
    os << "  graph [splines=line, nodesep=2.0, ranksep=1.5];\n";
    os << "  node [shape=plaintext, fontsize=16];\n";
    os << "  edge [fontsize=10];\n";

    // synthetic layout a i / e o, analytic a e / i o
    const bool synthetic = square.name == "synthetic";
    const std::vector<std::string> top = synthetic ? std::vector<std::string>{"a", "i"}
                                                   : std::vector<std::string>{"a", "e"};
    const std::vector<std::string> bottom = synthetic ? std::vector<std::string>{"e", "o"}
                                                      : std::vector<std::string>{"i", "o"};
    for (const auto& label : {"a", "i", "e", "o"}) {
        auto it = square.corners.find(label);
        const std::string text = it == square.corners.end() ? label : displayCorner(it->second);
        os << "  " << label << " [label=\"" << text << "\"];\n";
    }
    os << "  { rank=same; " << top[0] << "; " << top[1] << "; }\n";
    os << "  { rank=same; " << bottom[0] << "; " << bottom[1] << "; }\n";

    std::vector<std::string> witnessLines;
    int witnessId = 0;
    for (const auto& p : square.pairs) {
        std::string from = p.expected.first, to = p.expected.second;
        if (p.expected.kind == RelationKind::SubalternationBackward)
            std::swap(from, to);
        os << "  " << from << " -> " << to << " [" << edgeStyle(p.expected.kind) << ", label=\""
           << relationLabel(p.expected.kind);
        if (!p.pass) {
            const auto& w = offendingWitness(p);
            std::string id = "w" + std::to_string(++witnessId);
            os << " FAIL (" << relationName(p.observed.kind) << ", witness " << id << ")\", color=red";
            witnessLines.push_back("  // " + id + ": " + (w ? describe(*w) : std::string("none")));
        } else {
            os << "\"";
        }
        os << "];\n";
    }
    for (const auto& w : witnessLines)
        os << w << "\n";
    os << "}\n";
    return os.str();
}

}  // namespace syllogic
