#include "syllogic/opposition.hpp"

#include <algorithm>
#include <set>

namespace syllogic {

std::string relationName(RelationKind k)
{
    switch (k) {
    case RelationKind::Contradictory: return "contradictory";
    case RelationKind::Contrary: return "contrary";
    case RelationKind::Subcontrary: return "subcontrary";
    case RelationKind::SubalternationForward: return "subalternation-forward";
    case RelationKind::SubalternationBackward: return "subalternation-backward";
    case RelationKind::Independent: return "independent";
    }
    return "?";
}

namespace {

std::set<TermId> metavarSet(const Schema& s)
{
    return {s.metavariables().begin(), s.metavariables().end()};
}

}  // namespace

OppositionRelation classifyPair(const Schema& phi, const Schema& psi, const Semantics& semantics, unsigned bound)
{
    const auto family = familyOf(semantics);
    if (!phi.body().usesOnly(family) || !psi.body().usesOnly(family))
        throw SemanticsError("schema copulas do not match " + describe(semantics));
    if (metavarSet(phi) != metavarSet(psi))
        throw SemanticsError("schemas range over different metavariables");

    std::set<TermId> termSet;
    for (const auto& t : phi.body().terms())
        termSet.insert(t);
    for (const auto& t : psi.body().terms())
        termSet.insert(t);
    const std::vector<TermId> terms(termSet.begin(), termSet.end());

    OppositionRelation r;
    r.bound = bound;
    forEachModel(semantics, terms, bound, [&](const Model& m) {
        const bool x = evaluate(semantics, m, phi.body());
        const bool y = evaluate(semantics, m, psi.body());
        auto& slot = x ? (y ? r.bothTrue : r.firstOnly) : (y ? r.secondOnly : r.bothFalse);
        if (!slot)
            slot = m;
        return !(r.bothTrue && r.bothFalse && r.firstOnly && r.secondOnly);
    });

    const bool tt = r.bothTrue.has_value(), ff = r.bothFalse.has_value();
    if (!tt && !ff)
        r.kind = RelationKind::Contradictory;
    else if (!tt)
        r.kind = RelationKind::Contrary;
    else if (!ff)
        r.kind = RelationKind::Subcontrary;
    else if (!r.firstOnly && r.secondOnly)
        r.kind = RelationKind::SubalternationForward;
    else if (!r.secondOnly && r.firstOnly)
        r.kind = RelationKind::SubalternationBackward;
    else
        r.kind = RelationKind::Independent;
    return r;
}

namespace {

SquareSpec buildSquare(std::string name, const char* a, const char* i, const char* e, const char* o,
                       std::vector<ExpectedRelation> relations)
{
    SquareSpec s;
    s.name = std::move(name);
    const std::vector<std::string> mv = {"S", "P"};
    s.corners.emplace("a", Schema::fromText(a, mv));
    s.corners.emplace("i", Schema::fromText(i, mv));
    s.corners.emplace("e", Schema::fromText(e, mv));
    s.corners.emplace("o", Schema::fromText(o, mv));
    s.relations = std::move(relations);
    return s;
}

}  // namespace

SquareSpec analyticSquare()
{
    return buildSquare("analytic", "S a P", "S i P", "S e P", "S o P",
                       {
                           {"a", "e", RelationKind::Contrary},
                           {"i", "o", RelationKind::Subcontrary},
                           {"a", "o", RelationKind::Contradictory},
                           {"e", "i", RelationKind::Contradictory},
                           {"a", "i", RelationKind::SubalternationForward},
                           {"e", "o", RelationKind::SubalternationForward},
                       });
}

SquareSpec syntheticSquare()
{
    return buildSquare("synthetic", "S sa P", "S si P", "S se P", "S so P",
                       {
                           {"a", "i", RelationKind::Contrary},
                           {"e", "o", RelationKind::Subcontrary},
                           {"a", "o", RelationKind::Contradictory},
                           {"e", "i", RelationKind::Contradictory},
                           {"a", "e", RelationKind::SubalternationForward},
                           {"i", "o", RelationKind::SubalternationForward},
                       });
}

SquareReport verifySquare(const SquareSpec& spec, const Semantics& semantics, unsigned bound)
{
    SquareReport rep;
    rep.name = spec.name;
    rep.semantics = describe(semantics);
    rep.bound = bound;
    for (const auto& [label, schema] : spec.corners)
        rep.corners[label] = render(schema.body());
    rep.pass = true;
    for (const auto& ex : spec.relations) {
        PairResult pr;
        pr.expected = ex;
        pr.observed = classifyPair(spec.corners.at(ex.first), spec.corners.at(ex.second), semantics, bound);
        pr.pass = pr.observed.kind == ex.kind;
        rep.pass = rep.pass && pr.pass;
        rep.pairs.push_back(std::move(pr));
    }
    return rep;
}

std::string sourceName(EntrySource s)
{
    switch (s) {
    case EntrySource::Axiom5: return "axiom5";
    case EntrySource::Axiom6: return "axiom6";
    case EntrySource::Axiom7: return "axiom7";
    case EntrySource::Axiom8: return "axiom8";
    case EntrySource::TheoremList: return "theorem-list";
    }
    return "?";
}

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = [] {
        const std::vector<std::string> sp = {"S", "P"};
        const std::vector<std::string> msp = {"M", "P", "S"};
        const char* theorems[] = {
            "S sa P -> ~S so P", "~S so P -> S sa P", "S si P -> ~S se P", "~S se P -> S si P",
            "S se P -> ~S si P", "~S si P -> S se P", "S so P -> ~S sa P", "~S sa P -> S so P",
            "S sa P -> ~S si P", "S si P -> ~S sa P", "~S se P -> S so P", "~S so P -> S se P",
            "S sa P -> S se P",  "S si P -> S so P",  "S se P | S si P",   "~(S se P & S si P)",
            "S sa P | S so P",   "~(S sa P & S so P)", "~(S sa P & S si P)", "S se P | S so P",
        };
        std::vector<CatalogEntry> out;
        for (std::size_t k = 0; k < std::size(theorems); ++k) {
            std::string id = (k + 1 < 10 ? "T0" : "T") + std::to_string(k + 1);
            out.push_back({id, Schema::fromText(theorems[k], sp), EntrySource::TheoremList,
                           "synthetic theorem list, item " + std::to_string(k + 1), true, std::nullopt});
        }
        out.push_back({"A5", Schema::fromText("S sa P -> S se P", sp), EntrySource::Axiom5,
                       "synthetic axiom 5", true, std::nullopt});
        out.push_back({"A6", Schema::fromText("S so P -> P so S", sp), EntrySource::Axiom6,
                       "synthetic axiom 6", false, 1U});
        out.push_back({"A7", Schema::fromText("(M sa P & S sa M) -> S sa P", msp), EntrySource::Axiom7,
                       "synthetic axiom 7", true, std::nullopt});
        out.push_back({"A8", Schema::fromText("(M sa P & S se M) -> S se P", msp), EntrySource::Axiom8,
                       "synthetic axiom 8", false, 2U});
        return out;
    }();
    return entries;
}

std::vector<CatalogResult> runCatalog(unsigned bound, const SyntheticOptions& opts)
{
    std::vector<CatalogResult> out;
    for (const auto& e : catalog()) {
        CatalogResult r{e, decideSyntheticValidity(e.schema.body(), bound, opts), {}};
        if (e.expectValid) {
            r.outcome = r.verdict.valid ? "pass" : "fail";
        } else if (!r.verdict.valid) {
            const auto size = modelSize(*r.verdict.counterexample);
            r.outcome = (!e.expectedCounterexampleSize || size == *e.expectedCounterexampleSize) ? "pass" : "fail";
        } else {
            const bool reachable = e.expectedCounterexampleSize && *e.expectedCounterexampleSize <= bound;
            r.outcome = reachable ? "fail" : "inconclusive";
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace syllogic
