#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "syllogic/formula.hpp"
#include "syllogic/semantics.hpp"

namespace syllogic {

enum class RelationKind {
    Contradictory,
    Contrary,
    Subcontrary,
    SubalternationForward,
    SubalternationBackward,
    Independent,
};

std::string relationName(RelationKind k);

/// A relation classified from the truth-pair profile of two formulas over every
/// model up to `bound`. Each witness is the first model in enumeration order
/// showing that cell of the profile.
struct OppositionRelation {
    RelationKind kind = RelationKind::Independent;
    unsigned bound = 0;
    std::optional<Model> bothTrue;
    std::optional<Model> bothFalse;
    std::optional<Model> firstOnly;
    std::optional<Model> secondOnly;
};

/// Throws SemanticsError for mixed copula families or mismatched metavariables,
/// BoundError when the bound is out of range for the semantics.
OppositionRelation classifyPair(const Schema& phi, const Schema& psi, const Semantics& semantics, unsigned bound);

struct ExpectedRelation {
    std::string first;
    std::string second;
    RelationKind kind;
};

/// Four corners keyed "a", "i", "e", "o" plus the expected relation on each of
/// the six unordered corner pairs.
struct SquareSpec {
    std::string name;
    std::map<std::string, Schema> corners;
    std::vector<ExpectedRelation> relations;
};

/// The conventional square over the analytic copulas.
SquareSpec analyticSquare();
/// The synthetic square: a-i contrary, e-o subcontrary, a-o and e-i
/// contradictory, a->e and i->o subalternation.
SquareSpec syntheticSquare();

struct PairResult {
    ExpectedRelation expected;
    OppositionRelation observed;
    bool pass = false;
};

struct SquareReport {
    std::string name;
    std::string semantics;
    unsigned bound = 0;
    std::map<std::string, std::string> corners;  // label -> rendered schema
    std::vector<PairResult> pairs;
    bool pass = false;
};

SquareReport verifySquare(const SquareSpec& spec, const Semantics& semantics, unsigned bound);

enum class EntrySource { Axiom5, Axiom6, Axiom7, Axiom8, TheoremList };

std::string sourceName(EntrySource s);

struct CatalogEntry {
    std::string id;
    Schema schema;
    EntrySource source;
    std::string citation;
    bool expectValid = true;
    // Size of the minimal countermodel when expectValid is false.
    std::optional<unsigned> expectedCounterexampleSize;
};

/// T01-T20 (the synthetic theorem list, in order) followed by A5-A8.
const std::vector<CatalogEntry>& catalog();

struct CatalogResult {
    CatalogEntry entry;
    Verdict verdict;
    /// "pass", "fail", or "inconclusive" (counterexample expected but none exists
    /// below the bound).
    std::string outcome;
};

std::vector<CatalogResult> runCatalog(unsigned bound, const SyntheticOptions& opts = {});

}  // namespace syllogic
