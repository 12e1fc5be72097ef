#pragma once

// Nonstandard extension of a finite Boolean algebra, restricted to classes of
// one-variable Shannon forms f(a) = (a & f1) | (~a & f0). Two such forms agree on
// a cofinite set of points exactly when their coefficient pairs coincide, so
// a class is identified with its pair (f0, f1).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "syllogic/formula.hpp"

namespace syllogic::starb {

using Element = std::uint32_t;

class AlgebraMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Powerset algebra over `atomCount` atoms named p, q, r, s; elements are bit masks.
class BooleanAlgebra {
public:
    static constexpr unsigned kMaxAtoms = 4;

    explicit BooleanAlgebra(unsigned atomCount);

    unsigned atomCount() const noexcept { return atoms_; }
    Element bottom() const noexcept { return 0; }
    Element top() const noexcept { return (Element{1} << atoms_) - 1; }
    std::uint32_t size() const noexcept { return top() + 1; }
    bool contains(Element m) const noexcept { return m <= top(); }

    Element meet(Element x, Element y) const noexcept { return x & y; }
    Element join(Element x, Element y) const noexcept { return x | y; }
    Element comp(Element x) const noexcept { return ~x & top(); }
    bool leq(Element x, Element y) const noexcept { return (x & ~y) == 0; }

    std::vector<Element> elements() const;

    /// "0", "1", or a join of atoms such as "p∨r".
    std::string name(Element m) const;

    bool operator==(const BooleanAlgebra&) const = default;

private:
    unsigned atoms_;
};

struct UltraElement {
    unsigned atoms = 1;
    Element f0 = 0;  // value of the Shannon form at 0
    Element f1 = 0;  // value at 1

    bool isStandard() const noexcept { return f0 == f1; }
    bool operator==(const UltraElement&) const = default;

    /// Value of the representing function at point a.
    Element apply(Element a) const noexcept;
};

/// `*m`, the class of the constant function m.
UltraElement mkStandard(const BooleanAlgebra& alg, Element m);

/// Every class in the carrier, ordered by (f0, f1).
std::vector<UltraElement> carrier(const BooleanAlgebra& alg);

/// A representative function: the Shannon form plus finitely many points
/// (by abstract index) where the function deviates from it.
struct RawFunction {
    static constexpr std::size_t kMaxExceptions = 16;

    UltraElement shannon;
    std::vector<std::pair<std::uint64_t, Element>> exceptions;
};

/// Throws std::invalid_argument when the exception list exceeds the limit.
UltraElement quotient(const RawFunction& raw);

/// [f¬]: the class of a -> f(~a). Swaps the pair.
UltraElement fneg(const UltraElement& x);

UltraElement inf(const UltraElement& x, const UltraElement& y);
UltraElement sup(const UltraElement& x, const UltraElement& y);
UltraElement neg(const UltraElement& x);

struct LatticeResult {
    UltraElement inf;
    UltraElement sup;
    UltraElement negOfFirst;
};
LatticeResult lattice(const UltraElement& x, const UltraElement& y);

/// Pointwise: componentwise inclusion. PaperFiat: standard elements ordered as
/// in B, every nonstandard element strictly below each nonzero standard one,
/// *0 the bottom; two nonstandard elements fall back to Pointwise.
enum class OrderMode { Pointwise, PaperFiat };

bool leq(const UltraElement& x, const UltraElement& y, OrderMode mode = OrderMode::Pointwise);

/// "*p", "*1", or "⟨p, 0⟩".
std::string notation(const UltraElement& x);

// ---------------------------------------------------------------------------
// Case analysis of inf/sup over the quadruple [f], [f¬], ¬[f], ¬[f¬].

struct CaseResult {
    int number = 0;
    std::string hypothesis;
    std::string conclusion;
    bool hypothesisHolds = false;
    /// Whether every stated bound held. Checked regardless of the hypothesis;
    /// only meaningful when hypothesisHolds.
    bool conclusionHolds = false;
};

struct CaseReport {
    UltraElement element;
    std::array<CaseResult, 12> cases;

    /// No case whose hypothesis holds has a failing conclusion.
    bool consistent() const;
};

CaseReport classifyCases(const UltraElement& x);

// ---------------------------------------------------------------------------

struct OppositionSet {
    bool contrary = false;
    bool subcontrary = false;
    bool contradictory = false;
    bool subalternXY = false;
    bool subalternYX = false;

    bool operator==(const OppositionSet&) const = default;
};

/// contrary: inf = *0; subcontrary: sup = *1; contradictory: y = ¬x;
/// subalternation: pointwise order.
OppositionSet algebraicOpposition(const UltraElement& x, const UltraElement& y);

struct RelationCheck {
    std::string label;  // e.g. "[f], [f¬] contrary"
    bool holds = false;
};

/// Six relations of the conventional algebraic square: corners [f], [f¬],
/// ¬[f¬], ¬[f].
std::vector<RelationCheck> conventionalSquareRelations(const UltraElement& x);
/// Six relations of the synthetic algebraic square: corners [f], ¬[f¬], [f¬], ¬[f].
std::vector<RelationCheck> syntheticSquareRelations(const UltraElement& x);

/// inf([f], [f¬]) = *0.
bool conventionalCondition(const UltraElement& x);
/// [f] <= [f¬] pointwise.
bool syntheticCondition(const UltraElement& x);

struct HypothesisSweep {
    std::string hypothesis;
    std::uint32_t satisfying = 0;
    std::uint32_t nonstandardSatisfying = 0;
    /// Satisfying elements for which some figure relation failed.
    std::vector<UltraElement> relationFailures;
};

struct AlgebraSweep {
    unsigned atoms = 0;
    std::uint32_t elementCount = 0;
    HypothesisSweep conventional;          // inf([f],[f¬]) = *0
    HypothesisSweep conventionalCaption;   // [f¬] <= ¬[f]
    HypothesisSweep conventionalProof;     // [f¬] <= [f]
    HypothesisSweep synthetic;             // [f] <= [f¬]
    HypothesisSweep syntheticCaption;      // ¬[f¬] <= ¬[f]
    HypothesisSweep syntheticProof;        // [f] <= ¬[f¬]
    bool conventionalCaptionEquivalent = false;
    bool syntheticCaptionEquivalent = false;
    bool syntheticForcesFixpoint = false;  // every satisfying x has [f] = [f¬]
    bool conventionalRealizedNonstandard = false;
    bool pass = false;
};

struct Proposition1Report {
    std::vector<AlgebraSweep> sweeps;
    std::vector<std::string> findings;
    bool pass = false;
};

/// Exhaustive two-square sweep over one algebra (atomCount <= 3).
AlgebraSweep sweepTwoSquares(const BooleanAlgebra& alg);
/// Runs sweepTwoSquares for the given algebra and records findings.
Proposition1Report verifyTwoSquares(const BooleanAlgebra& alg);
/// Sweeps every algebra with 1..maxAtoms atoms.
Proposition1Report verifyTwoSquaresUpTo(unsigned maxAtoms);

// ---------------------------------------------------------------------------
// Matrix logic with designated value *1.

struct MatrixLogic {
    BooleanAlgebra algebra;

    UltraElement top() const { return mkStandard(algebra, algebra.top()); }
    bool designated(const UltraElement& x) const { return x == top(); }

    UltraElement negation(const UltraElement& x) const { return neg(x); }
    UltraElement conjunction(const UltraElement& x, const UltraElement& y) const { return inf(x, y); }
    UltraElement disjunction(const UltraElement& x, const UltraElement& y) const { return sup(x, y); }
    /// ¬sup(x, y) ∨ y, which equals ¬x ∨ y.
    UltraElement implication(const UltraElement& x, const UltraElement& y) const;
};

using Valuation = std::map<Atom, UltraElement>;

/// Throws std::invalid_argument for an unbound atom, AlgebraMismatch for a
/// value from a different algebra.
UltraElement matrixEval(const MatrixLogic& ml, const Formula& f, const Valuation& v);

// ---------------------------------------------------------------------------
// Syllogistic bridge: atoms valued in the four elements generated by one [f].

enum class AssignmentColumn { Primary, Alternate };

struct Designation {
    enum class Kind { Strict, Filter };
    Kind kind = Kind::Strict;
    UltraElement threshold;  // used by Filter

    static Designation strict() { return {}; }
    static Designation filter(UltraElement t) { return {Kind::Filter, t}; }
};

struct BridgeModel {
    UltraElement generator;
    AssignmentColumn column = AssignmentColumn::Primary;
    Designation designation;

    /// [f], [f¬], ¬[f], ¬[f¬].
    std::array<UltraElement, 4> carrierElements() const;
    /// Value of an atom by its copula. Primary column: a -> [f], e -> [f¬],
    /// i -> ¬[f¬], o -> ¬[f]. Alternate: a -> ¬[f¬], e -> ¬[f], i -> [f], o -> [f¬].
    UltraElement interpret(const Atom& a) const;
    bool designated(const UltraElement& x) const;
};

bool bridgeSatisfies(const BridgeModel& bm, const Formula& f);

}  // namespace syllogic::starb
