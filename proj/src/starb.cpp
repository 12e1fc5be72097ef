#include "syllogic/starb.hpp"

#include <algorithm>

namespace syllogic::starb {

namespace {

constexpr std::array<char, 4> kAtomNames = {'p', 'q', 'r', 's'};

void sameAlgebra(const UltraElement& x, const UltraElement& y)
{
    if (x.atoms != y.atoms)
        throw AlgebraMismatch("elements come from algebras with " + std::to_string(x.atoms) + " and " +
                              std::to_string(y.atoms) + " atoms");
}

Element topOf(unsigned atoms) { return (Element{1} << atoms) - 1; }

}  // namespace

BooleanAlgebra::BooleanAlgebra(unsigned atomCount) : atoms_(atomCount)
{
    if (atomCount < 1 || atomCount > kMaxAtoms)
        throw std::invalid_argument("atom count must be between 1 and " + std::to_string(kMaxAtoms));
}

std::vector<Element> BooleanAlgebra::elements() const
{
    std::vector<Element> out(size());
    for (Element m = 0; m <= top(); ++m)
        out[m] = m;
    return out;
}

std::string BooleanAlgebra::name(Element m) const
{
    if (m == 0)
        return "0";
    if (m == top())
        return "1";
    std::string s;
    for (unsigned k = 0; k < atoms_; ++k)
        if ((m >> k) & 1U) {
            if (!s.empty())
                s += "∨";
            s += kAtomNames[k];
        }
    return s;
}

Element UltraElement::apply(Element a) const noexcept
{
    const Element mask = topOf(atoms);
    return ((a & f1) | (~a & mask & f0)) & mask;
}

UltraElement mkStandard(const BooleanAlgebra& alg, Element m)
{
    if (!alg.contains(m))
        throw std::invalid_argument("element " + std::to_string(m) + " is out of range");
    return {alg.atomCount(), m, m};
}

std::vector<UltraElement> carrier(const BooleanAlgebra& alg)
{
    std::vector<UltraElement> out;
    out.reserve(std::size_t{alg.size()} * alg.size());
    for (Element f0 = 0; f0 <= alg.top(); ++f0)
        for (Element f1 = 0; f1 <= alg.top(); ++f1)
            out.push_back({alg.atomCount(), f0, f1});
    return out;
}

UltraElement quotient(const RawFunction& raw)
{
    if (raw.exceptions.size() > RawFunction::kMaxExceptions)
        throw std::invalid_argument("raw function has more than " + std::to_string(RawFunction::kMaxExceptions) +
                                    " exceptions");
    // A finite deviation set lies outside every cofinite set.
    return raw.shannon;
}

UltraElement fneg(const UltraElement& x) { return {x.atoms, x.f1, x.f0}; }

UltraElement inf(const UltraElement& x, const UltraElement& y)
{
    sameAlgebra(x, y);
    return {x.atoms, x.f0 & y.f0, x.f1 & y.f1};
}

UltraElement sup(const UltraElement& x, const UltraElement& y)
{
    sameAlgebra(x, y);
    return {x.atoms, x.f0 | y.f0, x.f1 | y.f1};
}

UltraElement neg(const UltraElement& x)
{
    const Element t = topOf(x.atoms);
    return {x.atoms, ~x.f0 & t, ~x.f1 & t};
}

LatticeResult lattice(const UltraElement& x, const UltraElement& y) { return {inf(x, y), sup(x, y), neg(x)}; }

bool leq(const UltraElement& x, const UltraElement& y, OrderMode mode)
{
    sameAlgebra(x, y);
    const bool pointwise = (x.f0 & ~y.f0) == 0 && (x.f1 & ~y.f1) == 0;
    if (mode == OrderMode::Pointwise)
        return pointwise;

    const bool xs = x.isStandard(), ys = y.isStandard();
    if (xs && x.f0 == 0)
        return true;
    if (xs && ys)
        return pointwise;
    if (!xs && ys)
        return y.f0 != 0;
    if (xs && !ys)
        return false;
    return pointwise;
}

std::string notation(const UltraElement& x)
{
    const BooleanAlgebra alg(x.atoms);
    if (x.isStandard())
        return "*" + alg.name(x.f0);
    return "⟨" + alg.name(x.f0) + ", " + alg.name(x.f1) + "⟩";
}

// ---------------------------------------------------------------------------

bool CaseReport::consistent() const
{
    return std::all_of(cases.begin(), cases.end(),
                       [](const CaseResult& c) { return !c.hypothesisHolds || c.conclusionHolds; });
}

namespace {

enum class Hyp { Incomparable, Geq, Leq };
enum class Bound { EqBottom, GeqBottom, EqTop, LeqTop };

struct CaseSpec {
    int number;
    Hyp hyp;
    int left, right;      // quadruple indices for the hypothesis
    int opLeft, opRight;  // quadruple indices for inf/sup
    Bound infBound, supBound;
};

// Quadruple: 0 = [f], 1 = [f¬], 2 = ¬[f], 3 = ¬[f¬].
constexpr std::array<const char*, 4> kQuadNames = {"[f]", "[f¬]", "¬[f]", "¬[f¬]"};

constexpr std::array<CaseSpec, 12> kCases = {{
    {1, Hyp::Incomparable, 2, 1, 0, 1, Bound::GeqBottom, Bound::LeqTop},
    {2, Hyp::Geq, 2, 1, 0, 1, Bound::EqBottom, Bound::LeqTop},
    {3, Hyp::Leq, 2, 1, 0, 1, Bound::GeqBottom, Bound::EqTop},
    {4, Hyp::Incomparable, 0, 3, 2, 3, Bound::GeqBottom, Bound::LeqTop},
    {5, Hyp::Geq, 3, 0, 2, 3, Bound::GeqBottom, Bound::EqTop},
    {6, Hyp::Leq, 3, 0, 2, 3, Bound::EqBottom, Bound::LeqTop},
    {7, Hyp::Incomparable, 3, 2, 0, 3, Bound::GeqBottom, Bound::LeqTop},
    {8, Hyp::Geq, 2, 3, 0, 3, Bound::EqBottom, Bound::LeqTop},
    {9, Hyp::Leq, 2, 3, 0, 3, Bound::GeqBottom, Bound::EqTop},
    {10, Hyp::Incomparable, 0, 1, 2, 1, Bound::GeqBottom, Bound::LeqTop},
    {11, Hyp::Geq, 1, 0, 2, 1, Bound::GeqBottom, Bound::EqTop},
    {12, Hyp::Leq, 1, 0, 2, 1, Bound::EqBottom, Bound::LeqTop},
}};

std::string boundText(const char* op, int l, int r, Bound b)
{
    std::string s = std::string(op) + "(" + kQuadNames[l] + ", " + kQuadNames[r] + ")";
    switch (b) {
    case Bound::EqBottom: return s + " = *0";
    case Bound::GeqBottom: return s + " ≥ *0";
    case Bound::EqTop: return s + " = *1";
    case Bound::LeqTop: return s + " ≤ *1";
    }
    return s;
}

bool boundHolds(const UltraElement& v, Bound b)
{
    const UltraElement bot{v.atoms, 0, 0};
    const UltraElement top{v.atoms, topOf(v.atoms), topOf(v.atoms)};
    switch (b) {
    case Bound::EqBottom: return v == bot;
    case Bound::GeqBottom: return leq(bot, v);
    case Bound::EqTop: return v == top;
    case Bound::LeqTop: return leq(v, top);
    }
    return false;
}

}  // namespace

CaseReport classifyCases(const UltraElement& x)
{
    const std::array<UltraElement, 4> q = {x, fneg(x), neg(x), neg(fneg(x))};
    CaseReport rep;
    rep.element = x;
    for (std::size_t k = 0; k < kCases.size(); ++k) {
        const auto& c = kCases[k];
        const auto& l = q[c.left];
        const auto& r = q[c.right];
        CaseResult& out = rep.cases[k];
        out.number = c.number;
        switch (c.hyp) {
        case Hyp::Incomparable:
            out.hypothesis = std::string(kQuadNames[c.left]) + " and " + kQuadNames[c.right] + " incomparable";
            out.hypothesisHolds = !leq(l, r) && !leq(r, l);
            break;
        case Hyp::Geq:
            out.hypothesis = std::string(kQuadNames[c.left]) + " ≥ " + kQuadNames[c.right];
            out.hypothesisHolds = leq(r, l);
            break;
        case Hyp::Leq:
            out.hypothesis = std::string(kQuadNames[c.left]) + " ≤ " + kQuadNames[c.right];
            out.hypothesisHolds = leq(l, r);
            break;
        }
        const auto lo = inf(q[c.opLeft], q[c.opRight]);
        const auto hi = sup(q[c.opLeft], q[c.opRight]);
        out.conclusion = boundText("inf", c.opLeft, c.opRight, c.infBound) + " and " +
                         boundText("sup", c.opLeft, c.opRight, c.supBound);
        out.conclusionHolds = boundHolds(lo, c.infBound) && boundHolds(hi, c.supBound);
    }
    return rep;
}

// ---------------------------------------------------------------------------

OppositionSet algebraicOpposition(const UltraElement& x, const UltraElement& y)
{
    sameAlgebra(x, y);
    const Element t = topOf(x.atoms);
    OppositionSet s;
    s.contrary = inf(x, y) == UltraElement{x.atoms, 0, 0};
    s.subcontrary = sup(x, y) == UltraElement{x.atoms, t, t};
    s.contradictory = y == neg(x);
    s.subalternXY = leq(x, y);
    s.subalternYX = leq(y, x);
    return s;
}

std::vector<RelationCheck> conventionalSquareRelations(const UltraElement& x)
{
    const auto f = x, g = fneg(x), nf = neg(x), ng = neg(fneg(x));
    return {
        {"[f], [f¬] contrary", algebraicOpposition(f, g).contrary},
        {"[f], ¬[f] contradictory", algebraicOpposition(f, nf).contradictory},
        {"¬[f¬], [f¬] contradictory", algebraicOpposition(ng, g).contradictory},
        {"¬[f¬], ¬[f] subcontrary", algebraicOpposition(ng, nf).subcontrary},
        {"[f] → ¬[f¬] subalternation", algebraicOpposition(f, ng).subalternXY},
        {"[f¬] → ¬[f] subalternation", algebraicOpposition(g, nf).subalternXY},
    };
}

std::vector<RelationCheck> syntheticSquareRelations(const UltraElement& x)
{
    const auto f = x, g = fneg(x), nf = neg(x), ng = neg(fneg(x));
    return {
        {"[f], ¬[f¬] contrary", algebraicOpposition(f, ng).contrary},
        {"[f], ¬[f] contradictory", algebraicOpposition(f, nf).contradictory},
        {"¬[f¬], [f¬] contradictory", algebraicOpposition(ng, g).contradictory},
        {"¬[f], [f¬] subcontrary", algebraicOpposition(nf, g).subcontrary},
        {"[f] → [f¬] subalternation", algebraicOpposition(f, g).subalternXY},
        {"¬[f¬] → ¬[f] subalternation", algebraicOpposition(ng, nf).subalternXY},
    };
}

bool conventionalCondition(const UltraElement& x) { return inf(x, fneg(x)) == UltraElement{x.atoms, 0, 0}; }

bool syntheticCondition(const UltraElement& x) { return leq(x, fneg(x)); }

namespace {

template <class Pred, class Rel>
HypothesisSweep sweep(const std::vector<UltraElement>& elems, std::string name, Pred pred, Rel relations)
{
    HypothesisSweep s;
    s.hypothesis = std::move(name);
    for (const auto& x : elems) {
        if (!pred(x))
            continue;
        ++s.satisfying;
        if (!x.isStandard())
            ++s.nonstandardSatisfying;
        const auto rels = relations(x);
        if (!std::all_of(rels.begin(), rels.end(), [](const RelationCheck& r) { return r.holds; }))
            s.relationFailures.push_back(x);
    }
    return s;
}

}  // namespace

AlgebraSweep sweepTwoSquares(const BooleanAlgebra& alg)
{
    if (alg.atomCount() > 3)
        throw std::invalid_argument("two-square sweep limited to algebras with at most 3 atoms");
    const auto elems = carrier(alg);
    AlgebraSweep s;
    s.atoms = alg.atomCount();
    s.elementCount = static_cast<std::uint32_t>(elems.size());

    const auto conv = [](const UltraElement& x) { return conventionalSquareRelations(x); };
    const auto syn = [](const UltraElement& x) { return syntheticSquareRelations(x); };

    s.conventional = sweep(elems, "inf([f], [f¬]) = *0", conventionalCondition, conv);
    s.conventionalCaption = sweep(
        elems, "[f¬] ≤ ¬[f]", [](const UltraElement& x) { return leq(fneg(x), neg(x)); }, conv);
    s.conventionalProof = sweep(
        elems, "[f¬] ≤ [f]", [](const UltraElement& x) { return leq(fneg(x), x); }, conv);
    s.synthetic = sweep(elems, "[f] ≤ [f¬]", syntheticCondition, syn);
    s.syntheticCaption = sweep(
        elems, "¬[f¬] ≤ ¬[f]", [](const UltraElement& x) { return leq(neg(fneg(x)), neg(x)); }, syn);
    s.syntheticProof = sweep(
        elems, "[f] ≤ ¬[f¬]", [](const UltraElement& x) { return leq(x, neg(fneg(x))); }, syn);

    s.conventionalCaptionEquivalent = std::all_of(elems.begin(), elems.end(), [](const UltraElement& x) {
        return conventionalCondition(x) == leq(fneg(x), neg(x));
    });
    s.syntheticCaptionEquivalent = std::all_of(elems.begin(), elems.end(), [](const UltraElement& x) {
        return syntheticCondition(x) == leq(neg(fneg(x)), neg(x));
    });
    s.syntheticForcesFixpoint = std::all_of(elems.begin(), elems.end(), [](const UltraElement& x) {
        return !syntheticCondition(x) || x == fneg(x);
    });
    s.conventionalRealizedNonstandard = s.conventional.nonstandardSatisfying > 0;

    s.pass = s.conventional.relationFailures.empty() && s.synthetic.relationFailures.empty() &&
             s.conventionalCaptionEquivalent && s.syntheticCaptionEquivalent;
    return s;
}

namespace {

void addFindings(Proposition1Report& rep)
{
    bool realized = true, forces = true, convProofGenerates = true, synProofGenerates = true;
    for (const auto& s : rep.sweeps) {
        realized = realized && s.conventionalRealizedNonstandard;
        forces = forces && s.syntheticForcesFixpoint;
        convProofGenerates = convProofGenerates && s.conventionalProof.relationFailures.empty();
        synProofGenerates = synProofGenerates && s.syntheticProof.relationFailures.empty();
    }
    rep.findings.push_back(realized ? "conventional-square condition is realized by nonstandard elements"
                                    : "conventional-square condition is NOT realized by nonstandard elements");
    rep.findings.push_back(forces ? "synthetic-square hypothesis forces [f] = [f¬] in this carrier"
                                  : "synthetic-square hypothesis admits elements with [f] ≠ [f¬]");
    rep.findings.push_back(convProofGenerates
                               ? "hypothesis [f¬] ≤ [f] generates the conventional-square relations"
                               : "hypothesis [f¬] ≤ [f] does not generate the conventional-square relations "
                                 "(the caption hypothesis [f¬] ≤ ¬[f] does)");
    rep.findings.push_back(synProofGenerates
                               ? "hypothesis [f] ≤ ¬[f¬] generates the synthetic-square relations"
                               : "hypothesis [f] ≤ ¬[f¬] does not generate the synthetic-square relations "
                                 "(the caption hypothesis ¬[f¬] ≤ ¬[f] does)");
    rep.pass = std::all_of(rep.sweeps.begin(), rep.sweeps.end(), [](const AlgebraSweep& s) { return s.pass; });
}

}  // namespace

Proposition1Report verifyTwoSquares(const BooleanAlgebra& alg)
{
    Proposition1Report rep;
    rep.sweeps.push_back(sweepTwoSquares(alg));
    addFindings(rep);
    return rep;
}

Proposition1Report verifyTwoSquaresUpTo(unsigned maxAtoms)
{
    if (maxAtoms < 1 || maxAtoms > 3)
        throw std::invalid_argument("two-square sweep supports 1 to 3 atoms");
    Proposition1Report rep;
    for (unsigned k = 1; k <= maxAtoms; ++k)
        rep.sweeps.push_back(sweepTwoSquares(BooleanAlgebra(k)));
    addFindings(rep);
    return rep;
}

// ---------------------------------------------------------------------------

UltraElement MatrixLogic::implication(const UltraElement& x, const UltraElement& y) const
{
    return sup(neg(sup(x, y)), y);
}

UltraElement matrixEval(const MatrixLogic& ml, const Formula& f, const Valuation& v)
{
    switch (f.kind()) {
    case Formula::Kind::Atom: {
        auto it = v.find(f.asAtom());
        if (it == v.end())
            throw std::invalid_argument("atom '" + render(f.asAtom()) + "' has no value");
        if (it->second.atoms != ml.algebra.atomCount())
            throw AlgebraMismatch("valuation of '" + render(f.asAtom()) + "' is from a different algebra");
        return it->second;
    }
    case Formula::Kind::Not: return ml.negation(matrixEval(ml, f.operand(), v));
    case Formula::Kind::And: return ml.conjunction(matrixEval(ml, f.lhs(), v), matrixEval(ml, f.rhs(), v));
    case Formula::Kind::Or: return ml.disjunction(matrixEval(ml, f.lhs(), v), matrixEval(ml, f.rhs(), v));
    case Formula::Kind::Implies: return ml.implication(matrixEval(ml, f.lhs(), v), matrixEval(ml, f.rhs(), v));
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------

std::array<UltraElement, 4> BridgeModel::carrierElements() const
{
    return {generator, fneg(generator), neg(generator), neg(fneg(generator))};
}

UltraElement BridgeModel::interpret(const Atom& a) const
{
    const auto f = generator, g = fneg(generator), nf = neg(generator), ng = neg(fneg(generator));
    const bool primary = column == AssignmentColumn::Primary;
    switch (a.copula) {
    case Copula::AnA:
    case Copula::SyA: return primary ? f : ng;
    case Copula::AnE:
    case Copula::SyE: return primary ? g : nf;
    case Copula::AnI:
    case Copula::SyI: return primary ? ng : f;
    case Copula::AnO:
    case Copula::SyO: return primary ? nf : g;
    }
    throw std::logic_error("unreachable");
}

bool BridgeModel::designated(const UltraElement& x) const
{
    if (designation.kind == Designation::Kind::Strict) {
        const Element t = topOf(x.atoms);
        return x == UltraElement{x.atoms, t, t};
    }
    return leq(designation.threshold, x);
}

bool bridgeSatisfies(const BridgeModel& bm, const Formula& f)
{
    switch (f.kind()) {
    case Formula::Kind::Atom: return bm.designated(bm.interpret(f.asAtom()));
    case Formula::Kind::Not: return !bridgeSatisfies(bm, f.operand());
    case Formula::Kind::And: return bridgeSatisfies(bm, f.lhs()) && bridgeSatisfies(bm, f.rhs());
    case Formula::Kind::Or: return bridgeSatisfies(bm, f.lhs()) || bridgeSatisfies(bm, f.rhs());
    case Formula::Kind::Implies: return !bridgeSatisfies(bm, f.lhs()) || bridgeSatisfies(bm, f.rhs());
    }
    return false;
}

}  // namespace syllogic::starb
