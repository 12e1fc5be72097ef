#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "syllogic/formula.hpp"

namespace syllogic {

/// Which axiom schemas a derivation may instantiate. Tautologies and modus
/// ponens are always available.
struct AxiomSet {
    bool axiom5 = true;
    bool axiom6 = false;
    bool axiom7 = false;
    bool axiom8 = false;
    /// `S so P <-> ~S sa P` and `S se P <-> ~S si P`, written as conjunctions
    /// of two implications.
    bool definitional = true;

    bool anyEnabled() const noexcept { return axiom5 || axiom6 || axiom7 || axiom8 || definitional; }
    bool allows(std::string_view schemaId) const noexcept;
    /// True when axiom 6 or 8 is enabled; both have finite countermodels.
    bool includesRefutedAxiom() const noexcept { return axiom6 || axiom8; }
};

/// Schema ids: axiom5..axiom8, def-o, def-e. Throws std::invalid_argument for an
/// unknown id.
const Schema& axiomSchema(std::string_view id);

struct AxiomInstance {
    std::string schemaId;
    Binding binding;
    bool operator==(const AxiomInstance&) const = default;
};
struct Tautology {
    bool operator==(const Tautology&) const = default;
};
struct ModusPonens {
    unsigned premise;      // line holding phi
    unsigned implication;  // line holding phi -> psi
    bool operator==(const ModusPonens&) const = default;
};

using Justification = std::variant<AxiomInstance, Tautology, ModusPonens>;

struct DerivationLine {
    unsigned index;
    Formula formula;
    Justification justification;
};

struct Derivation {
    std::vector<DerivationLine> lines;
    /// When set, the last line must equal it.
    std::optional<Formula> goal;
};

inline constexpr std::size_t kMaxTautologyAtoms = 12;

class AtomBudgetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Truth-table check with atoms as opaque letters. Throws AtomBudgetError above
/// kMaxTautologyAtoms distinct atoms.
bool isTautology(const Formula& f);

struct ProofVerdict {
    bool ok = false;
    std::optional<unsigned> rejectedLine;  // index of the offending line
    std::string reason;
    std::optional<Formula> conclusion;
    std::set<std::string> schemasUsed;
};

ProofVerdict checkDerivation(const Derivation& d, const AxiomSet& ax);

class ScriptError : public std::runtime_error {
public:
    ScriptError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Proof script, one line per step:
///   n. <formula> ; axiom5 S:=X P:=Y | def-o X Y | def-e X Y | taut | mp i j
/// Blank lines and lines starting with '#' are ignored. An optional
/// `goal: <formula>` line sets Derivation::goal.
Derivation parseProofScript(std::string_view text);
std::string renderProofScript(const Derivation& d);

struct BundledDerivation {
    std::string id;  // matches the catalog id (T01..T20)
    Derivation derivation;
};

/// Derivations of the twenty synthetic theorems from axiom 5 and the
/// definitional schemas.
const std::vector<BundledDerivation>& bundledDerivations();

}  // namespace syllogic
