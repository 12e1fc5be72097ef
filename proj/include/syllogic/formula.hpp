#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace syllogic {

/// Name of a syllogistic term (S, P, M, ...). Must match `[A-Za-z][A-Za-z0-9_]*`
/// and must not collide with a copula keyword.
class TermId {
public:
    explicit TermId(std::string name);

    const std::string& name() const noexcept { return name_; }

    static bool isValidName(std::string_view s) noexcept;
    static bool isReserved(std::string_view s) noexcept;

    auto operator<=>(const TermId&) const = default;

private:
    std::string name_;
};

enum class Copula { AnA, AnE, AnI, AnO, SyA, SyE, SyI, SyO };

enum class CopulaFamily { Analytic, Synthetic };

CopulaFamily familyOf(Copula c) noexcept;
std::string_view copulaToken(Copula c) noexcept;
std::optional<Copula> copulaFromToken(std::string_view tok) noexcept;

struct Atom {
    TermId subject;
    Copula copula;
    TermId predicate;

    auto operator<=>(const Atom&) const = default;
};

/// Immutable formula tree with structural equality. Copies share nodes.
class Formula {
public:
    enum class Kind { Atom, Not, And, Or, Implies };

    static Formula atom(TermId subject, Copula copula, TermId predicate);
    static Formula atom(Atom a);
    static Formula negation(Formula f);
    static Formula conj(Formula l, Formula r);
    static Formula disj(Formula l, Formula r);
    static Formula implies(Formula l, Formula r);

    Kind kind() const noexcept { return node_->kind; }
    bool isAtom() const noexcept { return kind() == Kind::Atom; }

    // Preconditions: isAtom() for asAtom(); unary/binary kinds for the children.
    const Atom& asAtom() const;
    const Formula& operand() const;
    const Formula& lhs() const;
    const Formula& rhs() const;

    bool operator==(const Formula& other) const;

    /// Distinct atoms in order of first (left-to-right) occurrence.
    std::vector<Atom> atoms() const;
    /// Distinct term names, sorted.
    std::vector<TermId> terms() const;
    bool usesOnly(CopulaFamily family) const;

    std::size_t depth() const;

private:
    struct Node {
        Kind kind;
        std::optional<Atom> atom;
        std::vector<Formula> children;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, std::string found);

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
    std::string found_;
};

/// Parses the surface grammar:
///   formula := implies ; implies := or ("->" implies)? ; or := and ("|" and)* ;
///   and := unary ("&" unary)* ; unary := "~" unary | "(" formula ")" | atom ;
///   atom := IDENT COP IDENT
/// Throws ParseError with the byte offset of the offending token.
Formula parse(std::string_view text);

/// Renders with minimal parentheses; parse(render(f)) == f.
std::string render(const Formula& f);
std::string render(const Atom& a);

/// A formula whose listed identifiers are metavariables.
class Schema {
public:
    Schema(Formula body, std::vector<TermId> metavariables);

    static Schema fromText(std::string_view text, const std::vector<std::string>& metavariables);

    const Formula& body() const noexcept { return body_; }
    const std::vector<TermId>& metavariables() const noexcept { return metavars_; }

private:
    Formula body_;
    std::vector<TermId> metavars_;
};

class InstantiationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Binding = std::map<std::string, std::string>;

/// Simultaneous substitution of every metavariable. Throws InstantiationError on a
/// missing binding or a binding to a reserved or malformed identifier.
Formula instantiate(const Schema& s, const Binding& binding);

}  // namespace syllogic
