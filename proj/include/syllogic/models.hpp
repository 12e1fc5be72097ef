#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace syllogic {

class SemanticsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BoundError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Finite Venn model: ext[T][k] says whether domain[k] belongs to the extent of T.
struct AnalyticModel {
    std::vector<std::string> domain;
    std::map<std::string, std::vector<bool>> ext;

    bool operator==(const AnalyticModel&) const = default;
};

/// Finite universe with a primitive "is" relation: is[T][k] holds iff universe[k] is T.
struct SyntheticModel {
    std::vector<std::string> universe;
    std::map<std::string, std::vector<bool>> is;

    bool operator==(const SyntheticModel&) const = default;
};

/// Universe with a primitive binary relation between individuals and a
/// denotation of every term as an individual.
struct CopulaStructure {
    std::vector<std::string> universe;
    std::vector<std::vector<bool>> isPrim;  // isPrim[c][d]: "c is d"
    std::map<std::string, std::size_t> denote;

    bool operator==(const CopulaStructure&) const = default;

    std::size_t indexOf(const std::string& individual) const;
};

using Model = std::variant<AnalyticModel, SyntheticModel, CopulaStructure>;

/// Size of the domain/universe of any model kind.
std::size_t modelSize(const Model& m);

/// Stable human-readable one-line listing, e.g. `U={u,v}; u:{M,P}; v:{P}`.
std::string describe(const Model& m);

}  // namespace syllogic
