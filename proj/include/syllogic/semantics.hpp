#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "syllogic/analytic.hpp"
#include "syllogic/formula.hpp"
#include "syllogic/models.hpp"
#include "syllogic/synthetic.hpp"

namespace syllogic {

struct AnalyticSemantics {
    ImportPolicy policy;
};

struct SyntheticSemantics {
    SyntheticOptions options;
};

using Semantics = std::variant<AnalyticSemantics, SyntheticSemantics>;

CopulaFamily familyOf(const Semantics& s) noexcept;

/// e.g. "analytic(import=on)", "synthetic(direct,nonempty)".
std::string describe(const Semantics& s);

/// Evaluates `f` in a model of the kind the semantics expects.
bool evaluate(const Semantics& s, const Model& m, const Formula& f);

/// Walks every model over `terms` up to `bound` in enumeration order. The
/// visitor returns false to stop early. Throws BoundError if the bound is out of
/// range for the semantics.
void forEachModel(const Semantics& s, const std::vector<TermId>& terms, unsigned bound,
                  const std::function<bool(const Model&)>& visit);

struct AtomValue {
    std::string atom;
    bool value;
};

/// Result of a bounded validity check. "Valid" always means valid up to `bound`.
struct Verdict {
    bool valid = true;
    unsigned bound = 0;
    std::optional<Model> counterexample;
    std::vector<AtomValue> trace;  // atom truth values in the counterexample

    std::string statusText() const;
};

Verdict decideValidity(const Formula& f, const Semantics& s, unsigned bound);

Verdict decideAnalyticValidity(const Formula& f, unsigned bound, ImportPolicy pol);
Verdict decideSyntheticValidity(const Formula& f, unsigned bound, const SyntheticOptions& opts);

}  // namespace syllogic
