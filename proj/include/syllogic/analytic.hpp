#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "syllogic/formula.hpp"
#include "syllogic/models.hpp"

namespace syllogic {

struct ImportPolicy {
    bool existentialImport = true;
};

/// Venn evaluation. With import, `S a P` additionally needs a nonempty S;
/// `o` is the negation of `a`, `e` and `i` never carry import.
/// Throws SemanticsError on a synthetic copula or a term without an extent.
bool evalAnalytic(const AnalyticModel& m, const Formula& f, ImportPolicy pol);

inline constexpr unsigned kMaxAnalyticDomain = 6;

/// Lazily yields every model over `terms` with 0 <= |D| <= maxDomain, each
/// extension assignment once. Order: domain size, then extensions read as a
/// binary numeral with the first term most significant.
class AnalyticModelEnumerator {
public:
    AnalyticModelEnumerator(std::vector<TermId> terms, unsigned maxDomain);

    std::optional<AnalyticModel> next();

    /// Number of models the enumerator yields in total.
    std::uint64_t total() const;

private:
    std::vector<TermId> terms_;
    unsigned maxDomain_;
    unsigned size_ = 0;
    std::uint64_t counter_ = 0;
};

std::vector<AnalyticModel> enumerateAnalyticModels(const std::vector<TermId>& terms, unsigned maxDomain);

}  // namespace syllogic
