#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syllogic/formula.hpp"
#include "syllogic/models.hpp"

namespace syllogic {

enum class Reading { Direct, DerivedLiteral, DerivedCharitable };

struct SyntheticOptions {
    Reading reading = Reading::Direct;
    bool allowEmptyUniverse = false;
};

/// How the negative copulas are computed. Expanded uses the quantifier-pushed
/// forms; Unexpanded negates the positive definition.
enum class AtomForm { Expanded, Unexpanded };

/// Truth of one synthetic atom over a primitive "is" relation:
///   sa: exists A is(A,S)  or  forall A (is(A,P) and is(A,S))
///   si: forall A (is(A,P) and not is(A,S))
///   so: forall A not is(A,S)  and  exists A (not is(A,P) or not is(A,S))
///   se: exists A (not is(A,P) or is(A,S))
bool evalSyntheticAtom(const SyntheticModel& m, const Atom& a, AtomForm form = AtomForm::Expanded);

/// Direct reading. Throws SemanticsError for analytic copulas, unknown terms,
/// or an empty universe when opts.allowEmptyUniverse is false.
bool evalSynthetic(const SyntheticModel& m, const Formula& f, const SyntheticOptions& opts);

/// Derived readings: "A is S" becomes derivedCopula(A, denote(S)).
bool evalSynthetic(const CopulaStructure& c, const Formula& f, const SyntheticOptions& opts);

/// The composite copula over the primitive relation:
///   exists C isPrim(C,a)
///   and forall C,D ((isPrim(C,a) and isPrim(D,a)) -> isPrim(C,D))
///   and forall C (isPrim(C,a) and isPrim(C,b))          [literal]
///       forall C (isPrim(C,a) -> isPrim(C,b))            [charitable]
bool derivedCopula(const CopulaStructure& c, const std::string& a, const std::string& b, bool charitable);
bool derivedCopula(const CopulaStructure& c, std::size_t a, std::size_t b, bool charitable);

/// The direct model induced by a copula structure under a derived reading.
SyntheticModel inducedModel(const CopulaStructure& c, bool charitable);

inline constexpr unsigned kMaxDirectUniverse = 4;
inline constexpr unsigned kMaxDerivedUniverse = 3;

/// Direct-reading models, ordered by universe size and then by the "is"
/// bits read as a numeral with the first term most significant.
class SyntheticModelEnumerator {
public:
    SyntheticModelEnumerator(std::vector<TermId> terms, unsigned maxUniverse, bool allowEmpty);

    std::optional<SyntheticModel> next();
    std::uint64_t total() const;

private:
    std::vector<TermId> terms_;
    unsigned maxU_;
    unsigned size_;
    std::uint64_t counter_ = 0;
    bool allowEmpty_;
};

/// Copula structures for the derived readings, ordered by universe size,
/// then isPrim bits, then denotations.
class CopulaStructureEnumerator {
public:
    CopulaStructureEnumerator(std::vector<TermId> terms, unsigned maxUniverse, bool allowEmpty);

    std::optional<CopulaStructure> next();
    std::uint64_t total() const;

private:
    std::uint64_t denoteCount(unsigned n) const;

    std::vector<TermId> terms_;
    unsigned maxU_;
    unsigned minSize_;
    unsigned size_;
    std::uint64_t relCounter_ = 0;
    std::uint64_t denoteCounter_ = 0;
};

std::vector<SyntheticModel> enumerateSyntheticModels(const std::vector<TermId>& terms, unsigned maxU,
                                                     const SyntheticOptions& opts);
std::vector<CopulaStructure> enumerateCopulaStructures(const std::vector<TermId>& terms, unsigned maxU,
                                                       const SyntheticOptions& opts);

std::string readingName(Reading r);

}  // namespace syllogic
