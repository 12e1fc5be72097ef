#include "syllogic/synthetic.hpp"

#include <array>

namespace syllogic {

namespace {

constexpr std::array<const char*, 4> kIndividuals = {"u", "v", "w", "x"};

const std::vector<bool>& isColumn(const SyntheticModel& m, const TermId& t)
{
    auto it = m.is.find(t.name());
    if (it == m.is.end())
        throw SemanticsError("term '" + t.name() + "' is not declared in the model");
    if (it->second.size() != m.universe.size())
        throw SemanticsError("'is' row for '" + t.name() + "' does not match the universe size");
    return it->second;
}

bool evalDirect(const SyntheticModel& m, const Formula& f)
{
    switch (f.kind()) {
    case Formula::Kind::Atom: return evalSyntheticAtom(m, f.asAtom());
    case Formula::Kind::Not: return !evalDirect(m, f.operand());
    case Formula::Kind::And: return evalDirect(m, f.lhs()) && evalDirect(m, f.rhs());
    case Formula::Kind::Or: return evalDirect(m, f.lhs()) || evalDirect(m, f.rhs());
    case Formula::Kind::Implies: return !evalDirect(m, f.lhs()) || evalDirect(m, f.rhs());
    }
    return false;
}

void checkFamilyAndUniverse(const Formula& f, std::size_t universeSize, const SyntheticOptions& opts)
{
    for (const auto& a : f.atoms())
        if (familyOf(a.copula) != CopulaFamily::Synthetic)
            throw SemanticsError("analytic copula '" + std::string(copulaToken(a.copula)) +
                                 "' in synthetic evaluation");
    if (universeSize == 0 && !opts.allowEmptyUniverse)
        throw SemanticsError("empty universe is not allowed by the evaluation options");
}

}  // namespace

bool evalSyntheticAtom(const SyntheticModel& m, const Atom& a, AtomForm form)
{
    if (familyOf(a.copula) != CopulaFamily::Synthetic)
        throw SemanticsError("analytic copula '" + std::string(copulaToken(a.copula)) + "' in synthetic evaluation");
    const auto& s = isColumn(m, a.subject);
    const auto& p = isColumn(m, a.predicate);
    const std::size_t n = m.universe.size();

    auto existsA = [&](auto pred) {
        for (std::size_t k = 0; k < n; ++k)
            if (pred(k))
                return true;
        return false;
    };
    auto forallA = [&](auto pred) {
        for (std::size_t k = 0; k < n; ++k)
            if (!pred(k))
                return false;
        return true;
    };

    auto every = [&] { return existsA([&](std::size_t k) { return bool(s[k]); }) ||
                              forallA([&](std::size_t k) { return p[k] && s[k]; }); };
    auto some = [&] { return forallA([&](std::size_t k) { return p[k] && !s[k]; }); };

    switch (a.copula) {
    case Copula::SyA: return every();
    case Copula::SyI: return some();
    case Copula::SyO:
        if (form == AtomForm::Unexpanded)
            return !every();
        return forallA([&](std::size_t k) { return !s[k]; }) &&
               existsA([&](std::size_t k) { return !p[k] || !s[k]; });
    case Copula::SyE:
        if (form == AtomForm::Unexpanded)
            return !some();
        return existsA([&](std::size_t k) { return !p[k] || s[k]; });
    default:
        break;
    }
    throw SemanticsError("unreachable copula");
}

bool evalSynthetic(const SyntheticModel& m, const Formula& f, const SyntheticOptions& opts)
{
    checkFamilyAndUniverse(f, m.universe.size(), opts);
    return evalDirect(m, f);
}

bool evalSynthetic(const CopulaStructure& c, const Formula& f, const SyntheticOptions& opts)
{
    if (opts.reading == Reading::Direct)
        throw SemanticsError("a copula structure needs a derived reading");
    checkFamilyAndUniverse(f, c.universe.size(), opts);
    return evalDirect(inducedModel(c, opts.reading == Reading::DerivedCharitable), f);
}

bool derivedCopula(const CopulaStructure& c, std::size_t a, std::size_t b, bool charitable)
{
    const std::size_t n = c.universe.size();
    if (a >= n || b >= n)
        throw SemanticsError("individual index out of range");
    const auto& r = c.isPrim;

    bool witness = false;
    for (std::size_t x = 0; x < n; ++x)
        witness = witness || r[x][a];
    if (!witness)
        return false;

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (r[x][a] && r[y][a] && !r[x][y])
                return false;

    for (std::size_t x = 0; x < n; ++x) {
        const bool ok = charitable ? (!r[x][a] || r[x][b]) : (r[x][a] && r[x][b]);
        if (!ok)
            return false;
    }
    return true;
}

bool derivedCopula(const CopulaStructure& c, const std::string& a, const std::string& b, bool charitable)
{
    return derivedCopula(c, c.indexOf(a), c.indexOf(b), charitable);
}

SyntheticModel inducedModel(const CopulaStructure& c, bool charitable)
{
    SyntheticModel m;
    m.universe = c.universe;
    for (const auto& [term, target] : c.denote) {
        std::vector<bool> row(c.universe.size());
        for (std::size_t k = 0; k < c.universe.size(); ++k)
            row[k] = derivedCopula(c, k, target, charitable);
        m.is[term] = std::move(row);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Enumeration

SyntheticModelEnumerator::SyntheticModelEnumerator(std::vector<TermId> terms, unsigned maxUniverse, bool allowEmpty)
    : terms_(std::move(terms)), maxU_(maxUniverse), size_(allowEmpty ? 0 : 1), allowEmpty_(allowEmpty)
{
    if (maxU_ > kMaxDirectUniverse)
        throw BoundError("synthetic universe bound " + std::to_string(maxU_) + " exceeds " +
                         std::to_string(kMaxDirectUniverse));
    if (terms_.size() * maxU_ > 40)
        throw BoundError("synthetic search space too large");
}

std::optional<SyntheticModel> SyntheticModelEnumerator::next()
{
    const std::size_t nTerms = terms_.size();
    while (size_ <= maxU_) {
        const std::uint64_t perSize = std::uint64_t{1} << (size_ * nTerms);
        if (counter_ < perSize) {
            SyntheticModel m;
            for (unsigned k = 0; k < size_; ++k)
                m.universe.emplace_back(kIndividuals[k]);
            for (std::size_t t = 0; t < nTerms; ++t) {
                const unsigned shift = static_cast<unsigned>((nTerms - 1 - t) * size_);
                std::vector<bool> bits(size_);
                for (unsigned k = 0; k < size_; ++k)
                    bits[k] = ((counter_ >> (shift + size_ - 1 - k)) & 1U) != 0;
                m.is[terms_[t].name()] = std::move(bits);
            }
            ++counter_;
            return m;
        }
        ++size_;
        counter_ = 0;
    }
    return std::nullopt;
}

std::uint64_t SyntheticModelEnumerator::total() const
{
    std::uint64_t n = 0;
    for (unsigned u = allowEmpty_ ? 0 : 1; u <= maxU_; ++u)
        n += std::uint64_t{1} << (u * terms_.size());
    return n;
}

CopulaStructureEnumerator::CopulaStructureEnumerator(std::vector<TermId> terms, unsigned maxUniverse, bool allowEmpty)
    : terms_(std::move(terms)), maxU_(maxUniverse), minSize_(allowEmpty ? 0 : 1), size_(minSize_)
{
    if (maxU_ > kMaxDerivedUniverse)
        throw BoundError("derived-reading universe bound " + std::to_string(maxU_) + " exceeds " +
                         std::to_string(kMaxDerivedUniverse));
}

std::uint64_t CopulaStructureEnumerator::denoteCount(unsigned n) const
{
    std::uint64_t c = 1;
    for (std::size_t t = 0; t < terms_.size(); ++t)
        c *= n;
    return c;
}

std::optional<CopulaStructure> CopulaStructureEnumerator::next()
{
    while (size_ <= maxU_) {
        const std::uint64_t relCount = std::uint64_t{1} << (size_ * size_);
        const std::uint64_t denCount = denoteCount(size_);
        if (denCount > 0 && relCounter_ < relCount) {
            CopulaStructure c;
            for (unsigned k = 0; k < size_; ++k)
                c.universe.emplace_back(kIndividuals[k]);
            c.isPrim.assign(size_, std::vector<bool>(size_));
            const unsigned cells = size_ * size_;
            for (unsigned cell = 0; cell < cells; ++cell)
                c.isPrim[cell / size_][cell % size_] = ((relCounter_ >> (cells - 1 - cell)) & 1U) != 0;
            std::uint64_t rest = denoteCounter_;
            for (std::size_t t = terms_.size(); t-- > 0;) {
                c.denote[terms_[t].name()] = static_cast<std::size_t>(rest % size_);
                rest /= size_;
            }
            if (++denoteCounter_ == denCount) {
                denoteCounter_ = 0;
                ++relCounter_;
            }
            return c;
        }
        ++size_;
        relCounter_ = 0;
        denoteCounter_ = 0;
    }
    return std::nullopt;
}

std::uint64_t CopulaStructureEnumerator::total() const
{
    std::uint64_t n = 0;
    for (unsigned u = minSize_; u <= maxU_; ++u)
        n += (std::uint64_t{1} << (u * u)) * denoteCount(u);
    return n;
}

std::vector<SyntheticModel> enumerateSyntheticModels(const std::vector<TermId>& terms, unsigned maxU,
                                                     const SyntheticOptions& opts)
{
    if (opts.reading != Reading::Direct)
        throw SemanticsError("derived readings enumerate copula structures");
    SyntheticModelEnumerator e(terms, maxU, opts.allowEmptyUniverse);
    std::vector<SyntheticModel> out;
    while (auto m = e.next())
        out.push_back(std::move(*m));
    return out;
}

std::vector<CopulaStructure> enumerateCopulaStructures(const std::vector<TermId>& terms, unsigned maxU,
                                                       const SyntheticOptions& opts)
{
    CopulaStructureEnumerator e(terms, maxU, opts.allowEmptyUniverse);
    std::vector<CopulaStructure> out;
    while (auto c = e.next())
        out.push_back(std::move(*c));
    return out;
}

std::string readingName(Reading r)
{
    switch (r) {
    case Reading::Direct: return "direct";
    case Reading::DerivedLiteral: return "derived";
    case Reading::DerivedCharitable: return "derived-charitable";
    }
    return "?";
}

}  // namespace syllogic
