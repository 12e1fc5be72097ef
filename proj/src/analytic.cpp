#include "syllogic/analytic.hpp"

#include <string>

namespace syllogic {

namespace {

const std::vector<bool>& extentOf(const AnalyticModel& m, const TermId& t)
{
    auto it = m.ext.find(t.name());
    if (it == m.ext.end())
        throw SemanticsError("term '" + t.name() + "' has no extent in the model");
    if (it->second.size() != m.domain.size())
        throw SemanticsError("extent of '" + t.name() + "' does not match the domain size");
    return it->second;
}

bool evalAtom(const AnalyticModel& m, const Atom& a, ImportPolicy pol)
{
    const auto& s = extentOf(m, a.subject);
    const auto& p = extentOf(m, a.predicate);
    bool sNonEmpty = false, subset = true, meet = false;
    for (std::size_t k = 0; k < m.domain.size(); ++k) {
        sNonEmpty = sNonEmpty || s[k];
        if (s[k] && !p[k])
            subset = false;
        if (s[k] && p[k])
            meet = true;
    }
    const bool every = subset && (sNonEmpty || !pol.existentialImport);
    switch (a.copula) {
    case Copula::AnA: return every;
    case Copula::AnE: return !meet;
    case Copula::AnI: return meet;
    case Copula::AnO: return !every;
    default:
        throw SemanticsError("synthetic copula '" + std::string(copulaToken(a.copula)) +
                             "' in analytic evaluation");
    }
}

}  // namespace

bool evalAnalytic(const AnalyticModel& m, const Formula& f, ImportPolicy pol)
{
    switch (f.kind()) {
    case Formula::Kind::Atom: return evalAtom(m, f.asAtom(), pol);
    case Formula::Kind::Not: return !evalAnalytic(m, f.operand(), pol);
    case Formula::Kind::And: return evalAnalytic(m, f.lhs(), pol) && evalAnalytic(m, f.rhs(), pol);
    case Formula::Kind::Or: return evalAnalytic(m, f.lhs(), pol) || evalAnalytic(m, f.rhs(), pol);
    case Formula::Kind::Implies: return !evalAnalytic(m, f.lhs(), pol) || evalAnalytic(m, f.rhs(), pol);
    }
    return false;
}

AnalyticModelEnumerator::AnalyticModelEnumerator(std::vector<TermId> terms, unsigned maxDomain)
    : terms_(std::move(terms)), maxDomain_(maxDomain)
{
    if (maxDomain_ > kMaxAnalyticDomain)
        throw BoundError("analytic domain bound " + std::to_string(maxDomain_) + " exceeds " +
                         std::to_string(kMaxAnalyticDomain));
    if (terms_.size() * maxDomain_ > 40)
        throw BoundError("analytic search space too large");
}

std::optional<AnalyticModel> AnalyticModelEnumerator::next()
{
    const std::size_t nTerms = terms_.size();
    while (size_ <= maxDomain_) {
        const std::uint64_t perSize = std::uint64_t{1} << (size_ * nTerms);
        if (counter_ < perSize) {
            AnalyticModel m;
            for (unsigned k = 0; k < size_; ++k)
                m.domain.push_back(std::to_string(k + 1));
            // first term occupies the most significant block of bits
            for (std::size_t t = 0; t < nTerms; ++t) {
                const unsigned shift = static_cast<unsigned>((nTerms - 1 - t) * size_);
                std::vector<bool> bits(size_);
                for (unsigned k = 0; k < size_; ++k)
                    bits[k] = ((counter_ >> (shift + size_ - 1 - k)) & 1U) != 0;
                m.ext[terms_[t].name()] = std::move(bits);
            }
            ++counter_;
            return m;
        }
        ++size_;
        counter_ = 0;
    }
    return std::nullopt;
}

std::uint64_t AnalyticModelEnumerator::total() const
{
    std::uint64_t n = 0;
    for (unsigned d = 0; d <= maxDomain_; ++d)
        n += std::uint64_t{1} << (d * terms_.size());
    return n;
}

std::vector<AnalyticModel> enumerateAnalyticModels(const std::vector<TermId>& terms, unsigned maxDomain)
{
    AnalyticModelEnumerator e(terms, maxDomain);
    std::vector<AnalyticModel> out;
    while (auto m = e.next())
        out.push_back(std::move(*m));
    return out;
}

}  // namespace syllogic
