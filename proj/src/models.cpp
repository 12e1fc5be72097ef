#include "syllogic/models.hpp"

#include <algorithm>
#include <sstream>

namespace syllogic {

std::size_t CopulaStructure::indexOf(const std::string& individual) const
{
    auto it = std::find(universe.begin(), universe.end(), individual);
    if (it == universe.end())
        throw SemanticsError("unknown individual '" + individual + "'");
    return static_cast<std::size_t>(it - universe.begin());
}

std::size_t modelSize(const Model& m)
{
    return std::visit(
        [](const auto& x) -> std::size_t {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AnalyticModel>)
                return x.domain.size();
            else
                return x.universe.size();
        },
        m);
}

namespace {

std::string setOf(const std::vector<std::string>& xs)
{
    std::string s = "{";
    for (std::size_t k = 0; k < xs.size(); ++k)
        s += (k ? "," : "") + xs[k];
    return s + "}";
}

template <class Bits>
std::vector<std::string> members(const std::vector<std::string>& ids, const Bits& bits)
{
    std::vector<std::string> out;
    for (std::size_t k = 0; k < ids.size() && k < bits.size(); ++k)
        if (bits[k])
            out.push_back(ids[k]);
    return out;
}

}  // namespace

std::string describe(const Model& m)
{
    std::ostringstream os;
    if (const auto* a = std::get_if<AnalyticModel>(&m)) {
        os << "D=" << setOf(a->domain);
        for (const auto& [term, bits] : a->ext)
            os << "; " << term << "=" << setOf(members(a->domain, bits));
    } else if (const auto* s = std::get_if<SyntheticModel>(&m)) {
        os << "U=" << setOf(s->universe);
        for (std::size_t k = 0; k < s->universe.size(); ++k) {
            std::vector<std::string> ts;
            for (const auto& [term, bits] : s->is)
                if (bits[k])
                    ts.push_back(term);
            os << "; " << s->universe[k] << ":" << setOf(ts);
        }
    } else {
        const auto& c = std::get<CopulaStructure>(m);
        os << "U=" << setOf(c.universe) << "; isPrim={";
        bool first = true;
        for (std::size_t i = 0; i < c.universe.size(); ++i)
            for (std::size_t j = 0; j < c.universe.size(); ++j)
                if (c.isPrim[i][j]) {
                    os << (first ? "" : ",") << "(" << c.universe[i] << "," << c.universe[j] << ")";
                    first = false;
                }
        os << "}";
        for (const auto& [term, idx] : c.denote)
            os << "; " << term << "->" << c.universe[idx];
    }
    return os.str();
}

}  // namespace syllogic
