#include "syllogic/io.hpp"

#include <algorithm>
#include <set>

namespace syllogic {

namespace {

std::vector<std::string> stringList(const Json& j, const char* what)
{
    if (!j.is_array())
        throw ModelFormatError(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string())
            throw ModelFormatError(std::string(what) + " must be an array of strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

std::size_t position(const std::vector<std::string>& ids, const std::string& id, const char* what)
{
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end())
        throw ModelFormatError(std::string(what) + " refers to unknown individual '" + id + "'");
    return static_cast<std::size_t>(it - ids.begin());
}

void checkUnique(const std::vector<std::string>& ids, const char* what)
{
    std::set<std::string> s(ids.begin(), ids.end());
    if (s.size() != ids.size())
        throw ModelFormatError(std::string(what) + " lists an individual twice");
}

void checkTerm(const std::string& t)
{
    if (!TermId::isValidName(t) || TermId::isReserved(t))
        throw ModelFormatError("invalid term name '" + t + "'");
}

AnalyticModel analyticFromJson(const Json& j)
{
    AnalyticModel m;
    m.domain = stringList(j.at("domain"), "domain");
    checkUnique(m.domain, "domain");
    const auto& ext = j.at("ext");
    if (!ext.is_object())
        throw ModelFormatError("ext must be an object");
    for (const auto& [term, members] : ext.items()) {
        checkTerm(term);
        std::vector<bool> bits(m.domain.size());
        for (const auto& id : stringList(members, "extent"))
            bits[position(m.domain, id, "extent")] = true;
        m.ext[term] = std::move(bits);
    }
    return m;
}

SyntheticModel syntheticFromJson(const Json& j)
{
    SyntheticModel m;
    m.universe = stringList(j.at("universe"), "universe");
    checkUnique(m.universe, "universe");
    if (j.contains("terms"))
        for (const auto& t : stringList(j.at("terms"), "terms")) {
            checkTerm(t);
            m.is[t].assign(m.universe.size(), false);
        }
    const auto& is = j.at("is");
    if (!is.is_object())
        throw ModelFormatError("is must be an object");
    for (const auto& [individual, terms] : is.items()) {
        const auto k = position(m.universe, individual, "is");
        for (const auto& t : stringList(terms, "is entry")) {
            checkTerm(t);
            auto& row = m.is[t];
            row.resize(m.universe.size());
            row[k] = true;
        }
    }
    return m;
}

CopulaStructure structureFromJson(const Json& j)
{
    CopulaStructure c;
    c.universe = stringList(j.at("universe"), "universe");
    checkUnique(c.universe, "universe");
    const std::size_t n = c.universe.size();
    c.isPrim.assign(n, std::vector<bool>(n));
    const auto& rel = j.at("isPrim");
    if (!rel.is_array())
        throw ModelFormatError("isPrim must be an array of pairs");
    for (const auto& pair : rel) {
        const auto p = stringList(pair, "isPrim pair");
        if (p.size() != 2)
            throw ModelFormatError("isPrim entries must be pairs");
        c.isPrim[position(c.universe, p[0], "isPrim")][position(c.universe, p[1], "isPrim")] = true;
    }
    const auto& den = j.at("denote");
    if (!den.is_object())
        throw ModelFormatError("denote must be an object");
    for (const auto& [term, target] : den.items()) {
        checkTerm(term);
        if (!target.is_string())
            throw ModelFormatError("denote values must be individual names");
        c.denote[term] = position(c.universe, target.get<std::string>(), "denote");
    }
    return c;
}

Json toArray(const std::vector<std::string>& xs)
{
    Json a = Json::array();
    for (const auto& x : xs)
        a.push_back(x);
    return a;
}

}  // namespace

Model modelFromJson(const Json& j)
{
    if (!j.is_object())
        throw ModelFormatError("model must be a JSON object");
    try {
        if (j.contains("domain"))
            return analyticFromJson(j);
        if (j.contains("isPrim"))
            return structureFromJson(j);
        if (j.contains("universe"))
            return syntheticFromJson(j);
    } catch (const Json::exception& e) {
        throw ModelFormatError(e.what());
    }
    throw ModelFormatError("model needs a \"domain\" or \"universe\" key");
}

Model modelFromText(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ModelFormatError(e.what());
    }
    return modelFromJson(j);
}

Json modelToJson(const Model& m)
{
    Json j;
    if (const auto* a = std::get_if<AnalyticModel>(&m)) {
        j["domain"] = toArray(a->domain);
        Json ext = Json::object();
        for (const auto& [term, bits] : a->ext) {
            Json members = Json::array();
            for (std::size_t k = 0; k < a->domain.size(); ++k)
                if (bits[k])
                    members.push_back(a->domain[k]);
            ext[term] = std::move(members);
        }
        j["ext"] = std::move(ext);
    } else if (const auto* s = std::get_if<SyntheticModel>(&m)) {
        j["universe"] = toArray(s->universe);
        Json is = Json::object();
        for (std::size_t k = 0; k < s->universe.size(); ++k) {
            Json terms = Json::array();
            for (const auto& [term, bits] : s->is)
                if (bits[k])
                    terms.push_back(term);
            is[s->universe[k]] = std::move(terms);
        }
        j["is"] = std::move(is);
        Json terms = Json::array();
        for (const auto& [term, bits] : s->is)
            terms.push_back(term);
        j["terms"] = std::move(terms);
    } else {
        const auto& c = std::get<CopulaStructure>(m);
        j["universe"] = toArray(c.universe);
        Json rel = Json::array();
        for (std::size_t x = 0; x < c.universe.size(); ++x)
            for (std::size_t y = 0; y < c.universe.size(); ++y)
                if (c.isPrim[x][y])
                    rel.push_back(Json::array({c.universe[x], c.universe[y]}));
        j["isPrim"] = std::move(rel);
        Json den = Json::object();
        for (const auto& [term, idx] : c.denote)
            den[term] = c.universe[idx];
        j["denote"] = std::move(den);
    }
    return j;
}

Json verdictToJson(const Verdict& v)
{
    Json j;
    j["status"] = v.valid ? "valid" : "counterexample";
    j["bound"] = v.bound;
    if (v.counterexample) {
        j["size"] = modelSize(*v.counterexample);
        j["witness"] = modelToJson(*v.counterexample);
        Json trace = Json::object();
        for (const auto& a : v.trace)
            trace[a.atom] = a.value;
        j["trace"] = std::move(trace);
    }
    return j;
}

Json relationToJson(const OppositionRelation& r)
{
    Json j;
    j["relation"] = relationName(r.kind);
    j["bound"] = r.bound;
    Json w = Json::object();
    auto put = [&](const char* label, const std::optional<Model>& m) {
        if (m)
            w[label] = modelToJson(*m);
    };
    put("bothTrue", r.bothTrue);
    put("bothFalse", r.bothFalse);
    put("firstOnly", r.firstOnly);
    put("secondOnly", r.secondOnly);
    j["witnesses"] = std::move(w);
    return j;
}

Json squareToJson(const SquareReport& s)
{
    Json j;
    j["square"] = s.name;
    j["semantics"] = s.semantics;
    j["bound"] = s.bound;
    Json corners = Json::object();
    for (const auto& label : {"a", "i", "e", "o"})
        if (auto it = s.corners.find(label); it != s.corners.end())
            corners[label] = it->second;
    j["corners"] = std::move(corners);
    Json pairs = Json::array();
    for (const auto& p : s.pairs) {
        Json pj;
        pj["first"] = p.expected.first;
        pj["second"] = p.expected.second;
        pj["expected"] = relationName(p.expected.kind);
        pj["observed"] = relationToJson(p.observed);
        pj["pass"] = p.pass;
        pairs.push_back(std::move(pj));
    }
    j["pairs"] = std::move(pairs);
    j["pass"] = s.pass;
    return j;
}

}  // namespace syllogic
