#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "syllogic/semantics.hpp"
#include "syllogic/synthetic.hpp"

using namespace syllogic;

namespace {

// Quantifier-expansion oracle. A world is a list of individuals and the set of
// (individual, term) pairs for which "A is T" holds.
struct World {
    int size = 0;
    std::set<std::pair<int, std::string>> is;

    bool holds(int a, const std::string& t) const { return is.count({a, t}) > 0; }
    bool exists(const std::function<bool(int)>& p) const
    {
        for (int a = 0; a < size; ++a)
            if (p(a))
                return true;
        return false;
    }
    bool forall(const std::function<bool(int)>& p) const
    {
        for (int a = 0; a < size; ++a)
            if (!p(a))
                return false;
        return true;
    }
};

bool oracleSa(const World& w, const std::string& s, const std::string& p)
{
    return w.exists([&](int a) { return w.holds(a, s); }) ||
           w.forall([&](int a) { return w.holds(a, p) && w.holds(a, s); });
}
bool oracleSi(const World& w, const std::string& s, const std::string& p)
{
    return w.forall([&](int a) { return w.holds(a, p) && !w.holds(a, s); });
}
bool oracleSo(const World& w, const std::string& s, const std::string& p)
{
    return w.forall([&](int a) { return !w.holds(a, s); }) &&
           w.exists([&](int a) { return !w.holds(a, p) || !w.holds(a, s); });
}
bool oracleSe(const World& w, const std::string& s, const std::string& p)
{
    return w.exists([&](int a) { return !w.holds(a, p) || w.holds(a, s); });
}

bool oracleAtom(const World& w, const Atom& a)
{
    const auto& s = a.subject.name();
    const auto& p = a.predicate.name();
    switch (a.copula) {
    case Copula::SyA: return oracleSa(w, s, p);
    case Copula::SyI: return oracleSi(w, s, p);
    case Copula::SyO: return oracleSo(w, s, p);
    case Copula::SyE: return oracleSe(w, s, p);
    default: throw std::logic_error("analytic copula");
    }
}

bool oracleEval(const World& w, const Formula& f)
{
    switch (f.kind()) {
    case Formula::Kind::Atom: return oracleAtom(w, f.asAtom());
    case Formula::Kind::Not: return !oracleEval(w, f.operand());
    case Formula::Kind::And: return oracleEval(w, f.lhs()) && oracleEval(w, f.rhs());
    case Formula::Kind::Or: return oracleEval(w, f.lhs()) || oracleEval(w, f.rhs());
    case Formula::Kind::Implies: return !oracleEval(w, f.lhs()) || oracleEval(w, f.rhs());
    }
    return false;
}

// Every world over `terms` with exactly `n` individuals, built by counting.
std::vector<World> worlds(const std::vector<std::string>& terms, int n)
{
    std::vector<World> out;
    const int cells = n * static_cast<int>(terms.size());
    for (long code = 0; code < (1L << cells); ++code) {
        World w;
        w.size = n;
        for (int c = 0; c < cells; ++c)
            if (code >> c & 1)
                w.is.insert({c / static_cast<int>(terms.size()), terms[c % terms.size()]});
        out.push_back(std::move(w));
    }
    return out;
}

World worldOf(const SyntheticModel& m)
{
    World w;
    w.size = static_cast<int>(m.universe.size());
    for (const auto& [t, bits] : m.is)
        for (int a = 0; a < w.size; ++a)
            if (bits[a])
                w.is.insert({a, t});
    return w;
}

SyntheticModel one(bool s, bool p)
{
    return SyntheticModel{{"u"}, {{"P", {p}}, {"S", {s}}}};
}

const SyntheticOptions kDirect{};
const SyntheticOptions kDirectEmpty{Reading::Direct, true};

bool ev(const SyntheticModel& m, const char* f, const SyntheticOptions& o = kDirect)
{
    return evalSynthetic(m, parse(f), o);
}

std::vector<TermId> ids(std::initializer_list<const char*> names)
{
    std::vector<TermId> out;
    for (auto n : names)
        out.emplace_back(n);
    return out;
}

// isPrim from a list of pairs over named individuals.
CopulaStructure structure(std::vector<std::string> u, std::vector<std::pair<std::string, std::string>> rel)
{
    CopulaStructure c;
    c.universe = std::move(u);
    c.isPrim.assign(c.universe.size(), std::vector<bool>(c.universe.size(), false));
    for (const auto& [x, y] : rel)
        c.isPrim[c.indexOf(x)][c.indexOf(y)] = true;
    return c;
}

bool oracleDerived(const CopulaStructure& c, int a, int b, bool charitable)
{
    const int n = static_cast<int>(c.universe.size());
    auto prim = [&](int x, int y) { return static_cast<bool>(c.isPrim[x][y]); };
    bool someA = false;
    for (int x = 0; x < n; ++x)
        someA = someA || prim(x, a);
    bool unique = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (prim(x, a) && prim(y, a) && !prim(x, y))
                unique = false;
    bool third = true;
    for (int x = 0; x < n; ++x)
        third = third && (charitable ? (!prim(x, a) || prim(x, b)) : (prim(x, a) && prim(x, b)));
    return someA && unique && third;
}

}  // namespace

TEST_CASE("atom examples")
{
    const auto m = one(false, true);
    CHECK(ev(m, "S si P"));
    CHECK_FALSE(ev(m, "S sa P"));
    CHECK(ev(m, "S so P"));
    CHECK_FALSE(ev(m, "S se P"));

    CHECK(ev(one(true, false), "S sa P"));

    const SyntheticModel empty{{}, {{"P", {}}, {"S", {}}}};
    CHECK(ev(empty, "S si P", kDirectEmpty));
    CHECK(ev(empty, "S sa P", kDirectEmpty));
    CHECK_THROWS_AS(ev(empty, "S si P"), SemanticsError);
}

TEST_CASE("evaluation errors")
{
    CHECK_THROWS_AS(ev(one(true, true), "S a P"), SemanticsError);
    CHECK_THROWS_AS(ev(one(true, true), "S sa Q"), SemanticsError);
}

TEST_CASE("direct reading agrees with the quantifier oracle")
{
    const std::vector<const char*> formulas = {"S sa P", "S si P", "S so P", "S se P",
                                               "(M sa P & S se M) -> S se P", "S so P -> P so S",
                                               "(M sa P & S sa M) -> S sa P", "M si S | ~(P se M)"};
    for (const auto& m : enumerateSyntheticModels(ids({"M", "P", "S"}), 3, kDirectEmpty)) {
        const World w = worldOf(m);
        for (const char* f : formulas)
            CHECK(ev(m, f, kDirectEmpty) == oracleEval(w, parse(f)));
    }
}

TEST_CASE("definitional negations and expanded forms")
{
    for (const auto& m : enumerateSyntheticModels(ids({"P", "S"}), 4, kDirectEmpty)) {
        CHECK(ev(m, "S so P", kDirectEmpty) == !ev(m, "S sa P", kDirectEmpty));
        CHECK(ev(m, "S se P", kDirectEmpty) == !ev(m, "S si P", kDirectEmpty));
        for (const char* t : {"S so P", "S se P", "S sa P", "S si P"}) {
            const Atom a = parse(t).asAtom();
            CHECK(evalSyntheticAtom(m, a, AtomForm::Expanded) == evalSyntheticAtom(m, a, AtomForm::Unexpanded));
        }
    }
}

TEST_CASE("synthetic square over nonempty universes")
{
    std::size_t count = 0;
    for (int n = 1; n <= 3; ++n)
        for (const World& w : worlds({"S", "P"}, n)) {
            ++count;
            const bool a = oracleSa(w, "S", "P"), i = oracleSi(w, "S", "P");
            const bool e = oracleSe(w, "S", "P"), o = oracleSo(w, "S", "P");
            CHECK_FALSE((a && i));
            CHECK((e || o));
            CHECK(a != o);
            CHECK(e != i);
            CHECK((!a || e));
            CHECK((!i || o));
        }
    CHECK(count == 84);

    // The empty universe breaks contrariety.
    const World none;
    CHECK(oracleSa(none, "S", "P"));
    CHECK(oracleSi(none, "S", "P"));
}

TEST_CASE("model counts")
{
    CHECK(enumerateSyntheticModels(ids({"P", "S"}), 1, kDirectEmpty).size() == 5);
    CHECK(enumerateSyntheticModels(ids({"P", "S"}), 2, kDirect).size() == 20);
    CHECK(enumerateSyntheticModels(ids({"M", "P", "S"}), 2, kDirect).size() == 8 + 64);
    CHECK(enumerateSyntheticModels(ids({"M", "P", "S"}), 2, kDirectEmpty).size() == 8 + 64 + 1);
    CHECK(SyntheticModelEnumerator(ids({"P", "S"}), 3, false).total() == 84);
    CHECK_THROWS_AS(SyntheticModelEnumerator(ids({"S"}), 5, false), BoundError);

    // Derived readings: n^2 relation bits times n^terms denotations.
    const SyntheticOptions lit{Reading::DerivedLiteral, false};
    const auto cs = enumerateCopulaStructures(ids({"P", "S"}), 2, lit);
    CHECK(cs.size() == 2 * 1 + 16 * 4);
    CHECK(CopulaStructureEnumerator(ids({"P", "S"}), 2, false).total() == cs.size());
    // Denotations into an empty universe do not exist.
    CHECK(CopulaStructureEnumerator(ids({"P", "S"}), 2, true).total() == cs.size());
    CHECK_THROWS_AS(CopulaStructureEnumerator(ids({"S"}), 4, false), BoundError);
}

TEST_CASE("enumeration order and uniqueness")
{
    const auto ms = enumerateSyntheticModels(ids({"P", "S"}), 3, kDirect);
    std::set<std::string> seen;
    for (std::size_t k = 0; k < ms.size(); ++k) {
        CHECK(seen.insert(describe(Model{ms[k]})).second);
        if (k)
            CHECK(ms[k - 1].universe.size() <= ms[k].universe.size());
    }
    const auto small = enumerateSyntheticModels(ids({"P", "S"}), 2, kDirect);
    for (std::size_t k = 0; k < small.size(); ++k)
        CHECK(small[k] == ms[k]);
}

TEST_CASE("composite copula")
{
    auto c = structure({"c", "a", "b"}, {{"c", "a"}, {"c", "b"}});
    CHECK_FALSE(derivedCopula(c, "a", "b", false));
    CHECK_FALSE(derivedCopula(c, "a", "b", true));

    c.isPrim[0][0] = true;
    CHECK(derivedCopula(c, "a", "b", true));
    CHECK_FALSE(derivedCopula(c, "a", "b", false));

    const auto none = structure({"c", "a", "b"}, {});
    for (bool ch : {false, true})
        for (std::size_t x = 0; x < 3; ++x)
            for (std::size_t y = 0; y < 3; ++y)
                CHECK_FALSE(derivedCopula(none, x, y, ch));

    CHECK_THROWS(derivedCopula(c, "a", "zz", true));
}

TEST_CASE("composite copula agrees with the oracle on every small structure")
{
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::string> u;
        for (int k = 0; k < n; ++k)
            u.push_back(std::string(1, static_cast<char>('a' + k)));
        for (long bits = 0; bits < (1L << (n * n)); ++bits) {
            CopulaStructure c = structure(u, {});
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    c.isPrim[x][y] = bits >> (x * n + y) & 1;
            for (bool ch : {false, true})
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        CHECK(derivedCopula(c, a, b, ch) == oracleDerived(c, a, b, ch));
        }
    }
}

TEST_CASE("derived readings evaluate through the induced model")
{
    for (const Reading r : {Reading::DerivedLiteral, Reading::DerivedCharitable}) {
        const SyntheticOptions o{r, false};
        const bool ch = r == Reading::DerivedCharitable;
        for (const auto& c : enumerateCopulaStructures(ids({"P", "S"}), 2, o)) {
            const SyntheticModel m = inducedModel(c, ch);
            const World w = worldOf(m);
            for (std::size_t a = 0; a < c.universe.size(); ++a)
                for (const auto& [t, d] : c.denote)
                    CHECK(w.holds(static_cast<int>(a), t) == oracleDerived(c, a, d, ch));
            for (const char* f : {"S sa P", "S si P", "S so P", "S se P"})
                CHECK(evalSynthetic(c, parse(f), o) == oracleEval(w, parse(f)));
        }
    }
    CHECK(readingName(Reading::DerivedCharitable) == "derived-charitable");
}

TEST_CASE("validity examples")
{
    CHECK(decideSyntheticValidity(parse("S sa P -> S se P"), 3, kDirect).valid);

    const Verdict a6 = decideSyntheticValidity(parse("S so P -> P so S"), 3, kDirect);
    REQUIRE_FALSE(a6.valid);
    const auto& m6 = std::get<SyntheticModel>(*a6.counterexample);
    CHECK(m6.universe.size() == 1);
    CHECK(m6.is.at("S") == std::vector<bool>{false});
    CHECK(m6.is.at("P") == std::vector<bool>{true});

    const Verdict a8 = decideSyntheticValidity(parse("(M sa P & S se M) -> S se P"), 3, kDirect);
    REQUIRE_FALSE(a8.valid);
    const auto& m8 = std::get<SyntheticModel>(*a8.counterexample);
    CHECK(m8.universe.size() == 2);
    CHECK(m8.is.at("M")[0] != m8.is.at("M")[1]);
    CHECK(m8.is.at("P") == std::vector<bool>{true, true});
    CHECK(m8.is.at("S") == std::vector<bool>{false, false});
}

TEST_CASE("oracle confirms the countermodel sizes")
{
    auto minimalSize = [](const char* text, const std::vector<std::string>& terms) {
        const Formula f = parse(text);
        for (int n = 1; n <= 3; ++n)
            for (const World& w : worlds(terms, n))
                if (!oracleEval(w, f))
                    return n;
        return 0;
    };
    CHECK(minimalSize("S so P -> P so S", {"P", "S"}) == 1);
    CHECK(minimalSize("(M sa P & S se M) -> S se P", {"M", "P", "S"}) == 2);
    CHECK(minimalSize("S sa P -> S se P", {"P", "S"}) == 0);
    CHECK(minimalSize("(M sa P & S sa M) -> S sa P", {"M", "P", "S"}) == 0);

    // The A8 shape from the enumerator falsifies the oracle too.
    World w;
    w.size = 2;
    w.is = {{0, "M"}, {0, "P"}, {1, "P"}};
    CHECK_FALSE(oracleEval(w, parse("(M sa P & S se M) -> S se P")));
    World v;
    v.size = 1;
    v.is = {{0, "P"}};
    CHECK_FALSE(oracleEval(v, parse("S so P -> P so S")));
}

TEST_CASE("counterexamples persist at larger bounds")
{
    for (const char* f : {"S so P -> P so S", "(M sa P & S se M) -> S se P", "S sa P -> S si P"}) {
        std::optional<std::size_t> first;
        for (unsigned b = 1; b <= 4; ++b) {
            const Verdict v = decideSyntheticValidity(parse(f), b, kDirect);
            if (first) {
                REQUIRE_FALSE(v.valid);
                CHECK(modelSize(*v.counterexample) == *first);
            } else if (!v.valid) {
                first = modelSize(*v.counterexample);
            }
        }
        CHECK(first.has_value());
    }
}
