#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "syllogic/opposition.hpp"
#include "syllogic/proof.hpp"
#include "support/proof_mutants.hpp"

using namespace syllogic;
using syllogic::testing::mutants;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const SyntheticOptions kDirect{};

}  // namespace

TEST_CASE("tautology examples")
{
    CHECK(isTautology(parse("(S sa P -> S se P) -> (~(S se P) -> ~(S sa P))")));
    CHECK(isTautology(parse("S sa P | ~(S sa P)")));
    CHECK_FALSE(isTautology(parse("S sa P -> S se P")));
    CHECK_FALSE(isTautology(parse("S sa P -> P sa S")));
    CHECK(isTautology(parse("S a P -> S a P")));

    std::string big = "A0 sa B";
    for (int k = 1; k <= 12; ++k)
        big += " | A" + std::to_string(k) + " sa B";
    CHECK_THROWS_AS(isTautology(parse(big)), AtomBudgetError);
    big += " | ~(A0 sa B)";
    CHECK_THROWS_AS(isTautology(parse(big)), AtomBudgetError);
}

TEST_CASE("tautology check agrees with semantic validity on propositional shapes")
{
    // A tautology is valid in every semantics; the converse fails for e.g. axiom 5.
    for (const char* f : {"S sa P -> S sa P | S si P", "~(S sa P & ~S sa P)", "(S sa P -> S si P) | (S si P -> S sa P)"}) {
        CHECK(isTautology(parse(f)));
        CHECK(decideSyntheticValidity(parse(f), 2, kDirect).valid);
    }
    CHECK(decideSyntheticValidity(parse("S sa P -> S se P"), 3, kDirect).valid);
    CHECK_FALSE(isTautology(parse("S sa P -> S se P")));
}

TEST_CASE("axiom schemas")
{
    CHECK(render(axiomSchema("axiom5").body()) == "S sa P -> S se P");
    CHECK(render(axiomSchema("axiom6").body()) == "S so P -> P so S");
    CHECK(render(axiomSchema("def-o").body()) == "(S so P -> ~S sa P) & (~S sa P -> S so P)");
    CHECK_THROWS_AS(axiomSchema("axiom9"), std::invalid_argument);
    AxiomSet ax;
    CHECK(ax.allows("axiom5"));
    CHECK(ax.allows("def-e"));
    CHECK_FALSE(ax.allows("axiom6"));
    ax.definitional = false;
    CHECK_FALSE(ax.allows("def-o"));
    CHECK_FALSE(ax.includesRefutedAxiom());
    ax.axiom8 = true;
    CHECK(ax.includesRefutedAxiom());
}

TEST_CASE("fixture derivation of a => not i")
{
    Derivation d = parseProofScript(slurp(std::string(SYLLOGIC_FIXTURES) + "/t09.proof"));
    REQUIRE(d.lines.size() == 5);
    d.goal = parse("S sa P -> ~(S si P)");
    const auto v = checkDerivation(d, {});
    CHECK(v.ok);
    REQUIRE(v.conclusion);
    CHECK(*v.conclusion == parse("S sa P -> ~S si P"));
    CHECK(v.schemasUsed == std::set<std::string>{"axiom5", "def-e"});

    Derivation gap = d;
    gap.lines.erase(gap.lines.begin() + 1);
    const auto g = checkDerivation(gap, {});
    CHECK_FALSE(g.ok);
    CHECK(g.rejectedLine == 5u);

    AxiomSet noDefs;
    noDefs.definitional = false;
    const auto nd = checkDerivation(d, noDefs);
    CHECK_FALSE(nd.ok);
    CHECK(nd.rejectedLine == 2u);
}

TEST_CASE("rejections")
{
    Derivation bad;
    bad.lines.push_back({1, parse("P sa S -> S sa P"), AxiomInstance{"axiom5", {{"S", "S"}, {"P", "P"}}}});
    const auto v = checkDerivation(bad, {});
    CHECK_FALSE(v.ok);
    CHECK(v.rejectedLine == 1u);
    CHECK_FALSE(v.reason.empty());

    Derivation empty;
    CHECK_FALSE(checkDerivation(empty, {}).ok);

    Derivation order;
    order.lines.push_back({2, parse("S sa P -> S se P"), AxiomInstance{"axiom5", {{"S", "S"}, {"P", "P"}}}});
    order.lines.push_back({1, parse("S sa P | ~S sa P"), Tautology{}});
    CHECK_FALSE(checkDerivation(order, {}).ok);

    Derivation forward;
    forward.lines.push_back({1, parse("S sa P -> S se P"), ModusPonens{1, 2}});
    CHECK_FALSE(checkDerivation(forward, {}).ok);

    Derivation goalMiss;
    goalMiss.lines.push_back({1, parse("S sa P | ~S sa P"), Tautology{}});
    goalMiss.goal = parse("S si P | ~S si P");
    CHECK_FALSE(checkDerivation(goalMiss, {}).ok);

    Derivation unbound;
    unbound.lines.push_back({1, parse("S sa P -> S se P"), AxiomInstance{"axiom5", {{"S", "S"}}}});
    CHECK_FALSE(checkDerivation(unbound, {}).ok);

    AxiomSet none;
    none.axiom5 = false;
    none.definitional = false;
    Derivation taut;
    taut.lines.push_back({1, parse("S sa P | ~S sa P"), Tautology{}});
    CHECK_THROWS(checkDerivation(taut, none));
    Derivation ax5;
    ax5.lines.push_back({1, parse("S sa P -> S se P"), AxiomInstance{"axiom5", {{"S", "S"}, {"P", "P"}}}});
    CHECK_THROWS(checkDerivation(ax5, none));
    AxiomSet defsOnly = none;
    defsOnly.definitional = true;
    CHECK(checkDerivation(taut, defsOnly).ok);
    CHECK_FALSE(checkDerivation(ax5, defsOnly).ok);
}

TEST_CASE("script parsing")
{
    const auto d = parseProofScript("# comment\n\ngoal: S sa P -> S se P\n1. S sa P -> S se P ; axiom5 S:=S P:=P\n");
    REQUIRE(d.lines.size() == 1);
    REQUIRE(d.goal);
    CHECK(checkDerivation(d, {}).ok);

    auto errLine = [](const char* text) -> std::size_t {
        try {
            parseProofScript(text);
        } catch (const ScriptError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(errLine("1. S sa P ; taut\n2. S sa ; taut\n") == 2);
    CHECK(errLine("1. S sa P ; frobnicate\n") == 1);
    CHECK(errLine("\n\n1. S sa P ; mp 1\n") == 3);
    CHECK(errLine("x. S sa P ; taut\n") == 1);
    CHECK(errLine("1. S sa P ; axiom9\n") == 1);
    CHECK(errLine("1. S sa P taut\n") == 1);
}

TEST_CASE("script round trip")
{
    for (const auto& b : bundledDerivations()) {
        const std::string text = renderProofScript(b.derivation);
        const Derivation back = parseProofScript(text);
        CHECK(renderProofScript(back) == text);
        REQUIRE(back.lines.size() == b.derivation.lines.size());
        for (std::size_t k = 0; k < back.lines.size(); ++k) {
            CHECK(back.lines[k].formula == b.derivation.lines[k].formula);
            CHECK(back.lines[k].justification == b.derivation.lines[k].justification);
        }
    }
}

TEST_CASE("bundled derivations")
{
    const auto& all = bundledDerivations();
    REQUIRE(all.size() == 20);
    const auto& cat = catalog();
    for (std::size_t k = 0; k < all.size(); ++k) {
        INFO(all[k].id);
        CHECK(all[k].id == cat[k].id);
        const auto v = checkDerivation(all[k].derivation, {});
        CHECK(v.ok);
        REQUIRE(v.conclusion);
        CHECK(*v.conclusion == cat[k].schema.body());
        CHECK_FALSE(v.schemasUsed.count("axiom6"));
    }
    CHECK(all[12].derivation.lines.size() == 1);
}

TEST_CASE("every single-line mutation is rejected")
{
    std::size_t count = 0;
    for (const auto& b : bundledDerivations())
        for (const auto& m : mutants(b.derivation)) {
            ++count;
            INFO(b.id, "\n", renderProofScript(m));
            CHECK_FALSE(checkDerivation(m, {}).ok);
        }
    CHECK(count > 500);
}

TEST_CASE("accepted lines are valid in the model checker")
{
    for (const auto& b : bundledDerivations())
        for (const auto& line : b.derivation.lines)
            CHECK(decideSyntheticValidity(line.formula, 3, kDirect).valid);

    // Random derivations over three terms.
    std::mt19937 rng(5);
    const std::vector<std::string> terms = {"S", "P", "M"};
    const std::vector<std::string> schemas = {"axiom5", "axiom7", "def-o", "def-e"};
    AxiomSet ax;
    ax.axiom7 = true;
    for (int round = 0; round < 40; ++round) {
        Derivation d;
        unsigned idx = 0;
        for (int step = 0; step < 6; ++step) {
            const std::string id = schemas[rng() % schemas.size()];
            Binding b;
            for (const auto& t : axiomSchema(id).metavariables())
                b[t.name()] = terms[rng() % terms.size()];
            d.lines.push_back({++idx, instantiate(axiomSchema(id), b), AxiomInstance{id, b}});
            if (idx >= 2) {
                const unsigned i = 1 + static_cast<unsigned>(rng() % (idx - 1));
                const Formula& fi = d.lines[i - 1].formula;
                const Formula& fj = d.lines[idx - 1].formula;
                // fi -> (fj -> fi & fj), then two mp steps.
                const Formula t = Formula::implies(fi, Formula::implies(fj, Formula::conj(fi, fj)));
                d.lines.push_back({++idx, t, Tautology{}});
                d.lines.push_back({++idx, t.rhs(), ModusPonens{i, idx - 1}});
                d.lines.push_back({++idx, t.rhs().rhs(), ModusPonens{idx - 3, idx - 1}});
            }
        }
        const auto v = checkDerivation(d, ax);
        REQUIRE(v.ok);
        for (const auto& line : d.lines) {
            // Keep the bound-3 search within three terms.
            if (line.formula.terms().size() <= 3)
                CHECK(decideSyntheticValidity(line.formula, 3, kDirect).valid);
        }
    }
}
