#include "syllogic/proof.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include "syllogic/opposition.hpp"

namespace syllogic {

bool AxiomSet::allows(std::string_view id) const noexcept
{
    if (id == "axiom5") return axiom5;
    if (id == "axiom6") return axiom6;
    if (id == "axiom7") return axiom7;
    if (id == "axiom8") return axiom8;
    if (id == "def-o" || id == "def-e") return definitional;
    return false;
}

const Schema& axiomSchema(std::string_view id)
{
    static const std::map<std::string, Schema, std::less<>> schemas = [] {
        const std::vector<std::string> sp = {"S", "P"};
        const std::vector<std::string> msp = {"M", "P", "S"};
        std::map<std::string, Schema, std::less<>> m;
        m.emplace("axiom5", Schema::fromText("S sa P -> S se P", sp));
        m.emplace("axiom6", Schema::fromText("S so P -> P so S", sp));
        m.emplace("axiom7", Schema::fromText("(M sa P & S sa M) -> S sa P", msp));
        m.emplace("axiom8", Schema::fromText("(M sa P & S se M) -> S se P", msp));
        m.emplace("def-o", Schema::fromText("(S so P -> ~S sa P) & (~S sa P -> S so P)", sp));
        m.emplace("def-e", Schema::fromText("(S se P -> ~S si P) & (~S si P -> S se P)", sp));
        return m;
    }();
    auto it = schemas.find(id);
    if (it == schemas.end())
        throw std::invalid_argument("unknown axiom schema '" + std::string(id) + "'");
    return it->second;
}

// ---------------------------------------------------------------------------

bool isTautology(const Formula& f)
{
    const auto atoms = f.atoms();
    if (atoms.size() > kMaxTautologyAtoms)
        throw AtomBudgetError("tautology check limited to " + std::to_string(kMaxTautologyAtoms) + " atoms, got " +
                              std::to_string(atoms.size()));
    std::map<Atom, std::size_t> slot;
    for (std::size_t k = 0; k < atoms.size(); ++k)
        slot.emplace(atoms[k], k);

    std::function<bool(const Formula&, unsigned)> eval = [&](const Formula& g, unsigned v) -> bool {
        switch (g.kind()) {
        case Formula::Kind::Atom: return ((v >> slot.at(g.asAtom())) & 1U) != 0;
        case Formula::Kind::Not: return !eval(g.operand(), v);
        case Formula::Kind::And: return eval(g.lhs(), v) && eval(g.rhs(), v);
        case Formula::Kind::Or: return eval(g.lhs(), v) || eval(g.rhs(), v);
        case Formula::Kind::Implies: return !eval(g.lhs(), v) || eval(g.rhs(), v);
        }
        return false;
    };
    const unsigned rows = 1U << atoms.size();
    for (unsigned v = 0; v < rows; ++v)
        if (!eval(f, v))
            return false;
    return true;
}

ProofVerdict checkDerivation(const Derivation& d, const AxiomSet& ax)
{
    if (!ax.anyEnabled())
        throw std::invalid_argument("axiom set enables no schema");

    ProofVerdict v;
    std::map<unsigned, const DerivationLine*> seen;
    auto reject = [&](const DerivationLine& line, std::string reason) {
        v.ok = false;
        v.rejectedLine = line.index;
        v.reason = std::move(reason);
        v.schemasUsed.clear();
        return v;
    };

    if (d.lines.empty()) {
        v.reason = "empty derivation";
        return v;
    }

    std::optional<unsigned> previous;
    for (const auto& line : d.lines) {
        if (previous && line.index <= *previous)
            return reject(line, "line indices must be strictly increasing");
        previous = line.index;

        if (const auto* inst = std::get_if<AxiomInstance>(&line.justification)) {
            if (!ax.allows(inst->schemaId))
                return reject(line, "schema '" + inst->schemaId + "' is not in the axiom set");
            std::optional<Formula> expected;
            try {
                expected = instantiate(axiomSchema(inst->schemaId), inst->binding);
            } catch (const std::exception& e) {
                return reject(line, e.what());
            }
            if (!(*expected == line.formula))
                return reject(line, "not an instance of " + inst->schemaId + ": expected '" + render(*expected) + "'");
            v.schemasUsed.insert(inst->schemaId);
        } else if (std::holds_alternative<Tautology>(line.justification)) {
            bool taut = false;
            try {
                taut = isTautology(line.formula);
            } catch (const AtomBudgetError& e) {
                return reject(line, e.what());
            }
            if (!taut)
                return reject(line, "not a propositional tautology");
        } else {
            const auto& mp = std::get<ModusPonens>(line.justification);
            auto prem = seen.find(mp.premise);
            auto impl = seen.find(mp.implication);
            if (prem == seen.end() || impl == seen.end())
                return reject(line, "modus ponens cites a line that is not earlier in the derivation");
            const Formula& conditional = impl->second->formula;
            if (conditional.kind() != Formula::Kind::Implies)
                return reject(line, "line " + std::to_string(mp.implication) + " is not an implication");
            if (!(conditional.lhs() == prem->second->formula))
                return reject(line, "antecedent of line " + std::to_string(mp.implication) +
                                        " does not match line " + std::to_string(mp.premise));
            if (!(conditional.rhs() == line.formula))
                return reject(line, "consequent of line " + std::to_string(mp.implication) +
                                        " does not match this line");
        }
        seen.emplace(line.index, &line);
    }

    const auto& last = d.lines.back();
    if (d.goal && !(last.formula == *d.goal))
        return reject(last, "last line does not match the goal '" + render(*d.goal) + "'");
    v.ok = true;
    v.conclusion = last.formula;
    return v;
}

// ---------------------------------------------------------------------------
// Script format

ScriptError::ScriptError(std::size_t line, const std::string& what)
    : std::runtime_error("proof script line " + std::to_string(line) + ": " + what), line_(line)
{
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string> words(std::string_view s)
{
    std::istringstream is{std::string(s)};
    std::vector<std::string> out;
    for (std::string w; is >> w;)
        out.push_back(w);
    return out;
}

unsigned toIndex(const std::string& w, std::size_t lineNo)
{
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || ptr != w.data() + w.size())
        throw ScriptError(lineNo, "expected a line number, got '" + w + "'");
    return v;
}

Justification parseJustification(std::string_view text, std::size_t lineNo)
{
    const auto ws = words(text);
    if (ws.empty())
        throw ScriptError(lineNo, "missing justification");
    const std::string& head = ws[0];
    if (head == "taut") {
        if (ws.size() != 1)
            throw ScriptError(lineNo, "'taut' takes no arguments");
        return Tautology{};
    }
    if (head == "mp") {
        if (ws.size() != 3)
            throw ScriptError(lineNo, "'mp' takes two line numbers");
        return ModusPonens{toIndex(ws[1], lineNo), toIndex(ws[2], lineNo)};
    }
    if (head == "def-o" || head == "def-e") {
        if (ws.size() != 3)
            throw ScriptError(lineNo, "'" + head + "' takes two terms");
        return AxiomInstance{head, {{"S", ws[1]}, {"P", ws[2]}}};
    }
    if (head.rfind("axiom", 0) == 0) {
        try {
            axiomSchema(head);
        } catch (const std::invalid_argument& e) {
            throw ScriptError(lineNo, e.what());
        }
        AxiomInstance inst{head, {}};
        for (std::size_t k = 1; k < ws.size(); ++k) {
            const auto pos = ws[k].find(":=");
            if (pos == std::string::npos || pos == 0)
                throw ScriptError(lineNo, "expected V:=T binding, got '" + ws[k] + "'");
            inst.binding[ws[k].substr(0, pos)] = ws[k].substr(pos + 2);
        }
        return inst;
    }
    throw ScriptError(lineNo, "unknown justification '" + head + "'");
}

Formula parseFormulaAt(std::string_view text, std::size_t lineNo)
{
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw ScriptError(lineNo, e.what());
    }
}

}  // namespace

Derivation parseProofScript(std::string_view text)
{
    Derivation d;
    std::size_t lineNo = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++lineNo;

        const auto line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        if (line.rfind("goal:", 0) == 0) {
            d.goal = parseFormulaAt(line.substr(5), lineNo);
            continue;
        }
        const auto dot = line.find('.');
        const auto semi = line.rfind(';');
        if (dot == std::string_view::npos || semi == std::string_view::npos || semi < dot)
            throw ScriptError(lineNo, "expected 'n. <formula> ; <justification>'");
        const unsigned index = toIndex(std::string(trim(line.substr(0, dot))), lineNo);
        Formula f = parseFormulaAt(line.substr(dot + 1, semi - dot - 1), lineNo);
        d.lines.push_back({index, std::move(f), parseJustification(line.substr(semi + 1), lineNo)});
    }
    return d;
}

std::string renderProofScript(const Derivation& d)
{
    std::ostringstream os;
    if (d.goal)
        os << "goal: " << render(*d.goal) << '\n';
    for (const auto& line : d.lines) {
        os << line.index << ". " << render(line.formula) << " ; ";
        if (const auto* inst = std::get_if<AxiomInstance>(&line.justification)) {
            if (inst->schemaId == "def-o" || inst->schemaId == "def-e") {
                os << inst->schemaId << ' ' << inst->binding.at("S") << ' ' << inst->binding.at("P");
            } else {
                os << inst->schemaId;
                for (const auto& [var, term] : inst->binding)
                    os << ' ' << var << ":=" << term;
            }
        } else if (std::holds_alternative<Tautology>(line.justification)) {
            os << "taut";
        } else {
            const auto& mp = std::get<ModusPonens>(line.justification);
            os << "mp " << mp.premise << ' ' << mp.implication;
        }
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Bundled derivations

namespace {

// Premises are instantiated over S, P; the derivation is
//   premises..., taut: p1 -> (p2 -> ... -> goal), then one mp per premise.
Derivation chainDerivation(const Formula& goal, const std::vector<std::string>& premiseIds)
{
    const Binding sp = {{"S", "S"}, {"P", "P"}};
    Derivation d;
    d.goal = goal;
    std::vector<Formula> premises;
    unsigned idx = 0;
    for (const auto& id : premiseIds) {
        Formula f = instantiate(axiomSchema(id), sp);
        premises.push_back(f);
        d.lines.push_back({++idx, f, AxiomInstance{id, sp}});
    }
    if (premises.size() == 1 && premises.front() == goal)
        return d;

    Formula curried = goal;
    for (std::size_t k = premises.size(); k-- > 0;)
        curried = Formula::implies(premises[k], curried);
    d.lines.push_back({++idx, curried, Tautology{}});

    unsigned current = idx;
    Formula rest = curried;
    for (std::size_t k = 0; k < premises.size(); ++k) {
        rest = rest.rhs();
        d.lines.push_back({++idx, rest, ModusPonens{static_cast<unsigned>(k + 1), current}});
        current = idx;
    }
    return d;
}

}  // namespace

const std::vector<BundledDerivation>& bundledDerivations()
{
    static const std::vector<BundledDerivation> all = [] {
        // Premises used by each theorem, in catalog order.
        const std::map<std::string, std::vector<std::string>> premises = {
            {"T01", {"def-o"}},           {"T02", {"def-o"}},           {"T03", {"def-e"}},
            {"T04", {"def-e"}},           {"T05", {"def-e"}},           {"T06", {"def-e"}},
            {"T07", {"def-o"}},           {"T08", {"def-o"}},           {"T09", {"axiom5", "def-e"}},
            {"T10", {"axiom5", "def-e"}}, {"T11", {"axiom5", "def-o"}}, {"T12", {"axiom5", "def-o"}},
            {"T13", {"axiom5"}},          {"T14", {"axiom5", "def-e", "def-o"}},
            {"T15", {"def-e"}},           {"T16", {"def-e"}},           {"T17", {"def-o"}},
            {"T18", {"def-o"}},           {"T19", {"axiom5", "def-e"}}, {"T20", {"axiom5", "def-o"}},
        };
        std::vector<BundledDerivation> out;
        for (const auto& entry : catalog()) {
            if (entry.source != EntrySource::TheoremList)
                continue;
            out.push_back({entry.id, chainDerivation(entry.schema.body(), premises.at(entry.id))});
        }
        return out;
    }();
    return all;
}

}  // namespace syllogic
