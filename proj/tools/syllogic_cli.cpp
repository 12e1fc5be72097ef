// syllogic: command-line driver for the square-of-opposition workbench.
//
// Exit codes: 0 pass, 1 expectation failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "syllogic/formula.hpp"
#include "syllogic/io.hpp"
#include "syllogic/opposition.hpp"
#include "syllogic/proof.hpp"
#include "syllogic/report.hpp"
#include "syllogic/semantics.hpp"

namespace {

using namespace syllogic;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct SemanticsFlags {
    std::string semantics = "synthetic";
    std::string reading = "direct";
    std::string import = "on";
    bool allowEmpty = false;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--semantics", semantics, "analytic or synthetic")
            ->check(CLI::IsMember({"analytic", "synthetic"}));
        cmd->add_option("--reading", reading, "synthetic reading")
            ->check(CLI::IsMember({"direct", "derived", "derived-charitable"}));
        cmd->add_option("--import", import, "existential import for analytic semantics")
            ->check(CLI::IsMember({"on", "off"}));
        cmd->add_flag("--allow-empty", allowEmpty, "admit the empty universe (synthetic)");
    }

    Semantics build() const
    {
        if (semantics == "analytic")
            return AnalyticSemantics{{import == "on"}};
        SyntheticOptions o;
        o.reading = reading == "direct" ? Reading::Direct
                    : reading == "derived" ? Reading::DerivedLiteral
                                           : Reading::DerivedCharitable;
        o.allowEmptyUniverse = allowEmpty;
        return SyntheticSemantics{o};
    }
};

std::string readFile(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeOutput(const std::string& text, const std::string& outFile)
{
    if (outFile.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(outFile, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + outFile + "'");
    out << text;
}

Schema schemaOf(const std::string& text)
{
    Formula f = parse(text);
    std::vector<std::string> names;
    for (const auto& t : f.terms())
        names.push_back(t.name());
    return Schema::fromText(text, names);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Square-of-opposition workbench: analytic and synthetic syllogistic semantics, "
                 "bounded model checking, proof checking, and the nonstandard Boolean-algebra model."};
    app.require_subcommand(1);

    bool json = false;
    std::string outFile;
    unsigned bound = 3;
    unsigned atoms = 2;

    // eval
    auto* evalCmd = app.add_subcommand("eval", "evaluate a formula in a model file, or decide validity up to --bound");
    SemanticsFlags evalSem;
    evalSem.attach(evalCmd);
    std::string evalFormula, modelFile;
    evalCmd->add_option("formula", evalFormula, "formula text")->required();
    evalCmd->add_option("--model", modelFile, "model file (JSON)");
    evalCmd->add_option("--bound", bound, "model bound for validity checks");
    evalCmd->add_flag("--json", json, "JSON output");
    evalCmd->add_option("--out", outFile, "write output to FILE");

    // classify
    auto* classifyCmd = app.add_subcommand("classify", "classify the opposition relation between two schemas");
    SemanticsFlags classifySem;
    classifySem.attach(classifyCmd);
    std::string first, second;
    classifyCmd->add_option("first", first, "first schema")->required();
    classifyCmd->add_option("second", second, "second schema")->required();
    classifyCmd->add_option("--bound", bound, "model bound");
    classifyCmd->add_flag("--json", json, "JSON output");
    classifyCmd->add_option("--out", outFile, "write output to FILE");

    // square
    auto* squareCmd = app.add_subcommand("square", "verify the square of opposition for the chosen semantics");
    SemanticsFlags squareSem;
    squareSem.attach(squareCmd);
    squareCmd->add_option("--bound", bound, "model bound");
    squareCmd->add_flag("--json", json, "JSON output");
    squareCmd->add_option("--out", outFile, "write output to FILE");

    // diagram
    auto* diagramCmd = app.add_subcommand("diagram", "emit the verified square as a DOT digraph");
    SemanticsFlags diagramSem;
    diagramSem.attach(diagramCmd);
    diagramCmd->add_option("--bound", bound, "model bound");
    diagramCmd->add_option("--out", outFile, "write output to FILE");

    // prove
    auto* proveCmd = app.add_subcommand("prove", "check a Hilbert-style proof script");
    std::string scriptFile, goalText;
    std::vector<int> axiomList = {5};
    bool noDefs = false;
    proveCmd->add_option("script", scriptFile, "proof script file")->required();
    proveCmd->add_option("--goal", goalText, "formula the last line must derive");
    proveCmd->add_option("--axioms", axiomList, "enabled axioms (subset of 5,6,7,8)")
        ->delimiter(',')
        ->check(CLI::Range(5, 8));
    proveCmd->add_flag("--no-defs", noDefs, "disable the definitional schemas");
    proveCmd->add_flag("--json", json, "JSON output");
    proveCmd->add_option("--out", outFile, "write output to FILE");

    // verify-paper
    auto* verifyCmd = app.add_subcommand("verify-paper", "run the full verification suite");
    verifyCmd->add_option("--bound", bound, "model bound (1-4)");
    verifyCmd->add_option("--atoms", atoms, "atoms of the Boolean algebra (1-3)");
    verifyCmd->add_flag("--json", json, "JSON report");
    verifyCmd->add_option("--out", outFile, "write output to FILE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (*evalCmd) {
            const Semantics sem = evalSem.build();
            const Formula f = parse(evalFormula);
            if (!modelFile.empty()) {
                const Model m = modelFromText(readFile(modelFile));
                const bool value = evaluate(sem, m, f);
                if (json) {
                    Json j{{"formula", render(f)}, {"semantics", describe(sem)}, {"value", value}};
                    writeOutput(j.dump(2) + "\n", outFile);
                } else {
                    writeOutput(std::string(value ? "true" : "false") + "\n", outFile);
                }
                return kPass;
            }
            const Verdict v = decideValidity(f, sem, bound);
            if (json) {
                Json j{{"formula", render(f)}, {"semantics", describe(sem)}};
                j["verdict"] = verdictToJson(v);
                writeOutput(j.dump(2) + "\n", outFile);
            } else {
                std::string text = v.statusText() + "\n";
                if (v.counterexample) {
                    text += "  " + describe(*v.counterexample) + "\n";
                    for (const auto& a : v.trace)
                        text += "  " + a.atom + " = " + (a.value ? "true" : "false") + "\n";
                }
                writeOutput(text, outFile);
            }
            return v.valid ? kPass : kFail;
        }

        if (*classifyCmd) {
            const Semantics sem = classifySem.build();
            const auto r = classifyPair(schemaOf(first), schemaOf(second), sem, bound);
            if (json) {
                Json j = relationToJson(r);
                j["semantics"] = describe(sem);
                writeOutput(j.dump(2) + "\n", outFile);
            } else {
                std::string text = relationName(r.kind) + " (" + describe(sem) + ", bound " + std::to_string(bound) + ")\n";
                auto line = [&](const char* label, const std::optional<Model>& m) {
                    if (m)
                        text += std::string("  ") + label + ": " + describe(*m) + "\n";
                };
                line("bothTrue", r.bothTrue);
                line("bothFalse", r.bothFalse);
                line("firstOnly", r.firstOnly);
                line("secondOnly", r.secondOnly);
                writeOutput(text, outFile);
            }
            return kPass;
        }

        if (*squareCmd || *diagramCmd) {
            const Semantics sem = (*squareCmd ? squareSem : diagramSem).build();
            const SquareSpec spec = std::holds_alternative<AnalyticSemantics>(sem) ? analyticSquare() : syntheticSquare();
            const SquareReport rep = verifySquare(spec, sem, bound);
            if (*diagramCmd) {
                writeOutput(emitDiagram(rep), outFile);
            } else if (json) {
                writeOutput(squareToJson(rep).dump(2) + "\n", outFile);
            } else {
                std::string text = rep.name + " square, " + rep.semantics + ", bound " + std::to_string(bound) + "\n";
                for (const auto& p : rep.pairs)
                    text += "  " + p.expected.first + "-" + p.expected.second + "  expected " +
                            relationName(p.expected.kind) + ", observed " + relationName(p.observed.kind) +
                            (p.pass ? "  ok" : "  MISMATCH") + "\n";
                text += rep.pass ? "PASS\n" : "FAIL\n";
                writeOutput(text, outFile);
            }
            return rep.pass ? kPass : kFail;
        }

        if (*proveCmd) {
            Derivation d = parseProofScript(readFile(scriptFile));
            if (!goalText.empty())
                d.goal = parse(goalText);
            AxiomSet ax;
            ax.axiom5 = ax.axiom6 = ax.axiom7 = ax.axiom8 = false;
            for (int a : axiomList) {
                if (a == 5) ax.axiom5 = true;
                if (a == 6) ax.axiom6 = true;
                if (a == 7) ax.axiom7 = true;
                if (a == 8) ax.axiom8 = true;
            }
            ax.definitional = !noDefs;
            const auto v = checkDerivation(d, ax);
            const bool flagged = v.ok && ((ax.axiom6 && v.schemasUsed.count("axiom6")) ||
                                          (ax.axiom8 && v.schemasUsed.count("axiom8")));
            if (json) {
                Json j{{"ok", v.ok}};
                if (v.conclusion)
                    j["conclusion"] = render(*v.conclusion);
                if (v.rejectedLine)
                    j["rejected_line"] = *v.rejectedLine;
                if (!v.reason.empty())
                    j["reason"] = v.reason;
                Json used = Json::array();
                for (const auto& s : v.schemasUsed)
                    used.push_back(s);
                j["schemas"] = std::move(used);
                if (flagged)
                    j["note"] = "derivation sound relative to an unsound axiom";
                writeOutput(j.dump(2) + "\n", outFile);
            } else if (v.ok) {
                std::string text = "ok: " + render(*v.conclusion) + "\n";
                if (flagged)
                    text += "note: derivation sound relative to an unsound axiom\n";
                writeOutput(text, outFile);
            } else {
                writeOutput("rejected at line " + (v.rejectedLine ? std::to_string(*v.rejectedLine) : std::string("-")) +
                                ": " + v.reason + "\n",
                            outFile);
            }
            return v.ok ? kPass : kFail;
        }

        if (*verifyCmd) {
            const auto rep = runVerifyPaper({bound, atoms});
            writeOutput(json ? rep.toJson().dump(2) + "\n" : rep.summary(), outFile);
            return rep.pass ? kPass : kFail;
        }
    } catch (const BoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
