#include "syllogic/semantics.hpp"

namespace syllogic {

CopulaFamily familyOf(const Semantics& s) noexcept
{
    return std::holds_alternative<AnalyticSemantics>(s) ? CopulaFamily::Analytic : CopulaFamily::Synthetic;
}

std::string describe(const Semantics& s)
{
    if (const auto* a = std::get_if<AnalyticSemantics>(&s))
        return std::string("analytic(import=") + (a->policy.existentialImport ? "on" : "off") + ")";
    const auto& o = std::get<SyntheticSemantics>(s).options;
    return "synthetic(" + readingName(o.reading) + "," + (o.allowEmptyUniverse ? "empty-allowed" : "nonempty") + ")";
}

bool evaluate(const Semantics& s, const Model& m, const Formula& f)
{
    if (const auto* a = std::get_if<AnalyticSemantics>(&s)) {
        const auto* am = std::get_if<AnalyticModel>(&m);
        if (!am)
            throw SemanticsError("analytic semantics needs an analytic model");
        if (!f.usesOnly(CopulaFamily::Analytic))
            throw SemanticsError("synthetic copula in analytic evaluation");
        return evalAnalytic(*am, f, a->policy);
    }
    const auto& opts = std::get<SyntheticSemantics>(s).options;
    if (const auto* sm = std::get_if<SyntheticModel>(&m)) {
        if (opts.reading != Reading::Direct)
            throw SemanticsError("derived readings need a copula structure");
        return evalSynthetic(*sm, f, opts);
    }
    if (const auto* cs = std::get_if<CopulaStructure>(&m))
        return evalSynthetic(*cs, f, opts);
    throw SemanticsError("synthetic semantics needs a synthetic model");
}

void forEachModel(const Semantics& s, const std::vector<TermId>& terms, unsigned bound,
                  const std::function<bool(const Model&)>& visit)
{
    if (std::holds_alternative<AnalyticSemantics>(s)) {
        AnalyticModelEnumerator e(terms, bound);
        while (auto m = e.next())
            if (!visit(Model{std::move(*m)}))
                return;
        return;
    }
    const auto& opts = std::get<SyntheticSemantics>(s).options;
    if (opts.reading == Reading::Direct) {
        SyntheticModelEnumerator e(terms, bound, opts.allowEmptyUniverse);
        while (auto m = e.next())
            if (!visit(Model{std::move(*m)}))
                return;
        return;
    }
    CopulaStructureEnumerator e(terms, bound, opts.allowEmptyUniverse);
    while (auto c = e.next())
        if (!visit(Model{std::move(*c)}))
            return;
}

std::string Verdict::statusText() const
{
    if (valid)
        return "valid up to bound " + std::to_string(bound);
    return "counterexample of size " + std::to_string(modelSize(*counterexample));
}

Verdict decideValidity(const Formula& f, const Semantics& s, unsigned bound)
{
    if (!f.usesOnly(familyOf(s)))
        throw SemanticsError("formula mixes copula families with " + describe(s));
    Verdict v;
    v.bound = bound;
    forEachModel(s, f.terms(), bound, [&](const Model& m) {
        if (evaluate(s, m, f))
            return true;
        v.valid = false;
        v.counterexample = m;
        for (const auto& a : f.atoms())
            v.trace.push_back({render(a), evaluate(s, m, Formula::atom(a))});
        return false;
    });
    return v;
}

Verdict decideAnalyticValidity(const Formula& f, unsigned bound, ImportPolicy pol)
{
    return decideValidity(f, AnalyticSemantics{pol}, bound);
}

Verdict decideSyntheticValidity(const Formula& f, unsigned bound, const SyntheticOptions& opts)
{
    return decideValidity(f, SyntheticSemantics{opts}, bound);
}

}  // namespace syllogic
