#include "sullivan/report.hpp"

#include <sstream>

#include "sullivan/criteria.hpp"
#include "sullivan/error.hpp"
#include "sullivan/ktheory.hpp"

namespace sullivan {

namespace {

std::optional<int> resolved_cutoff(const Document& doc, const AnalysisOptions& options)
{
    return options.cutoff ? options.cutoff : doc.cutoff;
}

std::string anchor(const std::string& citation)
{
    return citation.substr(0, citation.find(' '));
}

Json optional_int(const std::optional<int>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

SurjectivityVerdict document_verdict(const Document& doc, const AnalysisOptions& options)
{
    const auto cutoff = resolved_cutoff(doc, options);
    switch (doc.kind) {
    case DocumentKind::Homogeneous:
        return homogeneous_surjectivity(doc.homogeneous->G, doc.homogeneous->H, doc.homogeneous->restriction, cutoff);
    case DocumentKind::Biquotient:
        return biquotient_surjectivity(doc.biquotient->G, doc.biquotient->H, doc.biquotient->left,
                                       doc.biquotient->right, cutoff);
    case DocumentKind::CohomogeneityOne:
        return cohomogeneity_one_surjectivity(*doc.diagram, cutoff);
    case DocumentKind::AlmostFree:
        return almost_free_surjectivity(doc.almost_free->space, doc.almost_free->G, doc.almost_free->action, cutoff);
    case DocumentKind::Model:
        break;
    }
    throw Error(ErrorKind::SchemaError, "/kind: a bare model has no surjectivity verdict");
}

StabilizationFlags document_flags(const Document& doc)
{
    switch (doc.kind) {
    case DocumentKind::Homogeneous: return stabilization_flags(doc.homogeneous->G, doc.homogeneous->H);
    case DocumentKind::CohomogeneityOne: return stabilization_flags(*doc.diagram);
    default: return no_stabilization_flags();
    }
}

Json verdict_json(const SurjectivityVerdict& v)
{
    return Json{{"context", to_string(v.context)},
                {"theorem", v.theorem},
                {"rank_gap", v.rank_gap},
                {"chi_pi", v.chi_pi},
                {"rank_criterion", v.rank_criterion},
                {"direct_check", v.direct_check},
                {"first_failing_degree", optional_int(v.first_failing_degree)},
                {"odd_direct_check", v.odd_direct_check},
                {"hypotheses_hold", v.hypotheses_hold},
                {"consistent", v.consistent()},
                {"cutoff", v.cutoff},
                {"borel_betti", v.borel_betti},
                {"notes", v.notes}};
}

Json k_dims_json(const KDimensions& k)
{
    return Json{{"k0", k.k0}, {"k1", k.k1}, {"ko", k.ko}};
}

Json k_report_json(const RationalKReport& r)
{
    Json j = k_dims_json(r.dims);
    j["forgetful_even_surjective"] = r.forgetful_even_surjective;
    j["forgetful_odd_surjective"] = r.forgetful_odd_surjective;
    j["infinite_stable_classes"] = r.infinite_stable_classes;
    j["stabilization_conclusion"] = to_string(r.conclusion);
    j["citations"] = r.citations;
    j["notes"] = r.notes;
    return j;
}

Json pure_section(const SullivanAlgebra& model)
{
    // one generator-degree window past the cutoff, so the ellipticity proxy can see vanishing
    int window = 0;
    for (const auto& g : model.generators()->list())
        window = std::max(window, g.degree);
    const SullivanAlgebra a = model.with_cutoff(model.cutoff() + window);
    const LowerGradedTable lower = lower_grading(a);
    Json dims = Json::object();
    for (int n = 0; n <= lower.cutoff; ++n) {
        Json row = Json::array();
        for (std::size_t i = 0; i <= lower.max_lower; ++i)
            row.push_back(lower.dim(n, i));
        dims[std::to_string(n)] = row;
    }
    const H0Comparison h0 = pure_h0_equals_heven(a);
    const FormalityVerdict f = pure_formality(a);
    return Json{{"lower_grading", dims},
                {"h0_equals_heven", h0.h0_equals_heven},
                {"first_gap_degree", optional_int(h0.first_gap_degree)},
                {"chi_pi", h0.chi_pi},
                {"chi_pi_at_most_one", h0.chi_pi <= 1},
                {"elliptic_proxy", h0.elliptic_proxy},
                {"h0_theorem", "cor:h0-equals-heven (H_0 = H^even iff chi_pi <= 1, elliptic pure)"},
                {"nakayama_mu", f.minimal_generators_mu},
                {"split_k", f.split_k},
                {"formal", f.formal},
                {"formality_theorem", "prop:pure-splitting (formal iff the odd differentials minimally generate)"}};
}

Json biquotient_identities(const GroupData& g, const GroupData& h, const SullivanAlgebra& model,
                           const CohomologyTable& t)
{
    bool odd_zero = true;
    for (int n = 1; n <= t.cutoff(); n += 2)
        odd_zero = odd_zero && t.betti(n) == 0;
    const int chi = homotopy_euler_characteristic(model);
    return Json{{"chi_pi", chi},
                {"rank_difference", g.rank - h.rank},
                {"chi_pi_equals_rank_difference", chi == g.rank - h.rank},
                {"odd_cohomology_vanishes", odd_zero},
                {"odd_vanishes_iff_equal_rank", odd_zero == (g.rank == h.rank)},
                {"dimension_parity", (g.dimension - h.dimension - (g.rank - h.rank)) % 2 == 0},
                {"theorem", "eq:biquotient-rational-homotopy (chi_pi = rk G - rk H; H^odd = 0 iff equal rank)"}};
}

Json diagram_sections(const GroupDiagram& d)
{
    const EulerRelations e = euler_characteristic_relations(d);
    const TheoremAApplicability a = theorem_a_applicability(d);
    Json euler{{"chi_m", e.chi_m},
               {"chi_g_kminus", e.chi_g_kminus},
               {"chi_g_kplus", e.chi_g_kplus},
               {"chi_g_h", e.chi_g_h},
               {"identity_holds", e.identity_holds},
               {"positivity_equivalence",
                e.positivity_equivalence ? Json(*e.positivity_equivalence) : Json(nullptr)},
               {"theorem", "rem:euler-identity (chi(M) = chi(G/K-) + chi(G/K+) - chi(G/H))"}};
    Json thm{{"circle_fibres", a.circle_fibres},
             {"integral_clause", a.integral_clause},
             {"rational_clause", a.rational_clause},
             {"even_surjectivity_theorem", a.even_surjectivity_theorem},
             {"carlson_integral", a.carlson_integral},
             {"circle_orbit_space_formality", circle_orbit_space_formality(d.G, d.Kplus)},
             {"notes", a.notes},
             {"theorem", "thm:converse-soul (clause 1 integral, clause 2 rational)"}};
    return Json{{"euler_relations", euler}, {"theorem_a", thm}};
}

void collect_citations(const Json& j, std::vector<std::string>& out)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_string() && (k == "theorem" || k.ends_with("_theorem"))) {
                const std::string a = anchor(v.get<std::string>());
                if (std::find(out.begin(), out.end(), a) == out.end())
                    out.push_back(a);
            } else if (k == "citations" && v.is_array()) {
                for (const auto& c : v) {
                    const std::string a = anchor(c.get<std::string>());
                    if (std::find(out.begin(), out.end(), a) == out.end())
                        out.push_back(a);
                }
            } else {
                collect_citations(v, out);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j)
            collect_citations(v, out);
    }
}

void render(const Json& j, int indent, std::ostringstream& out)
{
    const std::string pad(indent * 2, ' ');
    auto scalar = [](const Json& v) {
        if (v.is_string())
            return v.get<std::string>();
        if (v.is_null())
            return std::string("-");
        return v.dump();
    };
    auto flat = [](const Json& v) {
        for (const auto& x : v)
            if (x.is_structured())
                return false;
        return true;
    };
    for (const auto& [k, v] : j.items()) {
        if (v.is_object()) {
            out << pad << k << ":\n";
            render(v, indent + 1, out);
        } else if (v.is_array() && flat(v)) {
            out << pad << k << ":";
            for (const auto& x : v)
                out << " " << scalar(x);
            out << "\n";
        } else if (v.is_array()) {
            out << pad << k << ":\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                out << pad << "  [" << i << "]\n";
                render(v[i], indent + 2, out);
            }
        } else {
            out << pad << k << ": " << scalar(v) << "\n";
        }
    }
}

}  // namespace

SullivanAlgebra document_model(const Document& doc, const AnalysisOptions& options)
{
    const auto cutoff = resolved_cutoff(doc, options);
    switch (doc.kind) {
    case DocumentKind::Homogeneous:
        return homogeneous_model(doc.homogeneous->G, doc.homogeneous->H, doc.homogeneous->restriction, cutoff);
    case DocumentKind::Biquotient:
        return biquotient_model(doc.biquotient->G, doc.biquotient->H, doc.biquotient->left, doc.biquotient->right,
                                cutoff);
    case DocumentKind::CohomogeneityOne:
        return cohomogeneity_one_model(*doc.diagram, cutoff);
    case DocumentKind::Model:
        return cutoff ? doc.model->with_cutoff(*cutoff) : *doc.model;
    case DocumentKind::AlmostFree:
        return almost_free_quotient_model(doc.almost_free->space, doc.almost_free->G, doc.almost_free->action, cutoff);
    }
    throw Error(ErrorKind::SchemaError, "/kind: unknown document kind");
}

Json model_section(const SullivanAlgebra& a)
{
    Json j = algebra_to_json(a);
    j["pure"] = is_pure(a);
    j["chi_pi"] = homotopy_euler_characteristic(a);
    return j;
}

Json cohomology_section(const CohomologyTable& t)
{
    const GeneratorsPtr& gens = t.algebra().generators();
    Json reps = Json::object();
    bool odd_zero = true;
    for (int n = 0; n <= t.cutoff(); ++n) {
        if (n % 2 == 1 && t.betti(n) != 0)
            odd_zero = false;
        if (t.betti(n) == 0)
            continue;
        Json list = Json::array();
        for (const auto& r : t.representatives(n)) {
            Json terms = Json::object();
            for (const auto& [m, c] : r.terms())
                terms[AlgebraElement::monomial(gens, m).to_string()] = c.get_str();
            list.push_back(terms);
        }
        reps[std::to_string(n)] = list;
    }
    const int top = t.top_degree();
    return Json{{"cutoff", t.cutoff()},
                {"betti", t.betti()},
                {"euler_characteristic", euler_characteristic(t)},
                {"top_degree", top},
                {"odd_cohomology_vanishes", odd_zero},
                {"poincare_duality", satisfies_poincare_duality(t, top)},
                {"representatives", reps}};
}

Json check_section(const Document& doc, const AnalysisOptions& options)
{
    return verdict_json(document_verdict(doc, options));
}

Json ktheory_section(const Document& doc, const AnalysisOptions& options)
{
    if (doc.kind == DocumentKind::Model) {
        const CohomologyTable t = cohomology(document_model(doc, options));
        Json j = k_dims_json(rational_k_dimensions(t));
        j["infinite_stable_classes"] = stable_class_infinitude(t);
        std::vector<std::string> cites{"prop:chern-character"};
        if (stable_class_infinitude(t))
            cites.push_back("cor:stable-classes");
        j["citations"] = cites;
        return j;
    }
    return k_report_json(stabilization_report(document_verdict(doc, options), document_flags(doc)));
}

Report run_analysis(const Json& document, const AnalysisOptions& options)
{
    return run_analysis(load_document(document), options);
}

Report run_analysis(const Document& doc, const AnalysisOptions& options)
{
    try {
        const SullivanAlgebra model = document_model(doc, options);
        const CohomologyTable t = cohomology(model);

        Document echo = doc;
        echo.cutoff = model.cutoff();
        if (echo.model)
            echo.model = echo.model->with_cutoff(model.cutoff());

        Json r{{"kind", to_string(doc.kind)}, {"input", serialize(echo)}};
        r["model"] = model_section(model);
        r["cohomology"] = cohomology_section(t);
        if (doc.kind == DocumentKind::Homogeneous)
            r["identities"] = biquotient_identities(doc.homogeneous->G, doc.homogeneous->H, model, t);
        if (doc.kind == DocumentKind::Biquotient)
            r["identities"] = biquotient_identities(doc.biquotient->G, doc.biquotient->H, model, t);
        if (doc.kind != DocumentKind::Model) {
            const SurjectivityVerdict v = document_verdict(doc, options);
            r["verdict"] = verdict_json(v);
            r["ktheory"] = k_report_json(stabilization_report(v, document_flags(doc)));
        } else {
            r["ktheory"] = ktheory_section(doc, options);
        }
        if (doc.kind == DocumentKind::CohomogeneityOne) {
            const Json sections = diagram_sections(*doc.diagram);
            for (const auto& [k, v] : sections.items())
                r[k] = v;
        }
        if (is_pure(model))
            r["pure"] = pure_section(model);
        std::vector<std::string> cites;
        collect_citations(r, cites);
        r["citations"] = cites;
        return Report{r, render_text(r)};
    } catch (const Error& e) {
        throw Error(e.kind(), std::string(to_string(doc.kind)) + " analysis: " + e.message());
    }
}

std::string render_text(const Json& j)
{
    std::ostringstream out;
    if (j.is_object())
        render(j, 0, out);
    else
        out << j.dump() << "\n";
    return out.str();
}

}  // namespace sullivan
