#include "sullivan/ktheory.hpp"

#include <algorithm>

namespace sullivan {

KDimensions rational_k_dimensions(const std::vector<std::size_t>& betti)
{
    KDimensions out;
    for (std::size_t n = 0; n < betti.size(); ++n) {
        (n % 2 == 0 ? out.k0 : out.k1) += betti[n];
        if (n % 4 == 0)
            out.ko += betti[n];
    }
    return out;
}

KDimensions rational_k_dimensions(const CohomologyTable& t)
{
    return rational_k_dimensions(t.betti());
}

ForgetfulSurjectivity forgetful_surjectivity_translation(const SurjectivityVerdict& v)
{
    return {v.direct_check, v.odd_direct_check};
}

bool stable_class_infinitude(const std::vector<std::size_t>& betti)
{
    for (std::size_t n = 4; n < betti.size(); n += 4)
        if (betti[n] != 0)
            return true;
    return false;
}

bool stable_class_infinitude(const CohomologyTable& t)
{
    return stable_class_infinitude(t.betti());
}

std::string_view to_string(StabilizationConclusion c)
{
    switch (c) {
    case StabilizationConclusion::IntegralFromFlags: return "integral-from-flags";
    case StabilizationConclusion::RationalQAndK: return "rational-q-and-k";
    case StabilizationConclusion::None: return "none";
    }
    return "none";
}

StabilizationFlags stabilization_flags(const GroupData& g, const GroupData& h)
{
    StabilizationFlags f;
    const bool connected = g.flags.connected && h.flags.connected;
    const bool gap = g.rank - h.rank <= 1;
    f.integral = connected && g.flags.pi1_torsion_free && gap;
    f.integral_theorem = "thm:homogeneous-bundle-stabilization (E + C^k is a G-bundle)";
    f.rational = connected;
    f.rational_theorem = "thm:double-stabilization-homogeneous (qE + R^k is a G-bundle)";
    if (!connected)
        f.notes.push_back("G or H flagged disconnected");
    if (!g.flags.pi1_torsion_free)
        f.notes.push_back("pi1(G) has torsion; integral route unavailable");
    return f;
}

StabilizationFlags stabilization_flags(const GroupDiagram& d)
{
    StabilizationFlags f;
    const TheoremAApplicability a = theorem_a_applicability(d);
    f.notes = a.notes;
    f.integral = a.carlson_integral;
    f.integral_theorem = a.integral_clause
                             ? "thm:converse-soul-integral (clause 1; E + R^k admits non-negative curvature)"
                             : "thm:cohomogeneity-one-genuine-forgetful-surjective (E + C^k is a G-bundle)";
    f.rational = a.even_surjectivity_theorem;
    f.rational_theorem = a.circle_fibres
                             ? "thm:converse-soul-rational (clause 2; qE + R^k admits non-negative curvature)"
                             : "thm:rational-stabilization-cohomogeneity-one (qE + R^k is a G-bundle)";
    return f;
}

StabilizationFlags no_stabilization_flags()
{
    StabilizationFlags f;
    f.notes.push_back("no stabilization theorem covers this kind of space");
    return f;
}

RationalKReport stabilization_report(const SurjectivityVerdict& v, const StabilizationFlags& flags)
{
    RationalKReport r;
    r.dims = rational_k_dimensions(v.space_betti);
    const ForgetfulSurjectivity fs = forgetful_surjectivity_translation(v);
    r.forgetful_even_surjective = fs.k0;
    r.forgetful_odd_surjective = fs.k1;
    r.infinite_stable_classes = stable_class_infinitude(v.space_betti);
    r.citations.push_back("prop:chern-character");
    r.citations.push_back("prop:heven-iff-k0");
    if (r.infinite_stable_classes)
        r.citations.push_back("cor:stable-classes");

    if (flags.integral) {
        r.conclusion = StabilizationConclusion::IntegralFromFlags;
        r.citations.push_back(flags.integral_theorem);
    } else if (flags.rational && v.direct_check && v.rank_criterion) {
        r.conclusion = StabilizationConclusion::RationalQAndK;
        r.citations.push_back(flags.rational_theorem);
        r.citations.push_back("prop:rational-realification");
    }
    r.notes = flags.notes;
    if (r.conclusion != StabilizationConclusion::None)
        r.notes.push_back("the integers q and k exist but are not computed");
    return r;
}

}  // namespace sullivan
