#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sullivan/cdga.hpp"
#include "sullivan/cohomology.hpp"
#include "sullivan/models.hpp"

namespace sullivan {

enum class VerdictContext { Homogeneous, Biquotient, CohomogeneityOne, AlmostFree };

std::string_view to_string(VerdictContext c);

/// Rank-formula prediction for even-degree surjectivity of the Borel map, next to the
/// direct computation. When the governing theorem's hypotheses hold the two must agree.
struct SurjectivityVerdict {
    VerdictContext context = VerdictContext::Homogeneous;
    bool rank_criterion = false;
    bool direct_check = false;
    std::optional<int> first_failing_degree;
    bool odd_direct_check = false;  // H^odd(j) surjective
    int chi_pi = 0;
    int rank_gap = 0;
    int cutoff = 0;
    bool hypotheses_hold = true;
    std::vector<std::string> notes;
    std::vector<std::size_t> space_betti;
    std::vector<std::size_t> borel_betti;
    std::string theorem;  // anchor of the governing theorem

    bool consistent() const { return !hypotheses_hold || rank_criterion == direct_check; }
};

/// Throws Inconsistent when the hypotheses hold but the two routes disagree.
void require_consistent(const SurjectivityVerdict& v);

/// Direct check shared by all contexts: H^even and H^odd surjectivity of `borel`.
SurjectivityVerdict verdict_from_morphism(const CdgaMorphism& borel, VerdictContext context);

SurjectivityVerdict homogeneous_surjectivity(const GroupData& g, const GroupData& h,
                                             const RestrictionMap& restriction,
                                             std::optional<int> cutoff = std::nullopt);

SurjectivityVerdict biquotient_surjectivity(const GroupData& g, const GroupData& h, const RestrictionMap& left,
                                            const RestrictionMap& right, std::optional<int> cutoff = std::nullopt);

SurjectivityVerdict cohomogeneity_one_surjectivity(const GroupDiagram& d, std::optional<int> cutoff = std::nullopt);

/// H^even(BG) -> H^even(X/G) for an almost free action; rank criterion chi_pi <= 1.
SurjectivityVerdict almost_free_surjectivity(const SullivanAlgebra& x, const GroupData& g,
                                             const std::map<std::string, std::string>& action,
                                             std::optional<int> cutoff = std::nullopt);

/// Cohomology vanishes in the last (max generator degree) degrees up to the cutoff.
bool top_window_vanishes(const CohomologyTable& t);

/// Every even generator has lower degree than every odd generator.
bool even_degrees_below_odd(const SullivanAlgebra& a);

struct H0Comparison {
    bool h0_equals_heven = false;
    std::optional<int> first_gap_degree;  // even degree where H_0 is smaller than H^even
    int chi_pi = 0;
    bool elliptic_proxy = false;
    bool consistent() const { return h0_equals_heven == (chi_pi <= 1); }
};

H0Comparison pure_h0_equals_heven(const SullivanAlgebra& a);

struct FormalityVerdict {
    std::size_t split_k = 0;
    std::size_t minimal_generators_mu = 0;
    std::size_t even_generators = 0;
    std::size_t odd_generators = 0;
    bool formal = false;
    bool elliptic_proxy = false;
};

/// mu = number of minimal generators of the ideal (d V^odd) in Lambda V^even (graded Nakayama).
std::size_t nakayama_generator_count(const SullivanAlgebra& a);
FormalityVerdict pure_formality(const SullivanAlgebra& a);

struct EulerRelations {
    int chi_m = 0;
    int chi_g_kminus = 0;
    int chi_g_kplus = 0;
    int chi_g_h = 0;
    bool identity_holds = false;
    /// chi(M) > 0 iff rk G = rk K+-; only asserted when both fibre spheres are circles.
    std::optional<bool> positivity_equivalence;
};

EulerRelations euler_characteristic_relations(const GroupDiagram& d);

struct TheoremAApplicability {
    bool circle_fibres = false;
    bool integral_clause = false;    // rank G = rank K+-, pi1(G) torsion-free, K+- Steinberg
    bool rational_clause = false;    // rank G - rank K+- <= 1
    bool even_surjectivity_theorem = false;  // odd fibre spheres, connected groups
    bool carlson_integral = false;  // genuine forgetful map surjective (flags only)
    std::vector<std::string> notes;
};

TheoremAApplicability theorem_a_applicability(const GroupDiagram& d);

/// Equivariant formality when the orbit space is a circle: rk G = rk H.
bool circle_orbit_space_formality(const GroupData& g, const GroupData& h);

}  // namespace sullivan
