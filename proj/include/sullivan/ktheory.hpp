#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sullivan/cohomology.hpp"
#include "sullivan/criteria.hpp"
#include "sullivan/models.hpp"

namespace sullivan {

/// Ranks of K^0, K^1 and KO^0 tensored with Q, read off the Betti numbers via the Chern character.
struct KDimensions {
    std::size_t k0 = 0;
    std::size_t k1 = 0;
    std::size_t ko = 0;  // degrees 0 mod 4, degree 0 included

    friend bool operator==(const KDimensions&, const KDimensions&) = default;
};

KDimensions rational_k_dimensions(const std::vector<std::size_t>& betti);
KDimensions rational_k_dimensions(const CohomologyTable& t);

struct ForgetfulSurjectivity {
    bool k0 = false;  // K^0_G (x) Q -> K^0 (x) Q onto, iff H^even(j) onto
    bool k1 = false;  // same for K^1 and H^odd(j)
};

ForgetfulSurjectivity forgetful_surjectivity_translation(const SurjectivityVerdict& v);

/// Some Betti number in positive degree 0 mod 4 is nonzero.
bool stable_class_infinitude(const std::vector<std::size_t>& betti);
bool stable_class_infinitude(const CohomologyTable& t);

enum class StabilizationConclusion { IntegralFromFlags, RationalQAndK, None };

std::string_view to_string(StabilizationConclusion c);

/// Which stabilization theorems are available for a space, judged on user-asserted flags.
struct StabilizationFlags {
    bool integral = false;
    std::string integral_theorem;
    bool rational = false;  // hypotheses of the rational theorem, apart from the verdict itself
    std::string rational_theorem;
    std::vector<std::string> notes;
};

StabilizationFlags stabilization_flags(const GroupData& g, const GroupData& h);
StabilizationFlags stabilization_flags(const GroupDiagram& d);
/// Biquotients and almost free quotients: no stabilization theorem applies.
StabilizationFlags no_stabilization_flags();

struct RationalKReport {
    KDimensions dims;
    bool forgetful_even_surjective = false;
    bool forgetful_odd_surjective = false;
    bool infinite_stable_classes = false;
    StabilizationConclusion conclusion = StabilizationConclusion::None;
    std::vector<std::string> citations;
    std::vector<std::string> notes;
};

RationalKReport stabilization_report(const SurjectivityVerdict& v, const StabilizationFlags& flags);

}  // namespace sullivan
