#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sullivan/cdga.hpp"

namespace sullivan {

struct GroupFlags {
    bool connected = true;
    bool pi1_torsion_free = true;
    bool steinberg = true;

    friend bool operator==(const GroupFlags&, const GroupFlags&) = default;
};

/// Rational data of a compact Lie group: H*(G) is exterior on generators of the given
/// odd degrees, H*(BG) polynomial on generators one degree higher.
struct GroupData {
    std::string name;
    int rank = 0;
    int dimension = 0;
    std::vector<int> exterior_degrees;
    GroupFlags flags;

    void validate() const;

    friend bool operator==(const GroupData&, const GroupData&) = default;
};

/// Generator naming used by every builder: H*(G) -> q1.., H*(BG) -> x1.., H*(BH) -> u1..
std::vector<Generator> exterior_generators(const GroupData& g, std::string_view prefix = "q");
std::vector<Generator> classifying_generators(const GroupData& g, std::string_view prefix = "x");

/// H*(B source) -> target polynomial algebra, given by the images of x1, x2, ...
struct RestrictionMap {
    std::string source;
    std::string target;
    GeneratorsPtr target_variables;
    std::vector<AlgebraElement> images;

    /// Keys are source classifying generator names (x1, x2, ...); missing keys map to 0.
    static RestrictionMap parse(const GroupData& source, std::string target, GeneratorsPtr target_variables,
                                const std::map<std::string, std::string>& assignments);
    static RestrictionMap zero(const GroupData& source, std::string target, GeneratorsPtr target_variables);

    /// Throws DegreeMismatch unless image i is zero or homogeneous of degree deg(x_i).
    void validate(const GroupData& source_group) const;

    std::map<std::string, std::string> assignments() const;
};

SullivanAlgebra lie_group_model(const GroupData& g, std::optional<int> cutoff = std::nullopt);
SullivanAlgebra classifying_space_model(const GroupData& g, int cutoff, std::string_view prefix = "x");

/// Model of G//H for H acting through (left, right) into G x G: H*(BH) closed, and
/// d q_i = left(x_i) - right(x_i). Default cutoff dim G - dim H.
SullivanAlgebra biquotient_model(const GroupData& g, const GroupData& h, const RestrictionMap& left,
                                 const RestrictionMap& right, std::optional<int> cutoff = std::nullopt);

/// G/H as a biquotient with H in the left factor: d q_i = restriction(x_i).
SullivanAlgebra homogeneous_model(const GroupData& g, const GroupData& h, const RestrictionMap& restriction,
                                  std::optional<int> cutoff = std::nullopt);

/// H*(BH) with zero differential, included into the model of G/H.
CdgaMorphism borel_model_homogeneous(const GroupData& g, const GroupData& h, const RestrictionMap& restriction,
                                     std::optional<int> cutoff = std::nullopt);
CdgaMorphism borel_model_biquotient(const GroupData& g, const GroupData& h, const RestrictionMap& left,
                                    const RestrictionMap& right, std::optional<int> cutoff = std::nullopt);

/// Group diagram (G, H, K-, K+) with K+-/H odd spheres. The restrictions H*(BG) -> H*(BK+-)
/// are written in the presentation H*(BK+-) = H*(BH)[e], i.e. over u1.., e.
struct GroupDiagram {
    GroupData G;
    GroupData H;
    GroupData Kminus;
    GroupData Kplus;
    RestrictionMap to_minus;
    RestrictionMap to_plus;
    int sphere_minus = 1;
    int sphere_plus = 1;

    void validate() const;

    /// Variables u1.., e of H*(BH)[e] for a fibre sphere of dimension l.
    static GeneratorsPtr fibre_variables(const GroupData& h, int sphere_dim);

    /// H*(BG) -> H*(BH), obtained from either side by e = 0.
    RestrictionMap to_principal() const;
};

/// (H*(BH)[e+, e-] (x) H*(G) (x) Lambda(n), d) with dn = e+ e- and d q_i the fibre-product
/// image of x_i. Default cutoff dim G - dim H + 1.
SullivanAlgebra cohomogeneity_one_model(const GroupDiagram& d, std::optional<int> cutoff = std::nullopt);

/// (H*(BH)[e+, e-] (x) Lambda(n), dn = e+ e-) mapped identically into the model above.
CdgaMorphism borel_model_cohomogeneity_one(const GroupDiagram& d, std::optional<int> cutoff = std::nullopt);

/// (Lambda V_X (x) H*(BG), d): H*(BG) generators (prefix1, ...) are closed and come first;
/// `action` overrides d on X-generators, written over the combined generators.
SullivanAlgebra almost_free_quotient_model(const SullivanAlgebra& x, const GroupData& g,
                                           const std::map<std::string, std::string>& action,
                                           std::optional<int> cutoff = std::nullopt,
                                           std::string_view prefix = "u");

}  // namespace sullivan
