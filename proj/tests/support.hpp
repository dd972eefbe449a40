#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <optional>
#include <random>
#include <vector>

#include "sullivan/cdga.hpp"
#include "sullivan/cohomology.hpp"
#include "sullivan/linalg.hpp"
#include "sullivan/models.hpp"

namespace testing {

using namespace sullivan;

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);
Rational small_rational(Rng& rng, int bound = 3, bool allow_fractions = true);
RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int target_rank = -1);

/// Plain textbook Gaussian elimination over Q, kept separate from the library's Bareiss code.
std::size_t naive_rank(RationalMatrix m);

/// Coefficients of prod_even 1/(1 - t^d) * prod_odd (1 + t^d) up to t^n.
std::vector<std::size_t> basis_count_series(const std::vector<int>& degrees, int n);

/// Random homogeneous element of the given degree (zero when the degree is empty).
AlgebraElement random_element(Rng& rng, const SullivanAlgebra& a, int degree, int max_terms = 4);

/// Random Sullivan algebra with d^2 = 0 by construction: generators are added one at a time,
/// each with d equal to a random cocycle of the algebra built so far.
SullivanAlgebra random_sullivan_algebra(Rng& rng, int max_generators, int max_degree, int cutoff);

struct PureInstance {
    SullivanAlgebra algebra;
    int formal_dimension = 0;
};

/// Shape of a random pure algebra. The first n_even odd generators are anchored at a power
/// of the matching even generator; the remaining ones get degrees from extra_odd_degrees.
struct PureShape {
    int min_even = 1;
    int max_even = 3;
    int max_odd = 4;
    std::vector<int> even_degrees = {2, 2, 2, 4, 4, 6, 8};
    std::vector<int> extra_odd_degrees = {3, 5, 7};
    int max_anchor_degree = 8;
    int max_cutoff = 24;
};

/// Default shape: 1..3 even and n_even..4 odd generators of degree <= 8, cutoff
/// formal dimension + largest generator degree <= 24. Returns nothing unless the top window
/// of cohomology vanishes (elliptic).
std::optional<PureInstance> random_pure_elliptic(Rng& rng, const PureShape& shape = {});

/// Keeps every even differential and adds random cocycles of odd word length >= 2 to the odd
/// ones, so that the associated pure algebra of the result is `pure` again.
SullivanAlgebra random_perturbation(Rng& rng, const SullivanAlgebra& pure);

/// Polynomial algebra on the even generators of `a`, with zero differential, and its inclusion.
CdgaMorphism even_inclusion(const SullivanAlgebra& a);

/// Algebra from generator list and differentials written in the polynomial grammar.
SullivanAlgebra make_algebra(const std::vector<Generator>& generators,
                             const std::map<std::string, std::string>& differential, int cutoff);

/// Convenience group data.
GroupData su2_power(int k);
GroupData torus(int k);
GroupData trivial_group();

/// Restriction H*(B SU(2)^a) -> H*(BT^b) sending x_i to u_{c(i)}^2 (c(i) = 0 means x_i -> 0).
RestrictionMap su2_circle_map(int a, const std::vector<int>& circle_of_factor, const GeneratorsPtr& vars,
                              const std::string& target);

/// Diagram (SU(2)^a, T^b, T^(b+1), T^(b+1)) inside the maximal torus T^a. Row i of each
/// integer matrix gives the circle of factor i as a linear form in (u1..ub, e); the first b
/// columns of both matrices must agree. x_i restricts to the square of that form.
GroupDiagram su2_torus_diagram(int a, int b, const std::vector<std::vector<int>>& minus,
                               const std::vector<std::vector<int>>& plus);

/// Homogeneous pair SU(2)^a / T^b given by an a x b integer matrix as above.
RestrictionMap su2_torus_restriction(int a, int b, const std::vector<std::vector<int>>& matrix);

}  // namespace testing
