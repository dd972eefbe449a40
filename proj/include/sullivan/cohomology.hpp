#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "sullivan/cdga.hpp"
#include "sullivan/linalg.hpp"

namespace sullivan {

/// H^n of a Sullivan algebra for 0 <= n <= cutoff, with a deterministic basis of classes.
///
/// Representatives are taken from the kernel basis of d (echelon order on monomials) and
/// kept only when independent of the coboundaries and the earlier representatives.
class CohomologyTable {
public:
    const SullivanAlgebra& algebra() const;
    int cutoff() const;

    std::vector<std::size_t> betti() const;
    std::size_t betti(int degree) const;

    const std::vector<Monomial>& monomials(int degree) const;
    const std::vector<AlgebraElement>& representatives(int degree) const;

    /// Class coordinates of a degree-n cocycle. Throws InvalidDifferential for non-cocycles.
    Vector coordinates(int degree, const AlgebraElement& cocycle) const;

    /// Cocycle sum_k c_k * representative_k.
    AlgebraElement representative(int degree, const Vector& coords) const;

    /// Highest degree with nonzero cohomology, if any degree above zero is nonzero.
    int top_degree() const;

private:
    struct Impl;
    explicit CohomologyTable(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    const Impl& degree_check(int degree) const;

    std::shared_ptr<const Impl> impl_;

    friend CohomologyTable cohomology(const SullivanAlgebra& a);
};

CohomologyTable cohomology(const SullivanAlgebra& a);

int euler_characteristic(const CohomologyTable& t);

/// betti[n] == betti[fdim - n] for all 0 <= n <= fdim, and zero above fdim up to cutoff.
bool satisfies_poincare_duality(const CohomologyTable& t, int formal_dimension);

/// Cohomology of a pure algebra split by odd word length.
struct LowerGradedTable {
    int cutoff = 0;
    std::size_t max_lower = 0;
    /// dims[n][i] = dim H_i^n
    std::vector<std::vector<std::size_t>> dims;
    /// representatives[n][i] are cocycles in Lambda(V^even) (x) Lambda^i(V^odd)
    std::vector<std::vector<std::vector<AlgebraElement>>> representatives;

    std::size_t dim(int degree, std::size_t lower) const;
    std::size_t total(int degree) const;
};

LowerGradedTable lower_grading(const SullivanAlgebra& a);

/// For each even degree n <= cutoff, the subspace of H^n (in class coordinates) hit by
/// Lambda(V^even). Requires a pure algebra.
std::map<int, SubspaceBasis> h0_image(const SullivanAlgebra& a);
std::map<int, SubspaceBasis> h0_image(const CohomologyTable& t);

/// Matrices of H^n(f) for 0 <= n <= min(cutoffs), in the tables' class bases.
std::vector<RationalMatrix> induced_map(const CdgaMorphism& f);
std::vector<RationalMatrix> induced_map(const CdgaMorphism& f, const CohomologyTable& source,
                                        const CohomologyTable& target);

struct SurjectivityResult {
    bool surjective = true;
    std::optional<int> first_failing_degree;
};

enum class Parity { Even, Odd };

SurjectivityResult degree_surjectivity(const std::vector<RationalMatrix>& maps, const CohomologyTable& target,
                                       Parity parity);
SurjectivityResult even_degree_surjectivity(const CdgaMorphism& f);

/// Class coordinates of the product of two classes.
Vector cup_product(const CohomologyTable& t, int degree1, const Vector& c1, int degree2, const Vector& c2);

}  // namespace sullivan
