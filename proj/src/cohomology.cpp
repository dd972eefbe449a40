#include "sullivan/cohomology.hpp"

#include <algorithm>

#include "sullivan/error.hpp"
#include "sullivan/sparse.hpp"

namespace sullivan {

namespace {

using MonomialIndex = std::map<Monomial, std::size_t>;

MonomialIndex index_of(const std::vector<Monomial>& basis)
{
    MonomialIndex idx;
    for (std::size_t i = 0; i < basis.size(); ++i)
        idx.emplace(basis[i], i);
    return idx;
}

SparseVector sparse_coordinates(const AlgebraElement& e, const MonomialIndex& idx)
{
    SparseVector out;
    out.reserve(e.terms().size());
    for (const auto& [m, c] : e.terms()) {
        auto it = idx.find(m);
        if (it == idx.end())
            throw Error(ErrorKind::DegreeMismatch, "element has terms outside the expected degree");
        out.push_back({it->second, c});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
    return out;
}

AlgebraElement element_from_sparse(const GeneratorsPtr& gens, const std::vector<Monomial>& basis,
                                   const SparseVector& v)
{
    AlgebraElement e(gens);
    for (const auto& entry : v)
        e.add_term(basis[entry.index], entry.value);
    return e;
}

// Kernel and image of d restricted to a block of source monomials, landing in a block
// of target monomials.
ColumnReduction reduce_differential(const SullivanAlgebra& a, const std::vector<Monomial>& source,
                                    const MonomialIndex& target_index,
                                    std::vector<SparseVector>* columns_out = nullptr)
{
    std::vector<SparseVector> columns;
    columns.reserve(source.size());
    for (const auto& m : source)
        columns.push_back(sparse_coordinates(a.differential_of(m), target_index));
    ColumnReduction r = reduce_columns(columns);
    if (columns_out)
        *columns_out = std::move(columns);
    return r;
}

// Cohomology of one block: cocycles from kernel, coboundaries from incoming image.
struct BlockCohomology {
    SparseEchelon echelon;
    std::vector<SparseVector> representatives;
};

BlockCohomology block_cohomology(const std::vector<SparseVector>& coboundaries,
                                 const std::vector<SparseVector>& cocycles)
{
    BlockCohomology out;
    for (const auto& b : coboundaries)
        out.echelon.insert(b);
    for (const auto& z : cocycles) {
        SparseEchelon::Reduction r = out.echelon.reduce(z);
        if (r.remainder.empty())
            continue;
        out.echelon.insert(std::move(r), unit_vector(out.representatives.size()));
        out.representatives.push_back(z);
    }
    return out;
}

}  // namespace

struct CohomologyTable::Impl {
    SullivanAlgebra algebra;
    std::vector<std::vector<Monomial>> monomials;
    std::vector<MonomialIndex> index;
    std::vector<SparseEchelon> echelon;
    std::vector<std::vector<AlgebraElement>> representatives;
};

CohomologyTable cohomology(const SullivanAlgebra& a)
{
    if (!verify_d_squared(a))
        throw Error(ErrorKind::InvalidDifferential, "d^2 != 0 on some generator");
    const int cutoff = a.cutoff();
    auto impl = std::make_shared<CohomologyTable::Impl>(CohomologyTable::Impl{a, {}, {}, {}, {}});
    for (int n = 0; n <= cutoff + 1; ++n) {
        impl->monomials.push_back(a.monomial_basis_unchecked(n));
        impl->index.push_back(index_of(impl->monomials.back()));
    }

    std::vector<SparseVector> incoming;  // coboundaries landing in degree n
    for (int n = 0; n <= cutoff; ++n) {
        std::vector<SparseVector> columns;
        ColumnReduction r = reduce_differential(a, impl->monomials[n], impl->index[n + 1], &columns);
        BlockCohomology h = block_cohomology(incoming, r.kernel);
        std::vector<AlgebraElement> reps;
        for (const auto& z : h.representatives)
            reps.push_back(element_from_sparse(a.generators(), impl->monomials[n], z));
        impl->echelon.push_back(std::move(h.echelon));
        impl->representatives.push_back(std::move(reps));

        incoming.clear();
        for (auto j : r.image_columns)
            incoming.push_back(std::move(columns[j]));
    }
    impl->monomials.pop_back();
    impl->index.pop_back();
    return CohomologyTable(std::move(impl));
}

const SullivanAlgebra& CohomologyTable::algebra() const
{
    return impl_->algebra;
}

int CohomologyTable::cutoff() const
{
    return impl_->algebra.cutoff();
}

const CohomologyTable::Impl& CohomologyTable::degree_check(int degree) const
{
    if (degree < 0 || degree > cutoff())
        throw Error(ErrorKind::CutoffExceeded,
                    "degree " + std::to_string(degree) + " outside [0, " + std::to_string(cutoff()) + "]");
    return *impl_;
}

std::vector<std::size_t> CohomologyTable::betti() const
{
    std::vector<std::size_t> out;
    for (const auto& r : impl_->representatives)
        out.push_back(r.size());
    return out;
}

std::size_t CohomologyTable::betti(int degree) const
{
    return degree_check(degree).representatives[static_cast<std::size_t>(degree)].size();
}

const std::vector<Monomial>& CohomologyTable::monomials(int degree) const
{
    return degree_check(degree).monomials[static_cast<std::size_t>(degree)];
}

const std::vector<AlgebraElement>& CohomologyTable::representatives(int degree) const
{
    return degree_check(degree).representatives[static_cast<std::size_t>(degree)];
}

Vector CohomologyTable::coordinates(int degree, const AlgebraElement& cocycle) const
{
    const Impl& impl = degree_check(degree);
    const auto n = static_cast<std::size_t>(degree);
    AlgebraElement e = cocycle;
    if (!same_generators(e.generators(), impl.algebra.generators()))
        throw Error(ErrorKind::UnknownGenerator, "cocycle belongs to a different algebra");
    SparseEchelon::Reduction r = impl.echelon[n].reduce(sparse_coordinates(e, impl.index[n]));
    if (!r.remainder.empty())
        throw Error(ErrorKind::InvalidDifferential, "element of degree " + std::to_string(degree) +
                                                        " is not a cocycle: " + cocycle.to_string());
    return to_dense(r.coefficients, impl.representatives[n].size());
}

AlgebraElement CohomologyTable::representative(int degree, const Vector& coords) const
{
    const auto& reps = representatives(degree);
    if (coords.size() != reps.size())
        throw Error(ErrorKind::DimensionMismatch, "class coordinates have the wrong length");
    AlgebraElement out(impl_->algebra.generators());
    for (std::size_t k = 0; k < reps.size(); ++k)
        if (coords[k] != 0)
            out += coords[k] * reps[k];
    return out;
}

int CohomologyTable::top_degree() const
{
    int top = 0;
    for (int n = 0; n <= cutoff(); ++n)
        if (betti(n) > 0)
            top = n;
    return top;
}

int euler_characteristic(const CohomologyTable& t)
{
    long chi = 0;
    for (int n = 0; n <= t.cutoff(); ++n)
        chi += (n % 2 ? -1 : 1) * static_cast<long>(t.betti(n));
    return static_cast<int>(chi);
}

bool satisfies_poincare_duality(const CohomologyTable& t, int formal_dimension)
{
    if (formal_dimension < 0 || formal_dimension > t.cutoff())
        return false;
    for (int n = 0; n <= formal_dimension; ++n)
        if (t.betti(n) != t.betti(formal_dimension - n))
            return false;
    for (int n = formal_dimension + 1; n <= t.cutoff(); ++n)
        if (t.betti(n) != 0)
            return false;
    return true;
}

std::size_t LowerGradedTable::dim(int degree, std::size_t lower) const
{
    const auto& row = dims.at(static_cast<std::size_t>(degree));
    return lower < row.size() ? row[lower] : 0;
}

std::size_t LowerGradedTable::total(int degree) const
{
    std::size_t s = 0;
    for (auto x : dims.at(static_cast<std::size_t>(degree)))
        s += x;
    return s;
}

LowerGradedTable lower_grading(const SullivanAlgebra& a)
{
    if (!is_pure(a))
        throw Error(ErrorKind::NotPure, "lower grading needs a pure algebra");
    const GeneratorSet& gens = *a.generators();
    std::size_t odd_count = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
        odd_count += gens[i].odd() ? 1 : 0;

    LowerGradedTable out;
    out.cutoff = a.cutoff();
    out.max_lower = odd_count;

    // blocks[n][i]: monomials of degree n and odd word length i
    std::vector<std::vector<std::vector<Monomial>>> blocks;
    for (int n = 0; n <= a.cutoff() + 1; ++n) {
        std::vector<std::vector<Monomial>> by_lower(odd_count + 1);
        for (auto& m : a.monomial_basis_unchecked(n))
            by_lower[odd_word_length(gens, m)].push_back(std::move(m));
        blocks.push_back(std::move(by_lower));
    }

    // incoming[n][i]: coboundaries in block (n, i)
    std::vector<std::vector<std::vector<SparseVector>>> incoming(
        static_cast<std::size_t>(a.cutoff()) + 2, std::vector<std::vector<SparseVector>>(odd_count + 1));
    for (int n = 0; n <= a.cutoff(); ++n) {
        const auto un = static_cast<std::size_t>(n);
        std::vector<std::size_t> dims(odd_count + 1, 0);
        std::vector<std::vector<AlgebraElement>> reps(odd_count + 1);
        for (std::size_t i = 0; i <= odd_count; ++i) {
            const auto& source = blocks[un][i];
            std::vector<SparseVector> cocycles;
            if (i == 0) {
                for (std::size_t j = 0; j < source.size(); ++j)
                    cocycles.push_back(unit_vector(j));
            }
            else {
                std::vector<SparseVector> columns;
                ColumnReduction r =
                    reduce_differential(a, source, index_of(blocks[un + 1][i - 1]), &columns);
                cocycles = std::move(r.kernel);
                for (auto j : r.image_columns)
                    incoming[un + 1][i - 1].push_back(std::move(columns[j]));
            }
            BlockCohomology h = block_cohomology(incoming[un][i], cocycles);
            dims[i] = h.representatives.size();
            for (const auto& z : h.representatives)
                reps[i].push_back(element_from_sparse(a.generators(), source, z));
        }
        out.dims.push_back(std::move(dims));
        out.representatives.push_back(std::move(reps));
    }
    return out;
}

std::map<int, SubspaceBasis> h0_image(const CohomologyTable& t)
{
    const SullivanAlgebra& a = t.algebra();
    if (!is_pure(a))
        throw Error(ErrorKind::NotPure, "H_0 image needs a pure algebra");
    std::map<int, SubspaceBasis> out;
    for (int n = 0; n <= t.cutoff(); n += 2) {
        const std::size_t b = t.betti(n);
        SparseEchelon span;
        std::vector<Vector> chosen;
        for (const auto& m : t.monomials(n)) {
            if (odd_word_length(*a.generators(), m) != 0)
                continue;
            Vector c = t.coordinates(n, AlgebraElement::monomial(a.generators(), m));
            if (span.insert(to_sparse(c)))
                chosen.push_back(std::move(c));
            if (chosen.size() == b)
                break;
        }
        out.emplace(n, SubspaceBasis(b, std::move(chosen)));
    }
    return out;
}

std::map<int, SubspaceBasis> h0_image(const SullivanAlgebra& a)
{
    if (!is_pure(a))
        throw Error(ErrorKind::NotPure, "H_0 image needs a pure algebra");
    return h0_image(cohomology(a));
}

std::vector<RationalMatrix> induced_map(const CdgaMorphism& f, const CohomologyTable& source,
                                        const CohomologyTable& target)
{
    if (!same_generators(source.algebra().generators(), f.source().generators()) ||
        !same_generators(target.algebra().generators(), f.target().generators()))
        throw Error(ErrorKind::NotAChainMap, "cohomology tables do not match the morphism");
    const int top = std::min(source.cutoff(), target.cutoff());
    std::vector<RationalMatrix> out;
    for (int n = 0; n <= top; ++n) {
        const auto& reps = source.representatives(n);
        RationalMatrix m(target.betti(n), reps.size());
        for (std::size_t k = 0; k < reps.size(); ++k) {
            const Vector c = target.coordinates(n, f.apply(reps[k]));
            for (std::size_t r = 0; r < c.size(); ++r)
                m(r, k) = c[r];
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<RationalMatrix> induced_map(const CdgaMorphism& f)
{
    return induced_map(f, cohomology(f.source()), cohomology(f.target()));
}

SurjectivityResult degree_surjectivity(const std::vector<RationalMatrix>& maps, const CohomologyTable& target,
                                       Parity parity)
{
    SurjectivityResult out;
    for (std::size_t n = parity == Parity::Even ? 0 : 1; n < maps.size(); n += 2) {
        if (rank(maps[n]) != target.betti(static_cast<int>(n))) {
            out.surjective = false;
            out.first_failing_degree = static_cast<int>(n);
            break;
        }
    }
    return out;
}

SurjectivityResult even_degree_surjectivity(const CdgaMorphism& f)
{
    const CohomologyTable target = cohomology(f.target());
    return degree_surjectivity(induced_map(f, cohomology(f.source()), target), target, Parity::Even);
}

Vector cup_product(const CohomologyTable& t, int degree1, const Vector& c1, int degree2, const Vector& c2)
{
    if (degree1 + degree2 > t.cutoff())
        throw Error(ErrorKind::CutoffExceeded, "product degree exceeds cutoff");
    const AlgebraElement p = t.representative(degree1, c1) * t.representative(degree2, c2);
    return t.coordinates(degree1 + degree2, p);
}

}  // namespace sullivan
