#include "support.hpp"

#include <algorithm>
#include <map>

#include "sullivan/criteria.hpp"
#include "sullivan/polynomial.hpp"

namespace testing {

int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rational small_rational(Rng& rng, int bound, bool allow_fractions)
{
    Rational r(uniform(rng, -bound, bound), allow_fractions ? uniform(rng, 1, bound) : 1);
    r.canonicalize();
    return r;
}

RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int target_rank)
{
    if (target_rank < 0) {
        RationalMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (uniform(rng, 0, 2) != 0)
                    m(r, c) = small_rational(rng);
        return m;
    }
    // product of rows x k and k x cols factors has rank <= k
    const std::size_t k = static_cast<std::size_t>(target_rank);
    RationalMatrix a(rows, k), b(k, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < k; ++c)
            a(r, c) = small_rational(rng);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            b(r, c) = small_rational(rng);
    return a * b;
}

std::size_t naive_rank(RationalMatrix m)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::swap(m(p, j), m(rank, j));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || m(r, c) == 0)
                continue;
            const Rational f = m(r, c) / m(rank, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(r, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::vector<std::size_t> basis_count_series(const std::vector<int>& degrees, int n)
{
    std::vector<std::size_t> series(n + 1, 0);
    series[0] = 1;
    for (int d : degrees) {
        if (d % 2 == 1) {
            for (int k = n; k >= d; --k)
                series[k] += series[k - d];
        } else {
            for (int k = d; k <= n; ++k)
                series[k] += series[k - d];
        }
    }
    return series;
}

AlgebraElement random_element(Rng& rng, const SullivanAlgebra& a, int degree, int max_terms)
{
    AlgebraElement out(a.generators());
    if (degree < 0)
        return out;
    const auto basis = a.monomial_basis_unchecked(degree);
    if (basis.empty())
        return out;
    const int terms = uniform(rng, 1, max_terms);
    for (int i = 0; i < terms; ++i) {
        const auto& m = basis[uniform(rng, 0, static_cast<int>(basis.size()) - 1)];
        out += AlgebraElement::monomial(a.generators(), m, small_rational(rng, 3, false));
    }
    return out;
}

namespace {

// Random element of the cocycles among span(candidates) in algebra a.
AlgebraElement random_cocycle(Rng& rng, const SullivanAlgebra& a, const std::vector<Monomial>& candidates)
{
    AlgebraElement z(a.generators());
    if (candidates.empty())
        return z;
    std::map<Monomial, std::size_t, MonomialOrder> index;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
    for (const auto& m : candidates) {
        std::vector<std::pair<std::size_t, Rational>> col;
        const AlgebraElement dm = a.differential_of(m);
        for (const auto& [t, c] : dm.terms()) {
            auto [it, fresh] = index.emplace(t, index.size());
            col.emplace_back(it->second, c);
        }
        cols.push_back(std::move(col));
    }
    RationalMatrix d(index.size(), candidates.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [r, c] : cols[j])
            d(r, j) = c;
    const SubspaceBasis k = kernel_basis(d);
    for (const auto& v : k.vectors()) {
        const Rational c(uniform(rng, -2, 2));
        if (c == 0)
            continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0)
                z += AlgebraElement::monomial(a.generators(), candidates[j], c * v[j]);
    }
    return z;
}

std::vector<Monomial> even_monomials(const SullivanAlgebra& a, int degree)
{
    std::vector<Monomial> out;
    for (auto& m : a.monomial_basis_unchecked(degree))
        if (odd_word_length(*a.generators(), m) == 0)
            out.push_back(std::move(m));
    return out;
}

}  // namespace

SullivanAlgebra random_sullivan_algebra(Rng& rng, int max_generators, int max_degree, int cutoff)
{
    const int count = uniform(rng, 1, max_generators);
    std::vector<Generator> list;
    for (int i = 0; i < count; ++i)
        list.push_back({"g" + std::to_string(i), uniform(rng, 2, max_degree)});
    auto gens = make_generators(list);
    std::vector<AlgebraElement> diff(count, AlgebraElement(gens));
    for (int k = 0; k < count; ++k) {
        // algebra of the generators added so far (later ones still have d = 0 and are excluded)
        SullivanAlgebra partial(gens, diff, cutoff);
        std::vector<Monomial> candidates;
        for (auto& m : partial.monomial_basis_unchecked(list[k].degree + 1)) {
            bool earlier = true;
            for (int j = k; j < count; ++j)
                earlier = earlier && m.exponents[j] == 0;
            if (earlier)
                candidates.push_back(std::move(m));
        }
        if (uniform(rng, 0, 3) != 0)
            diff[k] = random_cocycle(rng, partial, candidates);
    }
    return SullivanAlgebra(gens, diff, cutoff);
}

std::optional<PureInstance> random_pure_elliptic(Rng& rng, const PureShape& shape)
{
    const int n_even = uniform(rng, shape.min_even, shape.max_even);
    const int n_odd = uniform(rng, n_even, std::max(n_even, shape.max_odd));
    std::vector<Generator> list;
    for (int i = 0; i < n_even; ++i) {
        const auto& choices = shape.even_degrees;
        list.push_back({"x" + std::to_string(i + 1), choices[uniform(rng, 0, static_cast<int>(choices.size()) - 1)]});
    }
    std::vector<int> odd_degrees;
    for (int i = 0; i < n_odd; ++i) {
        if (i < n_even) {
            // anchor x_i^k with k * deg x_i - 1 <= max_anchor_degree
            const int dx = list[i].degree;
            const int kmax = (shape.max_anchor_degree + 1) / dx;
            const int k = kmax >= 2 ? uniform(rng, 2, kmax) : 1;
            odd_degrees.push_back(k * dx - 1);
        } else {
            const auto& choices = shape.extra_odd_degrees;
            odd_degrees.push_back(choices[uniform(rng, 0, static_cast<int>(choices.size()) - 1)]);
        }
        list.push_back({"v" + std::to_string(i + 1), odd_degrees.back()});
    }
    int fdim = 0;
    int window = 0;
    for (const auto& g : list) {
        fdim += g.odd() ? g.degree : -(g.degree - 1);
        window = std::max(window, g.degree);
    }
    if (fdim < 0 || fdim + window > shape.max_cutoff)
        return std::nullopt;

    auto gens = make_generators(list);
    SullivanAlgebra shell(gens, {}, 0);
    std::vector<AlgebraElement> diff(list.size(), AlgebraElement(gens));
    for (int i = 0; i < n_odd; ++i) {
        const std::size_t idx = static_cast<std::size_t>(n_even + i);
        AlgebraElement d(gens);
        if (i < n_even) {
            const int k = (odd_degrees[i] + 1) / list[i].degree;
            d = power(AlgebraElement::generator(gens, static_cast<std::size_t>(i)), static_cast<unsigned>(k));
        }
        for (const auto& m : even_monomials(shell, odd_degrees[i] + 1))
            if (uniform(rng, 0, 2) == 0)
                d += AlgebraElement::monomial(gens, m, Rational(uniform(rng, -2, 2)));
        diff[idx] = d;
    }
    SullivanAlgebra a(gens, diff, fdim + window);
    const CohomologyTable t = cohomology(a);
    if (!top_window_vanishes(t))
        return std::nullopt;
    return PureInstance{a, fdim};
}

SullivanAlgebra random_perturbation(Rng& rng, const SullivanAlgebra& pure)
{
    const auto& gens = pure.generators();
    const std::size_t n = gens->size();
    std::vector<AlgebraElement> diff;
    for (std::size_t i = 0; i < n; ++i)
        diff.push_back(pure.differential(i));
    std::vector<AlgebraElement> partial_diff(n, AlgebraElement(gens));
    for (std::size_t k = 0; k < n; ++k) {
        if ((*gens)[k].even())
            continue;
        SullivanAlgebra partial(gens, partial_diff, pure.cutoff());
        std::vector<Monomial> candidates;
        for (auto& m : partial.monomial_basis_unchecked((*gens)[k].degree + 1)) {
            bool allowed = odd_word_length(*gens, m) >= 2;
            for (std::size_t j = k; j < n && allowed; ++j)
                allowed = (*gens)[j].even() || m.exponents[j] == 0;
            if (allowed)
                candidates.push_back(std::move(m));
        }
        diff[k] = pure.differential(k) + random_cocycle(rng, partial, candidates);
        partial_diff[k] = diff[k];
    }
    return SullivanAlgebra(gens, diff, pure.cutoff());
}

CdgaMorphism even_inclusion(const SullivanAlgebra& a)
{
    std::vector<Generator> evens;
    for (const auto& g : a.generators()->list())
        if (g.even())
            evens.push_back(g);
    SullivanAlgebra source(make_generators(evens), {}, a.cutoff());
    std::vector<AlgebraElement> images;
    for (const auto& g : evens)
        images.push_back(a.element(g.name));
    return CdgaMorphism(std::move(source), a, std::move(images));
}

SullivanAlgebra make_algebra(const std::vector<Generator>& generators,
                             const std::map<std::string, std::string>& differential, int cutoff)
{
    auto gens = make_generators(generators);
    std::vector<AlgebraElement> d(gens->size(), AlgebraElement(gens));
    for (const auto& [name, text] : differential)
        d[gens->index_of(name)] = parse_element(gens, text);
    return SullivanAlgebra(gens, d, cutoff);
}

GroupData su2_power(int k)
{
    return GroupData{k == 1 ? "SU(2)" : "SU(2)^" + std::to_string(k), k, 3 * k, std::vector<int>(k, 3), {}};
}

GroupData torus(int k)
{
    return k == 0 ? trivial_group() : GroupData{"T" + std::to_string(k), k, k, std::vector<int>(k, 1), {}};
}

GroupData trivial_group()
{
    return GroupData{"{e}", 0, 0, {}, {}};
}

RestrictionMap su2_circle_map(int a, const std::vector<int>& circle_of_factor, const GeneratorsPtr& vars,
                              const std::string& target)
{
    std::map<std::string, std::string> m;
    for (int i = 0; i < a; ++i) {
        const int c = circle_of_factor[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        m["x" + std::to_string(i + 1)] = (c > 0 ? "u" + std::to_string(c) : std::string("e")) + "^2";
    }
    return RestrictionMap::parse(su2_power(a), target, vars, m);
}

namespace {

RestrictionMap squares_of_forms(const GroupData& source, const std::string& target, const GeneratorsPtr& vars,
                                const std::vector<std::vector<int>>& matrix, std::size_t columns)
{
    RestrictionMap out{source.name, target, vars, {}};
    for (const auto& row : matrix) {
        AlgebraElement form(vars);
        for (std::size_t j = 0; j < columns; ++j)
            if (row[j] != 0)
                form += Rational(row[j]) * AlgebraElement::generator(vars, j);
        out.images.push_back(form * form);
    }
    out.validate(source);
    return out;
}

}  // namespace

GroupDiagram su2_torus_diagram(int a, int b, const std::vector<std::vector<int>>& minus,
                               const std::vector<std::vector<int>>& plus)
{
    GroupDiagram d{su2_power(a), torus(b), torus(b + 1), torus(b + 1),
                   RestrictionMap{}, RestrictionMap{}, 1, 1};
    auto vars = GroupDiagram::fibre_variables(d.H, 1);
    d.to_minus = squares_of_forms(d.G, d.Kminus.name, vars, minus, static_cast<std::size_t>(b + 1));
    d.to_plus = squares_of_forms(d.G, d.Kplus.name, vars, plus, static_cast<std::size_t>(b + 1));
    d.validate();
    return d;
}

RestrictionMap su2_torus_restriction(int a, int b, const std::vector<std::vector<int>>& matrix)
{
    const GroupData h = torus(b);
    auto vars = make_generators(classifying_generators(h, "u"));
    return squares_of_forms(su2_power(a), h.name, vars, matrix, static_cast<std::size_t>(b));
}

}  // namespace testing
