#include "sullivan/criteria.hpp"

#include <algorithm>

#include "sullivan/error.hpp"
#include "sullivan/sparse.hpp"

namespace sullivan {

std::string_view to_string(VerdictContext c)
{
    switch (c) {
    case VerdictContext::Homogeneous: return "homogeneous";
    case VerdictContext::Biquotient: return "biquotient";
    case VerdictContext::CohomogeneityOne: return "cohomogeneity_one";
    case VerdictContext::AlmostFree: return "almost_free";
    }
    return "unknown";
}

void require_consistent(const SurjectivityVerdict& v)
{
    if (!v.consistent())
        throw Error(ErrorKind::Inconsistent,
                    std::string(to_string(v.context)) + ": rank criterion says " +
                        (v.rank_criterion ? "surjective" : "not surjective") + " but direct check says " +
                        (v.direct_check ? "surjective" : "not surjective"));
}

SurjectivityVerdict verdict_from_morphism(const CdgaMorphism& borel, VerdictContext context)
{
    const CohomologyTable source = cohomology(borel.source());
    const CohomologyTable target = cohomology(borel.target());
    const auto maps = induced_map(borel, source, target);
    const SurjectivityResult even = degree_surjectivity(maps, target, Parity::Even);
    const SurjectivityResult odd = degree_surjectivity(maps, target, Parity::Odd);

    SurjectivityVerdict v;
    v.context = context;
    v.direct_check = even.surjective;
    v.first_failing_degree = even.first_failing_degree;
    v.odd_direct_check = odd.surjective;
    v.chi_pi = homotopy_euler_characteristic(borel.target());
    v.cutoff = target.cutoff();
    v.space_betti = target.betti();
    v.borel_betti = source.betti();
    return v;
}

namespace {

void flag_disconnected(SurjectivityVerdict& v, const GroupData& g)
{
    if (!g.flags.connected) {
        v.hypotheses_hold = false;
        v.notes.push_back(g.name + " is flagged disconnected; the rank criterion is outside its theorem");
    }
}

void note_disagreement(SurjectivityVerdict& v)
{
    if (!v.consistent())
        v.notes.push_back("DIAGNOSTIC: rank criterion and direct check disagree although the hypotheses hold");
}

}  // namespace

SurjectivityVerdict homogeneous_surjectivity(const GroupData& g, const GroupData& h,
                                             const RestrictionMap& restriction, std::optional<int> cutoff)
{
    SurjectivityVerdict v =
        verdict_from_morphism(borel_model_homogeneous(g, h, restriction, cutoff), VerdictContext::Homogeneous);
    v.rank_gap = g.rank - h.rank;
    v.rank_criterion = v.rank_gap <= 1;
    v.theorem = "thm:homogeneous-even-surjectivity (H^even(j) onto iff rk G - rk H <= 1)";
    flag_disconnected(v, g);
    flag_disconnected(v, h);
    note_disagreement(v);
    return v;
}

SurjectivityVerdict biquotient_surjectivity(const GroupData& g, const GroupData& h, const RestrictionMap& left,
                                            const RestrictionMap& right, std::optional<int> cutoff)
{
    SurjectivityVerdict v =
        verdict_from_morphism(borel_model_biquotient(g, h, left, right, cutoff), VerdictContext::Biquotient);
    v.rank_gap = g.rank - h.rank;
    v.rank_criterion = v.rank_gap <= 1;
    v.theorem = "thm:biquotient-even-surjectivity (H^even(p) onto iff rk G - rk H <= 1)";
    v.notes.push_back("freeness of the two-sided action is user-asserted");
    flag_disconnected(v, g);
    flag_disconnected(v, h);
    note_disagreement(v);
    return v;
}

SurjectivityVerdict cohomogeneity_one_surjectivity(const GroupDiagram& d, std::optional<int> cutoff)
{
    SurjectivityVerdict v =
        verdict_from_morphism(borel_model_cohomogeneity_one(d, cutoff), VerdictContext::CohomogeneityOne);
    v.rank_gap = d.G.rank - d.Kplus.rank;
    v.rank_criterion = v.rank_gap <= 1;
    v.theorem = "thm:cohomogeneity-one-even-surjectivity (odd fibre spheres; onto iff rk G - rk K <= 1)";
    note_disagreement(v);
    return v;
}

SurjectivityVerdict almost_free_surjectivity(const SullivanAlgebra& x, const GroupData& g,
                                             const std::map<std::string, std::string>& action,
                                             std::optional<int> cutoff)
{
    SullivanAlgebra quotient = almost_free_quotient_model(x, g, action, cutoff);
    SullivanAlgebra bg(make_generators(classifying_generators(g, "u")), {}, quotient.cutoff());
    std::vector<AlgebraElement> images;
    for (const auto& u : bg.generators()->list())
        images.push_back(quotient.element(u.name));
    SurjectivityVerdict v =
        verdict_from_morphism(CdgaMorphism(std::move(bg), quotient, std::move(images)), VerdictContext::AlmostFree);
    v.rank_gap = v.chi_pi;
    v.rank_criterion = v.chi_pi <= 1;
    v.theorem = "thm:almost-free-quotient-surjectivity (pure quotient model: onto iff chi_pi <= 1)";
    if (!is_pure(quotient)) {
        v.hypotheses_hold = false;
        v.notes.push_back("quotient model is not pure; the chi_pi criterion is only sufficient here");
    }
    flag_disconnected(v, g);
    note_disagreement(v);
    return v;
}

bool top_window_vanishes(const CohomologyTable& t)
{
    const SullivanAlgebra& a = t.algebra();
    if (a.generator_count() == 0)
        return true;
    int window = 0;
    for (const auto& g : a.generators()->list())
        window = std::max(window, g.degree);
    if (t.cutoff() - window < 0)
        return false;
    for (int n = t.cutoff() - window + 1; n <= t.cutoff(); ++n)
        if (t.betti(n) != 0)
            return false;
    return true;
}

bool even_degrees_below_odd(const SullivanAlgebra& a)
{
    int max_even = 0;
    int min_odd = -1;
    for (const auto& g : a.generators()->list()) {
        if (g.odd())
            min_odd = min_odd < 0 ? g.degree : std::min(min_odd, g.degree);
        else
            max_even = std::max(max_even, g.degree);
    }
    return min_odd < 0 || max_even < min_odd;
}

H0Comparison pure_h0_equals_heven(const SullivanAlgebra& a)
{
    if (!is_pure(a))
        throw Error(ErrorKind::NotPure, "H_0 comparison needs a pure algebra");
    const CohomologyTable t = cohomology(a);
    const auto h0 = h0_image(t);
    H0Comparison out;
    out.chi_pi = homotopy_euler_characteristic(a);
    out.elliptic_proxy = top_window_vanishes(t);
    out.h0_equals_heven = true;
    for (const auto& [n, basis] : h0) {
        if (basis.dim() < t.betti(n)) {
            out.h0_equals_heven = false;
            out.first_gap_degree = n;
            break;
        }
    }
    return out;
}

std::size_t nakayama_generator_count(const SullivanAlgebra& a)
{
    if (!is_pure(a))
        throw Error(ErrorKind::NotPure, "graded Nakayama count needs a pure algebra");
    const GeneratorSet& gens = *a.generators();
    std::vector<AlgebraElement> relations;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].odd() && !a.differential(i).is_zero())
            relations.push_back(a.differential(i));

    std::vector<int> degrees;
    for (const auto& r : relations)
        degrees.push_back(*r.degree());
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    auto even_monomials = [&](int n) {
        std::vector<Monomial> out;
        for (auto& m : a.monomial_basis_unchecked(n))
            if (odd_word_length(gens, m) == 0)
                out.push_back(std::move(m));
        return out;
    };

    std::size_t mu = 0;
    for (int n : degrees) {
        const auto basis = even_monomials(n);
        std::map<Monomial, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i)
            index.emplace(basis[i], i);
        auto to_vec = [&](const AlgebraElement& e) {
            SparseVector v;
            for (const auto& [m, c] : e.terms())
                v.push_back({index.at(m), c});
            std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
            return v;
        };
        // (Lambda^+ V^even) * I in degree n
        SparseEchelon span;
        for (const auto& r : relations) {
            const int rd = *r.degree();
            if (rd >= n)
                continue;
            for (const auto& m : even_monomials(n - rd))
                span.insert(to_vec(AlgebraElement::monomial(a.generators(), m) * r));
        }
        for (const auto& r : relations)
            if (*r.degree() == n && span.insert(to_vec(r)))
                ++mu;
    }
    return mu;
}

FormalityVerdict pure_formality(const SullivanAlgebra& a)
{
    FormalityVerdict out;
    out.minimal_generators_mu = nakayama_generator_count(a);
    for (const auto& g : a.generators()->list())
        (g.odd() ? out.odd_generators : out.even_generators) += 1;
    out.split_k = out.odd_generators - out.minimal_generators_mu;
    out.formal = out.minimal_generators_mu == out.even_generators;
    out.elliptic_proxy = top_window_vanishes(cohomology(a));
    return out;
}

namespace {

// K+- with H*(BK) presented as H*(BH)[e]: exterior degrees of H followed by l.
GroupData presented_isotropy(const GroupData& k, const GroupData& h, int sphere_dim)
{
    GroupData out = k;
    out.exterior_degrees = h.exterior_degrees;
    out.exterior_degrees.push_back(sphere_dim);
    return out;
}

RestrictionMap rename_fibre_variable(const RestrictionMap& map, const GroupData& presented)
{
    auto vars = make_generators(classifying_generators(presented, "u"));
    std::vector<AlgebraElement> images;
    for (std::size_t i = 0; i < vars->size(); ++i)
        images.push_back(AlgebraElement::generator(vars, i));
    RestrictionMap out{map.source, presented.name, vars, {}};
    for (const auto& img : map.images)
        out.images.push_back(substitute(img, vars, images));
    return out;
}

int orbit_euler(const GroupData& g, const GroupData& k, const RestrictionMap& map)
{
    return euler_characteristic(cohomology(homogeneous_model(g, k, map)));
}

}  // namespace

EulerRelations euler_characteristic_relations(const GroupDiagram& d)
{
    d.validate();
    EulerRelations out;
    out.chi_m = euler_characteristic(cohomology(cohomogeneity_one_model(d)));
    const GroupData km = presented_isotropy(d.Kminus, d.H, d.sphere_minus);
    const GroupData kp = presented_isotropy(d.Kplus, d.H, d.sphere_plus);
    out.chi_g_kminus = orbit_euler(d.G, km, rename_fibre_variable(d.to_minus, km));
    out.chi_g_kplus = orbit_euler(d.G, kp, rename_fibre_variable(d.to_plus, kp));
    out.chi_g_h = orbit_euler(d.G, d.H, d.to_principal());
    out.identity_holds = out.chi_m == out.chi_g_kminus + out.chi_g_kplus - out.chi_g_h;
    if (d.sphere_minus == 1 && d.sphere_plus == 1)
        out.positivity_equivalence = (out.chi_m > 0) == (d.G.rank == d.Kplus.rank && d.G.rank == d.Kminus.rank);
    return out;
}

TheoremAApplicability theorem_a_applicability(const GroupDiagram& d)
{
    TheoremAApplicability out;
    const bool connected =
        d.G.flags.connected && d.H.flags.connected && d.Kminus.flags.connected && d.Kplus.flags.connected;
    const bool odd_spheres = d.sphere_minus % 2 == 1 && d.sphere_plus % 2 == 1;
    const bool steinberg = d.Kminus.flags.steinberg && d.Kplus.flags.steinberg;
    const int max_k = std::max(d.Kminus.rank, d.Kplus.rank);
    out.circle_fibres = d.sphere_minus == 1 && d.sphere_plus == 1;
    out.integral_clause = out.circle_fibres && connected && d.G.rank == d.Kminus.rank &&
                          d.G.rank == d.Kplus.rank && d.G.flags.pi1_torsion_free && steinberg;
    out.rational_clause =
        out.circle_fibres && connected && d.G.rank - d.Kminus.rank <= 1 && d.G.rank - d.Kplus.rank <= 1;
    out.even_surjectivity_theorem = connected && odd_spheres;
    out.carlson_integral = connected && d.G.flags.pi1_torsion_free && steinberg && d.G.rank == max_k;
    if (!connected)
        out.notes.push_back("some group is flagged disconnected");
    if (!out.circle_fibres)
        out.notes.push_back("K+-/H is not a circle; the curvature clauses need codimension-two singular orbits");
    if (!d.G.flags.pi1_torsion_free)
        out.notes.push_back("pi1(G) has torsion");
    if (!steinberg)
        out.notes.push_back("K+- not flagged as satisfying Steinberg's assumptions");
    return out;
}

bool circle_orbit_space_formality(const GroupData& g, const GroupData& h)
{
    return g.rank == h.rank;
}

}  // namespace sullivan
