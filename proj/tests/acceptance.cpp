// Acceptance checks 1-8. One PASS/FAIL line each; exit status is nonzero on any failure.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "sullivan/catalog.hpp"
#include "sullivan/criteria.hpp"
#include "sullivan/document.hpp"
#include "sullivan/ktheory.hpp"
#include "sullivan/polynomial.hpp"
#include "sullivan/report.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitS2 = 1.0;
constexpr double kLimitConnectedSum = 5.0;
constexpr double kLimitCor01 = 60.0;
constexpr double kLimitInvariants = 120.0;

// Population sizes.
constexpr int kMinDiagrams = 20;
constexpr int kMinPureInstances = 200;
constexpr int kMinInvariantCases = 1000;
constexpr std::size_t kWideInstances = 40;

using Betti = std::vector<std::size_t>;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            if (!detail.empty())
                detail += "; ";
            detail += what;
        }
    }
};

Json read_data(const std::string& name)
{
    std::ifstream in(std::string(SULLIVAN_DATA_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

std::string join(const Betti& b)
{
    std::string s;
    for (auto x : b)
        s += (s.empty() ? "" : ",") + std::to_string(x);
    return "(" + s + ")";
}

bool odd_vanishes(const Betti& b)
{
    for (std::size_t n = 1; n < b.size(); n += 2)
        if (b[n] != 0)
            return false;
    return true;
}

// ---------------------------------------------------------------- 1
Outcome s2_pipeline()
{
    Outcome o;
    const Document doc = load_document(read_data("s2.json"));
    const auto& in = *doc.homogeneous;
    const auto v = homogeneous_surjectivity(in.G, in.H, in.restriction);
    const auto model = homogeneous_model(in.G, in.H, in.restriction);
    const auto k = rational_k_dimensions(v.space_betti);
    o.require(v.space_betti == Betti{1, 0, 1}, "betti " + join(v.space_betti));
    o.require(homotopy_euler_characteristic(model) == 0, "chi_pi");
    o.require(v.rank_criterion && v.direct_check, "verdict");
    o.require(k.k0 == 2, "k0");
    o.detail = o.pass ? "betti (1,0,1), chi_pi 0, verdict true/true, k0 2" : o.detail;
    return o;
}

// ---------------------------------------------------------------- 2
// Q[e+, e-]/(e+ e-) in degree n, counted by listing exponent pairs.
std::size_t quotient_ring_count(int n)
{
    if (n % 2)
        return 0;
    std::size_t c = 0;
    for (int i = 0; 2 * i <= n; ++i) {
        const int j = n / 2 - i;
        if (i == 0 || j == 0)
            ++c;
    }
    return c;
}

Outcome connected_sum_two_ways()
{
    Outcome o;
    const auto check_manifold = [&](const SullivanAlgebra& a, const std::string& tag) {
        const auto t = cohomology(a);
        const Betti b = t.betti();
        const Betti head(b.begin(), b.begin() + std::min<std::size_t>(5, b.size()));
        o.require(head == Betti{1, 0, 2, 0, 1}, tag + " betti " + join(b));
        for (std::size_t n = 5; n < b.size(); ++n)
            o.require(b[n] == 0, tag + " nonzero above 4");
        o.require(euler_characteristic(t) == 4, tag + " chi");
        o.require(odd_vanishes(b), tag + " odd");
        o.require(satisfies_poincare_duality(t, 4), tag + " duality");
    };
    check_manifold(make_algebra({{"x", 2}, {"y", 2}, {"n", 3}, {"m", 3}}, {{"n", "x^2+y^2"}, {"m", "x*y"}}, 7),
                   "minimal model");

    const GroupDiagram d = load_diagram(read_data("cp2_sharp_cp2bar.json"));
    check_manifold(cohomogeneity_one_model(d, 7), "diagram model");
    const int top = 12;
    const auto borel = borel_model_cohomogeneity_one(d, top);
    const Betti hg = cohomology(borel.source()).betti();
    for (int n = 0; n <= top; ++n)
        o.require(hg[n] == quotient_ring_count(n), "H_G degree " + std::to_string(n));
    o.require(cohomogeneity_one_surjectivity(d).direct_check, "even surjectivity");
    if (o.pass)
        o.detail = "both models (1,0,2,0,1), chi 4, H_G dims " + join(hg);
    return o;
}

// ---------------------------------------------------------------- 3
struct Case {
    std::string label;
    SurjectivityVerdict verdict;
};

std::vector<std::vector<int>> random_full_rank(Rng& rng, int rows, int cols)
{
    for (;;) {
        std::vector<std::vector<int>> m(rows, std::vector<int>(cols));
        RationalMatrix r(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                r(i, j) = m[i][j] = uniform(rng, -1, 2);
        if (rank(r) == static_cast<std::size_t>(cols))
            return m;
    }
}

// Valid diagrams used by criteria 3 and 6.
std::vector<std::pair<std::string, GroupDiagram>> diagram_catalog()
{
    std::vector<std::pair<std::string, GroupDiagram>> out;
    for (const char* f : {"cp2_sharp_cp2bar.json", "gap2_diagonal_circles.json", "m8.json"})
        out.emplace_back(f, load_diagram(read_data(f)));
    Rng rng(7001);
    // (a, b): gap a - b - 1
    const std::vector<std::pair<int, int>> shapes = {{1, 0}, {2, 1}, {3, 2}, {2, 0}, {3, 1}, {4, 2},
                                                     {3, 0}, {4, 1}, {4, 0}, {2, 1}, {3, 1}, {4, 3}};
    for (auto [a, b] : shapes) {
        const auto minus = random_full_rank(rng, a, b + 1);
        // K+ shares the H columns and gets its own circle
        std::vector<std::vector<int>> plus;
        for (;;) {
            plus = minus;
            for (auto& row : plus)
                row[b] = uniform(rng, -1, 2);
            RationalMatrix r(a, b + 1);
            for (int i = 0; i < a; ++i)
                for (int j = 0; j <= b; ++j)
                    r(i, j) = plus[i][j];
            if (rank(r) == static_cast<std::size_t>(b + 1))
                break;
        }
        out.emplace_back("(SU(2)^" + std::to_string(a) + ", T" + std::to_string(b) + ", T" + std::to_string(b + 1) +
                             ", T" + std::to_string(b + 1) + ") random",
                         su2_torus_diagram(a, b, minus, plus));
    }
    // fibre spheres S^3
    const GroupData su2 = catalog_group("SU(2)");
    GroupDiagram s3{su2_power(2), trivial_group(), su2, su2, {}, {}, 3, 3};
    auto vars = GroupDiagram::fibre_variables(s3.H, 3);
    s3.to_minus = RestrictionMap::parse(s3.G, su2.name, vars, {{"x1", "e"}});
    s3.to_plus = RestrictionMap::parse(s3.G, su2.name, vars, {{"x2", "e"}});
    s3.validate();
    out.emplace_back("(SU(2)^2, {e}, SU(2), SU(2))", s3);
    return out;
}

Outcome cross_validation()
{
    Outcome o;
    std::vector<Case> cases;
    for (const auto& [label, d] : diagram_catalog())
        cases.push_back({label, cohomogeneity_one_surjectivity(d)});

    Rng rng(7002);
    for (int a = 1; a <= 4; ++a)
        for (int b = std::max(0, a - 3); b <= a; ++b) {
            const auto m = b == 0 ? std::vector<std::vector<int>>(a, std::vector<int>{}) : random_full_rank(rng, a, b);
            const auto map = su2_torus_restriction(a, b, m);
            cases.push_back({"SU(2)^" + std::to_string(a) + "/T" + std::to_string(b),
                             homogeneous_surjectivity(su2_power(a), torus(b), map)});
        }
    // equal rank and gap 1 biquotients from the catalog
    {
        const Document gm = load_document(read_data("gromoll_meyer.json"));
        const auto& bq = *gm.biquotient;
        cases.push_back({"Sp(2)//Sp(1)", biquotient_surjectivity(bq.G, bq.H, bq.left, bq.right)});
        const auto su3 = catalog_group("SU(3)");
        const auto t2 = catalog_group("T2");
        const auto e = catalog_embedding("SU(3)>T2");
        auto vars = make_generators(classifying_generators(t2, "u"));
        const auto left = RestrictionMap::parse(su3, t2.name, vars, e.map);
        cases.push_back({"SU(3)//T2", biquotient_surjectivity(su3, t2, left, RestrictionMap::zero(su3, t2.name, vars))});
    }

    std::set<int> gaps;
    int held = 0, agree = 0;
    for (const auto& c : cases) {
        if (!c.verdict.hypotheses_hold)
            continue;
        ++held;
        gaps.insert(c.verdict.rank_gap);
        if (c.verdict.rank_criterion == c.verdict.direct_check)
            ++agree;
        else
            o.require(false, "disagreement on " + c.label);
    }
    o.require(held >= kMinDiagrams, "only " + std::to_string(held) + " cases");
    for (int g = 0; g <= 3; ++g)
        o.require(gaps.count(g) == 1, "gap " + std::to_string(g) + " not covered");

    const GroupDiagram gap2 = load_diagram(read_data("gap2_diagonal_circles.json"));
    const auto v = cohomogeneity_one_surjectivity(gap2);
    o.require(!v.direct_check && v.first_failing_degree.has_value(), "gap-2 witness");
    if (o.pass)
        o.detail = std::to_string(agree) + "/" + std::to_string(held) + " agree over gaps 0-3; gap-2 witness degree " +
                   std::to_string(*v.first_failing_degree);
    return o;
}

// ---------------------------------------------------------------- 4, 5
std::vector<PureInstance> pure_population(std::uint64_t seed, int count)
{
    Rng rng(seed);
    std::vector<PureInstance> out;
    while (static_cast<int>(out.size()) < count)
        if (auto inst = random_pure_elliptic(rng))
            out.push_back(std::move(*inst));
    return out;
}

Outcome cor01_suite(const std::vector<PureInstance>& population)
{
    Outcome o;
    int low = 0, high = 0, holds = 0;
    for (const auto& inst : population) {
        const auto r = pure_h0_equals_heven(inst.algebra);
        o.require(r.elliptic_proxy, "non-elliptic instance slipped through");
        if (r.consistent())
            ++holds;
        else
            o.require(false, "counterexample with chi_pi " + std::to_string(r.chi_pi));
        (r.chi_pi <= 1 ? low : high) += 1;
    }
    o.require(static_cast<int>(population.size()) >= kMinPureInstances, "population too small");
    o.require(low > 0 && high > 0, "population misses one side of the equivalence");
    if (o.pass)
        o.detail = std::to_string(holds) + "/" + std::to_string(population.size()) + " instances (" +
                   std::to_string(low) + " with chi_pi <= 1, " + std::to_string(high) + " with chi_pi >= 2)";
    return o;
}

struct LemmaredStats {
    int instances = 0;
    int premise = 0;
    int non_pure = 0;
    int non_pure_premise = 0;
};

LemmaredStats lemmared_run(Outcome& o, Rng& rng, const std::vector<PureInstance>& population)
{
    LemmaredStats s;
    for (const auto& inst : population) {
        const SullivanAlgebra original = random_perturbation(rng, inst.algebra);
        o.require(verify_d_squared(original), "perturbation breaks d^2 = 0");
        const SullivanAlgebra pure = associated_pure(original);
        o.require(pure.differentials() == inst.algebra.differentials(), "associated pure mismatch");
        ++s.instances;
        const bool perturbed = !is_pure(original);
        s.non_pure += perturbed;
        if (!even_degree_surjectivity(even_inclusion(pure)).surjective)
            continue;
        ++s.premise;
        s.non_pure_premise += perturbed;
        o.require(even_degree_surjectivity(even_inclusion(original)).surjective, "implication fails");
    }
    return s;
}

// With odd degrees <= 8 every perturbable instance has chi_pi >= 2, where the premise is
// false, so a second population with room for length-3 boundaries keeps the check honest.
PureShape wide_shape()
{
    PureShape s;
    s.min_even = 3;
    s.max_even = 3;
    s.max_odd = 4;
    s.even_degrees = {2};
    s.extra_odd_degrees = {9};
    s.max_anchor_degree = 3;
    s.max_cutoff = 24;
    return s;
}

Outcome lemmared_suite(const std::vector<PureInstance>& population)
{
    Outcome o;
    Rng rng(7003);
    const LemmaredStats narrow = lemmared_run(o, rng, population);

    Rng wide_rng(7006);
    std::vector<PureInstance> wide;
    while (wide.size() < kWideInstances)
        if (auto inst = random_pure_elliptic(wide_rng, wide_shape()))
            wide.push_back(std::move(*inst));
    const LemmaredStats broad = lemmared_run(o, rng, wide);

    o.require(narrow.premise > 0, "vacuous main population");
    o.require(broad.non_pure_premise > 0, "no non-pure instance satisfies the premise");
    if (o.pass)
        o.detail = "main population: " + std::to_string(narrow.premise) + "/" + std::to_string(narrow.instances) +
                   " premise, " + std::to_string(narrow.non_pure) + " non-pure, " +
                   std::to_string(narrow.non_pure_premise) + " both; wide population: " +
                   std::to_string(broad.premise) + "/" + std::to_string(broad.instances) + " premise, " +
                   std::to_string(broad.non_pure_premise) + " non-pure with premise; implication held in all";
    return o;
}

// ---------------------------------------------------------------- 6
Outcome euler_identity()
{
    Outcome o;
    int count = 0;
    for (const auto& [label, d] : diagram_catalog()) {
        const auto e = euler_characteristic_relations(d);
        o.require(e.identity_holds, label + ": " + std::to_string(e.chi_m) + " != " + std::to_string(e.chi_g_kminus) +
                                        " + " + std::to_string(e.chi_g_kplus) + " - " + std::to_string(e.chi_g_h));
        if (e.positivity_equivalence)
            o.require(*e.positivity_equivalence, label + ": positivity");
        ++count;
    }
    if (o.pass)
        o.detail = "identity exact on " + std::to_string(count) + " diagrams";
    return o;
}

// ---------------------------------------------------------------- 7
Outcome k_bridge()
{
    Outcome o;
    const Document doc = load_document(read_data("g2_so4.json"));
    const auto& in = *doc.homogeneous;
    const auto t = cohomology(homogeneous_model(in.G, in.H, in.restriction));
    o.require(t.betti() == Betti{1, 0, 0, 0, 1, 0, 0, 0, 1}, "betti " + join(t.betti()));
    const auto k = rational_k_dimensions(t);
    o.require(k.k0 == 3 && k.k1 == 0, "k0 " + std::to_string(k.k0) + " k1 " + std::to_string(k.k1));
    o.require(stable_class_infinitude(t), "stable classes");
    if (o.pass)
        o.detail = "betti (1,0,0,0,1,0,0,0,1), k0 3, k1 0, ko " + std::to_string(k.ko) + ", infinitely many stable classes";
    return o;
}

// ---------------------------------------------------------------- 8
Outcome invariants()
{
    Outcome o;
    Rng rng(7004);
    int cases = 0;
    // d^2, Leibniz, Koszul, basis counts on random Sullivan algebras
    for (int trial = 0; trial < 250; ++trial) {
        const auto a = random_sullivan_algebra(rng, 5, 6, 12);
        o.require(verify_d_squared(a), "d^2");
        for (int n = 0; n + 2 <= a.cutoff(); ++n)
            for (const auto& m : a.monomial_basis(n))
                o.require(a.differential_of(a.differential_of(m)).is_zero(), "d^2 on a monomial");
        ++cases;

        std::vector<int> degrees;
        for (const auto& g : a.generators()->list())
            degrees.push_back(g.degree);
        const auto series = basis_count_series(degrees, a.cutoff());
        for (int n = 0; n <= a.cutoff(); ++n)
            o.require(a.monomial_basis(n).size() == series[n], "basis count");
        ++cases;

        const int d1 = uniform(rng, 0, 5), d2 = uniform(rng, 0, 5);
        const auto x = random_element(rng, a, d1);
        const auto y = random_element(rng, a, d2);
        const Rational koszul = (d1 * d2) % 2 ? -1 : 1;
        o.require(x * y == koszul * (y * x), "Koszul");
        ++cases;
        const Rational s = d1 % 2 ? -1 : 1;
        o.require(a.differential_of(x * y) == a.differential_of(x) * y + s * (x * a.differential_of(y)), "Leibniz");
        ++cases;
    }
    // Poincare duality on elliptic pure algebras and their perturbations
    int pd = 0;
    while (pd < 100) {
        auto inst = random_pure_elliptic(rng);
        if (!inst)
            continue;
        o.require(satisfies_poincare_duality(cohomology(inst->algebra), inst->formal_dimension), "duality (pure)");
        const auto perturbed = random_perturbation(rng, inst->algebra);
        o.require(satisfies_poincare_duality(cohomology(perturbed), inst->formal_dimension), "duality (perturbed)");
        pd += 1;
        cases += 2;
    }
    o.require(cases >= kMinInvariantCases, "only " + std::to_string(cases) + " cases");
    if (o.pass)
        o.detail = std::to_string(cases) + " randomized cases";
    return o;
}

}  // namespace

int main()
{
    int failures = 0;
    const auto run = [&](int id, const char* name, double limit, const std::function<Outcome()>& body) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (limit > 0 && secs > limit) {
            o.pass = false;
            o.detail += " (time limit " + std::to_string(limit) + " s exceeded)";
        }
        if (!o.pass)
            ++failures;
        std::printf("%s criterion %d %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
        std::fflush(stdout);
    };

    run(1, "S2 pipeline", kLimitS2, s2_pipeline);
    run(2, "CP2#-CP2 two ways", kLimitConnectedSum, connected_sum_two_ways);
    run(3, "theorem cross-validation", 0, cross_validation);

    std::vector<PureInstance> population;
    run(4, "H0 = H^even iff chi_pi <= 1", kLimitCor01, [&] {
        population = pure_population(7005, kMinPureInstances);
        return cor01_suite(population);
    });
    run(5, "odd spectral sequence reduction", 0, [&] {
        if (population.empty())
            population = pure_population(7005, kMinPureInstances);
        return lemmared_suite(population);
    });
    run(6, "Euler identity", 0, euler_identity);
    run(7, "K-theory bridge on G2/SO(4)", 0, k_bridge);
    run(8, "randomized invariants", kLimitInvariants, invariants);
    return failures == 0 ? 0 : 1;
}
