#include <doctest.h>

#include "sullivan/error.hpp"
#include "sullivan/polynomial.hpp"
#include "support.hpp"

using namespace testing;

namespace {

using Betti = std::vector<std::size_t>;

SullivanAlgebra s2_model(int cutoff = 4)
{
    return make_algebra({{"u", 2}, {"q", 3}}, {{"q", "u^2"}}, cutoff);
}

SullivanAlgebra cp2_sharp_model(int cutoff = 6)
{
    return make_algebra({{"x", 2}, {"y", 2}, {"n", 3}, {"m", 3}}, {{"n", "x^2+y^2"}, {"m", "x*y"}}, cutoff);
}

// SU(3)/T^2 with H*(BSU(3)) -> H*(BT^2) via elementary symmetric functions of u1, u2, -u1-u2
SullivanAlgebra flag_manifold_model()
{
    return make_algebra({{"u1", 2}, {"u2", 2}, {"q1", 3}, {"q2", 5}},
                        {{"q1", "u1^2+u1*u2+u2^2"}, {"q2", "u1^2*u2+u1*u2^2"}}, 6);
}

}  // namespace

TEST_CASE("cohomology examples")
{
    CHECK(cohomology(s2_model()).betti() == Betti{1, 0, 1, 0, 0});
    CHECK(cohomology(cp2_sharp_model()).betti() == Betti{1, 0, 2, 0, 1, 0, 0});
    const auto ext = make_algebra({{"a", 3}, {"b", 5}}, {}, 8);
    CHECK(cohomology(ext).betti() == Betti{1, 0, 0, 1, 0, 1, 0, 0, 1});
    CHECK(cohomology(flag_manifold_model()).betti() == Betti{1, 0, 2, 0, 2, 0, 1});
    CHECK(cohomology(SullivanAlgebra::unit(3)).betti() == Betti{1, 0, 0, 0});
}

TEST_CASE("cohomology rejects d^2 != 0")
{
    // d b = a x with d x = a^2... built by hand: a in degree 2, y odd with d y = a, z with d z = y a
    auto gens = make_generators({{"a", 2}, {"y", 1}, {"z", 2}});
    std::vector<AlgebraElement> d = {AlgebraElement(gens), parse_element(gens, "a"), parse_element(gens, "a*y")};
    const SullivanAlgebra bad(gens, d, 4);
    CHECK_FALSE(verify_d_squared(bad));
    try {
        (void)cohomology(bad);
        FAIL("expected InvalidDifferential");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidDifferential);
    }
}

TEST_CASE("Euler characteristic and Poincare duality")
{
    CHECK(euler_characteristic(cohomology(s2_model(2))) == 2);
    CHECK(euler_characteristic(cohomology(cp2_sharp_model(4))) == 4);
    CHECK(euler_characteristic(cohomology(make_algebra({{"q", 3}}, {}, 3))) == 0);
    CHECK(satisfies_poincare_duality(cohomology(cp2_sharp_model()), 4));
    CHECK(satisfies_poincare_duality(cohomology(flag_manifold_model()), 6));
    CHECK_FALSE(satisfies_poincare_duality(cohomology(make_algebra({{"u", 2}}, {}, 4)), 2));
}

TEST_CASE("representatives are cocycles with coordinates")
{
    const auto t = cohomology(cp2_sharp_model());
    for (int n = 0; n <= t.cutoff(); ++n)
        for (std::size_t k = 0; k < t.representatives(n).size(); ++k) {
            const auto& r = t.representatives(n)[k];
            CHECK(t.algebra().differential_of(r).is_zero());
            Vector e(t.betti(n), 0);
            e[k] = 1;
            CHECK(t.coordinates(n, r) == e);
        }
    // x^2 + y^2 is exact
    const auto& a = t.algebra();
    CHECK(t.coordinates(4, parse_element(a.generators(), "x^2+y^2")) == Vector{0});
    CHECK_THROWS_AS((void)t.coordinates(3, a.element("n")), Error);
    CHECK(t.top_degree() == 4);
}

TEST_CASE("lower grading")
{
    const auto sphere = lower_grading(make_algebra({{"q", 3}}, {}, 3));
    CHECK(sphere.dim(0, 0) == 1);
    CHECK(sphere.dim(3, 1) == 1);
    CHECK(sphere.dim(3, 0) == 0);

    const auto s2 = lower_grading(s2_model());
    CHECK(s2.dim(2, 0) == 1);
    for (int n = 0; n <= 4; ++n)
        CHECK(s2.dim(n, 1) == 0);

    const auto cp = lower_grading(cp2_sharp_model());
    const auto betti = cohomology(cp2_sharp_model()).betti();
    for (int n = 0; n <= 6; ++n)
        CHECK(cp.dim(n, 0) == betti[n]);

    CHECK_THROWS_AS((void)lower_grading(
                        make_algebra({{"u", 2}, {"w", 2}, {"z", 1}, {"y", 1}, {"v", 3}}, {{"v", "u^2+w*z*y"}}, 6)),
                    Error);
}

TEST_CASE("h0 image")
{
    const auto su2sq = h0_image(make_algebra({{"a", 3}, {"b", 3}}, {}, 6));
    CHECK(su2sq.at(0).dim() == 1);
    CHECK(su2sq.at(6).dim() == 0);
    CHECK(cohomology(make_algebra({{"a", 3}, {"b", 3}}, {}, 6)).betti(6) == 1);

    const auto s2 = h0_image(s2_model());
    CHECK(s2.at(2).dim() == 1);
    CHECK(h0_image(SullivanAlgebra::unit(2)).at(0).dim() == 1);
}

TEST_CASE("induced maps")
{
    const auto s2 = s2_model();
    const auto id = induced_map(CdgaMorphism::identity(s2));
    for (std::size_t n = 0; n < id.size(); ++n)
        CHECK(id[n] == RationalMatrix::identity(id[n].rows()));

    const auto poly = make_algebra({{"u", 2}}, {}, 4);
    const CdgaMorphism inc(poly, s2, {s2.element("u")});
    const auto maps = induced_map(inc);
    CHECK(maps[0] == RationalMatrix{{1}});
    CHECK(maps[2] == RationalMatrix{{1}});
    CHECK(maps[4].rows() == 0);
    CHECK(maps[4].cols() == 1);
    CHECK(even_degree_surjectivity(inc).surjective);

    // Q -> SU(2) x SU(2) fails first in degree 6
    const auto su2sq = make_algebra({{"a", 3}, {"b", 3}}, {}, 6);
    const CdgaMorphism unit_map(SullivanAlgebra::unit(6), su2sq, {});
    const auto r = even_degree_surjectivity(unit_map);
    CHECK_FALSE(r.surjective);
    REQUIRE(r.first_failing_degree);
    CHECK(*r.first_failing_degree == 6);

    CHECK(even_degree_surjectivity(CdgaMorphism(SullivanAlgebra::unit(3), SullivanAlgebra::unit(3), {})).surjective);
}

TEST_CASE("cup products")
{
    const auto s2 = cohomology(s2_model());
    CHECK(cup_product(s2, 2, {1}, 2, {1}) == Vector{});
    const auto cp = cohomology(cp2_sharp_model());
    // x has some coordinates in degree 2; its square is a nonzero class
    const auto x = cp.coordinates(2, cp.algebra().element("x"));
    const auto xx = cup_product(cp, 2, x, 2, x);
    REQUIRE(xx.size() == 1);
    CHECK(xx[0] != 0);
    CHECK(cup_product(cp, 0, {1}, 2, x) == x);
    CHECK_THROWS_AS((void)cup_product(cp, 4, {1}, 4, {1}), Error);
}

TEST_CASE("property: induced map of a composition is the product")
{
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        // polynomial on one or two generators -> pure instance -> perturbed version is not a map,
        // so compose poly -> poly' -> instance with random linear changes of variables
        auto inst = random_pure_elliptic(rng);
        if (!inst)
            continue;
        const CdgaMorphism second = even_inclusion(inst->algebra);
        const auto& mid = second.source();
        std::vector<AlgebraElement> images;
        for (std::size_t i = 0; i < mid.generator_count(); ++i)
            images.push_back(random_element(rng, mid, mid.generator(i).degree, 3));
        const CdgaMorphism first(mid, mid, images);
        const auto composite = induced_map(compose(second, first));
        const auto f = induced_map(first);
        const auto g = induced_map(second);
        for (std::size_t n = 0; n < composite.size(); ++n)
            CHECK(composite[n] == g[n] * f[n]);
    }
}
