#include <doctest.h>

#include "sullivan/catalog.hpp"
#include "sullivan/error.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("group lookups")
{
    const auto su2 = catalog_group("SU(2)");
    CHECK(su2.rank == 1);
    CHECK(su2.dimension == 3);
    CHECK(su2.exterior_degrees == std::vector<int>{3});
    CHECK(catalog_group("SU(4)").exterior_degrees == std::vector<int>{3, 5, 7});
    CHECK(catalog_group("Sp(2)").exterior_degrees == std::vector<int>{3, 7});
    CHECK(catalog_group("G2").exterior_degrees == std::vector<int>{3, 11});
    CHECK(catalog_group("G2").dimension == 14);
    CHECK(catalog_group("SO(3)").exterior_degrees == std::vector<int>{3});
    CHECK_FALSE(catalog_group("SO(3)").flags.pi1_torsion_free);
    CHECK(catalog_group("T^3").rank == 3);
    CHECK(catalog_group("S1") == catalog_group("U(1)"));
    CHECK(catalog_group("{e}").rank == 0);
    CHECK_FALSE(catalog_group("Z2").flags.connected);
    const auto cube = catalog_group("SU2^3");
    CHECK(cube.rank == 3);
    CHECK(cube.dimension == 9);
    CHECK(canonical_group_name("SU2^2") == "SU(2)^2");
}

TEST_CASE("unknown names")
{
    for (const char* name : {"SU(0)", "Spin(7)", "", "T-1", "SU(2)>nowhere", "nothing>T1"}) {
        try {
            if (std::string(name).find('>') != std::string::npos)
                (void)catalog_embedding(name);
            else
                (void)catalog_group(name);
            FAIL("expected UnknownCatalogName for " << name);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::UnknownCatalogName);
        }
    }
}

TEST_CASE("every catalog entry is valid and every embedding degree-preserving")
{
    const auto entries = catalog_list();
    CHECK(entries.size() >= 8);
    for (const auto& entry : entries) {
        CHECK_NOTHROW(entry.group.validate());
        for (const auto& emb : entry.embeddings) {
            const auto target = catalog_group(emb.target);
            CHECK_NOTHROW(target.validate());
            auto vars = make_generators(classifying_generators(target, "u"));
            CHECK_NOTHROW(RestrictionMap::parse(entry.group, target.name, vars, emb.map).validate(entry.group));
            CHECK(catalog_embedding(emb.name).map == emb.map);
        }
    }
    CHECK(catalog_show("SU(3)").embeddings.size() >= 2);
}

TEST_CASE("maximal torus embeddings give equal rank flag manifolds")
{
    for (const char* name : {"SU(2)", "SU(3)", "Sp(2)", "SO(4)", "G2"}) {
        const auto g = catalog_group(name);
        const auto t = catalog_group("T" + std::to_string(g.rank));
        const auto emb = catalog_embedding(std::string(name) + ">T" + std::to_string(g.rank));
        const auto map = RestrictionMap::parse(g, t.name, make_generators(classifying_generators(t, "u")), emb.map);
        const auto c = cohomology(homogeneous_model(g, t, map));
        // chi(G/T) is the order of the Weyl group and odd cohomology vanishes
        CHECK(euler_characteristic(c) > 0);
        for (int n = 1; n <= c.cutoff(); n += 2)
            CHECK(c.betti(n) == 0);
    }
    // |W(SU(3))| = 6, |W(G2)| = 12
    auto g = catalog_group("SU(3)");
    auto t = catalog_group("T2");
    auto m = RestrictionMap::parse(g, t.name, make_generators(classifying_generators(t, "u")), catalog_embedding("SU(3)>T2").map);
    CHECK(euler_characteristic(cohomology(homogeneous_model(g, t, m))) == 6);
    g = catalog_group("G2");
    m = RestrictionMap::parse(g, t.name, make_generators(classifying_generators(t, "u")), catalog_embedding("G2>T2").map);
    CHECK(euler_characteristic(cohomology(homogeneous_model(g, t, m))) == 12);
}
