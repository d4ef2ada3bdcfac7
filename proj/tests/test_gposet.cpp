#include <catch2/catch_amalgamated.hpp>

#include "homrep/fixtures.hpp"
#include "homrep/gposet.hpp"

using namespace homrep;

namespace {

Subgroup subgroup_from(const GroupPtr& g, std::initializer_list<const char*> gens) {
    std::vector<int> seed;
    for (const char* s : gens) seed.push_back(g->index_of(Perm::parse(s, g->degree())));
    return Subgroup(g, subgroup_closure(*g, seed));
}

} // namespace

TEST_CASE("coset posets: S3/A3, S3/S3, S4/Sylow2") {
    auto s3 = builtin_group("S3");
    auto a3 = subgroup_from(s3, {"(0 1 2)"});
    GPoset p1 = coset_poset(s3, a3);
    CHECK(p1.size() == 2);
    CHECK(p1.connected_components().size() == 2);
    CHECK(!p1.less(0, 1));

    GPoset p2 = coset_poset(s3, whole_group_as_subgroup(s3));
    CHECK(p2.size() == 1);

    auto s4 = builtin_group("S4");
    GPoset p3 = coset_poset(s4, sylow_p(s4, 2));
    CHECK(p3.size() == 3);
    CHECK(p3.orbits().size() == 1); // transitive
    CHECK(p3.connected_components().size() == 3);
}

TEST_CASE("transporter morphisms compose by the twisted rule") {
    auto s3 = builtin_group("S3");
    auto h = subgroup_from(s3, {"(0 1)"});
    auto p = coset_poset(s3, h);
    REQUIRE(p.size() == 3);

    // identity law
    int x = 0;
    TransporterMorphism idm = make_morphism(p, x, x, 0);
    int r = s3->index_of(Perm::parse("(0 1 2)", 3));
    TransporterMorphism f = make_morphism(p, x, p.act(r, x), r);
    TransporterMorphism f_id = compose(p, f, idm);
    CHECK(f_id.src == f.src);
    CHECK(f_id.tgt == f.tgt);
    CHECK(f_id.g == f.g);

    // (0 1 2) composed with (0 1 2) has group part (0 2 1)
    TransporterMorphism f2 = make_morphism(p, p.act(r, x), p.act(s3->mul(r, r), x), r);
    TransporterMorphism ff = compose(p, f2, f);
    CHECK(s3->element(ff.g).str() == "(0 2 1)");

    CHECK_THROWS_AS(make_morphism(p, 0, 1, 0), Error); // cosets are incomparable
}

TEST_CASE("associativity of composition, sampled over S_2(S_4)") {
    auto s4 = builtin_group("S4");
    auto p = p_subgroup_poset(s4, 2, PSubgroupVariant::Sp);
    REQUIRE(p.size() == 19);
    unsigned long seed = 42;
    auto next = [&](unsigned long m) {
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<int>((seed >> 33) % m);
    };
    int found = 0;
    while (found < 40) {
        int w = next(p.size()), g1 = next(s4->size()), g2 = next(s4->size()), g3 = next(s4->size());
        int x = p.act(g1, w);
        int y = p.act(g2, x);
        int z = p.act(g3, y);
        TransporterMorphism e = make_morphism(p, w, x, g1);
        TransporterMorphism f = make_morphism(p, x, y, g2);
        TransporterMorphism h = make_morphism(p, y, z, g3);
        auto lhs = compose(p, h, compose(p, f, e));
        auto rhs = compose(p, compose(p, h, f), e);
        CHECK(lhs.src == rhs.src);
        CHECK(lhs.tgt == rhs.tgt);
        CHECK(lhs.g == rhs.g);
        ++found;
    }
}

TEST_CASE("p-subgroup posets of S3") {
    auto s3 = builtin_group("S3");
    auto sp = p_subgroup_poset(s3, 2, PSubgroupVariant::Sp);
    CHECK(sp.size() == 3);
    CHECK(sp.connected_components().size() == 3);

    auto sp1 = p_subgroup_poset(s3, 2, PSubgroupVariant::Sp1);
    CHECK(sp1.size() == 4);
    CHECK(sp1.connected_components().size() == 1);

    auto empty = p_subgroup_poset(s3, 5, PSubgroupVariant::Sp);
    CHECK(empty.size() == 0);

    // S_p = S_p^1 minus the trivial subgroup; B_p within S_p^1
    auto bp = p_subgroup_poset(s3, 2, PSubgroupVariant::Bp);
    CHECK(bp.size() == 3);
}

TEST_CASE("S_2(S_4) is connected") {
    auto s4 = builtin_group("S4");
    auto sp = p_subgroup_poset(s4, 2, PSubgroupVariant::Sp);
    CHECK(sp.size() == 19);
    CHECK(sp.connected_components().size() == 1);
    // B_2(S_4): the normal V4 below the three Sylows, a cone
    auto bp = p_subgroup_poset(s4, 2, PSubgroupVariant::Bp);
    CHECK(bp.size() == 4);
    CHECK(bp.connected_components().size() == 1);
}

TEST_CASE("B_2(GL32) is the face poset of the Fano incidence complex") {
    auto g = builtin_group("GL32");
    auto bp = p_subgroup_poset(g, 2, PSubgroupVariant::Bp);
    REQUIRE(bp.size() == 35);

    std::size_t minimal = 0, maximal = 0;
    for (int x = 0; x < 35; ++x) {
        Subgroup v(g, bp.key(x));
        if (v.size() == 4) ++minimal;
        if (v.size() == 8) ++maximal;
    }
    CHECK(minimal == 14);
    CHECK(maximal == 21);
    // each Sylow contains exactly two radicals; each radical lies in three Sylows
    for (int x = 0; x < 35; ++x) {
        std::size_t below = 0, above = 0;
        for (int y = 0; y < 35; ++y) {
            if (bp.less(y, x)) ++below;
            if (bp.less(x, y)) ++above;
        }
        if (bp.key(x).size() == 8) CHECK(below == 2);
        if (bp.key(x).size() == 4) CHECK(above == 3);
    }
    CHECK(bp.connected_components().size() == 1);

    // independent oracle: filter the full subgroup lattice by V = O_2(N(V))
    std::size_t oracle = 0;
    std::vector<int> universe(g->size());
    for (std::size_t i = 0; i < g->size(); ++i) universe[i] = static_cast<int>(i);
    for (const auto& v : all_subgroups(g)) {
        if (v.size() < 2 || p_part(v.size(), 2) != v.size()) continue;
        auto nm = normalizer_in(*g, universe, v.members());
        if (core_p_members(*g, nm, 2) == v.members()) ++oracle;
    }
    CHECK(oracle == 35);
}

TEST_CASE("barycentric subdivision examples") {
    auto t1 = builtin_group("trivial1");
    GPoset two_chain = chain_poset(t1, 2);
    GPoset sd = barycentric_subdivision(two_chain);
    CHECK(sd.size() == 3);
    // {a},{b} < {a<b}
    CHECK(sd.less(0, 2));
    CHECK(sd.less(1, 2));
    CHECK(!sd.less(0, 1));

    auto s3 = builtin_group("S3");
    auto a3 = subgroup_from(s3, {"(0 1 2)"});
    GPoset cos = coset_poset(s3, a3);
    GPoset sd2 = barycentric_subdivision(cos);
    CHECK(sd2.size() == cos.size()); // zero-dimensional: only singleton chains

    GPoset sp = p_subgroup_poset(s3, 2, PSubgroupVariant::Sp);
    GPoset sd3 = barycentric_subdivision(sp);
    CHECK(sd3.size() == 3);
    CHECK(sd3.connected_components().size() == 3);
}

TEST_CASE("parabolic orbit posets") {
    auto g = builtin_group("GL32");
    auto syl = sylow_p(g, 2);
    GPoset borel_orbit = parabolic_orbit_poset(g, syl, 2);
    CHECK(borel_orbit.size() == 21);
    for (int x = 0; x < 21; ++x)
        for (int y = 0; y < 21; ++y) CHECK(!borel_orbit.less(x, y));

    // a radical of order 4: any minimal element of B_2
    auto bp = p_subgroup_poset(g, 2, PSubgroupVariant::Bp);
    Subgroup radical(g, bp.key(0));
    REQUIRE(radical.size() == 4);
    GPoset pi = parabolic_orbit_poset(g, radical, 2);
    CHECK(pi.size() == 7);

    // a normal subgroup gives a single point
    auto s4 = builtin_group("S4");
    auto v4 = derived_subgroup(derived_subgroup(whole_group_as_subgroup(s4)));
    REQUIRE(v4.size() == 4);
    GPoset single = parabolic_orbit_poset(s4, v4, 2);
    CHECK(single.size() == 1);

    // non-members of B_p are rejected
    auto s3 = builtin_group("S3");
    CHECK_THROWS_AS(parabolic_orbit_poset(s3, trivial_subgroup(s3), 2), Error);
}

TEST_CASE("stabilizers read off the action table are subgroups") {
    auto s4 = builtin_group("S4");
    auto sp = p_subgroup_poset(s4, 2, PSubgroupVariant::Sp);
    for (int x = 0; x < static_cast<int>(sp.size()); ++x) {
        Subgroup st = sp.stabilizer(x); // constructor enforces the group axioms
        CHECK(s4->size() % st.size() == 0);
        // orbit-stabilizer
        std::size_t orbit = 0;
        for (const auto& o : sp.orbits())
            if (std::find(o.begin(), o.end(), x) != o.end()) orbit = o.size();
        CHECK(orbit * st.size() == s4->size());
    }
}

TEST_CASE("hollow triangle face poset") {
    auto s3 = builtin_group("S3");
    GPoset tri = hollow_triangle_poset(s3);
    CHECK(tri.size() == 6);
    CHECK(tri.connected_components().size() == 1);
    std::size_t rels = 0;
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y)
            if (tri.less(x, y)) ++rels;
    CHECK(rels == 6); // each of 3 edges has 2 vertices
}
