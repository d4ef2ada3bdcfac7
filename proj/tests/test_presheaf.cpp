#include <catch2/catch_amalgamated.hpp>

#include "homrep/fixtures.hpp"
#include "homrep/presheaf.hpp"

using namespace homrep;

namespace {

Subgroup subgroup_from(const GroupPtr& g, std::initializer_list<const char*> gens) {
    std::vector<int> seed;
    for (const char* s : gens) seed.push_back(g->index_of(Perm::parse(s, g->degree())));
    return Subgroup(g, subgroup_closure(*g, seed));
}

} // namespace

TEST_CASE("constant presheaves") {
    Field q = Field::rationals();
    auto s3 = builtin_group("S3");
    auto sp = std::make_shared<GPoset>(p_subgroup_poset(s3, 2, PSubgroupVariant::Sp));

    GPresheaf kR = constant_presheaf(sp, GModule::trivial(s3, q));
    for (int x = 0; x < 3; ++x) CHECK(kR.dim(x) == 1);

    GPresheaf kReg = constant_presheaf(sp, GModule::regular(s3, q));
    for (int x = 0; x < 3; ++x) CHECK(kReg.dim(x) == 6);
    CHECK(kReg.constant_fibers());
}

TEST_CASE("coset presheaf: H = G degenerates to the constant presheaf") {
    Field q = Field::rationals();
    auto s3 = builtin_group("S3");
    auto whole = whole_group_as_subgroup(s3);
    auto cp = std::make_shared<GPoset>(coset_poset(s3, whole));
    GModule reg_h = GModule::regular(whole.as_group(), q);
    GPresheaf n = coset_presheaf(cp, whole, reg_h);
    // single object; the generator maps are exactly the module action
    REQUIRE(cp->size() == 1);
    for (std::size_t gi = 0; gi < s3->generators().size(); ++gi) {
        int h = whole.as_group()->index_of(s3->generators()[gi]);
        CHECK(n.generator_map(static_cast<int>(gi), 0) == reg_h.matrix(h));
    }
}

TEST_CASE("coset presheaf on S3/A3 with the trivial module") {
    Field q = Field::rationals();
    auto s3 = builtin_group("S3");
    auto a3 = subgroup_from(s3, {"(0 1 2)"});
    auto cp = std::make_shared<GPoset>(coset_poset(s3, a3));
    GPresheaf n = coset_presheaf(cp, a3, GModule::trivial(a3.as_group(), q));
    // fibers are 1-dimensional and all structure maps are identity scalars
    for (std::size_t gi = 0; gi < s3->generators().size(); ++gi)
        for (int x = 0; x < 2; ++x)
            CHECK(n.generator_map(static_cast<int>(gi), x) == Matrix::identity(1, q));
    // but the transposition generator swaps the two cosets
    int t = s3->generator_indices()[0];
    CHECK(cp->act(t, 0) == 1);
}

TEST_CASE("coset structure element uniqueness over S4/Sylow") {
    // the matched h = g_i^{-1} g g_j must land in H for every (generator, coset);
    // the constructor enforces it, and the cocycle/mixing validation accepts it
    Field q = Field::rationals();
    auto s4 = builtin_group("S4");
    auto syl = sylow_p(s4, 2);
    auto cp = std::make_shared<GPoset>(coset_poset(s4, syl));
    GModule reg_h = GModule::regular(syl.as_group(), q);
    GPresheaf n = coset_presheaf(cp, syl, reg_h);
    CHECK(n.dim(0) == 8);
    // exhaustive: for every group element and coset, the twist lies in H
    for (std::size_t e = 0; e < s4->size(); ++e)
        for (int x = 0; x < static_cast<int>(cp->size()); ++x) {
            int gj = cp->key(x).front();
            int target = cp->act(static_cast<int>(e), x);
            int gi = cp->key(target).front();
            int h = s4->mul(s4->inv(gi), s4->mul(static_cast<int>(e), gj));
            CHECK(syl.contains(h));
        }
}

TEST_CASE("fixed-point presheaf examples") {
    Field q = Field::rationals();
    auto s3 = builtin_group("S3");
    auto sp = std::make_shared<GPoset>(p_subgroup_poset(s3, 2, PSubgroupVariant::Sp));

    // trivial module -> constant presheaf shape
    GPresheaf ft = fixed_point_presheaf(sp, GModule::trivial(s3, q));
    for (int x = 0; x < 3; ++x) CHECK(ft.dim(x) == 1);

    // regular module: fixed space of each C2 has dimension [G:H] = 3
    GPresheaf fr = fixed_point_presheaf(sp, GModule::regular(s3, q));
    for (int x = 0; x < 3; ++x) CHECK(fr.dim(x) == 3);
}

TEST_CASE("fixed-point presheaf on B_2(GL32) with the regular module") {
    Field q = Field::rationals();
    auto g = builtin_group("GL32");
    auto bp = std::make_shared<GPoset>(p_subgroup_poset(g, 2, PSubgroupVariant::Bp));
    GPresheaf f = fixed_point_presheaf(bp, GModule::regular(g, q));
    for (int x = 0; x < static_cast<int>(bp->size()); ++x) {
        std::size_t order = bp->key(x).size();
        CHECK(f.dim(x) == 168 / order); // dim (RG)^V = [G:V]
    }
}

TEST_CASE("atomic presheaves") {
    Field q = Field::rationals();
    auto s3 = builtin_group("S3");

    // orbit of size 1 with the trivial module: indicator of a point
    auto sp1 = std::make_shared<GPoset>(p_subgroup_poset(s3, 3, PSubgroupVariant::Sp));
    REQUIRE(sp1->size() == 1); // A3 is the unique 3-subgroup
    GPresheaf ind = atomic_presheaf(sp1, 0, GModule::trivial(sp1->stabilizer(0).as_group(), q));
    CHECK(ind.dim(0) == 1);

    // on a coset poset, the atomic presheaf at H with the trivial module
    // coincides with the coset presheaf of the trivial module
    auto a3 = subgroup_from(s3, {"(0 1 2)"});
    auto cp = std::make_shared<GPoset>(coset_poset(s3, a3));
    int xh = -1; // the coset containing the identity
    for (int x = 0; x < static_cast<int>(cp->size()); ++x)
        if (cp->key(x).front() == 0) xh = x;
    REQUIRE(xh >= 0);
    Subgroup stab = cp->stabilizer(xh);
    CHECK(stab.members() == a3.members());
    GPresheaf atom = atomic_presheaf(cp, xh, GModule::trivial(stab.as_group(), q));
    GPresheaf cos = coset_presheaf(cp, a3, GModule::trivial(a3.as_group(), q));
    for (std::size_t gi = 0; gi < s3->generators().size(); ++gi)
        for (int x = 0; x < static_cast<int>(cp->size()); ++x)
            CHECK(atom.generator_map(static_cast<int>(gi), x) ==
                  cos.generator_map(static_cast<int>(gi), x));

    // inter-element maps of an atomic presheaf vanish
    auto s4 = builtin_group("S4");
    auto sp4 = std::make_shared<GPoset>(p_subgroup_poset(s4, 2, PSubgroupVariant::Sp));
    int x0 = 0; // some order-2 subgroup
    GPresheaf at4 = atomic_presheaf(sp4, x0, GModule::trivial(sp4->stabilizer(x0).as_group(), q));
    for (int a = 0; a < static_cast<int>(sp4->size()); ++a)
        for (int b = 0; b < static_cast<int>(sp4->size()); ++b)
            if (sp4->less(a, b)) CHECK(at4.restriction(a, b).is_zero());
}

TEST_CASE("presheaf validation rejects broken functoriality") {
    Field q = Field::rationals();
    auto t1 = builtin_group("trivial1");
    auto ch = std::make_shared<GPoset>(chain_poset(t1, 3));
    std::vector<std::size_t> dims(3, 1);
    std::map<std::pair<int, int>, Matrix> res;
    for (int x = 0; x < 3; ++x)
        for (int y = x; y < 3; ++y) res.emplace(std::make_pair(x, y), Matrix::identity(1, q));
    // corrupt one composite: F(0<=2) = 2 but F(0<=1)F(1<=2) = 1
    res.at({0, 2}).at(0, 0) = Scalar(q, 2);
    std::vector<std::vector<Matrix>> gen; // no generators in the trivial group
    CHECK_THROWS_AS(GPresheaf(ch, q, dims, res, gen), Error);
}

TEST_CASE("adjunction dimension check: Hom_G(H_0-like, M) via hom spaces") {
    // dim Hom_presheaf(N-fraktur, kappa_M) = dim Hom_H(N, Res M) by adjunction;
    // checked here against dim_hom_g on the induced side elsewhere
    Field q = Field::rationals();
    auto s3 = builtin_group("S3");
    auto a3 = subgroup_from(s3, {"(0 1 2)"});
    auto cp = std::make_shared<GPoset>(coset_poset(s3, a3));
    GModule n = GModule::trivial(a3.as_group(), q);
    GPresheaf nf = coset_presheaf(cp, a3, n);
    auto table = builtin_table("S3");
    auto mods = irreducible_modules(s3, *table);
    // Ind(1_{A3}) = trivial + standard? no: (2,0,2) = trivial + sign
    CHECK(dim_hom_presheaf(nf, *mods[0]) == 1u);
    CHECK(dim_hom_presheaf(nf, *mods[1]) == 1u);
    CHECK(dim_hom_presheaf(nf, *mods[2]) == 0u);
}
