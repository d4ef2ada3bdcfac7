#include <catch2/catch_amalgamated.hpp>

#include "homrep/fixtures.hpp"

using namespace homrep;

namespace {

Subgroup subgroup_from(const GroupPtr& g, std::initializer_list<const char*> gens) {
    std::vector<int> seed;
    for (const char* s : gens) seed.push_back(g->index_of(Perm::parse(s, g->degree())));
    return Subgroup(g, subgroup_closure(*g, seed));
}

std::vector<long> exact_values(const ClassFunction& chi) {
    std::vector<long> out;
    for (const auto& v : chi.values()) {
        long n = 0;
        REQUIRE(v.near_integer(n));
        out.push_back(n);
    }
    return out;
}

} // namespace

TEST_CASE("trivial modules") {
    Field q = Field::rationals();
    auto s3 = builtin_group("S3");
    GModule t = GModule::trivial(s3, q);
    t.validate();
    CHECK(t.dim() == 1);
    CHECK(exact_values(t.character()) == std::vector<long>{1, 1, 1});

    auto one = builtin_group("trivial1");
    CHECK(GModule::trivial(one, q).dim() == 1);

    auto gl = builtin_group("GL32");
    GModule t2 = GModule::trivial(gl, Field::gf(2));
    t2.validate();
    CHECK(t2.dim() == 1);
    CHECK_THROWS_AS(t2.character(), Error); // char-p modules have no character
}

TEST_CASE("permutation and regular module characters") {
    Field q = Field::rationals();
    auto s3 = builtin_group("S3");
    GModule nat = GModule::permutation(s3, natural_action_table(s3), q);
    nat.validate();
    CHECK(exact_values(nat.character()) == std::vector<long>{3, 1, 0});

    GModule reg = GModule::regular(s3, q);
    reg.validate();
    CHECK(exact_values(reg.character()) == std::vector<long>{6, 0, 0});

    auto s4 = builtin_group("S4");
    GModule nat4 = GModule::permutation(s4, natural_action_table(s4), q);
    // classes ordered e, (01), (01)(23), (012), (0123)
    CHECK(exact_values(nat4.character()) == std::vector<long>{4, 2, 0, 1, 0});

    auto one = builtin_group("trivial1");
    GModule pt = GModule::permutation(one, natural_action_table(one), q);
    CHECK(pt.dim() == 1);
}

TEST_CASE("character at identity is the dimension") {
    Field q = Field::rationals();
    for (const char* n : {"S3", "S4", "S5", "GL32"}) {
        auto g = builtin_group(n);
        GModule m = GModule::permutation(g, natural_action_table(g), q);
        long d = 0;
        REQUIRE(m.character().at_identity().near_integer(d));
        CHECK(static_cast<std::size_t>(d) == m.dim());
    }
}

TEST_CASE("fixed points: stated examples and reciprocity") {
    Field q = Field::rationals();
    auto s3 = builtin_group("S3");
    auto a3 = subgroup_from(s3, {"(0 1 2)"});

    GModule t = GModule::trivial(s3, q);
    CHECK(fixed_point_basis(t, a3).rows() == 1);

    GModule reg = GModule::regular(s3, q);
    CHECK(fixed_point_basis(reg, a3).rows() == 2);

    auto table = builtin_table("S3");
    auto mods = irreducible_modules(s3, *table);
    REQUIRE(mods[2].has_value()); // the 2-dimensional irreducible
    CHECK(fixed_point_basis(*mods[2], whole_group_as_subgroup(s3)).rows() == 0);

    // dim M^H = <Res_H chi, 1> for assorted pairs
    for (const auto& m : mods) {
        REQUIRE(m.has_value());
        for (const auto& h : {a3, whole_group_as_subgroup(s3), trivial_subgroup(s3)}) {
            auto rest = restrict_class_function(m->character(), h);
            auto ip = rest.inner(ClassFunction::trivial(h.as_group()));
            long expect = 0;
            REQUIRE(ip.near_integer(expect));
            CHECK(fixed_point_basis(*m, h).rows() == static_cast<std::size_t>(expect));
        }
    }
}

TEST_CASE("fixed-point module over a normalizing subgroup") {
    Field q = Field::rationals();
    auto s4 = builtin_group("S4");
    auto v4 = derived_subgroup(derived_subgroup(whole_group_as_subgroup(s4)));
    GModule reg = GModule::regular(s4, q);
    // V4 is normal, so the whole group acts on the fixed space
    GModule fixed = fixed_point_module(reg, v4, whole_group_as_subgroup(s4));
    fixed.validate();
    CHECK(fixed.dim() == 6); // [G : V4]
}

TEST_CASE("contragredient") {
    Field q = Field::rationals();
    auto s4 = builtin_group("S4");
    GModule nat = GModule::permutation(s4, natural_action_table(s4), q);
    GModule dual = nat.contragredient();
    dual.validate();
    CHECK(dual.character() == nat.character()); // permutation characters are real
    GModule dd = dual.contragredient();
    for (std::size_t i = 0; i < nat.generator_matrices().size(); ++i)
        CHECK(dd.generator_matrices()[i] == nat.generator_matrices()[i]);

    GModule t = GModule::trivial(s4, q);
    CHECK(t.contragredient().character() == t.character());
    GModule reg = GModule::regular(s4, q);
    CHECK(reg.contragredient().character() == reg.character());
}

TEST_CASE("validate rejects a non-homomorphic assignment") {
    Field q = Field::rationals();
    auto s3 = builtin_group("S3");
    // map both generators to the same order-2 matrix: (0 1 2) has order 3,
    // so multiplicativity must fail
    Matrix swap2 = Matrix::from_rows(q, {{0, 1}, {1, 0}});
    GModule bad(s3, q, 2, {swap2, swap2});
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("dim_hom_g: Schur orthogonality at module level") {
    auto s3 = builtin_group("S3");
    auto table = builtin_table("S3");
    auto mods = irreducible_modules(s3, *table);
    for (std::size_t i = 0; i < mods.size(); ++i)
        for (std::size_t j = 0; j < mods.size(); ++j)
            CHECK(dim_hom_g(*mods[i], *mods[j]) == (i == j ? 1u : 0u));
    GModule reg = GModule::regular(s3, Field::rationals());
    CHECK(dim_hom_g(reg, *mods[2]) == 2u); // multiplicity = dimension
}
