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

TEST_CASE("every embedded character table loads and validates") {
    auto names = builtin_table_names();
    CHECK(names.size() == 16);
    for (const auto& n : names) {
        auto t = builtin_table(n);
        REQUIRE(t.has_value());
        CHECK(t->size() == t->group()->class_count());
    }
}

TEST_CASE("Frobenius induction on the stated examples") {
    auto s3 = builtin_group("S3");
    auto a3 = subgroup_from(s3, {"(0 1 2)"});
    REQUIRE(a3.size() == 3);

    auto ind = induce_class_function(a3, ClassFunction::trivial(a3.as_group()));
    CHECK(exact_values(ind) == std::vector<long>{2, 0, 2});

    auto whole = whole_group_as_subgroup(s3);
    auto self = induce_class_function(whole, ClassFunction::trivial(whole.as_group()));
    CHECK(exact_values(self) == std::vector<long>{1, 1, 1});

    auto triv = trivial_subgroup(s3);
    auto reg = induce_class_function(triv, ClassFunction::trivial(triv.as_group()));
    CHECK(exact_values(reg) == std::vector<long>{6, 0, 0});
}

TEST_CASE("induction is transitive along 1 <= A3 <= S3") {
    auto s3 = builtin_group("S3");
    auto a3 = subgroup_from(s3, {"(0 1 2)"});
    GroupPtr a3g = a3.as_group();
    // through A3
    auto triv_in_a3 = trivial_subgroup(a3g);
    auto step1 = induce_class_function(triv_in_a3, ClassFunction::trivial(triv_in_a3.as_group()));
    auto step2 = induce_class_function(a3, step1);
    // direct
    auto direct = induce_class_function(trivial_subgroup(s3),
                                        ClassFunction::trivial(trivial_subgroup(s3).as_group()));
    CHECK(step2 == direct);
}

TEST_CASE("decompose on the stated examples") {
    auto s3 = builtin_group("S3");
    auto table = builtin_table("S3");
    REQUIRE(table);
    REQUIRE(table->group()->same_group(*s3));

    CHECK(table->decompose(ClassFunction::regular(s3)) == std::vector<long>{1, 1, 2});
    CHECK(table->decompose(ClassFunction::zero(s3)) == std::vector<long>{0, 0, 0});
    CHECK(table->decompose(ClassFunction::trivial(s3)) == std::vector<long>{1, 0, 0});

    // non-integral multiplicity must be rejected
    std::vector<CFValue> half(s3->class_count(), CFValue(mpq_class(1, 2)));
    CHECK_THROWS_AS(table->decompose(ClassFunction(s3, half)), Error);
}

TEST_CASE("table transport onto subgroups of S5") {
    auto s5 = builtin_group("S5");
    auto s4_in_s5 = subgroup_from(s5, {"(0 1)", "(0 1 2 3)"});
    REQUIRE(s4_in_s5.size() == 24);
    auto t = table_for_subgroup(s4_in_s5);
    REQUIRE(t.has_value());
    CHECK(t->size() == 5);
    CHECK(t->name() == "S4@subgroup");

    auto d8 = sylow_p(s5, 2);
    auto td8 = table_for_subgroup(d8);
    REQUIRE(td8.has_value());
    CHECK(td8->size() == 5);

    auto c5 = subgroup_from(s5, {"(0 1 2 3 4)"});
    auto tc5 = table_for_subgroup(c5);
    REQUIRE(tc5.has_value());
    CHECK(tc5->size() == 5);

    auto trivial = trivial_subgroup(s5);
    auto t1 = table_for_subgroup(trivial);
    REQUIRE(t1.has_value());
    CHECK(t1->size() == 1);
}

TEST_CASE("irreducible module extraction for S3, S4, S5") {
    for (const char* name : {"S3", "S4", "S5"}) {
        auto g = builtin_group(name);
        auto table = builtin_table(name);
        REQUIRE(table);
        auto mods = irreducible_modules(g, *table);
        REQUIRE(mods.size() == table->size());
        for (std::size_t i = 0; i < mods.size(); ++i) {
            INFO(name << " irreducible " << i);
            REQUIRE(mods[i].has_value());
            CHECK(mods[i]->character() == table->irreducibles()[i]);
            long deg = 0;
            REQUIRE(table->irreducibles()[i].at_identity().near_integer(deg));
            CHECK(mods[i]->dim() == static_cast<std::size_t>(deg));
        }
    }
}

TEST_CASE("GL32 table: rational irreducibles extract, irrational ones do not") {
    auto g = builtin_group("GL32");
    auto table = builtin_table("GL32");
    REQUIRE(table);
    auto subs = all_subgroups(g);
    auto mods = irreducible_modules(g, *table, subs);
    // rows: 1, 3, 3bar, 6, 7, 8 -- the two 3-dimensional ones are irrational
    CHECK(mods[0].has_value());
    CHECK(!mods[1].has_value());
    CHECK(!mods[2].has_value());
    REQUIRE(mods[3].has_value());
    REQUIRE(mods[4].has_value());
    REQUIRE(mods[5].has_value());
    CHECK(mods[3]->dim() == 6);
    CHECK(mods[4]->dim() == 7);
    CHECK(mods[5]->dim() == 8);
}

TEST_CASE("character table orthogonality is enforced") {
    auto s3 = builtin_group("S3");
    std::vector<ClassFunction> bad{ClassFunction::trivial(s3), ClassFunction::trivial(s3),
                                   ClassFunction::regular(s3)};
    CHECK_THROWS_AS(CharacterTable(s3, bad, "bad"), Error);
}

TEST_CASE("sign module helper") {
    auto s4 = builtin_group("S4");
    auto whole = whole_group_as_subgroup(s4);
    auto sgn = sign_module(whole, Field::rationals());
    REQUIRE(sgn.has_value());
    auto chi = sgn->character();
    auto table = builtin_table("S4");
    CHECK(table->decompose(chi) == std::vector<long>{0, 1, 0, 0, 0});

    // A4 has no index-2 subgroup
    auto a4 = subgroup_from(s4, {"(0 1 2)", "(0 1)(2 3)"});
    REQUIRE(a4.size() == 12);
    CHECK(!sign_module(a4, Field::rationals()).has_value());
}
