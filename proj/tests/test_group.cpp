#include <catch2/catch_amalgamated.hpp>

#include "homrep/group_algorithms.hpp"

using namespace homrep;

namespace {

GroupPtr sym(int n) {
    std::vector<int> t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = i;
    std::swap(t[0], t[1]);
    std::vector<int> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % n;
    return PermGroup::enumerate(static_cast<std::size_t>(n), {Perm(t), Perm(c)});
}

} // namespace

TEST_CASE("perm parse and format round-trip") {
    Perm p = Perm::parse("(0 1)(2 3)", 5);
    CHECK(p.str() == "(0 1)(2 3)");
    CHECK((p * p).is_identity());
    CHECK(Perm::parse("()", 3).is_identity());
    CHECK(Perm::parse("(0 1 2)", 3).inverse().str() == "(0 2 1)");
    // apply right factor first
    Perm a = Perm::parse("(0 1)", 3), b = Perm::parse("(1 2)", 3);
    CHECK((a * b)(1) == 2);
    CHECK((a * b)(2) == 0);
    CHECK_THROWS_AS(Perm::parse("(0 9)", 3), Error);
}

TEST_CASE("enumerate: S3, trivial group, Frobenius group of order 21") {
    auto s3 = sym(3);
    CHECK(s3->size() == 6);
    CHECK(s3->element(0).is_identity());

    auto triv = PermGroup::enumerate(3, {});
    CHECK(triv->size() == 1);

    auto f21 = PermGroup::enumerate(
        7, {Perm::parse("(0 1 2 3 4 5 6)", 7), Perm::parse("(1 2 4)(3 6 5)", 7)});
    CHECK(f21->size() == 21);

    CHECK_THROWS_AS(PermGroup::enumerate(7, {Perm::parse("(0 1 2 3 4 5 6)", 7)}, 5), Error);
}

TEST_CASE("conjugacy classes: S3, trivial, abelian C4") {
    auto s3 = sym(3);
    auto classes = s3->conjugacy_classes();
    REQUIRE(classes.size() == 3);
    CHECK(classes[0] == std::vector<int>{0});
    std::vector<std::size_t> sizes;
    for (const auto& c : classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 3});

    CHECK(PermGroup::enumerate(2, {})->class_count() == 1);

    auto c4 = PermGroup::enumerate(4, {Perm::parse("(0 1 2 3)", 4)});
    CHECK(c4->size() == 4);
    CHECK(c4->class_count() == 4);
}

TEST_CASE("class sizes divide the order and sum to it") {
    for (auto g : {sym(3), sym(4), sym(5)}) {
        std::size_t total = 0;
        for (const auto& c : g->conjugacy_classes()) {
            total += c.size();
            CHECK(g->size() % c.size() == 0);
        }
        CHECK(total == g->size());
    }
}

TEST_CASE("sylow subgroups have the full p-part") {
    auto s3 = sym(3);
    CHECK(sylow_p(s3, 2).size() == 2);
    CHECK(sylow_p(s3, 3).size() == 3);
    auto s4 = sym(4);
    CHECK(sylow_p(s4, 2).size() == 8);
    CHECK(sylow_p(s4, 3).size() == 3);
    auto s5 = sym(5);
    CHECK(sylow_p(s5, 2).size() == 8);
    CHECK(sylow_p(s5, 5).size() == 5);
    // p not dividing -> trivial
    CHECK(sylow_p(s3, 5).size() == 1);
}

TEST_CASE("all p-subgroups: S3 and S4 counts") {
    auto s3 = sym(3);
    auto subs2 = all_p_subgroups(s3, 2, false);
    CHECK(subs2.size() == 3);
    for (const auto& s : subs2) CHECK(s.size() == 2);

    CHECK(all_p_subgroups(s3, 5, false).empty());

    auto s4 = sym(4);
    auto subs = all_p_subgroups(s4, 2, false);
    CHECK(subs.size() == 19);
    auto with_triv = all_p_subgroups(s4, 2, true);
    CHECK(with_triv.size() == 20);

    // cross-check against the independent full-lattice enumeration
    std::size_t count = 0;
    for (const auto& s : all_subgroups(s4))
        if (s.size() > 1 && p_part(s.size(), 2) == s.size()) ++count;
    CHECK(count == 19);
}

TEST_CASE("subgroup lattice of S4 and S5") {
    CHECK(all_subgroups(sym(4)).size() == 30);
    auto subs = all_subgroups(sym(5));
    CHECK(subs.size() == 156);
    auto classes = subgroup_conjugacy_classes(sym(5), subs);
    CHECK(classes.size() == 19);
}

TEST_CASE("derived subgroup and normalizer") {
    auto s4 = sym(4);
    auto whole = whole_group_as_subgroup(s4);
    auto derived = derived_subgroup(whole);
    CHECK(derived.size() == 12); // A4
    auto derived2 = derived_subgroup(derived);
    CHECK(derived2.size() == 4); // V4

    auto syl = sylow_p(s4, 2);
    CHECK(normalizer(s4, syl).size() == 8); // self-normalizing
    CHECK(normalizer(s4, derived2).size() == 24); // V4 is normal
}

TEST_CASE("subgroup as_group round trip") {
    auto s4 = sym(4);
    auto syl = sylow_p(s4, 2);
    auto h = syl.as_group();
    CHECK(h->size() == 8);
    for (int m : syl.members()) CHECK(h->contains(s4->element(m)));
}
