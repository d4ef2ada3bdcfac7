#include <catch2/catch_amalgamated.hpp>

#include "homrep/matrix.hpp"

using namespace homrep;

namespace {

// deterministic small-entry matrix generator for property checks
struct Lcg {
    unsigned long s;
    explicit Lcg(unsigned long seed) : s(seed) {}
    long next(long lo, long hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<long>((s >> 33) % static_cast<unsigned long>(hi - lo + 1));
    }
};

Matrix random_matrix(Lcg& rng, std::size_t r, std::size_t c, const Field& f) {
    Matrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(f, rng.next(-4, 4));
    return m;
}

} // namespace

TEST_CASE("scalar arithmetic over Q and GF(p)") {
    Field q = Field::rationals();
    Scalar a = Scalar::parse(q, "2/4");
    CHECK(a.str() == "1/2");
    CHECK((a + a).str() == "1/1");
    CHECK((a - a).is_zero());
    CHECK((a * Scalar(q, 6)).str() == "3/1");
    CHECK(a.inverse().str() == "2/1");

    Field f7 = Field::gf(7);
    Scalar b(f7, 10);
    CHECK(b.str() == "3");
    CHECK((b * b).str() == "2");
    CHECK(b.inverse().str() == "5"); // 3*5 = 15 = 1 mod 7
    CHECK(Scalar::parse(f7, "1/2").str() == "4");
    CHECK((Scalar(f7, -1)).str() == "6");

    CHECK_THROWS_AS(Field::gf(6), Error);
    CHECK_THROWS_AS(Scalar(q, 1) + Scalar(f7, 1), Error);
    CHECK_THROWS_AS(Scalar(q, 1).inverse() / Scalar(q, 0), Error);
}

TEST_CASE("rref on the stated examples") {
    Field q = Field::rationals();

    auto id2 = Matrix::identity(2, q);
    auto r1 = rref(id2);
    CHECK(r1.mat == id2);
    CHECK(r1.pivots == std::vector<std::size_t>{0, 1});

    auto m2 = Matrix::from_rows(q, {{1, 2}, {2, 4}});
    auto r2 = rref(m2);
    CHECK(r2.mat == Matrix::from_rows(q, {{1, 2}, {0, 0}}));
    CHECK(r2.pivots == std::vector<std::size_t>{0});

    Field f2 = Field::gf(2);
    auto m3 = Matrix::from_rows(f2, {{1, 1}, {1, 2}}); // == [[1,1],[1,0]] mod 2
    auto r3 = rref(m3);
    CHECK(r3.mat == Matrix::identity(2, f2));
    CHECK(r3.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref is idempotent and rank-nullity holds") {
    Lcg rng(2024);
    for (const Field& f : {Field::rationals(), Field::gf(2), Field::gf(5)}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t r = 1 + static_cast<std::size_t>(rng.next(0, 5));
            std::size_t c = 1 + static_cast<std::size_t>(rng.next(0, 5));
            Matrix m = random_matrix(rng, r, c, f);
            RrefResult rr = rref(m);
            CHECK(rref(rr.mat).mat == rr.mat);
            Matrix k = kernel_basis(m);
            CHECK(rr.rank() + k.rows() == c);
            // m * k^T = 0, i.e. every kernel row is annihilated
            if (k.rows() > 0) CHECK((m * k.transpose()).is_zero());
            CHECK(rank(k) == k.rows());
        }
    }
}

TEST_CASE("kernel_basis on the stated examples") {
    Field q = Field::rationals();
    CHECK(kernel_basis(Matrix(2, 3, q)).rows() == 3);
    CHECK(kernel_basis(Matrix::identity(3, q)).rows() == 0);

    auto m = Matrix::from_rows(q, {{1, 1, 0}});
    Matrix k = kernel_basis(m);
    REQUIRE(k.rows() == 2);
    CHECK((m * k.transpose()).is_zero());
}

TEST_CASE("solve_in_span on the stated examples") {
    Field q = Field::rationals();
    auto id2 = Matrix::identity(2, q);
    auto c1 = solve_in_span(id2, {Scalar(q, 3), Scalar(q, 5)});
    REQUIRE(c1.has_value());
    CHECK((*c1)[0].str() == "3/1");
    CHECK((*c1)[1].str() == "5/1");

    auto b = Matrix::from_rows(q, {{1, 1}});
    auto c2 = solve_in_span(b, {Scalar(q, 2), Scalar(q, 2)});
    REQUIRE(c2.has_value());
    CHECK((*c2)[0].str() == "2/1");

    CHECK(!solve_in_span(b, {Scalar(q, 1), Scalar(q, 0)}).has_value());

    CHECK_THROWS_AS(solve_in_span(b, {Scalar(q, 1)}), Error);
}

TEST_CASE("SpanSolver agrees with solve_in_span") {
    Lcg rng(77);
    Field q = Field::rationals();
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 4;
        Matrix cand = random_matrix(rng, 3, n, q);
        Matrix basis = row_space_basis(cand);
        if (basis.rows() == 0) continue;
        SpanSolver solver(basis);
        for (int t = 0; t < 6; ++t) {
            std::vector<Scalar> target(n, Scalar::zero(q));
            for (std::size_t j = 0; j < n; ++j) target[j] = Scalar(q, rng.next(-3, 3));
            auto a = solve_in_span(basis, target);
            auto b = solver.solve(target);
            CHECK(a.has_value() == b.has_value());
            if (a && b) {
                // both must reproduce the target
                auto check = row_times(*a, basis);
                CHECK(check == target);
                CHECK(row_times(*b, basis) == target);
            }
        }
    }
}

TEST_CASE("matrix field mismatch is rejected") {
    Matrix a(2, 2, Field::rationals());
    Matrix b(2, 2, Field::gf(3));
    CHECK_THROWS_AS(a * b, Error);
    CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("kron and trace basics") {
    Field q = Field::rationals();
    auto a = Matrix::from_rows(q, {{1, 2}, {3, 4}});
    auto b = Matrix::from_rows(q, {{0, 1}, {1, 0}});
    Matrix k = a.kron(b);
    CHECK(k.rows() == 4);
    CHECK(k.at(0, 1).str() == "1/1");
    CHECK(k.at(0, 3).str() == "2/1");
    CHECK(a.trace().str() == "5/1");
    CHECK((a * Matrix::identity(2, q)) == a);
}
