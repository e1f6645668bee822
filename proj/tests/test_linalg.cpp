#include <doctest.h>

#include <random>

#include "torix/linalg.hpp"
#include "torix/polyhedral.hpp"

using namespace torix;

namespace {

Int det2(const IntMatrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, Int range) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = static_cast<Int>(rng() % (2 * range + 1)) - range;
    return m;
}

} // namespace

TEST_CASE("extended gcd and rounding") {
    Int x, y;
    CHECK(extended_gcd(12, -18, x, y) == 6);
    CHECK(x * 12 + y * -18 == 6);
    CHECK(floor_div(-3, 2) == -2);
    CHECK(ceil_div(-3, 2) == -1);
    CHECK(floor(Rational(-3, 2)) == -2);
    CHECK(ceil(Rational(-3, 2)) == -1);
    CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), std::overflow_error);
}

TEST_CASE("primitive normalization") {
    CHECK(primitive(IntVector{2, 4}) == IntVector{1, 2});
    CHECK(primitive(IntVector{1, 0}) == IntVector{1, 0});
    CHECK(primitive(IntVector{-3, -3, -6}) == IntVector{-1, -1, -2});
    CHECK_THROWS(primitive(IntVector{0, 0}));
}

TEST_CASE("Hermite form is a unimodular factorization") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix a = random_matrix(rng, 4, 3, 5);
        HermiteForm hf = row_hermite(a);
        CHECK(multiply(hf.transform, a) == hf.form);
        // unimodular: |det| = 1 checked through the Smith invariants
        SmithForm s = smith(hf.transform);
        for (Int v : s.invariants)
            CHECK(v == 1);
    }
}

TEST_CASE("Smith form: P A Q is diagonal with dividing invariants") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix a = random_matrix(rng, 4, 3, 6);
        SmithForm sf = smith(a);
        IntMatrix d = multiply(multiply(sf.left, a), sf.right);
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j)
                CHECK(d(i, j) == (i == j ? sf.invariants[i] : 0));
        for (std::size_t i = 0; i + 1 < sf.invariants.size(); ++i)
            if (sf.invariants[i + 1] != 0)
                CHECK(sf.invariants[i + 1] % sf.invariants[i] == 0);
    }
    // ray matrix of P(1,1,2): one invariant 2
    IntMatrix w = IntMatrix::from_rows({{1, 0}, {0, 1}, {-1, -2}}, 2);
    CHECK(smith(w).invariants == std::vector<Int>{1, 1});
    IntMatrix cone = IntMatrix::from_rows({{0, 1}, {-1, -2}}, 2);
    CHECK(det2(cone) == 1);
}

TEST_CASE("left kernel of the P2 ray matrix is (1,1,1)") {
    IntMatrix v = IntMatrix::from_rows({{1, 0}, {0, 1}, {-1, -1}}, 2);
    IntMatrix k = left_kernel(v);
    REQUIRE(k.rows() == 1);
    CHECK(k.row_vector(0) == IntVector{1, 1, 1});
}

TEST_CASE("integer solve distinguishes rational from integral solutions") {
    IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 1}}, 2);
    auto x = solve_integer(a, IntVector{4, 3});
    REQUIRE(x);
    CHECK(*x == IntVector{2, 3});
    CHECK_FALSE(solve_integer(a, IntVector{3, 3}));
}

TEST_CASE("sparse rank agrees with dense rank") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix a = random_matrix(rng, 6, 7, 1);
        std::vector<SparseVector> rows;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            SparseVector v;
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (a(i, j) != 0)
                    v.emplace_back(j, Rational(static_cast<long>(a(i, j))));
            rows.push_back(std::move(v));
        }
        CHECK(sparse_rank(rows) == rank(a));
    }
}

TEST_CASE("kernel vectors are annihilated") {
    RationalMatrix m = to_rational(IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}}, 3));
    auto k = kernel(m);
    CHECK(k.size() == 2);
    for (const auto& v : k)
        for (std::size_t i = 0; i < m.rows(); ++i)
            CHECK(dot(std::span<const Rational>(m.row(i)), std::span<const Rational>(v)) == 0);
}

TEST_CASE("cone over a square: facets, faces and extreme rays") {
    std::vector<IntVector> sq{{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}};
    GeneratedCone g = describe_cone(sq, 3);
    CHECK(g.dim == 3);
    CHECK(g.pointed);
    CHECK(g.facets.size() == 4);
    CHECK(g.faces.size() == 10); // 0-face, 4 rays, 4 facets, whole cone
    auto rays = extreme_rays(g.halfspaces);
    CHECK(rays.size() == 4);
    // a redundant generator is not extreme
    std::vector<IntVector> redundant{{1, 0}, {1, 1}, {0, 1}};
    GeneratedCone r = describe_cone(redundant, 2);
    CHECK(r.extreme == std::vector<bool>{true, false, true});
    // a half-plane is not pointed
    GeneratedCone h = describe_cone({{1, 0}, {-1, 0}, {0, 1}}, 2);
    CHECK_FALSE(h.pointed);
}
