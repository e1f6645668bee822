#include <doctest.h>

#include <random>

#include "torix/corpus.hpp"
#include "torix/divisors.hpp"
#include "torix/errors.hpp"

using namespace torix;

namespace {

WeilDivisor w(IntVector v) { return WeilDivisor{std::move(v)}; }

QDivisor q(std::initializer_list<Rational> v) { return QDivisor(RationalVector(v)); }

// Independent oracle: D is principal iff sum a_i D_i = div(chi^u) for some
// integral u, which we decide by brute force over a box.
bool principal_by_search(const Fan& fan, const WeilDivisor& d, Int box) {
    const std::size_t n = fan.rank();
    IntVector u(n, -box);
    for (;;) {
        if (principal_divisor(fan, u) == d)
            return true;
        std::size_t j = 0;
        while (j < n && u[j] == box) {
            u[j] = -box;
            ++j;
        }
        if (j == n)
            return false;
        ++u[j];
    }
}

} // namespace

TEST_CASE("class group of P2 is Z via the degree map") {
    Fan p2 = projective_space(2);
    ClassGroup cl(p2);
    CHECK(cl.free_rank() == 1);
    CHECK(cl.torsion_moduli().empty());
    CHECK(cl.str() == "Z^1");
    CHECK(cl.project(w({2, -1, 4})).free_part == IntVector{5});
    CHECK(linearly_equivalent(p2, w({1, 0, 0}), w({0, 0, 1})));
    CHECK_FALSE(linearly_equivalent(p2, w({1, 0, 0}), w({0, 0, 2})));
}

TEST_CASE("class groups of small fans") {
    CHECK(ClassGroup(hirzebruch(1)).free_rank() == 2);
    ClassGroup p1(projective_space(1));
    CHECK(p1.free_rank() == 1);
    CHECK(p1.project(w({3, -1})).free_part == IntVector{2});
    CHECK(ClassGroup(weighted_projective_plane_112()).str() == "Z^1");

    // rays span an index-2 sublattice: torsion Z/2
    Fan t(2, {{1, 0}, {-1, 2}, {-1, -2}}, {Cone{0, 1}, Cone{1, 2}, Cone{0, 2}});
    ClassGroup ct(t);
    CHECK(ct.free_rank() == 1);
    CHECK(ct.torsion_moduli() == std::vector<Int>{2});
    CHECK(ct.str() == "Z^1 + Z/2");
    CHECK(validate_fan(t).empty());
}

TEST_CASE("class projection agrees with a brute-force principal test") {
    std::mt19937_64 rng(17);
    std::vector<Fan> fans{projective_space(2), hirzebruch(2), weighted_projective_plane_112(),
                          Fan(2, {{1, 0}, {-1, 2}, {-1, -2}}, {Cone{0, 1}, Cone{1, 2}, Cone{0, 2}})};
    for (const auto& fan : fans)
        for (int trial = 0; trial < 40; ++trial) {
            IntVector u(2);
            for (auto& x : u)
                x = static_cast<Int>(rng() % 7) - 3;
            WeilDivisor d = principal_divisor(fan, u);
            if (trial % 2)
                d.coeffs[rng() % d.size()] += 1;
            CHECK(is_principal(fan, d) == principal_by_search(fan, d, 8));
        }
}

TEST_CASE("class projection is a homomorphism") {
    std::mt19937_64 rng(5);
    Fan fan = random_smooth_blowup_tower(projective_space(3), 2, 2);
    ClassGroup cl(fan);
    for (int trial = 0; trial < 30; ++trial) {
        WeilDivisor a{IntVector(fan.ray_count())}, b{IntVector(fan.ray_count())};
        for (std::size_t i = 0; i < fan.ray_count(); ++i) {
            a.coeffs[i] = static_cast<Int>(rng() % 9) - 4;
            b.coeffs[i] = static_cast<Int>(rng() % 9) - 4;
        }
        CHECK(cl.project(a + b) == cl.add(cl.project(a), cl.project(b)));
    }
}

TEST_CASE("Cartier data of D1 on P2") {
    Fan p2 = projective_space(2);
    auto r = cartier_data(p2, w({1, 0, 0}));
    REQUIRE(std::holds_alternative<CartierData>(r));
    const auto& cd = std::get<CartierData>(r);
    // max cones in sorted order: {0,1}, {0,2}, {1,2}
    REQUIRE(p2.max_cones()[0] == Cone{0, 1});
    REQUIRE(p2.max_cones()[1] == Cone{0, 2});
    CHECK(cd.u[0] == LatticeVector{-1, 0});
    CHECK(cd.u[1] == LatticeVector{-1, 1});
    CHECK(cd.u[2] == LatticeVector{0, 0});
}

TEST_CASE("local data satisfies the defining equations") {
    for (const auto& e : generate_corpus(1, 6, 3, 2)) {
        WeilDivisor d = canonical_divisor(e.fan);
        d.coeffs[0] = 2;
        auto r = cartier_data(e.fan, d);
        REQUIRE(std::holds_alternative<CartierData>(r));
        const auto& cd = std::get<CartierData>(r);
        for (std::size_t k = 0; k < e.fan.max_cones().size(); ++k)
            for (auto i : e.fan.max_cones()[k].rays())
                CHECK(dot(cd.u[k], e.fan.ray(i)) == -d[i]);
    }
}

TEST_CASE("non-Cartier divisors") {
    Fan w112 = weighted_projective_plane_112();
    auto r = cartier_data(w112, w({0, 0, 1}));
    REQUIRE(std::holds_alternative<NotCartier>(r));
    const auto& nc = std::get<NotCartier>(r);
    CHECK(nc.witness == Cone{0, 2});
    CHECK(nc.q_cartier);
    CHECK(q_cartier_index(w112, w({0, 0, 1})) == Int{2});
    CHECK(q_cartier_index(w112, w({0, 0, 2})) == Int{1});
    CHECK(q_cartier_index(w112, q({0, 0, Rational(1, 3)})) == Int{6});

    // cone over a square is not simplicial; D_1 is not even Q-Cartier
    Fan sq(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}, {Cone{0, 1, 2, 3}});
    CHECK_FALSE(is_q_cartier(sq, w({1, 0, 0, 0})));
    CHECK_FALSE(q_cartier_index(sq, w({1, 0, 0, 0})));
    CHECK(is_cartier(sq, w({1, 1, 1, 1})));

    CHECK_THROWS_AS(cartier_data(w112, w({1, 0})), InputError);
}

TEST_CASE("support function and convexity") {
    Fan p2 = projective_space(2);
    QCartierData cd = std::get<CartierData>(cartier_data(p2, w({1, 0, 0})));
    CHECK(support_function_eval(p2, cd, std::span<const Int>(IntVector{1, 1})) == -1);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(support_function_eval(p2, cd, std::span<const Int>(p2.ray(i))) == (i == 0 ? -1 : 0));
    CHECK(is_convex(p2, cd));
    CHECK(is_strictly_convex(p2, cd));

    QCartierData zero = std::get<CartierData>(cartier_data(p2, zero_divisor(p2)));
    CHECK(is_convex(p2, zero));
    CHECK_FALSE(is_strictly_convex(p2, zero));

    QCartierData neg = std::get<CartierData>(cartier_data(p2, w({-1, 0, 0})));
    CHECK_FALSE(is_convex(p2, neg));

    // on F1 the fibre class D_0 is convex but not strictly
    Fan f1 = hirzebruch(1);
    QCartierData fib = std::get<CartierData>(cartier_data(f1, w({1, 0, 0, 0})));
    CHECK(is_convex(f1, fib));
    CHECK_FALSE(is_strictly_convex(f1, fib));
}

TEST_CASE("shifting by a principal divisor translates the local data") {
    std::mt19937_64 rng(23);
    for (const auto& e : generate_corpus(3, 5, 2, 2)) {
        WeilDivisor d{IntVector(e.fan.ray_count())};
        for (auto& c : d.coeffs)
            c = static_cast<Int>(rng() % 5) - 2;
        IntVector u{static_cast<Int>(rng() % 5) - 2, static_cast<Int>(rng() % 5) - 2};
        auto a = std::get<CartierData>(cartier_data(e.fan, d));
        auto b = std::get<CartierData>(cartier_data(e.fan, d + principal_divisor(e.fan, u)));
        for (std::size_t k = 0; k < a.u.size(); ++k)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(b.u[k][j] == a.u[k][j] - u[j]);
        CHECK(is_convex(e.fan, a) == is_convex(e.fan, b));
    }
}

TEST_CASE("polytopes and lattice points") {
    Fan p2 = projective_space(2);
    DivisorPolytope p = polytope(p2, w({1, 0, 0}));
    CHECK(p.bounded);
    CHECK(p.dim == 2);
    CHECK(p.vertices == std::vector<RationalVector>{{-1, 0}, {-1, 1}, {0, 0}});
    CHECK(lattice_points(p).size() == 3);
    CHECK(lattice_points(polytope(p2, w({3, 0, 0}))).size() == 10);
    CHECK(lattice_points(polytope(p2, w({1, 1, 1}))).size() == 10);

    DivisorPolytope k = polytope(p2, canonical_divisor(p2));
    CHECK(k.dim == -1);
    CHECK(lattice_points(k).empty());

    CHECK(lattice_points(polytope(projective_space(1), w({1, 1}))).size() == 3);

    DivisorPolytope pt = polytope(p2, zero_divisor(p2));
    CHECK(pt.dim == 0);
    CHECK(lattice_points(pt).size() == 1);

    Fan partial(2, {{1, 0}, {0, 1}}, {Cone{0, 1}});
    DivisorPolytope unb = polytope(partial, w({0, 0}));
    CHECK_FALSE(unb.bounded);
    CHECK_THROWS_AS(lattice_points(unb), InputError);

    // rational polytope: (1/2) D1 on P2 has lattice points only at the origin
    DivisorPolytope half = polytope(p2, q({Rational(1, 2), 0, 0}));
    CHECK(half.dim == 2);
    CHECK(lattice_points(half).size() == 1);
}

TEST_CASE("rounding") {
    QDivisor d = q({Rational(3, 2), Rational(-1, 2), 2});
    CHECK(round_up(d) == w({2, 0, 2}));
    CHECK(round_down(d) == w({1, -1, 2}));
    CHECK_FALSE(d.is_integral());
    CHECK_THROWS(d.to_weil());
    CHECK(QDivisor(w({1, 2})).to_weil() == w({1, 2}));
}
