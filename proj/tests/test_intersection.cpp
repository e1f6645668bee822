#include <doctest.h>

#include <random>

#include "torix/corpus.hpp"
#include "torix/errors.hpp"
#include "torix/intersection.hpp"

using namespace torix;

namespace {

WeilDivisor w(IntVector v) { return WeilDivisor{std::move(v)}; }

std::optional<Wall> wall_at(const Fan& fan, const Cone& tau) {
    for (const auto& wl : walls(fan))
        if (wl.tau == tau)
            return wl;
    return std::nullopt;
}

// Classical intersection form of a smooth complete surface: adjacent
// prime divisors meet once, D_i^2 = -b_i where v_prev + v_next = b_i v_i.
Int surface_intersection(const Fan& fan, std::size_t i, std::size_t j) {
    std::vector<std::size_t> nbrs;
    for (const auto& c : fan.max_cones())
        if (c.contains_ray(i))
            for (auto r : c.rays())
                if (r != i)
                    nbrs.push_back(r);
    REQUIRE(nbrs.size() == 2);
    if (i != j)
        return std::count(nbrs.begin(), nbrs.end(), j);
    const auto& v = fan.ray(i);
    IntVector s{fan.ray(nbrs[0])[0] + fan.ray(nbrs[1])[0], fan.ray(nbrs[0])[1] + fan.ray(nbrs[1])[1]};
    Int b = v[0] != 0 ? s[0] / v[0] : s[1] / v[1];
    CHECK(s[0] == b * v[0]);
    CHECK(s[1] == b * v[1]);
    return -b;
}

Int lattice_length(const LatticeVector& a, const LatticeVector& b) {
    Int g = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        g = gcd(g, a[i] - b[i]);
    return g;
}

WeilDivisor random_divisor(std::mt19937_64& rng, std::size_t d, Int range) {
    WeilDivisor x{IntVector(d)};
    for (auto& c : x.coeffs)
        c = static_cast<Int>(rng() % (2 * range + 1)) - range;
    return x;
}

std::vector<Fan> surfaces() {
    std::vector<Fan> out;
    for (const auto& e : standard_corpus(2))
        out.push_back(e.fan);
    for (const auto& e : generate_corpus(7, 10, 2, 3))
        out.push_back(e.fan);
    return out;
}

} // namespace

TEST_CASE("wall degrees on P2 and F1") {
    Fan p2 = projective_space(2);
    for (const auto& wd : wall_degrees(p2, w({1, 0, 0})))
        CHECK(wd.value == 1);
    CHECK(min_curve_degree(p2, w({2, 1, 0})).value == 3);
    CHECK(min_curve_degree(p2, w({-1, 0, 0})).value == -1);

    // the (-1)-curve of F1 is the divisor of the ray (0,1)
    Fan f1 = hirzebruch(1);
    auto wl = wall_at(f1, Cone{1});
    REQUIRE(wl);
    CHECK(wall_curve_degree(f1, w({0, 1, 0, 0}), *wl) == -1);
    CHECK(wall_curve_degree(f1, w({0, 0, 1, 0}), *wl) == 1);
    CHECK(wall_curve_degree(f1, w({0, 0, 0, 1}), *wl) == 0);
}

TEST_CASE("wall degrees of non-Cartier divisors are rational") {
    Fan wp = weighted_projective_plane_112();
    auto wl = wall_at(wp, Cone{0});
    REQUIRE(wl);
    CHECK(wall_curve_degree(wp, w({0, 0, 1}), *wl) == Rational(1, 2));
    CHECK(wall_curve_degree(wp, w({0, 1, 0}), *wl) == 1);
    auto self = wall_at(wp, Cone{2});
    REQUIRE(self);
    CHECK(wall_curve_degree(wp, w({0, 0, 1}), *self) == Rational(1, 2));

    Fan sq(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}, {Cone{0, 1, 2, 3}});
    CHECK_THROWS_AS(wall_degrees(sq, w({1, 0, 0, 0})), InputError);
}

TEST_CASE("surface oracle: classical intersection form") {
    std::mt19937_64 rng(31);
    for (const auto& fan : surfaces())
        for (int trial = 0; trial < 10; ++trial) {
            WeilDivisor d = random_divisor(rng, fan.ray_count(), 3);
            for (const auto& wd : wall_degrees(fan, d)) {
                REQUIRE(wd.wall.tau.size() == 1);
                std::size_t i = wd.wall.tau.rays()[0];
                Int expect = 0;
                for (std::size_t j = 0; j < fan.ray_count(); ++j)
                    expect += d[j] * surface_intersection(fan, i, j);
                CHECK(wd.value == expect);
            }
        }
}

TEST_CASE("surface oracle: wall degree equals lattice edge length for nef divisors") {
    std::mt19937_64 rng(37);
    int nef_seen = 0;
    for (const auto& fan : surfaces())
        for (int trial = 0; trial < 40; ++trial) {
            WeilDivisor d = random_divisor(rng, fan.ray_count(), 3);
            auto degs = wall_degrees(fan, d);
            if (!std::all_of(degs.begin(), degs.end(), [](const WallDegree& x) { return x.value >= 0; }))
                continue;
            ++nef_seen;
            auto cd = std::get<CartierData>(cartier_data(fan, d));
            for (const auto& wd : degs)
                CHECK(wd.value == lattice_length(cd.u[wd.wall.sigma1], cd.u[wd.wall.sigma2]));
        }
    CHECK(nef_seen > 20);
}

TEST_CASE("linearity and principal divisors") {
    std::mt19937_64 rng(41);
    for (std::size_t dim = 2; dim <= 3; ++dim)
        for (const auto& e : generate_corpus(11, 4, dim, 2)) {
            const Fan& fan = e.fan;
            WeilDivisor a = random_divisor(rng, fan.ray_count(), 3);
            WeilDivisor b = random_divisor(rng, fan.ray_count(), 3);
            IntVector u(dim);
            for (auto& x : u)
                x = static_cast<Int>(rng() % 7) - 3;
            auto da = wall_degrees(fan, a);
            auto db = wall_degrees(fan, b);
            auto dab = wall_degrees(fan, a + b);
            auto d3 = wall_degrees(fan, Int{3} * a);
            auto dp = wall_degrees(fan, principal_divisor(fan, u));
            auto ds = wall_degrees(fan, a + principal_divisor(fan, u));
            for (std::size_t i = 0; i < da.size(); ++i) {
                CHECK(dab[i].value == da[i].value + db[i].value);
                CHECK(d3[i].value == 3 * da[i].value);
                CHECK(dp[i].value == 0);
                CHECK(ds[i].value == da[i].value);
            }
        }
}

TEST_CASE("pullback along a blow-up") {
    Fan p2 = projective_space(2);
    Subdivision b = star_subdivision(p2, Cone{0, 1});
    QDivisor pb = pullback(p2, w({1, 0, 0}), b.fan);
    CHECK(pb == QDivisor(w({1, 0, 0, 1})));
    WallDegree m = min_curve_degree(b.fan, pb);
    CHECK(m.value == 0);
    CHECK(m.wall.tau == Cone{b.new_ray});

    CHECK(pullback(p2, w({2, -1, 3}), p2) == QDivisor(w({2, -1, 3})));
    CHECK_THROWS_AS(pullback(b.fan, w({1, 0, 0, 0}), p2), InputError);

    // nef pulls back to nef
    std::mt19937_64 rng(43);
    for (const auto& fan : surfaces())
        for (int trial = 0; trial < 10; ++trial) {
            WeilDivisor d = random_divisor(rng, fan.ray_count(), 2);
            Subdivision s = star_subdivision(fan, fan.max_cones()[rng() % fan.max_cones().size()]);
            QDivisor p = pullback(fan, d, s.fan);
            CHECK(p.is_integral());
            bool nef = min_curve_degree(fan, d).value >= 0;
            if (nef)
                CHECK(min_curve_degree(s.fan, p).value >= 0);
        }
}

TEST_CASE("restriction to prime divisors") {
    Fan p2 = projective_space(2);
    Restriction r = restrict_to_divisor(p2, w({2, 0, 0}), 0);
    CHECK(r.star.fan.rank() == 1);
    Rational total = 0;
    for (const auto& c : r.divisor.coeffs)
        total += c;
    CHECK(total == 2);
    CHECK(lattice_points(polytope(r.star.fan, r.divisor)).size() == 3);

    Subdivision b = star_subdivision(p2, Cone{0, 1});
    Restriction e = restrict_to_divisor(b.fan, w({1, 0, 0, 1}), b.new_ray);
    Rational etotal = 0;
    for (const auto& c : e.divisor.coeffs)
        etotal += c;
    CHECK(etotal == 0);

    Restriction pr = restrict_to_divisor(p2, principal_divisor(p2, IntVector{2, -1}), 1);
    CHECK(is_principal(pr.star.fan, pr.divisor.to_weil()));

    CHECK_THROWS_AS(restrict_to_divisor(weighted_projective_plane_112(), w({0, 0, 2}), 0), InputError);
}

TEST_CASE("restriction preserves wall degrees inside the divisor") {
    std::mt19937_64 rng(47);
    for (const auto& e : generate_corpus(4, 6, 3, 1)) {
        const Fan& fan = e.fan;
        WeilDivisor d = random_divisor(rng, fan.ray_count(), 3);
        auto degs = wall_degrees(fan, d);
        for (std::size_t j = 0; j < fan.ray_count(); ++j) {
            Restriction r = restrict_to_divisor(fan, d, j);
            auto star_degs = wall_degrees(r.star.fan, r.divisor);
            for (const auto& wd : degs) {
                if (!wd.wall.tau.contains_ray(j))
                    continue;
                bool matched = false;
                for (const auto& sd : star_degs) {
                    std::vector<std::size_t> parents{j};
                    for (auto s : sd.wall.tau.rays())
                        parents.push_back(r.star.parent_ray[s]);
                    if (Cone(parents) == wd.wall.tau) {
                        CHECK(sd.value == wd.value);
                        matched = true;
                    }
                }
                CHECK(matched);
            }
        }
    }
}
