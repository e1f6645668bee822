#include <doctest.h>

#include <random>

#include "torix/corpus.hpp"
#include "torix/errors.hpp"
#include "torix/positivity.hpp"

using namespace torix;

namespace {

WeilDivisor w(IntVector v) { return WeilDivisor{std::move(v)}; }

// Every divisor supported on the first `free` rays with coefficients in
// [lo, hi]; the remaining coefficients stay 0. On a complete fan the first
// d - n rays do not always generate Cl, so callers pick `free` = d.
std::vector<WeilDivisor> box(std::size_t d, std::size_t free, Int lo, Int hi) {
    std::vector<WeilDivisor> out;
    IntVector c(d, 0);
    for (std::size_t i = 0; i < free; ++i)
        c[i] = lo;
    for (;;) {
        out.push_back(w(c));
        std::size_t j = 0;
        while (j < free && c[j] == hi) {
            c[j] = lo;
            ++j;
        }
        if (j == free)
            return out;
        ++c[j];
    }
}

Fan blown_up_f1() { return star_subdivision(projective_space(2), Cone{0, 1}).fan; }

} // namespace

TEST_CASE("positivity profiles") {
    Fan p2 = projective_space(2);
    PositivityProfile a = positivity_profile(p2, w({1, 0, 0}));
    CHECK(a.nef);
    CHECK(a.ample);
    CHECK(a.globally_generated);
    CHECK(a.very_ample == true);
    CHECK(a.big == true);
    CHECK(a.min_degree == 1);

    Fan f1 = blown_up_f1();
    PositivityProfile b = positivity_profile(f1, w({1, 0, 0, 1}));
    CHECK(b.nef);
    CHECK_FALSE(b.ample);
    CHECK(b.globally_generated);
    CHECK(b.very_ample == false);
    CHECK(b.big == true);
    CHECK(b.min_degree == 0);

    PositivityProfile c = positivity_profile(p2, w({-1, 0, 0}));
    CHECK_FALSE(c.nef);
    CHECK_FALSE(c.ample);
    CHECK_FALSE(c.globally_generated);
    CHECK_FALSE(c.big.has_value());

    CHECK_FALSE(is_very_ample(weighted_projective_plane_112(), w({0, 0, 2})).has_value());
    CHECK_THROWS_AS(positivity_profile(weighted_projective_plane_112(), w({0, 0, 1})), InputError);
}

TEST_CASE("bigness") {
    Fan p1p1 = product(projective_space(1), projective_space(1));
    CHECK_FALSE(is_big(p1p1, w({1, 0, 0, 0})));
    CHECK(is_big(p1p1, w({1, 0, 1, 0})));
    CHECK(is_big(blown_up_f1(), w({1, 0, 0, 1})));
    CHECK_THROWS_AS(is_big(projective_space(2), w({-1, 0, 0})), InputError);
}

TEST_CASE("base locus curves") {
    Fan p2 = projective_space(2);
    CHECK(base_locus_curves(p2, w({-1, 0, 0})).size() == 3);
    CHECK(base_locus_curves(p2, w({2, 0, 0}) - w({1, 1, 1})).size() == 3);
    CHECK(base_locus_curves(p2, w({1, 0, 0})).empty());
}

TEST_CASE("triple agreement on random divisors") {
    std::mt19937_64 rng(53);
    std::vector<Fan> fans;
    for (std::size_t dim = 1; dim <= 3; ++dim)
        for (const auto& e : standard_corpus(dim))
            fans.push_back(e.fan);
    for (const auto& e : generate_corpus(9, 6, 2, 3))
        fans.push_back(e.fan);
    fans.push_back(weighted_projective_plane_112());
    int nef = 0, ample = 0;
    for (const auto& fan : fans)
        for (int t = 0; t < 15; ++t) {
            WeilDivisor d{IntVector(fan.ray_count())};
            for (auto& c : d.coeffs)
                c = static_cast<Int>(rng() % 5) - 1;
            if (!is_cartier(fan, d))
                d = Int{2} * d;
            auto cd = std::get<CartierData>(cartier_data(fan, d));
            bool degrees_nonneg = is_nef(fan, d);
            bool degrees_pos = is_ample(fan, d);
            CHECK(degrees_nonneg == is_convex(fan, cd));
            CHECK(degrees_nonneg == base_locus_curves(fan, d).empty());
            CHECK(degrees_pos == is_strictly_convex(fan, cd));
            if (degrees_nonneg)
                CHECK(degrees_pos == has_distinct_local_data(fan, d));
            nef += degrees_nonneg;
            ample += degrees_pos;
        }
    CHECK(nef > 10);
    CHECK(ample > 5);
}

TEST_CASE("nef and big factorization") {
    Fan f1 = blown_up_f1();
    Factorization f = nef_big_factorization(f1, w({1, 0, 0, 1}));
    CHECK(is_projective_space(f.coarse));
    CHECK(f.ray_map == std::vector<std::size_t>{0, 1, 2});
    CHECK(linearly_equivalent(f.coarse, f.divisor, prime_divisor(f.coarse, 0)));
    CHECK(f.cone_map.size() == f1.max_cones().size());

    Fan p2 = projective_space(2);
    Factorization same = nef_big_factorization(p2, w({2, 0, 0}));
    CHECK(same.coarse == p2);
    CHECK(same.divisor == w({2, 0, 0}));

    Fan p1p1 = product(projective_space(1), projective_space(1));
    REQUIRE(p1p1.max_cones()[0] == Cone{0, 2});
    Subdivision b = star_subdivision(p1p1, Cone{0, 2});
    QDivisor pb = pullback(p1p1, w({1, 0, 1, 0}), b.fan);
    Factorization g = nef_big_factorization(b.fan, pb.to_weil());
    CHECK(g.coarse == p1p1);

    CHECK_THROWS_AS(nef_big_factorization(p1p1, w({1, 0, 0, 0})), InputError);
}

TEST_CASE("factorization round trip on random points") {
    std::mt19937_64 rng(59);
    int checked = 0;
    for (const auto& e : generate_corpus(13, 8, 2, 2))
        for (const auto& d : box(e.fan.ray_count(), e.fan.ray_count(), 0, 2)) {
            if (checked >= 40)
                break;
            if (!is_nef(e.fan, d) || !is_big(e.fan, d) || is_ample(e.fan, d))
                continue;
            Factorization f = nef_big_factorization(e.fan, d);
            CHECK(f.coarse.ray_count() < e.fan.ray_count());
            QCartierData fine = std::get<CartierData>(cartier_data(e.fan, d));
            QCartierData coarse = std::get<CartierData>(cartier_data(f.coarse, f.divisor));
            for (int s = 0; s < 1000 / 40; ++s) {
                RationalVector p{Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1),
                                 Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1)};
                p[0].canonicalize();
                p[1].canonicalize();
                CHECK(support_function_eval(e.fan, fine, std::span<const Rational>(p)) ==
                      support_function_eval(f.coarse, coarse, std::span<const Rational>(p)));
            }
            ++checked;
        }
    CHECK(checked > 10);
}

TEST_CASE("Fujita statements on P2") {
    Fan p2 = projective_space(2);
    auto ex = fujita_global_generation(p2, w({2, 0, 0}), {0, 1, 2});
    CHECK(ex.outcome == FujitaOutcome::ProjectiveSpaceException);
    CHECK_FALSE(is_globally_generated(p2, ex.residual));

    auto h = fujita_global_generation(p2, w({2, 0, 0}), {0, 1});
    CHECK(h.outcome == FujitaOutcome::Holds);
    CHECK(linearly_equivalent(p2, h.residual, zero_divisor(p2)));

    auto miss = fujita_global_generation(p2, w({1, 0, 0}), {0});
    CHECK(miss.outcome == FujitaOutcome::HypothesisNotMet);
    CHECK(miss.failing_wall.has_value());

    CHECK(fujita_very_ample(p2, w({3, 0, 0}), {0, 1, 2}).outcome == FujitaOutcome::ProjectiveSpaceException);
    CHECK(fujita_very_ample(p2, w({3, 0, 0}), {0}).outcome == FujitaOutcome::Holds);
    CHECK(fujita_very_ample(p2, w({2, 0, 0}), {0}).outcome == FujitaOutcome::HypothesisNotMet);

    CHECK(adjoint_check(p2, w({2, 0, 0})).outcome == FujitaOutcome::ProjectiveSpaceException);
    CHECK(adjoint_check(p2, w({3, 0, 0})).outcome == FujitaOutcome::Holds);
    CHECK(adjoint_check(projective_space(1), w({1, 0})).outcome == FujitaOutcome::ProjectiveSpaceException);

    CHECK_THROWS_AS(fujita_global_generation(p2, w({2, 0, 0}), {0, 0}), InputError);
    CHECK_THROWS_AS(fujita_global_generation(weighted_projective_plane_112(), w({0, 0, 2}), {0}), InputError);
}

TEST_CASE("Fujita statements on F1 with every prime divisor") {
    Fan f1 = hirzebruch(1);
    int seen = 0;
    for (const auto& l : box(4, 4, 0, 4)) {
        Rational m = min_curve_degree(f1, l).value;
        if (m == 2) {
            ++seen;
            auto v = fujita_global_generation(f1, l, {0, 1, 2, 3});
            CHECK(v.outcome == FujitaOutcome::Holds);
            CHECK(adjoint_check(f1, l).outcome == FujitaOutcome::Holds);
        }
        if (m == 3)
            CHECK(fujita_very_ample(f1, l, {0, 1, 2, 3}).outcome == FujitaOutcome::Holds);
    }
    CHECK(seen > 0);
}

TEST_CASE("induction step and its l = 1 case") {
    Fan p2 = projective_space(2);
    for (std::size_t j = 0; j < 3; ++j)
        CHECK(induction_step_check(p2, w({2, 0, 0}), 2, j));
    CHECK_THROWS_AS(induction_step_check(p2, w({1, 0, 0}), 2, 0), InputError);

    std::mt19937_64 rng(61);
    int swept = 0;
    for (std::size_t dim = 2; dim <= 3; ++dim)
        for (const auto& e : generate_corpus(17, 6, dim, 1)) {
            const Fan& fan = e.fan;
            for (int t = 0; t < 60 && swept < 300; ++t) {
                WeilDivisor l{IntVector(fan.ray_count())};
                for (auto& c : l.coeffs)
                    c = static_cast<Int>(rng() % 4);
                Rational m = min_curve_degree(fan, l).value;
                if (m < 1)
                    continue;
                std::size_t j = rng() % fan.ray_count();
                Int bound = to_int(m);
                CHECK(induction_step_check(fan, l, bound, j));
                CHECK(min_curve_degree(fan, l - prime_divisor(fan, j)).value >= m - 1);
                CHECK(is_globally_generated(fan, l - prime_divisor(fan, j)));
                ++swept;
            }
        }
    CHECK(swept > 50);
}

TEST_CASE("obstructions to global generation and ampleness") {
    Fan p2 = projective_space(2);
    Obstruction a = two_divisor_gg_obstruction(p2, w({1, 0, 0}), 0, 1);
    CHECK(a.obstructed);
    REQUIRE(a.witness);
    CHECK(a.witness->tau == Cone{2});
    CHECK_FALSE(two_divisor_gg_obstruction(p2, w({2, 0, 0}), 0, 1).obstructed);

    Obstruction b = ample_minus_divisor_obstruction(p2, w({1, 0, 0}), 0);
    CHECK(b.obstructed);
    REQUIRE(b.witness);
    CHECK_FALSE(b.witness->tau.contains_ray(0));
    CHECK_FALSE(ample_minus_divisor_obstruction(p2, w({2, 0, 0}), 0).witness);

    CHECK_THROWS_AS(two_divisor_gg_obstruction(p2, w({0, 0, 0}), 0, 1), InputError);

    // the biconditionals are asserted inside; a sweep exercises them
    std::mt19937_64 rng(67);
    for (std::size_t dim = 2; dim <= 3; ++dim)
        for (const auto& e : generate_corpus(19, 5, dim, 1))
            for (int t = 0; t < 30; ++t) {
                WeilDivisor l{IntVector(e.fan.ray_count())};
                for (auto& c : l.coeffs)
                    c = static_cast<Int>(rng() % 3);
                if (!is_ample(e.fan, l))
                    continue;
                std::size_t j1 = rng() % e.fan.ray_count();
                std::size_t j2 = (j1 + 1 + rng() % (e.fan.ray_count() - 1)) % e.fan.ray_count();
                CHECK_NOTHROW(two_divisor_gg_obstruction(e.fan, l, j1, j2));
                CHECK_NOTHROW(ample_minus_divisor_obstruction(e.fan, l, j1));
            }
}

TEST_CASE("projectivity probe") {
    CHECK_FALSE(projectivity_warning(hirzebruch(2)).has_value());
    Fan partial(2, {{1, 0}, {0, 1}, {-1, -1}}, {Cone{0, 1}, Cone{1, 2}});
    CHECK(projectivity_warning(partial).has_value());
}
