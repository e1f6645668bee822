#include <doctest.h>

#include <random>

#include "torix/corpus.hpp"
#include "torix/errors.hpp"
#include "torix/fan.hpp"

using namespace torix;

TEST_CASE("validate_fan") {
    CHECK(validate_fan(projective_space(2)).empty());

    // legal non-complete fan
    Fan partial(2, {{1, 0}, {0, 1}, {-1, -1}}, {Cone{0, 1}, Cone{1, 2}});
    CHECK(validate_fan(partial).empty());
    CHECK_FALSE(is_complete(partial));

    Fan bad(2, {{2, 0}, {0, 1}}, {Cone{0, 1}});
    auto d = validate_fan(bad);
    REQUIRE(d.size() == 1);
    CHECK(d[0] == "ray 0 not primitive");

    Fan overlap(2, {{1, 0}, {0, 1}, {1, 1}}, {Cone{0, 1}, Cone{1, 2}});
    CHECK_FALSE(validate_fan(overlap).empty());

    Fan dup(2, {{1, 0}, {1, 0}, {0, 1}}, {Cone{0, 2}, Cone{1, 2}});
    CHECK_FALSE(validate_fan(dup).empty());

    CHECK_THROWS_AS(Fan::checked(2, {{1, 0}, {-1, 0}}, {Cone{0}, Cone{1}}), DegenerateFanError);
    CHECK_THROWS_AS(Fan(2, {{1, 0}}, {Cone{0, 3}}), InputError);
}

TEST_CASE("smoothness") {
    CHECK(is_smooth(projective_space(2)));
    // P(1,1,2): det((1,0),(-1,-2)) = -2, the other two cones are unimodular
    Fan w = weighted_projective_plane_112();
    CHECK_FALSE(is_smooth(w));
    REQUIRE(w.max_cones()[1] == Cone{0, 2});
    CHECK(cone_indices(w) == std::vector<Int>{1, 2, 1});
    CHECK(is_smooth(hirzebruch(1)));
}

TEST_CASE("completeness") {
    CHECK(is_complete(projective_space(2)));
    CHECK(is_complete(hirzebruch(1)));
    CHECK(is_complete(projective_space(1)));
    Fan minus(2, {{1, 0}, {0, 1}, {-1, -1}}, {Cone{1, 2}, Cone{0, 2}});
    CHECK_FALSE(is_complete(minus));
}

TEST_CASE("walls") {
    CHECK(walls(projective_space(2)).size() == 3);
    CHECK(walls(hirzebruch(1)).size() == 4);
    CHECK(walls(projective_space(3)).size() == 6);
    auto w = walls(projective_space(1));
    REQUIRE(w.size() == 1);
    CHECK(w[0].tau.empty());
    for (const auto& wall : walls(product(projective_space(1), projective_space(2)))) {
        CHECK(wall.sigma1 != wall.sigma2);
    }
    Fan partial(2, {{1, 0}, {0, 1}, {-1, -1}}, {Cone{0, 1}, Cone{1, 2}});
    CHECK_THROWS_AS(walls(partial), InputError);
}

TEST_CASE("star fans") {
    Fan p2 = projective_space(2);
    StarFan s = star_fan(p2, Cone{0});
    CHECK(s.fan.rank() == 1);
    CHECK(s.fan.ray_count() == 2);
    CHECK(is_projective_space(s.fan));
    // images of (0,1) and (-1,-1) modulo (1,0) are +1 and -1
    std::vector<LatticeVector> images = s.fan.rays();
    std::sort(images.begin(), images.end());
    CHECK(images == std::vector<LatticeVector>{{-1}, {1}});

    StarFan id = star_fan(p2, Cone{});
    CHECK(id.fan == p2);

    StarFan f = star_fan(hirzebruch(1), Cone{3});
    CHECK(is_projective_space(f.fan));

    for (const auto& e : standard_corpus(3))
        for (const auto& c : e.fan.cones()) {
            std::size_t k = e.fan.dim(c);
            if (k == 0 || k == 3)
                continue;
            StarFan sf = star_fan(e.fan, c);
            CHECK(sf.fan.rank() == 3 - k);
            CHECK(is_smooth(sf.fan));
            CHECK(is_complete(sf.fan));
        }
}

TEST_CASE("star subdivisions") {
    Subdivision b = star_subdivision(projective_space(2), Cone{0, 1});
    CHECK(b.fan.ray_count() == 4);
    CHECK(b.fan.ray(b.new_ray) == LatticeVector{1, 1});
    CHECK(is_smooth(b.fan));
    CHECK(is_complete(b.fan));

    Subdivision b3 = star_subdivision(projective_space(3), Cone{0, 1});
    CHECK(b3.fan.ray_count() == 5);
    CHECK(b3.fan.max_cones().size() == 6);
    CHECK(is_smooth(b3.fan));
    CHECK(is_complete(b3.fan));

    CHECK_THROWS_AS(star_subdivision(projective_space(2), Cone{0}), InputError);
    CHECK_THROWS_AS(star_subdivision(weighted_projective_plane_112(), Cone{0, 2}), InputError);
}

TEST_CASE("projective space detection") {
    for (std::size_t n = 1; n <= 4; ++n)
        CHECK(is_projective_space(projective_space(n)));
    for (Int a = 0; a <= 3; ++a)
        CHECK_FALSE(is_projective_space(hirzebruch(a)));
    CHECK_FALSE(is_projective_space(product(projective_space(1), projective_space(2))));
}

TEST_CASE("corpus constructors") {
    CHECK(projective_space(1).rays() == std::vector<LatticeVector>{{1}, {-1}});
    Fan f0 = hirzebruch(0);
    Fan p1p1 = product(projective_space(1), projective_space(1));
    CHECK(f0.ray_count() == p1p1.ray_count());
    CHECK(is_smooth(p1p1));
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        for (const auto& base : {projective_space(2), projective_space(3), hirzebruch(2)}) {
            Fan t = random_smooth_blowup_tower(base, seed, 3);
            CHECK(t.ray_count() == base.ray_count() + 3);
            CHECK(is_smooth(t));
            CHECK(is_complete(t));
            CHECK(validate_fan(t).empty());
        }
    auto c = generate_corpus(0, 1, 2, 0);
    REQUIRE(c.size() == 1);
    CHECK(c[0].fan == projective_space(2));
}

TEST_CASE("random points lie in exactly one maximal cone off the boundary") {
    std::mt19937_64 rng(99);
    for (std::size_t dim = 2; dim <= 3; ++dim)
        for (const auto& e : generate_corpus(5, 4, dim, 2)) {
            const Fan& fan = e.fan;
            int hits_boundary = 0;
            for (int s = 0; s < 1000; ++s) {
                IntVector p(dim);
                for (auto& x : p)
                    x = static_cast<Int>(rng() % 201) - 100;
                int inside = 0, interior = 0;
                for (std::size_t i = 0; i < fan.max_cones().size(); ++i) {
                    inside += fan.max_cone_geometry(i).halfspaces.contains(std::span<const Int>(p));
                    interior += fan.max_cone_geometry(i).halfspaces.contains_relative_interior(p);
                }
                CHECK(inside >= 1);
                CHECK(interior <= 1);
                if (interior == 0)
                    ++hits_boundary;
                else
                    CHECK(inside == 1);
            }
            CHECK(hits_boundary < 1000);
        }
}
