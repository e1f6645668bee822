#include "torix/corpus.hpp"

#include <random>

#include "torix/errors.hpp"

namespace torix {

Fan projective_space(std::size_t n) {
    if (n < 1)
        throw InputError("projective_space: n must be >= 1");
    std::vector<LatticeVector> rays;
    for (std::size_t i = 0; i < n; ++i) {
        LatticeVector e(n, 0);
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    rays.emplace_back(n, -1);
    std::vector<Cone> cones;
    for (std::size_t skip = 0; skip <= n; ++skip) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != skip)
                idx.push_back(i);
        cones.emplace_back(std::move(idx));
    }
    return Fan(n, std::move(rays), std::move(cones));
}

Fan hirzebruch(Int a) {
    if (a < 0)
        throw InputError("hirzebruch: a must be >= 0");
    return Fan(2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {Cone{0, 1}, Cone{1, 2}, Cone{2, 3}, Cone{0, 3}});
}

Fan product(const Fan& a, const Fan& b) {
    const std::size_t n = a.rank() + b.rank();
    std::vector<LatticeVector> rays;
    for (const auto& r : a.rays()) {
        LatticeVector v(n, 0);
        std::copy(r.begin(), r.end(), v.begin());
        rays.push_back(std::move(v));
    }
    for (const auto& r : b.rays()) {
        LatticeVector v(n, 0);
        std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(a.rank()));
        rays.push_back(std::move(v));
    }
    std::vector<Cone> cones;
    for (const auto& ca : a.max_cones())
        for (const auto& cb : b.max_cones()) {
            std::vector<std::size_t> idx = ca.rays();
            for (auto r : cb.rays())
                idx.push_back(r + a.ray_count());
            cones.emplace_back(std::move(idx));
        }
    return Fan(n, std::move(rays), std::move(cones));
}

Fan weighted_projective_plane_112() {
    return Fan(2, {{1, 0}, {0, 1}, {-1, -2}}, {Cone{0, 1}, Cone{1, 2}, Cone{0, 2}});
}

Fan random_smooth_blowup_tower(const Fan& base, std::uint64_t seed, std::size_t steps) {
    std::mt19937_64 rng(seed);
    Fan fan = base;
    for (std::size_t s = 0; s < steps; ++s) {
        std::vector<Cone> candidates;
        for (const auto& c : fan.cones())
            if (fan.dim(c) == 2 && is_smooth_cone(fan, c))
                candidates.push_back(c);
        if (candidates.empty())
            throw InputError("blow-up tower: fan has no smooth 2-cones");
        const Cone& pick = candidates[rng() % candidates.size()];
        fan = star_subdivision(fan, pick).fan;
    }
    return fan;
}

namespace {

std::vector<CorpusEntry> bases(std::size_t dim) {
    const Fan p1 = projective_space(1);
    switch (dim) {
    case 1:
        return {{"P1", "standard", p1}};
    case 2:
        return {{"P2", "standard", projective_space(2)},
                {"P1xP1", "product", product(p1, p1)},
                {"F1", "hirzebruch a=1", hirzebruch(1)},
                {"F2", "hirzebruch a=2", hirzebruch(2)},
                {"F3", "hirzebruch a=3", hirzebruch(3)}};
    case 3:
        return {{"P3", "standard", projective_space(3)},
                {"P1xP2", "product", product(p1, projective_space(2))},
                {"P1xP1xP1", "product", product(p1, product(p1, p1))},
                {"P1xF1", "product", product(p1, hirzebruch(1))}};
    case 4:
        return {{"P4", "standard", projective_space(4)},
                {"P1xP3", "product", product(p1, projective_space(3))},
                {"P2xP2", "product", product(projective_space(2), projective_space(2))}};
    default:
        throw InputError("corpus dimension must be in 1..4");
    }
}

} // namespace

std::vector<CorpusEntry> standard_corpus(std::size_t dim) { return bases(dim); }

std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, std::size_t count, std::size_t dim,
                                         std::size_t steps) {
    auto base = bases(dim);
    if (dim == 1 && steps > 0)
        throw InputError("no blow-ups exist in dimension 1");
    std::vector<CorpusEntry> out;
    for (std::size_t k = 0; k < count; ++k) {
        const auto& b = base[(seed + k) % base.size()];
        std::uint64_t tower_seed = seed * 1000003ULL + k;
        CorpusEntry e{b.name, b.provenance, random_smooth_blowup_tower(b.fan, tower_seed, steps)};
        if (steps > 0) {
            e.name += "-blowup" + std::to_string(steps) + "-" + std::to_string(k);
            e.provenance += "; star subdivisions=" + std::to_string(steps) +
                            " tower_seed=" + std::to_string(tower_seed);
        }
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace torix
