#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "torix/fan.hpp"

namespace torix {

/// Standard fan of P^n: e_1, ..., e_n, -(e_1 + ... + e_n).
Fan projective_space(std::size_t n);

/// Hirzebruch surface F_a: rays (1,0), (0,1), (-1,a), (0,-1).
Fan hirzebruch(Int a);

/// Fan of the product variety in N_1 (+) N_2.
Fan product(const Fan& a, const Fan& b);

/// Weighted projective plane P(1,1,2): rays (1,0), (0,1), (-1,-2).
Fan weighted_projective_plane_112();

/// Applies `steps` star subdivisions at randomly chosen smooth 2-cones.
/// Deterministic in the seed on every platform.
Fan random_smooth_blowup_tower(const Fan& base, std::uint64_t seed, std::size_t steps);

struct CorpusEntry {
    std::string name;
    std::string provenance;
    Fan fan;
};

/// The fixed smooth complete test corpus in the given dimension (1..4).
std::vector<CorpusEntry> standard_corpus(std::size_t dim);

/// Deterministic corpus of `count` smooth complete fans of dimension dim,
/// each base followed by `steps` random blow-ups.
std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, std::size_t count, std::size_t dim,
                                         std::size_t steps);

} // namespace torix
