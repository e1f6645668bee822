#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "torix/cohomology.hpp"
#include "torix/fan.hpp"

namespace torix {

struct SurjectivityReport {
    Fan blowup;                           // iterated star subdivision along the targets
    std::vector<std::size_t> exceptional; // ray index of E_i on the blow-up
    WeilDivisor pulled_back;              // pi^* L
    WeilDivisor twisted;                  // pi^* L - sum E_i
    CohomologyTable table;                // of the twisted divisor
    std::size_t h0_l = 0;                 // h^0(X, L)
    std::vector<std::size_t> h0_targets;  // h^0(V(tau_i), L|V(tau_i))
    bool surjective = false;              // h^1 of the twisted divisor vanishes
};

/// Targets must be cones of the smooth complete fan whose orbit closures are
/// pairwise disjoint; L must be ample. Rays as targets are allowed, with
/// E_i = D_rho and no subdivision.
SurjectivityReport run_surjectivity(const Fan& fan, const WeilDivisor& l, const std::vector<Cone>& targets);

/// V(a) and V(b) meet iff some cone of the fan contains both.
bool orbit_closures_meet(const Fan& fan, const Cone& a, const Cone& b);

struct CorpusFile {
    std::string path; // relative to the output directory
    std::string content;
};

/// Fan files of generate_corpus(seed, count, dim, steps) followed by
/// manifest.json. Byte-identical for identical arguments.
std::vector<CorpusFile> run_corpus(std::uint64_t seed, std::size_t count, std::size_t dim, std::size_t steps);

} // namespace torix
