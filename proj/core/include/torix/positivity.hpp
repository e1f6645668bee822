#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torix/divisors.hpp"
#include "torix/fan.hpp"
#include "torix/intersection.hpp"

namespace torix {

struct PositivityProfile {
    bool nef = false;
    bool globally_generated = false;
    bool ample = false;
    std::optional<bool> very_ample; // nullopt: fan not smooth, no claim
    std::optional<bool> big;        // nullopt: not nef, out of scope
    Rational min_degree;
    std::optional<Wall> witness;    // a wall attaining min_degree
};

/// Full profile of a Cartier divisor on a complete fan. Global generation
/// comes from the convexity certificate; a disagreement with the wall
/// degrees throws TheoremViolation.
PositivityProfile positivity_profile(const Fan& fan, const WeilDivisor& l);

bool is_nef(const Fan& fan, const WeilDivisor& l);
bool is_ample(const Fan& fan, const WeilDivisor& l);
bool is_globally_generated(const Fan& fan, const WeilDivisor& l);
std::optional<bool> is_very_ample(const Fan& fan, const WeilDivisor& l);

/// dim P_L = n. Throws InputError when L is not nef.
bool is_big(const Fan& fan, const WeilDivisor& l);

/// Walls with negative degree.
std::vector<Wall> base_locus_curves(const Fan& fan, const WeilDivisor& l);

/// u_sigma pairwise distinct over the maximal cones.
bool has_distinct_local_data(const Fan& fan, const WeilDivisor& l);

struct Factorization {
    Fan coarse;
    /// maximal cone of the input fan -> maximal cone of `coarse` containing it
    std::vector<std::size_t> cone_map;
    /// coarse ray -> ray index in the input fan
    std::vector<std::size_t> ray_map;
    WeilDivisor divisor; // ample on `coarse`, pulls back to L
};

/// Normal fan of P_L with the ample divisor D' such that L is its pullback.
Factorization nef_big_factorization(const Fan& fan, const WeilDivisor& l);

/// Looks for an ample class among deterministic random divisors.
/// Returns a message when none was found, nullopt otherwise.
std::optional<std::string> projectivity_warning(const Fan& fan, std::size_t attempts = 100);

// ---- Fujita-type statements ------------------------------------------------

enum class FujitaOutcome { Holds, ProjectiveSpaceException, HypothesisNotMet };

std::string to_string(FujitaOutcome o);

struct FujitaVerdict {
    FujitaOutcome outcome = FujitaOutcome::HypothesisNotMet;
    Rational min_degree;
    std::optional<Wall> failing_wall; // HypothesisNotMet: wall below the threshold
    WeilDivisor residual;             // L - sum of the chosen primes
    std::string detail;
};

/// Global generation of L - D_{j1} - ... - D_{jm} when every curve degree of L is >= n.
FujitaVerdict fujita_global_generation(const Fan& fan, const WeilDivisor& l, const std::vector<std::size_t>& primes);

/// Very ampleness of L - sum D_j when every curve degree of L is >= n + 1.
FujitaVerdict fujita_very_ample(const Fan& fan, const WeilDivisor& l, const std::vector<std::size_t>& primes);

/// omega_X (x) L, i.e. the Fujita statement with every prime divisor.
FujitaVerdict adjoint_check(const Fan& fan, const WeilDivisor& l, bool very_ample = false);

/// min degree of L - D_j is >= l - 1, given min degree of L >= l.
bool induction_step_check(const Fan& fan, const WeilDivisor& l, Int bound, std::size_t j);

struct Obstruction {
    bool obstructed = false;
    std::optional<Wall> witness;
};

/// L - D_{j1} - D_{j2} fails to be globally generated exactly when some wall
/// tau has tau + j1 and tau + j2 maximal and (L . V(tau)) = 1.
Obstruction two_divisor_gg_obstruction(const Fan& fan, const WeilDivisor& l, std::size_t j1, std::size_t j2);

/// L - D_j fails to be ample exactly when some wall tau has tau + j maximal
/// and (L . V(tau)) = 1.
Obstruction ample_minus_divisor_obstruction(const Fan& fan, const WeilDivisor& l, std::size_t j);

} // namespace torix
