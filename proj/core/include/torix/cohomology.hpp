#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torix/divisors.hpp"
#include "torix/fan.hpp"

namespace torix {

/// Fine Z^d degree of the Cox ring, one entry per ray.
using DegreeVector = IntVector;

struct CohomologyTable {
    std::vector<std::size_t> h; // h[i] = dim H^i, i = 0..n
    /// Nonzero degree pieces u -> (dim H^i_u)_i, filled on request.
    std::map<LatticeVector, std::vector<std::size_t>> per_degree;

    friend bool operator==(const CohomologyTable& a, const CohomologyTable& b) { return a.h == b.h; }
};

enum class Engine {
    General,    // Cech complex over intersections of maximal cones
    Simplicial, // reduced cohomology of the cones spanned by negative rays
};

struct CohomologyOptions {
    Engine engine = Engine::General;
    bool per_degree = false;
    /// Sample degrees just outside the enumeration box and require them to vanish.
    bool check_outside = false;
};

/// Integer box of characters u outside of which every degree piece vanishes.
struct DegreeBox {
    IntVector lo, hi;
    std::size_t size() const;
};

/// Box spanned by all vertices of the hyperplanes <u, v_i> = -a_i + s for the
/// given shifts, widened by one in every direction.
DegreeBox degree_region(const Fan& fan, const WeilDivisor& d, const std::vector<Int>& shifts);

// ---- O(D) ------------------------------------------------------------------

/// dim H^i(X, O(D))_u for all i from the Cech complex over maximal cones.
/// The result has one entry per Cech level (the number of maximal cones).
std::vector<std::size_t> cech_degree_dims(const Fan& fan, const WeilDivisor& d, std::span<const Int> u);
std::size_t cech_degree_piece(const Fan& fan, const WeilDivisor& d, std::span<const Int> u, std::size_t i);

/// Same pieces through reduced cohomology of the subcomplex of cones whose
/// rays all satisfy <u, v> < -a. Complete simplicial fans only; n + 1 entries.
std::vector<std::size_t> simplicial_degree_dims(const Fan& fan, const WeilDivisor& d, std::span<const Int> u);

/// Total cohomology of O(D) on a complete fan.
CohomologyTable cohomology_table(const Fan& fan, const WeilDivisor& d, const CohomologyOptions& opts = {});

// ---- local cohomology of the Cox ring ---------------------------------------

/// dim H^i_B(S)_alpha, from the Cech complex on the generators of B.
std::size_t local_cohomology_S(const Fan& fan, std::span<const Int> alpha, std::size_t i);
/// All levels 0..(number of maximal cones).
std::vector<std::size_t> local_cohomology_S_dims(const Fan& fan, std::span<const Int> alpha);

/// Clamps each entry to 0 (nonnegative) or -1 (negative).
DegreeVector sign_normalize(std::span<const Int> alpha);

/// alpha = a + (<u, v_i>)_i, the fine degree of the character u in O(D).
DegreeVector fine_degree(const Fan& fan, const WeilDivisor& d, std::span<const Int> u);

// ---- differential forms -----------------------------------------------------

/// Euler sequence data: relations among the rays and the map
/// E = sum_j S(-f_j) -> F = S^{d-n}, e_j -> (r^(s)_j Y_j)_s.
struct EulerPresentation {
    IntMatrix relation_basis; // (d - n) x d

    std::string str() const;
};

EulerPresentation euler_presentation(const Fan& fan);

/// dim of the degree-alpha piece of H^p(X, Omega^j (x) O) computed from
/// M_j = ker(wedge^j E -> wedge^{j-1} E (x) F), for all p (one per Cech level).
std::vector<std::size_t> omega_degree_dims(const Fan& fan, std::size_t j, std::span<const Int> alpha);

CohomologyTable omega_cohomology_table(const Fan& fan, std::size_t j, const WeilDivisor& d,
                                       const CohomologyOptions& opts = {});
std::size_t omega_cohomology(const Fan& fan, std::size_t j, const WeilDivisor& d, std::size_t p);

// ---- theorem checks ---------------------------------------------------------

/// Local cohomology H^{n+1}_B(S) at (-1,...,-1) and at (-p,...,-p).
std::pair<std::size_t, std::size_t> frobenius_split_dims(const Fan& fan, Int p);

struct VanishingAudit {
    std::vector<std::pair<std::string, bool>> hypotheses;
    bool hypotheses_hold = false;
    std::optional<CohomologyTable> table; // of O(D), when the hypotheses hold
    bool violation = false;               // hypotheses hold and some h^i != 0, i >= 1
};

/// Checks the hypotheses "0 <= E <= 1, m(D+E) integral, Cartier and ample"
/// and then the vanishing of h^i(O(D)) for i >= 1.
VanishingAudit vanishing_audit(const Fan& fan, const WeilDivisor& d, const QDivisor& e, Int m);

/// h^i(D) = h^{n-i}(K - D) for every i (smooth complete fans).
bool serre_duality_check(const Fan& fan, const WeilDivisor& d);

struct KawamataViehwegReport {
    CohomologyTable adjoint;                // of K + L
    std::optional<CohomologyTable> coarse;  // of K' + D' on the normal fan of P_L
    bool vanishes = false;                  // every h^i, i >= 1, is zero in both
};

/// Vanishing of h^i(K + L), i >= 1, for nef and big L on a smooth complete fan,
/// also evaluated on the coarse fan from the factorization of L.
KawamataViehwegReport kawamata_viehweg_check(const Fan& fan, const WeilDivisor& l);

} // namespace torix
