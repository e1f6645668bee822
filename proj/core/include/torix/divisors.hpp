#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "torix/arith.hpp"
#include "torix/fan.hpp"

namespace torix {

/// Torus-invariant Weil divisor sum a_i D_i, one coefficient per ray.
struct WeilDivisor {
    IntVector coeffs;

    std::size_t size() const { return coeffs.size(); }
    Int operator[](std::size_t i) const { return coeffs[i]; }

    friend bool operator==(const WeilDivisor&, const WeilDivisor&) = default;
    friend WeilDivisor operator+(const WeilDivisor& a, const WeilDivisor& b);
    friend WeilDivisor operator-(const WeilDivisor& a, const WeilDivisor& b);
    friend WeilDivisor operator*(Int m, const WeilDivisor& d);
    WeilDivisor operator-() const;

    std::string str() const;
};

struct QDivisor {
    RationalVector coeffs;

    QDivisor() = default;
    explicit QDivisor(RationalVector c) : coeffs(std::move(c)) {}
    QDivisor(const WeilDivisor& d); // NOLINT: integral divisors are Q-divisors

    std::size_t size() const { return coeffs.size(); }
    bool is_integral() const;
    WeilDivisor to_weil() const; // throws when not integral

    friend bool operator==(const QDivisor&, const QDivisor&) = default;
    friend QDivisor operator+(const QDivisor& a, const QDivisor& b);
    friend QDivisor operator*(const Rational& m, const QDivisor& d);

    std::string str() const;
};

WeilDivisor prime_divisor(const Fan& fan, std::size_t ray);
WeilDivisor zero_divisor(const Fan& fan);
WeilDivisor canonical_divisor(const Fan& fan);
WeilDivisor round_up(const QDivisor& d);
WeilDivisor round_down(const QDivisor& d);

/// div(chi^u) = sum <u, v_i> D_i.
WeilDivisor principal_divisor(const Fan& fan, std::span<const Int> u);

// ---- class group -----------------------------------------------------------

struct DivisorClass {
    IntVector free_part;
    IntVector torsion_part; // residues, each in [0, modulus)

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    std::string str() const;
};

/// Cl(X) = Z^d / image of M under u -> (<u, v_i>)_i.
class ClassGroup {
public:
    explicit ClassGroup(const Fan& fan);

    std::size_t free_rank() const { return relations_.rows(); }
    const std::vector<Int>& torsion_moduli() const { return moduli_; }
    /// (d - n) x d basis of the relation lattice {r : sum r_i v_i = 0} in
    /// Hermite form; the free part of a class is relations * coeffs.
    const IntMatrix& relations() const { return relations_; }

    DivisorClass project(const WeilDivisor& d) const;
    DivisorClass add(const DivisorClass& a, const DivisorClass& b) const;

    /// "Z^r (+ Z/m1 + ...)"
    std::string str() const;

private:
    IntMatrix relations_;
    IntMatrix torsion_rows_;
    std::vector<Int> moduli_;
};

ClassGroup class_group(const Fan& fan);
bool is_principal(const Fan& fan, const WeilDivisor& d);
bool linearly_equivalent(const Fan& fan, const WeilDivisor& a, const WeilDivisor& b);

// ---- Cartier data ----------------------------------------------------------

/// Integral local data: <u_sigma, v_i> = -a_i for every ray i of sigma.
struct CartierData {
    std::vector<LatticeVector> u; // indexed like fan.max_cones()
};

/// Rational local data of a Q-Cartier divisor.
struct QCartierData {
    std::vector<RationalVector> u;

    QCartierData() = default;
    explicit QCartierData(std::vector<RationalVector> v) : u(std::move(v)) {}
    QCartierData(const CartierData& cd); // NOLINT
};

struct NotCartier {
    std::size_t max_cone;    // index of the first failing maximal cone
    Cone witness;            // that cone
    bool q_cartier = false;  // some multiple is Cartier
    std::string reason;
};

std::variant<CartierData, NotCartier> cartier_data(const Fan& fan, const QDivisor& d);

/// Rational local data, or NotCartier when some local system is inconsistent.
std::variant<QCartierData, NotCartier> q_cartier_data(const Fan& fan, const QDivisor& d);

bool is_cartier(const Fan& fan, const QDivisor& d);
bool is_q_cartier(const Fan& fan, const QDivisor& d);

/// Smallest m >= 1 with m*D integral and Cartier, or nullopt.
std::optional<Int> q_cartier_index(const Fan& fan, const QDivisor& d);

/// psi_D(v) = <u_sigma, v> for a maximal cone sigma containing v.
Rational support_function_eval(const Fan& fan, const QCartierData& cd, std::span<const Rational> v);
Rational support_function_eval(const Fan& fan, const QCartierData& cd, std::span<const Int> v);

/// Wall inequalities <u_sigma2, v_i> <= <u_sigma1, v_i> for v_i in sigma2 \ sigma1.
bool is_convex(const Fan& fan, const QCartierData& cd);
bool is_strictly_convex(const Fan& fan, const QCartierData& cd);

// ---- polytopes -------------------------------------------------------------

/// P_D = { u : <u, v_i> >= -a_i for all i }.
struct DivisorPolytope {
    std::size_t ambient = 0;
    std::vector<LatticeVector> normals;
    RationalVector offsets;            // a_i; constraint <u, v_i> + a_i >= 0
    std::vector<RationalVector> vertices; // sorted
    int dim = -1;                      // -1 for the empty polytope
    bool bounded = true;

    bool contains(std::span<const Rational> u) const;
    bool contains(std::span<const Int> u) const;
};

DivisorPolytope polytope(const Fan& fan, const QDivisor& d);
std::vector<LatticeVector> lattice_points(const DivisorPolytope& p);

} // namespace torix
