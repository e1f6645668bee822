#include "torix/divisors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "torix/errors.hpp"

namespace torix {

// ---- divisor values --------------------------------------------------------

WeilDivisor operator+(const WeilDivisor& a, const WeilDivisor& b) {
    if (a.size() != b.size())
        throw InputError("divisor length mismatch");
    WeilDivisor r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r.coeffs[i] = checked_add(r.coeffs[i], b.coeffs[i]);
    return r;
}

WeilDivisor operator-(const WeilDivisor& a, const WeilDivisor& b) { return a + (-b); }

WeilDivisor operator*(Int m, const WeilDivisor& d) {
    WeilDivisor r = d;
    for (auto& c : r.coeffs)
        c = checked_mul(m, c);
    return r;
}

WeilDivisor WeilDivisor::operator-() const { return Int{-1} * *this; }

std::string WeilDivisor::str() const { return to_string(coeffs); }

QDivisor::QDivisor(const WeilDivisor& d) : coeffs(to_rational(d.coeffs)) {}

bool QDivisor::is_integral() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return torix::is_integral(q); });
}

WeilDivisor QDivisor::to_weil() const {
    WeilDivisor d;
    for (const auto& q : coeffs)
        d.coeffs.push_back(to_int(q));
    return d;
}

QDivisor operator+(const QDivisor& a, const QDivisor& b) {
    if (a.size() != b.size())
        throw InputError("divisor length mismatch");
    QDivisor r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r.coeffs[i] += b.coeffs[i];
    return r;
}

QDivisor operator*(const Rational& m, const QDivisor& d) {
    QDivisor r = d;
    for (auto& c : r.coeffs)
        c *= m;
    return r;
}

std::string QDivisor::str() const { return to_string(coeffs); }

WeilDivisor prime_divisor(const Fan& fan, std::size_t ray) {
    if (ray >= fan.ray_count())
        throw InputError("ray index " + std::to_string(ray) + " out of range");
    WeilDivisor d{IntVector(fan.ray_count(), 0)};
    d.coeffs[ray] = 1;
    return d;
}

WeilDivisor zero_divisor(const Fan& fan) { return WeilDivisor{IntVector(fan.ray_count(), 0)}; }

WeilDivisor canonical_divisor(const Fan& fan) { return WeilDivisor{IntVector(fan.ray_count(), -1)}; }

WeilDivisor round_up(const QDivisor& d) {
    WeilDivisor r;
    for (const auto& q : d.coeffs)
        r.coeffs.push_back(ceil(q));
    return r;
}

WeilDivisor round_down(const QDivisor& d) {
    WeilDivisor r;
    for (const auto& q : d.coeffs)
        r.coeffs.push_back(floor(q));
    return r;
}

WeilDivisor principal_divisor(const Fan& fan, std::span<const Int> u) {
    if (u.size() != fan.rank())
        throw InputError("character has wrong length");
    WeilDivisor d;
    for (const auto& v : fan.rays())
        d.coeffs.push_back(dot(u, v));
    return d;
}

// ---- class group -----------------------------------------------------------

std::string DivisorClass::str() const {
    std::ostringstream os;
    os << '(' << to_string(free_part);
    if (!torsion_part.empty())
        os << " | " << to_string(torsion_part);
    os << ')';
    return os.str();
}

ClassGroup::ClassGroup(const Fan& fan) {
    IntMatrix v = fan.ray_matrix();
    if (span_rank(fan.rays(), fan.rank()) < fan.rank())
        throw DegenerateFanError("class group: rays do not span; quotient by their span first");
    SmithForm sf = smith(v);
    std::vector<std::size_t> torsion_idx;
    for (std::size_t i = 0; i < sf.invariants.size(); ++i)
        if (sf.invariants[i] > 1)
            torsion_idx.push_back(i);
    torsion_rows_ = IntMatrix(torsion_idx.size(), fan.ray_count());
    for (std::size_t k = 0; k < torsion_idx.size(); ++k) {
        for (std::size_t j = 0; j < fan.ray_count(); ++j)
            torsion_rows_(k, j) = sf.left(torsion_idx[k], j);
        moduli_.push_back(sf.invariants[torsion_idx[k]]);
    }
    relations_ = left_kernel(v);
}

DivisorClass ClassGroup::project(const WeilDivisor& d) const {
    if (d.size() != relations_.cols() && d.size() != torsion_rows_.cols())
        throw InputError("divisor length does not match the fan");
    DivisorClass c;
    c.free_part = multiply(relations_, d.coeffs);
    if (!moduli_.empty()) {
        IntVector t = multiply(torsion_rows_, d.coeffs);
        for (std::size_t i = 0; i < t.size(); ++i) {
            Int r = t[i] % moduli_[i];
            c.torsion_part.push_back(r < 0 ? r + moduli_[i] : r);
        }
    }
    return c;
}

DivisorClass ClassGroup::add(const DivisorClass& a, const DivisorClass& b) const {
    DivisorClass c = a;
    for (std::size_t i = 0; i < c.free_part.size(); ++i)
        c.free_part[i] = checked_add(c.free_part[i], b.free_part[i]);
    for (std::size_t i = 0; i < c.torsion_part.size(); ++i)
        c.torsion_part[i] = (c.torsion_part[i] + b.torsion_part[i]) % moduli_[i];
    return c;
}

std::string ClassGroup::str() const {
    std::ostringstream os;
    os << "Z^" << free_rank();
    for (Int m : moduli_)
        os << " + Z/" << m;
    return os.str();
}

ClassGroup class_group(const Fan& fan) { return ClassGroup(fan); }

bool is_principal(const Fan& fan, const WeilDivisor& d) {
    ClassGroup cl(fan);
    DivisorClass c = cl.project(d);
    return std::all_of(c.free_part.begin(), c.free_part.end(), [](Int x) { return x == 0; }) &&
           std::all_of(c.torsion_part.begin(), c.torsion_part.end(), [](Int x) { return x == 0; });
}

bool linearly_equivalent(const Fan& fan, const WeilDivisor& a, const WeilDivisor& b) {
    return is_principal(fan, a - b);
}

// ---- Cartier data ----------------------------------------------------------

QCartierData::QCartierData(const CartierData& cd) {
    for (const auto& v : cd.u)
        u.push_back(to_rational(v));
}

namespace {

IntMatrix local_matrix(const Fan& fan, const Cone& c) {
    IntMatrix m(c.size(), fan.rank());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < fan.rank(); ++j)
            m(i, j) = fan.ray(c.rays()[i])[j];
    return m;
}

RationalVector local_rhs(const Cone& c, const QDivisor& d) {
    RationalVector b;
    for (auto r : c.rays())
        b.push_back(-d.coeffs[r]);
    return b;
}

// Smallest m >= 1 such that V u = m b has an integer solution; nullopt when
// V u = b has no rational solution at all.
std::optional<Int> min_integral_multiple(const IntMatrix& v, const RationalVector& b) {
    SmithForm sf = smith(v);
    Int m = 1;
    for (std::size_t i = 0; i < v.rows(); ++i) {
        Rational c = 0;
        for (std::size_t j = 0; j < v.rows(); ++j)
            if (sf.left(i, j) != 0)
                c += Rational(static_cast<long>(sf.left(i, j))) * b[j];
        Int s = i < sf.invariants.size() ? sf.invariants[i] : 0;
        if (s == 0) {
            if (sgn(c) != 0)
                return std::nullopt;
            continue;
        }
        Rational y = c / Rational(static_cast<long>(s));
        mpz_class den = y.get_den();
        m = lcm(m, den.get_si());
    }
    return m;
}

void check_length(const Fan& fan, const QDivisor& d) {
    if (d.size() != fan.ray_count())
        throw InputError("divisor has " + std::to_string(d.size()) + " coefficients, fan has " +
                         std::to_string(fan.ray_count()) + " rays");
}

} // namespace

std::variant<QCartierData, NotCartier> q_cartier_data(const Fan& fan, const QDivisor& d) {
    check_length(fan, d);
    QCartierData out;
    for (std::size_t k = 0; k < fan.max_cones().size(); ++k) {
        const Cone& c = fan.max_cones()[k];
        auto x = solve(to_rational(local_matrix(fan, c)), local_rhs(c, d));
        if (!x)
            return NotCartier{k, c, false, "local system on cone " + c.str() + " is inconsistent"};
        out.u.push_back(std::move(*x));
    }
    return out;
}

std::variant<CartierData, NotCartier> cartier_data(const Fan& fan, const QDivisor& d) {
    check_length(fan, d);
    const bool q_cartier = std::holds_alternative<QCartierData>(q_cartier_data(fan, d));
    CartierData out;
    for (std::size_t k = 0; k < fan.max_cones().size(); ++k) {
        const Cone& c = fan.max_cones()[k];
        for (auto r : c.rays())
            if (!is_integral(d.coeffs[r]))
                return NotCartier{k, c, q_cartier, "coefficient of ray " + std::to_string(r) + " is not integral"};
        IntMatrix v = local_matrix(fan, c);
        IntVector b;
        for (auto r : c.rays())
            b.push_back(-to_int(d.coeffs[r]));
        auto x = solve_integer(v, b);
        if (!x) {
            std::string why = q_cartier ? "no integral solution on cone " : "local system inconsistent on cone ";
            return NotCartier{k, c, q_cartier, why + c.str()};
        }
        out.u.push_back(std::move(*x));
    }
    // rays outside every maximal cone still carry coefficients; they must be integral
    if (!d.is_integral())
        return NotCartier{0, fan.max_cones().empty() ? Cone{} : fan.max_cones()[0], q_cartier,
                          "divisor has non-integral coefficients"};
    return out;
}

bool is_cartier(const Fan& fan, const QDivisor& d) {
    return std::holds_alternative<CartierData>(cartier_data(fan, d));
}

bool is_q_cartier(const Fan& fan, const QDivisor& d) {
    return std::holds_alternative<QCartierData>(q_cartier_data(fan, d));
}

std::optional<Int> q_cartier_index(const Fan& fan, const QDivisor& d) {
    check_length(fan, d);
    Int m = 1;
    for (const auto& q : d.coeffs)
        m = lcm(m, q.get_den().get_si());
    for (const auto& c : fan.max_cones()) {
        auto k = min_integral_multiple(local_matrix(fan, c), local_rhs(c, d));
        if (!k)
            return std::nullopt;
        m = lcm(m, *k);
    }
    return m;
}

Rational support_function_eval(const Fan& fan, const QCartierData& cd, std::span<const Rational> v) {
    std::size_t k = fan.locate(v);
    if (k == Fan::npos)
        throw InputError("point lies outside the support of the fan");
    return dot(std::span<const Rational>(cd.u[k]), v);
}

Rational support_function_eval(const Fan& fan, const QCartierData& cd, std::span<const Int> v) {
    RationalVector q = to_rational(v);
    return support_function_eval(fan, cd, std::span<const Rational>(q));
}

namespace {

bool wall_inequalities(const Fan& fan, const QCartierData& cd, bool strict) {
    if (cd.u.size() != fan.max_cones().size())
        throw InputError("Cartier data does not match the fan");
    for (const auto& w : walls(fan)) {
        for (int side = 0; side < 2; ++side) {
            std::size_t s1 = side ? w.sigma2 : w.sigma1;
            std::size_t s2 = side ? w.sigma1 : w.sigma2;
            const Cone& c1 = fan.max_cones()[s1];
            for (auto i : fan.max_cones()[s2].rays()) {
                if (c1.contains_ray(i))
                    continue;
                Rational on2 = dot(std::span<const Rational>(cd.u[s2]), std::span<const Int>(fan.ray(i)));
                Rational on1 = dot(std::span<const Rational>(cd.u[s1]), std::span<const Int>(fan.ray(i)));
                if (strict ? !(on2 < on1) : !(on2 <= on1))
                    return false;
            }
        }
    }
    return true;
}

} // namespace

bool is_convex(const Fan& fan, const QCartierData& cd) { return wall_inequalities(fan, cd, false); }

bool is_strictly_convex(const Fan& fan, const QCartierData& cd) { return wall_inequalities(fan, cd, true); }

// ---- polytopes -------------------------------------------------------------

bool DivisorPolytope::contains(std::span<const Rational> u) const {
    for (std::size_t i = 0; i < normals.size(); ++i)
        if (sgn(dot(u, std::span<const Int>(normals[i])) + offsets[i]) < 0)
            return false;
    return true;
}

bool DivisorPolytope::contains(std::span<const Int> u) const {
    for (std::size_t i = 0; i < normals.size(); ++i)
        if (sgn(Rational(static_cast<long>(dot(u, normals[i]))) + offsets[i]) < 0)
            return false;
    return true;
}

DivisorPolytope polytope(const Fan& fan, const QDivisor& d) {
    check_length(fan, d);
    DivisorPolytope p;
    const std::size_t n = fan.rank();
    p.ambient = n;
    p.normals = fan.rays();
    p.offsets = d.coeffs;

    HalfspaceCone recession;
    recession.ambient = n;
    recession.inequalities = fan.rays();
    p.bounded = span_rank(fan.rays(), n) == n && extreme_rays(recession).empty();

    std::set<RationalVector> verts;
    const std::size_t m = fan.ray_count();
    std::vector<std::size_t> idx(n);
    std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t start, std::size_t depth) {
        if (depth == n) {
            RationalMatrix a(n, n);
            RationalVector b(n);
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t j = 0; j < n; ++j)
                    a(r, j) = Rational(static_cast<long>(fan.ray(idx[r])[j]));
                b[r] = -d.coeffs[idx[r]];
            }
            if (rank(a) != n)
                return;
            auto x = solve(a, b);
            if (x && p.contains(std::span<const Rational>(*x)))
                verts.insert(std::move(*x));
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            idx[depth] = i;
            pick(i + 1, depth + 1);
        }
    };
    pick(0, 0);
    p.vertices.assign(verts.begin(), verts.end());
    if (p.vertices.empty()) {
        p.dim = -1;
    } else {
        RationalMatrix diffs(p.vertices.size(), n);
        for (std::size_t i = 0; i < p.vertices.size(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                diffs(i, j) = p.vertices[i][j] - p.vertices[0][j];
        p.dim = static_cast<int>(rank(diffs));
    }
    return p;
}

std::vector<LatticeVector> lattice_points(const DivisorPolytope& p) {
    if (!p.bounded)
        throw InputError("lattice_points: polytope is unbounded");
    std::vector<LatticeVector> out;
    if (p.vertices.empty())
        return out;
    const std::size_t n = p.ambient;
    IntVector lo(n), hi(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational mn = p.vertices[0][j], mx = p.vertices[0][j];
        for (const auto& v : p.vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = ceil(mn);
        hi[j] = floor(mx);
        if (lo[j] > hi[j])
            return out;
    }
    IntVector u = lo;
    for (;;) {
        if (p.contains(std::span<const Int>(u)))
            out.push_back(u);
        std::size_t j = 0;
        while (j < n && u[j] == hi[j]) {
            u[j] = lo[j];
            ++j;
        }
        if (j == n)
            break;
        ++u[j];
    }
    return out;
}

} // namespace torix
