#include "torix/intersection.hpp"

#include "torix/errors.hpp"

namespace torix {

namespace {

struct IntegralData {
    Int multiple;
    IntVector coeffs; // of multiple * D
    CartierData local;
};

IntegralData integral_data(const Fan& fan, const QDivisor& d) {
    auto m = q_cartier_index(fan, d);
    if (!m)
        throw InputError("divisor " + d.str() + " is not Q-Cartier");
    QDivisor md = Rational(static_cast<long>(*m)) * d;
    auto cd = cartier_data(fan, md);
    if (!std::holds_alternative<CartierData>(cd))
        throw InternalInconsistency("q_cartier_index returned a non-Cartier multiple");
    return {*m, md.to_weil().coeffs, std::get<CartierData>(std::move(cd))};
}

// b / c seen from sigma_from, using a ray of sigma_to outside tau.
Rational side_degree(const Fan& fan, const IntegralData& data, const IntVector& orient, std::size_t from,
                     std::size_t to, const Cone& tau, bool smooth) {
    std::optional<Rational> value;
    for (auto r : fan.max_cones()[to].rays()) {
        if (tau.contains_ray(r))
            continue;
        const auto& v = fan.ray(r);
        Int c = dot(orient, v);
        if (c <= 0)
            throw InternalInconsistency("ray " + std::to_string(r) + " does not lie on the far side of wall " +
                                        tau.str());
        if (smooth && c != 1)
            throw InternalInconsistency("lattice index " + std::to_string(c) + " on a smooth wall " + tau.str());
        Int b = checked_add(data.coeffs[r], dot(data.local.u[from], v));
        Rational q(static_cast<long>(b), static_cast<long>(c));
        q.canonicalize();
        if (value && *value != q)
            throw InternalInconsistency("wall degree depends on the choice of ray at " + tau.str());
        value = q;
    }
    if (!value)
        throw InternalInconsistency("maximal cone has no ray outside wall " + tau.str());
    return *value;
}

Rational degree(const Fan& fan, const IntegralData& data, const Wall& w, bool smooth) {
    IntMatrix proj = quotient_projection(fan, w.tau);
    if (proj.rows() != 1)
        throw InputError("cone " + w.tau.str() + " is not a wall");
    IntVector orient = proj.row_vector(0);
    // orient positively on the sigma2 side
    for (auto r : fan.max_cones()[w.sigma2].rays())
        if (!w.tau.contains_ray(r)) {
            if (dot(orient, fan.ray(r)) < 0)
                for (auto& x : orient)
                    x = -x;
            break;
        }
    IntVector reversed = orient;
    for (auto& x : reversed)
        x = -x;
    Rational a = side_degree(fan, data, orient, w.sigma1, w.sigma2, w.tau, smooth);
    Rational b = side_degree(fan, data, reversed, w.sigma2, w.sigma1, w.tau, smooth);
    if (a != b)
        throw InternalInconsistency("wall degree at " + w.tau.str() + " changes when the sides are swapped");
    return a / Rational(static_cast<long>(data.multiple));
}

} // namespace

IntMatrix quotient_projection(const Fan& fan, const Cone& tau) {
    const std::size_t n = fan.rank();
    if (tau.empty())
        return IntMatrix::identity(n);
    IntMatrix t(n, tau.size());
    for (std::size_t k = 0; k < tau.size(); ++k)
        for (std::size_t j = 0; j < n; ++j)
            t(j, k) = fan.ray(tau.rays()[k])[j];
    return left_kernel(t);
}

Rational wall_curve_degree(const Fan& fan, const QDivisor& d, const Wall& wall) {
    return degree(fan, integral_data(fan, d), wall, is_smooth(fan));
}

std::vector<WallDegree> wall_degrees(const Fan& fan, const QDivisor& d) {
    IntegralData data = integral_data(fan, d);
    const bool smooth = is_smooth(fan);
    std::vector<WallDegree> out;
    for (const auto& w : walls(fan))
        out.push_back({w, degree(fan, data, w, smooth)});
    return out;
}

WallDegree min_curve_degree(const Fan& fan, const QDivisor& d) {
    auto all = wall_degrees(fan, d);
    if (all.empty())
        throw InputError("fan has no walls");
    std::size_t best = 0;
    for (std::size_t i = 1; i < all.size(); ++i)
        if (all[i].value < all[best].value)
            best = i;
    return all[best];
}

bool is_refinement(const Fan& fine, const Fan& coarse) {
    if (fine.rank() != coarse.rank())
        return false;
    for (const auto& c : fine.max_cones()) {
        bool inside = false;
        for (std::size_t k = 0; k < coarse.max_cones().size() && !inside; ++k) {
            const auto& h = coarse.max_cone_geometry(k).halfspaces;
            inside = std::all_of(c.rays().begin(), c.rays().end(),
                                 [&](std::size_t r) { return h.contains(std::span<const Int>(fine.ray(r))); });
        }
        if (!inside)
            return false;
    }
    return true;
}

QDivisor pullback(const Fan& coarse, const QDivisor& d, const Fan& fine) {
    if (!is_refinement(fine, coarse))
        throw InputError("pullback: target fan does not refine the source fan");
    auto q = q_cartier_data(coarse, d);
    if (!std::holds_alternative<QCartierData>(q))
        throw InputError("pullback: divisor " + d.str() + " is not Q-Cartier");
    const auto& cd = std::get<QCartierData>(q);
    QDivisor out;
    for (const auto& v : fine.rays())
        out.coeffs.push_back(-support_function_eval(coarse, cd, std::span<const Int>(v)));
    return out;
}

Restriction restrict_to_orbit(const Fan& fan, const QDivisor& d, const Cone& tau) {
    auto q = q_cartier_data(fan, d);
    if (!std::holds_alternative<QCartierData>(q))
        throw InputError("restriction: divisor " + d.str() + " is not Q-Cartier");
    auto over = fan.max_cones_containing(tau);
    if (over.empty())
        throw InputError("cone " + tau.str() + " is not in the fan");
    const RationalVector& u0 = std::get<QCartierData>(q).u[over.front()];
    StarFan star = star_fan(fan, tau);
    QDivisor out;
    for (std::size_t s = 0; s < star.fan.ray_count(); ++s) {
        std::size_t r = star.parent_ray[s];
        IntVector image = multiply(star.projection, fan.ray(r));
        Int k = 0;
        for (std::size_t j = 0; j < image.size(); ++j)
            if (star.fan.ray(s)[j] != 0) {
                k = image[j] / star.fan.ray(s)[j];
                break;
            }
        if (k <= 0)
            throw InternalInconsistency("star ray is not a positive multiple of its parent image");
        Rational shifted = d.coeffs[r] + dot(std::span<const Rational>(u0), std::span<const Int>(fan.ray(r)));
        out.coeffs.push_back(shifted / Rational(static_cast<long>(k)));
    }
    return {std::move(star), std::move(out)};
}

Restriction restrict_to_divisor(const Fan& fan, const QDivisor& d, std::size_t j) {
    if (!is_smooth(fan))
        throw InputError("restriction to a prime divisor requires a smooth fan");
    if (j >= fan.ray_count())
        throw InputError("ray index " + std::to_string(j) + " out of range");
    return restrict_to_orbit(fan, d, Cone{j});
}

} // namespace torix
