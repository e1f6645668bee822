#include "torix/positivity.hpp"

#include <map>
#include <random>
#include <set>

#include "torix/errors.hpp"

namespace torix {

namespace {

CartierData require_cartier(const Fan& fan, const WeilDivisor& l) {
    auto cd = cartier_data(fan, l);
    if (auto* nc = std::get_if<NotCartier>(&cd))
        throw InputError("divisor " + l.str() + " is not Cartier: " + nc->reason);
    return std::get<CartierData>(std::move(cd));
}

void require_smooth_complete(const Fan& fan) {
    if (!is_smooth(fan))
        throw InputError("fan is not smooth");
    walls(fan); // throws when some (n-1)-cone is not shared by exactly two maximal cones
}

void require_ray(const Fan& fan, std::size_t j) {
    if (j >= fan.ray_count())
        throw InputError("ray index " + std::to_string(j) + " out of range");
}

std::size_t single_outside(const Fan& fan, std::size_t sigma, const Cone& tau) {
    std::size_t out = Fan::npos;
    for (auto r : fan.max_cones()[sigma].rays())
        if (!tau.contains_ray(r)) {
            if (out != Fan::npos)
                return Fan::npos;
            out = r;
        }
    return out;
}

} // namespace

PositivityProfile positivity_profile(const Fan& fan, const WeilDivisor& l) {
    CartierData cd = require_cartier(fan, l);
    auto degs = wall_degrees(fan, l);
    PositivityProfile p;
    p.nef = true;
    p.ample = true;
    for (const auto& wd : degs) {
        if (!p.witness || wd.value < p.min_degree) {
            p.min_degree = wd.value;
            p.witness = wd.wall;
        }
        p.nef = p.nef && wd.value >= 0;
        p.ample = p.ample && wd.value > 0;
    }
    p.globally_generated = is_convex(fan, cd);
    if (p.globally_generated != p.nef)
        throw TheoremViolation("divisor " + l.str() + ": convexity of the support function (" +
                               (p.globally_generated ? "true" : "false") + ") disagrees with nonnegative curve degrees");
    if (is_strictly_convex(fan, cd) != p.ample)
        throw TheoremViolation("divisor " + l.str() + ": strict convexity disagrees with positive curve degrees");
    if (is_smooth(fan))
        p.very_ample = p.ample;
    if (p.nef)
        p.big = polytope(fan, l).dim == static_cast<int>(fan.rank());
    return p;
}

bool is_nef(const Fan& fan, const WeilDivisor& l) {
    require_cartier(fan, l);
    auto degs = wall_degrees(fan, l);
    return std::all_of(degs.begin(), degs.end(), [](const WallDegree& w) { return w.value >= 0; });
}

bool is_ample(const Fan& fan, const WeilDivisor& l) {
    require_cartier(fan, l);
    auto degs = wall_degrees(fan, l);
    return std::all_of(degs.begin(), degs.end(), [](const WallDegree& w) { return w.value > 0; });
}

bool is_globally_generated(const Fan& fan, const WeilDivisor& l) { return is_convex(fan, require_cartier(fan, l)); }

std::optional<bool> is_very_ample(const Fan& fan, const WeilDivisor& l) {
    if (!is_smooth(fan))
        return std::nullopt;
    return is_ample(fan, l);
}

bool is_big(const Fan& fan, const WeilDivisor& l) {
    if (!is_nef(fan, l))
        throw InputError("bigness is only decided here for nef divisors; " + l.str() + " is not nef");
    return polytope(fan, l).dim == static_cast<int>(fan.rank());
}

std::vector<Wall> base_locus_curves(const Fan& fan, const WeilDivisor& l) {
    require_cartier(fan, l);
    std::vector<Wall> out;
    for (const auto& wd : wall_degrees(fan, l))
        if (wd.value < 0)
            out.push_back(wd.wall);
    return out;
}

bool has_distinct_local_data(const Fan& fan, const WeilDivisor& l) {
    CartierData cd = require_cartier(fan, l);
    std::set<LatticeVector> seen(cd.u.begin(), cd.u.end());
    return seen.size() == cd.u.size();
}

Factorization nef_big_factorization(const Fan& fan, const WeilDivisor& l) {
    if (!is_big(fan, l))
        throw InputError("divisor " + l.str() + " is nef but not big");
    CartierData cd = require_cartier(fan, l);
    std::map<LatticeVector, std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < cd.u.size(); ++k)
        groups[cd.u[k]].push_back(k);

    const std::size_t n = fan.rank();
    std::vector<std::vector<std::size_t>> coarse_cones;
    std::set<std::size_t> used;
    for (const auto& [u, members] : groups) {
        HalfspaceCone normal;
        normal.ambient = n;
        for (const auto& [other, unused] : groups) {
            if (other == u)
                continue;
            IntVector diff(n);
            for (std::size_t j = 0; j < n; ++j)
                diff[j] = checked_sub(other[j], u[j]);
            normal.inequalities.push_back(primitive(diff));
        }
        std::vector<std::size_t> cone;
        for (const auto& r : extreme_rays(normal)) {
            auto it = std::find(fan.rays().begin(), fan.rays().end(), r);
            if (it == fan.rays().end())
                throw InternalInconsistency("normal fan ray " + to_string(r) + " is not a ray of the input fan");
            cone.push_back(static_cast<std::size_t>(it - fan.rays().begin()));
        }
        used.insert(cone.begin(), cone.end());
        coarse_cones.push_back(std::move(cone));
    }

    std::vector<std::size_t> ray_map(used.begin(), used.end());
    std::vector<std::size_t> to_coarse(fan.ray_count(), Fan::npos);
    std::vector<LatticeVector> rays;
    WeilDivisor descended;
    for (std::size_t i = 0; i < ray_map.size(); ++i) {
        to_coarse[ray_map[i]] = i;
        rays.push_back(fan.ray(ray_map[i]));
        descended.coeffs.push_back(l[ray_map[i]]);
    }
    std::vector<Cone> cones;
    for (auto& c : coarse_cones) {
        for (auto& r : c)
            r = to_coarse[r];
        cones.emplace_back(c);
    }
    Factorization f{Fan(n, std::move(rays), cones), {}, std::move(ray_map), std::move(descended)};
    if (!validate_fan(f.coarse).empty())
        throw InternalInconsistency("normal fan of the polytope is not a valid fan");

    std::size_t g = 0;
    f.cone_map.assign(fan.max_cones().size(), Fan::npos);
    for (const auto& [u, members] : groups) {
        auto it = std::find(f.coarse.max_cones().begin(), f.coarse.max_cones().end(), cones[g]);
        for (auto k : members)
            f.cone_map[k] = static_cast<std::size_t>(it - f.coarse.max_cones().begin());
        ++g;
    }
    if (!is_ample(f.coarse, f.divisor))
        throw TheoremViolation("factorization: descended divisor " + f.divisor.str() + " is not ample");
    if (pullback(f.coarse, f.divisor, fan) != QDivisor(l))
        throw TheoremViolation("factorization: pullback of the descended divisor differs from " + l.str());
    return f;
}

std::optional<std::string> projectivity_warning(const Fan& fan, std::size_t attempts) {
    try {
        walls(fan);
    } catch (const InputError& e) {
        return std::string("fan is not complete: ") + e.what();
    }
    std::mt19937_64 rng(0x70726f6aULL);
    for (std::size_t t = 0; t < attempts; ++t) {
        WeilDivisor d{IntVector(fan.ray_count())};
        for (auto& c : d.coeffs)
            c = static_cast<Int>(rng() % (2 + t / 10));
        auto cd = cartier_data(fan, d);
        if (auto* c = std::get_if<CartierData>(&cd); c && is_strictly_convex(fan, *c))
            return std::nullopt;
    }
    return "no ample class found among " + std::to_string(attempts) + " random divisors; projectivity unverified";
}

std::string to_string(FujitaOutcome o) {
    switch (o) {
    case FujitaOutcome::Holds:
        return "Holds";
    case FujitaOutcome::ProjectiveSpaceException:
        return "ProjectiveSpaceException";
    case FujitaOutcome::HypothesisNotMet:
        return "HypothesisNotMet";
    }
    return "?";
}

namespace {

FujitaVerdict fujita(const Fan& fan, const WeilDivisor& l, const std::vector<std::size_t>& primes, bool very_ample) {
    require_smooth_complete(fan);
    require_cartier(fan, l);
    std::set<std::size_t> distinct;
    for (auto j : primes) {
        require_ray(fan, j);
        if (!distinct.insert(j).second)
            throw InputError("prime divisor " + std::to_string(j) + " listed twice");
    }
    const Int n = static_cast<Int>(fan.rank());
    const Int threshold = very_ample ? n + 1 : n;

    FujitaVerdict v;
    v.residual = l;
    for (auto j : primes)
        v.residual.coeffs[j] -= 1;
    WallDegree m = min_curve_degree(fan, l);
    v.min_degree = m.value;
    if (m.value < threshold) {
        v.outcome = FujitaOutcome::HypothesisNotMet;
        v.failing_wall = m.wall;
        v.detail = "curve degree " + to_string(m.value) + " < " + std::to_string(threshold) + " at wall " + m.wall.tau.str();
        return v;
    }
    if (is_projective_space(fan) && primes.size() == static_cast<std::size_t>(n + 1) &&
        linearly_equivalent(fan, l, threshold * prime_divisor(fan, 0))) {
        v.outcome = FujitaOutcome::ProjectiveSpaceException;
        v.detail = "X = P^" + std::to_string(n) + ", L = O(" + std::to_string(threshold) + "), m = " +
                   std::to_string(n + 1);
        return v;
    }
    bool ok = very_ample ? is_ample(fan, v.residual) : is_globally_generated(fan, v.residual);
    if (!ok)
        throw TheoremViolation(std::string("L - sum D_j = ") + v.residual.str() + " is not " +
                               (very_ample ? "very ample" : "globally generated") + " although every curve degree of " +
                               l.str() + " is >= " + std::to_string(threshold));
    v.outcome = FujitaOutcome::Holds;
    v.detail = std::string("L - sum D_j = ") + v.residual.str() + (very_ample ? " is very ample" : " is globally generated");
    return v;
}

} // namespace

FujitaVerdict fujita_global_generation(const Fan& fan, const WeilDivisor& l, const std::vector<std::size_t>& primes) {
    return fujita(fan, l, primes, false);
}

FujitaVerdict fujita_very_ample(const Fan& fan, const WeilDivisor& l, const std::vector<std::size_t>& primes) {
    return fujita(fan, l, primes, true);
}

FujitaVerdict adjoint_check(const Fan& fan, const WeilDivisor& l, bool very_ample) {
    std::vector<std::size_t> all(fan.ray_count());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    return fujita(fan, l, all, very_ample);
}

bool induction_step_check(const Fan& fan, const WeilDivisor& l, Int bound, std::size_t j) {
    require_smooth_complete(fan);
    require_ray(fan, j);
    if (bound < 1)
        throw InputError("induction step needs l >= 1");
    if (min_curve_degree(fan, l).value < bound)
        throw InputError("some curve degree of " + l.str() + " is below " + std::to_string(bound));
    return min_curve_degree(fan, l - prime_divisor(fan, j)).value >= bound - 1;
}

Obstruction two_divisor_gg_obstruction(const Fan& fan, const WeilDivisor& l, std::size_t j1, std::size_t j2) {
    require_smooth_complete(fan);
    require_ray(fan, j1);
    require_ray(fan, j2);
    if (j1 == j2)
        throw InputError("the two prime divisors must be distinct");
    if (!is_ample(fan, l))
        throw InputError("divisor " + l.str() + " is not ample");
    Obstruction o;
    o.obstructed = !is_globally_generated(fan, l - prime_divisor(fan, j1) - prime_divisor(fan, j2));
    for (const auto& wd : wall_degrees(fan, l)) {
        if (wd.value != 1)
            continue;
        std::size_t a = single_outside(fan, wd.wall.sigma1, wd.wall.tau);
        std::size_t b = single_outside(fan, wd.wall.sigma2, wd.wall.tau);
        if ((a == j1 && b == j2) || (a == j2 && b == j1)) {
            o.witness = wd.wall;
            break;
        }
    }
    if (o.obstructed != o.witness.has_value())
        throw TheoremViolation("obstruction for L - D_" + std::to_string(j1) + " - D_" + std::to_string(j2) +
                               " with L = " + l.str() + ": global generation and wall witness disagree");
    return o;
}

Obstruction ample_minus_divisor_obstruction(const Fan& fan, const WeilDivisor& l, std::size_t j) {
    require_smooth_complete(fan);
    require_ray(fan, j);
    if (!is_ample(fan, l))
        throw InputError("divisor " + l.str() + " is not ample");
    Obstruction o;
    o.obstructed = !is_ample(fan, l - prime_divisor(fan, j));
    for (const auto& wd : wall_degrees(fan, l)) {
        if (wd.value != 1)
            continue;
        if (single_outside(fan, wd.wall.sigma1, wd.wall.tau) == j ||
            single_outside(fan, wd.wall.sigma2, wd.wall.tau) == j) {
            o.witness = wd.wall;
            break;
        }
    }
    if (o.obstructed != o.witness.has_value())
        throw TheoremViolation("obstruction for L - D_" + std::to_string(j) + " with L = " + l.str() +
                               ": ampleness and wall witness disagree");
    return o;
}

} // namespace torix
