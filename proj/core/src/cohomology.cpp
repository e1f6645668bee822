#include "torix/cohomology.hpp"

#include <bit>
#include <functional>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "torix/errors.hpp"
#include "torix/intersection.hpp"
#include "torix/parallel.hpp"
#include "torix/positivity.hpp"

namespace torix {

namespace {

constexpr std::size_t max_cech_cones = 22;

std::uint64_t all_rays(std::size_t d) { return d >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1; }

// tau[L] = ray mask of the intersection of the maximal cones in L; tau[0] is
// the full ray set (the empty intersection).
std::vector<std::uint64_t> intersection_masks(const Fan& fan) {
    const std::size_t r = fan.max_cones().size();
    if (r > max_cech_cones)
        throw InputError("Cech engine supports at most " + std::to_string(max_cech_cones) + " maximal cones");
    std::vector<std::uint64_t> tau(std::size_t{1} << r);
    tau[0] = all_rays(fan.ray_count());
    for (std::size_t l = 1; l < tau.size(); ++l) {
        std::size_t low = static_cast<std::size_t>(std::countr_zero(l));
        tau[l] = tau[l & (l - 1)] & fan.max_cones()[low].mask();
    }
    return tau;
}

Rational sign_before(std::uint64_t set, std::size_t k) {
    return std::popcount(set & ((std::uint64_t{1} << k) - 1)) % 2 ? Rational(-1) : Rational(1);
}

// Cohomology of the complex on subsets L of r maximal cones whose terms are
// one-dimensional where present[L] holds (an up-set, or a down-set giving the
// cochains of a simplicial complex) and whose differential adds one cone with
// the usual alternating sign. Level = |L| - 1, or |L| when the empty subset
// is part of the complex.
std::vector<std::size_t> subset_complex_dims(std::size_t r, const std::vector<char>& present, bool augmented) {
    const std::size_t levels = augmented ? r + 1 : r;
    std::vector<std::size_t> count(levels, 0);
    std::vector<EchelonBasis> image(levels);
    for (std::size_t l = augmented ? 0 : 1; l < present.size(); ++l) {
        if (!present[l])
            continue;
        std::size_t p = static_cast<std::size_t>(std::popcount(l)) - (augmented ? 0 : 1);
        ++count[p];
        SparseVector row;
        for (std::size_t k = 0; k < r; ++k)
            if (!((l >> k) & 1U) && present[l | (std::size_t{1} << k)])
                row.emplace_back(l | (std::size_t{1} << k), sign_before(l, k));
        if (!row.empty())
            image[p].insert(std::move(row));
    }
    std::vector<std::size_t> h(levels);
    for (std::size_t p = 0; p < levels; ++p)
        h[p] = count[p] - image[p].rank() - (p > 0 ? image[p - 1].rank() : 0);
    return h;
}

std::uint64_t positive_mask(const Fan& fan, const WeilDivisor& d, std::span<const Int> u) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < fan.ray_count(); ++i)
        if (checked_add(d[i], dot(u, fan.ray(i))) >= 0)
            m |= std::uint64_t{1} << i;
    return m;
}

// The present subsets U form a subcomplex of the cochains of the full
// simplex, with quotient the cochains of the complementary simplicial complex
// D. The simplex is acyclic, so H^p(U) = reduced H^{p-1}(D); the smaller side
// is computed.
std::vector<std::size_t> cech_dims_for_mask(const std::vector<std::uint64_t>& tau, std::size_t r, std::uint64_t positive) {
    std::vector<char> present(tau.size());
    std::size_t count = 0;
    for (std::size_t l = 1; l < tau.size(); ++l) {
        present[l] = (tau[l] & ~positive) == 0;
        count += present[l];
    }
    if (2 * count <= tau.size())
        return subset_complex_dims(r, present, false);
    for (std::size_t l = 1; l < tau.size(); ++l)
        present[l] = !present[l];
    present[0] = 1;
    std::vector<std::size_t> h = subset_complex_dims(r, present, true);
    h.pop_back();
    return h;
}

std::vector<std::size_t> simplicial_dims_for_mask(const Fan& fan, std::uint64_t positive) {
    const std::uint64_t negative = all_rays(fan.ray_count()) & ~positive;
    const std::size_t n = fan.rank();
    std::unordered_set<std::uint64_t> faces;
    for (const auto& c : fan.cones())
        if ((c.mask() & ~negative) == 0)
            faces.insert(c.mask());
    // faces with t vertices sit in reduced cochain degree t - 1
    std::vector<std::size_t> count(n + 1, 0);
    std::vector<EchelonBasis> image(n + 1);
    for (std::uint64_t f : faces) {
        std::size_t t = static_cast<std::size_t>(std::popcount(f));
        ++count[t];
        SparseVector row;
        for (std::size_t k = 0; k < fan.ray_count(); ++k) {
            std::uint64_t bit = std::uint64_t{1} << k;
            if ((negative & bit) && !(f & bit) && faces.count(f | bit))
                row.emplace_back(static_cast<std::size_t>(f | bit), sign_before(f, k));
        }
        if (!row.empty())
            image[t].insert(std::move(row));
    }
    // H^i_u(O(D)) = reduced H^{i-1}, i.e. the t = i term
    std::vector<std::size_t> h(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        h[i] = count[i] - image[i].rank() - (i > 0 ? image[i - 1].rank() : 0);
    return h;
}

void require_complete(const Fan& fan, const char* what) {
    if (!is_complete(fan))
        throw InputError(std::string(what) + " needs a complete fan");
}

void require_smooth_complete(const Fan& fan, const char* what) {
    if (!is_smooth(fan))
        throw InputError(std::string(what) + " needs a smooth fan");
    require_complete(fan, what);
}

template <class Visit>
void for_each_in_box(const DegreeBox& box, Visit&& visit) {
    const std::size_t n = box.lo.size();
    IntVector u = box.lo;
    for (;;) {
        visit(std::span<const Int>(u));
        std::size_t j = 0;
        while (j < n && u[j] == box.hi[j]) {
            u[j] = box.lo[j];
            ++j;
        }
        if (j == n)
            return;
        ++u[j];
    }
}

// A character at distance 1..3 outside the box along a random face.
IntVector outside_point(const DegreeBox& box, std::mt19937_64& rng) {
    const std::size_t n = box.lo.size();
    IntVector u(n);
    for (std::size_t j = 0; j < n; ++j)
        u[j] = box.lo[j] + static_cast<Int>(rng() % static_cast<std::uint64_t>(box.hi[j] - box.lo[j] + 1));
    std::size_t face = rng() % n;
    Int step = 1 + static_cast<Int>(rng() % 3);
    u[face] = (rng() % 2) ? box.hi[face] + step : box.lo[face] - step;
    return u;
}

std::vector<std::size_t> truncate_levels(std::vector<std::size_t> dims, std::size_t n, const char* what) {
    for (std::size_t i = n + 1; i < dims.size(); ++i)
        if (dims[i] != 0)
            throw InternalInconsistency(std::string(what) + ": nonzero cohomology above the dimension");
    dims.resize(n + 1, 0);
    return dims;
}

} // namespace

std::size_t DegreeBox::size() const {
    std::size_t s = 1;
    for (std::size_t j = 0; j < lo.size(); ++j)
        s *= static_cast<std::size_t>(hi[j] - lo[j] + 1);
    return s;
}

DegreeBox degree_region(const Fan& fan, const WeilDivisor& d, const std::vector<Int>& shifts) {
    const std::size_t n = fan.rank(), m = fan.ray_count();
    if (d.size() != m)
        throw InputError("divisor has " + std::to_string(d.size()) + " coefficients, fan has " + std::to_string(m) +
                         " rays");
    std::optional<RationalVector> lo, hi;
    std::vector<std::size_t> idx(n);
    std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t start, std::size_t depth) {
        if (depth == n) {
            RationalMatrix a(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t j = 0; j < n; ++j)
                    a(r, j) = Rational(static_cast<long>(fan.ray(idx[r])[j]));
            if (rank(a) != n)
                return;
            std::vector<std::size_t> choice(n, 0);
            for (;;) {
                RationalVector b(n);
                for (std::size_t r = 0; r < n; ++r)
                    b[r] = Rational(static_cast<long>(-d[idx[r]] + shifts[choice[r]]));
                auto x = solve(a, b);
                if (!x)
                    throw InternalInconsistency("full-rank system without solution");
                if (!lo) {
                    lo = *x;
                    hi = *x;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    (*lo)[j] = std::min((*lo)[j], (*x)[j]);
                    (*hi)[j] = std::max((*hi)[j], (*x)[j]);
                }
                std::size_t k = 0;
                while (k < n && choice[k] + 1 == shifts.size()) {
                    choice[k] = 0;
                    ++k;
                }
                if (k == n)
                    break;
                ++choice[k];
            }
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            idx[depth] = i;
            pick(i + 1, depth + 1);
        }
    };
    pick(0, 0);
    DegreeBox box{IntVector(n, -1), IntVector(n, 1)};
    if (lo)
        for (std::size_t j = 0; j < n; ++j) {
            box.lo[j] = floor((*lo)[j]) - 1;
            box.hi[j] = ceil((*hi)[j]) + 1;
        }
    return box;
}

DegreeVector fine_degree(const Fan& fan, const WeilDivisor& d, std::span<const Int> u) {
    DegreeVector alpha(fan.ray_count());
    for (std::size_t i = 0; i < alpha.size(); ++i)
        alpha[i] = checked_add(d[i], dot(u, fan.ray(i)));
    return alpha;
}

std::vector<std::size_t> cech_degree_dims(const Fan& fan, const WeilDivisor& d, std::span<const Int> u) {
    if (u.size() != fan.rank() || d.size() != fan.ray_count())
        throw InputError("degree or divisor has the wrong length");
    auto tau = intersection_masks(fan);
    return cech_dims_for_mask(tau, fan.max_cones().size(), positive_mask(fan, d, u));
}

std::size_t cech_degree_piece(const Fan& fan, const WeilDivisor& d, std::span<const Int> u, std::size_t i) {
    auto dims = cech_degree_dims(fan, d, u);
    return i < dims.size() ? dims[i] : 0;
}

std::vector<std::size_t> simplicial_degree_dims(const Fan& fan, const WeilDivisor& d, std::span<const Int> u) {
    if (u.size() != fan.rank() || d.size() != fan.ray_count())
        throw InputError("degree or divisor has the wrong length");
    if (!is_simplicial(fan))
        throw InputError("the negative-ray complex needs a simplicial fan");
    return simplicial_dims_for_mask(fan, positive_mask(fan, d, u));
}

CohomologyTable cohomology_table(const Fan& fan, const WeilDivisor& d, const CohomologyOptions& opts) {
    require_complete(fan, "cohomology_table");
    if (opts.engine == Engine::Simplicial && !is_simplicial(fan))
        throw InputError("the negative-ray complex needs a simplicial fan");
    const std::size_t n = fan.rank();
    DegreeBox box = degree_region(fan, d, {0, -1});

    std::map<std::uint64_t, std::size_t> multiplicity;
    for_each_in_box(box, [&](std::span<const Int> u) { ++multiplicity[positive_mask(fan, d, u)]; });

    std::vector<std::uint64_t> masks;
    for (const auto& [m, c] : multiplicity)
        masks.push_back(m);
    std::vector<std::uint64_t> tau;
    if (opts.engine == Engine::General)
        tau = intersection_masks(fan);
    std::vector<std::vector<std::size_t>> dims(masks.size());
    parallel_for(masks.size(), [&](std::size_t k) {
        dims[k] = opts.engine == Engine::General
                      ? truncate_levels(cech_dims_for_mask(tau, fan.max_cones().size(), masks[k]), n, "cohomology_table")
                      : simplicial_dims_for_mask(fan, masks[k]);
    });

    CohomologyTable t;
    t.h.assign(n + 1, 0);
    std::unordered_map<std::uint64_t, std::size_t> where;
    for (std::size_t k = 0; k < masks.size(); ++k) {
        where[masks[k]] = k;
        for (std::size_t i = 0; i <= n; ++i)
            t.h[i] += multiplicity[masks[k]] * dims[k][i];
    }
    if (opts.per_degree)
        for_each_in_box(box, [&](std::span<const Int> u) {
            const auto& v = dims[where[positive_mask(fan, d, u)]];
            if (std::any_of(v.begin(), v.end(), [](std::size_t x) { return x != 0; }))
                t.per_degree[LatticeVector(u.begin(), u.end())] = v;
        });
    if (opts.check_outside) {
        std::mt19937_64 rng(0x6f757473ULL);
        for (int s = 0; s < 100; ++s) {
            IntVector u = outside_point(box, rng);
            auto v = cech_degree_dims(fan, d, u);
            if (std::any_of(v.begin(), v.end(), [](std::size_t x) { return x != 0; }))
                throw InternalInconsistency("nonzero degree piece at " + to_string(u) + " outside the enumeration box");
        }
    }
    return t;
}

// ---- local cohomology of S --------------------------------------------------

std::vector<std::size_t> local_cohomology_S_dims(const Fan& fan, std::span<const Int> alpha) {
    if (alpha.size() != fan.ray_count())
        throw InputError("degree vector has " + std::to_string(alpha.size()) + " entries, fan has " +
                         std::to_string(fan.ray_count()) + " rays");
    const std::size_t r = fan.max_cones().size();
    if (r > max_cech_cones)
        throw InputError("Cech engine supports at most " + std::to_string(max_cech_cones) + " maximal cones");
    const std::size_t d = fan.ray_count();
    // exponent vectors of the generators Y^{sigma-hat}
    std::vector<IntVector> gens;
    for (const auto& c : fan.max_cones()) {
        IntVector e(d, 0);
        for (std::size_t j = 0; j < d; ++j)
            e[j] = c.contains_ray(j) ? 0 : 1;
        gens.push_back(std::move(e));
    }
    std::vector<char> present(std::size_t{1} << r);
    IntVector lcm_exp(d);
    for (std::size_t l = 0; l < present.size(); ++l) {
        std::fill(lcm_exp.begin(), lcm_exp.end(), 0);
        for (std::size_t k = 0; k < r; ++k)
            if ((l >> k) & 1U)
                for (std::size_t j = 0; j < d; ++j)
                    lcm_exp[j] = std::max(lcm_exp[j], gens[k][j]);
        // S localized at m_L has a monomial of degree alpha iff alpha + k*m_L >= 0 for some k >= 0
        Int k = 0;
        for (std::size_t j = 0; j < d; ++j)
            if (lcm_exp[j] > 0 && alpha[j] < 0)
                k = std::max(k, ceil_div(-alpha[j], lcm_exp[j]));
        bool ok = true;
        for (std::size_t j = 0; j < d && ok; ++j)
            ok = checked_add(alpha[j], checked_mul(k, lcm_exp[j])) >= 0;
        present[l] = ok;
    }
    return subset_complex_dims(r, present, true);
}

std::size_t local_cohomology_S(const Fan& fan, std::span<const Int> alpha, std::size_t i) {
    auto dims = local_cohomology_S_dims(fan, alpha);
    return i < dims.size() ? dims[i] : 0;
}

DegreeVector sign_normalize(std::span<const Int> alpha) {
    DegreeVector out;
    for (Int a : alpha)
        out.push_back(a >= 0 ? 0 : -1);
    return out;
}

// ---- differential forms -----------------------------------------------------

std::string EulerPresentation::str() const {
    std::ostringstream os;
    os << "relations:";
    for (std::size_t s = 0; s < relation_basis.rows(); ++s)
        os << " (" << to_string(relation_basis.row_vector(s)) << ")";
    os << "\nE = sum_j S(-f_j) -> F = S^" << relation_basis.rows() << ", e_j -> (r^(s)_j Y_j)_s";
    return os.str();
}

EulerPresentation euler_presentation(const Fan& fan) {
    if (!is_smooth(fan))
        throw InputError("Euler sequence presentation needs a smooth fan");
    if (span_rank(fan.rays(), fan.rank()) < fan.rank())
        throw DegenerateFanError("rays do not span");
    return {left_kernel(fan.ray_matrix())};
}

namespace {

struct WedgeData {
    std::size_t d = 0, j = 0, q = 0;
    std::vector<std::uint64_t> top;    // j-subsets of rays
    std::vector<std::uint64_t> bottom; // (j-1)-subsets
    std::unordered_map<std::uint64_t, std::size_t> bottom_index;
    IntMatrix relations;
};

std::vector<std::uint64_t> subsets_of_size(std::size_t d, std::size_t k) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << d); ++s)
        if (static_cast<std::size_t>(std::popcount(s)) == k)
            out.push_back(s);
    return out;
}

WedgeData wedge_data(const Fan& fan, std::size_t j) {
    WedgeData w;
    w.d = fan.ray_count();
    w.j = j;
    if (w.d > 30)
        throw InputError("too many rays for the exterior power engine");
    w.relations = euler_presentation(fan).relation_basis;
    w.q = w.relations.rows();
    w.top = subsets_of_size(w.d, j);
    if (j > 0) {
        w.bottom = subsets_of_size(w.d, j - 1);
        for (std::size_t i = 0; i < w.bottom.size(); ++i)
            w.bottom_index[w.bottom[i]] = i;
    }
    return w;
}

// Basis (in top-subset coordinates) of the degree-alpha piece of M_j
// localized away from the rays of tau.
std::vector<SparseVector> local_kernel(const WedgeData& w, std::uint64_t tau, std::span<const Int> alpha) {
    std::vector<std::size_t> present;
    for (std::size_t t = 0; t < w.top.size(); ++t) {
        bool ok = true;
        for (std::size_t r = 0; r < w.d && ok; ++r)
            if ((tau >> r) & 1U)
                ok = alpha[r] >= static_cast<Int>((w.top[t] >> r) & 1U);
        if (ok)
            present.push_back(t);
    }
    std::vector<SparseVector> basis;
    if (present.empty())
        return basis;
    if (w.j == 0) {
        basis.push_back({{present[0], Rational(1)}});
        return basis;
    }
    // transpose of the restricted map: rows (K, s), columns present J
    RationalMatrix at(w.bottom.size() * w.q, present.size());
    for (std::size_t c = 0; c < present.size(); ++c) {
        std::uint64_t jset = w.top[present[c]];
        for (std::size_t k = 0; k < w.d; ++k) {
            if (!((jset >> k) & 1U))
                continue;
            std::size_t kidx = w.bottom_index.at(jset & ~(std::uint64_t{1} << k));
            Rational sign = sign_before(jset, k);
            for (std::size_t s = 0; s < w.q; ++s)
                if (w.relations(s, k) != 0)
                    at(kidx * w.q + s, c) += sign * Rational(static_cast<long>(w.relations(s, k)));
        }
    }
    for (const auto& v : kernel(at)) {
        SparseVector sv;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (sgn(v[c]) != 0)
                sv.emplace_back(present[c], v[c]);
        basis.push_back(std::move(sv));
    }
    return basis;
}

std::vector<std::size_t> omega_dims(const Fan& fan, const WedgeData& w, const std::vector<std::uint64_t>& tau,
                                    std::span<const Int> alpha) {
    const std::size_t r = fan.max_cones().size();
    const std::size_t width = w.top.size();
    std::unordered_map<std::uint64_t, std::vector<SparseVector>> kernels;
    std::vector<std::size_t> count(r, 0);
    std::vector<EchelonBasis> image(r);
    for (std::size_t l = 1; l < tau.size(); ++l) {
        auto it = kernels.find(tau[l]);
        if (it == kernels.end())
            it = kernels.emplace(tau[l], local_kernel(w, tau[l], alpha)).first;
        const auto& basis = it->second;
        std::size_t p = static_cast<std::size_t>(std::popcount(l)) - 1;
        count[p] += basis.size();
        for (const auto& b : basis) {
            SparseVector row;
            for (std::size_t k = 0; k < r; ++k) {
                if ((l >> k) & 1U)
                    continue;
                std::size_t block = (l | (std::size_t{1} << k)) * width;
                Rational sign = sign_before(l, k);
                for (const auto& [col, val] : b)
                    row.emplace_back(block + col, sign * val);
            }
            if (!row.empty())
                image[p].insert(std::move(row));
        }
    }
    std::vector<std::size_t> h(r);
    for (std::size_t p = 0; p < r; ++p)
        h[p] = count[p] - image[p].rank() - (p > 0 ? image[p - 1].rank() : 0);
    return h;
}

} // namespace

std::vector<std::size_t> omega_degree_dims(const Fan& fan, std::size_t j, std::span<const Int> alpha) {
    if (j > fan.rank())
        throw InputError("form degree " + std::to_string(j) + " exceeds the dimension");
    if (alpha.size() != fan.ray_count())
        throw InputError("degree vector has the wrong length");
    WedgeData w = wedge_data(fan, j);
    return omega_dims(fan, w, intersection_masks(fan), alpha);
}

CohomologyTable omega_cohomology_table(const Fan& fan, std::size_t j, const WeilDivisor& d,
                                       const CohomologyOptions& opts) {
    require_smooth_complete(fan, "omega_cohomology");
    if (j > fan.rank())
        throw InputError("form degree " + std::to_string(j) + " exceeds the dimension");
    const std::size_t n = fan.rank();
    WedgeData w = wedge_data(fan, j);
    auto tau = intersection_masks(fan);
    DegreeBox box = degree_region(fan, d, {-1, 0, 1});

    auto clamp = [&](std::span<const Int> u) {
        DegreeVector a = fine_degree(fan, d, u);
        for (auto& x : a)
            x = std::clamp<Int>(x, -1, 1);
        return a;
    };
    std::map<DegreeVector, std::size_t> multiplicity;
    for_each_in_box(box, [&](std::span<const Int> u) { ++multiplicity[clamp(u)]; });
    std::vector<DegreeVector> keys;
    for (const auto& [k, c] : multiplicity)
        keys.push_back(k);
    std::vector<std::vector<std::size_t>> dims(keys.size());
    parallel_for(keys.size(), [&](std::size_t k) {
        dims[k] = truncate_levels(omega_dims(fan, w, tau, keys[k]), n, "omega_cohomology");
    });

    CohomologyTable t;
    t.h.assign(n + 1, 0);
    std::map<DegreeVector, std::size_t> where;
    for (std::size_t k = 0; k < keys.size(); ++k) {
        where[keys[k]] = k;
        for (std::size_t i = 0; i <= n; ++i)
            t.h[i] += multiplicity[keys[k]] * dims[k][i];
    }
    if (opts.per_degree)
        for_each_in_box(box, [&](std::span<const Int> u) {
            const auto& v = dims[where[clamp(u)]];
            if (std::any_of(v.begin(), v.end(), [](std::size_t x) { return x != 0; }))
                t.per_degree[LatticeVector(u.begin(), u.end())] = v;
        });
    if (opts.check_outside) {
        std::mt19937_64 rng(0x6f6d6567ULL);
        for (int s = 0; s < 100; ++s) {
            IntVector u = outside_point(box, rng);
            auto v = omega_dims(fan, w, tau, fine_degree(fan, d, u));
            if (std::any_of(v.begin(), v.end(), [](std::size_t x) { return x != 0; }))
                throw InternalInconsistency("nonzero form degree piece at " + to_string(u) + " outside the box");
        }
    }
    return t;
}

std::size_t omega_cohomology(const Fan& fan, std::size_t j, const WeilDivisor& d, std::size_t p) {
    auto t = omega_cohomology_table(fan, j, d);
    return p < t.h.size() ? t.h[p] : 0;
}

// ---- theorem checks ---------------------------------------------------------

std::pair<std::size_t, std::size_t> frobenius_split_dims(const Fan& fan, Int p) {
    require_smooth_complete(fan, "frobenius check");
    if (p < 2)
        throw InputError("p must be a prime");
    for (Int q = 2; q * q <= p; ++q)
        if (p % q == 0)
            throw InputError(std::to_string(p) + " is not prime");
    const std::size_t top = fan.rank() + 1;
    IntVector minus_one(fan.ray_count(), -1), minus_p(fan.ray_count(), -p);
    return {local_cohomology_S(fan, minus_one, top), local_cohomology_S(fan, minus_p, top)};
}

VanishingAudit vanishing_audit(const Fan& fan, const WeilDivisor& d, const QDivisor& e, Int m) {
    require_complete(fan, "vanishing audit");
    if (d.size() != fan.ray_count() || e.size() != fan.ray_count())
        throw InputError("divisor lengths do not match the fan");
    VanishingAudit a;
    bool bounds = std::all_of(e.coeffs.begin(), e.coeffs.end(), [](const Rational& x) { return x >= 0 && x <= 1; });
    a.hypotheses.emplace_back("0 <= E <= 1", bounds);
    a.hypotheses.emplace_back("m >= 1", m >= 1);
    QDivisor scaled = Rational(static_cast<long>(m)) * (QDivisor(d) + e);
    bool integral = m >= 1 && scaled.is_integral();
    a.hypotheses.emplace_back("m(D+E) integral", integral);
    bool cartier = integral && is_cartier(fan, scaled);
    a.hypotheses.emplace_back("m(D+E) Cartier", cartier);
    bool ample = false;
    if (cartier) {
        auto degs = wall_degrees(fan, scaled);
        ample = std::all_of(degs.begin(), degs.end(), [](const WallDegree& w) { return w.value > 0; });
    }
    a.hypotheses.emplace_back("D+E ample", ample);
    a.hypotheses_hold = std::all_of(a.hypotheses.begin(), a.hypotheses.end(), [](const auto& h) { return h.second; });
    if (a.hypotheses_hold) {
        a.table = cohomology_table(fan, d);
        for (std::size_t i = 1; i < a.table->h.size(); ++i)
            a.violation = a.violation || a.table->h[i] != 0;
    }
    return a;
}

bool serre_duality_check(const Fan& fan, const WeilDivisor& d) {
    require_smooth_complete(fan, "Serre duality check");
    auto lhs = cohomology_table(fan, d);
    auto rhs = cohomology_table(fan, canonical_divisor(fan) - d);
    const std::size_t n = fan.rank();
    for (std::size_t i = 0; i <= n; ++i)
        if (lhs.h[i] != rhs.h[n - i])
            return false;
    return true;
}

KawamataViehwegReport kawamata_viehweg_check(const Fan& fan, const WeilDivisor& l) {
    require_smooth_complete(fan, "Kawamata-Viehweg check");
    if (!is_nef(fan, l) || !is_big(fan, l))
        throw InputError("divisor " + l.str() + " is not nef and big");
    KawamataViehwegReport r;
    r.adjoint = cohomology_table(fan, canonical_divisor(fan) + l);
    Factorization f = nef_big_factorization(fan, l);
    r.coarse = cohomology_table(f.coarse, canonical_divisor(f.coarse) + f.divisor);
    auto higher_zero = [](const CohomologyTable& t) {
        return std::all_of(t.h.begin() + 1, t.h.end(), [](std::size_t x) { return x == 0; });
    };
    r.vanishes = higher_zero(r.adjoint) && higher_zero(*r.coarse);
    return r;
}

} // namespace torix
