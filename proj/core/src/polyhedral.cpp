#include "torix/polyhedral.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "torix/linalg.hpp"

namespace torix {

namespace {

void for_each_combination(std::size_t m, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > m)
        return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + (i - 1))
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

IntVector integral_primitive(const RationalVector& v) {
    mpz_class l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(to_int(Rational(x * l)));
    return primitive(out);
}

// One-dimensional right kernel of the given rows, if the rows have rank n-1.
std::optional<IntVector> line_orthogonal_to(const std::vector<IntVector>& rows, std::size_t n) {
    RationalMatrix m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Rational(static_cast<long>(rows[i][j]));
    auto k = kernel(std::move(m));
    if (k.size() != 1)
        return std::nullopt;
    return integral_primitive(k.front());
}

} // namespace

IntVector primitive(std::span<const Int> v) {
    Int g = 0;
    for (Int x : v)
        g = gcd(g, x);
    if (g == 0)
        throw std::invalid_argument("primitive: zero vector");
    IntVector out(v.begin(), v.end());
    for (auto& x : out)
        x /= g;
    return out;
}

bool is_primitive(std::span<const Int> v) {
    Int g = 0;
    for (Int x : v)
        g = gcd(g, x);
    return g == 1;
}

std::size_t span_rank(const std::vector<IntVector>& vectors, std::size_t n) {
    if (vectors.empty())
        return 0;
    IntMatrix m(vectors.size(), n);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = vectors[i][j];
    return rank(m);
}

bool HalfspaceCone::contains(std::span<const Int> x) const {
    for (const auto& e : equations)
        if (dot(e, x) != 0)
            return false;
    for (const auto& a : inequalities)
        if (dot(a, x) < 0)
            return false;
    return true;
}

bool HalfspaceCone::contains(std::span<const Rational> x) const {
    for (const auto& e : equations)
        if (sgn(dot(x, e)) != 0)
            return false;
    for (const auto& a : inequalities)
        if (sgn(dot(x, a)) < 0)
            return false;
    return true;
}

bool HalfspaceCone::contains_relative_interior(std::span<const Int> x) const {
    for (const auto& e : equations)
        if (dot(e, x) != 0)
            return false;
    for (const auto& a : inequalities)
        if (dot(a, x) <= 0)
            return false;
    return true;
}

GeneratedCone describe_cone(const std::vector<IntVector>& generators, std::size_t ambient) {
    if (generators.size() > 64)
        throw std::invalid_argument("describe_cone: more than 64 generators");
    GeneratedCone out;
    out.generators = generators;
    out.dim = span_rank(generators, ambient);
    out.halfspaces.ambient = ambient;

    const std::size_t m = generators.size();
    if (m > 0) {
        IntMatrix gt(ambient, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < ambient; ++j)
                gt(j, i) = generators[i][j];
        IntMatrix eq = left_kernel(gt);
        for (std::size_t i = 0; i < eq.rows(); ++i)
            out.halfspaces.equations.push_back(eq.row_vector(i));
    } else {
        for (std::size_t j = 0; j < ambient; ++j) {
            IntVector e(ambient, 0);
            e[j] = 1;
            out.halfspaces.equations.push_back(std::move(e));
        }
    }

    const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
    std::set<std::uint64_t> facet_masks;
    if (out.dim > 0) {
        for_each_combination(m, out.dim - 1, [&](const std::vector<std::size_t>& subset) {
            std::vector<IntVector> rows;
            for (auto i : subset)
                rows.push_back(generators[i]);
            if (span_rank(rows, ambient) != out.dim - 1)
                return;
            for (const auto& e : out.halfspaces.equations)
                rows.push_back(e);
            auto w = line_orthogonal_to(rows, ambient);
            if (!w)
                return;
            bool pos = false, neg = false;
            std::uint64_t zero = 0;
            for (std::size_t i = 0; i < m; ++i) {
                Int s = dot(*w, generators[i]);
                if (s > 0)
                    pos = true;
                else if (s < 0)
                    neg = true;
                else
                    zero |= std::uint64_t{1} << i;
            }
            if (pos && neg)
                return;
            if (!pos && !neg)
                return;
            if (facet_masks.insert(zero).second) {
                IntVector normal = *w;
                if (neg)
                    for (auto& x : normal)
                        x = -x;
                out.halfspaces.inequalities.push_back(std::move(normal));
            }
        });
    }
    out.facets.assign(facet_masks.begin(), facet_masks.end());

    std::vector<IntVector> normals = out.halfspaces.inequalities;
    for (const auto& e : out.halfspaces.equations)
        normals.push_back(e);
    out.pointed = m == 0 || span_rank(normals, ambient) == ambient;

    std::set<std::uint64_t> faces(facet_masks.begin(), facet_masks.end());
    faces.insert(full);
    faces.insert(0);
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::uint64_t> cur(faces.begin(), faces.end());
        for (auto f : cur)
            for (auto g : out.facets)
                if (faces.insert(f & g).second)
                    grew = true;
    }
    out.faces.assign(faces.begin(), faces.end());
    out.extreme.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        out.extreme[i] = faces.count(std::uint64_t{1} << i) > 0;
    return out;
}

std::vector<IntVector> extreme_rays(const HalfspaceCone& cone) {
    const std::size_t n = cone.ambient;
    const std::size_t eq_rank = span_rank(cone.equations, n);
    if (eq_rank >= n)
        return {};
    const std::size_t need = n - 1 - eq_rank;
    std::set<IntVector> found;
    for_each_combination(cone.inequalities.size(), need, [&](const std::vector<std::size_t>& subset) {
        std::vector<IntVector> rows = cone.equations;
        for (auto i : subset)
            rows.push_back(cone.inequalities[i]);
        if (span_rank(rows, n) != n - 1)
            return;
        auto w = line_orthogonal_to(rows, n);
        if (!w)
            return;
        if (cone.contains(*w))
            found.insert(*w);
        IntVector neg = *w;
        for (auto& x : neg)
            x = -x;
        if (cone.contains(neg))
            found.insert(neg);
    });
    // a line (both directions feasible) is not an extreme ray of a pointed cone
    std::vector<IntVector> out;
    for (const auto& r : found) {
        IntVector neg = r;
        for (auto& x : neg)
            x = -x;
        if (!found.count(neg))
            out.push_back(r);
    }
    return out;
}

} // namespace torix
