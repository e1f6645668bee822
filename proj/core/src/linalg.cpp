#include "torix/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace torix {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Int aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
        }
    return c;
}

IntVector multiply(const IntMatrix& a, std::span<const Int> v) {
    if (a.cols() != v.size())
        throw std::invalid_argument("multiply: shape mismatch");
    IntVector r(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        r[i] = dot(a.row(i), v);
    return r;
}

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(static_cast<long>(m(i, j)));
    return r;
}

namespace {

// row_a <- x*row_a + y*row_b ; row_b <- p*row_a + q*row_b (simultaneously)
void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, Int x, Int y, Int p, Int q) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Int ra = m(a, j), rb = m(b, j);
        m(a, j) = checked_add(checked_mul(x, ra), checked_mul(y, rb));
        m(b, j) = checked_add(checked_mul(p, ra), checked_mul(q, rb));
    }
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, Int k) {
    if (k == 0)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(dst, j) = checked_add(m(dst, j), checked_mul(k, m(src, j)));
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, Int k) {
    if (k == 0)
        return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, dst) = checked_add(m(i, dst), checked_mul(k, m(i, src)));
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(r, j) = checked_sub(0, m(r, j));
}

} // namespace

HermiteForm row_hermite(const IntMatrix& a) {
    HermiteForm out{IntMatrix::identity(a.rows()), a, {}};
    IntMatrix& h = out.form;
    IntMatrix& u = out.transform;
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        std::size_t first = r;
        while (first < h.rows() && h(first, c) == 0)
            ++first;
        if (first == h.rows())
            continue;
        h.swap_rows(r, first);
        u.swap_rows(r, first);
        for (std::size_t i = r + 1; i < h.rows(); ++i) {
            if (h(i, c) == 0)
                continue;
            Int x, y;
            Int av = h(r, c), bv = h(i, c);
            Int g = extended_gcd(av, bv, x, y);
            Int p = -(bv / g), q = av / g;
            combine_rows(h, r, i, x, y, p, q);
            combine_rows(u, r, i, x, y, p, q);
        }
        if (h(r, c) < 0) {
            negate_row(h, r);
            negate_row(u, r);
        }
        for (std::size_t k = 0; k < r; ++k) {
            Int f = floor_div(h(k, c), h(r, c));
            add_row_multiple(h, k, r, -f);
            add_row_multiple(u, k, r, -f);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    return out;
}

SmithForm smith(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix s = a;
    IntMatrix p = IntMatrix::identity(m);
    IntMatrix q = IntMatrix::identity(n);
    std::vector<Int> inv;
    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t bi = m, bj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (s(i, j) != 0 && (bi == m || std::llabs(s(i, j)) < std::llabs(s(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == m)
                break;
            s.swap_rows(t, bi);
            p.swap_rows(t, bi);
            s.swap_cols(t, bj);
            q.swap_cols(t, bj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                Int f = s(i, t) / s(t, t);
                add_row_multiple(s, i, t, -f);
                add_row_multiple(p, i, t, -f);
                dirty |= s(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                Int f = s(t, j) / s(t, t);
                add_col_multiple(s, j, t, -f);
                add_col_multiple(q, j, t, -f);
                dirty |= s(t, j) != 0;
            }
            if (dirty)
                continue;
            // divisibility: fold an offending row into the pivot row
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        add_row_multiple(s, t, i, 1);
                        add_row_multiple(p, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (s(t, t) < 0) {
            negate_row(s, t);
            negate_row(p, t);
        }
        inv.push_back(s(t, t));
    }
    return {std::move(p), std::move(q), std::move(inv)};
}

IntMatrix left_kernel(const IntMatrix& a) {
    HermiteForm hf = row_hermite(a);
    const std::size_t r = hf.pivot_cols.size();
    IntMatrix basis(a.rows() - r, a.rows());
    for (std::size_t i = r; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j)
            basis(i - r, j) = hf.transform(i, j);
    if (basis.rows() == 0)
        return basis;
    return row_hermite(basis).form;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, std::span<const Int> b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_integer: shape mismatch");
    SmithForm sf = smith(a);
    IntVector pb = multiply(sf.left, b);
    IntVector y(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Int s = i < sf.invariants.size() ? sf.invariants[i] : 0;
        if (s == 0) {
            if (pb[i] != 0)
                return std::nullopt;
        } else {
            if (pb[i] % s != 0)
                return std::nullopt;
            y[i] = pb[i] / s;
        }
    }
    return multiply(sf.right, y);
}

std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && sgn(m(piv, c)) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        m.swap_rows(r, piv);
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0)
                continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(r, j)) != 0)
                    m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(RationalMatrix m) { return rref(m).size(); }

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::vector<RationalVector> kernel(RationalMatrix m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        RationalVector v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -m(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& a, std::span<const Rational> b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("solve: shape mismatch");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;
    RationalVector x(a.cols(), Rational(0));
    for (std::size_t k = 0; k < pivots.size(); ++k)
        x[pivots[k]] = aug(k, a.cols());
    return x;
}

bool EchelonBasis::insert(SparseVector v) {
    while (!v.empty()) {
        auto it = rows_.find(v.front().first);
        if (it == rows_.end()) {
            Rational inv = 1 / v.front().second;
            for (auto& [idx, val] : v)
                val *= inv;
            rows_.emplace(v.front().first, std::move(v));
            ++rank_;
            return true;
        }
        // v <- v - v0 * row, merging two sorted sparse vectors
        const SparseVector& row = it->second;
        Rational f = v.front().second;
        SparseVector out;
        out.reserve(v.size() + row.size());
        std::size_t i = 0, j = 0;
        while (i < v.size() || j < row.size()) {
            if (j == row.size() || (i < v.size() && v[i].first < row[j].first)) {
                out.push_back(std::move(v[i++]));
            } else if (i == v.size() || row[j].first < v[i].first) {
                out.emplace_back(row[j].first, -f * row[j].second);
                ++j;
            } else {
                Rational val = v[i].second - f * row[j].second;
                if (sgn(val) != 0)
                    out.emplace_back(v[i].first, std::move(val));
                ++i;
                ++j;
            }
        }
        v = std::move(out);
    }
    return false;
}

std::size_t sparse_rank(std::vector<SparseVector> vectors) {
    // shortest first
    std::sort(vectors.begin(), vectors.end(),
              [](const SparseVector& a, const SparseVector& b) { return a.size() < b.size(); });
    EchelonBasis basis;
    for (auto& v : vectors)
        basis.insert(std::move(v));
    return basis.rank();
}

} // namespace torix
