#include "logdeg/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace logdeg {

MatQ MatQ::identity(size_t n) {
    MatQ m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatQ MatQ::from_columns(const std::vector<RatVec>& cols_in) {
    if (cols_in.empty()) return MatQ(0, 0);
    MatQ m(cols_in[0].size(), cols_in.size());
    for (size_t j = 0; j < cols_in.size(); ++j)
        for (size_t i = 0; i < m.rows; ++i) m.at(i, j) = cols_in[j][i];
    return m;
}

MatQ MatQ::from_rows(const std::vector<RatVec>& rows_in) {
    if (rows_in.empty()) return MatQ(0, 0);
    MatQ m(rows_in.size(), rows_in[0].size());
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
    return m;
}

RatVec MatQ::col(size_t j) const {
    RatVec v(rows);
    for (size_t i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

RatVec MatQ::row(size_t i) const {
    RatVec v(cols);
    for (size_t j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
}

MatQ MatQ::transposed() const {
    MatQ t(cols, rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatVec MatQ::apply(const RatVec& v) const {
    assert(v.size() == cols);
    RatVec out(rows, Rat(0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

MatQ MatQ::operator*(const MatQ& o) const {
    assert(cols == o.rows);
    MatQ m(rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < cols; ++k) {
            if (at(i, k) == 0) continue;
            for (size_t j = 0; j < o.cols; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

MatZ MatZ::identity(size_t n) {
    MatZ m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatZ MatZ::from_columns(const std::vector<IntVec>& cols_in) {
    if (cols_in.empty()) return MatZ(0, 0);
    MatZ m(cols_in[0].size(), cols_in.size());
    for (size_t j = 0; j < cols_in.size(); ++j)
        for (size_t i = 0; i < m.rows; ++i) m.at(i, j) = cols_in[j][i];
    return m;
}

MatZ MatZ::from_rows(const std::vector<IntVec>& rows_in) {
    if (rows_in.empty()) return MatZ(0, 0);
    MatZ m(rows_in.size(), rows_in[0].size());
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
    return m;
}

IntVec MatZ::apply(const IntVec& v) const {
    assert(v.size() == cols);
    IntVec out(rows, Int(0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) out[i] += at(i, j) * v[j];
    return out;
}

RatVec MatZ::apply(const RatVec& v) const {
    assert(v.size() == cols);
    RatVec out(rows, Rat(0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) out[i] += Rat(at(i, j)) * v[j];
    return out;
}

MatZ MatZ::operator*(const MatZ& o) const {
    assert(cols == o.rows);
    MatZ m(rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < cols; ++k) {
            if (at(i, k) == 0) continue;
            for (size_t j = 0; j < o.cols; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

MatQ MatZ::to_q() const {
    MatQ m(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) m.a[i] = Rat(a[i]);
    return m;
}

MatZ MatZ::transposed() const {
    MatZ t(cols, rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntVec MatZ::col(size_t j) const {
    IntVec v(rows);
    for (size_t i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

std::vector<size_t> rref(MatQ& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t p = r;
        while (p < m.rows && m.at(p, c) == 0) ++p;
        if (p == m.rows) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = Rat(1) / m.at(r, c);
        for (size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(const MatQ& m) {
    MatQ c = m;
    return rref(c).size();
}

size_t rank_of_columns(const std::vector<RatVec>& cols) { return rank(MatQ::from_columns(cols)); }

size_t rank_of_int_columns(const std::vector<IntVec>& cols) {
    std::vector<RatVec> q;
    q.reserve(cols.size());
    for (auto& c : cols) q.push_back(to_rat(c));
    return rank_of_columns(q);
}

std::optional<RatVec> solve(const MatQ& A, const RatVec& b) {
    assert(b.size() == A.rows);
    MatQ aug(A.rows, A.cols + 1);
    for (size_t i = 0; i < A.rows; ++i) {
        for (size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;  // inconsistent
    RatVec x(A.cols, Rat(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, A.cols);
    return x;
}

std::vector<RatVec> nullspace(const MatQ& A) {
    MatQ m = A;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(A.cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (size_t c = 0; c < A.cols; ++c) {
        if (is_pivot[c]) continue;
        RatVec v(A.cols, Rat(0));
        v[c] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<MatQ> inverse(const MatQ& A) {
    if (A.rows != A.cols) return std::nullopt;
    size_t n = A.rows;
    MatQ aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots[n - 1] != n - 1) return std::nullopt;
    MatQ inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::optional<MatZ> inverse_unimodular(const MatZ& A) {
    auto qi = inverse(A.to_q());
    if (!qi) return std::nullopt;
    MatZ out(A.rows, A.cols);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t j = 0; j < A.cols; ++j) {
            if (!is_integer(qi->at(i, j))) return std::nullopt;
            out.at(i, j) = rat_num(qi->at(i, j));
        }
    return out;
}

Rat determinant(const MatQ& A) {
    assert(A.rows == A.cols);
    MatQ m = A;
    Rat det(1);
    size_t n = m.rows;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m.at(p, c) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        Rat inv = Rat(1) / m.at(c, c);
        for (size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) * inv;
            for (size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

Int determinant(const MatZ& A) {
    Rat d = determinant(A.to_q());
    assert(is_integer(d));
    return rat_num(d);
}

namespace {

void swap_rows(MatZ& m, size_t i, size_t j) {
    for (size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}
void swap_cols(MatZ& m, size_t i, size_t j) {
    for (size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}
// row[i] += f * row[j]
void add_row(MatZ& m, size_t i, size_t j, const Int& f) {
    for (size_t c = 0; c < m.cols; ++c) m.at(i, c) += f * m.at(j, c);
}
void add_col(MatZ& m, size_t i, size_t j, const Int& f) {
    for (size_t r = 0; r < m.rows; ++r) m.at(r, i) += f * m.at(r, j);
}
void negate_row(MatZ& m, size_t i) {
    for (size_t c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

}  // namespace

namespace {

// Diagonalizes D (recording operations in U, V) starting from block position t0.
void snf_diagonalize(MatZ& D, MatZ& U, MatZ& V, size_t t0) {
    size_t t = t0;
    while (t < D.rows && t < D.cols) {
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < D.rows && !found; ++i)
            for (size_t j = t; j < D.cols && !found; ++j)
                if (D.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        if (pi != t) {
            swap_rows(D, pi, t);
            swap_rows(U, pi, t);
        }
        if (pj != t) {
            swap_cols(D, pj, t);
            swap_cols(V, pj, t);
        }
        // Euclidean reduction on row t and column t until both are clear.
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t i = t + 1; i < D.rows; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = D.at(i, t) / D.at(t, t);
                add_row(D, i, t, -q);
                add_row(U, i, t, -q);
                if (D.at(i, t) != 0) {  // remainder became the smaller pivot
                    swap_rows(D, i, t);
                    swap_rows(U, i, t);
                    dirty = true;
                }
            }
            for (size_t j = t + 1; j < D.cols; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = D.at(t, j) / D.at(t, t);
                add_col(D, j, t, -q);
                add_col(V, j, t, -q);
                if (D.at(t, j) != 0) {
                    swap_cols(D, j, t);
                    swap_cols(V, j, t);
                    dirty = true;
                }
            }
        }
        if (D.at(t, t) < 0) {
            negate_row(D, t);
            negate_row(U, t);
        }
        ++t;
    }
}

}  // namespace

Smith smith_normal_form(const MatZ& A) {
    Smith s;
    s.D = A;
    s.U = MatZ::identity(A.rows);
    s.V = MatZ::identity(A.cols);

    snf_diagonalize(s.D, s.U, s.V, 0);
    // Repair the divisibility chain: mixing a violating pair strictly improves
    // the gcd at the earlier slot, so this terminates.
    for (bool changed = true; changed;) {
        changed = false;
        size_t m = std::min(s.D.rows, s.D.cols);
        for (size_t i = 0; i + 1 < m; ++i) {
            const Int& a = s.D.at(i, i);
            const Int& b = s.D.at(i + 1, i + 1);
            if (a == 0 || b == 0 || b % a == 0) continue;
            add_col(s.D, i, i + 1, 1);
            add_col(s.V, i, i + 1, 1);
            snf_diagonalize(s.D, s.U, s.V, i);
            changed = true;
            break;
        }
    }
    return s;
}

std::vector<IntVec> saturated_lattice_basis(const std::vector<IntVec>& cols) {
    if (cols.empty()) return {};
    size_t n = cols[0].size();
    MatZ A = MatZ::from_columns(cols);
    Smith s = smith_normal_form(A);
    size_t r = 0;
    while (r < std::min(s.D.rows, s.D.cols) && s.D.at(r, r) != 0) ++r;
    // U*A*V = D, so A's column span saturation is spanned by the first r
    // columns of U^{-1}.
    auto Uinv = inverse_unimodular(s.U);
    if (!Uinv) throw std::logic_error("saturated_lattice_basis: U not unimodular");
    std::vector<IntVec> basis;
    for (size_t j = 0; j < r; ++j) {
        IntVec v(n);
        for (size_t i = 0; i < n; ++i) v[i] = Uinv->at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

Int lattice_index(const std::vector<IntVec>& l_cols, const std::vector<IntVec>& m_cols) {
    // Express m generators in the basis of <l_cols> (assumed a basis) and take
    // the product of the invariant factors.
    if (l_cols.empty()) return m_cols.empty() ? Int(1) : Int(0);
    MatQ L = MatQ::from_columns([&] {
        std::vector<RatVec> v;
        for (auto& c : l_cols) v.push_back(to_rat(c));
        return v;
    }());
    MatZ coords(l_cols.size(), m_cols.size());
    for (size_t j = 0; j < m_cols.size(); ++j) {
        auto x = solve(L, to_rat(m_cols[j]));
        if (!x) throw std::invalid_argument("lattice_index: generator outside span");
        for (size_t i = 0; i < l_cols.size(); ++i) {
            if (!is_integer((*x)[i]))
                throw std::invalid_argument("lattice_index: generator not in the lattice spanned");
            coords.at(i, j) = rat_num((*x)[i]);
        }
    }
    Smith s = smith_normal_form(coords);
    Int idx(1);
    for (size_t i = 0; i < l_cols.size(); ++i) {
        if (i >= std::min(s.D.rows, s.D.cols) || s.D.at(i, i) == 0) return Int(0);
        idx *= s.D.at(i, i);
    }
    return idx;
}

LatticeQuotient lattice_quotient(size_t n, const std::vector<IntVec>& cols) {
    MatZ A = cols.empty() ? MatZ(n, 0) : MatZ::from_columns(cols);
    Smith s = smith_normal_form(A);
    size_t r = 0;
    while (r < std::min(s.D.rows, s.D.cols) && s.D.at(r, r) != 0) ++r;
    // Z^n / sat<cols> is identified with the last n-r coordinates of U x.
    LatticeQuotient q;
    q.projection = MatZ(n - r, n);
    for (size_t i = 0; i < n - r; ++i)
        for (size_t j = 0; j < n; ++j) q.projection.at(i, j) = s.U.at(r + i, j);
    auto Uinv = inverse_unimodular(s.U);
    if (!Uinv) throw std::logic_error("lattice_quotient: U not unimodular");
    q.section = MatZ(n, n - r);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n - r; ++j) q.section.at(i, j) = Uinv->at(i, r + j);
    return q;
}

}  // namespace logdeg
