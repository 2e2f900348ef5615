#pragma once

#include "logdeg/scalar.hpp"

#include <optional>
#include <vector>

namespace logdeg {

// Dense exact matrices.  Sizes here are small (ambient ranks <= 3-4, moduli
// systems a few dozen variables), so plain Gaussian elimination over Q and
// textbook Smith normal form over Z are the right tools.

struct MatQ {
    size_t rows = 0, cols = 0;
    std::vector<Rat> a;  // row-major

    MatQ() = default;
    MatQ(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

    Rat& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Rat& at(size_t i, size_t j) const { return a[i * cols + j]; }

    static MatQ identity(size_t n);
    static MatQ from_columns(const std::vector<RatVec>& cols_in);
    static MatQ from_rows(const std::vector<RatVec>& rows_in);

    RatVec col(size_t j) const;
    RatVec row(size_t i) const;
    MatQ transposed() const;

    RatVec apply(const RatVec& v) const;  // this * v
    MatQ operator*(const MatQ& o) const;
    bool operator==(const MatQ& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

struct MatZ {
    size_t rows = 0, cols = 0;
    std::vector<Int> a;

    MatZ() = default;
    MatZ(size_t r, size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

    Int& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }

    static MatZ identity(size_t n);
    static MatZ from_columns(const std::vector<IntVec>& cols_in);
    static MatZ from_rows(const std::vector<IntVec>& rows_in);

    IntVec apply(const IntVec& v) const;
    RatVec apply(const RatVec& v) const;
    MatZ operator*(const MatZ& o) const;
    MatQ to_q() const;
    MatZ transposed() const;
    IntVec col(size_t j) const;
    bool operator==(const MatZ& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Row-reduces in place; returns pivot column indices.
std::vector<size_t> rref(MatQ& m);

size_t rank(const MatQ& m);
size_t rank_of_columns(const std::vector<RatVec>& cols);
size_t rank_of_int_columns(const std::vector<IntVec>& cols);

// One solution of A x = b, if consistent.
std::optional<RatVec> solve(const MatQ& A, const RatVec& b);

// Basis of the kernel of A.
std::vector<RatVec> nullspace(const MatQ& A);

// Inverse of a square nonsingular rational matrix.
std::optional<MatQ> inverse(const MatQ& A);
std::optional<MatZ> inverse_unimodular(const MatZ& A);  // requires det = +-1

Rat determinant(const MatQ& A);
Int determinant(const MatZ& A);

// Smith normal form: U * A * V = D with U, V unimodular and D diagonal with
// d1 | d2 | ... ; returns (U, D, V).
struct Smith {
    MatZ U, D, V;
};
Smith smith_normal_form(const MatZ& A);

// The saturation of the column span: basis of span_Q(cols) ∩ Z^n as columns.
std::vector<IntVec> saturated_lattice_basis(const std::vector<IntVec>& cols);

// Index [L : M] of the subgroup M = <m_cols> inside L = <l_cols>; both must
// span the same Q-subspace.  Returns 0 if M has lower rank.
Int lattice_index(const std::vector<IntVec>& l_cols, const std::vector<IntVec>& m_cols);

// Quotient of Z^n by the saturation of <cols>: a surjection Z^n -> Z^(n-k)
// together with a section.  Torsion-free by construction.
struct LatticeQuotient {
    MatZ projection;  // (n-k) x n
    MatZ section;     // n x (n-k), projection * section = identity
};
LatticeQuotient lattice_quotient(size_t n, const std::vector<IntVec>& cols);

}  // namespace logdeg
