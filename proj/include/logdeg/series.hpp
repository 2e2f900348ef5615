#pragma once

#include "logdeg/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace logdeg {

// Truncated exact-coefficient Laurent series.  A series carries its
// truncation order; arithmetic never reads past it, and binary operations
// truncate to the weaker of the two inputs.  K is Rat or GaussRat.
template <typename K>
struct Laurent {
    char var = 'q';
    long min_exp = 0;
    long trunc = -1;          // coefficients are valid through this exponent
    std::vector<K> coeffs;    // indexed min_exp .. trunc

    static Laurent zero(char var, long trunc);
    static Laurent constant(char var, const K& c, long trunc);
    static Laurent monomial(char var, long exp, const K& c, long trunc);

    bool is_zero() const;
    K coeff(long e) const;
    void set(long e, const K& c);
    long order() const;  // exponent of the first nonzero coefficient
    void normalize();    // trim leading/trailing zeros (keeps trunc)

    Laurent truncated(long new_trunc) const;

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator*(const K& c) const;
    Laurent inverse() const;  // leading coefficient must be invertible
    Laurent operator/(const Laurent& o) const;
    Laurent pow(long e) const;  // negative e via inverse

    bool operator==(const Laurent& o) const;
    std::string to_string() const;
};

using QSeries = Laurent<Rat>;
using GSeries = Laurent<GaussRat>;

GSeries complexify(const QSeries& s);

// --- rational functions ----------------------------------------------------

struct Poly {
    std::vector<Rat> c;  // c[0] + c[1] q + ...

    size_t degree() const;
    bool is_zero() const;
    Rat at(size_t i) const { return i < c.size() ? c[i] : Rat(0); }
    void trim();
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const;
    std::string to_string(char var = 'q') const;
};

Poly poly_gcd(Poly a, Poly b);

struct RationalFunction {
    Poly num, den;

    // Reduces the fraction and normalizes the denominator to be monic... in
    // the sense of a unit leading coefficient: lowest nonzero coefficient 1.
    void normalize();
    bool operator==(const RationalFunction& o) const;
    std::string to_string(char var = 'q') const;
};

// Laurent expansion of f around q = 0 on the window [from, to].
QSeries expand_rational(const RationalFunction& f, long from, long to);

// --- the spec'd series operations ------------------------------------------

// M(q) = prod (1-q^n)^{-n} through q^order.
QSeries macmahon(long order);

// M(-q)^exponent through q^order; negative exponents via series inversion.
QSeries macmahon_power(long exponent, long order);

// z / z0 at the common truncation.
QSeries normalize_dt(const QSeries& z, const QSeries& z0);

// Rational reconstruction with numerator/denominator degree <= max_degree.
// Returns nullopt when no rational function of that size matches through the
// series' truncation (a certificate only up to the probed degree).
std::optional<RationalFunction> pade_reconstruct(const QSeries& s, long max_degree);

struct GwDtReport {
    bool equal = false;
    long first_mismatch = 0;  // valid when !equal
    GaussRat lhs, rhs;        // the mismatched coefficients
};

// Substitutes q = -e^{iu} into z_pt, multiplies by e^{-i d_beta u / 2}
// (the meaning of (-q)^{-d_beta/2} after the substitution), and compares
// with (-iu)^(d_beta + excess) * z_gw through u^u_order.
GwDtReport gw_dt_compare(const RationalFunction& z_pt, const GSeries& z_gw, long d_beta, long excess,
                         long u_order);

// exp(c * i * u) as a truncated series over the Gaussian rationals.
GSeries exp_iu(const Rat& c, long u_order);

extern template struct Laurent<Rat>;
extern template struct Laurent<GaussRat>;

}  // namespace logdeg
