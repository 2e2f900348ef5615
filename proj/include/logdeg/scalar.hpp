#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace logdeg {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int rat_num(const Rat& r) { return r.get_num(); }
inline Int rat_den(const Rat& r) { return r.get_den(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Parses "a/b", "a", with optional sign and whitespace trimmed by caller.
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& r);

// Rationals adjoined with i, i^2 = -1.  Exact throughout.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() : re(0), im(0) {}
    GaussRat(const Rat& r) : re(r), im(0) {}
    GaussRat(long v) : re(v), im(0) {}
    GaussRat(const Rat& r, const Rat& i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return {re, Rat(-im)}; }
    Rat norm() const { return re * re + im * im; }

    GaussRat operator-() const { return {Rat(-re), Rat(-im)}; }
    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = r;
        im = i;
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        if (o.is_zero()) throw std::domain_error("GaussRat: division by zero");
        Rat n = o.norm();
        GaussRat t = *this;
        t *= o.conj();
        re = t.re / n;
        im = t.im / n;
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

inline GaussRat gauss_i() { return GaussRat(Rat(0), Rat(1)); }

// Serialization used by all JSON files: "3/2", "-1/240", "i/4", "3i/2", "1/2+3i/4".
GaussRat parse_gauss(const std::string& s);
std::string gauss_to_string(const GaussRat& g);

std::ostream& operator<<(std::ostream& os, const GaussRat& g);

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

IntVec primitive(const IntVec& v);        // v / gcd(entries); zero vector stays zero
Int content(const IntVec& v);             // gcd of entries, 0 for the zero vector
bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);
bool parallel_same_direction(const IntVec& a, const IntVec& b);  // positively parallel

RatVec to_rat(const IntVec& v);
// Fails if some entry is non-integral.
IntVec to_int(const RatVec& v);
// Clears denominators and reduces to the primitive integer direction.
IntVec primitive_direction(const RatVec& v);

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rat& c, const RatVec& v);
IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator*(const Int& c, const IntVec& v);

std::string vec_to_string(const IntVec& v);
std::string vec_to_string(const RatVec& v);

}  // namespace logdeg
