#include "logdeg/series.hpp"

#include "logdeg/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace logdeg {

namespace {

template <typename K>
bool k_is_zero(const K& x) {
    if constexpr (std::is_same_v<K, Rat>) return x == 0;
    else return x.is_zero();
}

template <typename K>
std::string k_to_string(const K& x) {
    if constexpr (std::is_same_v<K, Rat>) return rat_to_string(x);
    else return gauss_to_string(x);
}

}  // namespace

template <typename K>
Laurent<K> Laurent<K>::zero(char var, long trunc) {
    Laurent s;
    s.var = var;
    s.min_exp = 0;
    s.trunc = trunc;
    return s;
}

template <typename K>
Laurent<K> Laurent<K>::constant(char var, const K& c, long trunc) {
    return monomial(var, 0, c, trunc);
}

template <typename K>
Laurent<K> Laurent<K>::monomial(char var, long exp, const K& c, long trunc) {
    Laurent s = zero(var, trunc);
    if (exp <= trunc && !k_is_zero(c)) {
        s.min_exp = exp;
        s.coeffs = {c};
    }
    return s;
}

template <typename K>
bool Laurent<K>::is_zero() const {
    for (const auto& c : coeffs)
        if (!k_is_zero(c)) return false;
    return true;
}

template <typename K>
K Laurent<K>::coeff(long e) const {
    if (e > trunc) throw std::out_of_range("Laurent::coeff beyond truncation");
    long i = e - min_exp;
    if (i < 0 || i >= static_cast<long>(coeffs.size())) return K(0);
    return coeffs[i];
}

template <typename K>
void Laurent<K>::set(long e, const K& c) {
    if (e > trunc) return;
    if (coeffs.empty()) {
        min_exp = e;
        coeffs = {c};
        return;
    }
    if (e < min_exp) {
        coeffs.insert(coeffs.begin(), min_exp - e, K(0));
        min_exp = e;
    } else if (e - min_exp >= static_cast<long>(coeffs.size())) {
        coeffs.resize(e - min_exp + 1, K(0));
    }
    coeffs[e - min_exp] = c;
}

template <typename K>
long Laurent<K>::order() const {
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (!k_is_zero(coeffs[i])) return min_exp + static_cast<long>(i);
    return trunc + 1;  // zero series: conventionally past the window
}

template <typename K>
void Laurent<K>::normalize() {
    size_t lead = 0;
    while (lead < coeffs.size() && k_is_zero(coeffs[lead])) ++lead;
    if (lead > 0) {
        coeffs.erase(coeffs.begin(), coeffs.begin() + lead);
        min_exp += static_cast<long>(lead);
    }
    while (!coeffs.empty() && k_is_zero(coeffs.back())) coeffs.pop_back();
    if (coeffs.empty()) min_exp = 0;
}

template <typename K>
Laurent<K> Laurent<K>::truncated(long new_trunc) const {
    Laurent s = *this;
    s.trunc = std::min(trunc, new_trunc);
    while (!s.coeffs.empty() && s.min_exp + static_cast<long>(s.coeffs.size()) - 1 > s.trunc)
        s.coeffs.pop_back();
    s.normalize();
    return s;
}

template <typename K>
Laurent<K> Laurent<K>::operator-() const {
    Laurent s = *this;
    for (auto& c : s.coeffs) c = -c;
    return s;
}

template <typename K>
Laurent<K> Laurent<K>::operator+(const Laurent& o) const {
    if (var != o.var) throw std::invalid_argument("series variable mismatch");
    Laurent s = zero(var, std::min(trunc, o.trunc));
    long lo = std::min(coeffs.empty() ? 0 : min_exp, o.coeffs.empty() ? 0 : o.min_exp);
    for (long e = lo; e <= s.trunc; ++e) {
        K c = K(0);
        if (e <= trunc) c += coeff(e);
        if (e <= o.trunc) c += o.coeff(e);
        if (!k_is_zero(c)) s.set(e, c);
    }
    s.normalize();
    return s;
}

template <typename K>
Laurent<K> Laurent<K>::operator-(const Laurent& o) const { return *this + (-o); }

template <typename K>
Laurent<K> Laurent<K>::operator*(const Laurent& o) const {
    if (var != o.var) throw std::invalid_argument("series variable mismatch");
    Laurent a = *this, b = o;
    a.normalize();
    b.normalize();
    // A zero factor is exact; the truncation window still applies.
    if (a.coeffs.empty() || b.coeffs.empty())
        return zero(var, std::min(trunc, o.trunc));
    // trunc accounting: terms beyond min(trunc_a + ord_b, trunc_b + ord_a)
    // would need unknown coefficients.
    long t = std::min(a.trunc + b.order(), b.trunc + a.order());
    Laurent s = zero(var, t);
    s.min_exp = a.min_exp + b.min_exp;
    s.coeffs.assign(std::max<long>(0, t - s.min_exp + 1), K(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (k_is_zero(a.coeffs[i])) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j) {
            long e = a.min_exp + static_cast<long>(i) + b.min_exp + static_cast<long>(j);
            if (e > t) break;
            s.coeffs[e - s.min_exp] += a.coeffs[i] * b.coeffs[j];
        }
    }
    s.normalize();
    return s;
}

template <typename K>
Laurent<K> Laurent<K>::operator*(const K& c) const {
    if (k_is_zero(c)) return zero(var, trunc);
    Laurent s = *this;
    for (auto& x : s.coeffs) x = x * c;
    return s;
}

template <typename K>
Laurent<K> Laurent<K>::inverse() const {
    Laurent a = *this;
    a.normalize();
    if (a.coeffs.empty()) throw std::domain_error("Laurent::inverse of zero series");
    long ord = a.order();
    K lead = a.coeff(ord);
    // (q^ord * u)^{-1} = q^{-ord} u^{-1}; u = 1 + positive part
    long n = a.trunc - ord;  // number of known coefficients of u beyond 1
    std::vector<K> u(n + 1), v(n + 1, K(0));
    for (long i = 0; i <= n; ++i) u[i] = a.coeff(ord + i) / lead;
    v[0] = K(1);
    for (long k = 1; k <= n; ++k) {
        K acc = K(0);
        for (long j = 1; j <= k; ++j) acc += u[j] * v[k - j];
        v[k] = -acc;
    }
    Laurent s = zero(var, a.trunc - 2 * ord);
    s.min_exp = -ord;
    s.coeffs.resize(n + 1);
    for (long i = 0; i <= n; ++i) s.coeffs[i] = v[i] / lead;
    s.normalize();
    return s;
}

template <typename K>
Laurent<K> Laurent<K>::operator/(const Laurent& o) const { return *this * o.inverse(); }

template <typename K>
Laurent<K> Laurent<K>::pow(long e) const {
    if (e == 0) {
        Laurent s = constant(var, K(1), trunc);
        return s;
    }
    Laurent base = e > 0 ? *this : inverse();
    long n = e > 0 ? e : -e;
    Laurent acc = base;
    for (long i = 1; i < n; ++i) acc = acc * base;
    return acc;
}

template <typename K>
bool Laurent<K>::operator==(const Laurent& o) const {
    if (var != o.var) return false;
    long t = std::min(trunc, o.trunc);
    long lo = std::min(coeffs.empty() ? 0 : min_exp, o.coeffs.empty() ? 0 : o.min_exp);
    for (long e = lo; e <= t; ++e)
        if (coeff(e) != o.coeff(e)) return false;
    return true;
}

template <typename K>
std::string Laurent<K>::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (long e = min_exp; e <= trunc && e - min_exp < static_cast<long>(coeffs.size()); ++e) {
        const K& c = coeffs[e - min_exp];
        if (k_is_zero(c)) continue;
        if (!first) os << " + ";
        os << "(" << k_to_string(c) << ")";
        if (e != 0) os << "*" << var << "^" << e;
        first = false;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << (trunc + 1) << ")";
    return os.str();
}

template struct Laurent<Rat>;
template struct Laurent<GaussRat>;

GSeries complexify(const QSeries& s) {
    GSeries out;
    out.var = s.var;
    out.min_exp = s.min_exp;
    out.trunc = s.trunc;
    for (const auto& c : s.coeffs) out.coeffs.push_back(GaussRat(c));
    return out;
}

size_t Poly::degree() const {
    for (size_t i = c.size(); i-- > 0;)
        if (c[i] != 0) return i;
    return 0;
}

bool Poly::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

void Poly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    Poly s;
    s.c.resize(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < s.c.size(); ++i) s.c[i] = at(i) + o.at(i);
    s.trim();
    return s;
}

Poly Poly::operator-(const Poly& o) const {
    Poly s;
    s.c.resize(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < s.c.size(); ++i) s.c[i] = at(i) - o.at(i);
    s.trim();
    return s;
}

Poly Poly::operator*(const Poly& o) const {
    Poly s;
    if (is_zero() || o.is_zero()) return s;
    s.c.assign(c.size() + o.c.size() - 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) s.c[i + j] += c[i] * o.c[j];
    }
    s.trim();
    return s;
}

bool Poly::operator==(const Poly& o) const {
    Poly a = *this, b = o;
    a.trim();
    b.trim();
    return a.c == b.c;
}

std::string Poly::to_string(char var) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        os << "(" << c[i] << ")";
        if (i > 0) os << "*" << var << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
    a.trim();
    b.trim();
    while (!b.is_zero()) {
        // a mod b
        Poly r = a;
        r.trim();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Rat f = r.c[r.degree()] / b.c[b.degree()];
            size_t shift = r.degree() - b.degree();
            Poly t;
            t.c.assign(shift + 1, Rat(0));
            t.c[shift] = f;
            r = r - t * b;
            r.trim();
        }
        a = b;
        b = r;
    }
    if (!a.is_zero()) {
        Rat lead = a.c[a.degree()];
        for (auto& x : a.c) x /= lead;
    }
    return a;
}

void RationalFunction::normalize() {
    num.trim();
    den.trim();
    if (den.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
    if (num.is_zero()) {
        num.c.clear();
        den.c = {Rat(1)};
        return;
    }
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0 || (!g.is_zero() && g.c[0] != 1)) {
        // exact division by g
        auto divide = [&](Poly p) {
            Poly q;
            p.trim();
            if (p.is_zero()) return q;
            q.c.assign(p.degree() - g.degree() + 1, Rat(0));
            for (size_t k = q.c.size(); k-- > 0;) {
                Rat f = p.at(g.degree() + k) / g.c[g.degree()];
                q.c[k] = f;
                for (size_t j = 0; j < g.c.size(); ++j) p.c[j + k] -= f * g.c[j];
            }
            return q;
        };
        num = divide(num);
        den = divide(den);
    }
    // unit-normalize: lowest nonzero denominator coefficient = 1
    size_t lo = 0;
    while (lo < den.c.size() && den.c[lo] == 0) ++lo;
    Rat unit = den.c[lo];
    for (auto& x : num.c) x /= unit;
    for (auto& x : den.c) x /= unit;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num * o.den == o.num * den;
}

std::string RationalFunction::to_string(char var) const {
    return "(" + num.to_string(var) + ") / (" + den.to_string(var) + ")";
}

QSeries expand_rational(const RationalFunction& f, long from, long to) {
    if (f.den.is_zero()) throw std::invalid_argument("expand_rational: zero denominator");
    // order of the denominator at q = 0
    long v = 0;
    while (static_cast<size_t>(v) < f.den.c.size() && f.den.c[v] == 0) ++v;
    long dtrunc = to + 2 * (v + 1);  // enough known terms for the division
    QSeries den = QSeries::zero('q', dtrunc);
    for (size_t i = v; i < f.den.c.size(); ++i)
        if (f.den.c[i] != 0) den.set(static_cast<long>(i), f.den.c[i]);
    QSeries num = QSeries::zero('q', dtrunc);
    for (size_t i = 0; i < f.num.c.size(); ++i)
        if (f.num.c[i] != 0) num.set(static_cast<long>(i), f.num.c[i]);
    QSeries s = num * den.inverse();
    s = s.truncated(to);
    // the window is [from, to]: drop anything below `from`
    QSeries out = QSeries::zero('q', to);
    for (long e = std::max(from, s.coeffs.empty() ? from : s.min_exp); e <= to; ++e) {
        Rat c = s.coeff(e);
        if (c != 0) out.set(e, c);
    }
    return out;
}

QSeries macmahon(long order) {
    if (order < 0) throw std::invalid_argument("macmahon: order must be >= 0");
    QSeries m = QSeries::constant('q', Rat(1), order);
    for (long n = 1; n <= order; ++n) {
        // multiply by (1 - q^n)^{-n}
        QSeries factor = QSeries::constant('q', Rat(1), order);
        factor.set(n, Rat(-1));
        m = m * factor.pow(-n);
    }
    return m;
}

QSeries macmahon_power(long exponent, long order) {
    QSeries m = macmahon(order);
    // substitute -q
    QSeries mm = QSeries::zero('q', order);
    for (long e = 0; e <= order; ++e) {
        Rat c = m.coeff(e);
        if (e % 2 != 0) c = -c;
        if (c != 0) mm.set(e, c);
    }
    return mm.pow(exponent);
}

QSeries normalize_dt(const QSeries& z, const QSeries& z0) {
    if (z0.is_zero()) throw std::domain_error("normalize_dt: zero normalizer");
    return z / z0;
}

std::optional<RationalFunction> pade_reconstruct(const QSeries& s_in, long max_degree) {
    QSeries s = s_in;
    s.normalize();
    if (s.coeffs.empty()) {
        RationalFunction f;
        f.num.c.clear();
        f.den.c = {Rat(1)};
        return f;
    }
    long shift = s.order();  // reconstruct q^{-shift} s as a power series
    long terms = s.trunc - shift + 1;
    if (terms < 2 * max_degree + 1)
        throw std::invalid_argument("pade_reconstruct: insufficient terms for the requested degree");
    // Find den (deg <= max_degree, den(0) = 1) and num (deg <= max_degree)
    // with den * s = num through the truncation.  Unknowns: den coefficients
    // d_1..d_m; rows: coefficients of q^k for m < k < terms must vanish.
    long m = max_degree;
    std::vector<Rat> a(terms);
    for (long i = 0; i < terms; ++i) a[i] = s.coeff(shift + i);
    MatQ A(terms - m - 1, m);
    RatVec b(terms - m - 1);
    for (long k = m + 1; k < terms; ++k) {
        for (long j = 1; j <= m; ++j) A.at(k - m - 1, j - 1) = (k - j >= 0) ? a[k - j] : Rat(0);
        b[k - m - 1] = -a[k];
    }
    auto x = solve(A, b);
    if (!x) return std::nullopt;
    Poly den;
    den.c.assign(m + 1, Rat(0));
    den.c[0] = 1;
    for (long j = 1; j <= m; ++j) den.c[j] = (*x)[j - 1];
    Poly num;
    num.c.assign(m + 1, Rat(0));
    for (long k = 0; k <= m; ++k) {
        Rat acc(0);
        for (long j = 0; j <= k; ++j) acc += den.at(j) * a[k - j];
        num.c[k] = acc;
    }
    RationalFunction f;
    f.num = num;
    f.den = den;
    // verify through the full truncation
    QSeries probe = expand_rational(f, 0, s.trunc - shift);
    for (long e = 0; e <= s.trunc - shift; ++e) {
        Rat expect = static_cast<size_t>(e) < a.size() ? a[e] : Rat(0);
        if (probe.coeff(e) != expect) return std::nullopt;
    }
    // restore the shift
    if (shift > 0) {
        Poly qs;
        qs.c.assign(shift + 1, Rat(0));
        qs.c[shift] = 1;
        f.num = f.num * qs;
    } else if (shift < 0) {
        Poly qs;
        qs.c.assign(-shift + 1, Rat(0));
        qs.c[-shift] = 1;
        f.den = f.den * qs;
    }
    f.normalize();
    return f;
}

GSeries exp_iu(const Rat& c, long u_order) {
    GSeries s = GSeries::zero('u', u_order);
    GaussRat term(Rat(1));
    GaussRat ic = gauss_i() * GaussRat(c);
    Rat fact(1);
    for (long k = 0; k <= u_order; ++k) {
        if (k > 0) {
            term *= ic;
            fact *= Rat(k);
        }
        GaussRat coeff = term / GaussRat(fact);
        if (!coeff.is_zero()) s.set(k, coeff);
    }
    return s;
}

GwDtReport gw_dt_compare(const RationalFunction& z_pt, const GSeries& z_gw, long d_beta, long excess,
                         long u_order) {
    // Evaluate num(-e^{iu}) / den(-e^{iu}) as a u-series.  The substitution
    // has constant term -1, so it must go through the rational function, not
    // through a q-series.
    long guard = u_order + 8;
    GSeries q_of_u = -exp_iu(Rat(1), guard);
    auto eval_poly = [&](const Poly& p) {
        GSeries acc = GSeries::zero('u', guard);
        GSeries power = GSeries::constant('u', GaussRat(Rat(1)), guard);
        for (size_t i = 0; i < p.c.size(); ++i) {
            if (p.c[i] != 0) acc = acc + power * GaussRat(p.c[i]);
            if (i + 1 < p.c.size()) power = power * q_of_u;
        }
        return acc;
    };
    GSeries num = eval_poly(z_pt.num);
    GSeries den = eval_poly(z_pt.den);
    if (den.is_zero())
        throw std::domain_error("gw_dt_compare: denominator vanishes identically under q = -e^{iu}");
    GSeries lhs = num / den;
    // (-q)^{-d/2} becomes e^{-i d u / 2}
    lhs = lhs * exp_iu(Rat(-d_beta, 2), guard);

    // rhs: (-iu)^(d_beta + excess) * z_gw
    long p = d_beta + excess;
    GaussRat minus_i = -gauss_i();
    GaussRat scale(Rat(1));
    for (long k = 0; k < (p >= 0 ? p : -p); ++k) scale *= (p >= 0 ? minus_i : GaussRat(Rat(1)) / minus_i);
    GSeries rhs = z_gw;
    rhs.min_exp += p;
    rhs.trunc += p;
    rhs = rhs * scale;

    GwDtReport rep;
    long t = std::min({lhs.trunc, rhs.trunc, u_order});
    long lo = std::min(lhs.coeffs.empty() ? 0 : lhs.min_exp, rhs.coeffs.empty() ? 0 : rhs.min_exp);
    for (long e = lo; e <= t; ++e) {
        GaussRat a = lhs.coeff(e), b = rhs.coeff(e);
        if (a != b) {
            rep.equal = false;
            rep.first_mismatch = e;
            rep.lhs = a;
            rep.rhs = b;
            return rep;
        }
    }
    rep.equal = true;
    return rep;
}

}  // namespace logdeg
