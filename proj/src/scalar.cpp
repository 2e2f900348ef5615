#include "logdeg/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace logdeg {

Rat parse_rat(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("parse_rat: empty string");
    // Normalize unicode minus that shows up in hand-written files.
    std::string u;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i + 2 < t.size() + 1 && (unsigned char)t[i] == 0xE2 && i + 2 < t.size() &&
            (unsigned char)t[i + 1] == 0x88 && (unsigned char)t[i + 2] == 0x92) {
            u.push_back('-');
            i += 2;
        } else {
            u.push_back(t[i]);
        }
    }
    try {
        Rat r(u);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
    }
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

GaussRat parse_gauss(const std::string& s) {
    std::string t;
    for (size_t i = 0; i < s.size(); ++i) {
        unsigned char c = s[i];
        if (isspace(c)) continue;
        if (c == 0xE2 && i + 2 < s.size() && (unsigned char)s[i + 1] == 0x88 &&
            (unsigned char)s[i + 2] == 0x92) {
            t.push_back('-');
            i += 2;
            continue;
        }
        t.push_back(static_cast<char>(c));
    }
    if (t.empty()) throw std::invalid_argument("parse_gauss: empty string");

    // Split into additive terms at top-level +/- (not the leading sign, not after '/').
    std::vector<std::string> terms;
    std::string cur;
    for (size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        if ((c == '+' || c == '-') && i > 0 && t[i - 1] != '/' && t[i - 1] != '+' && t[i - 1] != '-') {
            terms.push_back(cur);
            cur.clear();
            if (c == '-') cur.push_back('-');
        } else {
            cur.push_back(c);
        }
    }
    terms.push_back(cur);

    GaussRat out;
    for (auto& term : terms) {
        if (term.empty()) throw std::invalid_argument("parse_gauss: malformed '" + s + "'");
        auto ipos = term.find('i');
        if (ipos == std::string::npos) {
            out.re += parse_rat(term);
            continue;
        }
        // Forms: "i", "-i", "ci", "i/d", "ci/d" with c, d integers.
        std::string num = term.substr(0, ipos);
        std::string rest = term.substr(ipos + 1);
        if (num.empty() || num == "+") num = "1";
        else if (num == "-") num = "-1";
        if (!rest.empty()) {
            if (rest[0] != '/') throw std::invalid_argument("parse_gauss: malformed '" + s + "'");
            num += rest;
        }
        out.im += parse_rat(num);
    }
    return out;
}

std::string gauss_to_string(const GaussRat& g) {
    if (g.im == 0) return rat_to_string(g.re);
    std::ostringstream os;
    bool wrote_re = false;
    if (g.re != 0) {
        os << g.re;
        wrote_re = true;
    }
    Rat im = g.im;
    if (wrote_re && im > 0) os << "+";
    if (im == -1) {
        os << "-i";
        return os.str();
    }
    if (im == 1) {
        os << "i";
        return os.str();
    }
    // c i / d renders as "ci/d"
    os << im.get_num() << "i";
    if (im.get_den() != 1) os << "/" << im.get_den();
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussRat& g) { return os << gauss_to_string(g); }

Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    return g;
}

IntVec primitive(const IntVec& v) {
    Int g = content(v);
    if (g == 0) return v;
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

bool parallel_same_direction(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) return false;
    if (is_zero(a) || is_zero(b)) return false;
    return primitive(a) == primitive(b);
}

RatVec to_rat(const IntVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

IntVec to_int(const RatVec& v) {
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i])) throw std::invalid_argument("to_int: non-integral entry " + rat_to_string(v[i]));
        out[i] = rat_num(v[i]);
    }
    return out;
}

IntVec primitive_direction(const RatVec& v) {
    Int lcm = 1;
    for (const Rat& x : v) {
        Int d = rat_den(x);
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
    IntVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(lcm);
        w[i] = rat_num(scaled);
    }
    return primitive(w);
}

RatVec operator+(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVec operator*(const Rat& c, const RatVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
    IntVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
    IntVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IntVec operator*(const Int& c, const IntVec& v) {
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

std::string vec_to_string(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string vec_to_string(const RatVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

}  // namespace logdeg
