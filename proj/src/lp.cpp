#include "logdeg/lp.hpp"

#include <cassert>

namespace logdeg {

namespace {

// Dense exact simplex on min c.x, A x = b, x >= 0, b >= 0, with Bland's rule.
// The objective is carried as an extra row; obj[n] holds -z.
struct Tableau {
    size_t m, n;
    MatQ A;   // m x (n+1), last column is b
    RatVec obj;  // n+1
    std::vector<size_t> basis;

    Rat& b(size_t i) { return A.at(i, n); }

    void pivot(size_t row, size_t col) {
        Rat inv = Rat(1) / A.at(row, col);
        for (size_t j = 0; j <= n; ++j) A.at(row, j) *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || A.at(i, col) == 0) continue;
            Rat f = A.at(i, col);
            for (size_t j = 0; j <= n; ++j) A.at(i, j) -= f * A.at(row, j);
        }
        if (obj[col] != 0) {
            Rat f = obj[col];
            for (size_t j = 0; j <= n; ++j) obj[j] -= f * A.at(row, j);
        }
        basis[row] = col;
    }

    void price_out_basis() {
        for (size_t i = 0; i < m; ++i) {
            size_t bi = basis[i];
            if (obj[bi] == 0) continue;
            Rat f = obj[bi];
            for (size_t j = 0; j <= n; ++j) obj[j] -= f * A.at(i, j);
        }
    }

    // Minimizes over columns [0, col_limit); returns false if unbounded.
    bool run(size_t col_limit) {
        for (;;) {
            size_t col = col_limit;
            for (size_t j = 0; j < col_limit; ++j)
                if (obj[j] < 0) {  // Bland: first improving column
                    col = j;
                    break;
                }
            if (col == col_limit) return true;
            size_t row = m;
            for (size_t i = 0; i < m; ++i) {
                if (A.at(i, col) <= 0) continue;
                if (row == m) {
                    row = i;
                    continue;
                }
                Rat cur = b(i) / A.at(i, col);
                Rat best = b(row) / A.at(row, col);
                if (cur < best || (cur == best && basis[i] < basis[row])) row = i;
            }
            if (row == m) return false;
            pivot(row, col);
        }
    }

    Rat objective_value() const { return -obj[n]; }
};

}  // namespace

LPResult solve_lp(const LinearProgram& lp) {
    // Standard form: free variable x_i = u_i - v_i; each ">=" row gets a
    // surplus variable; artificials close the basis.
    size_t nf = lp.num_vars;
    size_t ns = lp.ge.size();
    size_t n = 2 * nf + ns;
    size_t m = lp.eq.size() + lp.ge.size();

    Tableau t;
    t.m = m;
    t.n = n + m;
    t.A = MatQ(m, n + m + 1);
    t.basis.resize(m);

    size_t r = 0;
    auto put_row = [&](const LinConstraint& cst, int surplus_col) {
        assert(cst.coeffs.size() == nf);
        for (size_t i = 0; i < nf; ++i) {
            t.A.at(r, 2 * i) = cst.coeffs[i];
            t.A.at(r, 2 * i + 1) = -cst.coeffs[i];
        }
        if (surplus_col >= 0) t.A.at(r, static_cast<size_t>(surplus_col)) = -1;
        t.A.at(r, t.n) = cst.rhs;
        ++r;
    };
    for (const auto& e : lp.eq) put_row(e, -1);
    for (size_t k = 0; k < lp.ge.size(); ++k) put_row(lp.ge[k], static_cast<int>(2 * nf + k));
    for (size_t i = 0; i < m; ++i) {
        if (t.A.at(i, t.n) < 0)
            for (size_t j = 0; j <= t.n; ++j) t.A.at(i, j) = -t.A.at(i, j);
        t.A.at(i, n + i) = 1;
        t.basis[i] = n + i;
    }

    // Phase I: minimize the sum of artificials.
    t.obj.assign(t.n + 1, Rat(0));
    for (size_t i = 0; i < m; ++i) t.obj[n + i] = 1;
    t.price_out_basis();
    t.run(t.n);  // cannot be unbounded (objective >= 0)
    if (t.objective_value() != 0) return {LPStatus::Infeasible, Rat(0), {}};

    // Drive remaining artificials out of the basis; rows that cannot pivot
    // are redundant equalities and stay harmless at value zero.
    for (size_t i = 0; i < m; ++i) {
        if (t.basis[i] < n) continue;
        for (size_t j = 0; j < n; ++j)
            if (t.A.at(i, j) != 0) {
                t.pivot(i, j);
                break;
            }
    }

    // Phase II.
    t.obj.assign(t.n + 1, Rat(0));
    if (!lp.objective.empty()) {
        assert(lp.objective.size() == nf);
        for (size_t i = 0; i < nf; ++i) {
            Rat ci = lp.maximize ? -lp.objective[i] : lp.objective[i];
            t.obj[2 * i] = ci;
            t.obj[2 * i + 1] = -ci;
        }
    }
    t.price_out_basis();
    if (!t.run(n)) return {LPStatus::Unbounded, Rat(0), {}};

    RatVec x(nf, Rat(0));
    for (size_t i = 0; i < m; ++i) {
        size_t bi = t.basis[i];
        if (bi >= 2 * nf) continue;
        if (bi % 2 == 0)
            x[bi / 2] += t.A.at(i, t.n);
        else
            x[bi / 2] -= t.A.at(i, t.n);
    }
    Rat val(0);
    if (!lp.objective.empty())
        for (size_t i = 0; i < nf; ++i) val += lp.objective[i] * x[i];
    return {LPStatus::Optimal, val, x};
}

bool lp_feasible(const LinearProgram& lp) {
    LinearProgram f = lp;
    f.objective.clear();
    return solve_lp(f).status == LPStatus::Optimal;
}

std::optional<RatVec> strict_point(size_t num_vars, const std::vector<LinConstraint>& eqs,
                                   const std::vector<LinConstraint>& strict) {
    // max t subject to a.x - t >= b for the strict rows, t <= 1.
    LinearProgram lp;
    lp.num_vars = num_vars + 1;
    for (const auto& e : eqs) {
        LinConstraint c = e;
        c.coeffs.push_back(Rat(0));
        lp.eq.push_back(std::move(c));
    }
    for (const auto& s : strict) {
        LinConstraint c = s;
        c.coeffs.push_back(Rat(-1));
        lp.ge.push_back(std::move(c));
    }
    {
        LinConstraint cap;
        cap.coeffs.assign(num_vars + 1, Rat(0));
        cap.coeffs[num_vars] = -1;
        cap.rhs = -1;  // t <= 1
        lp.ge.push_back(std::move(cap));
    }
    lp.objective.assign(num_vars + 1, Rat(0));
    lp.objective[num_vars] = 1;
    lp.maximize = true;
    LPResult r = solve_lp(lp);
    if (r.status != LPStatus::Optimal || r.value <= 0) return std::nullopt;
    RatVec x(r.point.begin(), r.point.begin() + num_vars);
    return x;
}

bool in_cone(const std::vector<IntVec>& generators, const RatVec& x) {
    if (is_zero(x)) return true;
    if (generators.empty()) return false;
    size_t n = x.size();
    LinearProgram lp;
    lp.num_vars = generators.size();
    for (size_t i = 0; i < n; ++i) {
        LinConstraint c;
        c.coeffs.resize(generators.size());
        for (size_t j = 0; j < generators.size(); ++j) c.coeffs[j] = Rat(generators[j][i]);
        c.rhs = x[i];
        lp.eq.push_back(std::move(c));
    }
    for (size_t j = 0; j < generators.size(); ++j) {
        LinConstraint c;
        c.coeffs.assign(generators.size(), Rat(0));
        c.coeffs[j] = 1;
        c.rhs = 0;
        lp.ge.push_back(std::move(c));
    }
    return lp_feasible(lp);
}

bool strongly_convex(const std::vector<IntVec>& generators) {
    if (generators.empty()) return true;
    // Not strongly convex iff a nonzero nonnegative combination vanishes.
    LinearProgram lp;
    lp.num_vars = generators.size();
    size_t n = generators[0].size();
    for (size_t i = 0; i < n; ++i) {
        LinConstraint c;
        c.coeffs.resize(generators.size());
        for (size_t j = 0; j < generators.size(); ++j) c.coeffs[j] = Rat(generators[j][i]);
        c.rhs = 0;
        lp.eq.push_back(std::move(c));
    }
    {
        LinConstraint sum;
        sum.coeffs.assign(generators.size(), Rat(1));
        sum.rhs = 1;
        lp.eq.push_back(std::move(sum));
    }
    for (size_t j = 0; j < generators.size(); ++j) {
        LinConstraint c;
        c.coeffs.assign(generators.size(), Rat(0));
        c.coeffs[j] = 1;
        c.rhs = 0;
        lp.ge.push_back(std::move(c));
    }
    return !lp_feasible(lp);
}

bool same_cone(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
    for (const auto& g : a)
        if (!in_cone(b, to_rat(g))) return false;
    for (const auto& g : b)
        if (!in_cone(a, to_rat(g))) return false;
    return true;
}

}  // namespace logdeg
