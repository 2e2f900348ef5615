#pragma once

#include "logdeg/linalg.hpp"
#include "logdeg/scalar.hpp"

#include <optional>
#include <vector>

namespace logdeg {

// Small exact linear programs over Q.  All variables are free unless
// constrained; the solver converts to standard form internally.

struct LinConstraint {
    RatVec coeffs;
    Rat rhs;
};

struct LinearProgram {
    size_t num_vars = 0;
    std::vector<LinConstraint> eq;  // a.x == b
    std::vector<LinConstraint> ge;  // a.x >= b
    RatVec objective;               // empty means feasibility only
    bool maximize = true;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rat value;
    RatVec point;
};

LPResult solve_lp(const LinearProgram& lp);

bool lp_feasible(const LinearProgram& lp);

// A point satisfying all equalities and all inequalities STRICTLY
// (a.x > b), or nullopt if the open region is empty.
std::optional<RatVec> strict_point(size_t num_vars, const std::vector<LinConstraint>& eqs,
                                   const std::vector<LinConstraint>& strict);

// Membership of x in cone(generators); emptyset of generators is the origin.
bool in_cone(const std::vector<IntVec>& generators, const RatVec& x);

// True iff cone(generators) contains no line.
bool strongly_convex(const std::vector<IntVec>& generators);

// True iff cone(A) == cone(B) as subsets of Q^n.
bool same_cone(const std::vector<IntVec>& a, const std::vector<IntVec>& b);

}  // namespace logdeg
