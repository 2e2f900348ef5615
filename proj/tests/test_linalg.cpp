#include <doctest.h>

#include "logdeg/linalg.hpp"
#include "logdeg/lp.hpp"
#include "logdeg/scalar.hpp"

using namespace logdeg;

TEST_CASE("scalar parsing round trips") {
    CHECK(parse_rat("3/2") == make_rat(3, 2));
    CHECK(parse_rat("-1/240") == make_rat(-1, 240));
    CHECK(parse_rat(" 7 ") == Rat(7));
    CHECK(rat_to_string(make_rat(-6, 4)) == "-3/2");

    GaussRat g = parse_gauss("i/4");
    CHECK(g.re == 0);
    CHECK(g.im == make_rat(1, 4));
    CHECK(parse_gauss("3i/2").im == make_rat(3, 2));
    CHECK(parse_gauss("1/2+3i/4") == GaussRat(make_rat(1, 2), make_rat(3, 4)));
    CHECK(parse_gauss("-i") == GaussRat(Rat(0), Rat(-1)));
    CHECK(parse_gauss(gauss_to_string(GaussRat(make_rat(-2, 3), make_rat(5, 7)))) ==
          GaussRat(make_rat(-2, 3), make_rat(5, 7)));
    CHECK(gauss_i() * gauss_i() == GaussRat(Rat(-1)));
}

TEST_CASE("primitive vectors") {
    CHECK(primitive(IntVec{Int(2), Int(4)}) == IntVec{Int(1), Int(2)});
    CHECK(primitive(IntVec{Int(0), Int(0)}) == IntVec{Int(0), Int(0)});
    CHECK(primitive_direction(RatVec{make_rat(1, 2), make_rat(3, 4)}) == IntVec{Int(2), Int(3)});
    CHECK(parallel_same_direction(IntVec{Int(2), Int(2)}, IntVec{Int(1), Int(1)}));
    CHECK_FALSE(parallel_same_direction(IntVec{Int(-1), Int(-1)}, IntVec{Int(1), Int(1)}));
}

TEST_CASE("rref, solve, nullspace") {
    MatQ A(2, 3);
    A.at(0, 0) = 1;
    A.at(0, 1) = 2;
    A.at(0, 2) = 3;
    A.at(1, 0) = 2;
    A.at(1, 1) = 4;
    A.at(1, 2) = 7;
    CHECK(rank(A) == 2);
    auto ns = nullspace(A);
    REQUIRE(ns.size() == 1);
    CHECK(A.apply(ns[0]) == RatVec{Rat(0), Rat(0)});

    RatVec b{Rat(6), Rat(13)};
    auto x = solve(A, b);
    REQUIRE(x.has_value());
    CHECK(A.apply(*x) == b);

    MatQ B(2, 2);
    B.at(0, 0) = 1;
    B.at(0, 1) = 1;
    B.at(1, 0) = 1;
    B.at(1, 1) = 1;
    CHECK_FALSE(solve(B, RatVec{Rat(0), Rat(1)}).has_value());
}

TEST_CASE("smith normal form basics") {
    MatZ A(2, 2);
    A.at(0, 0) = 2;
    A.at(0, 1) = 4;
    A.at(1, 0) = 6;
    A.at(1, 1) = 8;
    Smith s = smith_normal_form(A);
    CHECK(s.U * A * s.V == s.D);
    CHECK(s.D.at(0, 0) == 2);
    CHECK(s.D.at(1, 1) == 4);  // invariant factors of [[2,4],[6,8]]
    CHECK(s.D.at(0, 1) == 0);
    CHECK(s.D.at(1, 0) == 0);
    Int du = determinant(s.U);
    CHECK((du == 1 || du == -1));

    // Random-ish rectangular case: verify the factorization identity and the
    // divisibility chain.
    MatZ B(3, 2);
    B.at(0, 0) = 6;
    B.at(0, 1) = 10;
    B.at(1, 0) = 4;
    B.at(1, 1) = 8;
    B.at(2, 0) = 2;
    B.at(2, 1) = 14;
    Smith sb = smith_normal_form(B);
    CHECK(sb.U * B * sb.V == sb.D);
    Int d0 = sb.D.at(0, 0), d1 = sb.D.at(1, 1);
    CHECK(d0 > 0);
    CHECK(d1 % d0 == 0);
}

TEST_CASE("lattice quotient and index") {
    // Z^2 / <(1,0)> has rank 1; the image of (0,1) generates.
    LatticeQuotient q = lattice_quotient(2, {IntVec{Int(1), Int(0)}});
    CHECK(q.projection.rows == 1);
    IntVec img = q.projection.apply(IntVec{Int(0), Int(1)});
    CHECK((img[0] == 1 || img[0] == -1));
    CHECK(q.projection * q.section == MatZ::identity(1));
    CHECK(is_zero(q.projection.apply(IntVec{Int(1), Int(0)})));

    // index of <(1,2),(0,4)> in Z^2 is 4
    std::vector<IntVec> l = {IntVec{Int(1), Int(0)}, IntVec{Int(0), Int(1)}};
    std::vector<IntVec> m = {IntVec{Int(1), Int(2)}, IntVec{Int(0), Int(4)}};
    CHECK(lattice_index(l, m) == 4);

    // saturation of <(2,2)> is <(1,1)>
    auto sat = saturated_lattice_basis({IntVec{Int(2), Int(2)}});
    REQUIRE(sat.size() == 1);
    CHECK(primitive(sat[0]) == IntVec{Int(1), Int(1)});
    CHECK(content(sat[0]) == 1);
}

TEST_CASE("lp feasibility and optimization") {
    // max x + y subject to x >= 0, y >= 0, x + y <= 5  (as -x - y >= -5)
    LinearProgram lp;
    lp.num_vars = 2;
    lp.ge.push_back({{Rat(1), Rat(0)}, Rat(0)});
    lp.ge.push_back({{Rat(0), Rat(1)}, Rat(0)});
    lp.ge.push_back({{Rat(-1), Rat(-1)}, Rat(-5)});
    lp.objective = {Rat(1), Rat(1)};
    lp.maximize = true;
    LPResult r = solve_lp(lp);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == 5);

    // Infeasible: x >= 1 and -x >= 0
    LinearProgram bad;
    bad.num_vars = 1;
    bad.ge.push_back({{Rat(1)}, Rat(1)});
    bad.ge.push_back({{Rat(-1)}, Rat(0)});
    CHECK_FALSE(lp_feasible(bad));

    // Unbounded: max x with x >= 0
    LinearProgram ub;
    ub.num_vars = 1;
    ub.ge.push_back({{Rat(1)}, Rat(0)});
    ub.objective = {Rat(1)};
    CHECK(solve_lp(ub).status == LPStatus::Unbounded);

    // strict point inside the open quadrant intersected with x + y = 1
    auto p = strict_point(2, {{{Rat(1), Rat(1)}, Rat(1)}},
                          {{{Rat(1), Rat(0)}, Rat(0)}, {{Rat(0), Rat(1)}, Rat(0)}});
    REQUIRE(p.has_value());
    CHECK((*p)[0] + (*p)[1] == 1);
    CHECK((*p)[0] > 0);
    CHECK((*p)[1] > 0);

    // no strict point on x = 0 with x > 0
    CHECK_FALSE(strict_point(1, {{{Rat(1)}, Rat(0)}}, {{{Rat(1)}, Rat(0)}}).has_value());
}

TEST_CASE("cone predicates") {
    std::vector<IntVec> quadrant = {IntVec{Int(1), Int(0)}, IntVec{Int(0), Int(1)}};
    CHECK(in_cone(quadrant, RatVec{make_rat(1, 2), Rat(3)}));
    CHECK_FALSE(in_cone(quadrant, RatVec{Rat(-1), Rat(0)}));
    CHECK(strongly_convex(quadrant));
    CHECK_FALSE(strongly_convex({IntVec{Int(1), Int(0)}, IntVec{Int(-1), Int(0)}}));
    CHECK(same_cone(quadrant, {IntVec{Int(0), Int(1)}, IntVec{Int(1), Int(0)}}));
    CHECK_FALSE(same_cone(quadrant, {IntVec{Int(1), Int(1)}, IntVec{Int(1), Int(0)}}));
}
