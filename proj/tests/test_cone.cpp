#include <doctest.h>

#include "logdeg/cone.hpp"

using namespace logdeg;

namespace {

ConeComplex p2_fan() {
    return fan_complex(2, {{"s01", {IntVec{Int(1), Int(0)}, IntVec{Int(0), Int(1)}}},
                           {"s12", {IntVec{Int(0), Int(1)}, IntVec{Int(-1), Int(-1)}}},
                           {"s20", {IntVec{Int(-1), Int(-1)}, IntVec{Int(1), Int(0)}}}});
}

}  // namespace

TEST_CASE("fan of P2 validates") {
    ConeComplex c = p2_fan();
    auto v = validate_complex(c);
    for (const auto& err : v) MESSAGE(err.code, ": ", err.message);
    CHECK(v.empty());
    CHECK(c.cones.size() == 7);  // 0, three rays, three 2-cones
}

TEST_CASE("validation flags broken complexes") {
    // Non-primitive generator.
    ConeComplex c;
    Cone cone;
    cone.id = "c";
    cone.ambient_rank = 2;
    cone.rays = {IntVec{Int(2), Int(2)}, IntVec{Int(1), Int(0)}};
    c.cones.push_back(cone);
    auto v = validate_complex(c);
    bool found = false;
    for (auto& e : v)
        if (e.code == "non-primitive-generator") found = true;
    CHECK(found);

    // Duplicate face morphism.
    ConeComplex d = p2_fan();
    d.face_maps.push_back(d.face_maps.back());
    v = validate_complex(d);
    found = false;
    for (auto& e : v)
        if (e.code == "duplicate-face-morphism") found = true;
    CHECK(found);
}

TEST_CASE("star of a ray in the P2 fan is the fan of P1") {
    ConeComplex c = p2_fan();
    // Identify the ray (1,0).
    ConeId ray_id;
    for (const auto& cone : c.cones)
        if (cone.rays.size() == 1 && cone.rays[0] == IntVec{Int(1), Int(0)}) ray_id = cone.id;
    REQUIRE(!ray_id.empty());

    StarComplex st = star(c, ray_id);
    // One 0-cone and two opposite rays in a rank-1 lattice.
    CHECK(st.complex.cones.size() == 3);
    size_t zero_cones = 0, rays = 0;
    for (const auto& cone : st.complex.cones) {
        CHECK(cone.ambient_rank == 1);
        if (cone.rays.empty()) ++zero_cones;
        if (cone.rays.size() == 1) ++rays;
    }
    CHECK(zero_cones == 1);
    CHECK(rays == 2);
    // The two rays point in opposite directions.
    std::vector<IntVec> dirs;
    for (const auto& cone : st.complex.cones)
        if (cone.rays.size() == 1) dirs.push_back(cone.rays[0]);
    REQUIRE(dirs.size() == 2);
    CHECK(dirs[0][0] == -dirs[1][0]);
    CHECK(validate_complex(st.complex).empty());
}

TEST_CASE("star at the zero cone is the identity") {
    ConeComplex c = p2_fan();
    StarComplex st = star(c, "0");
    CHECK(isomorphic(st.complex, c));
}

TEST_CASE("star composition: star(star(c,sigma),tau) = star(c,tau)") {
    ConeComplex c = p2_fan();
    ConeId ray_id, two_id;
    for (const auto& cone : c.cones) {
        if (cone.rays.size() == 1 && cone.rays[0] == IntVec{Int(1), Int(0)}) ray_id = cone.id;
        if (cone.id == "s01") two_id = cone.id;
    }
    StarComplex first = star(c, ray_id);
    StarComplex second = star(first.complex, two_id);
    StarComplex direct = star(c, two_id);
    CHECK(isomorphic(second.complex, direct.complex));
}

TEST_CASE("combinatorial flatness and reduced fibers") {
    ConeComplex ray = ray_complex();

    // Identity morphism: flat with reduced fibers.
    ConeMorphism id;
    id.source = &ray;
    id.target = &ray;
    id.assignment["0"] = {"0", MatZ::identity(1)};
    id.assignment["ray"] = {"ray", MatZ::identity(1)};
    CHECK(validate_morphism(id).empty());
    CHECK(is_combinatorially_flat(id));
    CHECK(has_reduced_fibers(id));

    // Quadrant onto the ray via (x,y) -> x + 2y: flat, reduced.
    ConeComplex quad = fan_complex(2, {{"q", {IntVec{Int(1), Int(0)}, IntVec{Int(0), Int(1)}}}});
    auto covector = [&](long a, long b) {
        MatZ m(1, 2);
        m.at(0, 0) = a;
        m.at(0, 1) = b;
        return m;
    };
    ConeMorphism sum;
    sum.source = &quad;
    sum.target = &ray;
    for (const auto& cone : quad.cones)
        sum.assignment[cone.id] = {cone.rays.empty() ? "0" : "ray", covector(1, 1)};
    CHECK(validate_morphism(sum).empty());
    CHECK(is_combinatorially_flat(sum));
    CHECK(has_reduced_fibers(sum));

    // (x,y) -> x + 2y is flat, but the ray (0,1) has image lattice 2Z, so the
    // fibers are not reduced (the fiber over 0 carries a double divisor).
    ConeMorphism skew;
    skew.source = &quad;
    skew.target = &ray;
    for (const auto& cone : quad.cones)
        skew.assignment[cone.id] = {cone.rays.empty() ? "0" : "ray", covector(1, 2)};
    CHECK(validate_morphism(skew).empty());
    CHECK(is_combinatorially_flat(skew));
    CHECK_FALSE(has_reduced_fibers(skew));

    // (x,y) -> 2x + 2y: flat but non-reduced.
    ConeMorphism dbl;
    dbl.source = &quad;
    dbl.target = &ray;
    for (const auto& cone : quad.cones)
        dbl.assignment[cone.id] = {cone.rays.empty() ? "0" : "ray", covector(2, 2)};
    CHECK(is_combinatorially_flat(dbl));
    CHECK_FALSE(has_reduced_fibers(dbl));

    // Diagonal ray into the quadrant fan: lands in the interior of the
    // 2-cone, hence not flat.
    ConeComplex diag = fan_complex(2, {{"d", {IntVec{Int(1), Int(1)}}}});
    ConeMorphism inc;
    inc.source = &diag;
    inc.target = &quad;
    for (const auto& cone : diag.cones)
        inc.assignment[cone.id] = {cone.rays.empty() ? "0" : "q", MatZ::identity(2)};
    CHECK(validate_morphism(inc).empty());
    CHECK_FALSE(is_combinatorially_flat(inc));
}

TEST_CASE("flatness is stable under composition") {
    // (x,y) -> x+y then t -> t on the ray complex; compose the assignments.
    ConeComplex quad = fan_complex(2, {{"q", {IntVec{Int(1), Int(0)}, IntVec{Int(0), Int(1)}}}});
    ConeComplex ray = ray_complex();
    MatZ cov(1, 2);
    cov.at(0, 0) = 1;
    cov.at(0, 1) = 1;
    ConeMorphism f;
    f.source = &quad;
    f.target = &ray;
    for (const auto& cone : quad.cones)
        f.assignment[cone.id] = {cone.rays.empty() ? "0" : "ray", cov};
    MatZ twice(1, 1);
    twice.at(0, 0) = 3;
    ConeMorphism g;
    g.source = &ray;
    g.target = &ray;
    g.assignment["0"] = {"0", twice};
    g.assignment["ray"] = {"ray", twice};
    REQUIRE(is_combinatorially_flat(f));
    REQUIRE(is_combinatorially_flat(g));
    ConeMorphism h;
    h.source = &quad;
    h.target = &ray;
    for (const auto& [id, a] : f.assignment)
        h.assignment[id] = {g.assignment.at(a.target).target, g.assignment.at(a.target).linear * a.linear};
    CHECK(is_combinatorially_flat(h));
}
