#include <doctest.h>

#include "logdeg/one_complex.hpp"

using namespace logdeg;

namespace {

OCVertex vtx(const std::string& id, std::vector<long> pos) {
    OCVertex v;
    v.id = id;
    for (long x : pos) v.pos.push_back(Rat(x));
    return v;
}

IntVec ivec(std::vector<long> v) {
    IntVec out;
    for (long x : v) out.push_back(Int(x));
    return out;
}

OneComplex tropical_line() {
    OneComplex g;
    g.ambient_rank = 2;
    g.vertices = {vtx("v", {0, 0})};
    g.rays = {{"r1", "v", ivec({1, 0})}, {"r2", "v", ivec({0, 1})}, {"r3", "v", ivec({-1, -1})}};
    return g;
}

}  // namespace

TEST_CASE("one-complex validation") {
    OneComplex line = tropical_line();
    CHECK(validate_one_complex(line).empty());

    // crossing cells are rejected
    OneComplex bad;
    bad.ambient_rank = 2;
    bad.vertices = {vtx("a", {-1, 0}), vtx("b", {1, 0}), vtx("c", {0, -1}), vtx("d", {0, 1})};
    bad.edges = {{"e1", "a", "b", ivec({1, 0}), Rat(2)}, {"e2", "c", "d", ivec({0, 1}), Rat(2)}};
    bool crossing = false;
    for (const auto& v : validate_one_complex(bad))
        if (v.code == "crossing-cells") crossing = true;
    CHECK(crossing);

    // overlapping collinear cells are rejected
    OneComplex ovl;
    ovl.ambient_rank = 2;
    ovl.vertices = {vtx("a", {0, 0}), vtx("b", {2, 0}), vtx("c", {1, 0})};
    ovl.edges = {{"e1", "a", "b", ivec({1, 0}), Rat(2)}};
    ovl.rays = {{"r1", "c", ivec({1, 0})}};
    bool overlap = false, vertex_in = false;
    for (const auto& v : validate_one_complex(ovl)) {
        if (v.code == "overlapping-cells") overlap = true;
        if (v.code == "vertex-in-cell-interior") vertex_in = true;
    }
    CHECK(overlap);
    CHECK(vertex_in);
}

TEST_CASE("purity") {
    // single isolated vertex: free, not pure
    OneComplex pt;
    pt.ambient_rank = 2;
    pt.vertices = {vtx("v", {0, 0})};
    CHECK_FALSE(is_pure(pt));

    // segment subdivided by a midpoint: linear 2-valent, not pure
    OneComplex seg;
    seg.ambient_rank = 2;
    seg.vertices = {vtx("a", {0, 0}), vtx("m", {1, 0}), vtx("b", {2, 0})};
    seg.edges = {{"e1", "a", "m", ivec({1, 0}), Rat(1)}, {"e2", "m", "b", ivec({1, 0}), Rat(1)}};
    CHECK_FALSE(is_pure(seg));

    CHECK(is_pure(tropical_line()));
}

TEST_CASE("retract to pure") {
    // subdivided segment retracts to the unsubdivided one
    OneComplex seg;
    seg.ambient_rank = 2;
    seg.vertices = {vtx("a", {0, 0}), vtx("m", {1, 0}), vtx("b", {2, 0})};
    seg.edges = {{"e1", "a", "m", ivec({1, 0}), Rat(1)}, {"e2", "m", "b", ivec({1, 0}), Rat(1)}};
    OneComplex r = retract_to_pure(seg);
    CHECK(r.vertices.size() == 2);
    REQUIRE(r.edges.size() == 1);
    CHECK(r.edges[0].length == 2);
    CHECK(is_pure(r));

    // pure complexes are fixed
    OneComplex line = tropical_line();
    OneComplex rl = retract_to_pure(line);
    CHECK(rl.vertices.size() == 1);
    CHECK(rl.rays.size() == 3);

    // two free vertices and one edge: the edge remains
    OneComplex mix;
    mix.ambient_rank = 2;
    mix.vertices = {vtx("a", {0, 0}), vtx("b", {1, 0}), vtx("f1", {5, 5}), vtx("f2", {6, 6})};
    mix.edges = {{"e", "a", "b", ivec({1, 0}), Rat(1)}};
    OneComplex rm = retract_to_pure(mix);
    CHECK(rm.vertices.size() == 2);
    CHECK(rm.edges.size() == 1);

    // idempotence
    OneComplex rr = retract_to_pure(rm);
    CHECK(rr.vertices.size() == rm.vertices.size());
    CHECK(rr.edges.size() == rm.edges.size());

    // a 2-valent vertex bending (not linear) survives
    OneComplex bend;
    bend.ambient_rank = 2;
    bend.vertices = {vtx("a", {0, 0}), vtx("m", {1, 0}), vtx("b", {1, 1})};
    bend.edges = {{"e1", "a", "m", ivec({1, 0}), Rat(1)}, {"e2", "m", "b", ivec({0, 1}), Rat(1)}};
    CHECK(retract_to_pure(bend).vertices.size() == 3);
}

TEST_CASE("decorated retraction keeps labels consistent") {
    OneComplex seg;
    seg.ambient_rank = 2;
    seg.vertices = {vtx("a", {0, 0}), vtx("m", {1, 0}), vtx("b", {2, 0})};
    seg.edges = {{"e1", "a", "m", ivec({1, 0}), Rat(1)}, {"e2", "m", "b", ivec({1, 0}), Rat(1)}};
    ChowDecoration d;
    d.edge_labels["e1"] = 3;
    d.edge_labels["e2"] = 3;
    d.vertex_classes["a"] = ivec({1});
    d.vertex_classes["m"] = ivec({0});
    d.vertex_classes["b"] = ivec({2});
    auto [r, rd] = retract_to_pure(seg, d);
    CHECK(r.vertices.size() == 2);
    REQUIRE(r.edges.size() == 1);
    CHECK(rd.edge_labels.at(r.edges[0].id) == 3);
    // total class preserved
    Int total = 0;
    for (auto& [id, c] : rd.vertex_classes) total += c[0];
    CHECK(total == 3);

    // unequal labels block the merge
    ChowDecoration d2 = d;
    d2.edge_labels["e2"] = 5;
    auto [r2, rd2] = retract_to_pure(seg, d2);
    CHECK(r2.vertices.size() == 3);
}

TEST_CASE("specialization merge adds decorations") {
    OneComplex g;
    g.ambient_rank = 2;
    g.vertices = {vtx("a", {0, 0}), vtx("b", {0, 0}), vtx("c", {1, 0})};
    // two vertices at the same spot to be merged (a degenerate instruction),
    // with an edge from each
    g.edges = {{"e1", "a", "c", ivec({1, 0}), Rat(1)}, {"e2", "b", "c", ivec({1, 0}), Rat(1)}};
    ChowDecoration d;
    d.edge_labels["e1"] = 1;
    d.edge_labels["e2"] = 2;
    d.vertex_classes["a"] = ivec({1, 0});
    d.vertex_classes["b"] = ivec({0, 2});
    auto [m, md] = specialize_merge(g, d, {{"a", "b"}});
    CHECK(m.vertices.size() == 2);
    CHECK(md.vertex_classes.at("a") == ivec({1, 2}));
}

TEST_CASE("balancing") {
    // degree-1 tropical line balances
    TropicalMap line;
    line.ambient_rank = 2;
    line.vertices = {{"v", {Rat(0), Rat(0)}, Int(0), {}}};
    line.legs = {{"l1", "v", 1, ivec({1, 0}), Int(1)},
                 {"l2", "v", 2, ivec({0, 1}), Int(1)},
                 {"l3", "v", 3, ivec({-1, -1}), Int(1)}};
    CHECK(check_balancing(line).empty());

    // weight-2 ray against weight-1 opposite ray does not balance
    TropicalMap bad;
    bad.ambient_rank = 2;
    bad.vertices = {{"v", {Rat(0), Rat(0)}, Int(0), {}}};
    bad.legs = {{"l1", "v", 1, ivec({1, 0}), Int(2)}, {"l2", "v", 2, ivec({-1, 0}), Int(1)}};
    auto viol = check_balancing(bad);
    REQUIRE(viol.size() == 1);
    CHECK(viol[0] == "v");

    // the two-vertex trivalent configuration with legs (0,1),(2,0) and
    // (0,2),(-2,-3), joined by a weight-1 edge in direction (-2,-1)
    TropicalMap triv;
    triv.ambient_rank = 2;
    triv.vertices = {{"v1", {Rat(0), Rat(0)}, Int(0), {}}, {"v2", {Rat(-2), Rat(-1)}, Int(0), {}}};
    triv.edges = {{"e", "v1", "v2", Int(1)}};
    triv.legs = {{"l1", "v1", 1, ivec({0, 1}), Int(1)},
                 {"l2", "v1", 2, ivec({1, 0}), Int(2)},
                 {"l3", "v2", 3, ivec({0, 1}), Int(2)},
                 {"l4", "v2", 4, ivec({-2, -3}), Int(1)}};
    CHECK(validate_tropical_map(triv).empty());
    CHECK(check_balancing(triv).empty());

    // weight-2 edge variant: weighted legs (2,0),(0,2) at one vertex,
    // (0,1),(-2,-3) at the other, edge direction (-1,-1) with dilation 2
    TropicalMap triv2;
    triv2.ambient_rank = 2;
    triv2.vertices = {{"w1", {Rat(0), Rat(0)}, Int(0), {}}, {"w2", {Rat(-1), Rat(-1)}, Int(0), {}}};
    triv2.edges = {{"e", "w1", "w2", Int(2)}};
    triv2.legs = {{"l1", "w1", 1, ivec({1, 0}), Int(2)},
                  {"l2", "w1", 2, ivec({0, 1}), Int(2)},
                  {"l3", "w2", 3, ivec({0, 1}), Int(1)},
                  {"l4", "w2", 4, ivec({-2, -3}), Int(1)}};
    CHECK(validate_tropical_map(triv2).empty());
    CHECK(check_balancing(triv2).empty());
}

TEST_CASE("chow of a tropical map") {
    // injective map: decorations transported verbatim
    TropicalMap inj;
    inj.ambient_rank = 2;
    inj.vertices = {{"a", {Rat(0), Rat(0)}, Int(0), ivec({1})}, {"b", {Rat(1), Rat(0)}, Int(0), ivec({2})}};
    inj.edges = {{"e", "a", "b", Int(3)}};
    auto [img, dec] = chow_of_tropical_map(inj);
    CHECK(img.vertices.size() == 2);
    REQUIRE(img.edges.size() == 1);
    CHECK(dec.edge_labels.at(img.edges[0].id) == 3);
    Int total = 0;
    for (auto& [id, c] : dec.vertex_classes) total += c[0];
    CHECK(total == 3);

    // two edges over one image edge: labels add
    TropicalMap dbl;
    dbl.ambient_rank = 2;
    dbl.vertices = {{"a", {Rat(0), Rat(0)}, Int(0), {}}, {"b", {Rat(1), Rat(0)}, Int(0), {}}};
    dbl.edges = {{"e1", "a", "b", Int(1)}, {"e2", "a", "b", Int(1)}};
    auto [img2, dec2] = chow_of_tropical_map(dbl);
    REQUIRE(img2.edges.size() == 1);
    CHECK(dec2.edge_labels.at(img2.edges[0].id) == 2);

    // a crossing produces a 4-valent image vertex with class 0
    TropicalMap cross;
    cross.ambient_rank = 2;
    cross.vertices = {{"a", {Rat(-1), Rat(0)}, Int(0), ivec({1})},
                      {"b", {Rat(1), Rat(0)}, Int(0), ivec({1})},
                      {"c", {Rat(0), Rat(-1)}, Int(0), ivec({1})},
                      {"d", {Rat(0), Rat(1)}, Int(0), ivec({1})}};
    cross.edges = {{"e1", "a", "b", Int(1)}, {"e2", "c", "d", Int(1)}};
    auto [img3, dec3] = chow_of_tropical_map(cross);
    CHECK(img3.vertices.size() == 5);
    CHECK(img3.edges.size() == 4);
    CHECK(validate_one_complex(img3).empty());
    bool found_origin = false;
    for (const auto& v : img3.vertices)
        if (v.pos == RatVec{Rat(0), Rat(0)}) {
            found_origin = true;
            CHECK(is_zero(dec3.vertex_classes.at(v.id)));
            CHECK(img3.valence(v.id) == 4);
        }
    CHECK(found_origin);

    // per-edge label tally matches an independent count over preimages
    for (const auto& e : img3.edges) CHECK(dec3.edge_labels.at(e.id) == 1);
}

TEST_CASE("leg directions must follow ambient rays") {
    std::vector<IntVec> rays = {ivec({1, 0}), ivec({0, 1}), ivec({-1, -1})};
    TropicalMap t;
    t.ambient_rank = 2;
    t.vertices = {{"v", {Rat(0), Rat(0)}, Int(0), {}}};
    t.legs = {{"l", "v", 1, ivec({1, 1}), Int(1)}};
    bool flagged = false;
    for (const auto& v : validate_tropical_map(t, &rays))
        if (v.code == "leg-not-along-ray") flagged = true;
    CHECK(flagged);
}
