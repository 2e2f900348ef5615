#pragma once

#include "logdeg/polyhedral.hpp"
#include "logdeg/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace logdeg {

// Embedded polyhedral complexes of dimension <= 1, realized in a fixed
// lattice (either a fan's coordinates or a slice's).  Vertices carry the id
// of the ambient face containing them when an ambient is in play.

struct OCVertex {
    std::string id;
    RatVec pos;
    ConeId face;  // containing ambient face; empty when ambient-free
};

struct OCEdge {
    std::string id;
    std::string tail, head;  // pos(head) = pos(tail) + length * dir
    IntVec dir;              // primitive
    Rat length;              // positive
};

struct OCRay {
    std::string id;
    std::string base;
    IntVec dir;  // primitive
};

struct OneComplex {
    size_t ambient_rank = 0;
    std::vector<OCVertex> vertices;
    std::vector<OCEdge> edges;
    std::vector<OCRay> rays;

    const OCVertex* find_vertex(const std::string& id) const;
    const OCVertex& vertex(const std::string& id) const;
    RatVec edge_head_pos(const OCEdge& e) const;

    // Cell ends incident to a vertex: outgoing primitive directions.
    std::vector<IntVec> directions_at(const std::string& vertex_id) const;
    size_t valence(const std::string& vertex_id) const;
};

struct ChowDecoration {
    std::map<std::string, Int> edge_labels;     // edge or ray id -> n_e > 0
    std::map<std::string, IntVec> vertex_classes;
};

struct HilbertDecoration {
    ChowDecoration chow;
    std::map<std::string, Int> vertex_euler;
};

// Intrinsic validation: edge geometry consistent, directions primitive,
// lengths positive, realized cells embedded (pairwise disjoint relative
// interiors).
std::vector<Violation> validate_one_complex(const OneComplex& g);

// Ambient containment on top of the intrinsic checks.
std::vector<Violation> validate_in(const OneComplex& g, const PolyhedralComplex& ambient);

std::vector<Violation> validate_chow(const OneComplex& g, const ChowDecoration& d);

bool is_pure(const OneComplex& g);

// Erases free vertices and linear 2-valent vertices.  Idempotent; the
// realized point set only loses the free vertices.
OneComplex retract_to_pure(const OneComplex& g);

// Decoration-aware variant: a 2-valent vertex is only erased when its class
// is zero (or absent) and the two incident labels agree; the merged cell
// keeps the common label.
std::pair<OneComplex, ChowDecoration> retract_to_pure(const OneComplex& g, const ChowDecoration& d);

// Merges groups of vertices (an explicit specialization instruction) adding
// decorations; all vertices of a group must share a position target given by
// the first member of the group.
std::pair<OneComplex, ChowDecoration> specialize_merge(const OneComplex& g, const ChowDecoration& d,
                                                       const std::vector<std::vector<std::string>>& groups);

// --- tropical maps -------------------------------------------------------

struct TMVertex {
    std::string id;
    RatVec pos;
    Int genus;   // >= 0
    IntVec cls;  // effective curve class coordinates (may be empty)
};

struct TMEdge {
    std::string id;
    std::string tail, head;
    Int dilation;  // >= 1; no bounded edge is contracted
};

struct TMLeg {
    std::string id;
    std::string base;
    int marker = 0;
    IntVec dir;    // primitive, or empty/zero when the leg is contracted
    Int weight;    // dilation factor; weighted direction = weight * dir
};

struct TropicalMap {
    size_t ambient_rank = 0;
    std::vector<TMVertex> vertices;
    std::vector<TMEdge> edges;
    std::vector<TMLeg> legs;

    const TMVertex& vertex(const std::string& id) const;
};

// Checks no contracted bounded edges, positive dilations, and (when ambient
// rays are supplied) that non-contracted legs point along ambient rays.
std::vector<Violation> validate_tropical_map(const TropicalMap& t,
                                             const std::vector<IntVec>* ambient_rays = nullptr);

// Vertices violating the balancing condition.  With an ambient complex, only
// vertices inside maximal cells are tested; wall vertices carry no
// constraint here.
std::vector<std::string> check_balancing(const TropicalMap& t,
                                         const PolyhedralComplex* ambient = nullptr);

// The image Chow 1-complex: vertices at images of map vertices and at
// crossings (class = empty sum = 0 there), edge labels summing dilations
// over the cells covering each image cell.
std::pair<OneComplex, ChowDecoration> chow_of_tropical_map(const TropicalMap& t);

}  // namespace logdeg
