#pragma once

#include "logdeg/cone.hpp"

#include <optional>

namespace logdeg {

// Polyhedral complexes realized in a fixed lattice.  These arise as height
// slices of degenerations; faces are V-represented (vertices + recession
// directions), which matches how slices are computed from fans.
struct PolyhedralFace {
    ConeId id;
    std::vector<RatVec> vertices;
    std::vector<IntVec> recession;  // primitive

    size_t dim() const;
    bool contains(const RatVec& x) const;
};

struct PolyhedralComplex {
    size_t ambient_rank = 0;
    std::vector<PolyhedralFace> faces;
    std::vector<std::pair<ConeId, ConeId>> face_rel;  // (child, parent)

    const PolyhedralFace* find(const ConeId& id) const;
    const PolyhedralFace& at(const ConeId& id) const;

    std::vector<ConeId> vertex_ids() const;  // 0-dimensional faces

    // Minimal face containing x, by dimension; nullopt if x is not in the
    // support.
    std::optional<ConeId> minimal_face_containing(const RatVec& x) const;

    PolyhedralComplex dilated(const Rat& factor) const;
};

// The fiber pi^{-1}(height) of a fan-like complex over the ray complex.
// Cones on which pi vanishes identically are dropped; rays with positive
// value become vertices.
PolyhedralComplex slice(const ConeComplex& c, const ConeMorphism& pi, const Rat& height);

// Convenience form: pi given by one global covector on a fan-like complex.
PolyhedralComplex slice_fan(const ConeComplex& c, const IntVec& covector, const Rat& height);

// Inverse construction: the fan over (P x {1}) in rank+1 coordinates, with
// the height covector (0,...,0,1).  Used to build degeneration fixtures from
// decompositions of the slice.
ConeComplex cone_over_slice(const PolyhedralComplex& p);

// True when the two complexes have the same face ids/poset and the vertex
// positions of `b` equal `factor` times those of `a`.
bool dilation_of(const PolyhedralComplex& a, const PolyhedralComplex& b, const Rat& factor);

}  // namespace logdeg
