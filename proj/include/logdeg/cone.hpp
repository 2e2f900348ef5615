#pragma once

#include "logdeg/linalg.hpp"
#include "logdeg/lp.hpp"
#include "logdeg/scalar.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace logdeg {

using ConeId = std::string;

// Abstract rational polyhedral cone with integral structure: a reference
// lattice Z^ambient_rank and primitive ray generators inside it.  No global
// ambient space is assumed; gluing data lives in the face maps.
struct Cone {
    ConeId id;
    size_t ambient_rank = 0;
    std::vector<IntVec> rays;
    int declared_dimension = -1;  // optional, checked when >= 0

    size_t dim() const { return rank_of_int_columns(rays); }
    bool contains(const RatVec& x) const { return in_cone(rays, x); }

    // Face lattice as ray-index subsets, smallest first.  The empty subset is
    // the zero face; the full set is the cone itself.
    std::vector<std::vector<size_t>> face_subsets() const;

    // Rays of the cone spanned by `rays` restricted to subset indices.
    std::vector<IntVec> subset_rays(const std::vector<size_t>& subset) const;

    // Ray-index subset of the minimal face containing x; nullopt if x outside.
    std::optional<std::vector<size_t>> minimal_face_containing(const RatVec& x) const;

    bool relint_contains(const RatVec& x) const;
};

struct FaceMap {
    ConeId child;
    ConeId parent;
    MatZ embed;  // parent ambient_rank x child ambient_rank
};

struct Violation {
    std::string code;
    std::string message;
};

struct ConeComplex {
    std::vector<Cone> cones;
    std::vector<FaceMap> face_maps;

    const Cone* find(const ConeId& id) const;
    const Cone& at(const ConeId& id) const;
    const FaceMap* find_map(const ConeId& child, const ConeId& parent) const;

    // All cones admitting a face map from `id` (always includes `id` itself
    // when identities are present).
    std::vector<ConeId> cones_over(const ConeId& id) const;

    std::vector<ConeId> ray_ids() const;
};

std::vector<Violation> validate_complex(const ConeComplex& c);

// The star complex of sigma: one cone per tau containing sigma, with lattice
// the quotient of tau's lattice by the saturated span of sigma's image.
// Quotient charts are retained so embedded objects can be pushed to the star.
struct StarComplex {
    ConeComplex complex;             // cone ids reused from the overstar
    std::map<ConeId, MatZ> project;  // tau lattice -> star lattice
    std::map<ConeId, MatZ> section;  // right inverse of project
    ConeId origin;                   // image of sigma (the zero cone)
};

StarComplex star(const ConeComplex& c, const ConeId& sigma);

struct ConeAssignment {
    ConeId target;
    MatZ linear;  // target ambient_rank x source ambient_rank
};

struct ConeMorphism {
    const ConeComplex* source = nullptr;
    const ConeComplex* target = nullptr;
    std::map<ConeId, ConeAssignment> assignment;
};

std::vector<Violation> validate_morphism(const ConeMorphism& f);

bool is_combinatorially_flat(const ConeMorphism& f);
bool has_reduced_fibers(const ConeMorphism& f);

// Rewrites every cone in the saturated lattice of its own span, so each cone
// becomes full-dimensional in its reference lattice.  This is the canonical
// "abstract cone" presentation; face maps are rewritten accordingly.
ConeComplex normalized(const ConeComplex& c);

// Structural isomorphism of complexes with integral structure (used by the
// star compatibility tests): searches for a bijection of cones plus
// unimodular lattice maps commuting with all face maps.
bool isomorphic(const ConeComplex& a, const ConeComplex& b);

// The fan of R_{>=0}: cones "0" and "ray" in a rank-1 lattice.
ConeComplex ray_complex();

// Builds the complex of all faces of the cones of a fan living in a common
// lattice Z^rank; ids are generated from the given seed ids.  Every face map
// is a coordinate inclusion (identity matrix).
ConeComplex fan_complex(size_t rank, const std::vector<std::pair<ConeId, std::vector<IntVec>>>& maximal);

// True when all cones share one ambient rank and all face maps are
// identities, i.e. the complex is a fan in a fixed lattice.
bool is_fan_like(const ConeComplex& c);

}  // namespace logdeg
