#pragma once

#include "logdeg/cone.hpp"

#include <map>

namespace logdeg {

// Subdivision machinery.  A subdivision of a single cone is returned as a
// fan-like complex in the cone's coordinates.

// Intersection of a cone (by extremal rays) with a halfspace {w.x >= 0}.
// Crossing 2-faces contribute new rays on the hyperplane.
std::vector<IntVec> clip_cone(const Cone& c, const IntVec& w);

// Stellar subdivision of the fan generated by `maximal` cones at the ray
// through `point` (which must lie in the support).  Input and output are
// lists of maximal cones in a common lattice.
std::vector<Cone> stellar_subdivision(const std::vector<Cone>& maximal, const IntVec& point);

// Checks that `pieces` (maximal cones) form a subdivision of `whole`:
// union equal and relative interiors disjoint.
bool is_subdivision_of(const std::vector<Cone>& pieces, const Cone& whole);

// Relative barycentric subdivision of a combinatorially flat cone map
// f: sigma -> tau, as a fan in sigma's coordinates.  Implements the
// fiberwise barycentric subdivision for targets of dimension <= 1 and for
// injective maps (where fibers are points and the subdivision is trivial).
// Fiberwise barycenters over higher-dimensional targets do not form convex
// cells, so such inputs are rejected.
struct RelativeBarycentric {
    ConeComplex subdivision;                  // fan in sigma's coordinates
    std::map<ConeId, std::vector<size_t>> onto_face;  // image face of tau (ray subset)
};
RelativeBarycentric relative_barycentric_subdivide(const Cone& sigma, const MatZ& linear,
                                                   const Cone& tau);

// Joint flattening of a finite family of cones mapping to a common target
// fan.  Both sides are refined until every source piece surjects onto a cone
// of the refined target; reduced-fiber data is recorded as lattice indices
// per target cone.
struct FlattenSource {
    Cone source;  // in its own coordinates
    MatZ eval;    // target_rank x source_rank
};

struct FlattenPiece {
    size_t input_index;
    Cone piece;       // subcone of the input source cone
    ConeId target;    // refined target cone it surjects onto
};

struct FlattenResult {
    ConeComplex refined_target;              // fan in target coordinates
    std::vector<FlattenPiece> pieces;
    std::map<ConeId, Int> lattice_scale;     // index of the reduced-fiber sublattice
    bool already_flat = false;
};

FlattenResult flatten_evaluation(const std::vector<FlattenSource>& sources,
                                 const ConeComplex& target_fan);

}  // namespace logdeg
