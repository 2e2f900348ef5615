#pragma once

#include "logdeg/cone.hpp"
#include "logdeg/lp.hpp"
#include "logdeg/one_complex.hpp"
#include "logdeg/polyhedral.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace logdeg {

// Combinatorial types of embedded 1-complexes and their parameter cones.
//
// A type fixes the abstract graph, the primitive direction of every edge and
// ray, and which cell passes through which required point.  The parameters
// are the vertex positions and edge lengths; realizations are cut out by
// linear equations (edge closing, incidences) and strict inequalities
// (positive lengths, points in cell interiors).

struct CTVertex {
    std::string id;
    ConeId face;  // optional ambient face constraint
};

struct CTEdge {
    std::string id;
    std::string tail, head;
    IntVec dir;
};

struct CTRay {
    std::string id;
    std::string base;
    IntVec dir;
};

struct CTIncidence {
    std::string cell;  // vertex, edge or ray id
    RatVec point;
};

struct CombinatorialType {
    size_t ambient_rank = 0;
    std::vector<CTVertex> vertices;
    std::vector<CTEdge> edges;
    std::vector<CTRay> rays;
    std::vector<CTIncidence> incidences;

    static CombinatorialType of(const OneComplex& g);  // forgets positions
};

struct ParameterCone {
    long dimension = -1;        // -1: infeasible (empty)
    std::optional<RatVec> interior_point;  // one strict solution, when nonempty
    size_t num_vars = 0;
    std::vector<std::string> var_names;
};

// The parameter cone of a type, optionally inside an ambient polyhedral
// complex (constraining vertices to their declared faces).
ParameterCone parameter_cone(const CombinatorialType& t, const PolyhedralComplex* ambient = nullptr);

bool is_rigid(const CombinatorialType& t, const PolyhedralComplex* ambient = nullptr);

// Realizes the type at a parameter point (e.g. the interior point).
OneComplex realize(const CombinatorialType& t, const RatVec& params);

// --- tropical evaluation ---------------------------------------------------

// A point of the moduli of 0-complexes in a star fan: finitely many points
// with multiplicities, given in star coordinates.
struct ZeroComplexPoint {
    RatVec position;
    Int multiplicity;  // transported Chow label; 1 when undecorated

    bool operator==(const ZeroComplexPoint& o) const {
        return position == o.position && multiplicity == o.multiplicity;
    }
    bool operator<(const ZeroComplexPoint& o) const {
        return position < o.position || (position == o.position && multiplicity < o.multiplicity);
    }
};

struct ZeroComplex {
    size_t ambient_rank = 0;
    std::vector<ZeroComplexPoint> points;  // kept sorted

    void sort();
    bool operator==(const ZeroComplex& o) const {
        return ambient_rank == o.ambient_rank && points == o.points;
    }
    std::string to_string() const;
};

// Quotients the rays of g parallel to the ambient ray `delta` (in a fan-like
// ambient realized in coordinates).  Every ray of g must be parallel to SOME
// ambient ray; rays parallel to delta map to points of the star of delta.
ZeroComplex evaluate_along_ray(const OneComplex& g, const ChowDecoration* dec,
                               const std::vector<IntVec>& ambient_rays, const IntVec& delta);

}  // namespace logdeg
