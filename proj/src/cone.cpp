#include "logdeg/cone.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace logdeg {

namespace {

std::string id_list(const std::vector<size_t>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

}  // namespace

std::vector<std::vector<size_t>> Cone::face_subsets() const {
    size_t m = rays.size();
    std::vector<std::vector<size_t>> out;
    // A subset S spans an exposed face iff some linear functional vanishes on
    // S and is strictly positive on the complement.
    for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
        std::vector<LinConstraint> eqs, strict;
        std::vector<size_t> subset;
        for (size_t i = 0; i < m; ++i) {
            LinConstraint c;
            c.coeffs = to_rat(rays[i]);
            c.rhs = 0;
            if (mask & (size_t(1) << i)) {
                subset.push_back(i);
                eqs.push_back(std::move(c));
            } else {
                strict.push_back(std::move(c));
            }
        }
        if (strict.empty()) {
            out.push_back(subset);  // the cone itself
            continue;
        }
        if (strict_point(ambient_rank, eqs, strict)) out.push_back(subset);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
    return out;
}

std::vector<IntVec> Cone::subset_rays(const std::vector<size_t>& subset) const {
    std::vector<IntVec> out;
    out.reserve(subset.size());
    for (size_t i : subset) out.push_back(rays[i]);
    return out;
}

std::optional<std::vector<size_t>> Cone::minimal_face_containing(const RatVec& x) const {
    if (!contains(x)) return std::nullopt;
    auto faces = face_subsets();
    for (const auto& f : faces)
        if (in_cone(subset_rays(f), x)) return f;
    return std::nullopt;  // unreachable: the full cone contains x
}

bool Cone::relint_contains(const RatVec& x) const {
    auto f = minimal_face_containing(x);
    return f && f->size() == rays.size();
}

const Cone* ConeComplex::find(const ConeId& id) const {
    for (const auto& c : cones)
        if (c.id == id) return &c;
    return nullptr;
}

const Cone& ConeComplex::at(const ConeId& id) const {
    const Cone* c = find(id);
    if (!c) throw std::invalid_argument("unknown cone id '" + id + "'");
    return *c;
}

const FaceMap* ConeComplex::find_map(const ConeId& child, const ConeId& parent) const {
    for (const auto& f : face_maps)
        if (f.child == child && f.parent == parent) return &f;
    return nullptr;
}

std::vector<ConeId> ConeComplex::cones_over(const ConeId& id) const {
    std::vector<ConeId> out;
    for (const auto& f : face_maps)
        if (f.child == id && std::find(out.begin(), out.end(), f.parent) == out.end())
            out.push_back(f.parent);
    return out;
}

std::vector<ConeId> ConeComplex::ray_ids() const {
    std::vector<ConeId> out;
    for (const auto& c : cones)
        if (c.dim() == 1) out.push_back(c.id);
    return out;
}

std::vector<Violation> validate_complex(const ConeComplex& cc) {
    std::vector<Violation> out;
    auto report = [&](const std::string& code, const std::string& msg) {
        out.push_back({code, msg});
    };

    for (const auto& c : cc.cones) {
        for (const auto& r : c.rays) {
            if (r.size() != c.ambient_rank) {
                report("ray-rank-mismatch", "cone '" + c.id + "' has a ray of wrong length");
                continue;
            }
            if (is_zero(r)) {
                report("zero-generator", "cone '" + c.id + "' lists the zero vector as a ray");
                continue;
            }
            if (primitive(r) != r)
                report("non-primitive-generator",
                       "cone '" + c.id + "' ray " + vec_to_string(r) + " is not primitive");
        }
        for (size_t i = 0; i < c.rays.size(); ++i)
            for (size_t j = i + 1; j < c.rays.size(); ++j)
                if (!is_zero(c.rays[i]) && primitive(c.rays[i]) == primitive(c.rays[j]))
                    report("parallel-generators",
                           "cone '" + c.id + "' has parallel generators " + vec_to_string(c.rays[i]));
        if (!strongly_convex(c.rays))
            report("not-strongly-convex", "cone '" + c.id + "' contains a line");
        if (c.declared_dimension >= 0 && static_cast<size_t>(c.declared_dimension) != c.dim())
            report("dimension-mismatch", "cone '" + c.id + "' declares dimension " +
                                             std::to_string(c.declared_dimension) + " but has rank " +
                                             std::to_string(c.dim()));
        // Every generator should span an extremal ray; redundant generators
        // break the face enumeration downstream.
        for (size_t i = 0; i < c.rays.size(); ++i) {
            std::vector<IntVec> others;
            for (size_t j = 0; j < c.rays.size(); ++j)
                if (j != i) others.push_back(c.rays[j]);
            if (in_cone(others, to_rat(c.rays[i])))
                report("non-extremal-generator",
                       "cone '" + c.id + "' generator " + vec_to_string(c.rays[i]) + " is redundant");
        }
    }
    if (!out.empty()) return out;  // face checks assume clean cones

    // Duplicate morphisms (at most one arrow between any two cones).
    for (size_t i = 0; i < cc.face_maps.size(); ++i)
        for (size_t j = i + 1; j < cc.face_maps.size(); ++j)
            if (cc.face_maps[i].child == cc.face_maps[j].child &&
                cc.face_maps[i].parent == cc.face_maps[j].parent)
                report("duplicate-face-morphism", "two morphisms from '" + cc.face_maps[i].child +
                                                      "' to '" + cc.face_maps[i].parent + "'");

    for (const auto& f : cc.face_maps) {
        const Cone* child = cc.find(f.child);
        const Cone* parent = cc.find(f.parent);
        if (!child || !parent) {
            report("unknown-cone", "face map references unknown cone '" +
                                       (child ? f.parent : f.child) + "'");
            continue;
        }
        if (f.embed.rows != parent->ambient_rank || f.embed.cols != child->ambient_rank) {
            report("embedding-shape", "face map '" + f.child + "'->'" + f.parent +
                                          "' has a matrix of the wrong shape");
            continue;
        }
        if (f.child == f.parent && !(f.embed == MatZ::identity(child->ambient_rank))) {
            report("self-gluing", "cone '" + f.child + "' carries a non-identity self map");
            continue;
        }
        if (rank(f.embed.to_q()) != child->ambient_rank) {
            report("non-injective-embedding",
                   "face map '" + f.child + "'->'" + f.parent + "' is not injective");
            continue;
        }
        std::vector<IntVec> image;
        bool prim_ok = true;
        for (const auto& r : child->rays) {
            IntVec ir = f.embed.apply(r);
            if (primitive(ir) != ir) prim_ok = false;
            image.push_back(std::move(ir));
        }
        if (!prim_ok) {
            report("non-primitive-image", "face map '" + f.child + "'->'" + f.parent +
                                              "' does not preserve primitivity of rays");
            continue;
        }
        bool is_face = false;
        for (const auto& subset : parent->face_subsets())
            if (image.size() == subset.size() && same_cone(image, parent->subset_rays(subset))) {
                is_face = true;
                break;
            }
        if (!is_face) {
            report("image-not-a-face", "face map '" + f.child + "'->'" + f.parent +
                                           "' does not carry the child onto a face");
            continue;
        }
        // Saturation: the embedding must identify the child lattice with the
        // full lattice of the face's span.
        auto child_basis = saturated_lattice_basis(child->rays);
        std::vector<IntVec> image_basis;
        for (const auto& b : child_basis) image_basis.push_back(f.embed.apply(b));
        auto face_basis = saturated_lattice_basis(image);
        if (!face_basis.empty() || !image_basis.empty()) {
            Int idx;
            try {
                idx = lattice_index(face_basis, image_basis);
            } catch (const std::exception&) {
                idx = 0;
            }
            if (idx != 1)
                report("non-saturated-embedding", "face map '" + f.child + "'->'" + f.parent +
                                                      "' is not an isomorphism of integral structures");
        }
    }

    // Identity maps present.
    for (const auto& c : cc.cones)
        if (!cc.find_map(c.id, c.id))
            report("missing-identity", "cone '" + c.id + "' has no identity map");

    // Closure under composition.
    for (const auto& f : cc.face_maps)
        for (const auto& g : cc.face_maps) {
            if (f.parent != g.child) continue;
            const FaceMap* h = cc.find_map(f.child, g.parent);
            if (!h) {
                report("missing-composition", "no face map '" + f.child + "'->'" + g.parent +
                                                  "' closing the composition through '" + f.parent + "'");
                continue;
            }
            if (!(h->embed == g.embed * f.embed))
                report("composition-mismatch", "face map '" + f.child + "'->'" + g.parent +
                                                   "' disagrees with the composite through '" + f.parent + "'");
        }

    // Every geometric face of every cone is the image of exactly one arrow.
    for (const auto& c : cc.cones) {
        for (const auto& subset : c.face_subsets()) {
            auto face_rays = c.subset_rays(subset);
            size_t hits = 0;
            for (const auto& f : cc.face_maps) {
                if (f.parent != c.id) continue;
                const Cone& child = cc.at(f.child);
                std::vector<IntVec> image;
                for (const auto& r : child.rays) image.push_back(f.embed.apply(r));
                if (image.size() == face_rays.size() && same_cone(image, face_rays)) ++hits;
            }
            if (hits == 0)
                report("missing-face", "face {" + id_list(subset) + "} of cone '" + c.id +
                                           "' is not the image of any face map");
            else if (hits > 1)
                report("multiple-face-covers", "face {" + id_list(subset) + "} of cone '" + c.id +
                                                   "' is covered by " + std::to_string(hits) + " face maps");
        }
    }
    return out;
}

StarComplex star(const ConeComplex& cc, const ConeId& sigma_id) {
    const Cone& sigma = cc.at(sigma_id);
    std::vector<ConeId> over = cc.cones_over(sigma_id);
    if (std::find(over.begin(), over.end(), sigma_id) == over.end()) over.push_back(sigma_id);

    StarComplex st;
    st.origin = sigma_id;
    for (const ConeId& tid : over) {
        const Cone& tau = cc.at(tid);
        const FaceMap* fm = cc.find_map(sigma_id, tid);
        if (!fm) throw std::logic_error("star: missing face map onto " + tid);
        std::vector<IntVec> sigma_image;
        for (const auto& r : sigma.rays) {
            IntVec img = fm->embed.apply(r);
            if (primitive(img) != img)
                throw std::invalid_argument("star: non-saturated face embedding at '" + tid +
                                            "' (torsion quotient rejected)");
            sigma_image.push_back(img);
        }
        LatticeQuotient q = lattice_quotient(tau.ambient_rank, sigma_image);
        Cone out;
        out.id = tid;
        out.ambient_rank = q.projection.rows;
        std::vector<IntVec> images;
        for (const auto& r : tau.rays) {
            IntVec img = q.projection.apply(r);
            if (is_zero(img)) continue;
            img = primitive(img);
            bool dup = false;
            for (const auto& e : images)
                if (e == img) dup = true;
            if (!dup) images.push_back(img);
        }
        // Keep only extremal directions of the quotient cone.
        for (size_t i = 0; i < images.size(); ++i) {
            std::vector<IntVec> others;
            for (size_t j = 0; j < images.size(); ++j)
                if (j != i) others.push_back(images[j]);
            if (!in_cone(others, to_rat(images[i]))) out.rays.push_back(images[i]);
        }
        st.project[tid] = q.projection;
        st.section[tid] = q.section;
        st.complex.cones.push_back(std::move(out));
    }

    // Face maps: a map tau1 -> tau2 between overstar members descends to the
    // quotients via any section.
    for (const auto& f : cc.face_maps) {
        if (!st.project.count(f.child) || !st.project.count(f.parent)) continue;
        const MatZ& p2 = st.project.at(f.parent);
        const MatZ& s1 = st.section.at(f.child);
        MatZ induced = p2 * (f.embed * s1);
        st.complex.face_maps.push_back({f.child, f.parent, induced});
    }
    return st;
}

std::vector<Violation> validate_morphism(const ConeMorphism& f) {
    std::vector<Violation> out;
    if (!f.source || !f.target) {
        out.push_back({"missing-complex", "morphism lacks source or target"});
        return out;
    }
    for (const auto& c : f.source->cones) {
        auto it = f.assignment.find(c.id);
        if (it == f.assignment.end()) {
            out.push_back({"unassigned-cone", "cone '" + c.id + "' has no assignment"});
            continue;
        }
        const Cone* tgt = f.target->find(it->second.target);
        if (!tgt) {
            out.push_back({"unknown-target", "cone '" + c.id + "' maps to unknown '" + it->second.target + "'"});
            continue;
        }
        const MatZ& A = it->second.linear;
        if (A.rows != tgt->ambient_rank || A.cols != c.ambient_rank) {
            out.push_back({"linear-shape", "assignment of '" + c.id + "' has wrong shape"});
            continue;
        }
        std::vector<IntVec> image;
        for (const auto& r : c.rays) image.push_back(A.apply(r));
        for (const auto& img : image)
            if (!in_cone(tgt->rays, to_rat(img))) {
                out.push_back({"image-outside-target",
                               "cone '" + c.id + "' does not map into '" + tgt->id + "'"});
                break;
            }
        // Must not factor through a proper face: the image of the relative
        // interior has to meet the relative interior of the target.
        RatVec interior(c.ambient_rank, Rat(0));
        for (const auto& r : c.rays) interior = interior + to_rat(r);
        RatVec img_pt = A.to_q().apply(interior);
        if (!tgt->rays.empty() || !is_zero(img_pt)) {
            auto mf = tgt->minimal_face_containing(img_pt);
            if (mf && mf->size() != tgt->rays.size())
                out.push_back({"factors-through-face",
                               "cone '" + c.id + "' factors through a proper face of '" + tgt->id + "'"});
        }
    }
    if (!out.empty()) return out;
    // Commuting squares over face maps.
    for (const auto& fm : f.source->face_maps) {
        const auto& a1 = f.assignment.at(fm.child);
        const auto& a2 = f.assignment.at(fm.parent);
        const FaceMap* tm = f.target->find_map(a1.target, a2.target);
        if (!tm) {
            out.push_back({"no-target-face-map", "no face map '" + a1.target + "'->'" + a2.target +
                                                     "' covering '" + fm.child + "'->'" + fm.parent + "'"});
            continue;
        }
        if (!(a2.linear * fm.embed == tm->embed * a1.linear))
            out.push_back({"square-mismatch", "face map '" + fm.child + "'->'" + fm.parent +
                                                  "' does not commute with the morphism"});
    }
    return out;
}

bool is_combinatorially_flat(const ConeMorphism& f) {
    for (const auto& c : f.source->cones) {
        const auto& asg = f.assignment.at(c.id);
        const Cone& tgt = f.target->at(asg.target);
        std::vector<IntVec> image;
        for (const auto& r : c.rays) {
            IntVec img = asg.linear.apply(r);
            if (!is_zero(img)) image.push_back(img);
        }
        if (!same_cone(image, tgt.rays)) return false;
    }
    return true;
}

bool has_reduced_fibers(const ConeMorphism& f) {
    for (const auto& c : f.source->cones) {
        const auto& asg = f.assignment.at(c.id);
        const Cone& tgt = f.target->at(asg.target);
        auto src_basis = saturated_lattice_basis(c.rays);
        std::vector<IntVec> image;
        for (const auto& b : src_basis) image.push_back(asg.linear.apply(b));
        auto tgt_basis = saturated_lattice_basis(tgt.rays);
        if (tgt_basis.empty()) continue;  // zero cone: nothing to generate
        Int idx;
        try {
            idx = lattice_index(tgt_basis, image);
        } catch (const std::exception&) {
            return false;  // image does not even lie in the target lattice span
        }
        if (idx != 1) return false;
    }
    return true;
}

ConeComplex normalized(const ConeComplex& c) {
    ConeComplex out;
    std::map<ConeId, MatQ> to_intrinsic;   // solves old coords -> intrinsic coords
    std::map<ConeId, MatZ> from_intrinsic; // basis matrix
    for (const auto& cone : c.cones) {
        auto basis = saturated_lattice_basis(cone.rays);
        MatZ B = basis.empty() ? MatZ(cone.ambient_rank, 0) : MatZ::from_columns(basis);
        Cone n;
        n.id = cone.id;
        n.ambient_rank = basis.size();
        MatQ Bq = B.to_q();
        for (const auto& r : cone.rays) {
            auto x = solve(Bq, to_rat(r));
            if (!x) throw std::logic_error("normalized: ray outside its own span");
            n.rays.push_back(to_int(*x));
        }
        from_intrinsic[cone.id] = B;
        to_intrinsic[cone.id] = Bq;
        out.cones.push_back(std::move(n));
    }
    for (const auto& fm : c.face_maps) {
        const MatZ& Bc = from_intrinsic.at(fm.child);
        const MatQ& Bp = to_intrinsic.at(fm.parent);
        // new_embed solves B_parent * X = embed * B_child.
        MatZ rhs = fm.embed * Bc;
        MatZ X(out.at(fm.parent).ambient_rank, out.at(fm.child).ambient_rank);
        for (size_t j = 0; j < X.cols; ++j) {
            auto col = solve(Bp, to_rat(rhs.col(j)));
            if (!col) throw std::logic_error("normalized: face image outside parent span");
            IntVec ic = to_int(*col);
            for (size_t i = 0; i < X.rows; ++i) X.at(i, j) = ic[i];
        }
        out.face_maps.push_back({fm.child, fm.parent, X});
    }
    return out;
}

namespace {

// Backtracking search for an isomorphism of complexes.
struct IsoSearch {
    const ConeComplex& a;
    const ConeComplex& b;
    std::map<ConeId, ConeId> assigned;
    std::map<ConeId, MatZ> maps;  // lattice map a-cone -> b-cone

    bool compatible(const ConeId& ca, const ConeId& cb, const MatZ& M) {
        // Check all face maps of a whose endpoints are both assigned commute.
        for (const auto& fm : a.face_maps) {
            bool child_is = fm.child == ca, parent_is = fm.parent == ca;
            if (!child_is && !parent_is) continue;
            const ConeId& other = child_is ? fm.parent : fm.child;
            auto it = assigned.find(other);
            if (it == assigned.end()) continue;
            const ConeId& child_b = child_is ? cb : it->second;
            const ConeId& parent_b = child_is ? it->second : cb;
            const FaceMap* tm = b.find_map(child_b, parent_b);
            if (!tm) return false;
            const MatZ& mc = child_is ? M : maps.at(fm.child);
            const MatZ& mp = parent_is ? M : maps.at(fm.parent);
            if (!(mp * fm.embed == tm->embed * mc)) return false;
        }
        return true;
    }

    bool run(size_t idx, std::vector<const Cone*>& order) {
        if (idx == order.size()) return true;
        const Cone& ca = *order[idx];
        for (const auto& cb : b.cones) {
            if (cb.ambient_rank != ca.ambient_rank || cb.rays.size() != ca.rays.size()) continue;
            bool used = false;
            for (auto& kv : assigned)
                if (kv.second == cb.id) used = true;
            if (used) continue;
            // Try every ray bijection inducing a unimodular lattice map.
            std::vector<size_t> perm(cb.rays.size());
            for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
            do {
                MatZ M;
                if (ca.rays.empty()) {
                    if (ca.ambient_rank != cb.ambient_rank) break;
                    M = MatZ::identity(ca.ambient_rank);
                } else {
                    // Solve M * ray_a[i] = ray_b[perm[i]] for a lattice map on
                    // the saturated spans, extended arbitrarily on a complement.
                    auto basis_a = saturated_lattice_basis(ca.rays);
                    auto basis_b = saturated_lattice_basis(cb.rays);
                    if (basis_a.size() != basis_b.size()) break;
                    // Express rays in basis coordinates and solve there.
                    MatQ BA = MatQ::from_columns([&] {
                        std::vector<RatVec> v;
                        for (auto& x : basis_a) v.push_back(to_rat(x));
                        return v;
                    }());
                    MatQ BB = MatQ::from_columns([&] {
                        std::vector<RatVec> v;
                        for (auto& x : basis_b) v.push_back(to_rat(x));
                        return v;
                    }());
                    std::vector<RatVec> acoords, bcoords;
                    bool ok = true;
                    for (size_t i = 0; i < ca.rays.size() && ok; ++i) {
                        auto xa = solve(BA, to_rat(ca.rays[i]));
                        auto xb = solve(BB, to_rat(cb.rays[perm[i]]));
                        if (!xa || !xb) ok = false;
                        else {
                            acoords.push_back(*xa);
                            bcoords.push_back(*xb);
                        }
                    }
                    if (!ok) continue;
                    // Solve N * acoords = bcoords on the span.
                    MatQ A = MatQ::from_columns(acoords);
                    MatQ Bm = MatQ::from_columns(bcoords);
                    // N = Bm * A^+ ; require exact solvability: columns of A span.
                    if (rank(A) != basis_a.size()) continue;
                    // Solve N row by row: N A = Bm => A^T N^T = Bm^T.
                    MatQ At = A.transposed();
                    bool good = true;
                    MatQ N(basis_b.size(), basis_a.size());
                    for (size_t r2 = 0; r2 < basis_b.size() && good; ++r2) {
                        RatVec rhs(acoords.size());
                        for (size_t j = 0; j < acoords.size(); ++j) rhs[j] = Bm.at(r2, j);
                        auto sol = solve(At, rhs);
                        if (!sol) good = false;
                        else
                            for (size_t j = 0; j < basis_a.size(); ++j) N.at(r2, j) = (*sol)[j];
                    }
                    if (!good) continue;
                    // Verify: integral + unimodular on the span and that rays map to rays.
                    bool integral = true;
                    for (const auto& q : N.a)
                        if (!is_integer(q)) integral = false;
                    if (!integral) continue;
                    Rat det = basis_a.empty() ? Rat(1) : determinant(N);
                    if (det != 1 && det != -1) continue;
                    // Build the full lattice map via the quotient sections:
                    // send basis_a -> basis_b coords; off-span information is
                    // irrelevant for complexes whose cones span their lattices,
                    // which we enforce here.
                    if (basis_a.size() != ca.ambient_rank || basis_b.size() != cb.ambient_rank)
                        continue;  // conservative: demands full-dimensional lattices
                    MatZ Nz(basis_b.size(), basis_a.size());
                    for (size_t i2 = 0; i2 < N.a.size(); ++i2) Nz.a[i2] = rat_num(N.a[i2]);
                    MatZ BAz = MatZ::from_columns(basis_a);
                    MatZ BBz = MatZ::from_columns(basis_b);
                    auto BAinv = inverse_unimodular(BAz);
                    if (!BAinv) continue;
                    M = BBz * (Nz * (*BAinv));
                }
                if (compatible(ca.id, cb.id, M)) {
                    assigned[ca.id] = cb.id;
                    maps[ca.id] = M;
                    if (run(idx + 1, order)) return true;
                    assigned.erase(ca.id);
                    maps.erase(ca.id);
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        return false;
    }
};

}  // namespace

bool isomorphic(const ConeComplex& a_in, const ConeComplex& b_in) {
    if (a_in.cones.size() != b_in.cones.size() || a_in.face_maps.size() != b_in.face_maps.size())
        return false;
    ConeComplex a = normalized(a_in);
    ConeComplex b = normalized(b_in);
    std::vector<const Cone*> order;
    for (const auto& c : a.cones) order.push_back(&c);
    // Assign high-dimensional cones first; they constrain the most.
    std::sort(order.begin(), order.end(),
              [](const Cone* x, const Cone* y) { return x->rays.size() > y->rays.size(); });
    IsoSearch s{a, b, {}, {}};
    return s.run(0, order);
}

ConeComplex ray_complex() {
    ConeComplex c;
    Cone zero;
    zero.id = "0";
    zero.ambient_rank = 1;
    Cone ray;
    ray.id = "ray";
    ray.ambient_rank = 1;
    ray.rays = {IntVec{Int(1)}};
    c.cones = {zero, ray};
    c.face_maps.push_back({"0", "0", MatZ::identity(1)});
    c.face_maps.push_back({"ray", "ray", MatZ::identity(1)});
    c.face_maps.push_back({"0", "ray", MatZ::identity(1)});
    return c;
}

namespace {

std::string face_key(const std::vector<IntVec>& rays) {
    std::vector<std::string> parts;
    for (const auto& r : rays) parts.push_back(vec_to_string(r));
    std::sort(parts.begin(), parts.end());
    std::string k;
    for (auto& p : parts) k += p + ";";
    return k;
}

}  // namespace

ConeComplex fan_complex(size_t rank, const std::vector<std::pair<ConeId, std::vector<IntVec>>>& maximal) {
    ConeComplex out;
    std::map<std::string, ConeId> seen;
    // Insert a cone (by ray set) if new; returns its id.
    std::function<ConeId(const std::vector<IntVec>&, const ConeId&)> insert =
        [&](const std::vector<IntVec>& rays, const ConeId& hint) -> ConeId {
        std::string key = face_key(rays);
        auto it = seen.find(key);
        if (it != seen.end()) return it->second;
        Cone c;
        c.id = hint;
        // Disambiguate id collisions.
        int suffix = 0;
        while (out.find(c.id)) c.id = hint + "_" + std::to_string(++suffix);
        c.ambient_rank = rank;
        c.rays = rays;
        out.cones.push_back(c);
        seen[key] = c.id;
        return c.id;
    };

    for (const auto& [id, rays] : maximal) {
        Cone probe;
        probe.ambient_rank = rank;
        probe.rays = rays;
        auto subsets = probe.face_subsets();
        for (const auto& s : subsets) {
            auto face_rays = probe.subset_rays(s);
            ConeId hint;
            if (s.size() == rays.size()) hint = id;
            else if (s.empty()) hint = "0";
            else {
                hint = id;
                for (size_t i : s) hint += "_" + std::to_string(i);
            }
            insert(face_rays, hint);
        }
    }
    // Face maps: identity embeddings for every containment-as-face pair.
    MatZ I = MatZ::identity(rank);
    for (const auto& child : out.cones) {
        for (const auto& parent : out.cones) {
            if (child.rays.size() > parent.rays.size()) continue;
            // child must be a face of parent
            bool all_in = true;
            for (const auto& r : child.rays)
                if (!in_cone(parent.rays, to_rat(r))) all_in = false;
            if (!all_in) continue;
            bool is_face = false;
            for (const auto& s : parent.face_subsets())
                if (s.size() == child.rays.size() && same_cone(parent.subset_rays(s), child.rays)) {
                    is_face = true;
                    break;
                }
            if (is_face) out.face_maps.push_back({child.id, parent.id, I});
        }
    }
    return out;
}

bool is_fan_like(const ConeComplex& c) {
    if (c.cones.empty()) return true;
    size_t rank = c.cones[0].ambient_rank;
    for (const auto& cone : c.cones)
        if (cone.ambient_rank != rank) return false;
    for (const auto& f : c.face_maps)
        if (!(f.embed == MatZ::identity(rank))) return false;
    return true;
}

}  // namespace logdeg
