#include "logdeg/subdivide.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace logdeg {

namespace {

Int dot(const IntVec& w, const IntVec& v) {
    Int s = 0;
    for (size_t i = 0; i < w.size(); ++i) s += w[i] * v[i];
    return s;
}

std::vector<IntVec> extremal_filter(std::vector<IntVec> rays) {
    // dedupe parallel directions first
    std::vector<IntVec> uniq;
    for (auto& r : rays) {
        if (is_zero(r)) continue;
        IntVec p = primitive(r);
        bool dup = false;
        for (const auto& u : uniq)
            if (u == p) dup = true;
        if (!dup) uniq.push_back(p);
    }
    std::vector<IntVec> out;
    for (size_t i = 0; i < uniq.size(); ++i) {
        std::vector<IntVec> others;
        for (size_t j = 0; j < uniq.size(); ++j)
            if (j != i) others.push_back(uniq[j]);
        if (!in_cone(others, to_rat(uniq[i]))) out.push_back(uniq[i]);
    }
    return out;
}

Cone make_cone(const ConeId& id, size_t rank, std::vector<IntVec> rays) {
    Cone c;
    c.id = id;
    c.ambient_rank = rank;
    c.rays = extremal_filter(std::move(rays));
    return c;
}

RatVec interior_point(const Cone& c) {
    RatVec p(c.ambient_rank, Rat(0));
    for (const auto& r : c.rays) p = p + to_rat(r);
    return p;
}

}  // namespace

std::vector<IntVec> clip_cone(const Cone& c, const IntVec& w) {
    std::vector<IntVec> keep;
    std::vector<Int> vals;
    for (const auto& r : c.rays) vals.push_back(dot(w, r));
    for (size_t i = 0; i < c.rays.size(); ++i)
        if (vals[i] >= 0) keep.push_back(c.rays[i]);
    // New rays appear on 2-faces crossing the hyperplane.
    for (const auto& subset : c.face_subsets()) {
        if (subset.size() < 2) continue;
        auto face_rays = c.subset_rays(subset);
        if (rank_of_int_columns(face_rays) != 2) continue;
        for (size_t a = 0; a < subset.size(); ++a)
            for (size_t b = a + 1; b < subset.size(); ++b) {
                const Int &va = vals[subset[a]], &vb = vals[subset[b]];
                if ((va > 0 && vb < 0) || (va < 0 && vb > 0)) {
                    IntVec mix = va > 0 ? (va * c.rays[subset[b]] - vb * c.rays[subset[a]])
                                        : (vb * c.rays[subset[a]] - va * c.rays[subset[b]]);
                    keep.push_back(primitive(mix));
                }
            }
    }
    return extremal_filter(std::move(keep));
}

std::vector<Cone> stellar_subdivision(const std::vector<Cone>& maximal, const IntVec& point) {
    std::vector<Cone> out;
    IntVec b = primitive(point);
    size_t counter = 0;
    for (const auto& c : maximal) {
        if (!c.contains(to_rat(b))) {
            out.push_back(c);
            continue;
        }
        for (const auto& subset : c.face_subsets()) {
            auto face_rays = c.subset_rays(subset);
            if (rank_of_int_columns(face_rays) + 1 != c.dim()) continue;
            if (in_cone(face_rays, to_rat(b))) continue;
            std::vector<IntVec> rays = face_rays;
            rays.push_back(b);
            out.push_back(make_cone(c.id + "*" + std::to_string(counter++), c.ambient_rank, rays));
        }
    }
    return out;
}

bool is_subdivision_of(const std::vector<Cone>& pieces, const Cone& whole) {
    size_t d = whole.dim();
    std::vector<const Cone*> full;
    for (const auto& p : pieces) {
        for (const auto& r : p.rays)
            if (!whole.contains(to_rat(r))) return false;
        if (p.dim() == d) full.push_back(&p);
        else return false;  // maximal pieces must have full dimension
    }
    if (full.empty()) return whole.rays.empty();
    // Pairwise disjoint relative interiors: the strictly-interior LP.
    for (size_t i = 0; i < full.size(); ++i)
        for (size_t j = i + 1; j < full.size(); ++j) {
            const Cone &A = *full[i], &B = *full[j];
            size_t na = A.rays.size(), nb = B.rays.size();
            std::vector<LinConstraint> eqs, strict;
            // sum l_a r_a = sum m_b r_b ; l,m > 0; normalize sum l = 1.
            for (size_t k = 0; k < A.ambient_rank; ++k) {
                LinConstraint c;
                c.coeffs.resize(na + nb);
                for (size_t t = 0; t < na; ++t) c.coeffs[t] = Rat(A.rays[t][k]);
                for (size_t t = 0; t < nb; ++t) c.coeffs[na + t] = Rat(-B.rays[t][k]);
                c.rhs = 0;
                eqs.push_back(std::move(c));
            }
            LinConstraint norm;
            norm.coeffs.assign(na + nb, Rat(0));
            for (size_t t = 0; t < na; ++t) norm.coeffs[t] = 1;
            norm.rhs = 1;
            eqs.push_back(std::move(norm));
            for (size_t t = 0; t < na + nb; ++t) {
                LinConstraint c;
                c.coeffs.assign(na + nb, Rat(0));
                c.coeffs[t] = 1;
                c.rhs = 0;
                strict.push_back(std::move(c));
            }
            if (strict_point(na + nb, eqs, strict)) return false;
        }
    // Wall condition: every facet of a full piece is either on the boundary
    // of `whole` or shared by a second piece.
    for (const Cone* p : full) {
        for (const auto& subset : p->face_subsets()) {
            auto face_rays = p->subset_rays(subset);
            if (rank_of_int_columns(face_rays) + 1 != d) continue;
            RatVec x(p->ambient_rank, Rat(0));
            for (const auto& r : face_rays) x = x + to_rat(r);
            auto mf = whole.minimal_face_containing(x);
            if (!mf) return false;
            if (mf->size() != whole.rays.size()) continue;  // boundary wall of `whole`
            if (rank_of_int_columns(whole.subset_rays(*mf)) < d) continue;
            size_t count = 0;
            for (const Cone* q : full)
                if (q->contains(x)) ++count;
            if (count < 2) return false;
        }
    }
    return true;
}

RelativeBarycentric relative_barycentric_subdivide(const Cone& sigma, const MatZ& linear,
                                                   const Cone& tau) {
    auto tau_faces = tau.face_subsets();
    auto image_face_of = [&](const std::vector<IntVec>& rays) -> std::optional<std::vector<size_t>> {
        std::vector<IntVec> image;
        for (const auto& r : rays) {
            IntVec v = linear.apply(r);
            if (!is_zero(v)) image.push_back(v);
        }
        for (const auto& f : tau_faces)
            if (same_cone(image, tau.subset_rays(f))) return f;
        return std::nullopt;
    };

    // Flatness of the single-cone map: every face onto a face.
    for (const auto& subset : sigma.face_subsets())
        if (!image_face_of(sigma.subset_rays(subset)))
            throw std::invalid_argument("relative_barycentric_subdivide: map is not combinatorially flat");

    RelativeBarycentric out;
    std::vector<Cone> maximal = {sigma};
    maximal[0].id = "piece";

    size_t tau_dim = tau.dim();
    bool injective = [&] {  // injective on the span of sigma: fibers are points
        auto basis = saturated_lattice_basis(sigma.rays);
        std::vector<IntVec> image;
        for (auto& b : basis) image.push_back(linear.apply(b));
        return rank_of_int_columns(image) == basis.size();
    }();
    if (tau_dim > 1 && !injective)
        throw std::invalid_argument(
            "relative_barycentric_subdivide: fiberwise barycenters over a target of dimension >= 2 "
            "do not form convex cells; only ray or point targets (or injective maps) are supported");

    if (tau_dim == 1 && !injective) {
        // Height along the target ray.
        IntVec tray = tau.rays[0];
        auto height = [&](const IntVec& r) -> Rat {
            IntVec v = linear.apply(r);
            // v = h * tray with h >= 0 rational
            for (size_t i = 0; i < v.size(); ++i)
                if (tray[i] != 0) return Rat(v[i]) / Rat(tray[i]);
            return Rat(0);
        };
        // Faces with bounded positive-dimensional fibers, largest first.
        struct Entry {
            size_t dim;
            RatVec barycenter_dir;
        };
        std::vector<Entry> todo;
        for (const auto& subset : sigma.face_subsets()) {
            if (subset.size() < 2) continue;
            auto rays = sigma.subset_rays(subset);
            size_t fdim = rank_of_int_columns(rays);
            if (fdim < 2) continue;
            bool bounded = true;
            for (const auto& r : rays)
                if (height(r) == 0) bounded = false;
            if (!bounded) continue;
            RatVec b(sigma.ambient_rank, Rat(0));
            for (const auto& r : rays) b = b + (Rat(1) / height(r)) * to_rat(r);
            todo.push_back({fdim, b});
        }
        std::stable_sort(todo.begin(), todo.end(),
                         [](const Entry& a, const Entry& b) { return a.dim > b.dim; });
        for (const auto& e : todo)
            maximal = stellar_subdivision(maximal, primitive_direction(e.barycenter_dir));
    }

    std::vector<std::pair<ConeId, std::vector<IntVec>>> max_input;
    for (const auto& c : maximal) max_input.push_back({c.id, c.rays});
    out.subdivision = fan_complex(sigma.ambient_rank, max_input);
    for (const auto& c : out.subdivision.cones) {
        auto f = image_face_of(c.rays);
        if (!f)
            throw std::logic_error("relative_barycentric_subdivide: a piece fails to map onto a face");
        out.onto_face[c.id] = *f;
    }
    return out;
}

namespace {

IntVec normalize_covector(RatVec w) {
    IntVec v = primitive_direction(w);
    for (const auto& x : v) {
        if (x > 0) return v;
        if (x < 0) {
            for (auto& y : v) y = -y;
            return v;
        }
    }
    return v;
}

// Facet-supporting covectors plus span equations of a cone, in ambient coords.
std::vector<IntVec> cone_hyperplanes(const std::vector<IntVec>& rays, size_t rank) {
    std::vector<IntVec> out;
    if (rays.empty()) return out;
    // span annihilator
    MatQ rows = MatQ::from_rows([&] {
        std::vector<RatVec> r;
        for (auto& x : rays) r.push_back(to_rat(x));
        return r;
    }());
    for (const auto& w : nullspace(rows)) out.push_back(normalize_covector(w));
    // facet normals
    Cone probe;
    probe.ambient_rank = rank;
    probe.rays = rays;
    size_t d = probe.dim();
    if (d >= 1) {
        for (const auto& subset : probe.face_subsets()) {
            auto frays = probe.subset_rays(subset);
            if (rank_of_int_columns(frays) + 1 != d) continue;
            std::vector<LinConstraint> eqs, strict;
            for (const auto& r : frays) eqs.push_back({to_rat(r), Rat(0)});
            for (size_t i = 0; i < probe.rays.size(); ++i) {
                bool in_face = std::find(subset.begin(), subset.end(), i) != subset.end();
                if (!in_face) strict.push_back({to_rat(probe.rays[i]), Rat(0)});
            }
            auto w = strict_point(rank, eqs, strict);
            if (w) out.push_back(normalize_covector(*w));
        }
    }
    return out;
}

std::vector<Cone> clip_by_hyperplanes(const Cone& start, const std::vector<IntVec>& walls) {
    std::vector<Cone> cur = {start};
    size_t counter = 0;
    for (const auto& w : walls) {
        std::vector<Cone> next;
        for (const auto& c : cur) {
            bool has_pos = false, has_neg = false;
            for (const auto& r : c.rays) {
                Int v = dot(w, r);
                if (v > 0) has_pos = true;
                if (v < 0) has_neg = true;
            }
            if (!has_pos || !has_neg) {
                next.push_back(c);
                continue;
            }
            IntVec wm(w.size());
            for (size_t i = 0; i < w.size(); ++i) wm[i] = -w[i];
            Cone plus = make_cone(c.id + "+" + std::to_string(counter), c.ambient_rank, clip_cone(c, w));
            Cone minus = make_cone(c.id + "-" + std::to_string(counter), c.ambient_rank, clip_cone(c, wm));
            ++counter;
            if (plus.dim() == c.dim()) next.push_back(plus);
            if (minus.dim() == c.dim()) next.push_back(minus);
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

FlattenResult flatten_evaluation(const std::vector<FlattenSource>& sources,
                                 const ConeComplex& target_fan) {
    if (!is_fan_like(target_fan))
        throw std::invalid_argument("flatten_evaluation: target must be fan-like");
    size_t trank = target_fan.cones.empty() ? 0 : target_fan.cones[0].ambient_rank;

    auto image_rays = [&](const Cone& c, const MatZ& A) {
        std::vector<IntVec> img;
        for (const auto& r : c.rays) {
            IntVec v = A.apply(r);
            if (!is_zero(v)) img.push_back(primitive(v));
        }
        return extremal_filter(img);
    };

    // Fast path: already flat against the given target fan.
    auto maps_onto_some_cone = [&](const std::vector<IntVec>& img, const ConeComplex& fan) {
        for (const auto& t : fan.cones)
            if (same_cone(img, t.rays)) return true;
        return false;
    };
    bool flat_now = true;
    for (const auto& s : sources) {
        Cone probe = s.source;
        for (const auto& subset : probe.face_subsets())
            if (!maps_onto_some_cone(image_rays(make_cone("f", probe.ambient_rank, probe.subset_rays(subset)), s.eval),
                                     target_fan))
                flat_now = false;
    }

    FlattenResult out;
    if (flat_now) {
        out.refined_target = target_fan;
        out.already_flat = true;
        for (size_t k = 0; k < sources.size(); ++k) {
            FlattenPiece p;
            p.input_index = k;
            p.piece = sources[k].source;
            auto img = image_rays(sources[k].source, sources[k].eval);
            for (const auto& t : target_fan.cones)
                if (same_cone(img, t.rays)) p.target = t.id;
            out.pieces.push_back(std::move(p));
        }
    } else {
        // Arrangement refinement, iterated to a fixpoint.
        std::set<std::string> seen_walls;
        std::vector<IntVec> walls;
        auto add_wall = [&](const IntVec& w) {
            if (is_zero(w)) return;
            std::string key = vec_to_string(w);
            if (seen_walls.insert(key).second) walls.push_back(w);
        };
        for (const auto& t : target_fan.cones)
            for (const auto& w : cone_hyperplanes(t.rays, trank)) add_wall(w);
        for (const auto& s : sources)
            for (const auto& subset : s.source.face_subsets()) {
                auto img = image_rays(make_cone("f", s.source.ambient_rank, s.source.subset_rays(subset)),
                                      s.eval);
                for (const auto& w : cone_hyperplanes(img, trank)) add_wall(w);
            }

        for (int round = 0; round < 10; ++round) {
            // Refine the target.
            std::vector<std::pair<ConeId, std::vector<IntVec>>> tmax;
            size_t tc = 0;
            for (const auto& t : target_fan.cones)
                for (const auto& piece : clip_by_hyperplanes(t, walls))
                    tmax.push_back({"t" + std::to_string(tc++), piece.rays});
            out.refined_target = fan_complex(trank, tmax);

            // Refine the sources by pulled-back walls and assign.
            out.pieces.clear();
            bool ok = true;
            std::vector<IntVec> new_walls;
            for (size_t k = 0; k < sources.size() && ok; ++k) {
                std::vector<IntVec> pulled;
                for (const auto& w : walls) {
                    RatVec wq(w.size());
                    for (size_t i = 0; i < w.size(); ++i) wq[i] = Rat(w[i]);
                    RatVec pb = sources[k].eval.to_q().transposed().apply(wq);
                    if (!is_zero(pb)) pulled.push_back(normalize_covector(pb));
                }
                Cone src = sources[k].source;
                src.id = "s" + std::to_string(k);
                for (const auto& piece : clip_by_hyperplanes(src, pulled)) {
                    // Every face of the piece must surject onto a refined cone.
                    ConeComplex piece_fan = fan_complex(src.ambient_rank, {{piece.id, piece.rays}});
                    for (const auto& c : piece_fan.cones) {
                        auto img = image_rays(c, sources[k].eval);
                        bool hit = false;
                        for (const auto& t : out.refined_target.cones)
                            if (same_cone(img, t.rays)) hit = true;
                        if (!hit) {
                            ok = false;
                            for (const auto& w : cone_hyperplanes(img, trank)) new_walls.push_back(w);
                        }
                    }
                    FlattenPiece fp;
                    fp.input_index = k;
                    fp.piece = piece;
                    auto img = image_rays(piece, sources[k].eval);
                    for (const auto& t : out.refined_target.cones)
                        if (same_cone(img, t.rays)) fp.target = t.id;
                    out.pieces.push_back(std::move(fp));
                }
            }
            if (ok) break;
            size_t before = walls.size();
            for (const auto& w : new_walls) add_wall(w);
            if (walls.size() == before)
                throw std::logic_error("flatten_evaluation: refinement did not converge");
        }
    }

    // Reduced-fiber index data per refined target cone.
    for (const auto& p : out.pieces) {
        if (p.target.empty()) throw std::logic_error("flatten_evaluation: unassigned piece");
        const Cone& t = out.refined_target.at(p.target);
        auto tgt_basis = saturated_lattice_basis(t.rays);
        if (tgt_basis.empty()) continue;
        auto src_basis = saturated_lattice_basis(p.piece.rays);
        std::vector<IntVec> img;
        for (const auto& b : src_basis) img.push_back(sources[p.input_index].eval.apply(b));
        Int idx = lattice_index(tgt_basis, img);
        Int& scale = out.lattice_scale[p.target];
        if (scale == 0) scale = 1;
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), idx.get_mpz_t());
    }
    return out;
}

}  // namespace logdeg
