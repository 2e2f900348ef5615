#include "logdeg/polyhedral.hpp"

#include <algorithm>

namespace logdeg {

size_t PolyhedralFace::dim() const {
    if (vertices.empty()) return 0;
    std::vector<RatVec> dirs;
    for (size_t i = 1; i < vertices.size(); ++i) dirs.push_back(vertices[i] - vertices[0]);
    for (const auto& r : recession) dirs.push_back(to_rat(r));
    return rank_of_columns(dirs);
}

bool PolyhedralFace::contains(const RatVec& x) const {
    if (vertices.empty()) return false;
    // x = sum l_i v_i + sum m_j d_j with l >= 0, sum l = 1, m >= 0.
    size_t nv = vertices.size(), nr = recession.size(), n = x.size();
    LinearProgram lp;
    lp.num_vars = nv + nr;
    for (size_t i = 0; i < n; ++i) {
        LinConstraint c;
        c.coeffs.resize(nv + nr);
        for (size_t j = 0; j < nv; ++j) c.coeffs[j] = vertices[j][i];
        for (size_t j = 0; j < nr; ++j) c.coeffs[nv + j] = Rat(recession[j][i]);
        c.rhs = x[i];
        lp.eq.push_back(std::move(c));
    }
    LinConstraint sum;
    sum.coeffs.assign(nv + nr, Rat(0));
    for (size_t j = 0; j < nv; ++j) sum.coeffs[j] = 1;
    sum.rhs = 1;
    lp.eq.push_back(std::move(sum));
    for (size_t j = 0; j < nv + nr; ++j) {
        LinConstraint c;
        c.coeffs.assign(nv + nr, Rat(0));
        c.coeffs[j] = 1;
        c.rhs = 0;
        lp.ge.push_back(std::move(c));
    }
    return lp_feasible(lp);
}

const PolyhedralFace* PolyhedralComplex::find(const ConeId& id) const {
    for (const auto& f : faces)
        if (f.id == id) return &f;
    return nullptr;
}

const PolyhedralFace& PolyhedralComplex::at(const ConeId& id) const {
    const PolyhedralFace* f = find(id);
    if (!f) throw std::invalid_argument("unknown face id '" + id + "'");
    return *f;
}

std::vector<ConeId> PolyhedralComplex::vertex_ids() const {
    std::vector<ConeId> out;
    for (const auto& f : faces)
        if (f.dim() == 0) out.push_back(f.id);
    return out;
}

std::optional<ConeId> PolyhedralComplex::minimal_face_containing(const RatVec& x) const {
    const PolyhedralFace* best = nullptr;
    for (const auto& f : faces) {
        if (!f.contains(x)) continue;
        if (!best || f.dim() < best->dim()) best = &f;
    }
    if (!best) return std::nullopt;
    return best->id;
}

PolyhedralComplex PolyhedralComplex::dilated(const Rat& factor) const {
    PolyhedralComplex out = *this;
    for (auto& f : out.faces)
        for (auto& v : f.vertices) v = factor * v;
    return out;
}

PolyhedralComplex slice(const ConeComplex& c, const ConeMorphism& pi, const Rat& height) {
    if (height <= 0) throw std::invalid_argument("slice: height must be positive");
    if (!pi.target || pi.target->cones.size() != 2 || pi.target->ray_ids().size() != 1)
        throw std::invalid_argument("slice: morphism must target the ray complex");
    if (!is_fan_like(c))
        throw std::invalid_argument("slice: only fan-like complexes can be sliced in coordinates");

    PolyhedralComplex out;
    out.ambient_rank = c.cones.empty() ? 0 : c.cones[0].ambient_rank;
    for (const auto& cone : c.cones) {
        auto it = pi.assignment.find(cone.id);
        if (it == pi.assignment.end())
            throw std::invalid_argument("slice: cone '" + cone.id + "' has no assignment");
        const MatZ& w = it->second.linear;  // 1 x rank covector
        bool positive = false;
        for (const auto& r : cone.rays) {
            Int v = w.apply(r)[0];
            if (v < 0)
                throw std::invalid_argument("slice: covector negative on a ray of '" + cone.id + "'");
            if (v > 0) positive = true;
        }
        if (!positive) continue;  // contracted by pi
        PolyhedralFace f;
        f.id = cone.id;
        for (const auto& r : cone.rays) {
            Int v = w.apply(r)[0];
            if (v > 0)
                f.vertices.push_back((height / Rat(v)) * to_rat(r));
            else
                f.recession.push_back(r);
        }
        out.faces.push_back(std::move(f));
    }
    for (const auto& fm : c.face_maps) {
        if (fm.child == fm.parent) continue;
        if (out.find(fm.child) && out.find(fm.parent)) out.face_rel.push_back({fm.child, fm.parent});
    }
    return out;
}

PolyhedralComplex slice_fan(const ConeComplex& c, const IntVec& covector, const Rat& height) {
    ConeMorphism pi;
    static ConeComplex ray = ray_complex();
    pi.source = &c;
    pi.target = &ray;
    MatZ w(1, covector.size());
    for (size_t j = 0; j < covector.size(); ++j) w.at(0, j) = covector[j];
    for (const auto& cone : c.cones) {
        bool positive = false;
        for (const auto& r : cone.rays)
            if (w.apply(r)[0] > 0) positive = true;
        pi.assignment[cone.id] = {positive ? "ray" : "0", w};
    }
    return slice(c, pi, height);
}

ConeComplex cone_over_slice(const PolyhedralComplex& p) {
    size_t n = p.ambient_rank;
    std::vector<std::pair<ConeId, std::vector<IntVec>>> maximal;
    for (const auto& f : p.faces) {
        std::vector<IntVec> rays;
        for (const auto& v : f.vertices) {
            RatVec lifted = v;
            lifted.push_back(Rat(1));
            rays.push_back(primitive_direction(lifted));
        }
        for (const auto& d : f.recession) {
            IntVec lifted = d;
            lifted.push_back(Int(0));
            rays.push_back(primitive(lifted));
        }
        maximal.push_back({f.id, rays});
    }
    return fan_complex(n + 1, maximal);
}

bool dilation_of(const PolyhedralComplex& a, const PolyhedralComplex& b, const Rat& factor) {
    if (a.faces.size() != b.faces.size()) return false;
    auto rel_a = a.face_rel, rel_b = b.face_rel;
    std::sort(rel_a.begin(), rel_a.end());
    std::sort(rel_b.begin(), rel_b.end());
    if (rel_a != rel_b) return false;
    for (const auto& fa : a.faces) {
        const PolyhedralFace* fb = b.find(fa.id);
        if (!fb) return false;
        if (fa.vertices.size() != fb->vertices.size()) return false;
        auto va = fa.vertices, vb = fb->vertices;
        for (auto& v : va) v = factor * v;
        std::sort(va.begin(), va.end());
        std::sort(vb.begin(), vb.end());
        if (va != vb) return false;
        auto ra = fa.recession, rb = fb->recession;
        std::sort(ra.begin(), ra.end());
        std::sort(rb.begin(), rb.end());
        if (ra != rb) return false;
    }
    return true;
}

}  // namespace logdeg
