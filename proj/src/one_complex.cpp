#include "logdeg/one_complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace logdeg {

namespace {

// One-dimensional cell in parametric form: p + t*d for t in [0, len] (or
// [0, inf) when len is absent).  Points have an empty direction.
struct Cell1 {
    RatVec p;
    IntVec d;
    std::optional<Rat> len;

    bool is_point() const { return d.empty() || is_zero(d); }
    RatVec eval(const Rat& t) const {
        RatVec out = p;
        for (size_t i = 0; i < out.size(); ++i) out[i] += t * Rat(d[i]);
        return out;
    }
    bool in_range(const Rat& t) const {
        if (t < 0) return false;
        return !len || t <= *len;
    }
    bool in_open_range(const Rat& t) const {
        if (t <= 0) return false;
        return !len || t < *len;
    }
};

// Parameter of x on the line p + t d; nullopt if off the line.
std::optional<Rat> line_param(const RatVec& p, const IntVec& d, const RatVec& x) {
    std::optional<Rat> t;
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        Rat ti = (x[i] - p[i]) / Rat(d[i]);
        if (!t) t = ti;
        else if (*t != ti) return std::nullopt;
    }
    if (!t) return std::nullopt;
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] == 0 && x[i] != p[i]) return std::nullopt;
    return t;
}

bool parallel(const IntVec& a, const IntVec& b) {
    IntVec pa = primitive(a), pb = primitive(b);
    IntVec nb = pb;
    for (auto& x : nb) x = -x;
    return pa == pb || pa == nb;
}

// Transversal intersection parameters (t, s) of two non-parallel lines, if
// the lines meet.
std::optional<std::pair<Rat, Rat>> cross_params(const Cell1& a, const Cell1& b) {
    size_t n = a.p.size();
    MatQ A(n, 2);
    RatVec rhs(n);
    for (size_t i = 0; i < n; ++i) {
        A.at(i, 0) = Rat(a.d[i]);
        A.at(i, 1) = Rat(-b.d[i]);
        rhs[i] = b.p[i] - a.p[i];
    }
    auto x = solve(A, rhs);
    if (!x) return std::nullopt;
    return std::make_pair((*x)[0], (*x)[1]);
}

std::vector<Cell1> cells_of(const OneComplex& g) {
    std::vector<Cell1> out;
    for (const auto& e : g.edges) {
        Cell1 c;
        c.p = g.vertex(e.tail).pos;
        c.d = e.dir;
        c.len = e.length;
        out.push_back(std::move(c));
    }
    for (const auto& r : g.rays) {
        Cell1 c;
        c.p = g.vertex(r.base).pos;
        c.d = r.dir;
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

const OCVertex* OneComplex::find_vertex(const std::string& id) const {
    for (const auto& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

const OCVertex& OneComplex::vertex(const std::string& id) const {
    const OCVertex* v = find_vertex(id);
    if (!v) throw std::invalid_argument("unknown vertex '" + id + "'");
    return *v;
}

RatVec OneComplex::edge_head_pos(const OCEdge& e) const {
    RatVec out = vertex(e.tail).pos;
    for (size_t i = 0; i < out.size(); ++i) out[i] += e.length * Rat(e.dir[i]);
    return out;
}

std::vector<IntVec> OneComplex::directions_at(const std::string& vertex_id) const {
    std::vector<IntVec> out;
    for (const auto& e : edges) {
        if (e.tail == vertex_id) out.push_back(e.dir);
        if (e.head == vertex_id) {
            IntVec neg = e.dir;
            for (auto& x : neg) x = -x;
            out.push_back(neg);
        }
    }
    for (const auto& r : rays)
        if (r.base == vertex_id) out.push_back(r.dir);
    return out;
}

size_t OneComplex::valence(const std::string& vertex_id) const {
    return directions_at(vertex_id).size();
}

std::vector<Violation> validate_one_complex(const OneComplex& g) {
    std::vector<Violation> out;
    std::set<std::string> vertex_ids;
    for (const auto& v : g.vertices) {
        if (!vertex_ids.insert(v.id).second)
            out.push_back({"duplicate-vertex-id", "vertex '" + v.id + "' appears twice"});
        if (v.pos.size() != g.ambient_rank)
            out.push_back({"vertex-rank", "vertex '" + v.id + "' has position of wrong rank"});
    }
    for (size_t i = 0; i < g.vertices.size(); ++i)
        for (size_t j = i + 1; j < g.vertices.size(); ++j)
            if (g.vertices[i].pos == g.vertices[j].pos)
                out.push_back({"coincident-vertices", "vertices '" + g.vertices[i].id + "' and '" +
                                                          g.vertices[j].id + "' share a position"});
    for (const auto& e : g.edges) {
        if (!g.find_vertex(e.tail) || !g.find_vertex(e.head)) {
            out.push_back({"dangling-edge", "edge '" + e.id + "' references a missing vertex"});
            continue;
        }
        if (e.length <= 0)
            out.push_back({"nonpositive-length", "edge '" + e.id + "' has nonpositive length"});
        if (is_zero(e.dir) || primitive(e.dir) != e.dir)
            out.push_back({"non-primitive-direction", "edge '" + e.id + "' direction is not primitive"});
        else if (g.edge_head_pos(e) != g.vertex(e.head).pos)
            out.push_back({"edge-geometry", "edge '" + e.id + "' endpoints do not match dir x length"});
    }
    for (const auto& r : g.rays) {
        if (!g.find_vertex(r.base)) {
            out.push_back({"dangling-ray", "ray '" + r.id + "' references a missing vertex"});
            continue;
        }
        if (is_zero(r.dir) || primitive(r.dir) != r.dir)
            out.push_back({"non-primitive-direction", "ray '" + r.id + "' direction is not primitive"});
    }
    if (!out.empty()) return out;

    // Embeddedness: distinct cells have disjoint relative interiors.
    auto cells = cells_of(g);
    std::vector<std::string> cell_ids;
    for (const auto& e : g.edges) cell_ids.push_back(e.id);
    for (const auto& r : g.rays) cell_ids.push_back(r.id);
    // vertices against cell interiors
    for (const auto& v : g.vertices)
        for (size_t k = 0; k < cells.size(); ++k) {
            auto t = line_param(cells[k].p, cells[k].d, v.pos);
            if (t && cells[k].in_open_range(*t))
                out.push_back({"vertex-in-cell-interior",
                               "vertex '" + v.id + "' lies in the interior of cell '" + cell_ids[k] + "'"});
        }
    for (size_t a = 0; a < cells.size(); ++a)
        for (size_t b = a + 1; b < cells.size(); ++b) {
            const Cell1 &ca = cells[a], &cb = cells[b];
            if (parallel(ca.d, cb.d)) {
                auto t_base = line_param(ca.p, ca.d, cb.p);
                if (!t_base) continue;  // parallel but distinct lines
                bool same_dir = primitive(ca.d) == primitive(cb.d);
                // Interval of cb in ca's parameter; nullopt = unbounded side.
                std::optional<Rat> b_lo, b_hi;
                if (cb.len) {
                    Rat t_end = *line_param(ca.p, ca.d, cb.eval(*cb.len));
                    b_lo = std::min(*t_base, t_end);
                    b_hi = std::max(*t_base, t_end);
                } else if (same_dir) {
                    b_lo = *t_base;
                } else {
                    b_hi = *t_base;
                }
                Rat lo = b_lo ? std::max(Rat(0), *b_lo) : Rat(0);
                std::optional<Rat> hi;
                if (ca.len && b_hi) hi = std::min(*ca.len, *b_hi);
                else if (ca.len) hi = *ca.len;
                else hi = b_hi;
                if (!hi || lo < *hi)
                    out.push_back({"overlapping-cells", "cells '" + cell_ids[a] + "' and '" +
                                                            cell_ids[b] + "' overlap"});
            } else {
                auto ts = cross_params(ca, cb);
                if (!ts) continue;
                auto [t, s] = *ts;
                bool ia = ca.in_open_range(t), ib = cb.in_open_range(s);
                bool ea = ca.in_range(t), eb = cb.in_range(s);
                if ((ia && ib) || (ia && eb) || (ea && ib))
                    out.push_back({"crossing-cells", "cells '" + cell_ids[a] + "' and '" + cell_ids[b] +
                                                         "' cross"});
            }
        }
    return out;
}

std::vector<Violation> validate_in(const OneComplex& g, const PolyhedralComplex& ambient) {
    std::vector<Violation> out = validate_one_complex(g);
    for (const auto& v : g.vertices) {
        if (v.face.empty()) {
            out.push_back({"missing-face", "vertex '" + v.id + "' carries no containing face"});
            continue;
        }
        const PolyhedralFace* f = ambient.find(v.face);
        if (!f) {
            out.push_back({"unknown-face", "vertex '" + v.id + "' names unknown face '" + v.face + "'"});
            continue;
        }
        if (!f->contains(v.pos))
            out.push_back({"vertex-outside-face",
                           "vertex '" + v.id + "' does not lie in its face '" + v.face + "'"});
    }
    // Each edge must lie in a single ambient face containing both endpoints.
    for (const auto& e : g.edges) {
        RatVec mid = g.vertex(e.tail).pos;
        RatVec head = g.edge_head_pos(e);
        for (size_t i = 0; i < mid.size(); ++i) mid[i] = (mid[i] + head[i]) / 2;
        bool ok = false;
        for (const auto& f : ambient.faces)
            if (f.contains(g.vertex(e.tail).pos) && f.contains(head) && f.contains(mid)) ok = true;
        if (!ok)
            out.push_back({"edge-outside-faces", "edge '" + e.id + "' is not contained in an ambient face"});
    }
    for (const auto& r : g.rays) {
        const RatVec& base = g.vertex(r.base).pos;
        RatVec far = base;
        for (size_t i = 0; i < far.size(); ++i) far[i] += Rat(1000000) * Rat(r.dir[i]);
        bool ok = false;
        for (const auto& f : ambient.faces)
            if (f.contains(base) && f.contains(far)) ok = true;  // recession handles the tail
        if (!ok)
            out.push_back({"ray-outside-faces", "ray '" + r.id + "' is not contained in an ambient face"});
    }
    return out;
}

std::vector<Violation> validate_chow(const OneComplex& g, const ChowDecoration& d) {
    std::vector<Violation> out;
    std::set<std::string> cell_ids;
    for (const auto& e : g.edges) cell_ids.insert(e.id);
    for (const auto& r : g.rays) cell_ids.insert(r.id);
    for (const auto& [id, n] : d.edge_labels) {
        if (!cell_ids.count(id))
            out.push_back({"unknown-cell", "label on unknown edge/ray '" + id + "'"});
        if (n <= 0) out.push_back({"nonpositive-label", "edge '" + id + "' has label " + n.get_str()});
    }
    for (const auto& id : cell_ids)
        if (!d.edge_labels.count(id))
            out.push_back({"missing-label", "edge/ray '" + id + "' carries no label"});
    for (const auto& [vid, cls] : d.vertex_classes) {
        if (!g.find_vertex(vid))
            out.push_back({"unknown-vertex", "class on unknown vertex '" + vid + "'"});
        for (const auto& c : cls)
            if (c < 0)
                out.push_back({"non-effective-class", "vertex '" + vid + "' class has a negative entry"});
    }
    return out;
}

namespace {

// Linear 2-valency in the sense of the retraction: exactly two incident cell
// germs with opposite primitive directions.
bool is_linear_two_valent(const OneComplex& g, const std::string& vid) {
    auto dirs = g.directions_at(vid);
    if (dirs.size() != 2) return false;
    IntVec neg = dirs[1];
    for (auto& x : neg) x = -x;
    return dirs[0] == neg;
}

}  // namespace

bool is_pure(const OneComplex& g) {
    for (const auto& v : g.vertices) {
        if (g.valence(v.id) == 0) return false;       // free vertex
        if (is_linear_two_valent(g, v.id)) return false;
    }
    return true;
}

namespace {

// Erase one linear 2-valent vertex, merging its two incident cells; returns
// false when no such vertex exists (or erasing is impossible, e.g. a vertex
// joining two opposite rays, which must keep a vertex to stay a complex).
bool erase_one_linear_vertex(OneComplex& g, ChowDecoration* dec, bool respect_decorations) {
    for (const auto& v : g.vertices) {
        if (!is_linear_two_valent(g, v.id)) continue;
        std::vector<size_t> edge_idx;
        std::vector<size_t> ray_idx;
        for (size_t i = 0; i < g.edges.size(); ++i)
            if (g.edges[i].tail == v.id || g.edges[i].head == v.id) edge_idx.push_back(i);
        for (size_t i = 0; i < g.rays.size(); ++i)
            if (g.rays[i].base == v.id) ray_idx.push_back(i);
        if (edge_idx.size() + ray_idx.size() != 2) continue;
        if (ray_idx.size() == 2) continue;  // a full line needs at least one vertex

        if (respect_decorations && dec) {
            auto cit = dec->vertex_classes.find(v.id);
            if (cit != dec->vertex_classes.end() && !is_zero(cit->second)) continue;
            auto label_of = [&](size_t i, bool is_edge) {
                const std::string& id = is_edge ? g.edges[i].id : g.rays[i].id;
                auto it = dec->edge_labels.find(id);
                return it == dec->edge_labels.end() ? Int(1) : it->second;
            };
            Int l1 = edge_idx.size() >= 1 ? label_of(edge_idx[0], true) : label_of(ray_idx[0], false);
            Int l2 = edge_idx.size() == 2 ? label_of(edge_idx[1], true)
                                          : label_of(ray_idx[ray_idx.size() - 1], false);
            if (l1 != l2) continue;
        }

        if (edge_idx.size() == 2) {
            OCEdge e1 = g.edges[edge_idx[0]], e2 = g.edges[edge_idx[1]];
            // Orient both away from v and compose tail -> v -> head.
            std::string a = e1.tail == v.id ? e1.head : e1.tail;
            std::string b = e2.tail == v.id ? e2.head : e2.tail;
            OCEdge merged;
            merged.id = e1.id;
            merged.tail = a;
            merged.head = b;
            RatVec pa = g.vertex(a).pos, pb = g.vertex(b).pos;
            merged.dir = primitive_direction(pb - pa);
            // length from any nonzero coordinate
            for (size_t i = 0; i < merged.dir.size(); ++i)
                if (merged.dir[i] != 0) {
                    merged.length = (pb[i] - pa[i]) / Rat(merged.dir[i]);
                    break;
                }
            size_t i1 = edge_idx[0], i2 = edge_idx[1];
            if (dec) {
                Int label = dec->edge_labels.count(e1.id) ? dec->edge_labels[e1.id] : Int(1);
                dec->edge_labels.erase(e2.id);
                dec->edge_labels[merged.id] = label;
            }
            if (i2 > i1) std::swap(i1, i2);
            g.edges.erase(g.edges.begin() + i1);
            g.edges.erase(g.edges.begin() + i2);
            g.edges.push_back(merged);
        } else {
            // one edge + one ray: the merged cell is a ray from the far end
            OCEdge e = g.edges[edge_idx[0]];
            OCRay r = g.rays[ray_idx[0]];
            std::string far = e.tail == v.id ? e.head : e.tail;
            OCRay merged;
            merged.id = r.id;
            merged.base = far;
            merged.dir = r.dir;
            if (dec) {
                Int label = dec->edge_labels.count(r.id) ? dec->edge_labels[r.id] : Int(1);
                dec->edge_labels.erase(e.id);
                dec->edge_labels[merged.id] = label;
            }
            g.edges.erase(g.edges.begin() + edge_idx[0]);
            g.rays.erase(g.rays.begin() + ray_idx[0]);
            g.rays.push_back(merged);
        }
        if (dec) dec->vertex_classes.erase(v.id);
        for (size_t i = 0; i < g.vertices.size(); ++i)
            if (g.vertices[i].id == v.id) {
                g.vertices.erase(g.vertices.begin() + i);
                break;
            }
        return true;
    }
    return false;
}

void erase_free_vertices(OneComplex& g, ChowDecoration* dec) {
    for (size_t i = g.vertices.size(); i-- > 0;) {
        if (g.valence(g.vertices[i].id) == 0) {
            if (dec) dec->vertex_classes.erase(g.vertices[i].id);
            g.vertices.erase(g.vertices.begin() + i);
        }
    }
}

}  // namespace

OneComplex retract_to_pure(const OneComplex& g_in) {
    OneComplex g = g_in;
    erase_free_vertices(g, nullptr);
    while (erase_one_linear_vertex(g, nullptr, false)) {}
    return g;
}

std::pair<OneComplex, ChowDecoration> retract_to_pure(const OneComplex& g_in, const ChowDecoration& d_in) {
    OneComplex g = g_in;
    ChowDecoration d = d_in;
    erase_free_vertices(g, &d);
    while (erase_one_linear_vertex(g, &d, true)) {}
    return {g, d};
}

std::pair<OneComplex, ChowDecoration> specialize_merge(const OneComplex& g_in, const ChowDecoration& d_in,
                                                       const std::vector<std::vector<std::string>>& groups) {
    OneComplex g = g_in;
    ChowDecoration d = d_in;
    for (const auto& group : groups) {
        if (group.size() < 2) continue;
        const std::string& keep = group[0];
        g.vertex(keep);  // must exist
        IntVec total = d.vertex_classes.count(keep) ? d.vertex_classes[keep] : IntVec{};
        for (size_t k = 1; k < group.size(); ++k) {
            const std::string& gone = group[k];
            auto it = d.vertex_classes.find(gone);
            if (it != d.vertex_classes.end()) {
                if (total.empty()) total = it->second;
                else {
                    if (total.size() != it->second.size())
                        throw std::invalid_argument("specialize_merge: class length mismatch");
                    total = total + it->second;
                }
                d.vertex_classes.erase(it);
            }
            for (auto& e : g.edges) {
                if (e.tail == gone) e.tail = keep;
                if (e.head == gone) e.head = keep;
            }
            for (auto& r : g.rays)
                if (r.base == gone) r.base = keep;
            for (size_t i = 0; i < g.vertices.size(); ++i)
                if (g.vertices[i].id == gone) g.vertices.erase(g.vertices.begin() + i--);
        }
        if (!total.empty()) d.vertex_classes[keep] = total;
        // Edges contracted by the merge disappear; their labels go with them.
        for (size_t i = 0; i < g.edges.size(); ++i)
            if (g.edges[i].tail == g.edges[i].head) {
                d.edge_labels.erase(g.edges[i].id);
                g.edges.erase(g.edges.begin() + i--);
            }
    }
    // Re-derive edge geometry against (possibly moved) endpoints: the merge
    // instruction is combinatorial, so we recompute directions and lengths.
    for (auto& e : g.edges) {
        RatVec pa = g.vertex(e.tail).pos, pb = g.vertex(e.head).pos;
        if (pa == pb) continue;
        e.dir = primitive_direction(pb - pa);
        for (size_t i = 0; i < e.dir.size(); ++i)
            if (e.dir[i] != 0) {
                e.length = (pb[i] - pa[i]) / Rat(e.dir[i]);
                break;
            }
    }
    return {g, d};
}

const TMVertex& TropicalMap::vertex(const std::string& id) const {
    for (const auto& v : vertices)
        if (v.id == id) return v;
    throw std::invalid_argument("unknown map vertex '" + id + "'");
}

std::vector<Violation> validate_tropical_map(const TropicalMap& t, const std::vector<IntVec>* ambient_rays) {
    std::vector<Violation> out;
    for (const auto& v : t.vertices) {
        if (v.pos.size() != t.ambient_rank)
            out.push_back({"vertex-rank", "map vertex '" + v.id + "' has wrong position rank"});
        if (v.genus < 0) out.push_back({"negative-genus", "map vertex '" + v.id + "' has negative genus"});
        for (const auto& c : v.cls)
            if (c < 0)
                out.push_back({"non-effective-class", "map vertex '" + v.id + "' class not effective"});
    }
    for (const auto& e : t.edges) {
        const TMVertex &a = t.vertex(e.tail), &b = t.vertex(e.head);
        if (a.pos == b.pos)
            out.push_back({"contracted-bounded-edge", "edge '" + e.id + "' is contracted"});
        if (e.dilation < 1)
            out.push_back({"nonpositive-dilation", "edge '" + e.id + "' has dilation < 1"});
    }
    for (const auto& l : t.legs) {
        t.vertex(l.base);
        bool contracted = l.dir.empty() || is_zero(l.dir);
        if (contracted) continue;
        if (primitive(l.dir) != l.dir)
            out.push_back({"non-primitive-direction", "leg '" + l.id + "' direction is not primitive"});
        if (l.weight < 1)
            out.push_back({"nonpositive-dilation", "leg '" + l.id + "' has weight < 1"});
        if (ambient_rays) {
            bool ok = false;
            for (const auto& r : *ambient_rays)
                if (parallel_same_direction(l.dir, r)) ok = true;
            if (!ok)
                out.push_back({"leg-not-along-ray",
                               "leg '" + l.id + "' direction is not a multiple of an ambient ray"});
        }
    }
    return out;
}

std::vector<std::string> check_balancing(const TropicalMap& t, const PolyhedralComplex* ambient) {
    std::vector<std::string> bad;
    size_t top_dim = 0;
    if (ambient)
        for (const auto& f : ambient->faces) top_dim = std::max(top_dim, f.dim());
    for (const auto& v : t.vertices) {
        if (ambient) {
            auto mf = ambient->minimal_face_containing(v.pos);
            if (!mf || ambient->at(*mf).dim() != top_dim) continue;  // wall vertex: unchecked
        }
        IntVec sum(t.ambient_rank, Int(0));
        for (const auto& e : t.edges) {
            if (e.tail != v.id && e.head != v.id) continue;
            const TMVertex& other = t.vertex(e.tail == v.id ? e.head : e.tail);
            IntVec d = primitive_direction(other.pos - v.pos);
            sum = sum + e.dilation * d;
        }
        for (const auto& l : t.legs) {
            if (l.base != v.id || l.dir.empty() || is_zero(l.dir)) continue;
            sum = sum + l.weight * l.dir;
        }
        if (!is_zero(sum)) bad.push_back(v.id);
    }
    return bad;
}

std::pair<OneComplex, ChowDecoration> chow_of_tropical_map(const TropicalMap& t) {
    // Primitive pieces with weights.
    struct Prim {
        Cell1 cell;
        Int weight;
    };
    std::vector<Prim> prims;
    for (const auto& e : t.edges) {
        Cell1 c;
        c.p = t.vertex(e.tail).pos;
        RatVec q = t.vertex(e.head).pos;
        c.d = primitive_direction(q - c.p);
        c.len = line_param(c.p, c.d, q);
        prims.push_back({c, e.dilation});
    }
    for (const auto& l : t.legs) {
        if (l.dir.empty() || is_zero(l.dir)) continue;  // contracted legs leave no image ray
        Cell1 c;
        c.p = t.vertex(l.base).pos;
        c.d = l.dir;
        prims.push_back({c, l.weight});
    }

    // Breakpoints per primitive: vertex images plus pairwise intersections.
    std::vector<std::vector<Rat>> breaks(prims.size());
    for (size_t k = 0; k < prims.size(); ++k)
        for (const auto& v : t.vertices) {
            auto s = line_param(prims[k].cell.p, prims[k].cell.d, v.pos);
            if (s && prims[k].cell.in_range(*s)) breaks[k].push_back(*s);
        }
    for (size_t a = 0; a < prims.size(); ++a)
        for (size_t b = a + 1; b < prims.size(); ++b) {
            const Cell1 &ca = prims[a].cell, &cb = prims[b].cell;
            if (parallel(ca.d, cb.d)) {
                // Collinear overlaps break at each other's endpoints.
                auto sa = line_param(ca.p, ca.d, cb.p);
                if (!sa) continue;
                if (ca.in_range(*sa)) breaks[a].push_back(*sa);
                if (cb.len) {
                    auto se = line_param(ca.p, ca.d, cb.eval(*cb.len));
                    if (se && ca.in_range(*se)) breaks[a].push_back(*se);
                }
                auto sb = line_param(cb.p, cb.d, ca.p);
                if (sb && cb.in_range(*sb)) breaks[b].push_back(*sb);
                if (ca.len) {
                    auto se = line_param(cb.p, cb.d, ca.eval(*ca.len));
                    if (se && cb.in_range(*se)) breaks[b].push_back(*se);
                }
            } else {
                auto ts = cross_params(ca, cb);
                if (!ts) continue;
                if (ca.in_range(ts->first) && cb.in_range(ts->second)) {
                    breaks[a].push_back(ts->first);
                    breaks[b].push_back(ts->second);
                }
            }
        }

    // Atomic pieces with weights, keyed by their realized point set.
    std::map<std::string, std::pair<Cell1, Int>> bounded;   // key -> (cell, weight)
    std::map<std::string, std::pair<Cell1, Int>> unbounded;
    auto pos_key = [](const RatVec& p) {
        std::ostringstream os;
        for (const auto& x : p) os << x << ",";
        return os.str();
    };
    for (size_t k = 0; k < prims.size(); ++k) {
        auto& br = breaks[k];
        br.push_back(Rat(0));
        if (prims[k].cell.len) br.push_back(*prims[k].cell.len);
        std::sort(br.begin(), br.end());
        br.erase(std::unique(br.begin(), br.end()), br.end());
        for (size_t i = 0; i + 1 < br.size(); ++i) {
            RatVec pa = prims[k].cell.eval(br[i]);
            RatVec pb = prims[k].cell.eval(br[i + 1]);
            std::string ka = pos_key(pa), kb = pos_key(pb);
            bool flip = kb < ka;
            Cell1 piece;
            piece.p = flip ? pb : pa;
            piece.d = flip ? primitive_direction(pa - pb) : primitive_direction(pb - pa);
            piece.len = line_param(piece.p, piece.d, flip ? pa : pb);
            std::string key = (flip ? kb : ka) + "|" + (flip ? ka : kb);
            auto it = bounded.find(key);
            if (it == bounded.end()) bounded[key] = {piece, prims[k].weight};
            else it->second.second += prims[k].weight;
        }
        if (!prims[k].cell.len) {
            Cell1 piece;
            piece.p = prims[k].cell.eval(br.back());
            piece.d = prims[k].cell.d;
            std::string key = pos_key(piece.p) + "|ray|" + vec_to_string(piece.d);
            auto it = unbounded.find(key);
            if (it == unbounded.end()) unbounded[key] = {piece, prims[k].weight};
            else it->second.second += prims[k].weight;
        }
    }

    // Assemble the image complex.
    OneComplex img;
    img.ambient_rank = t.ambient_rank;
    ChowDecoration dec;
    std::map<std::string, std::string> vid_by_pos;
    size_t class_len = 0;
    for (const auto& v : t.vertices) class_len = std::max(class_len, v.cls.size());
    auto vertex_at = [&](const RatVec& p) -> std::string {
        std::string key = pos_key(p);
        auto it = vid_by_pos.find(key);
        if (it != vid_by_pos.end()) return it->second;
        std::string id = "v" + std::to_string(vid_by_pos.size());
        vid_by_pos[key] = id;
        OCVertex v;
        v.id = id;
        v.pos = p;
        img.vertices.push_back(v);
        dec.vertex_classes[id] = IntVec(class_len, Int(0));
        return id;
    };
    for (const auto& v : t.vertices) {
        std::string id = vertex_at(v.pos);
        IntVec cls = v.cls.empty() ? IntVec(class_len, Int(0)) : v.cls;
        if (cls.size() != class_len) throw std::invalid_argument("chow_of_tropical_map: class length mismatch");
        dec.vertex_classes[id] = dec.vertex_classes[id] + cls;
    }
    size_t ecount = 0;
    for (const auto& [key, piece] : bounded) {
        OCEdge e;
        e.id = "e" + std::to_string(ecount++);
        e.tail = vertex_at(piece.first.p);
        e.head = vertex_at(piece.first.eval(*piece.first.len));
        e.dir = piece.first.d;
        e.length = *piece.first.len;
        dec.edge_labels[e.id] = piece.second;
        img.edges.push_back(e);
    }
    size_t rcount = 0;
    for (const auto& [key, piece] : unbounded) {
        OCRay r;
        r.id = "r" + std::to_string(rcount++);
        r.base = vertex_at(piece.first.p);
        r.dir = piece.first.d;
        dec.edge_labels[r.id] = piece.second;
        img.rays.push_back(r);
    }
    return {img, dec};
}

}  // namespace logdeg
