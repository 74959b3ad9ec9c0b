#include "cylcert/face_complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "cylcert/error.hpp"

namespace cylcert {

namespace {

using Corner = std::array<int, 2>;

std::vector<Corner> disk_corners(int type) {
    if (type < 4) {
        std::vector<Corner> out;
        for (int x = 0; x < 4; ++x) {
            if (x != type) out.push_back({type, x});
        }
        return out;
    }
    const int q = type - 3;
    std::array<int, 2> s{};
    int k = 0;
    for (int x = 1; x < 4; ++x) {
        if (x != q) s[k++] = x;
    }
    return {{0, s[0]}, {0, s[1]}, {q, s[1]}, {q, s[0]}};
}

struct ArcSpec {
    int face;   // tetrahedron face carrying the arc
    int w;      // vertex the arc cuts off
};

/// Arc of a disk joining corners c1 and c2, which share exactly one vertex.
ArcSpec arc_between(const Corner& c1, const Corner& c2) {
    int w = -1;
    for (int x : c1) {
        if (x == c2[0] || x == c2[1]) w = x;
    }
    int used = (1 << c1[0]) | (1 << c1[1]) | (1 << c2[0]) | (1 << c2[1]);
    int face = 0;
    while (used & (1 << face)) ++face;
    return {face, w};
}

int other_of(const Corner& c, int w) { return c[0] == w ? c[1] : c[0]; }

}  // namespace

namespace detail {

class FaceComplexBuilder {
public:
    FaceComplexBuilder(const Triangulation& tri, const NormalCoordinates& q) : tri_(tri), q_(q) {}

    FaceComplex build();

private:
    std::int64_t count(int t, int type) const { return type < 4 ? q_.tri(t, type) : q_.quad(t, type - 3); }
    int disk_id(int t, int type, int depth) const { return disk_base_[7 * t + type] + depth; }
    int arc_id(int t, int f, int w, std::int64_t k) const;
    int arc_vertex(int t, int f, int w, std::int64_t k, int toward) const;
    std::int64_t arc_index(int t, int type, int depth, int w) const;
    std::array<int, 2> disk_at(int t, int a, int b, std::int64_t pos) const;
    int depth_direction(int t, int type, const Corner& c) const;

    const Triangulation& tri_;
    const NormalCoordinates& q_;
    std::vector<int> disk_base_;
    std::vector<int> arc_base_;  // per (tet, face, vertex) on canonical face sides
    int arc_total_ = 0;
};

int FaceComplexBuilder::arc_id(int t, int f, int w, std::int64_t k) const {
    const auto& g = tri_.gluing(t, f);
    if (g && g->tet * 4 + g->face < t * 4 + f) return arc_id(g->tet, g->face, g->perm[w], k);
    return arc_base_[(t * 4 + f) * 4 + w] + static_cast<int>(k);
}

int FaceComplexBuilder::arc_vertex(int t, int f, int w, std::int64_t k, int toward) const {
    const auto& g = tri_.gluing(t, f);
    if (g && g->tet * 4 + g->face < t * 4 + f) {
        return arc_vertex(g->tet, g->face, g->perm[w], k, g->perm[toward]);
    }
    int lowest = 4;
    for (int x = 0; x < 4; ++x) {
        if (x != f && x != w) lowest = std::min(lowest, x);
    }
    return 2 * arc_id(t, f, w, k) + (toward == lowest ? 0 : 1);
}

std::int64_t FaceComplexBuilder::arc_index(int t, int type, int depth, int w) const {
    if (type < 4) return depth;
    const int qt = type - 3;
    const std::int64_t n = q_.quad(t, qt);
    return q_.tri(t, w) + (on_zero_side(qt, w) ? depth : n - 1 - depth);
}

std::array<int, 2> FaceComplexBuilder::disk_at(int t, int a, int b, std::int64_t pos) const {
    const std::int64_t ta = q_.tri(t, a);
    if (pos < ta) return {a, static_cast<int>(pos)};
    pos -= ta;
    const int qt = q_.quad_type(t);
    if (qt != 0 && quad_separates(qt, a, b)) {
        const std::int64_t n = q_.quad(t, qt);
        if (pos < n) return {3 + qt, static_cast<int>(on_zero_side(qt, a) ? pos : n - 1 - pos)};
        pos -= n;
    }
    return {b, static_cast<int>(q_.tri(t, b) - 1 - pos)};
}

int FaceComplexBuilder::depth_direction(int t, int type, const Corner& c) const {
    const int a = tri_.incidence_of(t, c[0], c[1]).a;
    if (type < 4) return type == a ? 1 : -1;
    return on_zero_side(type - 3, a) ? 1 : -1;
}

FaceComplex FaceComplexBuilder::build() {
    const int nt = tri_.tet_count();
    if (!validate_coordinates(tri_, q_).valid()) {
        throw Error(ErrorCode::InvalidCoordinates, "coordinates fail the matching equations or quad condition");
    }
    if (!tri_.orientable()) throw Error(ErrorCode::NonOrientableAmbient, "triangulation is not orientable");
    for (int t = 0; t < nt; ++t) {
        for (int f = 0; f < 4; ++f) {
            if (tri_.gluing(t, f)) continue;
            for (int w = 0; w < 4; ++w) {
                if (w != f && q_.arc_count(t, f, w) > 0) {
                    throw Error(ErrorCode::NotClosed, "surface meets boundary face (" + std::to_string(t) + "," +
                                                          std::to_string(f) + ")");
                }
            }
        }
    }

    FaceComplex fc;
    fc.tet_count_ = nt;

    // Truncated disks.
    disk_base_.assign(7 * nt, 0);
    int nd = 0;
    for (int t = 0; t < nt; ++t) {
        for (int type = 0; type < 7; ++type) {
            disk_base_[7 * t + type] = nd;
            nd += static_cast<int>(count(t, type));
        }
    }

    // Normal arcs, numbered on the canonical side of each face pairing.
    arc_base_.assign(16 * nt, -1);
    for (int t = 0; t < nt; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri_.gluing(t, f);
            if (g && g->tet * 4 + g->face < t * 4 + f) continue;
            for (int w = 0; w < 4; ++w) {
                if (w == f) continue;
                arc_base_[(t * 4 + f) * 4 + w] = arc_total_;
                arc_total_ += static_cast<int>(q_.arc_count(t, f, w));
            }
        }
    }
    fc.arc_edge_count_ = arc_total_;

    std::vector<std::array<int, 2>> edge_ends(arc_total_);
    for (int a = 0; a < arc_total_; ++a) edge_ends[a] = {2 * a, 2 * a + 1};
    std::vector<std::vector<PolygonSide>> polys;
    std::vector<int> corner_base(nd + 1, 0);
    // For each disk corner: the face carrying the arc before it.
    std::vector<int> corner_prev_face;

    for (int t = 0; t < nt; ++t) {
        for (int type = 0; type < 7; ++type) {
            const auto corners = disk_corners(type);
            const int nc = static_cast<int>(corners.size());
            for (int depth = 0; depth < count(t, type); ++depth) {
                Face face;
                face.id = static_cast<int>(fc.faces_.size());
                face.kind = type < 4 ? FaceKind::TruncatedTriangle : FaceKind::TruncatedQuad;
                face.tet = t;
                face.disk_type = type;
                face.depth = depth;
                corner_base[face.id] = static_cast<int>(edge_ends.size());
                std::vector<PolygonSide> sides;
                for (int j = 0; j < nc; ++j) {
                    const Corner& c = corners[j];
                    const Corner& cp = corners[(j + nc - 1) % nc];
                    const Corner& cn = corners[(j + 1) % nc];
                    const ArcSpec prev = arc_between(cp, c);
                    const ArcSpec next = arc_between(c, cn);
                    const int v0 = arc_vertex(t, prev.face, prev.w, arc_index(t, type, depth, prev.w), other_of(c, prev.w));
                    const int v1 = arc_vertex(t, next.face, next.w, arc_index(t, type, depth, next.w), other_of(c, next.w));
                    const int corner_edge = static_cast<int>(edge_ends.size());
                    edge_ends.push_back({v0, v1});
                    corner_prev_face.push_back(prev.face);
                    sides.push_back({corner_edge, true});
                    const int arc = arc_id(t, next.face, next.w, arc_index(t, type, depth, next.w));
                    sides.push_back({arc, v1 == 2 * arc});
                    face.boundary.push_back(corner_edge);
                    face.boundary.push_back(arc);
                }
                polys.push_back(std::move(sides));
                fc.faces_.push_back(std::move(face));
            }
        }
    }
    fc.truncated_count_ = nd;

    // Families of truncated disks.
    for (int t = 0; t < nt; ++t) {
        for (int type = 0; type < 7; ++type) {
            if (count(t, type) == 0) continue;
            ParallelFamily fam{type < 4 ? FamilyKind::TriangleFamily : FamilyKind::QuadFamily, t,
                               type < 4 ? type : -1, -1, {}};
            for (int depth = 0; depth < count(t, type); ++depth) fam.members.push_back(disk_id(t, type, depth));
            fc.families_.push_back(std::move(fam));
        }
    }

    // Vertex disks, one family per edge class crossed by the surface.
    const auto& classes = tri_.edge_classes();
    for (int e = 0; e < static_cast<int>(classes.size()); ++e) {
        const auto& cycle = classes[e].cycle;
        const EdgeIncidence& first = cycle.front();
        const std::int64_t weight = q_.edge_weight(first.tet, first.a, first.b);
        if (weight == 0) continue;
        ParallelFamily fam{FamilyKind::VertexDiskFamily, -1, -1, e, {}};
        for (std::int64_t pos = 0; pos < weight; ++pos) {
            Face face;
            face.id = static_cast<int>(fc.faces_.size());
            face.kind = FaceKind::VertexDisk;
            face.edge_class = e;
            face.position = static_cast<int>(pos);
            std::vector<PolygonSide> sides;
            for (const EdgeIncidence& inc : cycle) {
                const auto [type, depth] = disk_at(inc.tet, inc.a, inc.b, pos);
                const auto corners = disk_corners(type);
                int j = 0;
                while (!((corners[j][0] == inc.a && corners[j][1] == inc.b) ||
                         (corners[j][0] == inc.b && corners[j][1] == inc.a))) {
                    ++j;
                }
                const int d = disk_id(inc.tet, type, depth);
                const int edge = corner_base[d] + j;
                sides.push_back({edge, corner_prev_face[edge - arc_total_] == inc.c});
                face.boundary.push_back(edge);
            }
            polys.push_back(std::move(sides));
            fam.members.push_back(face.id);
            fc.faces_.push_back(std::move(face));
        }
        fc.families_.push_back(std::move(fam));
    }

    for (int fam = 0; fam < static_cast<int>(fc.families_.size()); ++fam) {
        const auto& members = fc.families_[fam].members;
        for (int i = 0; i < static_cast<int>(members.size()); ++i) {
            fc.faces_[members[i]].family = fam;
            fc.faces_[members[i]].family_index = i;
        }
    }

    PolygonComplex graph(2 * arc_total_, std::move(edge_ends), std::move(polys));

    // Coorientation: propagate across corner edges, each shared by one
    // truncated disk and one vertex disk.
    const int nf = static_cast<int>(fc.faces_.size());
    std::vector<int> sign(nf, 0);
    std::vector<std::vector<std::pair<int, int>>> links(nf);  // (neighbor, relative sign)
    for (int d = 0; d < nd; ++d) {
        const Face& face = fc.faces_[d];
        const auto corners = disk_corners(face.disk_type);
        for (int j = 0; j < static_cast<int>(corners.size()); ++j) {
            const int edge = corner_base[d] + j;
            const auto uses = graph.edge_uses(edge);
            const int v = uses[0].face == d ? uses[1].face : uses[0].face;
            const int dir = depth_direction(face.tet, face.disk_type, corners[j]);
            links[d].push_back({v, dir});
            links[v].push_back({d, dir});
        }
    }
    for (int s = 0; s < nf; ++s) {
        if (sign[s] != 0) continue;
        sign[s] = 1;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int f = queue.front();
            queue.pop_front();
            for (const auto& [g, rel] : links[f]) {
                const int want = sign[f] * rel;
                if (sign[g] == 0) {
                    sign[g] = want;
                    queue.push_back(g);
                } else if (sign[g] != want) {
                    throw Error(ErrorCode::OneSided, "coorientation conflict at face " + std::to_string(g));
                }
            }
        }
    }
    fc.coorientation_ = std::move(sign);
    fc.stats_ = polygon_stats(graph);
    fc.thick_ = ThickComplex(graph);
    return fc;
}

}  // namespace detail

int FaceComplex::family_neighbor(int f, int step) const {
    const auto& fam = families_[faces_[f].family];
    const int i = faces_[f].family_index + step;
    return i >= 0 && i < fam.size() ? fam.members[i] : -1;
}

bool FaceComplex::outermost(int f) const {
    const int i = faces_[f].family_index;
    return i == 0 || i == family_of(f).size() - 1;
}

FaceComplex build_face_complex(const Triangulation& tri, const NormalCoordinates& q) {
    return detail::FaceComplexBuilder(tri, q).build();
}

SurfaceStats polygon_stats(const PolygonComplex& g) {
    const int nf = g.face_count();
    std::vector<int> parent(nf);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        parent[find(g.edge_uses(e)[0].face)] = find(g.edge_uses(e)[1].face);
    }
    std::vector<int> comp_of(nf, -1);
    SurfaceStats st;
    std::vector<int> root_comp(nf, -1);
    for (int f = 0; f < nf; ++f) {
        const int r = find(f);
        if (root_comp[r] < 0) root_comp[r] = st.components++;
        comp_of[f] = root_comp[r];
    }
    st.component_euler.assign(st.components, 0);
    for (int f = 0; f < nf; ++f) st.component_euler[comp_of[f]] += 1;
    for (int e = 0; e < g.edge_count(); ++e) st.component_euler[comp_of[g.edge_uses(e)[0].face]] -= 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!g.vertex_faces(v).empty()) st.component_euler[comp_of[g.vertex_faces(v).front()]] += 1;
    }
    st.euler = g.euler();

    // Orientability: faces carry their boundary direction; neighbors must
    // traverse a shared edge in opposite directions.
    std::vector<int> orient(nf, 0);
    for (int s = 0; s < nf && st.orientable; ++s) {
        if (orient[s] != 0) continue;
        orient[s] = 1;
        std::deque<int> queue{s};
        while (!queue.empty() && st.orientable) {
            const int f = queue.front();
            queue.pop_front();
            for (const auto& side : g.face(f)) {
                const auto& uses = g.edge_uses(side.edge);
                for (int i = 0; i < 2; ++i) {
                    const auto mine = uses[i];
                    const auto other = uses[1 - i];
                    if (mine.face != f) continue;
                    const bool same = g.face(mine.face)[mine.side].forward == g.face(other.face)[other.side].forward;
                    const int want = same ? -orient[f] : orient[f];
                    if (orient[other.face] == 0) {
                        orient[other.face] = want;
                        queue.push_back(other.face);
                    } else if (orient[other.face] != want) {
                        st.orientable = false;
                    }
                }
            }
        }
    }
    for (auto chi : st.component_euler) st.component_genus.push_back((2 - chi) / 2);
    if (st.components == 1) {
        st.genus = st.component_genus.front();
    } else {
        st.per_component_only = true;
    }
    return st;
}

SurfaceStats surface_stats(const FaceComplex& fc) { return fc.stats(); }

bool genus_threshold_met(std::int64_t genus, int tet_count) { return genus >= 38LL * tet_count; }

bool genus_threshold_met(const FaceComplex& fc, const Triangulation& tri) {
    if (fc.stats().components != 1) {
        throw Error(ErrorCode::Disconnected, std::to_string(fc.stats().components) + " components");
    }
    return genus_threshold_met(*fc.stats().genus, tri.tet_count());
}

}  // namespace cylcert
