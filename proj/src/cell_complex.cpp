#include "cylcert/cell_complex.hpp"

#include <string>

#include "cylcert/error.hpp"

namespace cylcert {

PolygonComplex::PolygonComplex(int vertex_count, std::vector<std::array<int, 2>> edge_ends,
                               std::vector<std::vector<PolygonSide>> faces)
    : vertex_count_(vertex_count), edge_ends_(std::move(edge_ends)), faces_(std::move(faces)) {
    std::vector<int> uses(edge_ends_.size(), 0);
    edge_uses_.assign(edge_ends_.size(), {EdgeUse{-1, -1}, EdgeUse{-1, -1}});
    face_offset_.assign(1, 0);
    for (int f = 0; f < face_count(); ++f) {
        const auto& sides = faces_[f];
        if (sides.empty()) throw Error(ErrorCode::PipelinePreconditionFailed, "empty polygon");
        for (int j = 0; j < static_cast<int>(sides.size()); ++j) {
            const auto& s = sides[j];
            if (s.edge < 0 || s.edge >= edge_count()) {
                throw Error(ErrorCode::PipelinePreconditionFailed, "polygon side names a missing edge");
            }
            if (uses[s.edge] == 2) {
                throw Error(ErrorCode::PipelinePreconditionFailed,
                            "edge " + std::to_string(s.edge) + " used more than twice");
            }
            edge_uses_[s.edge][uses[s.edge]++] = {f, j};
            const auto& nxt = sides[(j + 1) % sides.size()];
            const int end = s.forward ? edge_ends_[s.edge][1] : edge_ends_[s.edge][0];
            const int start = nxt.forward ? edge_ends_[nxt.edge][0] : edge_ends_[nxt.edge][1];
            if (end != start) {
                throw Error(ErrorCode::PipelinePreconditionFailed,
                            "polygon " + std::to_string(f) + " sides do not chain at side " + std::to_string(j));
            }
        }
        face_offset_.push_back(face_offset_.back() + static_cast<int>(sides.size()));
    }
    for (int e = 0; e < edge_count(); ++e) {
        if (uses[e] != 2) {
            throw Error(ErrorCode::NotClosed, "edge " + std::to_string(e) + " has " + std::to_string(uses[e]) + " sides");
        }
    }
    vertex_faces_.assign(vertex_count_, {});
    for (int f = 0; f < face_count(); ++f) {
        for (int j = 0; j < static_cast<int>(faces_[f].size()); ++j) vertex_faces_[corner_vertex(f, j)].push_back(f);
    }
}

int PolygonComplex::corner_vertex(int f, int j) const {
    const auto& s = faces_[f][j];
    return s.forward ? edge_ends_[s.edge][0] : edge_ends_[s.edge][1];
}

ThickComplex::ThickComplex(const PolygonComplex& base) : base_(base) {
    const int nf = base_.face_count();
    const int ne = base_.edge_count();
    const int nv = base_.vertex_count();
    const int nu = base_.use_count();

    cell_sides_.assign(nf + ne + nv, {});
    side_cells_.resize(2 * nu + 2 * ne);
    side_points_.resize(2 * nu + 2 * ne);
    point_sides_.assign(2 * nu, {-1, -1, -1});
    std::vector<int> point_fill(2 * nu, 0);

    // Refined point 2u is at the start of side use u, 2u+1 at its end.
    auto add_side = [&](int s, int c0, int c1, int p0, int p1) {
        side_cells_[s] = {c0, c1};
        side_points_[s] = {p0, p1};
        cell_sides_[c0].push_back(s);
        cell_sides_[c1].push_back(s);
        point_sides_[p0][point_fill[p0]++] = s;
        point_sides_[p1][point_fill[p1]++] = s;
    };

    for (int f = 0; f < nf; ++f) {
        const auto& sides = base_.face(f);
        const int n = static_cast<int>(sides.size());
        for (int j = 0; j < n; ++j) {
            const int u = base_.use_index(f, j);
            add_side(face_edge_side(f, j), face_cell(f), edge_cell(sides[j].edge), 2 * u, 2 * u + 1);
        }
        for (int j = 0; j < n; ++j) {
            const int prev = base_.use_index(f, (j + n - 1) % n);
            const int u = base_.use_index(f, j);
            add_side(face_corner_side(f, j), face_cell(f), vertex_cell(base_.corner_vertex(f, j)), 2 * prev + 1, 2 * u);
        }
    }
    for (int e = 0; e < ne; ++e) {
        for (int k = 0; k < 2; ++k) {
            std::array<int, 2> pts{};
            for (int i = 0; i < 2; ++i) {
                const auto use = base_.edge_uses(e)[i];
                const bool fwd = base_.face(use.face)[use.side].forward;
                const int u = base_.use_index(use.face, use.side);
                // Edge end 0 sits at the start of a forward side use.
                pts[i] = 2 * u + ((k == 0) == fwd ? 0 : 1);
            }
            add_side(edge_end_side(e, k), edge_cell(e), vertex_cell(base_.edge_ends(e)[k]), pts[0], pts[1]);
        }
    }
    for (int p = 0; p < 2 * nu; ++p) {
        if (point_fill[p] != 3) throw Error(ErrorCode::PipelinePreconditionFailed, "refined point is not trivalent");
    }
}

CellKind ThickComplex::cell_kind(int c) const {
    if (c < base_.face_count()) return CellKind::Face;
    if (c < base_.face_count() + base_.edge_count()) return CellKind::Edge;
    return CellKind::Vertex;
}

int ThickComplex::cell_owner(int c) const {
    if (c < base_.face_count()) return c;
    if (c < base_.face_count() + base_.edge_count()) return c - base_.face_count();
    return c - base_.face_count() - base_.edge_count();
}

}  // namespace cylcert
