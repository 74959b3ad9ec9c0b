#pragma once

#include <array>
#include <vector>

namespace cylcert {

struct PolygonSide {
    int edge;
    bool forward;  // traversed from edge end 0 to edge end 1
};

/// Closed surface given as polygons glued along edges. Every edge is used by
/// exactly two polygon sides; loops and multi-edges are allowed.
class PolygonComplex {
public:
    struct EdgeUse {
        int face;
        int side;
    };

    PolygonComplex() = default;
    PolygonComplex(int vertex_count, std::vector<std::array<int, 2>> edge_ends,
                   std::vector<std::vector<PolygonSide>> faces);

    int face_count() const { return static_cast<int>(faces_.size()); }
    int edge_count() const { return static_cast<int>(edge_ends_.size()); }
    int vertex_count() const { return vertex_count_; }

    const std::vector<PolygonSide>& face(int f) const { return faces_[f]; }
    const std::array<int, 2>& edge_ends(int e) const { return edge_ends_[e]; }
    const std::array<EdgeUse, 2>& edge_uses(int e) const { return edge_uses_[e]; }
    /// Vertex at the start of side j of face f.
    int corner_vertex(int f, int j) const;
    /// Global index of side j of face f; side uses are numbered face by face.
    int use_index(int f, int j) const { return face_offset_[f] + j; }
    int use_count() const { return face_offset_.back(); }
    /// Faces incident to vertex v, with multiplicity.
    const std::vector<int>& vertex_faces(int v) const { return vertex_faces_[v]; }

    int euler() const { return vertex_count_ - edge_count() + face_count(); }

private:
    int vertex_count_ = 0;
    std::vector<std::array<int, 2>> edge_ends_;
    std::vector<std::vector<PolygonSide>> faces_;
    std::vector<std::array<EdgeUse, 2>> edge_uses_;
    std::vector<int> face_offset_{0};
    std::vector<std::vector<int>> vertex_faces_;
};

enum class CellKind { Face, Edge, Vertex };

/// Thickened refinement of a PolygonComplex: each polygon, edge and vertex is a
/// 2-cell. Polygons shrink away from their corners, edges become bands and
/// vertices become small disks. Every refined vertex meets exactly three cells,
/// so any set of cells is a surface with boundary.
class ThickComplex {
public:
    ThickComplex() = default;
    explicit ThickComplex(const PolygonComplex& base);

    const PolygonComplex& base() const { return base_; }

    int cell_count() const { return static_cast<int>(cell_sides_.size()); }
    int side_count() const { return static_cast<int>(side_cells_.size()); }
    int point_count() const { return static_cast<int>(point_sides_.size()); }

    CellKind cell_kind(int c) const;
    /// Polygon, edge or vertex id that the cell thickens.
    int cell_owner(int c) const;
    int face_cell(int f) const { return f; }
    int edge_cell(int e) const { return base_.face_count() + e; }
    int vertex_cell(int v) const { return base_.face_count() + base_.edge_count() + v; }

    const std::array<int, 2>& side_cells(int s) const { return side_cells_[s]; }
    const std::array<int, 2>& side_points(int s) const { return side_points_[s]; }
    const std::vector<int>& cell_sides(int c) const { return cell_sides_[c]; }
    const std::array<int, 3>& point_sides(int p) const { return point_sides_[p]; }

    /// Side between polygon f and the band of its side j.
    int face_edge_side(int f, int j) const { return base_.use_index(f, j); }
    /// Side between polygon f and the vertex disk at its corner j.
    int face_corner_side(int f, int j) const { return base_.use_count() + base_.use_index(f, j); }
    /// Side between the band of edge e and the vertex disk at its end k.
    int edge_end_side(int e, int k) const { return 2 * base_.use_count() + 2 * e + k; }

    /// Cell across side s from cell c.
    int across(int s, int c) const { return side_cells_[s][0] == c ? side_cells_[s][1] : side_cells_[s][0]; }

private:
    PolygonComplex base_;
    std::vector<std::array<int, 2>> side_cells_;
    std::vector<std::array<int, 2>> side_points_;
    std::vector<std::vector<int>> cell_sides_;
    std::vector<std::array<int, 3>> point_sides_;
};

}  // namespace cylcert
