#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cylcert/cell_complex.hpp"
#include "cylcert/normal_surface.hpp"
#include "cylcert/triangulation.hpp"

namespace cylcert {

namespace detail {
class FaceComplexBuilder;
}

enum class FaceKind { TruncatedTriangle, TruncatedQuad, VertexDisk };

struct Face {
    int id = 0;
    FaceKind kind = FaceKind::TruncatedTriangle;
    // Truncated disks: tetrahedron, disk type (0..3 triangle at that vertex,
    // 4..6 quad of type 1..3), depth within the family.
    int tet = -1;
    int disk_type = -1;
    int depth = -1;
    // Vertex disks: edge class and position from the class start.
    int edge_class = -1;
    int position = -1;
    int family = -1;
    int family_index = -1;
    std::vector<int> boundary;  // G-edge ids in cyclic order
};

enum class FamilyKind { TriangleFamily, QuadFamily, VertexDiskFamily };

struct ParallelFamily {
    FamilyKind kind;
    int tet = -1;          // triangle and quad families
    int vertex = -1;       // triangle families
    int edge_class = -1;   // vertex-disk families
    std::vector<int> members;

    int size() const { return static_cast<int>(members.size()); }
};

enum class GEdgeKind { Arc, Corner };

struct SurfaceStats {
    std::int64_t euler = 0;
    std::optional<std::int64_t> genus;  // absent when disconnected
    int components = 0;
    bool orientable = true;
    std::vector<std::int64_t> component_euler;
    std::vector<std::int64_t> component_genus;
    bool per_component_only = false;
};

class FaceComplex {
public:
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int f) const { return faces_[f]; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int truncated_count() const { return truncated_count_; }

    const std::vector<ParallelFamily>& families() const { return families_; }
    const ParallelFamily& family_of(int f) const { return families_[faces_[f].family]; }
    /// Family member `step` places along the family order, or -1.
    int family_neighbor(int f, int step) const;
    bool outermost(int f) const;

    /// +1 when the positive normal of f points toward increasing family index.
    int coorientation(int f) const { return coorientation_[f]; }

    const PolygonComplex& graph() const { return thick_.base(); }
    const ThickComplex& thick() const { return thick_; }
    int g_vertex_count() const { return graph().vertex_count(); }
    int g_edge_count() const { return graph().edge_count(); }
    GEdgeKind g_edge_kind(int e) const { return e < arc_edge_count_ ? GEdgeKind::Arc : GEdgeKind::Corner; }

    int tet_count() const { return tet_count_; }
    const SurfaceStats& stats() const { return stats_; }

private:
    friend class detail::FaceComplexBuilder;

    int tet_count_ = 0;
    int truncated_count_ = 0;
    int arc_edge_count_ = 0;
    std::vector<Face> faces_;
    std::vector<ParallelFamily> families_;
    std::vector<int> coorientation_;
    ThickComplex thick_;
    SurfaceStats stats_;
};

/// Throws InvalidCoordinates, NotClosed, NonOrientableAmbient, OneSided.
FaceComplex build_face_complex(const Triangulation& tri, const NormalCoordinates& q);

/// Euler characteristic, component count and orientability of a closed polygon complex.
SurfaceStats polygon_stats(const PolygonComplex& g);

SurfaceStats surface_stats(const FaceComplex& fc);

/// genus >= 38 t. Throws Disconnected.
bool genus_threshold_met(const FaceComplex& fc, const Triangulation& tri);
bool genus_threshold_met(std::int64_t genus, int tet_count);

}  // namespace cylcert
