#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cylcert {

/// Permutation of the tetrahedron vertex labels {0,1,2,3}, stored as images.
class Perm {
public:
    constexpr Perm() : image_{0, 1, 2, 3} {}
    constexpr Perm(int i0, int i1, int i2, int i3) : image_{i0, i1, i2, i3} {}

    constexpr int operator[](int v) const { return image_[v]; }
    bool is_bijection() const;
    Perm inverse() const;
    int sign() const;
    std::string str() const;

    friend bool operator==(const Perm&, const Perm&) = default;

private:
    std::array<int, 4> image_;
};

struct Gluing {
    int tet = 0;
    int face = 0;
    Perm perm;  // carries source vertex labels to target vertex labels

    friend bool operator==(const Gluing&, const Gluing&) = default;
};

enum class VertexKind { Material, Ideal, Truncated };

/// One corner of an edge class: edge (a,b) of `tet`. Walking the class leaves
/// `tet` through the face opposite `d` and arrives through the face opposite `c`.
struct EdgeIncidence {
    int tet;
    int a, b, c, d;

    friend bool operator==(const EdgeIncidence&, const EdgeIncidence&) = default;
};

struct EdgeClass {
    std::vector<EdgeIncidence> cycle;
    bool boundary = false;  // cycle is a linear chain between two boundary faces

    int degree() const { return static_cast<int>(cycle.size()); }
};

/// Index 0..5 of the tetrahedron edge joining vertices a and b.
int tet_edge_index(int a, int b);
/// Endpoints of tetrahedron edge `e`, with the lower label first.
std::array<int, 2> tet_edge_vertices(int e);

class Triangulation {
public:
    using FaceGluings = std::array<std::optional<Gluing>, 4>;

    /// Validates gluings and derives edge and vertex classes. Throws GluingError.
    Triangulation(int tet_count, std::vector<FaceGluings> gluings);

    int tet_count() const { return tet_count_; }
    const std::optional<Gluing>& gluing(int tet, int face) const { return gluings_[tet][face]; }

    const std::vector<EdgeClass>& edge_classes() const { return edge_classes_; }
    /// Edge class containing edge {a,b} of `tet`.
    int edge_class_of(int tet, int a, int b) const;
    /// Incidence of edge {a,b} of `tet` within its class; a/b follow the class orientation.
    const EdgeIncidence& incidence_of(int tet, int a, int b) const;

    int vertex_class_count() const { return static_cast<int>(vertex_kinds_.size()); }
    int vertex_class_of(int tet, int v) const { return vertex_class_[tet * 4 + v]; }
    VertexKind vertex_kind(int vertex_class) const { return vertex_kinds_[vertex_class]; }
    /// Euler characteristic of the link of a vertex class.
    int vertex_link_euler(int vertex_class) const { return vertex_link_euler_[vertex_class]; }

    bool orientable() const { return orientable_; }
    bool has_boundary_faces() const;

    /// Canonical text form; parse_triangulation(serialize()) reproduces it exactly.
    std::string serialize() const;

    friend bool operator==(const Triangulation& x, const Triangulation& y) {
        return x.tet_count_ == y.tet_count_ && x.gluings_ == y.gluings_;
    }

private:
    void validate() const;
    void build_edge_classes();
    void build_vertex_classes();
    void check_orientability();

    int tet_count_;
    std::vector<FaceGluings> gluings_;
    std::vector<EdgeClass> edge_classes_;
    std::vector<std::array<int, 6>> edge_class_of_;      // [tet][edge]
    std::vector<std::array<int, 6>> incidence_index_;    // position in class cycle
    std::vector<int> vertex_class_;
    std::vector<VertexKind> vertex_kinds_;
    std::vector<int> vertex_link_euler_;
    bool orientable_ = false;
};

/// Parses the `tri 1` text format. Throws SyntaxError, GluingError, CountMismatch.
Triangulation parse_triangulation(std::string_view text);

/// Edge classes of `tri`, ordered by least (tetrahedron, edge) incidence.
const std::vector<EdgeClass>& edge_classes(const Triangulation& tri);

}  // namespace cylcert
