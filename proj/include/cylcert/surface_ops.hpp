#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cylcert/cell_complex.hpp"

namespace cylcert {

/// Union of thick cells, cut open along a set of blocked sides. A blocked side
/// between two member cells contributes two boundary copies.
class Subsurface {
public:
    explicit Subsurface(const ThickComplex& cx);

    static Subsurface whole(const ThickComplex& cx);
    static Subsurface from_cells(const ThickComplex& cx, const std::vector<int>& cells);
    /// Polygons plus every edge band and vertex disk whose neighbouring polygons are all included.
    static Subsurface from_faces(const ThickComplex& cx, const std::vector<int>& faces);

    const ThickComplex& complex() const { return *cx_; }
    bool contains(int cell) const { return in_[cell] != 0; }
    bool blocked(int side) const { return cut_[side] != 0; }
    void add(int cell);
    void remove(int cell);
    void block(int side) { cut_[side] = 1; }

    int cell_count() const { return count_; }
    bool empty() const { return count_ == 0; }
    std::vector<int> cells() const;
    /// Polygons of the base complex contained in the subsurface.
    std::vector<int> faces() const;
    std::vector<int> blocked_sides() const;
    bool contains_all(const Subsurface& other) const;
    bool disjoint_from(const Subsurface& other) const;

    friend bool operator==(const Subsurface& x, const Subsurface& y) {
        return x.cx_ == y.cx_ && x.in_ == y.in_ && x.cut_ == y.cut_;
    }

private:
    const ThickComplex* cx_;
    std::vector<std::uint8_t> in_;
    std::vector<std::uint8_t> cut_;
    int count_ = 0;
};

/// Embedded closed curve on the thick complex: a cyclic list of distinct sides,
/// consecutive ones sharing a refined point, no point visited twice.
struct Curve {
    std::vector<int> sides;

    friend bool operator==(const Curve&, const Curve&) = default;
    friend auto operator<=>(const Curve&, const Curve&) = default;
};

/// Validates and canonicalizes (least side first, then least neighbour). Throws NotEmbedded.
Curve make_curve(const ThickComplex& cx, std::vector<int> sides);
/// Empty string when `sides` is an embedded closed curve, otherwise the reason.
std::string curve_defect(const ThickComplex& cx, const std::vector<int>& sides);

struct BoundaryCycle {
    std::vector<int> sides;
    std::vector<int> cells;  // member cell on which each side use sits
};

struct SurfaceComponent {
    std::vector<int> cells;
    std::int64_t euler = 0;
    std::vector<BoundaryCycle> boundary;
};

struct Evaluation {
    std::vector<SurfaceComponent> components;  // ordered by least cell
    std::int64_t euler = 0;
    int boundary_count = 0;
};

Evaluation evaluate(const Subsurface& s);

/// (chi, number of boundary components).
std::pair<std::int64_t, int> euler_and_boundary(const Subsurface& s);

/// Path of G-edges (edges of the base polygon complex).
struct GPath {
    std::vector<int> edges;
    bool closed = false;
};

/// Vertex sequence of a path; closed paths repeat no vertex. Empty when not a simple path.
std::vector<int> path_vertices(const PolygonComplex& g, const GPath& path);

/// Removes the band of each arc. Throws ArcNotProper, ArcsIntersect.
Subsurface cut_along_arcs(const Subsurface& s, const std::vector<GPath>& arcs);
/// Removes the annular band of each closed G-path. Throws CurveNotInterior, CurvesIntersect.
Subsurface cut_along_curves(const Subsurface& s, const std::vector<GPath>& curves);
/// Cuts along thick curves by blocking their sides. Throws CurveNotInterior, CurvesIntersect.
Subsurface cut_open(const Subsurface& s, const std::vector<Curve>& curves);

std::vector<Subsurface> components(const Subsurface& s);
Subsurface component_subsurface(const Subsurface& s, const SurfaceComponent& comp);
/// Cells of `ambient` not in `s`, keeping the cuts of `ambient`.
Subsurface complement(const Subsurface& s, const Subsurface& ambient);
/// Adds every disk component of ambient \ s whose boundary runs along s. Throws NotContained.
Subsurface cap_disk_components(const Subsurface& s, const Subsurface& ambient, int* capped = nullptr);

/// Boundary curve of the band around a closed G-path.
Curve curve_from_gpath(const ThickComplex& cx, const GPath& path);

/// False iff cutting `ambient` along c leaves a disk bounded by one copy of c.
/// Throws NotEmbedded, CurveNotInterior.
bool is_essential(const Curve& c, const Subsurface& ambient);

/// Every boundary curve of s is essential in `ambient`.
bool boundary_essential(const Subsurface& s, const Subsurface& ambient);

/// is_essential for each of a family of pairwise disjoint curves, with one cut.
/// Throws NotEmbedded, CurveNotInterior, CurvesIntersect.
std::vector<bool> essential_flags(const std::vector<Curve>& curves, const Subsurface& ambient);

}  // namespace cylcert
