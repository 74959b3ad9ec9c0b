#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cylcert/triangulation.hpp"

namespace cylcert {

/// Quad type (1..3) that groups vertices v and w on the same side.
int quad_pairing(int v, int w);
/// True iff quad type q puts a and b on opposite sides.
bool quad_separates(int q, int a, int b);
/// True iff vertex v is on the {0,q} side of quad type q.
inline bool on_zero_side(int q, int v) { return v == 0 || v == q; }

/// Seven coordinates per tetrahedron: tri0..tri3, quad1..quad3.
class NormalCoordinates {
public:
    NormalCoordinates() = default;
    explicit NormalCoordinates(std::vector<std::int64_t> values) : values_(std::move(values)) {}
    static NormalCoordinates zero(int tet_count) { return NormalCoordinates(std::vector<std::int64_t>(7 * tet_count, 0)); }

    std::size_t size() const { return values_.size(); }
    int tet_count() const { return static_cast<int>(values_.size() / 7); }
    const std::vector<std::int64_t>& values() const { return values_; }

    std::int64_t tri(int tet, int v) const { return values_[7 * tet + v]; }
    /// q in 1..3
    std::int64_t quad(int tet, int q) const { return values_[7 * tet + 3 + q]; }
    std::int64_t& tri(int tet, int v) { return values_[7 * tet + v]; }
    std::int64_t& quad(int tet, int q) { return values_[7 * tet + 3 + q]; }

    /// The nonzero quad type of `tet`, or 0.
    int quad_type(int tet) const;
    /// Number of normal arcs on face f of tet that cut off vertex v.
    std::int64_t arc_count(int tet, int face, int v) const;
    /// Number of normal disks meeting edge {a,b} of tet.
    std::int64_t edge_weight(int tet, int a, int b) const;
    std::int64_t disk_count() const;
    bool is_zero() const;

    NormalCoordinates scaled(std::int64_t k) const;

    /// `surf` followed by one line of seven integers per tetrahedron.
    std::string serialize() const;

    friend bool operator==(const NormalCoordinates&, const NormalCoordinates&) = default;

private:
    std::vector<std::int64_t> values_;
};

/// Parses the surface file format. Throws SyntaxError or LengthMismatch.
NormalCoordinates parse_surface(std::string_view text, int tet_count);

struct MatchingViolation {
    int tet, face, vertex;  // arc type on this side of the gluing
    std::int64_t here, there;
};

struct ValidationReport {
    std::vector<MatchingViolation> matching;
    std::vector<int> quad_violations;  // tetrahedra with two or more quad types
    bool valid() const { return matching.empty() && quad_violations.empty(); }
};

/// Checks matching equations and the quad condition. Throws LengthMismatch or EmptySurface.
ValidationReport validate_coordinates(const Triangulation& tri, const NormalCoordinates& q);

/// Euler characteristic from the untruncated cell structure:
/// edge intersections - normal arcs + normal disks. Throws InvalidCoordinates.
std::int64_t euler_from_coordinates(const Triangulation& tri, const NormalCoordinates& q);

/// Coordinate-wise sum. Throws LengthMismatch or QuadIncompatible.
NormalCoordinates haken_sum(const NormalCoordinates& a, const NormalCoordinates& b);

}  // namespace cylcert
