#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "cylcert/face_complex.hpp"
#include "cylcert/surface_ops.hpp"

namespace cylcert {

enum class Color { Red, Yellow, Blue };

char color_letter(Color c);

struct Coloring {
    std::vector<Color> color;  // per face
    std::vector<int> v_all;    // G-vertices on red truncated disks
    std::vector<int> v_plus;   // three colours meet
    std::vector<int> v_minus;  // red plus two faces of one other colour
    bool swapped = false;      // yellow and blue exchanged on vertex disks

    /// One letter per face, R/Y/B.
    std::string letters() const;
};

/// Outermost family members red, the rest alternating from yellow.
Coloring color_faces(const FaceComplex& fc);
/// Exchanges yellow and blue on vertex disks when |V+| > |V-|.
Coloring normalize_swap(const FaceComplex& fc, const Coloring& c);
/// Recomputes V, V+ and V- from the face colours.
void classify_vertices(const FaceComplex& fc, Coloring& c);
/// True iff the colours are the alternating pattern, possibly with the vertex-disk swap.
bool coloring_valid(const FaceComplex& fc, const Coloring& c, std::string* why = nullptr);

struct CheckResult {
    bool pass = true;
    std::vector<int> faces;  // offending faces
    std::vector<std::string> messages;
};

/// Every red vertex disk touches only red truncated disks.
CheckResult verify_red_vertex_disks(const FaceComplex& fc, const Coloring& c);

/// Colour of a thick cell: the common colour of its polygons, or nullopt when they differ.
std::optional<Color> cell_color(const FaceComplex& fc, const Coloring& c, int cell);
std::vector<int> faces_of_color(const Coloring& c, std::initializer_list<Color> colors);

struct BoundCheck {
    std::string name;
    std::int64_t observed;
    std::int64_t threshold;
    std::string relation;  // "<=", ">=" or "=="
    bool pass;
};

struct BoundsReport {
    std::vector<BoundCheck> checks;
    bool genus_checks = false;  // F0 and F1 bounds included (genus threshold met)
    bool all_pass() const;
};

/// Throws NotNormalized when |V+| > |V-|.
BoundsReport check_bounds(const FaceComplex& fc, const Coloring& c, const Triangulation& tri);

}  // namespace cylcert
