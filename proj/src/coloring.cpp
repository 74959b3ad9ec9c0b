#include "cylcert/coloring.hpp"

#include <algorithm>
#include <string>

#include "cylcert/error.hpp"
#include "cylcert/pants_pipeline.hpp"

namespace cylcert {

char color_letter(Color c) {
    switch (c) {
        case Color::Red: return 'R';
        case Color::Yellow: return 'Y';
        case Color::Blue: return 'B';
    }
    return '?';
}

std::string Coloring::letters() const {
    std::string out;
    out.reserve(color.size());
    for (Color c : color) out.push_back(color_letter(c));
    return out;
}

namespace {

Color expected_color(const ParallelFamily& fam, int index, bool swapped) {
    if (index == 0 || index == fam.size() - 1) return Color::Red;
    bool yellow = index % 2 == 1;
    if (swapped && fam.kind == FamilyKind::VertexDiskFamily) yellow = !yellow;
    return yellow ? Color::Yellow : Color::Blue;
}

Color flip(Color c) {
    if (c == Color::Yellow) return Color::Blue;
    if (c == Color::Blue) return Color::Yellow;
    return c;
}

}  // namespace

void classify_vertices(const FaceComplex& fc, Coloring& c) {
    c.v_all.clear();
    c.v_plus.clear();
    c.v_minus.clear();
    const auto& g = fc.graph();
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& fs = g.vertex_faces(v);
        bool red_disk = false;
        int red = 0;
        for (int f : fs) {
            if (c.color[f] != Color::Red) continue;
            ++red;
            if (fc.face(f).kind != FaceKind::VertexDisk) red_disk = true;
        }
        if (!red_disk) continue;
        c.v_all.push_back(v);
        std::vector<Color> others;
        for (int f : fs) {
            if (c.color[f] != Color::Red) others.push_back(c.color[f]);
        }
        if (red == 1 && others.size() == 2) {
            (others[0] == others[1] ? c.v_minus : c.v_plus).push_back(v);
        }
    }
}

Coloring color_faces(const FaceComplex& fc) {
    Coloring c;
    c.color.assign(fc.face_count(), Color::Red);
    for (const auto& fam : fc.families()) {
        for (int i = 0; i < fam.size(); ++i) c.color[fam.members[i]] = expected_color(fam, i, false);
    }
    classify_vertices(fc, c);
    return c;
}

Coloring normalize_swap(const FaceComplex& fc, const Coloring& c) {
    if (c.v_plus.size() <= c.v_minus.size()) return c;
    Coloring out = c;
    for (const auto& f : fc.faces()) {
        if (f.kind == FaceKind::VertexDisk) out.color[f.id] = flip(out.color[f.id]);
    }
    out.swapped = !c.swapped;
    classify_vertices(fc, out);
    return out;
}

bool coloring_valid(const FaceComplex& fc, const Coloring& c, std::string* why) {
    if (static_cast<int>(c.color.size()) != fc.face_count()) {
        if (why) *why = "colour count differs from face count";
        return false;
    }
    for (const auto& fam : fc.families()) {
        for (int i = 0; i < fam.size(); ++i) {
            const int f = fam.members[i];
            if (c.color[f] != expected_color(fam, i, c.swapped)) {
                if (why) *why = "face " + std::to_string(f) + " breaks the alternation";
                return false;
            }
        }
    }
    return true;
}

CheckResult verify_red_vertex_disks(const FaceComplex& fc, const Coloring& c) {
    CheckResult out;
    const auto& g = fc.graph();
    for (const auto& f : fc.faces()) {
        if (f.kind != FaceKind::VertexDisk || c.color[f.id] != Color::Red) continue;
        for (int e : f.boundary) {
            const auto& uses = g.edge_uses(e);
            const int other = uses[0].face == f.id ? uses[1].face : uses[0].face;
            if (c.color[other] != Color::Red || fc.face(other).kind == FaceKind::VertexDisk) {
                out.pass = false;
                out.faces.push_back(f.id);
                out.messages.push_back("red vertex disk " + std::to_string(f.id) + " touches face " +
                                       std::to_string(other) + " coloured " + color_letter(c.color[other]));
                break;
            }
        }
    }
    return out;
}

std::optional<Color> cell_color(const FaceComplex& fc, const Coloring& c, int cell) {
    const ThickComplex& cx = fc.thick();
    const PolygonComplex& g = cx.base();
    const int owner = cx.cell_owner(cell);
    switch (cx.cell_kind(cell)) {
        case CellKind::Face: return c.color[owner];
        case CellKind::Edge: {
            const auto& uses = g.edge_uses(owner);
            if (c.color[uses[0].face] != c.color[uses[1].face]) return std::nullopt;
            return c.color[uses[0].face];
        }
        case CellKind::Vertex: {
            const auto& fs = g.vertex_faces(owner);
            for (int f : fs) {
                if (c.color[f] != c.color[fs.front()]) return std::nullopt;
            }
            return c.color[fs.front()];
        }
    }
    return std::nullopt;
}

std::vector<int> faces_of_color(const Coloring& c, std::initializer_list<Color> colors) {
    std::vector<int> out;
    for (int f = 0; f < static_cast<int>(c.color.size()); ++f) {
        if (std::find(colors.begin(), colors.end(), c.color[f]) != colors.end()) out.push_back(f);
    }
    return out;
}

bool BoundsReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& b) { return b.pass; });
}

BoundsReport check_bounds(const FaceComplex& fc, const Coloring& c, const Triangulation& tri) {
    if (c.v_plus.size() > c.v_minus.size()) {
        throw Error(ErrorCode::NotNormalized, "|V+| = " + std::to_string(c.v_plus.size()) + " exceeds |V-| = " +
                                                  std::to_string(c.v_minus.size()));
    }
    const std::int64_t t = tri.tet_count();
    BoundsReport rep;
    auto add = [&](std::string name, std::int64_t observed, std::int64_t threshold, std::string rel) {
        const bool pass = rel == "<=" ? observed <= threshold : rel == ">=" ? observed >= threshold : observed == threshold;
        rep.checks.push_back({std::move(name), observed, threshold, std::move(rel), pass});
    };

    std::int64_t red_tri = 0;
    std::int64_t red_quad = 0;
    for (const auto& f : fc.faces()) {
        if (c.color[f.id] != Color::Red) continue;
        red_tri += f.kind == FaceKind::TruncatedTriangle;
        red_quad += f.kind == FaceKind::TruncatedQuad;
    }
    add("red_truncated_triangles", red_tri, 8 * t, "<=");
    add("red_truncated_quads", red_quad, 2 * t, "<=");

    const ThickComplex& cx = fc.thick();
    const auto [chi_r, bd_r] = euler_and_boundary(Subsurface::from_faces(cx, faces_of_color(c, {Color::Red})));
    add("euler_R", chi_r, -(22 * t - 1), ">=");
    add("boundary_R", bd_r, 22 * t - 1, "<=");
    add("vertex_set_V", static_cast<std::int64_t>(c.v_all.size()), 6 * 8 * t + 8 * 2 * t, "<=");

    const auto arcs = gamma1(fc, c);
    const auto n_arcs = static_cast<std::int64_t>(arcs.size());
    add("gamma1_twice_equals_V_plus", 2 * n_arcs, static_cast<std::int64_t>(c.v_plus.size()), "==");
    add("gamma1", n_arcs, 16 * t, "<=");

    const auto& st = fc.stats();
    if (st.components == 1 && genus_threshold_met(*st.genus, static_cast<int>(t))) {
        rep.genus_checks = true;
        const Subsurface f0 = Subsurface::from_faces(cx, faces_of_color(c, {Color::Yellow, Color::Blue}));
        const auto [chi0, bd0] = euler_and_boundary(f0);
        add("euler_F0", chi0, -(54 * t - 1), "<=");
        add("boundary_F0", bd0, 22 * t - 1, "<=");
        const auto [chi1, bd1] = euler_and_boundary(cut_along_arcs(f0, arcs));
        add("euler_F1", chi1, -(38 * t - 1), "<=");
        add("boundary_F1", bd1, 38 * t - 1, "<=");
    }
    return rep;
}

}  // namespace cylcert
