#include <algorithm>

#include "doctest.h"
#include "surface_helpers.hpp"

#include "cylcert/coloring.hpp"
#include "cylcert/error.hpp"

using namespace cylcert;

namespace {

std::vector<FaceComplex> sample_complexes() {
    std::vector<FaceComplex> out;
    for (const auto& e : catalog()) {
        const auto tri = parse_triangulation(e.triangulation);
        for (const auto& s : e.surfaces) out.push_back(build_face_complex(tri, s.coords));
    }
    return out;
}

}  // namespace

TEST_CASE("outermost members are red and the rest alternate") {
    for (const auto& fc : sample_complexes()) {
        const Coloring c = color_faces(fc);
        REQUIRE(c.color.size() == static_cast<std::size_t>(fc.face_count()));
        for (const auto& f : fc.faces()) {
            if (f.kind == FaceKind::VertexDisk) continue;
            if (fc.outermost(f.id)) {
                CHECK(c.color[f.id] == Color::Red);
                continue;
            }
            CHECK(c.color[f.id] != Color::Red);
            const int next = fc.family_neighbor(f.id, 1);
            if (next >= 0 && !fc.outermost(next)) CHECK(c.color[next] != c.color[f.id]);
        }
        CHECK(coloring_valid(fc, c));
        CHECK(verify_red_vertex_disks(fc, c).pass);
    }
}

TEST_CASE("normalization leaves at most as many trichromatic vertices as bichromatic") {
    for (const auto& fc : sample_complexes()) {
        const Coloring c = normalize_swap(fc, color_faces(fc));
        CHECK(c.v_plus.size() <= c.v_minus.size());
        std::vector<int> both = c.v_plus;
        both.insert(both.end(), c.v_minus.begin(), c.v_minus.end());
        std::sort(both.begin(), both.end());
        CHECK(std::adjacent_find(both.begin(), both.end()) == both.end());
        CHECK(std::includes(c.v_all.begin(), c.v_all.end(), both.begin(), both.end()));
        CHECK(coloring_valid(fc, c));
        CHECK(normalize_swap(fc, c).letters() == c.letters());
    }
}

TEST_CASE("a recoloured truncated disk is rejected") {
    const auto& e = catalog_entry("sigma2xS1");
    const auto fc = build_face_complex(parse_triangulation(e.triangulation), e.surfaces[0].coords.scaled(3));
    Coloring c = color_faces(fc);
    int target = -1;
    for (const auto& f : fc.faces())
        if (f.kind != FaceKind::VertexDisk && !fc.outermost(f.id)) target = f.id;
    REQUIRE(target >= 0);
    c.color[target] = c.color[target] == Color::Yellow ? Color::Blue : Color::Yellow;
    std::string why;
    CHECK_FALSE(coloring_valid(fc, c, &why));
    CHECK_FALSE(why.empty());
}

TEST_CASE("bounds hold on the catalog") {
    for (const auto& e : catalog()) {
        const auto tri = parse_triangulation(e.triangulation);
        for (const auto& s : e.surfaces) {
            const auto fc = build_face_complex(tri, s.coords);
            const BoundsReport r = check_bounds(fc, normalize_swap(fc, color_faces(fc)), tri);
            CHECK(r.all_pass());
        }
    }
}

TEST_CASE("swapping on vertex disks exchanges V+ and V-") {
    int checked = 0;
    for (const auto& e : catalog()) {
        const auto tri = parse_triangulation(e.triangulation);
        for (const auto& s : e.surfaces) {
            const auto fc = build_face_complex(tri, s.coords.scaled(3));
            const Coloring c = normalize_swap(fc, color_faces(fc));
            Coloring swapped = c;
            for (const auto& f : fc.faces()) {
                if (f.kind != FaceKind::VertexDisk || c.color[f.id] == Color::Red) continue;
                swapped.color[f.id] = c.color[f.id] == Color::Yellow ? Color::Blue : Color::Yellow;
            }
            classify_vertices(fc, swapped);
            CHECK(swapped.v_plus == c.v_minus);
            CHECK(swapped.v_minus == c.v_plus);
            if (swapped.v_plus.size() > swapped.v_minus.size()) {
                CHECK_THROWS_AS(check_bounds(fc, swapped, tri), Error);
                ++checked;
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("cell colours follow their polygons") {
    const auto fc = helpers::build("sigma2xS1");
    const Coloring c = color_faces(fc);
    const auto& cx = fc.thick();
    for (int f = 0; f < fc.face_count(); ++f) CHECK(cell_color(fc, c, cx.face_cell(f)) == c.color[f]);
    for (int e = 0; e < fc.graph().edge_count(); ++e) {
        const auto& uses = fc.graph().edge_uses(e);
        const auto col = cell_color(fc, c, cx.edge_cell(e));
        if (c.color[uses[0].face] == c.color[uses[1].face]) {
            CHECK(col == c.color[uses[0].face]);
        } else {
            CHECK_FALSE(col.has_value());
        }
    }
    const auto yb = faces_of_color(c, {Color::Yellow, Color::Blue});
    const auto r = faces_of_color(c, {Color::Red});
    CHECK(yb.size() + r.size() == static_cast<std::size_t>(fc.face_count()));
}
