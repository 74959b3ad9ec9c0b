#include "doctest.h"
#include "fixtures.hpp"

#include "cylcert/error.hpp"
#include "cylcert/face_complex.hpp"

using namespace cylcert;

namespace {

NormalCoordinates link_coords(int tets, std::int64_t k = 1) {
    std::vector<std::int64_t> v;
    for (int t = 0; t < tets; ++t) v.insert(v.end(), {k, k, k, k, 0, 0, 0});
    return NormalCoordinates(v);
}

int count_kind(const FaceComplex& fc, FaceKind kind) {
    int n = 0;
    for (const auto& f : fc.faces()) n += f.kind == kind;
    return n;
}

}  // namespace

TEST_CASE("figure-eight vertex link") {
    const auto tri = parse_triangulation(fixtures::figure_eight);
    const auto fc = build_face_complex(tri, link_coords(2));
    CHECK(count_kind(fc, FaceKind::TruncatedTriangle) == 8);
    CHECK(count_kind(fc, FaceKind::VertexDisk) == 4);
    const auto st = surface_stats(fc);
    CHECK(st.euler == 0);
    CHECK(st.components == 1);
    CHECK(st.orientable);
    REQUIRE(st.genus.has_value());
    CHECK(*st.genus == 1);
    for (const auto& f : fc.faces()) {
        if (f.kind == FaceKind::TruncatedTriangle) CHECK(f.boundary.size() == 6);
        if (f.kind == FaceKind::VertexDisk) CHECK(f.boundary.size() == 6);
    }
}

TEST_CASE("graph is trivalent with one vertex disk per vertex") {
    const auto tri = parse_triangulation(fixtures::figure_eight);
    const auto fc = build_face_complex(tri, link_coords(2, 3));
    const auto& g = fc.graph();
    CHECK(2 * g.edge_count() == 3 * g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& fs = g.vertex_faces(v);
        CHECK(fs.size() == 3);
        int vd = 0;
        for (int f : fs) vd += fc.face(f).kind == FaceKind::VertexDisk;
        CHECK(vd == 1);
    }
    CHECK(surface_stats(fc).components == 3);
    CHECK(surface_stats(fc).per_component_only);
    CHECK_FALSE(surface_stats(fc).genus.has_value());
}

TEST_CASE("sphere vertex link") {
    const auto tri = parse_triangulation(fixtures::sphere_1tet);
    const auto fc = build_face_complex(tri, link_coords(1));
    CHECK(count_kind(fc, FaceKind::TruncatedTriangle) == 4);
    CHECK(surface_stats(fc).euler == 2);
    CHECK(*surface_stats(fc).genus == 0);
}

TEST_CASE("coorientation is consistent and families match coordinates") {
    const auto tri = parse_triangulation(fixtures::figure_eight);
    const auto q = link_coords(2, 2);
    const auto fc = build_face_complex(tri, q);
    for (const auto& fam : fc.families()) {
        if (fam.kind == FamilyKind::TriangleFamily) CHECK(fam.size() == q.tri(fam.tet, fam.vertex));
    }
    for (const auto& f : fc.faces()) CHECK((fc.coorientation(f.id) == 1 || fc.coorientation(f.id) == -1));
}

TEST_CASE("genus threshold") {
    CHECK(genus_threshold_met(76, 2));
    CHECK_FALSE(genus_threshold_met(75, 2));
    CHECK(genus_threshold_met(38, 1));
    const auto tri = parse_triangulation(fixtures::figure_eight);
    const auto fc = build_face_complex(tri, link_coords(2, 2));
    CHECK_THROWS_AS(genus_threshold_met(fc, tri), Error);
}
