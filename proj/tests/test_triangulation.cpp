#include "doctest.h"
#include "fixtures.hpp"

#include "cylcert/error.hpp"
#include "cylcert/normal_surface.hpp"
#include "cylcert/triangulation.hpp"

using namespace cylcert;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::SyntaxError;
}

NormalCoordinates link_coords(int tets) {
    std::vector<std::int64_t> v;
    for (int t = 0; t < tets; ++t) v.insert(v.end(), {1, 1, 1, 1, 0, 0, 0});
    return NormalCoordinates(v);
}

}  // namespace

TEST_CASE("edge classes of catalog triangulations") {
    const auto s3 = parse_triangulation(fixtures::sphere_1tet);
    REQUIRE(s3.edge_classes().size() == 2);
    CHECK(s3.edge_classes()[0].degree() + s3.edge_classes()[1].degree() == 6);
    CHECK(s3.orientable());
    CHECK(s3.vertex_class_count() == 1);
    CHECK(s3.vertex_link_euler(0) == 2);
    CHECK(s3.vertex_kind(0) == VertexKind::Material);

    const auto fig8 = parse_triangulation(fixtures::figure_eight);
    REQUIRE(fig8.edge_classes().size() == 2);
    CHECK(fig8.edge_classes()[0].degree() == 6);
    CHECK(fig8.edge_classes()[1].degree() == 6);
    CHECK(fig8.vertex_link_euler(0) == 0);
    CHECK(fig8.vertex_kind(0) == VertexKind::Ideal);

    const auto lone = parse_triangulation(fixtures::single_bdry_tet);
    CHECK(lone.edge_classes().size() == 6);
    for (const auto& c : lone.edge_classes()) {
        CHECK(c.degree() == 1);
        CHECK(c.boundary);
    }
    CHECK(lone.has_boundary_faces());
}

TEST_CASE("edge walk is consistent with gluings") {
    const auto fig8 = parse_triangulation(fixtures::figure_eight);
    for (const auto& cls : fig8.edge_classes()) {
        const int n = cls.degree();
        for (int i = 0; i < n; ++i) {
            const auto& x = cls.cycle[i];
            const auto& y = cls.cycle[(i + 1) % n];
            const auto& g = fig8.gluing(x.tet, x.d);
            REQUIRE(g.has_value());
            CHECK(g->tet == y.tet);
            CHECK(g->face == y.c);
            CHECK(g->perm[x.a] == y.a);
            CHECK(g->perm[x.b] == y.b);
        }
    }
}

TEST_CASE("parse errors") {
    CHECK(code_of([] { parse_triangulation("tri 1\ntets 1\nglue 0 0 2 1 0123\n"); }) == ErrorCode::CountMismatch);
    CHECK(code_of([] { parse_triangulation("tri 1\ntets x\n"); }) == ErrorCode::SyntaxError);
    CHECK(code_of([] { parse_triangulation("tri 1\ntets 2\nglue 0 0 1 2 2130\nglue 1 2 0 1 1203\n"
                                           "bdry 0 1\nbdry 0 2\nbdry 0 3\nbdry 1 0\nbdry 1 1\nbdry 1 3\n"); }) ==
          ErrorCode::GluingError);
    CHECK(code_of([] { parse_triangulation("tri 1\ntets 1\nglue 0 0 0 1 0123\nglue 0 1 0 0 0123\n"
                                           "bdry 0 2\nbdry 0 3\n"); }) == ErrorCode::GluingError);
    CHECK(code_of([] { parse_triangulation("tri 1\ntets 1\nbdry 0 0\n"); }) == ErrorCode::GluingError);
}

TEST_CASE("serialization round-trips") {
    for (const auto& text : {fixtures::sphere_1tet, fixtures::figure_eight, fixtures::single_bdry_tet}) {
        const auto t = parse_triangulation(text);
        const auto again = parse_triangulation(t.serialize());
        CHECK(t == again);
        CHECK(again.serialize() == t.serialize());
    }
}

TEST_CASE("euler characteristic from coordinates") {
    const auto fig8 = parse_triangulation(fixtures::figure_eight);
    const auto link = link_coords(2);
    CHECK(validate_coordinates(fig8, link).valid());
    CHECK(euler_from_coordinates(fig8, link) == 0);

    const auto s3 = parse_triangulation(fixtures::sphere_1tet);
    CHECK(euler_from_coordinates(s3, link_coords(1)) == 2);
    CHECK(euler_from_coordinates(s3, link_coords(1).scaled(2)) == 4);

    const auto sum = haken_sum(link, link);
    CHECK(sum.values() == std::vector<std::int64_t>{2, 2, 2, 2, 0, 0, 0, 2, 2, 2, 2, 0, 0, 0});
    CHECK(euler_from_coordinates(fig8, sum) == 0);
}

TEST_CASE("coordinate validation errors") {
    const auto fig8 = parse_triangulation(fixtures::figure_eight);
    CHECK(code_of([&] { validate_coordinates(fig8, NormalCoordinates::zero(2)); }) == ErrorCode::EmptySurface);
    CHECK(code_of([&] { validate_coordinates(fig8, NormalCoordinates::zero(1)); }) == ErrorCode::LengthMismatch);

    auto two_quads = link_coords(2);
    two_quads.quad(0, 1) = 1;
    two_quads.quad(0, 2) = 1;
    const auto report = validate_coordinates(fig8, two_quads);
    REQUIRE(report.quad_violations.size() == 1);
    CHECK(report.quad_violations[0] == 0);

    auto unmatched = link_coords(2);
    unmatched.tri(0, 0) = 2;
    CHECK_FALSE(validate_coordinates(fig8, unmatched).matching.empty());
    CHECK(code_of([&] { euler_from_coordinates(fig8, unmatched); }) == ErrorCode::InvalidCoordinates);

    auto qa = NormalCoordinates::zero(1);
    auto qb = NormalCoordinates::zero(1);
    qa.quad(0, 1) = 1;
    qb.quad(0, 2) = 1;
    CHECK(code_of([&] { haken_sum(qa, qb); }) == ErrorCode::QuadIncompatible);
}

TEST_CASE("surface file format") {
    const auto q = parse_surface("surf\n1 1 1 1 0 0 0\n1 1 1 1 0 0 0\n", 2);
    CHECK(q == link_coords(2));
    CHECK(parse_surface(q.serialize(), 2) == q);
    CHECK(code_of([] { parse_surface("surf\n1 1 1\n", 1); }) == ErrorCode::LengthMismatch);
}
