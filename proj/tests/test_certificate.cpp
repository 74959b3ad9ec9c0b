#include "doctest.h"
#include "genus2_mock.hpp"
#include "mutations.hpp"
#include "surface_helpers.hpp"

#include "cylcert/certificate.hpp"
#include "cylcert/error.hpp"

using namespace cylcert;

namespace {

const Triangulation& product() {
    static const Triangulation tri = parse_triangulation(catalog_entry("sigma2xS1").triangulation);
    return tri;
}

const std::vector<helpers::Instance>& instances() {
    static const auto out = helpers::completing_instances(product(), 3);
    return out;
}

}  // namespace

TEST_CASE("sha256 of a known message") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("genus-two mock: every boundary curve is parallel to its partner") {
    const ThickComplex cx(mock::genus_two());
    const Subsurface whole = Subsurface::whole(cx);
    REQUIRE(euler_and_boundary(whole) == std::pair<std::int64_t, int>{-2, 0});
    const Subsurface x = Subsurface::from_faces(cx, {0, 1});
    const Subsurface y = Subsurface::from_faces(cx, {2, 3});
    REQUIRE(euler_and_boundary(x) == std::pair<std::int64_t, int>{-1, 3});
    REQUIRE(euler_and_boundary(y) == std::pair<std::int64_t, int>{-1, 3});
    CHECK(x.disjoint_from(y));

    auto parallel = mock::records(cx, x, y, {0, 1, 2});
    try {
        select_essential_annulus(whole, parallel, x);
        FAIL("an annulus was selected");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AllParallel);
    }
    for (const auto& r : parallel) CHECK(r.surface_parallel);

    auto crossed = mock::records(cx, x, y, {1, 2, 0});
    CHECK(select_essential_annulus(whole, crossed, x) == 0);
    for (const auto& r : crossed) CHECK_FALSE(r.surface_parallel);
}

TEST_CASE("a curve is never parallel to itself through X") {
    const ThickComplex cx(mock::genus_two());
    const Subsurface whole = Subsurface::whole(cx);
    const Subsurface x = Subsurface::from_faces(cx, {0, 1});
    const Subsurface y = Subsurface::from_faces(cx, {2, 3});
    const auto recs = mock::records(cx, x, y, {0, 1, 2});
    CHECK_FALSE(cobound_annulus(whole, recs[0].alpha, recs[1].alpha, x));
    CHECK(cobound_annulus(whole, recs[0].alpha, recs[0].opp_alpha, Subsurface(cx)));
}

TEST_CASE("certificates verify and are deterministic") {
    REQUIRE(instances().size() == 3);
    for (const auto& inst : instances()) {
        CAPTURE(inst.seed);
        const Certificate a = certify(product(), inst.coords, {true});
        const Certificate b = certify(product(), inst.coords, {true});
        const std::string da = canonical_dump(certificate_json(a));
        CHECK(da == canonical_dump(certificate_json(b)));
        const VerifyResult vr = verify_certificate(certificate_json(a), product(), inst.coords);
        CHECK(vr.ok);
        for (const auto& d : vr.diagnostics) MESSAGE(d);

        const auto [alpha, image] = monodromy_witness(a);
        CHECK(alpha.sides == a.annuli[a.selected].alpha.sides);
        CHECK(image.sides == a.annuli[a.selected].opp_alpha.sides);
        CHECK_FALSE(a.annuli[a.selected].surface_parallel);
    }
}

TEST_CASE("Opp on X is injective, cellular and moves X off itself") {
    for (const auto& inst : instances()) {
        const auto fc = build_face_complex(product(), inst.coords);
        const Certificate cert = certify(product(), inst.coords, {true});
        const Subsurface x = Subsurface::from_cells(fc.thick(), cert.x_cells);
        const OppAssignment opp = opp_assignment(fc, x);
        CHECK(opp.cells.size() == cert.x_cells.size());
        const Subsurface image = Subsurface::from_cells(fc.thick(), opp.image);
        CHECK(image.cell_count() == x.cell_count());
        CHECK(image.disjoint_from(x));
        for (const auto& [cell, img] : opp.cells) CHECK(fc.thick().cell_kind(cell) == fc.thick().cell_kind(img));
    }
}

TEST_CASE("single-field mutations are rejected") {
    REQUIRE(!instances().empty());
    const auto& inst = instances().front();
    const auto doc = certificate_json(certify(product(), inst.coords, {true}));
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const auto m = mutations::mutate(doc, seed);
        CAPTURE(m.description);
        CHECK_FALSE(verify_certificate(m.doc, product(), inst.coords).ok);
    }
}

TEST_CASE("verification against the wrong surface fails") {
    REQUIRE(instances().size() >= 2);
    const auto doc = certificate_json(certify(product(), instances()[0].coords, {true}));
    const VerifyResult vr = verify_certificate(doc, product(), instances()[1].coords);
    CHECK_FALSE(vr.ok);
    REQUIRE_FALSE(vr.diagnostics.empty());
}
