#include "doctest.h"
#include "surface_helpers.hpp"

#include "cylcert/coloring.hpp"
#include "cylcert/error.hpp"
#include "cylcert/pants_pipeline.hpp"

using namespace cylcert;

namespace {

const Triangulation& product() {
    static const Triangulation tri = parse_triangulation(catalog_entry("sigma2xS1").triangulation);
    return tri;
}

const std::vector<helpers::Instance>& instances() {
    static const auto out = helpers::completing_instances(product(), 4);
    return out;
}

}  // namespace

TEST_CASE("below the threshold the chain refuses without force") {
    const auto fc = helpers::build("sigma2xS1");
    const Coloring c = normalize_swap(fc, color_faces(fc));
    try {
        run_chain(fc, c);
        FAIL("run_chain accepted a surface below the threshold");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PipelinePreconditionFailed);
    }
}

TEST_CASE("forced runs record the unused guarantees") {
    REQUIRE(!instances().empty());
    const auto fc = build_face_complex(product(), instances().front().coords);
    const Coloring c = normalize_swap(fc, color_faces(fc));
    const PipelineTrace tr = run_chain(fc, c, {true});
    CHECK_FALSE(tr.threshold_met);
    CHECK(tr.unused_guarantees.size() == 4);
}

TEST_CASE("interface arcs pair up the trichromatic vertices") {
    for (const auto& inst : instances()) {
        const auto fc = build_face_complex(product(), inst.coords);
        const Coloring c = normalize_swap(fc, color_faces(fc));
        const auto arcs = gamma1(fc, c);
        CHECK(2 * arcs.size() == c.v_plus.size());
        for (const auto& a : arcs) CHECK_FALSE(a.closed);
        for (const auto& cyc : interface_cycles(fc, c)) CHECK(cyc.closed);
    }
}

TEST_CASE("stage invariants on completing instances") {
    REQUIRE(instances().size() == 4);
    for (const auto& inst : instances()) {
        CAPTURE(inst.seed);
        const auto fc = build_face_complex(product(), inst.coords);
        const auto& cx = fc.thick();
        const Subsurface whole = Subsurface::whole(cx);
        const Coloring c = normalize_swap(fc, color_faces(fc));
        const PipelineTrace tr = construct_pants(fc, c, {true});
        REQUIRE(tr.stages.size() == 5);

        const auto [e0, b0] = euler_and_boundary(*tr.f0);
        const auto [e1, b1] = euler_and_boundary(*tr.f1);
        CHECK(e1 == e0 + static_cast<std::int64_t>(tr.gamma1.size()));
        CHECK(b1 <= b0 + static_cast<int>(tr.gamma1.size()));
        CHECK(tr.f0->contains_all(*tr.f1));
        CHECK(tr.f1->contains_all(*tr.f2));

        const auto [e3, b3] = euler_and_boundary(*tr.f3);
        CHECK(e3 <= -b3);
        CHECK(e3 < 0);
        CHECK(boundary_essential(*tr.f3, whole));

        const auto [e4, b4] = euler_and_boundary(*tr.f4);
        CHECK(e4 < 0);
        CHECK(boundary_essential(*tr.f4, whole));
        CHECK(tr.f3->contains_all(*tr.f4));

        REQUIRE(tr.essential_color.has_value());
        REQUIRE(tr.x.has_value());
        CHECK(euler_and_boundary(*tr.x) == std::pair<std::int64_t, int>{-1, 3});
        CHECK(tr.working->contains_all(*tr.x));
        CHECK(boundary_essential(*tr.x, *tr.f4));
        for (int cell : tr.x->cells()) CHECK(cell_color(fc, c, cell) == tr.essential_color);
        CHECK(ribbon(cx, tr.x_graph) == *tr.x);
    }
}
