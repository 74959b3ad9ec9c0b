#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cylcert/coloring.hpp"
#include "cylcert/face_complex.hpp"
#include "cylcert/surface_ops.hpp"

namespace cylcert {

struct StageRecord {
    std::string name;
    std::int64_t euler;
    int boundary;
};

struct PipelineOptions {
    bool force = false;  // run below the genus threshold
};

struct PipelineTrace {
    std::optional<Subsurface> f0, f1, f2, f3, f4;
    std::vector<GPath> gamma1;
    std::vector<Subsurface> delta1;
    std::vector<GPath> epsilon;
    std::vector<StageRecord> stages;
    bool threshold_met = false;
    std::vector<std::string> unused_guarantees;

    // Classification.
    std::optional<Color> essential_color;
    std::vector<GPath> gamma2;
    std::optional<Subsurface> off_color_disk;  // disjoint disks in int(F4)
    std::optional<Subsurface> working;         // F4 minus the off-colour disks

    // Pants.
    std::optional<Subsurface> x;
    std::vector<int> x_graph;  // G-edges whose ribbon neighbourhood is X
};

/// Arc components of the yellow/blue interface, each running from its lower endpoint.
std::vector<GPath> gamma1(const FaceComplex& fc, const Coloring& c);
/// Closed components of the yellow/blue interface.
std::vector<GPath> interface_cycles(const FaceComplex& fc, const Coloring& c);

/// F0 .. F4. Throws NoQualifyingComponent, PipelinePreconditionFailed.
PipelineTrace run_chain(const FaceComplex& fc, const Coloring& c, PipelineOptions opts = {});
/// Throws ClassificationFailed.
void classify_essential_color(const FaceComplex& fc, const Coloring& c, PipelineTrace& trace);
/// Throws PantsNotFound.
void find_pants(const FaceComplex& fc, const Coloring& c, PipelineTrace& trace);

/// Ribbon neighbourhood of a set of G-edges: their bands plus every endpoint.
Subsurface ribbon(const ThickComplex& cx, const std::vector<int>& edges);

/// run_chain, classify_essential_color and find_pants in sequence.
PipelineTrace construct_pants(const FaceComplex& fc, const Coloring& c, PipelineOptions opts = {});

}  // namespace cylcert
