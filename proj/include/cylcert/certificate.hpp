#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cylcert/coloring.hpp"
#include "cylcert/face_complex.hpp"
#include "cylcert/pants_pipeline.hpp"
#include "cylcert/surface_ops.hpp"

namespace cylcert {

/// Opp on the cells of X: each cell goes to the matching cell of the family
/// neighbour of its adjacent faces on the positive side.
struct OppAssignment {
    std::map<int, int> faces;               // face adjacent to X -> opposite face
    std::vector<std::array<int, 2>> cells;  // (X cell, image cell), by X cell
    std::vector<int> image;                 // image cells, sorted
};

/// Throws OppUndefined, OppCollision, LadderBroken.
OppAssignment opp_assignment(const FaceComplex& fc, const Subsurface& x);

/// Image of a side on the boundary of X. Throws LadderBroken.
int opp_side(const FaceComplex& fc, const OppAssignment& opp, int side);

struct AnnulusRecord {
    Curve alpha;
    Curve opp_alpha;
    std::vector<std::array<int, 2>> ladder;  // (side of alpha, its image)
    bool surface_parallel = false;
};

/// One record per boundary curve of X, in curve order. Throws LadderBroken.
std::vector<AnnulusRecord> build_annuli(const FaceComplex& fc, const Subsurface& x, const OppAssignment& opp);

/// True when cutting `surface` along a and b leaves an annulus disjoint from X
/// whose two boundary curves are copies of a and b.
bool cobound_annulus(const Subsurface& surface, const Curve& a, const Curve& b, const Subsurface& x);

/// Sets the surface_parallel flags and returns the least unflagged index. Throws AllParallel.
int select_essential_annulus(const Subsurface& surface, std::vector<AnnulusRecord>& records, const Subsurface& x);

struct Certificate {
    std::string triangulation_sha256;
    std::string surface_sha256;
    std::string coloring_sha256;
    std::vector<std::int64_t> coords;
    int t = 0;
    std::int64_t genus = 0;
    bool threshold_met = false;
    Color essential_color = Color::Yellow;
    std::vector<int> x_graph;
    std::vector<int> x_cells;
    OppAssignment opp;
    std::vector<AnnulusRecord> annuli;
    int selected = -1;
};

std::string sha256_hex(std::string_view data);

/// Runs the pipeline and assembles the certificate.
Certificate certify(const Triangulation& tri, const NormalCoordinates& q, PipelineOptions opts = {});
/// As above on a face complex of q owned by the caller; `trace` receives the
/// pipeline trace, whose subsurfaces live on fc.
Certificate certify(const Triangulation& tri, const NormalCoordinates& q, const FaceComplex& fc,
                    PipelineOptions opts, PipelineTrace* trace = nullptr);

/// (alpha, Opp(alpha)) of the selected annulus. Throws NoCertificate.
std::pair<Curve, Curve> monodromy_witness(const Certificate& cert);

nlohmann::json certificate_json(const Certificate& cert);
/// Sorted keys, no whitespace, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> diagnostics;
};

/// Recomputes the face complex and colouring from (tri, q) and checks every field.
VerifyResult verify_certificate(const nlohmann::json& cert, const Triangulation& tri, const NormalCoordinates& q);

}  // namespace cylcert
