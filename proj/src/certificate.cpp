#include "cylcert/certificate.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <set>

#include "cylcert/error.hpp"

namespace cylcert {

namespace {

struct UseTable {
    std::vector<int> face, index;

    explicit UseTable(const PolygonComplex& g) : face(g.use_count()), index(g.use_count()) {
        for (int f = 0; f < g.face_count(); ++f) {
            for (int j = 0; j < static_cast<int>(g.face(f).size()); ++j) {
                face[g.use_index(f, j)] = f;
                index[g.use_index(f, j)] = j;
            }
        }
    }
};

[[noreturn]] void broken(const std::string& why) { throw Error(ErrorCode::LadderBroken, why); }

int opposite_face(const FaceComplex& fc, int f) {
    const int g = fc.family_neighbor(f, fc.coorientation(f));
    if (g < 0) throw Error(ErrorCode::OppUndefined, "face " + std::to_string(f) + " is outermost on its positive side");
    return g;
}

int mapped_face(const OppAssignment& opp, int f) {
    const auto it = opp.faces.find(f);
    if (it == opp.faces.end()) broken("face " + std::to_string(f) + " is not adjacent to X");
    return it->second;
}

int map_side(const FaceComplex& fc, const UseTable& uses, const OppAssignment& opp, int s) {
    const ThickComplex& cx = fc.thick();
    const PolygonComplex& g = cx.base();
    const int nu = g.use_count();
    if (s < nu) return cx.face_edge_side(mapped_face(opp, uses.face[s]), uses.index[s]);
    if (s < 2 * nu) return cx.face_corner_side(mapped_face(opp, uses.face[s - nu]), uses.index[s - nu]);
    const int e = (s - 2 * nu) / 2;
    const int k = (s - 2 * nu) % 2;
    int image = -1;
    for (const auto& use : g.edge_uses(e)) {
        if (!opp.faces.contains(use.face)) continue;
        const int j = use.side;
        const auto& here = g.face(use.face)[j];
        const auto& there = g.face(opp.faces.at(use.face))[j];
        const int side = cx.edge_end_side(there.edge, here.forward == there.forward ? k : 1 - k);
        if (image >= 0 && image != side) broken("edge " + std::to_string(e) + " maps inconsistently");
        image = side;
    }
    if (image < 0) broken("edge " + std::to_string(e) + " has no face adjacent to X");
    return image;
}

std::set<int> curve_points(const ThickComplex& cx, const Curve& c) {
    std::set<int> pts;
    for (int s : c.sides) {
        pts.insert(cx.side_points(s)[0]);
        pts.insert(cx.side_points(s)[1]);
    }
    return pts;
}

bool curves_disjoint(const ThickComplex& cx, const Curve& a, const Curve& b) {
    const std::set<int> pa = curve_points(cx, a);
    for (int p : curve_points(cx, b))
        if (pa.contains(p)) return false;
    return true;
}

}  // namespace

OppAssignment opp_assignment(const FaceComplex& fc, const Subsurface& x) {
    const ThickComplex& cx = fc.thick();
    const PolygonComplex& g = cx.base();
    OppAssignment opp;
    auto face_image = [&](int f) {
        auto it = opp.faces.find(f);
        if (it != opp.faces.end()) return it->second;
        const int img = opposite_face(fc, f);
        opp.faces.emplace(f, img);
        return img;
    };
    for (int cell : x.cells()) {
        const int owner = cx.cell_owner(cell);
        int image = -1;
        auto agree = [&](int candidate) {
            if (image >= 0 && image != candidate) broken("Opp is not cellular at cell " + std::to_string(cell));
            image = candidate;
        };
        switch (cx.cell_kind(cell)) {
            case CellKind::Face:
                agree(cx.face_cell(face_image(owner)));
                break;
            case CellKind::Edge:
                for (const auto& use : g.edge_uses(owner)) {
                    agree(cx.edge_cell(g.face(face_image(use.face))[use.side].edge));
                }
                break;
            case CellKind::Vertex:
                for (int f : g.vertex_faces(owner)) {
                    for (int j = 0; j < static_cast<int>(g.face(f).size()); ++j) {
                        if (g.corner_vertex(f, j) == owner) agree(cx.vertex_cell(g.corner_vertex(face_image(f), j)));
                    }
                }
                break;
        }
        opp.cells.push_back({cell, image});
    }
    for (const auto& [cell, image] : opp.cells) opp.image.push_back(image);
    std::sort(opp.image.begin(), opp.image.end());
    if (std::adjacent_find(opp.image.begin(), opp.image.end()) != opp.image.end()) {
        throw Error(ErrorCode::OppCollision, "Opp is not injective on X");
    }
    for (int cell : opp.image) {
        if (x.contains(cell)) throw Error(ErrorCode::OppCollision, "X meets Opp(X) at cell " + std::to_string(cell));
    }
    return opp;
}

int opp_side(const FaceComplex& fc, const OppAssignment& opp, int side) {
    return map_side(fc, UseTable(fc.graph()), opp, side);
}

std::vector<AnnulusRecord> build_annuli(const FaceComplex& fc, const Subsurface& x, const OppAssignment& opp) {
    const ThickComplex& cx = fc.thick();
    const UseTable uses(cx.base());
    const Evaluation ev = evaluate(x);
    if (ev.components.size() != 1 || ev.boundary_count != 3) broken("X does not have three boundary curves");
    std::vector<AnnulusRecord> records;
    for (const auto& cyc : ev.components.front().boundary) {
        AnnulusRecord rec;
        rec.alpha = make_curve(cx, cyc.sides);
        std::vector<int> image;
        for (int s : rec.alpha.sides) {
            image.push_back(map_side(fc, uses, opp, s));
            rec.ladder.push_back({s, image.back()});
        }
        if (const std::string why = curve_defect(cx, image); !why.empty()) broken("Opp(alpha): " + why);
        rec.opp_alpha = make_curve(cx, image);
        records.push_back(std::move(rec));
    }
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.alpha < b.alpha; });
    for (const auto& r : records) {
        for (const auto& other : records) {
            if (!curves_disjoint(cx, r.opp_alpha, other.alpha)) broken("Opp(alpha) meets a boundary curve of X");
        }
    }
    return records;
}

bool cobound_annulus(const Subsurface& surface, const Curve& a, const Curve& b, const Subsurface& x) {
    Subsurface cut = surface;
    try {
        cut = cut_open(surface, {a, b});
    } catch (const Error&) {
        return false;
    }
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    const std::vector<int> sa = sorted(a.sides);
    const std::vector<int> sb = sorted(b.sides);
    for (const auto& comp : evaluate(cut).components) {
        if (comp.euler != 0 || comp.boundary.size() != 2) continue;
        const std::vector<int> s0 = sorted(comp.boundary[0].sides);
        const std::vector<int> s1 = sorted(comp.boundary[1].sides);
        if (!((s0 == sa && s1 == sb) || (s0 == sb && s1 == sa))) continue;
        bool meets = false;
        for (int cell : comp.cells) meets = meets || x.contains(cell);
        if (!meets) return true;
    }
    return false;
}

int select_essential_annulus(const Subsurface& surface, std::vector<AnnulusRecord>& records, const Subsurface& x) {
    int selected = -1;
    for (std::size_t i = 0; i < records.size(); ++i) {
        records[i].surface_parallel = cobound_annulus(surface, records[i].alpha, records[i].opp_alpha, x);
        if (!records[i].surface_parallel && selected < 0) selected = static_cast<int>(i);
    }
    if (selected < 0) throw Error(ErrorCode::AllParallel, "every boundary curve of X cobounds an annulus with its image");
    return selected;
}

std::string sha256_hex(std::string_view data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 15]);
    }
    return out;
}

Certificate certify(const Triangulation& tri, const NormalCoordinates& q, PipelineOptions opts) {
    return certify(tri, q, build_face_complex(tri, q), opts);
}

Certificate certify(const Triangulation& tri, const NormalCoordinates& q, const FaceComplex& fc, PipelineOptions opts,
                    PipelineTrace* trace_out) {
    const Coloring c = normalize_swap(fc, color_faces(fc));
    PipelineTrace trace = construct_pants(fc, c, opts);
    const ThickComplex& cx = fc.thick();
    const Subsurface whole = Subsurface::whole(cx);

    Certificate cert;
    cert.triangulation_sha256 = sha256_hex(tri.serialize());
    cert.surface_sha256 = sha256_hex(q.serialize());
    cert.coloring_sha256 = sha256_hex(c.letters());
    cert.coords = q.values();
    cert.t = tri.tet_count();
    cert.genus = *fc.stats().genus;
    cert.threshold_met = trace.threshold_met;
    cert.essential_color = *trace.essential_color;
    cert.x_graph = trace.x_graph;
    cert.x_cells = trace.x->cells();
    cert.opp = opp_assignment(fc, *trace.x);
    cert.annuli = build_annuli(fc, *trace.x, cert.opp);
    cert.selected = select_essential_annulus(whole, cert.annuli, *trace.x);
    const AnnulusRecord& sel = cert.annuli[cert.selected];
    if (!is_essential(sel.alpha, whole) || !is_essential(sel.opp_alpha, whole)) {
        throw Error(ErrorCode::PipelinePreconditionFailed, "selected curve is inessential in F");
    }
    if (trace_out) *trace_out = std::move(trace);
    return cert;
}

std::pair<Curve, Curve> monodromy_witness(const Certificate& cert) {
    if (cert.selected < 0 || cert.selected >= static_cast<int>(cert.annuli.size())) {
        throw Error(ErrorCode::NoCertificate, "no annulus selected");
    }
    const AnnulusRecord& r = cert.annuli[cert.selected];
    std::set<int> sides(r.alpha.sides.begin(), r.alpha.sides.end());
    for (int s : r.opp_alpha.sides) {
        if (sides.contains(s)) throw Error(ErrorCode::NoCertificate, "witness curves intersect");
    }
    return {r.alpha, r.opp_alpha};
}

}  // namespace cylcert
