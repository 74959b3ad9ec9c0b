#include <algorithm>
#include <set>

#include "certificate_constants.hpp"
#include "cylcert/certificate.hpp"
#include "cylcert/error.hpp"

namespace cylcert {

namespace {

using nlohmann::json;

struct Malformed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Malformed(std::string("missing field ") + key);
    return j.at(key);
}

std::int64_t as_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw Malformed(what + " is not an integer");
    return j.get<std::int64_t>();
}

std::vector<int> as_ints(const json& j, const std::string& what, int limit) {
    if (!j.is_array()) throw Malformed(what + " is not an array");
    std::vector<int> out;
    for (const auto& x : j) {
        const std::int64_t v = as_int(x, what);
        if (v < 0 || v >= limit) throw Malformed(what + " entry out of range");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::vector<std::array<int, 2>> as_pairs(const json& j, const std::string& what, int limit) {
    if (!j.is_array()) throw Malformed(what + " is not an array");
    std::vector<std::array<int, 2>> out;
    for (const auto& p : j) {
        const auto v = as_ints(p, what, limit);
        if (v.size() != 2) throw Malformed(what + " entry is not a pair");
        out.push_back({v[0], v[1]});
    }
    return out;
}

std::string as_string(const json& j, const std::string& what) {
    if (!j.is_string()) throw Malformed(what + " is not a string");
    return j.get<std::string>();
}

bool strictly_increasing(const std::vector<int>& v) {
    return std::adjacent_find(v.begin(), v.end(), [](int a, int b) { return a >= b; }) == v.end();
}

// Opp computed straight from the definition, independent of the builder.
class OppCheck {
public:
    OppCheck(const FaceComplex& fc) : fc_(fc), cx_(fc.thick()), g_(cx_.base()) {}

    std::optional<int> face(int f) const {
        const int n = fc_.family_neighbor(f, fc_.coorientation(f));
        if (n < 0) return std::nullopt;
        return n;
    }

    std::optional<int> cell(int c) const {
        const int owner = cx_.cell_owner(c);
        std::set<int> images;
        switch (cx_.cell_kind(c)) {
            case CellKind::Face: {
                const auto f = face(owner);
                if (!f) return std::nullopt;
                images.insert(cx_.face_cell(*f));
                break;
            }
            case CellKind::Edge:
                for (int k = 0; k < 2; ++k) {
                    const auto& use = g_.edge_uses(owner)[k];
                    const auto f = face(use.face);
                    if (!f) return std::nullopt;
                    images.insert(cx_.edge_cell(g_.face(*f)[use.side].edge));
                }
                break;
            case CellKind::Vertex:
                for (int fa : g_.vertex_faces(owner)) {
                    const auto f = face(fa);
                    if (!f) return std::nullopt;
                    for (int j = 0; j < static_cast<int>(g_.face(fa).size()); ++j) {
                        if (g_.corner_vertex(fa, j) == owner) images.insert(cx_.vertex_cell(g_.corner_vertex(*f, j)));
                    }
                }
                break;
        }
        if (images.size() != 1) return std::nullopt;
        return *images.begin();
    }

    // Image of a side that borders a cell of X.
    std::optional<int> side(int s) const {
        const auto& cells = cx_.side_cells(s);
        int face_cell = -1;
        for (int c : cells)
            if (cx_.cell_kind(c) == CellKind::Face) face_cell = c;
        if (face_cell >= 0) {
            const int f = cx_.cell_owner(face_cell);
            const auto img = face(f);
            if (!img) return std::nullopt;
            for (int j = 0; j < static_cast<int>(g_.face(f).size()); ++j) {
                if (cx_.face_edge_side(f, j) == s) return cx_.face_edge_side(*img, j);
                if (cx_.face_corner_side(f, j) == s) return cx_.face_corner_side(*img, j);
            }
            return std::nullopt;
        }
        int e = -1, v = -1;
        for (int c : cells) {
            if (cx_.cell_kind(c) == CellKind::Edge) e = cx_.cell_owner(c);
            if (cx_.cell_kind(c) == CellKind::Vertex) v = cx_.cell_owner(c);
        }
        if (e < 0 || v < 0) return std::nullopt;
        const int k = cx_.edge_end_side(e, 0) == s ? 0 : 1;
        std::set<int> images;
        for (const auto& use : g_.edge_uses(e)) {
            const auto img = face(use.face);
            if (!img) continue;
            const auto& here = g_.face(use.face)[use.side];
            const auto& there = g_.face(*img)[use.side];
            images.insert(cx_.edge_end_side(there.edge, here.forward == there.forward ? k : 1 - k));
        }
        if (images.size() != 1) return std::nullopt;
        return *images.begin();
    }

private:
    const FaceComplex& fc_;
    const ThickComplex& cx_;
    const PolygonComplex& g_;
};

bool annulus_between(const Subsurface& surface, const Curve& a, const Curve& b, const std::set<int>& x) {
    Subsurface cut = surface;
    for (const Curve* c : {&a, &b})
        for (int s : c->sides) cut.block(s);
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    const auto sa = sorted(a.sides);
    const auto sb = sorted(b.sides);
    for (const auto& comp : evaluate(cut).components) {
        if (comp.euler != 0 || comp.boundary.size() != 2) continue;
        const auto s0 = sorted(comp.boundary[0].sides);
        const auto s1 = sorted(comp.boundary[1].sides);
        if (!((s0 == sa && s1 == sb) || (s0 == sb && s1 == sa))) continue;
        if (std::none_of(comp.cells.begin(), comp.cells.end(), [&](int c) { return x.contains(c); })) return true;
    }
    return false;
}

}  // namespace

VerifyResult verify_certificate(const json& cert, const Triangulation& tri, const NormalCoordinates& q) {
    VerifyResult res;
    auto fail = [&](const std::string& why) {
        res.ok = false;
        res.diagnostics.push_back(why);
    };
    try {
        static const std::set<std::string> keys = {
            "annuli",      "coloring_parity_rule", "coloring_sha256", "coords",        "essential_color",
            "format",      "genus",                "opp",             "positive_side", "selected",
            "surface_sha256", "t",                 "threshold_met",   "triangulation_sha256", "verified_facts",
            "witness",     "x_faces",              "x_graph"};
        if (!cert.is_object()) throw Malformed("certificate is not an object");
        for (const auto& [k, v] : cert.items()) {
            (void)v;
            if (!keys.contains(k)) fail("unexpected field " + k);
        }
        if (as_string(field(cert, "format"), "format") != cert_consts::format) fail("unknown format");
        if (as_string(field(cert, "coloring_parity_rule"), "coloring_parity_rule") != cert_consts::parity_rule) {
            fail("parity rule mismatch");
        }
        if (as_string(field(cert, "positive_side"), "positive_side") != cert_consts::positive_side) {
            fail("positive side convention mismatch");
        }
        if (field(cert, "verified_facts") != json(cert_consts::verified_facts())) fail("verified facts mismatch");
        if (as_string(field(cert, "triangulation_sha256"), "triangulation_sha256") != sha256_hex(tri.serialize())) {
            fail("hash mismatch: triangulation");
        }
        if (as_string(field(cert, "surface_sha256"), "surface_sha256") != sha256_hex(q.serialize())) {
            fail("hash mismatch: surface");
        }
        const json& coords = field(cert, "coords");
        if (!coords.is_array() || coords.size() != q.size()) {
            fail("coordinates mismatch");
        } else {
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (as_int(coords[i], "coords") != q.values()[i]) {
                    fail("coordinates mismatch");
                    break;
                }
            }
        }
        if (as_int(field(cert, "t"), "t") != tri.tet_count()) fail("tetrahedron count mismatch");
        if (!res.ok) return res;

        const FaceComplex fc = build_face_complex(tri, q);
        const ThickComplex& cx = fc.thick();
        const PolygonComplex& g = cx.base();
        const Subsurface whole = Subsurface::whole(cx);
        if (fc.stats().components != 1) {
            fail("surface is disconnected");
            return res;
        }
        const std::int64_t genus = *fc.stats().genus;
        if (as_int(field(cert, "genus"), "genus") != genus) fail("genus mismatch");
        const json& tm = field(cert, "threshold_met");
        if (!tm.is_boolean() || tm.get<bool>() != genus_threshold_met(genus, tri.tet_count())) {
            fail("threshold report mismatch");
        }

        const Coloring coloring = normalize_swap(fc, color_faces(fc));
        std::string why;
        if (!coloring_valid(fc, coloring, &why)) fail("coloring invalid: " + why);
        if (as_string(field(cert, "coloring_sha256"), "coloring_sha256") != sha256_hex(coloring.letters())) {
            fail("hash mismatch: coloring");
        }
        const std::string letter = as_string(field(cert, "essential_color"), "essential_color");
        if (letter != "Y" && letter != "B") throw Malformed("essential colour must be Y or B");
        const Color ess = letter == "Y" ? Color::Yellow : Color::Blue;

        // X
        const auto x_graph = as_ints(field(cert, "x_graph"), "x_graph", g.edge_count());
        const auto x_cells = as_ints(field(cert, "x_faces"), "x_faces", cx.cell_count());
        if (!strictly_increasing(x_graph)) fail("x_graph not sorted");
        if (!strictly_increasing(x_cells)) fail("x_faces not sorted");
        std::set<int> ribbon_cells;
        for (int e : x_graph) {
            ribbon_cells.insert(cx.edge_cell(e));
            ribbon_cells.insert(cx.vertex_cell(g.edge_ends(e)[0]));
            ribbon_cells.insert(cx.vertex_cell(g.edge_ends(e)[1]));
        }
        if (std::vector<int>(ribbon_cells.begin(), ribbon_cells.end()) != x_cells) {
            fail("x_faces is not the neighbourhood of x_graph");
        }
        const Subsurface x = Subsurface::from_cells(cx, x_cells);
        const std::set<int> xset(x_cells.begin(), x_cells.end());
        const Evaluation xev = evaluate(x);
        if (xev.components.size() != 1 || xev.euler != -1 || xev.boundary_count != 3) {
            fail("X is not a pair of pants");
            return res;
        }
        for (int c : x_cells) {
            if (cell_color(fc, coloring, c) != ess) {
                fail("X cell " + std::to_string(c) + " is not of the essential colour");
                break;
            }
        }
        std::vector<Curve> boundary;
        for (const auto& cyc : xev.components.front().boundary) boundary.push_back(make_curve(cx, cyc.sides));
        std::sort(boundary.begin(), boundary.end());
        for (const auto& b : boundary) {
            if (!is_essential(b, whole)) fail("boundary curve of X is inessential in F");
        }

        // Opp
        const OppCheck oc(fc);
        const auto opp = as_pairs(field(cert, "opp"), "opp", cx.cell_count());
        if (opp.size() != x_cells.size()) {
            fail("Opp is not total on X");
        } else {
            std::set<int> images;
            for (std::size_t i = 0; i < opp.size(); ++i) {
                if (opp[i][0] != x_cells[i]) {
                    fail("Opp domain differs from X");
                    break;
                }
                const auto expect = oc.cell(opp[i][0]);
                if (!expect) {
                    fail("Opp undefined or not cellular at cell " + std::to_string(opp[i][0]));
                    break;
                }
                if (*expect != opp[i][1]) {
                    fail("Opp image wrong at cell " + std::to_string(opp[i][0]));
                    break;
                }
                if (!images.insert(opp[i][1]).second) fail("Opp is not injective");
                if (xset.contains(opp[i][1])) fail("X meets Opp(X)");
                const int owner = cx.cell_owner(opp[i][1]);
                std::vector<int> adj;
                if (cx.cell_kind(opp[i][1]) == CellKind::Edge) {
                    for (const auto& use : g.edge_uses(owner)) adj.push_back(use.face);
                } else if (cx.cell_kind(opp[i][1]) == CellKind::Vertex) {
                    adj = g.vertex_faces(owner);
                } else {
                    adj = {owner};
                }
                for (int f : adj) {
                    if (coloring.color[f] == ess) {
                        fail("Opp(X) carries the colour of X");
                        break;
                    }
                }
            }
        }

        // annuli
        const json& annuli = field(cert, "annuli");
        if (!annuli.is_array() || annuli.size() != 3) throw Malformed("annuli must have three records");
        std::vector<Curve> alphas, images;
        std::vector<bool> flags;
        for (const auto& rec : annuli) {
            const auto alpha = as_ints(field(rec, "alpha"), "alpha", cx.side_count());
            const auto opp_alpha = as_ints(field(rec, "opp_alpha"), "opp_alpha", cx.side_count());
            const auto ladder = as_pairs(field(rec, "ladder"), "ladder", cx.side_count());
            const json& sp = field(rec, "surface_parallel");
            if (!sp.is_boolean()) throw Malformed("surface_parallel is not a boolean");
            if (rec.size() != 4) fail("unexpected field in annulus record");
            if (const std::string d = curve_defect(cx, alpha); !d.empty()) {
                fail("alpha: " + d);
                return res;
            }
            if (const std::string d = curve_defect(cx, opp_alpha); !d.empty()) {
                fail("opp_alpha: " + d);
                return res;
            }
            if (make_curve(cx, alpha).sides != alpha || make_curve(cx, opp_alpha).sides != opp_alpha) {
                fail("curve not in canonical form");
            }
            if (ladder.size() != alpha.size()) fail("ladder length differs from alpha");
            std::vector<int> mapped;
            for (std::size_t i = 0; i < alpha.size(); ++i) {
                const auto img = oc.side(alpha[i]);
                if (!img) {
                    fail("Opp undefined on a side of alpha");
                    return res;
                }
                mapped.push_back(*img);
                if (i < ladder.size() && (ladder[i][0] != alpha[i] || ladder[i][1] != *img)) fail("ladder broken");
            }
            if (curve_defect(cx, mapped).empty()) {
                if (make_curve(cx, mapped).sides != opp_alpha) fail("opp_alpha is not the image of alpha");
            } else {
                fail("image of alpha is not an embedded curve");
            }
            alphas.push_back(Curve{alpha});
            images.push_back(Curve{opp_alpha});
            flags.push_back(sp.get<bool>());
        }
        if (alphas != boundary) fail("annulus curves differ from the boundary of X");
        for (std::size_t i = 0; i < 3; ++i) {
            std::set<int> pts;
            for (const auto& c : alphas)
                for (int s : c.sides) pts.insert(cx.side_points(s).begin(), cx.side_points(s).end());
            for (int s : images[i].sides) {
                if (pts.contains(cx.side_points(s)[0]) || pts.contains(cx.side_points(s)[1])) {
                    fail("Opp(alpha) meets the boundary of X");
                    break;
                }
            }
            if (!is_essential(images[i], whole)) fail("Opp(alpha) is inessential in F");
            if (annulus_between(whole, alphas[i], images[i], xset) != flags[i]) fail("surface_parallel flag wrong");
        }
        int expect_sel = -1;
        for (int i = 0; i < 3 && expect_sel < 0; ++i)
            if (!flags[i]) expect_sel = i;
        const std::int64_t sel = as_int(field(cert, "selected"), "selected");
        if (expect_sel < 0) fail("every annulus is surface parallel");
        if (sel != expect_sel) fail("selected index is not the least unflagged annulus");
        const json& witness = field(cert, "witness");
        if (!witness.is_object() || witness.size() != 2) throw Malformed("witness must have alpha and image");
        if (expect_sel >= 0) {
            const auto wa = as_ints(field(witness, "alpha"), "witness", cx.side_count());
            const auto wi = as_ints(field(witness, "image"), "witness", cx.side_count());
            if (wa != alphas[expect_sel].sides || wi != images[expect_sel].sides) fail("witness mismatch");
        }
    } catch (const Malformed& e) {
        fail(std::string("malformed certificate: ") + e.what());
    } catch (const Error& e) {
        fail(e.what());
    } catch (const nlohmann::json::exception& e) {
        fail(std::string("malformed certificate: ") + e.what());
    }
    return res;
}

}  // namespace cylcert
