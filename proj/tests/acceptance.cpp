#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "genus2_mock.hpp"
#include "mutations.hpp"
#include "surface_helpers.hpp"

#include "cylcert/certificate.hpp"
#include "cylcert/coloring.hpp"
#include "cylcert/error.hpp"
#include "cylcert/face_complex.hpp"
#include "cylcert/instance_gen.hpp"
#include "cylcert/pants_pipeline.hpp"

using namespace cylcert;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::vector<std::pair<int, Outcome>> results;

void report(int n, const std::string& title, const Outcome& o) {
    std::printf("criterion %2d %s: %s (%s)\n", n, o.pass ? "PASS" : "FAIL", title.c_str(), o.detail.c_str());
    std::fflush(stdout);
    results.push_back({n, o});
}

struct Failures {
    int count = 0;
    std::string first;
    void add(const std::string& what) {
        if (count++ == 0) first = what;
    }
    std::string suffix() const { return count == 0 ? "" : "; first failure: " + first; }
};

// Corpus: catalog surfaces, seeded random surfaces, Haken sums of consecutive
// compatible random surfaces, and pool combinations on the genus-two product.
struct Instance {
    std::string label;
    const Triangulation* tri;
    NormalCoordinates q;
};

struct Corpus {
    std::vector<Triangulation> tris;
    std::vector<Instance> instances;
    int rejected = 0;  // one-sided or otherwise unbuildable sums
};

Corpus build_corpus() {
    Corpus c;
    c.tris.reserve(catalog().size());
    for (const auto& e : catalog()) c.tris.push_back(parse_triangulation(e.triangulation));
    for (std::size_t i = 0; i < catalog().size(); ++i) {
        const auto& e = catalog()[i];
        const Triangulation* tri = &c.tris[i];
        for (std::size_t k = 0; k < e.surfaces.size(); ++k) {
            c.instances.push_back({e.name + "/known" + std::to_string(k), tri, e.surfaces[k].coords});
        }
        const int seeds = e.pool.empty() ? 110 : 40;
        std::optional<NormalCoordinates> prev;
        for (int seed = 1; seed <= seeds; ++seed) {
            NormalCoordinates q;
            try {
                q = random_surface(*tri, seed, 3);
            } catch (const Error&) {
                continue;
            }
            c.instances.push_back({e.name + "/random" + std::to_string(seed), tri, q});
            if (prev) {
                try {
                    c.instances.push_back({e.name + "/sum" + std::to_string(seed), tri, haken_sum(*prev, q)});
                } catch (const Error&) {
                }
            }
            prev = q;
        }
        if (!e.pool.empty()) {
            for (int seed = 1; seed <= 150; ++seed) {
                int k = 0;
                for (auto& q : pool_combination(*tri, e.pool, seed, 4, 8)) {
                    c.instances.push_back(
                        {e.name + "/pool" + std::to_string(seed) + "." + std::to_string(k++), tri, std::move(q)});
                }
            }
        }
    }
    return c;
}

struct Built {
    const Instance* inst;
    FaceComplex fc;
    Coloring c;
};

bool same_boundary_collar(const Subsurface& r, const Subsurface& f0, const Subsurface& whole, std::string& why) {
    Subsurface both = r;
    for (int cell : f0.cells()) both.add(cell);
    const auto [chi_r, bd_r] = euler_and_boundary(r);
    const auto [chi_0, bd_0] = euler_and_boundary(f0);
    if (bd_r != bd_0) {
        why = "|dR| " + std::to_string(bd_r) + " != |dF0| " + std::to_string(bd_0);
        return false;
    }
    int collars = 0;
    for (const auto& comp : evaluate(complement(both, whole)).components) {
        if (comp.euler != 0 || comp.boundary.size() != 2) {
            why = "region between R and F0 is not a union of annuli";
            return false;
        }
        bool touches_r = false, touches_f0 = false;
        for (const auto& cyc : comp.boundary) {
            const int outside = whole.complex().across(cyc.sides.front(), cyc.cells.front());
            touches_r = touches_r || r.contains(outside);
            touches_f0 = touches_f0 || f0.contains(outside);
        }
        if (!touches_r || !touches_f0) {
            why = "collar annulus does not join R to F0";
            return false;
        }
        ++collars;
    }
    if (collars != bd_r) {
        why = "collar count differs from |dR|";
        return false;
    }
    return true;
}

std::set<int> curve_points(const ThickComplex& cx, const Curve& c) {
    std::set<int> pts;
    for (int s : c.sides) pts.insert(cx.side_points(s).begin(), cx.side_points(s).end());
    return pts;
}

std::string check_chain(const FaceComplex& fc, const PipelineTrace& tr) {
    const ThickComplex& cx = fc.thick();
    const Subsurface whole = Subsurface::whole(cx);
    const auto [e3, b3] = euler_and_boundary(*tr.f3);
    if (e3 > -b3) return "chi(F3) > -|dF3|";
    const auto [e4, b4] = euler_and_boundary(*tr.f4);
    if (e4 >= 0) return "chi(F4) >= 0";
    for (const auto& comp : evaluate(*tr.f4).components)
        for (const auto& cyc : comp.boundary)
            if (!is_essential(make_curve(cx, cyc.sides), whole)) return "a boundary curve of F4 is inessential";
    return "";
}

std::string check_certificate(const Triangulation& tri, const NormalCoordinates& q, Certificate& cert_out) {
    const FaceComplex fc = build_face_complex(tri, q);
    const ThickComplex& cx = fc.thick();
    const Subsurface whole = Subsurface::whole(cx);
    const Coloring c = normalize_swap(fc, color_faces(fc));
    PipelineTrace tr;
    cert_out = certify(tri, q, fc, {true}, &tr);
    if (const std::string why = check_chain(fc, tr); !why.empty()) return why;

    const Subsurface& x = *tr.x;
    if (euler_and_boundary(x) != std::pair<std::int64_t, int>{-1, 3} || evaluate(x).components.size() != 1)
        return "X is not a pair of pants";
    for (int cell : x.cells())
        if (cell_color(fc, c, cell) != tr.essential_color) return "X is not monochromatic";

    const OppAssignment opp = opp_assignment(fc, x);
    std::map<int, int> image;
    for (const auto& [cell, img] : opp.cells) image[cell] = img;
    std::set<int> distinct;
    for (const auto& [cell, img] : image) {
        distinct.insert(img);
        if (x.contains(img)) return "X meets Opp(X)";
        if (cx.cell_kind(cell) != cx.cell_kind(img)) return "Opp changes the kind of a cell";
    }
    if (distinct.size() != image.size()) return "Opp is not injective";
    for (int cell : x.cells()) {
        for (int s : cx.cell_sides(cell)) {
            const int other = cx.across(s, cell);
            if (other < cell || !x.contains(other)) continue;
            const auto& cells = cx.side_cells(opp_side(fc, opp, s));
            const std::set<int> got(cells.begin(), cells.end());
            if (got != std::set<int>{image[cell], image[other]}) return "Opp is not cellular";
        }
    }

    const AnnulusRecord& sel = cert_out.annuli.at(cert_out.selected);
    const auto pa = curve_points(cx, sel.alpha);
    for (int p : curve_points(cx, sel.opp_alpha))
        if (pa.contains(p)) return "selected alpha meets Opp(alpha)";
    if (!is_essential(sel.alpha, whole) || !is_essential(sel.opp_alpha, whole))
        return "selected alpha or Opp(alpha) is inessential";
    return "";
}

}  // namespace

int main() {
    const auto t_all = Clock::now();

    // Criteria 1-5 share one corpus.
    const auto t_corpus = Clock::now();
    Corpus corpus = build_corpus();
    std::vector<Built> built;
    built.reserve(corpus.instances.size());
    for (const auto& inst : corpus.instances) {
        try {
            FaceComplex fc = build_face_complex(*inst.tri, inst.q);
            Coloring c = normalize_swap(fc, color_faces(fc));
            built.push_back({&inst, std::move(fc), std::move(c)});
        } catch (const Error&) {
            ++corpus.rejected;
        }
    }

    {
        Failures f;
        for (const auto& b : built)
            if (!verify_red_vertex_disks(b.fc, b.c).pass) f.add(b.inst->label);
        const double dt = seconds_since(t_corpus);
        std::ostringstream d;
        d << built.size() << " instances (" << corpus.rejected << " sums rejected as one-sided), " << f.count
          << " failures, " << dt << " s" << f.suffix();
        report(1, "red vertex disks meet only red truncated disks",
               {f.count == 0 && built.size() >= 1000 && dt < 60.0, d.str()});
    }

    {
        Failures f;
        for (const auto& b : built) {
            const std::int64_t t = b.inst->tri->tet_count();
            const auto [chi, bd] =
                euler_and_boundary(Subsurface::from_faces(b.fc.thick(), faces_of_color(b.c, {Color::Red})));
            if (chi < -(22 * t - 1) || bd > 22 * t - 1) f.add(b.inst->label);
        }
        std::ostringstream d;
        d << built.size() << " instances, " << f.count << " failures" << f.suffix();
        report(2, "chi(R) >= -(22t-1) and |dR| <= 22t-1", {f.count == 0, d.str()});
    }

    {
        Failures f;
        for (const auto& b : built) {
            const std::int64_t t = b.inst->tri->tet_count();
            std::int64_t tris = 0, quads = 0;
            for (const auto& face : b.fc.faces()) {
                if (b.c.color[face.id] != Color::Red) continue;
                tris += face.kind == FaceKind::TruncatedTriangle;
                quads += face.kind == FaceKind::TruncatedQuad;
            }
            const auto arcs = static_cast<std::int64_t>(gamma1(b.fc, b.c).size());
            const auto vplus = static_cast<std::int64_t>(b.c.v_plus.size());
            const auto v = static_cast<std::int64_t>(b.c.v_all.size());
            if (tris > 8 * t) f.add(b.inst->label + " red triangles");
            if (quads > 2 * t) f.add(b.inst->label + " red quads");
            if (v > 64 * t) f.add(b.inst->label + " |V|");
            if (2 * arcs != vplus || arcs > 16 * t) f.add(b.inst->label + " |Gamma1|");
            if (vplus > static_cast<std::int64_t>(b.c.v_minus.size())) f.add(b.inst->label + " not normalized");
        }
        std::ostringstream d;
        d << built.size() << " instances, " << f.count << " failures" << f.suffix();
        report(3, "red disk counts, |V| <= 64t, |Gamma1| = |V+|/2 <= 16t", {f.count == 0, d.str()});
    }

    {
        Failures f;
        int nonempty = 0;
        for (const auto& b : built) {
            const ThickComplex& cx = b.fc.thick();
            const Subsurface whole = Subsurface::whole(cx);
            const Subsurface f0 = Subsurface::from_faces(cx, faces_of_color(b.c, {Color::Yellow, Color::Blue}));
            if (f0.empty()) continue;
            ++nonempty;
            const Subsurface r = Subsurface::from_faces(cx, faces_of_color(b.c, {Color::Red}));
            const auto arcs = gamma1(b.fc, b.c);
            const std::int64_t chi_f = euler_and_boundary(whole).first;
            const std::int64_t chi_r = euler_and_boundary(r).first;
            const std::int64_t chi_0 = euler_and_boundary(f0).first;
            const std::int64_t chi_1 = euler_and_boundary(cut_along_arcs(f0, arcs)).first;
            std::string why;
            if (chi_f != chi_r + chi_0) f.add(b.inst->label + " chi(F) != chi(R) + chi(F0)");
            if (!same_boundary_collar(r, f0, whole, why)) f.add(b.inst->label + " " + why);
            if (chi_1 != chi_0 + static_cast<std::int64_t>(arcs.size())) f.add(b.inst->label + " chi(F1)");
        }
        std::ostringstream d;
        d << nonempty << " instances with nonempty F0, " << f.count << " failures" << f.suffix();
        report(4, "chi(F) = chi(R) + chi(F0), dF0 = dR, chi(F1) = chi(F0) + |Gamma1|", {f.count == 0 && nonempty > 0, d.str()});
    }

    {
        Failures f;
        for (const auto& b : built) {
            const std::int64_t oracle = euler_from_coordinates(*b.inst->tri, b.inst->q);
            if (b.fc.stats().euler != oracle || b.fc.graph().euler() != oracle ||
                euler_and_boundary(Subsurface::whole(b.fc.thick())).first != oracle)
                f.add(b.inst->label);
        }
        std::ostringstream d;
        d << built.size() << " instances, " << f.count << " mismatches" << f.suffix();
        report(5, "cell-complex chi equals the coordinate formula", {f.count == 0, d.str()});
    }

    {
        Outcome o;
        std::ostringstream d;
        auto spot = [&](const std::string& name, std::int64_t chi, std::int64_t genus) {
            const auto t0 = Clock::now();
            const auto& e = catalog_entry(name);
            const auto tri = parse_triangulation(e.triangulation);
            const auto fc = build_face_complex(tri, e.surfaces.front().coords);
            const auto& st = fc.stats();
            const double dt = seconds_since(t0);
            const bool ok = st.euler == chi && st.genus == genus && st.components == 1 && st.orientable && dt < 1.0;
            d << name << " chi " << st.euler << " genus " << (st.genus ? *st.genus : -1) << " in " << dt << " s; ";
            o.pass = o.pass && ok;
        };
        spot("figure-eight", 0, 1);
        spot("sphere-1tet", 2, 0);
        o.detail = d.str();
        report(6, "catalog spot checks", o);
    }

    // Criteria 7, 9 and 10 use the completing instances of the genus-two product.
    const Triangulation& product = corpus.tris.back();
    std::vector<helpers::Instance> completing;
    std::vector<Certificate> certs;
    {
        Failures f;
        int chains = 0, attempts = 0;
        std::map<std::string, int> stopped;
        std::set<std::vector<std::int64_t>> seen;
        const auto& pool = catalog_entry("sigma2xS1").pool;
        for (std::uint64_t seed = 1; seed <= 600; ++seed) {
            for (auto& q : pool_combination(product, pool, seed, 4, 8)) {
                if (!seen.insert(q.values()).second) continue;
                ++attempts;
                try {
                    const FaceComplex fc = build_face_complex(product, q);
                    const PipelineTrace tr = run_chain(fc, normalize_swap(fc, color_faces(fc)), {true});
                    ++chains;
                    const std::string why = check_chain(fc, tr);
                    if (!why.empty()) f.add("seed " + std::to_string(seed) + ": " + why);
                } catch (const Error& e) {
                    ++stopped[std::string(to_string(e.code()))];
                    continue;
                }
                Certificate cert;
                try {
                    const std::string why = check_certificate(product, q, cert);
                    if (!why.empty()) f.add("seed " + std::to_string(seed) + ": " + why);
                } catch (const Error& e) {
                    ++stopped[std::string(to_string(e.code()))];
                    continue;
                }
                completing.push_back({seed, q});
                certs.push_back(std::move(cert));
            }
        }
        std::ostringstream d;
        d << attempts << " pool components, " << chains << " complete the chain, " << completing.size()
          << " reach a certificate, " << f.count << " invariant failures" << f.suffix() << "; stopped:";
        for (const auto& [k, v] : stopped) d << " " << k << " " << v;
        report(7, "pipeline invariants under --force", {f.count == 0 && completing.size() >= 20, d.str()});
    }

    {
        Outcome o;
        const ThickComplex cx(mock::genus_two());
        const Subsurface whole = Subsurface::whole(cx);
        const Subsurface x = Subsurface::from_faces(cx, {0, 1});
        const Subsurface y = Subsurface::from_faces(cx, {2, 3});
        auto recs = mock::records(cx, x, y, {0, 1, 2});
        std::string got = "no error";
        try {
            select_essential_annulus(whole, recs, x);
        } catch (const Error& e) {
            got = std::string(to_string(e.code()));
        }
        auto crossed = mock::records(cx, x, y, {1, 2, 0});
        int picked = -1;
        try {
            picked = select_essential_annulus(whole, crossed, x);
        } catch (const Error&) {
        }
        o.pass = got == "AllParallel" && euler_and_boundary(whole).first == -2 && picked == 0;
        o.detail = "surface chi " + std::to_string(euler_and_boundary(whole).first) + ", result " + got +
                   ", crossed pairing selects " + std::to_string(picked);
        report(8, "genus-two mock returns AllParallel", o);
    }

    {
        Failures f;
        for (std::size_t i = 0; i < completing.size(); ++i) {
            const auto vr = verify_certificate(certificate_json(certs[i]), product, completing[i].coords);
            if (!vr.ok) f.add("seed " + std::to_string(completing[i].seed) + ": " + vr.diagnostics.front());
        }
        int accepted = 0;
        std::string first_accepted;
        const int mutations_total = 100;
        for (int m = 0; m < mutations_total && !completing.empty(); ++m) {
            const std::size_t i = static_cast<std::size_t>(m) % completing.size();
            const auto mut = mutations::mutate(certificate_json(certs[i]), 1000 + m);
            if (verify_certificate(mut.doc, product, completing[i].coords).ok) {
                if (accepted++ == 0) first_accepted = mut.description;
            }
        }
        std::ostringstream d;
        d << completing.size() << " round trips, " << f.count << " rejected" << f.suffix() << "; " << mutations_total
          << " mutations, " << accepted << " accepted" << (accepted ? " (first: " + first_accepted + ")" : "");
        report(9, "certify/verify round trip and mutation rejection",
               {f.count == 0 && accepted == 0 && !completing.empty(), d.str()});
    }

    {
        Failures f;
        for (std::size_t i = 0; i < completing.size(); ++i) {
            const auto again = certify(product, completing[i].coords, {true});
            if (canonical_dump(certificate_json(again)) != canonical_dump(certificate_json(certs[i])))
                f.add("seed " + std::to_string(completing[i].seed));
        }
        const auto again = build_corpus();
        int differ = 0;
        for (std::size_t i = 0; i < again.instances.size(); ++i) {
            if (i >= corpus.instances.size() || again.instances[i].q.values() != corpus.instances[i].q.values()) ++differ;
        }
        if (again.instances.size() != corpus.instances.size()) ++differ;
        std::ostringstream d;
        d << completing.size() << " certificates re-run, " << f.count << " differ; corpus regenerated with "
          << differ << " differences" << f.suffix();
        report(10, "determinism", {f.count == 0 && differ == 0 && !completing.empty(), d.str()});
    }

    {
        Outcome o{false, "no instance with 10^4 faces certified"};
        const auto& pool = catalog_entry("sigma2xS1").pool;
        for (std::uint64_t seed = 1; seed <= 400 && !o.pass; ++seed) {
            for (const auto& q : pool_combination(product, pool, seed, 6, 200)) {
                std::int64_t disks = 0;
                for (auto v : q.values()) disks += v;
                if (disks < 8000) continue;
                const int faces = build_face_complex(product, q).face_count();
                if (faces < 10000) continue;
                const auto t0 = Clock::now();
                try {
                    const Certificate cert = certify(product, q, {true});
                    const double dt = seconds_since(t0);
                    const bool ok = verify_certificate(certificate_json(cert), product, q).ok;
                    std::ostringstream d;
                    d << faces << " faces (seed " << seed << "), certify " << dt << " s, verify "
                      << (ok ? "accepts" : "rejects");
                    o = {dt < 10.0 && ok, d.str()};
                    break;
                } catch (const Error&) {
                }
            }
        }
        report(11, "certify on at least 10^4 faces in under 10 s", o);
    }

    int failed = 0;
    for (const auto& [n, o] : results) failed += !o.pass;
    std::printf("%d of %zu criteria pass, %.1f s total\n", static_cast<int>(results.size()) - failed, results.size(),
                seconds_since(t_all));
    return failed == 0 ? 0 : 1;
}
