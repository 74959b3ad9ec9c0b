#include "cylcert/pants_pipeline.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "cylcert/error.hpp"

namespace cylcert {

namespace {

bool is_interface(const PolygonComplex& g, const Coloring& c, int e) {
    const Color a = c.color[g.edge_uses(e)[0].face];
    const Color b = c.color[g.edge_uses(e)[1].face];
    return (a == Color::Yellow && b == Color::Blue) || (a == Color::Blue && b == Color::Yellow);
}

struct InterfaceGraph {
    std::vector<std::vector<int>> at;  // interface edges at each vertex, loops twice
    std::vector<bool> on;
};

InterfaceGraph interface_graph(const FaceComplex& fc, const Coloring& c) {
    const auto& g = fc.graph();
    InterfaceGraph ig{std::vector<std::vector<int>>(g.vertex_count()), std::vector<bool>(g.edge_count(), false)};
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!is_interface(g, c, e)) continue;
        ig.on[e] = true;
        ig.at[g.edge_ends(e)[0]].push_back(e);
        ig.at[g.edge_ends(e)[1]].push_back(e);
    }
    return ig;
}

GPath walk(const PolygonComplex& g, const InterfaceGraph& ig, std::vector<bool>& used, int v, bool closed) {
    GPath p;
    p.closed = closed;
    while (true) {
        int next = -1;
        for (int e : ig.at[v]) {
            if (!used[e]) {
                next = e;
                break;
            }
        }
        if (next < 0) break;
        used[next] = true;
        p.edges.push_back(next);
        v = g.edge_ends(next)[0] == v ? g.edge_ends(next)[1] : g.edge_ends(next)[0];
    }
    return p;
}

void record(PipelineTrace& trace, const std::string& name, const Subsurface& s) {
    const auto [chi, bd] = euler_and_boundary(s);
    trace.stages.push_back({name, chi, bd});
}

[[noreturn]] void stage_failed(const std::string& why) { throw Error(ErrorCode::PipelinePreconditionFailed, why); }

}  // namespace

std::vector<GPath> gamma1(const FaceComplex& fc, const Coloring& c) {
    const auto& g = fc.graph();
    const InterfaceGraph ig = interface_graph(fc, c);
    std::vector<bool> used(g.edge_count(), false);
    std::vector<GPath> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (ig.at[v].size() != 1 || used[ig.at[v][0]]) continue;
        out.push_back(walk(g, ig, used, v, false));
    }
    return out;
}

std::vector<GPath> interface_cycles(const FaceComplex& fc, const Coloring& c) {
    const auto& g = fc.graph();
    const InterfaceGraph ig = interface_graph(fc, c);
    std::vector<bool> used(g.edge_count(), false);
    for (const auto& arc : gamma1(fc, c)) {
        for (int e : arc.edges) used[e] = true;
    }
    std::vector<GPath> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!ig.on[e] || used[e]) continue;
        out.push_back(walk(g, ig, used, g.edge_ends(e)[0], true));
    }
    return out;
}

Subsurface ribbon(const ThickComplex& cx, const std::vector<int>& edges) {
    Subsurface s(cx);
    for (int e : edges) {
        s.add(cx.edge_cell(e));
        s.add(cx.vertex_cell(cx.base().edge_ends(e)[0]));
        s.add(cx.vertex_cell(cx.base().edge_ends(e)[1]));
    }
    return s;
}

PipelineTrace run_chain(const FaceComplex& fc, const Coloring& c, PipelineOptions opts) {
    const auto& st = fc.stats();
    if (st.components != 1) stage_failed("surface is disconnected");
    PipelineTrace trace;
    trace.threshold_met = genus_threshold_met(*st.genus, fc.tet_count());
    if (!trace.threshold_met) {
        if (!opts.force) stage_failed("genus " + std::to_string(*st.genus) + " is below the 38t threshold");
        trace.unused_guarantees = {"F2 exists", "F3 has negative Euler characteristic",
                                   "F4 is essentially one colour", "pants exist in F4"};
    }
    const ThickComplex& cx = fc.thick();
    const Subsurface whole = Subsurface::whole(cx);

    const Subsurface f0 = Subsurface::from_faces(cx, faces_of_color(c, {Color::Yellow, Color::Blue}));
    if (f0.empty()) throw Error(ErrorCode::NoQualifyingComponent, "F0 is empty");
    trace.f0 = f0;
    record(trace, "F0", f0);

    trace.gamma1 = gamma1(fc, c);
    const Subsurface f1 = cut_along_arcs(f0, trace.gamma1);
    trace.f1 = f1;
    record(trace, "F1", f1);
    const auto n_arcs = static_cast<std::int64_t>(trace.gamma1.size());
    if (trace.stages[1].euler != trace.stages[0].euler + n_arcs) stage_failed("F1 Euler characteristic mismatch");
    if (trace.stages[1].boundary > trace.stages[0].boundary + n_arcs) stage_failed("F1 boundary count too large");

    const Evaluation ev1 = evaluate(f1);
    const SurfaceComponent* pick = nullptr;
    for (const auto& comp : ev1.components) {
        if (comp.euler <= -static_cast<std::int64_t>(comp.boundary.size())) {
            pick = &comp;
            break;
        }
    }
    if (!pick) throw Error(ErrorCode::NoQualifyingComponent, "no component of F1 with chi <= -|boundary|");
    const Subsurface f2 = component_subsurface(f1, *pick);
    trace.f2 = f2;
    record(trace, "F2", f2);

    Subsurface f3 = f2;
    for (const auto& comp : evaluate(complement(f2, whole)).components) {
        if (comp.euler == 1 && comp.boundary.size() == 1) {
            trace.delta1.push_back(Subsurface::from_cells(cx, comp.cells));
            for (int cell : comp.cells) f3.add(cell);
        }
    }
    if (!(f3 == cap_disk_components(f2, whole))) stage_failed("disk capping disagrees");
    trace.f3 = f3;
    record(trace, "F3", f3);
    const auto& s2 = trace.stages[2];
    const auto& s3 = trace.stages[3];
    const auto n_disks = static_cast<std::int64_t>(trace.delta1.size());
    if (s3.euler != s2.euler + n_disks || s3.boundary != s2.boundary - n_disks) stage_failed("F3 arithmetic mismatch");
    if (s3.euler > -s3.boundary) stage_failed("chi(F3) > -|boundary F3|");
    if (s3.euler >= 0) stage_failed("chi(F3) is not negative");
    if (!boundary_essential(f3, whole)) stage_failed("boundary of F3 is inessential in F");

    std::vector<GPath> interior;
    std::vector<Curve> curves;
    for (const auto& cyc : interface_cycles(fc, c)) {
        try {
            cut_along_curves(f3, {cyc});
        } catch (const Error&) {
            continue;
        }
        interior.push_back(cyc);
        curves.push_back(curve_from_gpath(cx, cyc));
    }
    const std::vector<bool> essential = essential_flags(curves, whole);
    for (std::size_t i = 0; i < interior.size(); ++i)
        if (essential[i]) trace.epsilon.push_back(interior[i]);
    const Subsurface f3cut = cut_along_curves(f3, trace.epsilon);
    if (euler_and_boundary(f3cut).first != s3.euler) stage_failed("cutting along essential curves changed chi");
    const Evaluation ev3 = evaluate(f3cut);
    for (const auto& comp : ev3.components) {
        if (comp.euler < 0) {
            trace.f4 = component_subsurface(f3cut, comp);
            break;
        }
    }
    if (!trace.f4) stage_failed("no component of F3 cut along essential curves has chi < 0");
    record(trace, "F4", *trace.f4);
    if (!boundary_essential(*trace.f4, whole)) stage_failed("boundary of F4 is inessential in F");
    return trace;
}

void classify_essential_color(const FaceComplex& fc, const Coloring& c, PipelineTrace& trace) {
    if (!trace.f4) throw Error(ErrorCode::ClassificationFailed, "F4 missing");
    const Subsurface& f4 = *trace.f4;
    const ThickComplex& cx = fc.thick();
    const std::vector<int> cells = f4.cells();

    for (Color color : {Color::Yellow, Color::Blue}) {
        Subsurface off(cx);
        for (int cell : cells) {
            if (cell_color(fc, c, cell) != color) off.add(cell);
        }
        Subsurface disks = off;
        for (const auto& comp : evaluate(complement(off, f4)).components) {
            if (comp.euler != 1 || comp.boundary.size() != 1) continue;
            const auto& cyc = comp.boundary.front();
            bool enclosed = true;
            for (std::size_t i = 0; i < cyc.sides.size() && enclosed; ++i) {
                enclosed = off.contains(cx.across(cyc.sides[i], cyc.cells[i]));
            }
            if (enclosed) {
                for (int cell : comp.cells) disks.add(cell);
            }
        }
        bool ok = true;
        for (const auto& comp : evaluate(disks).components) {
            if (comp.euler != 1 || comp.boundary.size() != 1) {
                ok = false;
                break;
            }
            const auto& cyc = comp.boundary.front();
            for (std::size_t i = 0; i < cyc.sides.size() && ok; ++i) {
                ok = f4.contains(cx.across(cyc.sides[i], cyc.cells[i]));
            }
            if (!ok) break;
        }
        if (!ok) continue;
        trace.essential_color = color;
        trace.off_color_disk = disks;
        trace.working = complement(disks, f4);
        break;
    }
    if (!trace.essential_color) {
        throw Error(ErrorCode::ClassificationFailed, "off-colour region of F4 is not inside disks for either colour");
    }

    trace.gamma2.clear();
    for (const auto& cyc : interface_cycles(fc, c)) {
        const auto verts = path_vertices(fc.graph(), cyc);
        bool inside = true;
        for (int e : cyc.edges) inside = inside && f4.contains(cx.edge_cell(e));
        for (int v : verts) inside = inside && f4.contains(cx.vertex_cell(v));
        if (!inside) continue;
        trace.gamma2.push_back(cyc);
        bool essential = true;
        try {
            essential = is_essential(curve_from_gpath(cx, cyc), f4);
        } catch (const Error& e) {
            throw Error(ErrorCode::ClassificationFailed, std::string("interface curve in F4: ") + e.what());
        }
        if (essential) throw Error(ErrorCode::ClassificationFailed, "interface curve in F4 is essential");
    }
}

namespace {

class PantsSearch {
public:
    PantsSearch(const FaceComplex& fc, const Subsurface& f4, const Subsurface& w) : fc_(fc), cx_(fc.thick()), f4_(f4), w_(w) {}

    std::optional<std::vector<int>> run();

private:
    bool cell_deep(int cell) const;
    void mark_allowed();
    std::vector<std::vector<int>> candidate_cycles();
    std::vector<int> tree_path(int a, int b) const;
    std::vector<int> connecting_path(const std::vector<int>& from, const std::vector<int>& to,
                                     const std::vector<char>& blocked) const;
    bool is_pants(const std::vector<int>& edges);

    const FaceComplex& fc_;
    const ThickComplex& cx_;
    const Subsurface& f4_;
    const Subsurface& w_;
    std::vector<char> vertex_ok_, edge_ok_;
    std::vector<std::vector<std::pair<int, int>>> adj_;  // allowed (neighbour, edge)
    std::vector<int> parent_edge_, depth_;
};

bool PantsSearch::cell_deep(int cell) const {
    if (!w_.contains(cell)) return false;
    for (int t : cx_.cell_sides(cell)) {
        if (!w_.contains(cx_.across(t, cell)) || w_.blocked(t)) return false;
    }
    return true;
}

void PantsSearch::mark_allowed() {
    const auto& g = cx_.base();
    vertex_ok_.assign(g.vertex_count(), 0);
    edge_ok_.assign(g.edge_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) vertex_ok_[v] = cell_deep(cx_.vertex_cell(v));
    adj_.assign(g.vertex_count(), {});
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ends = g.edge_ends(e);
        edge_ok_[e] = cell_deep(cx_.edge_cell(e)) && vertex_ok_[ends[0]] && vertex_ok_[ends[1]];
        if (!edge_ok_[e] || ends[0] == ends[1]) continue;
        adj_[ends[0]].push_back({ends[1], e});
        adj_[ends[1]].push_back({ends[0], e});
    }
    parent_edge_.assign(g.vertex_count(), -2);
    depth_.assign(g.vertex_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (!vertex_ok_[s] || parent_edge_[s] != -2) continue;
        parent_edge_[s] = -1;
        std::deque<int> q{s};
        while (!q.empty()) {
            const int v = q.front();
            q.pop_front();
            for (auto [u, e] : adj_[v]) {
                if (parent_edge_[u] != -2) continue;
                parent_edge_[u] = e;
                depth_[u] = depth_[v] + 1;
                q.push_back(u);
            }
        }
    }
}

std::vector<int> PantsSearch::tree_path(int a, int b) const {
    const auto& g = cx_.base();
    auto up = [&](int v) {
        const auto& ends = g.edge_ends(parent_edge_[v]);
        return ends[0] == v ? ends[1] : ends[0];
    };
    std::vector<int> left, right;
    while (a != b) {
        if (parent_edge_[a] < 0 && parent_edge_[b] < 0) return {};
        if (depth_[a] >= depth_[b] && parent_edge_[a] >= 0) {
            left.push_back(parent_edge_[a]);
            a = up(a);
        } else {
            right.push_back(parent_edge_[b]);
            b = up(b);
        }
    }
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
}

std::vector<std::vector<int>> PantsSearch::candidate_cycles() {
    const auto& g = cx_.base();
    std::vector<std::vector<int>> out;

    // Faces whose whole boundary is allowed; the boundary of their union is a
    // disjoint family of simple cycles because G is trivalent.
    std::vector<char> deep_face(g.face_count(), 0);
    for (int f = 0; f < g.face_count(); ++f) {
        if (!cell_deep(cx_.face_cell(f))) continue;
        bool ok = true;
        for (const auto& side : g.face(f)) ok = ok && edge_ok_[side.edge];
        deep_face[f] = ok;
    }
    std::vector<char> rim(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& uses = g.edge_uses(e);
        rim[e] = edge_ok_[e] && (deep_face[uses[0].face] != deep_face[uses[1].face]);
    }
    std::vector<char> taken(g.edge_count(), 0);
    for (int e0 = 0; e0 < g.edge_count(); ++e0) {
        if (!rim[e0] || taken[e0]) continue;
        std::vector<int> cyc;
        int v = g.edge_ends(e0)[0];
        int e = e0;
        while (e >= 0 && !taken[e]) {
            taken[e] = 1;
            cyc.push_back(e);
            v = g.edge_ends(e)[0] == v ? g.edge_ends(e)[1] : g.edge_ends(e)[0];
            int next = -1;
            for (auto [u, e2] : adj_[v]) {
                (void)u;
                if (rim[e2] && !taken[e2]) next = e2;
            }
            e = next;
        }
        if (!path_vertices(g, GPath{cyc, true}).empty()) out.push_back(cyc);
    }

    // Fundamental cycles of the spanning forest.
    std::vector<char> tree(g.edge_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (parent_edge_[v] >= 0) tree[parent_edge_[v]] = 1;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!edge_ok_[e] || tree[e]) continue;
        const auto& ends = g.edge_ends(e);
        if (ends[0] == ends[1]) continue;
        std::vector<int> cyc = tree_path(ends[0], ends[1]);
        if (cyc.empty()) continue;
        cyc.push_back(e);
        if (!path_vertices(g, GPath{cyc, true}).empty()) out.push_back(cyc);
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

std::vector<int> PantsSearch::connecting_path(const std::vector<int>& from, const std::vector<int>& to,
                                              const std::vector<char>& blocked) const {
    const auto& g = cx_.base();
    std::vector<int> prev(g.vertex_count(), -2);
    std::vector<char> target(g.vertex_count(), 0);
    for (int v : to) target[v] = 1;
    std::deque<int> q;
    for (int v : from) {
        prev[v] = -1;
        q.push_back(v);
    }
    while (!q.empty()) {
        const int v = q.front();
        q.pop_front();
        for (auto [u, e] : adj_[v]) {
            if (prev[u] != -2) continue;
            if (target[u]) {
                std::vector<int> path{e};
                for (int x = v; prev[x] >= 0;) {
                    path.push_back(prev[x]);
                    x = g.edge_ends(prev[x])[0] == x ? g.edge_ends(prev[x])[1] : g.edge_ends(prev[x])[0];
                }
                return path;
            }
            if (blocked[u]) continue;
            prev[u] = e;
            q.push_back(u);
        }
    }
    return {};
}

bool PantsSearch::is_pants(const std::vector<int>& edges) {
    const Subsurface x = ribbon(cx_, edges);
    const Evaluation ev = evaluate(x);
    if (ev.components.size() != 1 || ev.euler != -1 || ev.boundary_count != 3) return false;
    for (const auto& cyc : ev.components.front().boundary) {
        if (!is_essential(make_curve(cx_, cyc.sides), f4_)) return false;
    }
    return true;
}

std::optional<std::vector<int>> PantsSearch::run() {
    mark_allowed();
    const auto& g = cx_.base();
    std::vector<std::vector<int>> essential;
    std::set<std::vector<int>> seen;
    constexpr std::size_t max_essential = 64;
    for (auto& cyc : candidate_cycles()) {
        std::vector<int> key = cyc;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        if (is_essential(curve_from_gpath(cx_, GPath{cyc, true}), f4_)) essential.push_back(cyc);
        if (essential.size() >= max_essential) break;
    }
    for (std::size_t i = 0; i < essential.size(); ++i) {
        for (std::size_t j = i + 1; j < essential.size(); ++j) {
            const auto vi = path_vertices(g, GPath{essential[i], true});
            const auto vj = path_vertices(g, GPath{essential[j], true});
            std::vector<int> edges = essential[i];
            edges.insert(edges.end(), essential[j].begin(), essential[j].end());
            std::vector<char> on(g.vertex_count(), 0);
            bool meet = false;
            for (int v : vi) on[v] = 1;
            for (int v : vj) meet = meet || on[v];
            if (!meet) {
                for (int v : vj) on[v] = 1;
                const auto path = connecting_path(vi, vj, on);
                if (path.empty()) continue;
                edges.insert(edges.end(), path.begin(), path.end());
            }
            std::sort(edges.begin(), edges.end());
            edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
            std::set<int> verts;
            for (int e : edges) {
                verts.insert(g.edge_ends(e)[0]);
                verts.insert(g.edge_ends(e)[1]);
            }
            if (static_cast<int>(verts.size()) - static_cast<int>(edges.size()) != -1) continue;
            if (is_pants(edges)) return edges;
        }
    }
    return std::nullopt;
}

}  // namespace

void find_pants(const FaceComplex& fc, const Coloring& c, PipelineTrace& trace) {
    (void)c;
    if (!trace.f4 || !trace.working) throw Error(ErrorCode::PantsNotFound, "classification missing");
    if (euler_and_boundary(*trace.f4).first >= 0) throw Error(ErrorCode::PantsNotFound, "chi(F4) >= 0");
    PantsSearch search(fc, *trace.f4, *trace.working);
    const auto edges = search.run();
    if (!edges) throw Error(ErrorCode::PantsNotFound, "no pair of pants with essential boundary in F4");
    trace.x_graph = *edges;
    trace.x = ribbon(fc.thick(), *edges);
}

PipelineTrace construct_pants(const FaceComplex& fc, const Coloring& c, PipelineOptions opts) {
    PipelineTrace trace = run_chain(fc, c, opts);
    classify_essential_color(fc, c, trace);
    find_pants(fc, c, trace);
    return trace;
}

}  // namespace cylcert
