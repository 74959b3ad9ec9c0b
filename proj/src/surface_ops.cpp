#include "cylcert/surface_ops.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "cylcert/error.hpp"

namespace cylcert {

Subsurface::Subsurface(const ThickComplex& cx)
    : cx_(&cx), in_(cx.cell_count(), 0), cut_(cx.side_count(), 0) {}

Subsurface Subsurface::whole(const ThickComplex& cx) {
    Subsurface s(cx);
    std::fill(s.in_.begin(), s.in_.end(), 1);
    s.count_ = cx.cell_count();
    return s;
}

Subsurface Subsurface::from_cells(const ThickComplex& cx, const std::vector<int>& cells) {
    Subsurface s(cx);
    for (int c : cells) s.add(c);
    return s;
}

Subsurface Subsurface::from_faces(const ThickComplex& cx, const std::vector<int>& faces) {
    const PolygonComplex& g = cx.base();
    std::vector<std::uint8_t> chosen(g.face_count(), 0);
    for (int f : faces) chosen[f] = 1;
    Subsurface s(cx);
    for (int f : faces) s.add(cx.face_cell(f));
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& uses = g.edge_uses(e);
        if (chosen[uses[0].face] && chosen[uses[1].face]) s.add(cx.edge_cell(e));
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& fs = g.vertex_faces(v);
        if (std::all_of(fs.begin(), fs.end(), [&](int f) { return chosen[f] != 0; })) s.add(cx.vertex_cell(v));
    }
    return s;
}

void Subsurface::add(int cell) {
    if (!in_[cell]) {
        in_[cell] = 1;
        ++count_;
    }
}

void Subsurface::remove(int cell) {
    if (in_[cell]) {
        in_[cell] = 0;
        --count_;
    }
}

std::vector<int> Subsurface::cells() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int c = 0; c < static_cast<int>(in_.size()); ++c) {
        if (in_[c]) out.push_back(c);
    }
    return out;
}

std::vector<int> Subsurface::faces() const {
    std::vector<int> out;
    for (int f = 0; f < cx_->base().face_count(); ++f) {
        if (in_[cx_->face_cell(f)]) out.push_back(f);
    }
    return out;
}

std::vector<int> Subsurface::blocked_sides() const {
    std::vector<int> out;
    for (int s = 0; s < static_cast<int>(cut_.size()); ++s) {
        if (cut_[s]) out.push_back(s);
    }
    return out;
}

bool Subsurface::contains_all(const Subsurface& other) const {
    for (std::size_t c = 0; c < in_.size(); ++c) {
        if (other.in_[c] && !in_[c]) return false;
    }
    return true;
}

bool Subsurface::disjoint_from(const Subsurface& other) const {
    for (std::size_t c = 0; c < in_.size(); ++c) {
        if (other.in_[c] && in_[c]) return false;
    }
    return true;
}

std::string curve_defect(const ThickComplex& cx, const std::vector<int>& sides) {
    const int n = static_cast<int>(sides.size());
    if (n < 2) return "curve has fewer than two sides";
    for (int s : sides) {
        if (s < 0 || s >= cx.side_count()) return "curve names a missing side";
    }
    for (int start = 0; start < 2; ++start) {
        int entry = cx.side_points(sides[0])[start];
        const int first = entry;
        bool ok = true;
        std::vector<int> points;
        for (int i = 0; i < n && ok; ++i) {
            const auto& pts = cx.side_points(sides[i]);
            const int exit = pts[0] == entry ? pts[1] : pts[0];
            const auto& nxt = cx.side_points(sides[(i + 1) % n]);
            if (nxt[0] != exit && nxt[1] != exit) ok = false;
            points.push_back(exit);
            entry = exit;
        }
        if (!ok || entry != first) continue;
        std::vector<int> ps = points;
        std::sort(ps.begin(), ps.end());
        if (std::adjacent_find(ps.begin(), ps.end()) != ps.end()) return "curve revisits a point";
        std::vector<int> ss = sides;
        std::sort(ss.begin(), ss.end());
        if (std::adjacent_find(ss.begin(), ss.end()) != ss.end()) return "curve repeats a side";
        return {};
    }
    return "curve not closed";
}

namespace {

std::vector<int> canonical_cycle(std::vector<int> sides) {
    if (sides.empty()) return sides;
    const auto it = std::min_element(sides.begin(), sides.end());
    std::rotate(sides.begin(), it, sides.end());
    if (sides.size() >= 3 && sides.back() < sides[1]) std::reverse(sides.begin() + 1, sides.end());
    return sides;
}

struct Scratch {
    std::uint32_t gen = 0;
    std::vector<std::uint32_t> cell_stamp;
    std::vector<int> parent;
    std::vector<int> comp;
    std::vector<std::uint32_t> point_stamp;
    std::vector<std::array<int, 3>> point_cells;
    std::vector<std::array<int, 3>> point_group;
    std::vector<std::uint32_t> copy_stamp;
    std::vector<std::array<int, 2>> copy_uses;

    void begin(const ThickComplex& cx) {
        const auto nc = static_cast<std::size_t>(cx.cell_count());
        const auto np = static_cast<std::size_t>(cx.point_count());
        if (cell_stamp.size() < nc) {
            cell_stamp.assign(nc, 0);
            parent.assign(nc, 0);
            comp.assign(nc, 0);
        }
        if (point_stamp.size() < np) {
            point_stamp.assign(np, 0);
            point_cells.assign(np, {});
            point_group.assign(np, {});
            copy_stamp.assign(3 * np, 0);
            copy_uses.assign(3 * np, {});
        }
        if (++gen == 0) {
            std::fill(cell_stamp.begin(), cell_stamp.end(), 0);
            std::fill(point_stamp.begin(), point_stamp.end(), 0);
            std::fill(copy_stamp.begin(), copy_stamp.end(), 0);
            gen = 1;
        }
    }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
};

thread_local Scratch scratch;

}  // namespace

Curve make_curve(const ThickComplex& cx, std::vector<int> sides) {
    const std::string why = curve_defect(cx, sides);
    if (!why.empty()) throw Error(ErrorCode::NotEmbedded, why);
    return Curve{canonical_cycle(std::move(sides))};
}

Evaluation evaluate(const Subsurface& s) {
    const ThickComplex& cx = s.complex();
    Scratch& sc = scratch;
    sc.begin(cx);
    const std::uint32_t gen = sc.gen;
    const std::vector<int> cells = s.cells();

    for (int c : cells) {
        sc.cell_stamp[c] = gen;
        sc.parent[c] = c;
    }
    for (int c : cells) {
        for (int t : cx.cell_sides(c)) {
            const int o = cx.across(t, c);
            if (o > c && s.contains(o) && !s.blocked(t)) {
                const int a = sc.find(c);
                const int b = sc.find(o);
                if (a != b) sc.parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }

    Evaluation ev;
    for (int c : cells) {
        const int r = sc.find(c);
        if (r == c) {
            sc.comp[c] = static_cast<int>(ev.components.size());
            ev.components.emplace_back();
        }
        sc.comp[c] = sc.comp[r];
        auto& comp = ev.components[sc.comp[c]];
        comp.cells.push_back(c);
        comp.euler += 1;
    }

    struct Use {
        int side, cell;
    };
    std::vector<Use> uses;
    for (int c : cells) {
        auto& comp = ev.components[sc.comp[c]];
        for (int t : cx.cell_sides(c)) {
            const int o = cx.across(t, c);
            if (!s.contains(o) || s.blocked(t)) {
                comp.euler -= 1;
                uses.push_back({t, c});
            } else if (cx.side_cells(t)[0] == c) {
                comp.euler -= 1;
            }
            for (int p : cx.side_points(t)) {
                if (sc.point_stamp[p] == gen) continue;
                sc.point_stamp[p] = gen;
                auto& pc = sc.point_cells[p];
                auto& pg = sc.point_group[p];
                const auto& ps = cx.point_sides(p);
                pc[0] = cx.side_cells(ps[0])[0];
                pc[1] = cx.side_cells(ps[0])[1];
                pc[2] = cx.side_cells(ps[1])[0];
                if (pc[2] == pc[0] || pc[2] == pc[1]) pc[2] = cx.side_cells(ps[1])[1];
                for (int i = 0; i < 3; ++i) pg[i] = s.contains(pc[i]) ? i : -1;
                for (int k = 0; k < 3; ++k) {
                    const int t2 = ps[k];
                    const auto& sc2 = cx.side_cells(t2);
                    if (!s.contains(sc2[0]) || !s.contains(sc2[1]) || s.blocked(t2)) continue;
                    const int i = static_cast<int>(std::find(pc.begin(), pc.end(), sc2[0]) - pc.begin());
                    const int j = static_cast<int>(std::find(pc.begin(), pc.end(), sc2[1]) - pc.begin());
                    const int gi = pg[i];
                    const int gj = pg[j];
                    const int lo = std::min(gi, gj);
                    for (int m = 0; m < 3; ++m) {
                        if (pg[m] == gi || pg[m] == gj) pg[m] = lo;
                    }
                }
                for (int i = 0; i < 3; ++i) {
                    if (pg[i] == i) ev.components[sc.comp[pc[i]]].euler += 1;
                }
            }
        }
    }

    auto copy_of = [&](int p, int cell) {
        const auto& pc = sc.point_cells[p];
        const int i = static_cast<int>(std::find(pc.begin(), pc.end(), cell) - pc.begin());
        return 3 * p + sc.point_group[p][i];
    };
    for (int u = 0; u < static_cast<int>(uses.size()); ++u) {
        for (int p : cx.side_points(uses[u].side)) {
            const int k = copy_of(p, uses[u].cell);
            if (sc.copy_stamp[k] != gen) {
                sc.copy_stamp[k] = gen;
                sc.copy_uses[k] = {u, -1};
            } else {
                sc.copy_uses[k][1] = u;
            }
        }
    }
    std::vector<std::uint8_t> seen(uses.size(), 0);
    for (int u0 = 0; u0 < static_cast<int>(uses.size()); ++u0) {
        if (seen[u0]) continue;
        BoundaryCycle cyc;
        int u = u0;
        int entry = cx.side_points(uses[u0].side)[0];
        while (!seen[u]) {
            seen[u] = 1;
            cyc.sides.push_back(uses[u].side);
            cyc.cells.push_back(uses[u].cell);
            const auto& pts = cx.side_points(uses[u].side);
            const int exit = pts[0] == entry ? pts[1] : pts[0];
            const auto& pair = sc.copy_uses[copy_of(exit, uses[u].cell)];
            u = pair[0] == u ? pair[1] : pair[0];
            entry = exit;
        }
        // Canonical rotation and direction, carrying cells along.
        const int n = static_cast<int>(cyc.sides.size());
        int best = 0;
        for (int i = 1; i < n; ++i) {
            if (cyc.sides[i] < cyc.sides[best]) best = i;
        }
        BoundaryCycle out;
        const bool rev = n >= 3 && cyc.sides[(best + n - 1) % n] < cyc.sides[(best + 1) % n];
        for (int i = 0; i < n; ++i) {
            const int j = rev ? (best - i + n) % n : (best + i) % n;
            out.sides.push_back(cyc.sides[j]);
            out.cells.push_back(cyc.cells[j]);
        }
        ev.components[sc.comp[out.cells[0]]].boundary.push_back(std::move(out));
    }
    for (auto& comp : ev.components) {
        std::sort(comp.boundary.begin(), comp.boundary.end(),
                  [](const BoundaryCycle& a, const BoundaryCycle& b) { return a.sides < b.sides; });
        ev.euler += comp.euler;
        ev.boundary_count += static_cast<int>(comp.boundary.size());
    }
    return ev;
}

std::pair<std::int64_t, int> euler_and_boundary(const Subsurface& s) {
    const Evaluation ev = evaluate(s);
    return {ev.euler, ev.boundary_count};
}

std::vector<int> path_vertices(const PolygonComplex& g, const GPath& path) {
    const int n = static_cast<int>(path.edges.size());
    if (n == 0) return {};
    for (int e : path.edges) {
        if (e < 0 || e >= g.edge_count()) return {};
    }
    for (int start = 0; start < 2; ++start) {
        std::vector<int> verts{g.edge_ends(path.edges[0])[start]};
        bool ok = true;
        for (int e : path.edges) {
            const auto& ends = g.edge_ends(e);
            if (ends[0] == verts.back()) {
                verts.push_back(ends[1]);
            } else if (ends[1] == verts.back()) {
                verts.push_back(ends[0]);
            } else {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (path.closed) {
            if (verts.back() != verts.front()) continue;
            verts.pop_back();
        }
        std::vector<int> sorted = verts;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        std::vector<int> es = path.edges;
        std::sort(es.begin(), es.end());
        if (std::adjacent_find(es.begin(), es.end()) != es.end()) continue;
        return verts;
    }
    return {};
}

namespace {

/// Cells of the band around a G-path: its edges and its interior vertices.
std::vector<int> band_cells(const ThickComplex& cx, const GPath& path, const std::vector<int>& verts) {
    std::vector<int> out;
    for (int e : path.edges) out.push_back(cx.edge_cell(e));
    const int first = path.closed ? 0 : 1;
    const int last = path.closed ? static_cast<int>(verts.size()) : static_cast<int>(verts.size()) - 1;
    for (int i = first; i < last; ++i) out.push_back(cx.vertex_cell(verts[i]));
    return out;
}

bool share_vertex(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<int> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return !both.empty();
}

}  // namespace

Subsurface cut_along_arcs(const Subsurface& s, const std::vector<GPath>& arcs) {
    const ThickComplex& cx = s.complex();
    std::vector<std::vector<int>> all_verts;
    Subsurface out = s;
    for (const GPath& arc : arcs) {
        if (arc.closed) throw Error(ErrorCode::ArcNotProper, "arc is a closed path");
        const auto verts = path_vertices(cx.base(), arc);
        if (verts.empty()) throw Error(ErrorCode::ArcNotProper, "arc is not a simple path");
        const auto band = band_cells(cx, arc, verts);
        std::vector<std::uint8_t> mark(cx.cell_count(), 0);
        for (int c : band) mark[c] = 1;
        const int end0 = cx.vertex_cell(verts.front());
        const int end1 = cx.vertex_cell(verts.back());
        for (int c : band) {
            if (!s.contains(c)) throw Error(ErrorCode::ArcNotProper, "arc leaves the subsurface");
            for (int t : cx.cell_sides(c)) {
                const int o = cx.across(t, c);
                if (o == end0 || o == end1) {
                    if (s.contains(o) && !s.blocked(t)) {
                        throw Error(ErrorCode::ArcNotProper, "arc endpoint is not on the boundary");
                    }
                } else if (!mark[o] && (!s.contains(o) || s.blocked(t))) {
                    throw Error(ErrorCode::ArcNotProper, "arc interior touches the boundary");
                }
            }
        }
        for (const auto& other : all_verts) {
            if (share_vertex(other, verts)) throw Error(ErrorCode::ArcsIntersect, "arcs share a G-vertex");
        }
        all_verts.push_back(verts);
        for (int c : band) out.remove(c);
    }
    return out;
}

Subsurface cut_along_curves(const Subsurface& s, const std::vector<GPath>& curves) {
    const ThickComplex& cx = s.complex();
    std::vector<std::vector<int>> all_verts;
    Subsurface out = s;
    for (const GPath& curve : curves) {
        if (!curve.closed) throw Error(ErrorCode::CurveNotInterior, "curve is not closed");
        const auto verts = path_vertices(cx.base(), curve);
        if (verts.empty()) throw Error(ErrorCode::NotEmbedded, "curve is not a simple cycle");
        const auto band = band_cells(cx, curve, verts);
        for (int c : band) {
            if (!s.contains(c)) throw Error(ErrorCode::CurveNotInterior, "curve leaves the subsurface");
            for (int t : cx.cell_sides(c)) {
                const int o = cx.across(t, c);
                if (!s.contains(o) || s.blocked(t)) {
                    throw Error(ErrorCode::CurveNotInterior, "curve touches the boundary");
                }
            }
        }
        for (const auto& other : all_verts) {
            if (share_vertex(other, verts)) throw Error(ErrorCode::CurvesIntersect, "curves share a G-vertex");
        }
        all_verts.push_back(verts);
        for (int c : band) out.remove(c);
    }
    return out;
}

Subsurface cut_open(const Subsurface& s, const std::vector<Curve>& curves) {
    const ThickComplex& cx = s.complex();
    std::unordered_set<int> points;
    Subsurface out = s;
    for (const Curve& c : curves) {
        const std::string why = curve_defect(cx, c.sides);
        if (!why.empty()) throw Error(ErrorCode::NotEmbedded, why);
        for (int t : c.sides) {
            const auto& cells = cx.side_cells(t);
            if (!s.contains(cells[0]) || !s.contains(cells[1]) || s.blocked(t)) {
                throw Error(ErrorCode::CurveNotInterior, "curve side " + std::to_string(t) + " is not interior");
            }
            if (out.blocked(t)) throw Error(ErrorCode::CurvesIntersect, "curves share a side");
            out.block(t);
        }
        std::vector<int> mine;
        for (int t : c.sides) mine.insert(mine.end(), cx.side_points(t).begin(), cx.side_points(t).end());
        std::sort(mine.begin(), mine.end());
        mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
        for (int p : mine)
            if (points.contains(p)) throw Error(ErrorCode::CurvesIntersect, "curves share a point");
        points.insert(mine.begin(), mine.end());
    }
    return out;
}

Subsurface component_subsurface(const Subsurface& s, const SurfaceComponent& comp) {
    const ThickComplex& cx = s.complex();
    Subsurface out = Subsurface::from_cells(cx, comp.cells);
    for (int c : comp.cells) {
        for (int t : cx.cell_sides(c)) {
            if (s.blocked(t) && out.contains(cx.across(t, c))) out.block(t);
        }
    }
    return out;
}

std::vector<Subsurface> components(const Subsurface& s) {
    std::vector<Subsurface> out;
    for (const auto& comp : evaluate(s).components) out.push_back(component_subsurface(s, comp));
    return out;
}

Subsurface complement(const Subsurface& s, const Subsurface& ambient) {
    const ThickComplex& cx = s.complex();
    Subsurface out(cx);
    for (int c = 0; c < cx.cell_count(); ++c) {
        if (ambient.contains(c) && !s.contains(c)) out.add(c);
    }
    for (int t : ambient.blocked_sides()) out.block(t);
    return out;
}

Subsurface cap_disk_components(const Subsurface& s, const Subsurface& ambient, int* capped) {
    if (!ambient.contains_all(s)) throw Error(ErrorCode::NotContained, "subsurface is not inside the ambient surface");
    const ThickComplex& cx = s.complex();
    const Subsurface rest = complement(s, ambient);
    Subsurface out = s;
    int count = 0;
    for (const auto& comp : evaluate(rest).components) {
        if (comp.euler != 1 || comp.boundary.size() != 1) continue;
        const auto& cyc = comp.boundary.front();
        bool along = true;
        for (std::size_t i = 0; i < cyc.sides.size() && along; ++i) {
            const int o = cx.across(cyc.sides[i], cyc.cells[i]);
            along = s.contains(o) && !ambient.blocked(cyc.sides[i]) && !s.blocked(cyc.sides[i]);
        }
        if (!along) continue;
        ++count;
        for (int c : comp.cells) out.add(c);
        for (int c : comp.cells) {
            for (int t : cx.cell_sides(c)) {
                if (ambient.blocked(t)) out.block(t);
            }
        }
    }
    if (capped) *capped = count;
    return out;
}

Curve curve_from_gpath(const ThickComplex& cx, const GPath& path) {
    if (!path.closed) throw Error(ErrorCode::NotEmbedded, "path is not closed");
    const auto verts = path_vertices(cx.base(), path);
    if (verts.empty()) throw Error(ErrorCode::NotEmbedded, "path is not a simple cycle");
    const Subsurface band = Subsurface::from_cells(cx, band_cells(cx, path, verts));
    const Evaluation ev = evaluate(band);
    if (ev.components.size() != 1 || ev.euler != 0 || ev.boundary_count != 2) {
        throw Error(ErrorCode::NotEmbedded, "band around the path is not an annulus");
    }
    return make_curve(cx, ev.components.front().boundary.front().sides);
}

bool is_essential(const Curve& c, const Subsurface& ambient) {
    const Subsurface cut = cut_open(ambient, {c});
    std::vector<int> mine = c.sides;
    std::sort(mine.begin(), mine.end());
    for (const auto& comp : evaluate(cut).components) {
        if (comp.euler != 1 || comp.boundary.size() != 1) continue;
        const auto& cyc = comp.boundary.front();
        const bool only_c = std::all_of(cyc.sides.begin(), cyc.sides.end(),
                                        [&](int t) { return std::binary_search(mine.begin(), mine.end(), t); });
        if (only_c) return false;
    }
    return true;
}

std::vector<bool> essential_flags(const std::vector<Curve>& curves, const Subsurface& ambient) {
    const Evaluation ev = evaluate(cut_open(ambient, curves));
    std::unordered_map<int, int> side_curve;
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (int t : curves[i].sides) side_curve[t] = static_cast<int>(i);

    const int n = static_cast<int>(curves.size());
    const int pieces = static_cast<int>(ev.components.size());
    std::vector<std::vector<int>> ends(n);
    std::vector<int> outer(pieces, 0);
    for (int p = 0; p < pieces; ++p) {
        for (const auto& cyc : ev.components[p].boundary) {
            const auto it = side_curve.find(cyc.sides.front());
            if (it == side_curve.end()) {
                ++outer[p];
            } else {
                ends[it->second].push_back(p);
            }
        }
    }
    std::vector<std::vector<std::pair<int, int>>> adj(pieces);
    for (int i = 0; i < n; ++i) {
        if (ends[i].size() != 2) throw Error(ErrorCode::NotEmbedded, "curve does not cut into two boundary copies");
        adj[ends[i][0]].push_back({ends[i][1], i});
        adj[ends[i][1]].push_back({ends[i][0], i});
    }

    std::vector<int> seen(pieces, -1);
    int stamp = 0;
    // Side of piece `from` after deleting curve i: (reaches `to`, is a disk).
    auto side = [&](int i, int from, int to) {
        ++stamp;
        std::int64_t euler = 0;
        int extra = 0;
        std::vector<int> stack{from};
        seen[from] = stamp;
        while (!stack.empty()) {
            const int p = stack.back();
            stack.pop_back();
            euler += ev.components[p].euler;
            extra += outer[p];
            for (const auto& [q, via] : adj[p]) {
                if (via == i || seen[q] == stamp) continue;
                if (q == to) return std::pair{true, false};
                seen[q] = stamp;
                stack.push_back(q);
            }
        }
        return std::pair{false, euler == 1 && extra == 0};
    };
    std::vector<bool> flags(n, true);
    for (int i = 0; i < n; ++i) {
        const int a = ends[i][0], b = ends[i][1];
        if (a == b) continue;
        const auto [joined, disk_a] = side(i, a, b);
        if (joined) continue;
        flags[i] = !(disk_a || side(i, b, a).second);
    }
    return flags;
}

bool boundary_essential(const Subsurface& s, const Subsurface& ambient) {
    for (const auto& comp : evaluate(s).components) {
        for (const auto& cyc : comp.boundary) {
            if (!is_essential(make_curve(s.complex(), cyc.sides), ambient)) return false;
        }
    }
    return true;
}

}  // namespace cylcert
