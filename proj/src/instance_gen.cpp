#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "cylcert/error.hpp"
#include "cylcert/face_complex.hpp"
#include "cylcert/instance_gen.hpp"

namespace cylcert {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Solves the matching equations for the triangle coordinates given the quads
// already in `q`. Each vertex-link component is shifted to minimum zero, then
// lifted by a random amount within the bound. Returns false when the quads
// admit no solution.
bool fill_triangles(const Triangulation& tri, NormalCoordinates& q, std::mt19937_64& rng, std::int64_t bound) {
    const int n = tri.tet_count();
    NormalCoordinates quads_only = q;
    for (int t = 0; t < n; ++t)
        for (int v = 0; v < 4; ++v) quads_only.tri(t, v) = 0;

    std::vector<std::int64_t> offset(4 * n, 0);
    std::vector<int> comp(4 * n, -1);
    int comps = 0;
    for (int s = 0; s < 4 * n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = comps;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int node = queue.front();
            queue.pop_front();
            const int t = node / 4;
            const int v = node % 4;
            for (int f = 0; f < 4; ++f) {
                if (f == v || !tri.gluing(t, f)) continue;
                const Gluing& gl = *tri.gluing(t, f);
                const int other = gl.tet * 4 + gl.perm[v];
                // tri(t,v) + a = tri(t',v') + b
                const std::int64_t want =
                    offset[node] + quads_only.arc_count(t, f, v) - quads_only.arc_count(gl.tet, gl.face, gl.perm[v]);
                if (comp[other] < 0) {
                    comp[other] = comps;
                    offset[other] = want;
                    queue.push_back(other);
                } else if (offset[other] != want) {
                    return false;
                }
            }
        }
        ++comps;
    }
    std::vector<std::int64_t> lo(comps, INT64_MAX), hi(comps, INT64_MIN);
    for (int i = 0; i < 4 * n; ++i) {
        lo[comp[i]] = std::min(lo[comp[i]], offset[i]);
        hi[comp[i]] = std::max(hi[comp[i]], offset[i]);
    }
    std::vector<std::int64_t> lift(comps);
    for (int c = 0; c < comps; ++c) {
        const std::int64_t span = hi[c] - lo[c];
        if (span > bound) return false;
        lift[c] = uniform(rng, 0, std::min<std::int64_t>(1, bound - span)) - lo[c];
    }
    for (int i = 0; i < 4 * n; ++i) q.tri(i / 4, i % 4) = offset[i] + lift[comp[i]];
    return true;
}

}  // namespace

namespace {

using Row = std::vector<std::int64_t>;

// Linear constraints on the quad values (one variable per tetrahedron carrying
// the chosen quad type) that make the triangle offsets consistent.
std::vector<Row> quad_matching_rows(const Triangulation& tri, const std::vector<int>& types) {
    const int n = tri.tet_count();
    auto quad_arcs = [&](int t, int f, int v) -> std::int64_t {
        if (types[t] == 0) return 0;
        NormalCoordinates unit = NormalCoordinates::zero(n);
        unit.quad(t, types[t]) = 1;
        return unit.arc_count(t, f, v);
    };
    std::vector<Row> offset(4 * n);
    std::vector<Row> rows;
    for (int s = 0; s < 4 * n; ++s) {
        if (!offset[s].empty()) continue;
        offset[s] = Row(n, 0);
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int node = queue.front();
            queue.pop_front();
            const int t = node / 4;
            const int v = node % 4;
            for (int f = 0; f < 4; ++f) {
                if (f == v || !tri.gluing(t, f)) continue;
                const Gluing& gl = *tri.gluing(t, f);
                const int other = gl.tet * 4 + gl.perm[v];
                Row want = offset[node];
                want[t] += quad_arcs(t, f, v);
                want[gl.tet] -= quad_arcs(gl.tet, gl.face, gl.perm[v]);
                if (offset[other].empty()) {
                    offset[other] = want;
                    queue.push_back(other);
                    continue;
                }
                Row diff(n);
                bool nonzero = false;
                for (int i = 0; i < n; ++i) {
                    diff[i] = offset[other][i] - want[i];
                    nonzero = nonzero || diff[i] != 0;
                }
                if (nonzero) rows.push_back(diff);
            }
        }
    }
    return rows;
}

struct Echelon {
    std::vector<Row> rows;    // fraction-free reduced rows
    std::vector<int> pivots;  // pivot column per row
};

Echelon reduce(std::vector<Row> rows, int n) {
    Echelon ech;
    std::size_t r = 0;
    for (int col = 0; col < n && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const std::int64_t a = rows[r][col];
            const std::int64_t b = rows[i][col];
            std::int64_t g = 0;
            for (int j = 0; j < n; ++j) {
                rows[i][j] = rows[i][j] * a - rows[r][j] * b;
                g = std::gcd(g, rows[i][j]);
            }
            if (g > 1)
                for (int j = 0; j < n; ++j) rows[i][j] /= g;
        }
        ech.pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    ech.rows = std::move(rows);
    return ech;
}

}  // namespace

namespace {

// `fixed` gives per tetrahedron a quad type the sample must agree with (0 = free).
std::optional<NormalCoordinates> sample_surface(const Triangulation& tri, std::mt19937_64& rng, std::int64_t bound,
                                                const std::vector<int>& fixed) {
    const int n = tri.tet_count();
    constexpr int patterns = 400;
    constexpr int samples = 50;
    for (int a = 0; a < patterns; ++a) {
        std::vector<int> types(n);
        const std::int64_t density = uniform(rng, 0, 3);
        for (int t = 0; t < n; ++t) {
            const bool on = uniform(rng, 0, 3) < density;
            types[t] = !on ? 0 : fixed[t] != 0 ? fixed[t] : static_cast<int>(uniform(rng, 1, 3));
        }
        const Echelon ech = reduce(quad_matching_rows(tri, types), n);
        std::vector<char> pivot(n, 0);
        for (int c : ech.pivots) pivot[c] = 1;
        for (int s = 0; s < samples; ++s) {
            std::vector<std::int64_t> x(n, 0);
            const std::int64_t qmax = uniform(rng, 0, bound);
            for (int t = 0; t < n; ++t)
                if (types[t] != 0 && !pivot[t]) x[t] = uniform(rng, 0, qmax);
            bool ok = true;
            for (std::size_t i = 0; i < ech.rows.size() && ok; ++i) {
                const int c = ech.pivots[i];
                std::int64_t sum = 0;
                for (int j = 0; j < n; ++j)
                    if (j != c) sum += ech.rows[i][j] * x[j];
                ok = sum % ech.rows[i][c] == 0;
                if (ok) x[c] = -sum / ech.rows[i][c];
                ok = ok && x[c] >= 0 && x[c] <= bound && (x[c] == 0 || types[c] != 0);
            }
            if (!ok) continue;
            NormalCoordinates q = NormalCoordinates::zero(n);
            for (int t = 0; t < n; ++t)
                if (types[t] != 0) q.quad(t, types[t]) = x[t];
            if (!fill_triangles(tri, q, rng, bound)) continue;
            if (q.is_zero() || !validate_coordinates(tri, q).valid()) continue;
            return q;
        }
    }
    return std::nullopt;
}

std::vector<NormalComponent> components_of(const Triangulation& tri, const FaceComplex& fc) {
    const PolygonComplex& g = fc.graph();
    std::vector<int> parent(g.face_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < g.edge_count(); ++e) parent[find(g.edge_uses(e)[0].face)] = find(g.edge_uses(e)[1].face);
    std::map<int, std::vector<int>> members;
    for (int f = 0; f < g.face_count(); ++f) members[find(f)].push_back(f);
    std::vector<NormalComponent> out;
    for (auto& [root, faces] : members) {
        (void)root;
        std::int64_t e2 = 0;
        std::set<int> verts;
        NormalCoordinates cc = NormalCoordinates::zero(tri.tet_count());
        for (int f : faces) {
            e2 += static_cast<std::int64_t>(g.face(f).size());
            for (std::size_t j = 0; j < g.face(f).size(); ++j) verts.insert(g.corner_vertex(f, static_cast<int>(j)));
            const Face& face = fc.face(f);
            if (face.kind == FaceKind::VertexDisk) continue;
            if (face.disk_type < 4) {
                cc.tri(face.tet, face.disk_type) += 1;
            } else {
                cc.quad(face.tet, face.disk_type - 3) += 1;
            }
        }
        const std::int64_t chi =
            static_cast<std::int64_t>(verts.size()) - e2 / 2 + static_cast<std::int64_t>(faces.size());
        out.push_back({std::move(cc), std::move(faces), chi});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.faces.front() < b.faces.front(); });
    return out;
}

bool quads_compatible(const NormalCoordinates& a, const NormalCoordinates& b) {
    for (int t = 0; t < a.tet_count(); ++t) {
        const int x = a.quad_type(t), y = b.quad_type(t);
        if (x != 0 && y != 0 && x != y) return false;
    }
    return true;
}

}  // namespace

std::vector<NormalComponent> surface_components(const Triangulation& tri, const NormalCoordinates& q) {
    return components_of(tri, build_face_complex(tri, q));
}

std::vector<NormalCoordinates> pool_combination(const Triangulation& tri, const std::vector<NormalCoordinates>& pool,
                                                std::uint64_t seed, int max_terms, std::int64_t max_coeff) {
    if (pool.empty()) throw Error(ErrorCode::SearchExhausted, "empty surface pool");
    std::mt19937_64 rng(seed);
    NormalCoordinates acc = NormalCoordinates::zero(tri.tet_count());
    const std::int64_t terms = uniform(rng, 1, std::max(1, max_terms));
    for (std::int64_t i = 0; i < terms; ++i) {
        const auto& s = pool[uniform(rng, 0, static_cast<std::int64_t>(pool.size()) - 1)];
        const std::int64_t k = uniform(rng, 1, std::max<std::int64_t>(1, max_coeff));
        if (quads_compatible(acc, s)) acc = haken_sum(acc, s.scaled(k));
    }
    std::vector<NormalCoordinates> out;
    if (acc.is_zero()) return out;
    std::set<std::vector<std::int64_t>> seen;
    try {
        for (auto& comp : surface_components(tri, acc)) {
            if (comp.euler < 0 && seen.insert(comp.coords.values()).second) out.push_back(std::move(comp.coords));
        }
    } catch (const Error&) {
        return {};
    }
    return out;
}

NormalCoordinates random_surface(const Triangulation& tri, std::uint64_t seed, std::int64_t coord_bound) {
    if (coord_bound < 1) throw Error(ErrorCode::SearchExhausted, "coordinate bound must be positive");
    std::mt19937_64 rng(seed);
    auto q = sample_surface(tri, rng, coord_bound, std::vector<int>(tri.tet_count(), 0));
    if (!q) throw Error(ErrorCode::SearchExhausted, "no solution within the coordinate bound");
    return *q;
}

std::optional<HighGenusResult> high_genus_search(const Triangulation& tri, std::int64_t target_genus, int budget,
                                                 std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::optional<NormalCoordinates> acc;
    for (int step = 0; step < budget; ++step) {
        std::vector<int> fixed(tri.tet_count(), 0);
        if (acc)
            for (int t = 0; t < tri.tet_count(); ++t) fixed[t] = acc->quad_type(t);
        const auto sampled = sample_surface(tri, rng, 3, fixed);
        if (!sampled) continue;
        const NormalCoordinates& piece = *sampled;
        NormalCoordinates next = piece;
        if (acc) {
            try {
                next = haken_sum(*acc, piece);
            } catch (const Error&) {
                continue;
            }
        }
        std::optional<FaceComplex> fc;
        try {
            fc.emplace(build_face_complex(tri, next));
        } catch (const Error&) {
            continue;
        }
        acc = next;

        for (auto& comp : components_of(tri, *fc)) {
            const std::int64_t genus = (2 - comp.euler) / 2;
            if (genus >= target_genus) return HighGenusResult{next, std::move(comp.coords), std::move(comp.faces), genus};
        }
    }
    return std::nullopt;
}

Triangulation random_triangulation(int tet_count, std::uint64_t seed) {
    if (tet_count < 1) throw Error(ErrorCode::SearchExhausted, "need at least one tetrahedron");
    std::mt19937_64 rng(seed);
    std::vector<Perm> odd;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
        Perm perm(p[0], p[1], p[2], p[3]);
        if (perm.sign() < 0) odd.push_back(perm);
    } while (std::next_permutation(p.begin(), p.end()));

    constexpr int attempts = 200000;
    for (int a = 0; a < attempts; ++a) {
        std::vector<int> faces(4 * tet_count);
        std::iota(faces.begin(), faces.end(), 0);
        std::shuffle(faces.begin(), faces.end(), rng);
        std::vector<Triangulation::FaceGluings> gl(tet_count);
        for (std::size_t i = 0; i < faces.size(); i += 2) {
            const int x = faces[i], y = faces[i + 1];
            std::vector<Perm> fits;
            for (const Perm& perm : odd)
                if (perm[x % 4] == y % 4) fits.push_back(perm);
            const Perm& perm = fits[uniform(rng, 0, static_cast<std::int64_t>(fits.size()) - 1)];
            gl[x / 4][x % 4] = Gluing{y / 4, y % 4, perm};
            gl[y / 4][y % 4] = Gluing{x / 4, x % 4, perm.inverse()};
        }
        try {
            Triangulation tri(tet_count, gl);
            bool closed = tri.orientable();
            for (int v = 0; v < tri.vertex_class_count() && closed; ++v) {
                closed = tri.vertex_kind(v) == VertexKind::Material;
            }
            if (closed) return tri;
        } catch (const Error&) {
        }
    }
    throw Error(ErrorCode::SearchExhausted, "no closed orientable triangulation found");
}

}  // namespace cylcert
