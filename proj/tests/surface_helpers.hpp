#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "cylcert/certificate.hpp"
#include "cylcert/error.hpp"
#include "cylcert/face_complex.hpp"
#include "cylcert/instance_gen.hpp"
#include "cylcert/surface_ops.hpp"

namespace helpers {

inline cylcert::FaceComplex build(const std::string& name, int surface = 0) {
    const auto& e = cylcert::catalog_entry(name);
    return cylcert::build_face_complex(cylcert::parse_triangulation(e.triangulation), e.surfaces[surface].coords);
}

/// One simple cycle of G per non-tree edge of a BFS spanning tree.
inline std::vector<cylcert::GPath> fundamental_cycles(const cylcert::PolygonComplex& g) {
    const int nv = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(nv);
    for (int e = 0; e < g.edge_count(); ++e) {
        adj[g.edge_ends(e)[0]].push_back({g.edge_ends(e)[1], e});
        adj[g.edge_ends(e)[1]].push_back({g.edge_ends(e)[0], e});
    }
    std::vector<int> parent_edge(nv, -2), depth(nv, 0);
    std::vector<bool> tree(g.edge_count(), false);
    for (int s = 0; s < nv; ++s) {
        if (parent_edge[s] != -2) continue;
        parent_edge[s] = -1;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (auto [w, e] : adj[v]) {
                if (parent_edge[w] != -2) continue;
                parent_edge[w] = e;
                depth[w] = depth[v] + 1;
                tree[e] = true;
                q.push_back(w);
            }
        }
    }
    auto up = [&](int v) {
        const auto& ends = g.edge_ends(parent_edge[v]);
        return ends[0] == v ? ends[1] : ends[0];
    };
    std::vector<cylcert::GPath> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (tree[e]) continue;
        int a = g.edge_ends(e)[0], b = g.edge_ends(e)[1];
        std::vector<int> left, right;
        while (a != b) {
            if (depth[a] >= depth[b]) {
                left.push_back(parent_edge[a]);
                a = up(a);
            } else {
                right.push_back(parent_edge[b]);
                b = up(b);
            }
        }
        cylcert::GPath p;
        p.closed = true;
        p.edges = left;
        p.edges.insert(p.edges.end(), right.rbegin(), right.rend());
        p.edges.push_back(e);
        out.push_back(p);
    }
    return out;
}

struct Instance {
    std::uint64_t seed;
    cylcert::NormalCoordinates coords;
};

/// Components from pool combinations on the genus-two product for which the
/// forced pipeline completes, in seed order.
inline std::vector<Instance> completing_instances(const cylcert::Triangulation& tri, std::size_t count,
                                                  std::uint64_t max_seed = 3000) {
    const auto& pool = cylcert::catalog_entry("sigma2xS1").pool;
    std::vector<Instance> out;
    for (std::uint64_t seed = 1; seed <= max_seed && out.size() < count; ++seed) {
        for (auto& q : cylcert::pool_combination(tri, pool, seed, 4, 8)) {
            try {
                cylcert::certify(tri, q, {true});
            } catch (const cylcert::Error&) {
                continue;
            }
            out.push_back({seed, std::move(q)});
            if (out.size() == count) break;
        }
    }
    return out;
}

}  // namespace helpers
