#include "cylcert/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cylcert/error.hpp"

namespace cylcert {

namespace {

constexpr std::array<std::array<int, 2>, 6> kTetEdges = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

std::array<int, 2> other_two(int a, int b) {
    std::array<int, 2> out{};
    int k = 0;
    for (int v = 0; v < 4; ++v) {
        if (v != a && v != b) out[k++] = v;
    }
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
};

}  // namespace

int tet_edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    for (int e = 0; e < 6; ++e) {
        if (kTetEdges[e][0] == a && kTetEdges[e][1] == b) return e;
    }
    return -1;
}

std::array<int, 2> tet_edge_vertices(int e) { return kTetEdges[e]; }

bool Perm::is_bijection() const {
    std::array<bool, 4> seen{};
    for (int v : image_) {
        if (v < 0 || v > 3 || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Perm Perm::inverse() const {
    std::array<int, 4> inv{};
    for (int i = 0; i < 4; ++i) inv[image_[i]] = i;
    return Perm(inv[0], inv[1], inv[2], inv[3]);
}

int Perm::sign() const {
    int s = 1;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (image_[i] > image_[j]) s = -s;
        }
    }
    return s;
}

std::string Perm::str() const {
    std::string s;
    for (int v : image_) s += static_cast<char>('0' + v);
    return s;
}

Triangulation::Triangulation(int tet_count, std::vector<FaceGluings> gluings)
    : tet_count_(tet_count), gluings_(std::move(gluings)) {
    if (tet_count_ <= 0) throw Error(ErrorCode::CountMismatch, "tetrahedron count must be positive");
    if (static_cast<int>(gluings_.size()) != tet_count_) {
        throw Error(ErrorCode::CountMismatch, "gluing table size differs from tetrahedron count");
    }
    validate();
    build_edge_classes();
    build_vertex_classes();
    check_orientability();
}

void Triangulation::validate() const {
    for (int t = 0; t < tet_count_; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = gluings_[t][f];
            if (!g) continue;
            std::ostringstream where;
            where << "tet " << t << " face " << f;
            if (g->tet < 0 || g->tet >= tet_count_) {
                throw Error(ErrorCode::CountMismatch, where.str() + " glued to missing tetrahedron");
            }
            if (g->face < 0 || g->face > 3) throw Error(ErrorCode::GluingError, where.str() + ": bad target face");
            if (!g->perm.is_bijection()) throw Error(ErrorCode::GluingError, where.str() + ": not a permutation");
            if (g->perm[f] != g->face) {
                throw Error(ErrorCode::GluingError, where.str() + ": permutation does not carry face onto target face");
            }
            if (g->tet == t && g->face == f) throw Error(ErrorCode::GluingError, where.str() + ": glued to itself");
            const auto& back = gluings_[g->tet][g->face];
            if (!back || back->tet != t || back->face != f || back->perm != g->perm.inverse()) {
                throw Error(ErrorCode::GluingError, where.str() + ": partner gluing is not the inverse");
            }
        }
    }
}

void Triangulation::build_edge_classes() {
    edge_class_of_.assign(tet_count_, {-1, -1, -1, -1, -1, -1});
    incidence_index_.assign(tet_count_, {-1, -1, -1, -1, -1, -1});

    auto step_forward = [&](const EdgeIncidence& in) -> std::optional<EdgeIncidence> {
        const auto& g = gluings_[in.tet][in.d];
        if (!g) return std::nullopt;
        const Perm& p = g->perm;
        return EdgeIncidence{g->tet, p[in.a], p[in.b], p[in.d], p[in.c]};
    };
    auto step_backward = [&](const EdgeIncidence& in) -> std::optional<EdgeIncidence> {
        const auto& g = gluings_[in.tet][in.c];
        if (!g) return std::nullopt;
        const Perm& q = g->perm;
        return EdgeIncidence{g->tet, q[in.a], q[in.b], q[in.d], q[in.c]};
    };

    for (int t = 0; t < tet_count_; ++t) {
        for (int e = 0; e < 6; ++e) {
            if (edge_class_of_[t][e] >= 0) continue;
            const auto [a, b] = kTetEdges[e];
            const auto [c, d] = other_two(a, b);
            const EdgeIncidence start{t, a, b, c, d};

            EdgeClass cls;
            std::vector<EdgeIncidence> forward{start};
            bool closed = false;
            for (;;) {
                auto next = step_forward(forward.back());
                if (!next) break;
                if (*next == start) {
                    closed = true;
                    break;
                }
                if (forward.size() > static_cast<std::size_t>(6 * tet_count_)) {
                    throw Error(ErrorCode::GluingError, "edge walk does not close");
                }
                forward.push_back(*next);
            }
            if (closed) {
                cls.cycle = std::move(forward);
            } else {
                std::vector<EdgeIncidence> backward;
                EdgeIncidence cur = start;
                for (;;) {
                    auto prev = step_backward(cur);
                    if (!prev) break;
                    if (backward.size() > static_cast<std::size_t>(6 * tet_count_)) {
                        throw Error(ErrorCode::GluingError, "edge walk does not terminate");
                    }
                    backward.push_back(*prev);
                    cur = *prev;
                }
                std::reverse(backward.begin(), backward.end());
                backward.insert(backward.end(), forward.begin(), forward.end());
                cls.cycle = std::move(backward);
                cls.boundary = true;
            }

            const int id = static_cast<int>(edge_classes_.size());
            for (std::size_t i = 0; i < cls.cycle.size(); ++i) {
                const auto& in = cls.cycle[i];
                const int te = tet_edge_index(in.a, in.b);
                if (edge_class_of_[in.tet][te] >= 0) {
                    throw Error(ErrorCode::GluingError, "edge identified with itself in reverse or revisited");
                }
                edge_class_of_[in.tet][te] = id;
                incidence_index_[in.tet][te] = static_cast<int>(i);
            }
            edge_classes_.push_back(std::move(cls));
        }
    }
}

void Triangulation::build_vertex_classes() {
    UnionFind uf(4 * tet_count_);
    for (int t = 0; t < tet_count_; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = gluings_[t][f];
            if (!g) continue;
            for (int v = 0; v < 4; ++v) {
                if (v != f) uf.unite(4 * t + v, 4 * g->tet + g->perm[v]);
            }
        }
    }
    std::vector<int> label(4 * tet_count_, -1);
    vertex_class_.assign(4 * tet_count_, -1);
    int count = 0;
    for (int i = 0; i < 4 * tet_count_; ++i) {
        const int r = uf.find(i);
        if (label[r] < 0) label[r] = count++;
        vertex_class_[i] = label[r];
    }

    // Link cell counts: vertices from edge-class ends, edges from face corners,
    // triangles from tetrahedron corners.
    std::vector<int> euler(count, 0);
    std::vector<bool> bounded(count, false);
    for (const auto& cls : edge_classes_) {
        const auto& in = cls.cycle.front();
        euler[vertex_class_of(in.tet, in.a)] += 1;
        euler[vertex_class_of(in.tet, in.b)] += 1;
    }
    for (int t = 0; t < tet_count_; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = gluings_[t][f];
            const bool counted_here = !g || std::pair(t, f) < std::pair(g->tet, g->face);
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                if (counted_here) euler[vertex_class_of(t, v)] -= 1;
                if (!g) bounded[vertex_class_of(t, v)] = true;
            }
        }
        for (int v = 0; v < 4; ++v) euler[vertex_class_of(t, v)] += 1;
    }
    vertex_link_euler_ = euler;
    vertex_kinds_.resize(count);
    for (int i = 0; i < count; ++i) {
        if (bounded[i] || euler[i] == 2) {
            vertex_kinds_[i] = VertexKind::Material;
        } else if (euler[i] == 0) {
            vertex_kinds_[i] = VertexKind::Ideal;
        } else {
            vertex_kinds_[i] = VertexKind::Truncated;
        }
    }
}

void Triangulation::check_orientability() {
    std::vector<int> orient(tet_count_, 0);
    orientable_ = true;
    for (int root = 0; root < tet_count_; ++root) {
        if (orient[root] != 0) continue;
        orient[root] = 1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            const int t = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const auto& g = gluings_[t][f];
                if (!g) continue;
                const int expected = -g->perm.sign() * orient[t];
                if (orient[g->tet] == 0) {
                    orient[g->tet] = expected;
                    stack.push_back(g->tet);
                } else if (orient[g->tet] != expected) {
                    orientable_ = false;
                }
            }
        }
    }
}

int Triangulation::edge_class_of(int tet, int a, int b) const {
    return edge_class_of_[tet][tet_edge_index(a, b)];
}

const EdgeIncidence& Triangulation::incidence_of(int tet, int a, int b) const {
    const int e = tet_edge_index(a, b);
    return edge_classes_[edge_class_of_[tet][e]].cycle[incidence_index_[tet][e]];
}

bool Triangulation::has_boundary_faces() const {
    for (const auto& faces : gluings_) {
        for (const auto& g : faces) {
            if (!g) return true;
        }
    }
    return false;
}

std::string Triangulation::serialize() const {
    std::ostringstream out;
    out << "tri 1\n" << "tets " << tet_count_ << "\n";
    for (int t = 0; t < tet_count_; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = gluings_[t][f];
            if (g) {
                out << "glue " << t << ' ' << f << ' ' << g->tet << ' ' << g->face << ' ' << g->perm.str() << '\n';
            } else {
                out << "bdry " << t << ' ' << f << '\n';
            }
        }
    }
    return out.str();
}

const std::vector<EdgeClass>& edge_classes(const Triangulation& tri) { return tri.edge_classes(); }

namespace {

[[noreturn]] void syntax(int line_no, const std::string& msg) {
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": " + msg);
}

int parse_int(const std::string& tok, int line_no) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        syntax(line_no, "expected nonnegative integer, got '" + tok + "'");
    }
    if (tok.size() > 9) syntax(line_no, "integer too large");
    return std::stoi(tok);
}

}  // namespace

Triangulation parse_triangulation(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool seen_header = false;
    int tets = -1;
    std::vector<Triangulation::FaceGluings> gluings;
    std::vector<std::array<bool, 4>> specified;

    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string w; ls >> w;) tok.push_back(w);
        if (tok.empty()) continue;

        if (!seen_header) {
            if (tok.size() != 2 || tok[0] != "tri" || tok[1] != "1") syntax(line_no, "expected 'tri 1'");
            seen_header = true;
            continue;
        }
        if (tets < 0) {
            if (tok.size() != 2 || tok[0] != "tets") syntax(line_no, "expected 'tets <N>'");
            tets = parse_int(tok[1], line_no);
            if (tets <= 0) throw Error(ErrorCode::CountMismatch, "tetrahedron count must be positive");
            gluings.assign(tets, {});
            specified.assign(tets, {false, false, false, false});
            continue;
        }

        auto check_tet_face = [&](int t, int f) {
            if (t >= tets) {
                throw Error(ErrorCode::CountMismatch,
                            "line " + std::to_string(line_no) + ": tetrahedron " + std::to_string(t) +
                                " exceeds declared count " + std::to_string(tets));
            }
            if (f > 3) syntax(line_no, "face index must be 0..3");
            if (specified[t][f]) {
                throw Error(ErrorCode::GluingError, "line " + std::to_string(line_no) + ": face specified twice");
            }
            specified[t][f] = true;
        };

        if (tok[0] == "glue") {
            if (tok.size() != 6) syntax(line_no, "glue takes 5 fields");
            const int t = parse_int(tok[1], line_no);
            const int f = parse_int(tok[2], line_no);
            const int t2 = parse_int(tok[3], line_no);
            const int f2 = parse_int(tok[4], line_no);
            if (t2 >= tets) {
                throw Error(ErrorCode::CountMismatch, "line " + std::to_string(line_no) + ": target tetrahedron out of range");
            }
            if (f2 > 3) syntax(line_no, "face index must be 0..3");
            const std::string& ps = tok[5];
            if (ps.size() != 4 || !std::all_of(ps.begin(), ps.end(), [](char ch) { return ch >= '0' && ch <= '3'; })) {
                syntax(line_no, "permutation must be four digits 0..3");
            }
            check_tet_face(t, f);
            gluings[t][f] = Gluing{t2, f2, Perm(ps[0] - '0', ps[1] - '0', ps[2] - '0', ps[3] - '0')};
        } else if (tok[0] == "bdry") {
            if (tok.size() != 3) syntax(line_no, "bdry takes 2 fields");
            const int t = parse_int(tok[1], line_no);
            const int f = parse_int(tok[2], line_no);
            check_tet_face(t, f);
        } else {
            syntax(line_no, "unknown directive '" + tok[0] + "'");
        }
    }
    if (!seen_header) syntax(line_no, "missing 'tri 1' header");
    if (tets < 0) syntax(line_no, "missing 'tets' line");
    for (int t = 0; t < tets; ++t) {
        for (int f = 0; f < 4; ++f) {
            if (!specified[t][f]) {
                throw Error(ErrorCode::GluingError,
                            "tet " + std::to_string(t) + " face " + std::to_string(f) + " is neither glued nor bdry");
            }
        }
    }
    return Triangulation(tets, std::move(gluings));
}

}  // namespace cylcert
