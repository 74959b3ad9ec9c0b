#include "cylcert/normal_surface.hpp"

#include <algorithm>
#include <sstream>

#include "cylcert/error.hpp"

namespace cylcert {

int quad_pairing(int v, int w) {
    if (v == 0) return w;
    if (w == 0) return v;
    return 6 - v - w;
}

bool quad_separates(int q, int a, int b) { return quad_pairing(a, b) != q; }

int NormalCoordinates::quad_type(int tet) const {
    for (int q = 1; q <= 3; ++q) {
        if (quad(tet, q) != 0) return q;
    }
    return 0;
}

std::int64_t NormalCoordinates::arc_count(int tet, int face, int v) const {
    return tri(tet, v) + quad(tet, quad_pairing(face, v));
}

std::int64_t NormalCoordinates::edge_weight(int tet, int a, int b) const {
    std::int64_t w = tri(tet, a) + tri(tet, b);
    for (int q = 1; q <= 3; ++q) {
        if (quad_separates(q, a, b)) w += quad(tet, q);
    }
    return w;
}

std::int64_t NormalCoordinates::disk_count() const {
    std::int64_t n = 0;
    for (auto v : values_) n += v;
    return n;
}

bool NormalCoordinates::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](std::int64_t v) { return v == 0; });
}

NormalCoordinates NormalCoordinates::scaled(std::int64_t k) const {
    auto v = values_;
    for (auto& x : v) x *= k;
    return NormalCoordinates(std::move(v));
}

std::string NormalCoordinates::serialize() const {
    std::ostringstream out;
    out << "surf\n";
    for (int t = 0; t < tet_count(); ++t) {
        for (int i = 0; i < 7; ++i) out << (i ? " " : "") << values_[7 * t + i];
        out << '\n';
    }
    return out.str();
}

NormalCoordinates parse_surface(std::string_view text, int tet_count) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::int64_t> values;
    bool header = false;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        for (std::string tok; ls >> tok;) {
            if (!header) {
                if (tok != "surf") throw Error(ErrorCode::SyntaxError, "expected 'surf' header");
                header = true;
                continue;
            }
            if (tok.empty() || tok.size() > 15 ||
                !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
                throw Error(ErrorCode::SyntaxError, "coordinate '" + tok + "' is not a nonnegative integer");
            }
            values.push_back(std::stoll(tok));
        }
    }
    if (!header) throw Error(ErrorCode::SyntaxError, "missing 'surf' header");
    if (values.size() != static_cast<std::size_t>(7 * tet_count)) {
        throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(7 * tet_count) + " coordinates, got " +
                                                   std::to_string(values.size()));
    }
    return NormalCoordinates(std::move(values));
}

ValidationReport validate_coordinates(const Triangulation& tri, const NormalCoordinates& q) {
    if (q.size() != static_cast<std::size_t>(7 * tri.tet_count())) {
        throw Error(ErrorCode::LengthMismatch, "coordinate vector length differs from 7 * tet_count");
    }
    if (q.is_zero()) throw Error(ErrorCode::EmptySurface, "all coordinates are zero");

    ValidationReport report;
    for (int t = 0; t < tri.tet_count(); ++t) {
        int types = 0;
        for (int k = 1; k <= 3; ++k) types += q.quad(t, k) != 0;
        if (types > 1) report.quad_violations.push_back(t);
    }
    for (int t = 0; t < tri.tet_count(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (!g || std::pair(g->tet, g->face) < std::pair(t, f)) continue;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                const auto here = q.arc_count(t, f, v);
                const auto there = q.arc_count(g->tet, g->face, g->perm[v]);
                if (here != there) report.matching.push_back({t, f, v, here, there});
            }
        }
    }
    return report;
}

std::int64_t euler_from_coordinates(const Triangulation& tri, const NormalCoordinates& q) {
    ValidationReport report;
    try {
        report = validate_coordinates(tri, q);
    } catch (const Error& e) {
        throw Error(ErrorCode::InvalidCoordinates, e.what());
    }
    if (!report.valid()) throw Error(ErrorCode::InvalidCoordinates, "matching equations or quad condition violated");

    std::int64_t points = 0;
    for (const auto& cls : tri.edge_classes()) {
        const auto& in = cls.cycle.front();
        points += q.edge_weight(in.tet, in.a, in.b);
    }
    std::int64_t arcs = 0;
    for (int t = 0; t < tri.tet_count(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (g && std::pair(g->tet, g->face) < std::pair(t, f)) continue;
            for (int v = 0; v < 4; ++v) {
                if (v != f) arcs += q.arc_count(t, f, v);
            }
        }
    }
    return points - arcs + q.disk_count();
}

NormalCoordinates haken_sum(const NormalCoordinates& a, const NormalCoordinates& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "summands have different lengths");
    for (int t = 0; t < a.tet_count(); ++t) {
        const int qa = a.quad_type(t);
        const int qb = b.quad_type(t);
        if (qa != 0 && qb != 0 && qa != qb) {
            throw Error(ErrorCode::QuadIncompatible, "tetrahedron " + std::to_string(t) + " carries two quad types");
        }
    }
    auto v = a.values();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values()[i];
    return NormalCoordinates(std::move(v));
}

}  // namespace cylcert
