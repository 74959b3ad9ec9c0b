#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cylcert/certificate.hpp"
#include "cylcert/coloring.hpp"
#include "cylcert/error.hpp"
#include "cylcert/face_complex.hpp"
#include "cylcert/instance_gen.hpp"
#include "cylcert/pants_pipeline.hpp"

using namespace cylcert;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNoConstruction = 2;
constexpr int kVerifyFailed = 3;
constexpr int kUsage = 64;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string tri_path, surf_path, cert_path, out_path;
    std::uint64_t seed = 1;
    bool force = false;
    bool trace = false;
    // gen
    std::string name;
    std::int64_t bound = 3;
    std::int64_t target_genus = 0;
    bool pool = false;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

void emit(const RunConfig& cfg, const json& j) {
    const std::string text = canonical_dump(j);
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        write_text(cfg.out_path, text);
        std::cerr << "wrote " << cfg.out_path << "\n";
    }
}

struct Input {
    Triangulation tri;
    NormalCoordinates q;
};

Input load(const RunConfig& cfg) {
    Triangulation tri = parse_triangulation(slurp(cfg.tri_path));
    NormalCoordinates q = parse_surface(slurp(cfg.surf_path), tri.tet_count());
    return {std::move(tri), std::move(q)};
}

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::SyntaxError:
        case ErrorCode::GluingError:
        case ErrorCode::CountMismatch:
        case ErrorCode::LengthMismatch:
        case ErrorCode::EmptySurface:
        case ErrorCode::InvalidCoordinates:
        case ErrorCode::QuadIncompatible:
        case ErrorCode::NotClosed:
        case ErrorCode::NonOrientableAmbient:
        case ErrorCode::OneSided:
        case ErrorCode::PerComponentOnly:
            return kInputError;
        default:
            return kNoConstruction;
    }
}

json paths_json(const std::vector<GPath>& paths) {
    json out = json::array();
    for (const auto& p : paths) out.push_back({{"edges", p.edges}, {"closed", p.closed}});
    return out;
}

json trace_json(const PipelineTrace& tr) {
    json stages = json::array();
    for (const auto& s : tr.stages) stages.push_back({{"name", s.name}, {"euler", s.euler}, {"boundary", s.boundary}});
    json out = {{"threshold_met", tr.threshold_met},
                {"unused_guarantees", tr.unused_guarantees},
                {"stages", stages},
                {"gamma1", paths_json(tr.gamma1)},
                {"delta1_disks", tr.delta1.size()},
                {"epsilon", paths_json(tr.epsilon)},
                {"gamma2", paths_json(tr.gamma2)}};
    if (tr.essential_color) out["essential_color"] = std::string(1, color_letter(*tr.essential_color));
    if (tr.x) {
        out["x_graph"] = tr.x_graph;
        out["x_cells"] = tr.x->cells();
    }
    return out;
}

void log_stages(const PipelineTrace& tr) {
    for (const auto& s : tr.stages) {
        std::cerr << s.name << ": chi " << s.euler << ", boundary " << s.boundary << "\n";
    }
}

int cmd_validate(const RunConfig& cfg) {
    const Input in = load(cfg);
    const ValidationReport r = validate_coordinates(in.tri, in.q);
    json matching = json::array();
    for (const auto& m : r.matching) {
        matching.push_back({{"tet", m.tet}, {"face", m.face}, {"vertex", m.vertex}, {"here", m.here}, {"there", m.there}});
    }
    emit(cfg, {{"valid", r.valid()}, {"matching_violations", matching}, {"quad_violations", r.quad_violations}});
    return r.valid() ? kOk : kInputError;
}

int cmd_analyze(const RunConfig& cfg) {
    const Input in = load(cfg);
    const FaceComplex fc = build_face_complex(in.tri, in.q);
    const SurfaceStats& st = fc.stats();
    int kinds[3] = {0, 0, 0};
    for (const auto& f : fc.faces()) ++kinds[static_cast<int>(f.kind)];
    json out = {{"euler", st.euler},
                {"euler_from_coordinates", euler_from_coordinates(in.tri, in.q)},
                {"components", st.components},
                {"orientable", st.orientable},
                {"component_euler", st.component_euler},
                {"component_genus", st.component_genus},
                {"faces", fc.face_count()},
                {"truncated_triangles", kinds[0]},
                {"truncated_quads", kinds[1]},
                {"vertex_disks", kinds[2]},
                {"g_vertices", fc.graph().vertex_count()},
                {"g_edges", fc.graph().edge_count()},
                {"t", in.tri.tet_count()}};
    out["genus"] = st.genus ? json(*st.genus) : json(nullptr);
    emit(cfg, out);
    return kOk;
}

json bounds_json(const BoundsReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"observed", c.observed},
                          {"threshold", c.threshold},
                          {"relation", c.relation},
                          {"pass", c.pass}});
    }
    return {{"checks", checks}, {"genus_checks", r.genus_checks}, {"all_pass", r.all_pass()}};
}

int cmd_color(const RunConfig& cfg) {
    const Input in = load(cfg);
    const FaceComplex fc = build_face_complex(in.tri, in.q);
    const Coloring raw = color_faces(fc);
    const Coloring c = normalize_swap(fc, raw);
    const CheckResult disks = verify_red_vertex_disks(fc, c);
    const BoundsReport bounds = check_bounds(fc, c, in.tri);
    emit(cfg, {{"colors", c.letters()},
               {"swapped", c.swapped},
               {"v", c.v_all.size()},
               {"v_plus", c.v_plus.size()},
               {"v_minus", c.v_minus.size()},
               {"red_vertex_disks_ok", {{"pass", disks.pass}, {"faces", disks.faces}, {"messages", disks.messages}}},
               {"bounds", bounds_json(bounds)}});
    return disks.pass && bounds.all_pass() ? kOk : kNoConstruction;
}

int cmd_bounds(const RunConfig& cfg) {
    const Input in = load(cfg);
    const FaceComplex fc = build_face_complex(in.tri, in.q);
    const BoundsReport r = check_bounds(fc, normalize_swap(fc, color_faces(fc)), in.tri);
    emit(cfg, bounds_json(r));
    return r.all_pass() ? kOk : kNoConstruction;
}

int cmd_construct(const RunConfig& cfg) {
    const Input in = load(cfg);
    const FaceComplex fc = build_face_complex(in.tri, in.q);
    const Coloring c = normalize_swap(fc, color_faces(fc));
    const PipelineTrace tr = construct_pants(fc, c, {cfg.force});
    if (cfg.trace) log_stages(tr);
    emit(cfg, trace_json(tr));
    return kOk;
}

int cmd_certify(const RunConfig& cfg) {
    const Input in = load(cfg);
    const FaceComplex fc = build_face_complex(in.tri, in.q);
    PipelineTrace tr;
    const Certificate cert = certify(in.tri, in.q, fc, {cfg.force}, &tr);
    if (cfg.trace) log_stages(tr);
    emit(cfg, certificate_json(cert));
    return kOk;
}

int cmd_verify(const RunConfig& cfg) {
    const Input in = load(cfg);
    json cert;
    VerifyResult r;
    try {
        cert = json::parse(slurp(cfg.cert_path));
        r = verify_certificate(cert, in.tri, in.q);
    } catch (const json::exception& e) {
        r.ok = false;
        r.diagnostics = {std::string("certificate is not valid JSON: ") + e.what()};
    }
    for (const auto& d : r.diagnostics) std::cerr << d << "\n";
    emit(cfg, {{"ok", r.ok}, {"diagnostics", r.diagnostics}});
    return r.ok ? kOk : kVerifyFailed;
}

int cmd_gen(const RunConfig& cfg) {
    std::vector<NormalCoordinates> pool;
    const Triangulation tri = [&] {
        if (cfg.name.rfind("random:", 0) == 0) {
            int n = 0;
            try {
                n = std::stoi(cfg.name.substr(7));
            } catch (const std::exception&) {
                throw InputError("bad tetrahedron count in " + cfg.name);
            }
            return random_triangulation(n, cfg.seed);
        }
        for (const auto& e : catalog()) {
            if (e.name != cfg.name) continue;
            pool = e.pool;
            return parse_triangulation(e.triangulation);
        }
        throw InputError("unknown catalog entry " + cfg.name);
    }();

    NormalCoordinates q;
    json info = {{"name", cfg.name}, {"seed", cfg.seed}};
    if (cfg.target_genus > 0) {
        const auto r = high_genus_search(tri, cfg.target_genus, 200, cfg.seed);
        if (!r) throw Error(ErrorCode::SearchExhausted, "no component of the target genus within the budget");
        q = r->component_coords;
        info["genus"] = r->genus;
    } else if (cfg.pool) {
        if (pool.empty()) throw InputError("catalog entry " + cfg.name + " has no surface pool");
        const auto parts = pool_combination(tri, pool, cfg.seed, 4, cfg.bound);
        if (parts.empty()) throw Error(ErrorCode::SearchExhausted, "combination has no component of negative chi");
        q = parts.front();
    } else {
        q = random_surface(tri, cfg.seed, cfg.bound);
    }
    const std::string prefix = cfg.out_path.empty() ? "instance" : cfg.out_path;
    write_text(prefix + ".tri", tri.serialize());
    write_text(prefix + ".surf", q.serialize());
    info["triangulation"] = prefix + ".tri";
    info["surface"] = prefix + ".surf";
    std::cout << canonical_dump(info);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normal surface cylinder certificates"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_io = [&](CLI::App* sub, bool cert) {
        sub->add_option("triangulation", cfg.tri_path, "triangulation file")->required();
        sub->add_option("surface", cfg.surf_path, "surface file")->required();
        if (cert) sub->add_option("certificate", cfg.cert_path, "certificate JSON")->required();
        sub->add_option("--out,-o", cfg.out_path, "output path (default: standard output)");
        sub->add_option("--seed", cfg.seed, "random seed (CYLCERT_SEED overrides)");
    };
    auto* validate = app.add_subcommand("validate", "check matching equations and quad compatibility");
    auto* analyze = app.add_subcommand("analyze", "surface statistics");
    auto* color = app.add_subcommand("color", "colouring and counting bounds");
    auto* bounds = app.add_subcommand("bounds", "counting bounds only");
    auto* construct = app.add_subcommand("construct", "pipeline trace up to the pair of pants");
    auto* certify_cmd = app.add_subcommand("certify", "full run producing a certificate");
    auto* verify = app.add_subcommand("verify", "check a certificate");
    auto* gen = app.add_subcommand("gen", "generate an instance");
    for (auto* sub : {validate, analyze, color, bounds, construct, certify_cmd}) add_io(sub, false);
    add_io(verify, true);
    for (auto* sub : {construct, certify_cmd}) {
        sub->add_flag("--force", cfg.force, "run below the genus threshold");
        sub->add_flag("--trace", cfg.trace, "log stage records to standard error");
    }
    gen->add_option("--name", cfg.name, "catalog entry, or random:N for N tetrahedra")->required();
    gen->add_option("--seed", cfg.seed, "random seed (CYLCERT_SEED overrides)");
    gen->add_option("--bound", cfg.bound, "coordinate bound, or largest multiplicity with --pool");
    gen->add_option("--target-genus", cfg.target_genus, "search Haken sums for a component of this genus");
    gen->add_flag("--pool", cfg.pool, "combine surfaces from the entry's vertex-surface pool");
    gen->add_option("--out,-o", cfg.out_path, "output prefix for .tri and .surf (default: instance)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kUsage;
    }
    if (const char* env = std::getenv("CYLCERT_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "CYLCERT_SEED is not an unsigned integer\n";
            return kUsage;
        }
    }

    try {
        if (*validate) return cmd_validate(cfg);
        if (*analyze) return cmd_analyze(cfg);
        if (*color) return cmd_color(cfg);
        if (*bounds) return cmd_bounds(cfg);
        if (*construct) return cmd_construct(cfg);
        if (*certify_cmd) return cmd_certify(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*gen) return cmd_gen(cfg);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    }
    return kUsage;
}
