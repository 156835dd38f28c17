// Command line front end. Complexes travel between subcommands as .cxc
// files ("-" reads stdin / writes stdout), flag systems as .cxf.
//
// Exit codes: 0 success, 1 failed check or construction error, 2 usage.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <cellforge.hpp>

using namespace cellforge;
using nlohmann::json;

namespace {

Complex load_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return read_cxc(os.str());
    }
    return read_cxc(load_file(path));
}

void emit(const std::string& path, const std::string& data) {
    if (path == "-")
        std::cout << data;
    else
        save_file(path, data);
}

std::string hash_hex(const std::string& data) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(data)));
    return buf;
}

// Builder names understood by `build` and pipeline build steps. barrel-I and
// layered-I take their size from the suffix.
Complex make_named(const std::string& name) {
    if (name == "dodecahedron") return dodecahedron();
    if (name == "cube") return cube();
    if (name == "tetrahedron") return tetrahedron_surface();
    if (name == "f26") return f26();
    if (name == "f28") return f28_td();
    if (name == "f32") return f32_d3d();
    if (name == "120-cell") return build_120cell().cx;
    if (name == "600-cell") return build_600cell().cx;
    if (name == "simplex4-boundary") return simplex4_boundary();
    if (name == "heawood") return heawood_torus();
    if (name == "klein-k333") return klein_k333();
    auto suffix = [&](const std::string& prefix) -> std::optional<int> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        try {
            std::size_t pos = 0;
            int v = std::stoi(name.substr(prefix.size()), &pos);
            if (pos != name.size() - prefix.size()) return std::nullopt;
            return v;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    };
    if (auto i = suffix("barrel-")) return barrel(*i);
    if (auto i = suffix("layered-")) return layered_dodecahedron(*i);
    throw Error("unknown solid '" + name +
                "' (try: dodecahedron, cube, tetrahedron, barrel-I, layered-I, f26, f28, "
                "f32, 120-cell, 600-cell, simplex4-boundary, heawood, klein-k333)");
}

Complex chain_named(const std::string& kind, int n) {
    if (kind == "dodecahedra") return chain_dodecahedra(n);
    if (kind == "120-cells") return chain_120cells(n);
    throw Error("unknown chain kind '" + kind + "' (dodecahedra or 120-cells)");
}

// Vertex map for glue2 from the two facet cycles: position i of the first
// cycle meets position turn - i (flipped) or turn + i of the second.
std::map<int, int> cycle_vmap(const Complex& a, int fa, const Complex& b, int fb, int turn,
                              bool flip) {
    auto ca = face_vertex_cycle(a, fa);
    auto cb = face_vertex_cycle(b, fb);
    if (ca.size() != cb.size()) throw Error("facets have different sizes");
    const int n = static_cast<int>(ca.size());
    std::map<int, int> m;
    for (int i = 0; i < n; ++i) m[ca[i]] = cb[posmod(flip ? turn - i : turn + i, n)];
    return m;
}

std::map<int, int> read_vertex_map(const std::string& path) {
    std::istringstream is(load_file(path));
    std::map<int, int> m;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = detail::tokenize_line(line);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw Error("map line " + std::to_string(lineno) + ": expected '<vA> <vB>'");
        m[detail::parse_int(toks[0], lineno, "vertex")] =
            detail::parse_int(toks[1], lineno, "vertex");
    }
    return m;
}

std::map<std::pair<int, int>, int> read_pairing(const std::string& path) {
    std::istringstream is(load_file(path));
    std::map<std::pair<int, int>, int> tw;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = detail::tokenize_line(line);
        if (toks.empty()) continue;
        if (toks.size() != 4 || toks[0] != "pair")
            throw Error("pairing line " + std::to_string(lineno) + ": expected 'pair <fA> <fB> <t>'");
        int fa = detail::parse_int(toks[1], lineno, "face");
        int fb = detail::parse_int(toks[2], lineno, "face");
        int t = detail::parse_int(toks[3], lineno, "twist");
        tw[{fa, fb}] = t;
    }
    return tw;
}

std::vector<int> discover_antipodal(const Complex& cx) {
    if (cx.dim != 2) throw Error("antipodal maps act on polyhedral surfaces (rank 2)");
    auto sigmas = antipodal_involutions(cx);
    if (sigmas.empty()) throw Error("no antipodal involution: the solid is not centrally symmetric");
    if (sigmas.size() > 1)
        throw Error("antipodal involution is not unique (" + std::to_string(sigmas.size()) +
                    " found); pass one explicitly");
    return sigmas[0];
}

json census_json(const Complex& cx) {
    json rows = json::array();
    for (const auto& e : census_cells(cx).entries) {
        rows.push_back({{"name", e.name}, {"count", e.count}, {"f_vector", e.fv.counts}});
    }
    return rows;
}

void print_census(const Complex& cx) {
    CensusReport rep = census_cells(cx);
    std::printf("%lld cells\n", rep.total);
    for (const auto& e : rep.entries)
        std::printf("%8lld  %-12s %s\n", e.count, e.name.c_str(), e.fv.str().c_str());
}

json classify_json(const Complex& cx) {
    json out;
    FVector fv = f_vector(cx);
    out["f_vector"] = fv.counts;
    if (cx.dim == 2) {
        SurfaceReport rep = classify_surface(cx);
        out["surface"] = rep.name();
        out["euler_characteristic"] = rep.chi;
        out["orientable"] = rep.orientable;
        out["pentagons"] = rep.p5;
        out["hexagons"] = rep.p6;
    } else {
        IdentityReport rep = check_identities(cx);
        out["euler_characteristic"] = euler_characteristic(cx);
        out["is_fullerene"] = is_fullerene(cx);
        out["identities"] = {{"edges_twice_vertices", rep.edges_twice_vertices},
                             {"faces_vertices_cells", rep.faces_vertices_cells},
                             {"pentagons_six_cells", rep.pentagons_six_cells},
                             {"euler_zero", rep.euler_zero},
                             {"gonalities_56", rep.gonalities_56}};
        out["census"] = census_json(cx);
    }
    return out;
}

void print_classify(const Complex& cx) {
    if (cx.dim == 2) {
        SurfaceReport rep = classify_surface(cx);
        std::printf("surface %s  chi=%lld  orientable=%s  p5=%lld  p6=%lld\n",
                    rep.name().c_str(), rep.chi, rep.orientable ? "yes" : "no", rep.p5, rep.p6);
    } else {
        std::printf("solid %s  fullerene=%s\n", f_vector(cx).str().c_str(),
                    is_fullerene(cx) ? "yes" : "no");
        std::printf("%s\n", check_identities(cx).str().c_str());
        print_census(cx);
    }
}

std::string export_text(const Complex& cx, const std::string& format) {
    if (format == "cxc") return write_cxc(cx);
    if (format == "cxf") return write_cxf(to_flags(cx));
    std::ostringstream os;
    if (format == "edges") {
        os << "# " << cx.count(0) << " vertices, " << cx.count(1) << " edges\n";
        for (const auto& e : cx.cells[1]) os << e[0] << " " << e[1] << "\n";
        return os.str();
    }
    if (format == "faces") {
        os << "# " << cx.count(2) << " faces, vertex cycles\n";
        for (int f = 0; f < cx.count(2); ++f) {
            auto cyc = face_vertex_cycle(cx, f);
            for (std::size_t i = 0; i < cyc.size(); ++i) os << (i ? " " : "") << cyc[i];
            os << "\n";
        }
        return os.str();
    }
    throw Error("unknown format '" + format + "' (cxc, cxf, edges, faces)");
}

// Twist expressed as tenths of a full turn between the paired pentagons;
// only these three occur for pentagonal faces.
int twist_of_turn(int tenth) {
    switch (tenth) {
        case 1: return 2;
        case 3: return 1;
        case 5: return 0;
        default: throw Error("turn must be 1, 3, or 5 (tenths of a full rotation)");
    }
}

int run_quotient(const Complex& cx, std::optional<int> twist, std::optional<int> turn,
                 const std::string& pairing_path, const std::string& out) {
    auto sigma = discover_antipodal(cx);
    FlagSystem fs;
    if (!pairing_path.empty()) {
        fs = solid_pairing_quotient(cx, sigma, read_pairing(pairing_path));
    } else {
        int t = twist ? *twist : twist_of_turn(turn ? *turn : 1);
        fs = solid_pairing_quotient(cx, sigma, t);
    }
    auto fv = flag_fvector(fs);
    std::printf("orbits (");
    for (std::size_t i = 0; i < fv.size(); ++i) std::printf("%s%lld", i ? ", " : "", fv[i]);
    std::printf(")  chi=%lld  orientable=%s\n", flag_euler_characteristic(fs),
                flag_orientable(fs) ? "yes" : "no");
    try {
        from_flags(fs);
        std::printf("quotient is a regular incidence complex\n");
    } catch (const NonRegularError& e) {
        std::printf("%s\n", e.what());
    }
    if (!out.empty()) emit(out, write_cxf(fs));
    return 0;
}

int run_pipeline(const std::string& manifest_path) {
    json manifest = json::parse(load_file(manifest_path));
    if (!manifest.contains("steps") || !manifest["steps"].is_array())
        throw Error("pipeline manifest needs a 'steps' array");
    int step_no = 0;
    for (const auto& step : manifest["steps"]) {
        ++step_no;
        const std::string op = step.value("op", "");
        auto arg = [&](const char* key) -> std::string {
            if (!step.contains(key))
                throw Error("step " + std::to_string(step_no) + " (" + op + "): missing '" +
                            key + "'");
            return step[key].get<std::string>();
        };
        std::optional<Complex> result;
        if (op == "build") {
            result = make_named(arg("name"));
        } else if (op == "chain") {
            result = chain_named(arg("kind"), step.value("n", 2));
        } else if (op == "glue") {
            Complex a = load_input(arg("a"));
            Complex b = load_input(arg("b"));
            if (a.dim != 2 || b.dim != 2)
                throw Error("step " + std::to_string(step_no) + ": pipeline glue joins surfaces");
            int fa = step.value("facet_a", 0), fb = step.value("facet_b", 0);
            result = glue2(a, fa, b, fb,
                           cycle_vmap(a, fa, b, fb, step.value("turn", 0),
                                      step.value("flip", true)))
                         .cx;
        } else if (op == "corona") {
            result = corona(load_input(arg("in")));
        } else if (op == "thicken") {
            Complex cur = load_input(arg("in"));
            for (int r = step.value("rounds", 1); r > 0; --r) cur = subdivide_thicken(cur);
            result = std::move(cur);
        } else if (op == "fold") {
            Complex cur = load_input(arg("in"));
            result = fold(cur, discover_antipodal(cur));
        } else if (op == "census") {
            print_census(load_input(arg("in")));
        } else if (op == "classify") {
            print_classify(load_input(arg("in")));
        } else if (op == "validate") {
            Complex cur = load_input(arg("in"));
            auto bad = validate_simple_closed(cur);
            for (const auto& msg : bad) std::fprintf(stderr, "%s\n", msg.c_str());
            if (!bad.empty()) return 1;
        } else {
            throw Error("step " + std::to_string(step_no) + ": unknown op '" + op + "'");
        }
        if (result) {
            std::string text = write_cxc(*result);
            std::string digest = hash_hex(text);
            if (step.contains("out")) emit(step["out"].get<std::string>(), text);
            std::printf("step %d %s %s %s\n", step_no, op.c_str(), digest.c_str(),
                        f_vector(*result).str().c_str());
            if (step.contains("expect") && step["expect"].get<std::string>() != digest) {
                std::fprintf(stderr, "step %d: hash mismatch (expected %s, got %s)\n", step_no,
                             step["expect"].get<std::string>().c_str(), digest.c_str());
                return 1;
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction kit for pentagon-hexagon cell complexes"};
    app.require_subcommand(1);

    std::string in_path = "-", out_path = "-", aux_path, name, kind, format = "cxc";
    std::string map_path, pairing_path, manifest_path, scheme = "flg1";
    int n = 2, facet_a = 0, facet_b = 0, turn_i = 0, rounds = 1;
    bool flip = true, as_json = false, do_validate = false;
    std::optional<int> twist, turn;

    auto* c_build = app.add_subcommand("build", "construct a named solid or lattice quotient");
    c_build->add_option("name", name, "solid name, e.g. dodecahedron or barrel-6")->required();
    c_build->add_option("-o,--out", out_path, "output .cxc (default stdout)");

    auto* c_chain = app.add_subcommand("chain", "fuse n copies in a row");
    c_chain->add_option("kind", kind, "dodecahedra or 120-cells")->required();
    c_chain->add_option("n", n, "number of copies")->check(CLI::PositiveNumber)->required();
    c_chain->add_option("-o,--out", out_path, "output .cxc");

    auto* c_glue = app.add_subcommand("glue", "join two complexes along a facet");
    c_glue->add_option("a", in_path, "first .cxc")->required();
    c_glue->add_option("facet_a", facet_a, "facet id in the first complex")->required();
    c_glue->add_option("b", aux_path, "second .cxc")->required();
    c_glue->add_option("facet_b", facet_b, "facet id in the second complex")->required();
    c_glue->add_option("--turn", turn_i, "rotate the facet alignment (surfaces)");
    c_glue->add_flag("--no-flip", "keep both facet cycles running the same way (surfaces)");
    c_glue->add_option("--map", map_path, "vertex map file with '<vA> <vB>' lines (solids)");
    c_glue->add_option("-o,--out", out_path, "output .cxc");

    auto* c_corona = app.add_subcommand("corona", "wrap a surface in a shell of cells");
    c_corona->add_option("in", in_path, "input .cxc")->required();
    c_corona->add_option("-o,--out", out_path, "output .cxc");

    auto* c_thicken = app.add_subcommand("thicken", "subdivide the dual and thicken back");
    c_thicken->add_option("in", in_path, "input .cxc")->required();
    c_thicken->add_option("--rounds", rounds, "number of rounds")->check(CLI::PositiveNumber);
    c_thicken->add_option("-o,--out", out_path, "output .cxc");

    auto* c_quot = app.add_subcommand("quotient",
                                      "glue antipodal faces of a centrally symmetric solid");
    c_quot->add_option("in", in_path, "input .cxc")->required();
    auto* o_twist = c_quot->add_option("--twist", twist, "cyclic offset applied to every face pair");
    auto* o_turn = c_quot->add_option("--turn", turn, "the same, in tenths of a turn: 1, 3, or 5");
    auto* o_pairing =
        c_quot->add_option("--pairing", pairing_path, "per-pair twists: 'pair <fA> <fB> <t>' lines");
    o_twist->excludes(o_turn)->excludes(o_pairing);
    o_turn->excludes(o_pairing);
    c_quot->add_option("-o,--out", out_path, "output .cxf (flag system)");

    auto* c_fold = app.add_subcommand("fold", "identify antipodal points of a surface");
    c_fold->add_option("in", in_path, "input .cxc")->required();
    c_fold->add_option("-o,--out", out_path, "output .cxc");

    auto* c_census = app.add_subcommand("census", "count cells of a solid by isomorphism type");
    c_census->add_option("in", in_path, "input .cxc")->required();
    c_census->add_flag("--json", as_json, "machine readable output");

    auto* c_classify = app.add_subcommand("classify", "identify a surface or check a solid");
    c_classify->add_option("in", in_path, "input .cxc")->required();
    c_classify->add_flag("--json", as_json, "machine readable output");

    auto* c_validate = app.add_subcommand("validate", "check closedness and local structure");
    c_validate->add_option("in", in_path, "input .cxc")->required();

    auto* c_cert = app.add_subcommand("cert", "isomorphism certificate digest");
    c_cert->add_option("in", in_path, "input .cxc")->required();
    c_cert->add_option("--scheme", scheme, "flg1 (any rank) or sfc1 (surfaces)")
        ->check(CLI::IsMember({"flg1", "sfc1"}));

    auto* c_export = app.add_subcommand("export", "re-serialize a complex");
    c_export->add_option("in", in_path, "input .cxc")->required();
    c_export->add_option("--format", format, "cxc, cxf, edges, or faces")
        ->check(CLI::IsMember({"cxc", "cxf", "edges", "faces"}));
    c_export->add_flag("--validate", do_validate, "refuse to export a defective complex");
    c_export->add_option("-o,--out", out_path, "output file");

    auto* c_pipe = app.add_subcommand("pipeline", "run a JSON manifest of build steps");
    c_pipe->add_option("manifest", manifest_path, "manifest .json")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*c_build) {
            emit(out_path, write_cxc(make_named(name)));
        } else if (*c_chain) {
            emit(out_path, write_cxc(chain_named(kind, n)));
        } else if (*c_glue) {
            Complex a = load_input(in_path);
            Complex b = load_input(aux_path);
            if (a.dim != b.dim) throw Error("glue: inputs have different ranks");
            if (a.dim == 2) {
                flip = c_glue->count("--no-flip") == 0;
                auto vmap = cycle_vmap(a, facet_a, b, facet_b, turn_i, flip);
                emit(out_path, write_cxc(glue2(a, facet_a, b, facet_b, vmap).cx));
            } else {
                if (map_path.empty()) throw Error("glue: solids need --map <file>");
                emit(out_path, write_cxc(glue3(a, facet_a, b, facet_b,
                                               read_vertex_map(map_path))
                                             .cx));
            }
        } else if (*c_corona) {
            emit(out_path, write_cxc(corona(load_input(in_path))));
        } else if (*c_thicken) {
            Complex cur = load_input(in_path);
            for (int r = 0; r < rounds; ++r) cur = subdivide_thicken(cur);
            emit(out_path, write_cxc(cur));
        } else if (*c_quot) {
            std::string out = c_quot->count("--out") ? out_path : "";
            return run_quotient(load_input(in_path), twist, turn, pairing_path, out);
        } else if (*c_fold) {
            Complex cur = load_input(in_path);
            emit(out_path, write_cxc(fold(cur, discover_antipodal(cur))));
        } else if (*c_census) {
            Complex cur = load_input(in_path);
            if (as_json)
                std::cout << census_json(cur).dump(2) << "\n";
            else
                print_census(cur);
        } else if (*c_classify) {
            Complex cur = load_input(in_path);
            if (as_json)
                std::cout << classify_json(cur).dump(2) << "\n";
            else
                print_classify(cur);
        } else if (*c_validate) {
            Complex cur = load_input(in_path);
            auto bad = validate_simple_closed(cur);
            for (const auto& msg : bad) std::printf("%s\n", msg.c_str());
            std::printf("%s: %zu violations\n", bad.empty() ? "ok" : "defective", bad.size());
            return bad.empty() ? 0 : 1;
        } else if (*c_cert) {
            Complex cur = load_input(in_path);
            Certificate cert =
                (scheme == "sfc1") ? certificate_surface(cur) : certificate(cur);
            std::printf("%s %s\n", cert.scheme.c_str(), hash_hex(cert.bytes()).c_str());
        } else if (*c_export) {
            Complex cur = load_input(in_path);
            if (do_validate) {
                auto bad = validate_simple_closed(cur);
                if (!bad.empty()) throw Error("export: " + bad[0]);
            }
            emit(out_path, export_text(cur, format));
        } else if (*c_pipe) {
            return run_pipeline(manifest_path);
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
