#include "circdiam/cli.hpp"

#include "circdiam/catalog.hpp"
#include "circdiam/circuits.hpp"
#include "circdiam/hrep_io.hpp"
#include "circdiam/vertices.hpp"
#include "circdiam/walks.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <stdexcept>

namespace circdiam {

using nlohmann::json;

namespace {

// Errors that map to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

HPolyhedron load(const std::string& ref) {
    try {
        return load_instance(ref);
    } catch (const ParseError& e) {
        throw InputError(ref + ": " + e.what());
    } catch (const UnknownInstance& e) {
        throw InputError(e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(ref + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw InputError(e.what());
    }
}

std::size_t resolve_label(const Skeleton& s, const std::string& label) {
    if (auto idx = s.find(label)) return *idx;
    throw InputError("unknown vertex label '" + label + "'");
}

json rationals(const QVector& v) {
    json arr = json::array();
    for (const auto& q : v) arr.push_back(to_string(q));
    return arr;
}

json vertex_json(const Vertex& v) { return {{"label", v.label}, {"coords", rationals(v.coords)}, {"tight", v.tight}}; }

std::string opt_to_string(const std::optional<std::size_t>& d, std::size_t max_depth) {
    return d ? std::to_string(*d) : "> " + std::to_string(max_depth);
}

json opt_json(const std::optional<std::size_t>& d) { return d ? json(*d) : json(nullptr); }

struct Options {
    std::string instance;
    std::string second;
    std::string mode = "circuit";
    std::size_t max_depth = kDefaultMaxDepth;
    bool json = false;
    std::string emit_cert;
    std::string from, to;
};

int cmd_report(const Options& o, std::ostream& out) {
    const Report r = make_report(o.instance, o.max_depth);
    if (o.json) {
        out << to_json(r).dump(2) << "\n";
        return exit_code::ok;
    }
    auto flag = [](std::optional<bool> b) { return b ? (*b ? "yes" : "no") : "unknown"; };
    out << "instance          " << r.instance << "\n"
        << "dimension         " << r.dim << "\n"
        << "facets            " << r.facets << "\n"
        << "vertices          " << r.vertices << "\n"
        << "edges             " << r.edges << "\n"
        << "bounded           " << (r.bounded ? "yes" : "no") << "\n"
        << "graph diameter    " << r.graph_diameter << "\n"
        << "circuit diameter  " << opt_to_string(r.circuit_diameter, r.max_depth) << " (max depth " << r.max_depth
        << ")\n"
        << "hirsch bound      " << r.hirsch_bound << "\n"
        << "graph hirsch      " << (r.graph_hirsch_satisfied ? "yes" : "no") << "\n"
        << "circuit hirsch    " << flag(r.circuit_hirsch_satisfied) << "\n";
    return exit_code::ok;
}

int cmd_vertices(const Options& o, std::ostream& out) {
    const auto vertices = enumerate_vertices(load(o.instance));
    if (o.json) {
        json arr = json::array();
        for (const auto& v : vertices) arr.push_back(vertex_json(v));
        out << arr.dump(2) << "\n";
        return exit_code::ok;
    }
    for (const auto& v : vertices) out << v.label << " " << to_string(v.coords) << "\n";
    return exit_code::ok;
}

int cmd_circuits(const Options& o, std::ostream& out) {
    const auto circuits = enumerate_circuits(load(o.instance));
    if (o.json) {
        json arr = json::array();
        for (const auto& c : circuits.canonical()) {
            json dir = json::array();
            for (const auto& z : c.direction.components()) dir.push_back(z.get_str());
            arr.push_back({{"direction", dir}, {"image_support", c.image_support}});
        }
        out << arr.dump(2) << "\n";
        return exit_code::ok;
    }
    out << circuits.size() << " circuits (" << circuits.signed_directions().size() << " signed)\n";
    for (const auto& c : circuits.canonical()) out << to_string(c.direction) << "\n";
    return exit_code::ok;
}

int cmd_skeleton(const Options& o, std::ostream& out) {
    const auto s = build_skeleton(load(o.instance));
    if (o.json) {
        json arr = json::array();
        for (const auto& [u, v] : s.edges)
            arr.push_back({{"from", s.vertices[u].label}, {"to", s.vertices[v].label}});
        out << arr.dump(2) << "\n";
        return exit_code::ok;
    }
    out << s.vertices.size() << " vertices, " << s.edges.size() << " edges\n";
    for (const auto& [u, v] : s.edges) out << s.vertices[u].label << " -- " << s.vertices[v].label << "\n";
    return exit_code::ok;
}

void check_mode(const Options& o) {
    if (o.mode != "graph" && o.mode != "circuit") throw InputError("--mode must be 'graph' or 'circuit'");
    if (o.mode == "graph" && !o.emit_cert.empty()) throw InputError("--emit-cert requires --mode circuit");
}

int cmd_distance(const Options& o, std::ostream& out) {
    check_mode(o);
    if (o.from.empty() || o.to.empty()) throw InputError("distance needs --from and --to");
    const HPolyhedron p = load(o.instance);
    const Skeleton s = build_skeleton(p);
    const std::size_t u = resolve_label(s, o.from), v = resolve_label(s, o.to);

    std::optional<std::size_t> d;
    if (o.mode == "graph") {
        d = graph_distances_from(s, u)[v];
    } else {
        const auto result = circuit_distance(p, enumerate_circuits(p), s.vertices[u].coords, s.vertices[v].coords,
                                             o.max_depth, o.instance);
        d = result.distance;
        if (!o.emit_cert.empty()) {
            if (!result.certificate) throw InputError("no walk found within max depth; no certificate written");
            write_certificate(*result.certificate, o.emit_cert);
        }
    }
    if (o.json) {
        out << json{{"instance", o.instance}, {"from", o.from}, {"to", o.to}, {"mode", o.mode},
                    {"max_depth", o.max_depth}, {"distance", opt_json(d)}}
                   .dump(2)
            << "\n";
    } else {
        out << opt_to_string(d, o.max_depth) << "\n";
    }
    return exit_code::ok;
}

int cmd_diameter(const Options& o, std::ostream& out) {
    check_mode(o);
    const HPolyhedron p = load(o.instance);
    const Skeleton s = build_skeleton(p);
    if (s.vertices.empty()) throw InputError("instance has no vertices");
    std::optional<std::size_t> d;
    std::string from, to;
    if (o.mode == "graph") {
        d = graph_diameter(s);
    } else if (s.vertices.size() < 2) {
        d = 0;
    } else {
        const auto result = circuit_diameter(p, enumerate_circuits(p), s.vertices, o.max_depth, o.instance);
        d = result.diameter;
        from = s.vertices[result.from].label;
        to = s.vertices[result.to].label;
        if (!o.emit_cert.empty()) {
            if (!result.certificate) throw InputError("diameter exceeds max depth; no certificate written");
            write_certificate(*result.certificate, o.emit_cert);
        }
    }
    if (o.json) {
        json doc{{"instance", o.instance}, {"mode", o.mode}, {"max_depth", o.max_depth}, {"diameter", opt_json(d)}};
        if (!from.empty()) doc["witness"] = {{"from", from}, {"to", to}};
        out << doc.dump(2) << "\n";
    } else {
        out << opt_to_string(d, o.max_depth);
        if (!from.empty()) out << " (" << from << " -> " << to << ")";
        out << "\n";
    }
    return exit_code::ok;
}

int cmd_verify(const std::string& path, const Options& o, std::ostream& out) {
    WalkCertificate cert;
    try {
        cert = read_certificate(path);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    const HPolyhedron p = load(cert.instance);
    const VerifyResult result = verify_walk(p, cert);
    if (o.json) {
        json doc{{"ok", result.ok()}, {"steps", cert.steps.size()}};
        if (!result.ok())
            doc["violation"] = {{"kind", to_string(result.violation)}, {"step", result.step}, {"message", result.message}};
        out << doc.dump(2) << "\n";
    } else if (result.ok()) {
        out << "ok: " << cert.steps.size() << "-step circuit walk verified\n";
    } else {
        out << "violation at step " << result.step << ": " << to_string(result.violation) << " (" << result.message
            << ")\n";
    }
    return result.ok() ? exit_code::ok : exit_code::check_failed;
}

int cmd_perturb_check(const Options& o, std::ostream& out) {
    const HPolyhedron a = load(o.instance), b = load(o.second);
    if (a.dim() != b.dim() || a.num_inequalities() != b.num_inequalities() ||
        a.num_equalities() != b.num_equalities())
        throw InputError("instances differ in dimension or facet count (" + std::to_string(a.dim()) + "/" +
                         std::to_string(a.num_inequalities()) + " vs " + std::to_string(b.dim()) + "/" +
                         std::to_string(b.num_inequalities()) + ")");
    const Skeleton sa = build_skeleton(a), sb = build_skeleton(b);
    const bool equivalent = combinatorial_signature(sa) == combinatorial_signature(sb);
    auto diameter = [&](const HPolyhedron& p, const Skeleton& s) -> std::optional<std::size_t> {
        if (s.vertices.size() < 2) return s.vertices.size() == 1 ? std::optional<std::size_t>(0) : std::nullopt;
        return circuit_diameter(p, enumerate_circuits(p), s.vertices, o.max_depth).diameter;
    };
    const auto da = diameter(a, sa), db = diameter(b, sb);
    if (o.json) {
        out << json{{"first", o.instance}, {"second", o.second}, {"equivalent", equivalent},
                    {"max_depth", o.max_depth}, {"circuit_diameters", {opt_json(da), opt_json(db)}}}
                   .dump(2)
            << "\n";
    } else {
        out << (equivalent ? "combinatorially equivalent" : "NOT combinatorially equivalent") << "\n"
            << "circuit diameter " << o.instance << ": " << opt_to_string(da, o.max_depth) << "\n"
            << "circuit diameter " << o.second << ": " << opt_to_string(db, o.max_depth) << "\n";
    }
    return equivalent ? exit_code::ok : exit_code::check_failed;
}

}  // namespace

Report make_report(const std::string& instance_ref, std::size_t max_depth) {
    const HPolyhedron p = load(instance_ref);
    const CircuitSet circuits = enumerate_circuits(p);
    const Skeleton s = build_skeleton(p);
    if (s.vertices.empty()) throw InputError("instance has no vertices");

    Report r;
    r.instance = instance_ref;
    r.dim = p.dim();
    r.facets = p.num_inequalities();
    r.vertices = s.vertices.size();
    r.edges = s.edges.size();
    r.bounded = is_bounded(p, circuits);
    r.graph_diameter = graph_diameter(s);
    r.max_depth = max_depth;
    r.circuit_diameter =
        s.vertices.size() < 2 ? std::optional<std::size_t>(0) : circuit_diameter(p, circuits, s.vertices, max_depth).diameter;
    r.hirsch_bound = static_cast<long>(r.facets) - static_cast<long>(r.dim);
    r.graph_hirsch_satisfied = static_cast<long>(r.graph_diameter) <= r.hirsch_bound;
    if (r.circuit_diameter)
        r.circuit_hirsch_satisfied = static_cast<long>(*r.circuit_diameter) <= r.hirsch_bound;
    else if (static_cast<long>(max_depth) >= r.hirsch_bound)
        r.circuit_hirsch_satisfied = false;
    return r;
}

json to_json(const Report& r) {
    return {{"instance", r.instance},
            {"dim", r.dim},
            {"facets", r.facets},
            {"vertices", r.vertices},
            {"edges", r.edges},
            {"bounded", r.bounded},
            {"graph_diameter", r.graph_diameter},
            {"circuit_diameter", opt_json(r.circuit_diameter)},
            {"max_depth", r.max_depth},
            {"hirsch_bound", r.hirsch_bound},
            {"graph_hirsch_satisfied", r.graph_hirsch_satisfied},
            {"circuit_hirsch_satisfied",
             r.circuit_hirsch_satisfied ? json(*r.circuit_hirsch_satisfied) : json(nullptr)}};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact circuit and graph diameters of rational polyhedra", "circdiam"};
    app.require_subcommand(1);
    Options o;
    std::string cert_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--max-depth", o.max_depth, "Circuit walk search budget")->capture_default_str();
        sub->add_flag("--json", o.json, "Emit JSON");
    };
    auto add_instance = [&](CLI::App* sub) {
        sub->add_option("instance", o.instance, "@name for a builtin instance, otherwise a file path")->required();
    };

    auto* report = app.add_subcommand("report", "Summary of an instance");
    add_instance(report);
    add_common(report);
    auto* vertices = app.add_subcommand("vertices", "List vertices");
    add_instance(vertices);
    add_common(vertices);
    auto* circuits = app.add_subcommand("circuits", "List circuits");
    add_instance(circuits);
    add_common(circuits);
    auto* skeleton = app.add_subcommand("skeleton", "List skeleton edges");
    add_instance(skeleton);
    add_common(skeleton);
    auto* distance = app.add_subcommand("distance", "Graph or circuit distance between two vertices");
    add_instance(distance);
    add_common(distance);
    distance->add_option("--from", o.from, "Source vertex label")->required();
    distance->add_option("--to", o.to, "Target vertex label")->required();
    distance->add_option("--mode", o.mode, "graph or circuit")->capture_default_str();
    distance->add_option("--emit-cert", o.emit_cert, "Write a walk certificate (circuit mode)");
    auto* diameter = app.add_subcommand("diameter", "Graph or circuit diameter");
    add_instance(diameter);
    add_common(diameter);
    diameter->add_option("--mode", o.mode, "graph or circuit")->capture_default_str();
    diameter->add_option("--emit-cert", o.emit_cert, "Write a certificate for a diameter-attaining pair");
    auto* verify = app.add_subcommand("verify-walk", "Re-check a walk certificate");
    verify->add_option("certificate", cert_path, "Certificate JSON file")->required();
    verify->add_flag("--json", o.json, "Emit JSON");
    auto* perturb = app.add_subcommand("perturb-check", "Compare two realizations");
    add_instance(perturb);
    perturb->add_option("other", o.second, "Second instance")->required();
    add_common(perturb);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::input_error;
    }

    try {
        if (*report) return cmd_report(o, out);
        if (*vertices) return cmd_vertices(o, out);
        if (*circuits) return cmd_circuits(o, out);
        if (*skeleton) return cmd_skeleton(o, out);
        if (*distance) return cmd_distance(o, out);
        if (*diameter) return cmd_diameter(o, out);
        if (*verify) return cmd_verify(cert_path, o, out);
        if (*perturb) return cmd_perturb_check(o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::input_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::input_error;
    }
    return exit_code::input_error;
}

}  // namespace circdiam
