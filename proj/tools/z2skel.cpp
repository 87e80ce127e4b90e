// z2skel — command-line surface for abstract 1-skeletons of (Z2)^k-actions:
// axiom validation, face queries, localization obstructions, connectivity,
// the type-(n,n) poset/duality reports, generators and witness searches.
//
// Exit codes: 0 success; 1 the mathematics says no (invalid skeleton,
// obstruction found, criterion fails) or a domain error; 2 usage/IO error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "z2skel/json_io.hpp"

using namespace z2skel;

namespace {

// argument shape problems (wrong arity, unknown generator) exit 2 like other
// usage errors, unlike mathematical/domain failures which exit 1
struct UsageError : Error {
    using Error::Error;
};

struct LoadedInput {
    ColoredSkeleton skeleton;
    std::string hash;
};

LoadedInput load_input(const std::string& path) {
    std::string bytes = read_file(path);
    LoadedInput in{skeleton_from_json([&] {
                       try {
                           return json::parse(bytes);
                       } catch (const json::parse_error& e) {
                           throw Error("parse error in \"" + path + "\": " + e.what());
                       }
                   }()),
                   content_hash(bytes)};
    return in;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_validate(const std::string& path) {
    auto in = load_input(path);
    auto report = validate(in.skeleton);
    json out = validation_to_json(report);
    out["input_hash"] = in.hash;
    out["k"] = in.skeleton.k;
    out["n"] = in.skeleton.n;
    out["vertex_count"] = in.skeleton.vertex_count();
    out["edge_count"] = in.skeleton.edges.size();
    emit(out);
    std::cerr << (report.ok() ? "valid" : "INVALID") << " type (" << in.skeleton.k << ","
              << in.skeleton.n << ") skeleton, independence level "
              << report.independence_level << "\n";
    return report.ok() ? 0 : 1;
}

int run_faces(const std::string& path, int dim, bool has_dim) {
    auto in = load_input(path);
    auto report = validate(in.skeleton);
    if (!report.ok()) throw Error("faces: the skeleton fails validation");
    json out;
    out["input_hash"] = in.hash;
    if (has_dim) {
        auto faces = enumerate_faces(in.skeleton, dim, report.independence_level);
        json jf = json::array();
        for (const auto& f : faces) jf.push_back(face_to_json(in.skeleton, f));
        out["dim"] = dim;
        out["count"] = faces.size();
        out["faces"] = std::move(jf);
    } else {
        json by_dim;
        for (int d : safe_dimensions(in.skeleton, report.independence_level)) {
            auto faces = enumerate_faces(in.skeleton, d, report.independence_level);
            json jf = json::array();
            for (const auto& f : faces) jf.push_back(face_to_json(in.skeleton, f));
            by_dim[std::to_string(d)] = std::move(jf);
        }
        out["faces_by_dim"] = std::move(by_dim);
    }
    emit(out);
    return 0;
}

int run_face_extend(const std::string& path, const std::string& vertex,
                    const std::string& edge_csv) {
    auto in = load_input(path);
    int p = in.skeleton.vertex_index(vertex);
    if (p < 0) throw Error("unknown vertex \"" + vertex + "\"");
    std::vector<int> seeds;
    std::string cur;
    for (char c : edge_csv + ",") {
        if (c == ',') {
            if (!cur.empty()) {
                int e = in.skeleton.edge_index(cur);
                if (e < 0) throw Error("unknown edge \"" + cur + "\"");
                seeds.push_back(e);
                cur.clear();
            }
        } else {
            cur += c;
        }
    }
    auto ext = extend_face(in.skeleton, p, seeds);
    json out;
    out["input_hash"] = in.hash;
    if (ext.face) {
        out["face"] = face_to_json(in.skeleton, *ext.face);
        emit(out);
        return 0;
    }
    out["no_face"] = ext.failure;
    emit(out);
    std::cerr << "no face: " << ext.failure << "\n";
    return 1;
}

int run_obstruct(const std::string& path, const std::string& f_expr, int max_degree) {
    auto in = load_input(path);
    auto report = validate(in.skeleton);
    if (!report.ok()) throw Error("obstruct: the skeleton fails validation");
    json out;
    out["input_hash"] = in.hash;
    if (!f_expr.empty()) {
        auto f = SymmetricExpr::parse(f_expr, in.skeleton.n);
        auto sum = localization_sum(in.skeleton, f);
        out["mode"] = "single";
        out["f"] = f.str();
        out["sum"] = sum.str();
        out["sum_detail"] = fraction_to_json(sum);
        emit(out);
        std::cerr << "sum = " << sum.str() << "\n";
        return sum.is_polynomial() ? 0 : 1;
    }
    if (!in.skeleton.underlying_connected())
        throw Error("obstruct: realizability check requires a connected skeleton");
    auto verdict = realizability_check(in.skeleton, max_degree);
    out["mode"] = "check";
    out["independence_level"] = report.independence_level;
    switch (verdict.kind) {
        case RealizabilityVerdict::RealizableK1:
            out["verdict"] = "realizable_k1";
            break;
        case RealizabilityVerdict::NotRealizableK1:
            out["verdict"] = "not_realizable_k1";
            break;
        case RealizabilityVerdict::Obstructed:
            out["verdict"] = "obstructed";
            out["witness_f"] = verdict.witness->str();
            out["sum"] = verdict.sum->str();
            break;
        case RealizabilityVerdict::NoObstructionUpToDegree:
            out["verdict"] = "no_obstruction_up_to_degree";
            out["max_degree"] = verdict.max_degree;
            break;
    }
    if (verdict.sum) out["sum_detail"] = fraction_to_json(*verdict.sum);
    emit(out);
    std::cerr << verdict.describe() << "\n";
    bool fails = verdict.kind == RealizabilityVerdict::NotRealizableK1 ||
                 verdict.kind == RealizabilityVerdict::Obstructed;
    return fails ? 1 : 0;
}

int run_connectivity(const std::string& path) {
    auto in = load_input(path);
    auto report = validate(in.skeleton);
    json out = connectivity_to_json(vertex_connectivity(in.skeleton));
    out["input_hash"] = in.hash;
    out["menger"] = menger_connectivity(in.skeleton);
    if (report.ok() && report.independence_level >= 3 &&
        in.skeleton.underlying_connected()) {
        auto crit = n_connected_criterion(in.skeleton, report.independence_level);
        out["hypothesis_holds"] = crit.hypothesis_holds;
        out["connectivity_conclusion"] = crit.connectivity_conclusion;
        if (crit.violating_pair) {
            out["violating_pair"] = {face_to_json(in.skeleton, crit.violating_pair->first),
                                     face_to_json(in.skeleton, crit.violating_pair->second)};
        }
    } else {
        out["criterion"] = "not applicable (requires validity, connectivity, independence >= 3)";
    }
    emit(out);
    return 0;
}

int run_poset(const std::string& path, bool f_vector_only, bool check_complex) {
    auto in = load_input(path);
    auto poset = simplicial_poset(in.skeleton);
    json out;
    if (f_vector_only) {
        out["rank"] = poset.rank;
        out["f_vector"] = poset.f_vector;
    } else {
        out = poset_to_json(in.skeleton, poset);
    }
    out["input_hash"] = in.hash;
    int code = 0;
    if (check_complex) {
        auto chk = is_simplicial_complex_poset(in.skeleton);
        out["simplicial_complex"] = chk.is_complex;
        if (!chk.is_complex) {
            json w = json::array();
            for (int i : chk.witness_subset) w.push_back("facet#" + std::to_string(i));
            out["witness_subset"] = std::move(w);
            code = 1;
        }
    }
    emit(out);
    return code;
}

int run_lambda(const std::string& path) {
    auto in = load_input(path);
    auto cf = characteristic_function(in.skeleton);
    json out = lambda_to_json(in.skeleton, cf);
    out["input_hash"] = in.hash;
    emit(out);
    return 0;
}

int run_manifold3(const std::string& path) {
    auto in = load_input(path);
    auto poset = simplicial_poset(in.skeleton);
    bool ok = poset.f_vector[1] == poset.f_vector[0] + poset.f_vector[3];
    json out;
    out["input_hash"] = in.hash;
    out["f_vector"] = poset.f_vector;
    out["f1_equals_f0_plus_f3"] = ok;
    emit(out);
    std::cerr << (ok ? "closed 3-manifold criterion holds" : "criterion fails") << "\n";
    return ok ? 0 : 1;
}

int run_gen(const std::string& kind, const std::vector<std::string>& args) {
    ColoredSkeleton s;
    if (kind == "simplex" || kind == "cube") {
        if (args.size() != 1) throw UsageError("gen " + kind + " expects one argument N");
        int n = 0;
        try {
            n = std::stoi(args[0]);
        } catch (const std::exception&) {
            throw UsageError("gen " + kind + ": \"" + args[0] + "\" is not a number");
        }
        s = kind == "simplex" ? gen_simplex(n) : gen_cube(n);
    } else if (kind == "k1") {
        if (args.size() != 1) throw UsageError("gen k1 expects a graph file");
        s = gen_k1(load_graph_file(args[0]));
    } else if (kind == "product") {
        if (args.size() != 2) throw UsageError("gen product expects two skeleton files");
        s = gen_product(load_skeleton_file(args[0]), load_skeleton_file(args[1]));
    } else {
        throw UsageError("unknown generator \"" + kind + "\"");
    }
    emit(skeleton_to_json(s));
    return 0;
}

int run_search(const std::string& specfile, long long seed, bool has_seed) {
    std::string bytes = read_file(specfile);
    SearchSpec spec;
    try {
        spec = search_spec_from_json(json::parse(bytes));
    } catch (const json::parse_error& e) {
        throw Error("parse error in \"" + specfile + "\": " + e.what());
    }
    if (has_seed) spec.seed = (uint64_t)seed;
    auto result = search(spec);
    if (result.skeleton) {
        emit(skeleton_to_json(*result.skeleton));
        std::cerr << "witness: " << result.witness << " (graphs " << result.stats.graphs
                  << ", nodes " << result.stats.nodes << ")\n";
        return 0;
    }
    json out;
    out["input_hash"] = content_hash(bytes);
    out["error"] = result.stats.budget_hit ? "budget exhausted" : "search space exhausted";
    out["stats"] = {{"nodes", result.stats.nodes},
                    {"graphs", result.stats.graphs},
                    {"skeletons", result.stats.skeletons}};
    emit(out);
    return 1;
}

int run_export_dot(const std::string& path) {
    auto in = load_input(path);
    std::cout << to_dot(in.skeleton);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"abstract 1-skeletons of (Z2)^k-actions"};
    app.require_subcommand(1);

    std::string input, vertex, edges, f_expr, gen_kind, specfile;
    std::vector<std::string> gen_args;
    int dim = -1, max_degree = -1;
    long long seed = 0;
    bool f_vector_only = false, check_complex = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "skeleton JSON file")->required();
    };

    auto* c_validate = app.add_subcommand("validate", "check the coloring axioms");
    add_input(c_validate);
    auto* c_faces = app.add_subcommand("faces", "enumerate faces");
    add_input(c_faces);
    c_faces->add_option("--dim", dim, "face dimension");
    auto* c_extend = app.add_subcommand("face-extend", "extend edges at a vertex to a face");
    add_input(c_extend);
    c_extend->add_option("--vertex", vertex, "seed vertex id")->required();
    c_extend->add_option("--edges", edges, "comma-separated edge ids")->required();
    auto* c_obstruct = app.add_subcommand("obstruct", "localization realizability test");
    add_input(c_obstruct);
    c_obstruct->add_option("--f", f_expr, "symmetric function, e.g. \"s2*s3\"");
    c_obstruct->add_option("--max-degree", max_degree, "scan bound (default 2n)");
    auto* c_conn = app.add_subcommand("connectivity", "vertex connectivity and the face criterion");
    add_input(c_conn);
    auto* c_poset = app.add_subcommand("poset", "simplicial poset of a type (n,n) skeleton");
    add_input(c_poset);
    c_poset->add_flag("--f-vector", f_vector_only, "report only the f-vector");
    c_poset->add_flag("--check-complex", check_complex, "simplicial-complex criterion");
    auto* c_lambda = app.add_subcommand("lambda", "characteristic function of the facets");
    add_input(c_lambda);
    auto* c_m3 = app.add_subcommand("manifold3", "f1 = f0 + f3 test for type (4,4)");
    add_input(c_m3);
    auto* c_gen = app.add_subcommand("gen", "generate a canonical skeleton");
    c_gen->add_option("kind", gen_kind, "simplex | cube | k1 | product")->required();
    c_gen->add_option("args", gen_args, "N, or input files");
    auto* c_search = app.add_subcommand("search", "search for a witness skeleton");
    c_search->add_option("spec", specfile, "search spec JSON file")->required();
    c_search->add_option("--seed", seed, "override the spec seed");
    auto* c_dot = app.add_subcommand("export-dot", "DOT export of the colored multigraph");
    add_input(c_dot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors are exit 2; --help is success
    }

    try {
        if (c_validate->parsed()) return run_validate(input);
        if (c_faces->parsed()) return run_faces(input, dim, c_faces->count("--dim") > 0);
        if (c_extend->parsed()) return run_face_extend(input, vertex, edges);
        if (c_obstruct->parsed()) return run_obstruct(input, f_expr, max_degree);
        if (c_conn->parsed()) return run_connectivity(input);
        if (c_poset->parsed()) return run_poset(input, f_vector_only, check_complex);
        if (c_lambda->parsed()) return run_lambda(input);
        if (c_m3->parsed()) return run_manifold3(input);
        if (c_gen->parsed()) return run_gen(gen_kind, gen_args);
        if (c_search->parsed())
            return run_search(specfile, seed, c_search->count("--seed") > 0);
        if (c_dot->parsed()) return run_export_dot(input);
    } catch (const UsageError& e) {
        json out;
        out["error"] = std::string(e.what());
        std::cout << out.dump(2) << "\n";
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::string what = e.what();
        json out;
        out["error"] = what;
        std::cout << out.dump(2) << "\n";
        std::cerr << "error: " << what << "\n";
        bool io = what.find("parse error") != std::string::npos ||
                  what.find("cannot open") != std::string::npos ||
                  what.find("missing field") != std::string::npos;
        return io ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
