#include "z2skel/json_io.hpp"

#include <fstream>
#include <sstream>

namespace z2skel {

namespace {

const json& require(const json& doc, const char* key, const char* ctx) {
    auto it = doc.find(key);
    if (it == doc.end())
        throw Error(std::string(ctx) + ": missing field \"" + key + "\"");
    return *it;
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string content_hash(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return std::string("fnv1a64:") + buf;
}

ColoredSkeleton skeleton_from_json(const json& doc) {
    if (!doc.is_object()) throw Error("skeleton document: expected a JSON object");
    int k = require(doc, "k", "skeleton document").get<int>();
    int n = require(doc, "n", "skeleton document").get<int>();
    std::vector<std::string> vertices;
    for (const auto& v : require(doc, "vertices", "skeleton document")) {
        if (!v.is_string()) throw Error("vertices: expected strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<std::tuple<std::string, std::string, std::string, GF2Vector>> edges;
    int i = 0;
    for (const auto& e : require(doc, "edges", "skeleton document")) {
        std::string ctx = "edges[" + std::to_string(i) + "]";
        const auto& id = require(e, "id", ctx.c_str());
        const auto& ends = require(e, "ends", ctx.c_str());
        const auto& color = require(e, "color", ctx.c_str());
        if (!ends.is_array() || ends.size() != 2)
            throw Error(ctx + ".ends: expected a pair of vertex ids");
        GF2Vector c = GF2Vector::parse(color.get<std::string>());
        if (c.width != k)
            throw Error(ctx + ".color: length " + std::to_string(c.width) +
                        " != k=" + std::to_string(k));
        edges.emplace_back(id.get<std::string>(), ends[0].get<std::string>(),
                           ends[1].get<std::string>(), c);
        ++i;
    }
    return ColoredSkeleton::build(k, n, std::move(vertices), std::move(edges));
}

ColoredSkeleton load_skeleton_file(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw Error("parse error in \"" + path + "\": " + e.what());
    }
    return skeleton_from_json(doc);
}

json skeleton_to_json(const ColoredSkeleton& s) {
    json doc;
    doc["k"] = s.k;
    doc["n"] = s.n;
    doc["vertices"] = s.vertex_ids;
    json edges = json::array();
    for (const auto& e : s.edges) {
        json je;
        je["id"] = e.id;
        je["ends"] = {s.vertex_ids[e.u], s.vertex_ids[e.v]};
        je["color"] = e.color.str();
        edges.push_back(std::move(je));
    }
    doc["edges"] = std::move(edges);
    return doc;
}

UncoloredMultigraph graph_from_json(const json& doc) {
    if (!doc.is_object()) throw Error("graph document: expected a JSON object");
    UncoloredMultigraph g;
    g.n = require(doc, "n", "graph document").get<int>();
    for (const auto& v : require(doc, "vertices", "graph document"))
        g.vertices.push_back(v.get<std::string>());
    int i = 0;
    for (const auto& e : require(doc, "edges", "graph document")) {
        std::string ctx = "edges[" + std::to_string(i) + "]";
        const auto& id = require(e, "id", ctx.c_str());
        const auto& ends = require(e, "ends", ctx.c_str());
        if (!ends.is_array() || ends.size() != 2)
            throw Error(ctx + ".ends: expected a pair of vertex ids");
        g.edges.push_back({id.get<std::string>(),
                           {ends[0].get<std::string>(), ends[1].get<std::string>()}});
        ++i;
    }
    return g;
}

UncoloredMultigraph load_graph_file(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw Error("parse error in \"" + path + "\": " + e.what());
    }
    return graph_from_json(doc);
}

SearchSpec search_spec_from_json(const json& doc) {
    SearchSpec spec;
    spec.k = require(doc, "k", "search spec").get<int>();
    spec.n = require(doc, "n", "search spec").get<int>();
    if (doc.contains("vertex_count")) spec.vertex_count = doc["vertex_count"].get<int>();
    if (doc.contains("max_vertex_count"))
        spec.max_vertex_count = doc["max_vertex_count"].get<int>();
    if (doc.contains("independence_min"))
        spec.independence_min = doc["independence_min"].get<int>();
    if (doc.contains("independence_max"))
        spec.independence_max = doc["independence_max"].get<int>();
    if (doc.contains("min_connectivity"))
        spec.min_connectivity = doc["min_connectivity"].get<int>();
    if (doc.contains("budget_nodes")) spec.node_budget = doc["budget_nodes"].get<long long>();
    if (doc.contains("seed")) spec.seed = doc["seed"].get<uint64_t>();
    const auto& target = require(doc, "target", "search spec");
    std::string type = require(target, "type", "search spec target").get<std::string>();
    if (type == "obstructed") {
        spec.target.kind = SearchTarget::ObstructedByF;
        spec.target.f_expr = require(target, "f", "search spec target").get<std::string>();
    } else if (type == "no_face_extension") {
        spec.target.kind = SearchTarget::NoFaceExtension;
        spec.target.m = require(target, "m", "search spec target").get<int>();
    } else if (type == "disconnected_two_face_intersection") {
        spec.target.kind = SearchTarget::DisconnectedTwoFaceIntersection;
    } else if (type == "manifold3_violation") {
        spec.target.kind = SearchTarget::ManifoldViolation;
    } else {
        throw Error("search spec target: unknown type \"" + type + "\"");
    }
    if (spec.node_budget <= 0) throw Error("search spec: budget must be positive");
    return spec;
}

SearchSpec load_search_spec_file(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw Error("parse error in \"" + path + "\": " + e.what());
    }
    return search_spec_from_json(doc);
}

json face_to_json(const ColoredSkeleton& s, const Face& f) {
    json out;
    out["dim"] = f.dim;
    json vs = json::array(), es = json::array(), basis = json::array();
    for (int v : f.vertices) vs.push_back(s.vertex_ids[v]);
    for (int e : f.edges) es.push_back(s.edges[e].id);
    for (const auto& row : f.span.basis()) basis.push_back(row.str());
    out["vertices"] = std::move(vs);
    out["edges"] = std::move(es);
    out["span"] = std::move(basis);
    return out;
}

json validation_to_json(const ValidationReport& r) {
    json out;
    out["ok"] = r.ok();
    out["loopless_ok"] = r.loopless_ok;
    out["regular_ok"] = r.regular_ok;
    out["regularity_failures"] = r.regularity_failures;
    out["p1_ok"] = r.p1_ok;
    out["p1_failures"] = r.p1_failures;
    out["p2_ok"] = r.p2_ok;
    out["p2_failures"] = r.p2_failures;
    out["independence_level"] = r.independence_level;
    out["two_independent_valence_bound_ok"] = r.valence_bound_ok;
    return out;
}

json connectivity_to_json(const ConnectivityReport& r) {
    json out;
    if (r.at_least)
        out["connectivity"] = "ge_n";
    else
        out["connectivity"] = r.connectivity;
    out["connectivity_value"] = r.connectivity;
    out["at_least"] = r.at_least;
    out["complete_graph"] = r.complete_graph;
    out["witness"] = r.witness;
    out["whitney_checked_up_to"] = r.checked_up_to;
    return out;
}

json poset_to_json(const ColoredSkeleton& s, const SimplicialPoset& p) {
    json out;
    out["rank"] = p.rank;
    json elements = json::array();
    for (size_t i = 0; i < p.elements.size(); ++i) {
        json el = face_to_json(s, p.elements[i]);
        el.erase("span");
        el["id"] = "F" + std::to_string(i);
        elements.push_back(std::move(el));
    }
    out["elements"] = std::move(elements);
    json covers = json::array();
    for (const auto& [child, parent] : p.covers)
        covers.push_back({"F" + std::to_string(child), "F" + std::to_string(parent)});
    out["covers"] = std::move(covers);
    out["bottom"] = "F" + std::to_string(p.bottom);
    out["f_vector"] = p.f_vector;
    return out;
}

json lambda_to_json(const ColoredSkeleton& s, const CharacteristicFunction& cf) {
    json facets = json::array();
    for (size_t i = 0; i < cf.facets.size(); ++i) {
        json f;
        f["id"] = "F" + std::to_string(i);
        json vs = json::array();
        for (int v : cf.facets[i].vertices) vs.push_back(s.vertex_ids[v]);
        f["vertices"] = std::move(vs);
        f["lambda"] = cf.lambda[i].str();
        facets.push_back(std::move(f));
    }
    json out;
    out["facets"] = std::move(facets);
    return out;
}

json fraction_to_json(const GF2Fraction& f) {
    json out;
    out["polynomial"] = f.is_polynomial();
    out["numerator"] = f.numerator.str();
    json denom = json::array();
    for (const auto& form : f.denominator) denom.push_back(form.str());
    out["denominator_forms"] = std::move(denom);
    out["display"] = f.str();
    return out;
}

std::string to_dot(const ColoredSkeleton& s) {
    std::ostringstream out;
    out << "graph skeleton {\n";
    for (const auto& v : s.vertex_ids) out << "  \"" << v << "\";\n";
    for (const auto& e : s.edges)
        out << "  \"" << s.vertex_ids[e.u] << "\" -- \"" << s.vertex_ids[e.v]
            << "\" [label=\"" << e.color.str() << "\", id=\"" << e.id << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace z2skel
