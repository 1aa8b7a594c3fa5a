#include "kernelcut/io.hpp"

namespace kernelcut {

using nlohmann::json;

namespace {

std::vector<Edge> read_pairs(const json& j, const char* what) {
    std::vector<Edge> out;
    if (!j.is_array()) throw InputError(std::string("'") + what + "' must be an array");
    for (auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw InputError(std::string("malformed entry in '") + what + "'");
        out.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return out;
}

json write_pairs(const std::vector<Edge>& es) {
    json a = json::array();
    for (auto [u, v] : es) a.push_back({u, v});
    return a;
}

}  // namespace

json instance_to_json(const Instance& inst) {
    json j;
    j["problem"] = to_string(inst.problem);
    j["directed"] = inst.graph.directed;
    j["multigraph"] = inst.graph.multigraph;
    j["n"] = inst.graph.n;
    j["edges"] = write_pairs(inst.graph.edges);
    if (!inst.labels.empty()) j["labels"] = inst.labels;
    if (inst.k) j["k"] = *inst.k;
    if (!inst.pairs.empty()) j["pairs"] = write_pairs(inst.pairs);
    if (inst.s) j["s"] = *inst.s;
    if (inst.t) j["t"] = *inst.t;
    j["witness"] = {{"kind", to_string(inst.witness.kind)},
                    {"vertices", inst.witness.vertices},
                    {"ell", inst.witness.ell}};
    if (!inst.stand_ins.empty()) {
        json a = json::array();
        for (auto& s : inst.stand_ins)
            a.push_back({{"clique_id", s.clique_id}, {"vertex_id", s.vertex_id}, {"label", s.label}});
        j["stand_ins"] = a;
    }
    return j;
}

Instance instance_from_json(const json& j) {
    if (!j.is_object()) throw InputError("instance must be a JSON object");
    auto need = [&](const char* key) -> const json& {
        if (!j.contains(key)) throw InputError(std::string("missing mandatory field '") + key + "'");
        return j.at(key);
    };
    Instance inst;
    try {
        inst.problem = problem_from_string(need("problem").get<std::string>());
        inst.graph.n = need("n").get<int>();
        inst.graph.directed = j.value("directed", false);
        inst.graph.multigraph = j.value("multigraph", false);
        inst.graph.edges = read_pairs(need("edges"), "edges");
        if (j.contains("labels")) inst.labels = j["labels"].get<std::vector<std::int64_t>>();
        if (j.contains("k")) inst.k = j["k"].get<std::int64_t>();
        if (j.contains("pairs")) inst.pairs = read_pairs(j["pairs"], "pairs");
        if (j.contains("s")) inst.s = j["s"].get<int>();
        if (j.contains("t")) inst.t = j["t"].get<int>();
        if (j.contains("witness")) {
            const json& w = j["witness"];
            inst.witness.kind = witness_kind_from_string(w.at("kind").get<std::string>());
            inst.witness.vertices = w.value("vertices", std::vector<int>{});
            inst.witness.ell = w.value("ell", static_cast<int>(inst.witness.vertices.size()));
        } else {
            // the whole vertex set is a valid witness of every set-valued kind
            inst.witness.kind = WitnessKind::VertexCover;
            for (int v = 0; v < inst.graph.n; ++v) inst.witness.vertices.push_back(v);
            inst.witness.ell = inst.graph.n;
        }
        if (j.contains("stand_ins")) {
            for (auto& s : j["stand_ins"])
                inst.stand_ins.push_back({s.at("clique_id").get<int>(), s.at("vertex_id").get<int>(),
                                          s.at("label").get<std::int64_t>()});
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed instance: ") + e.what());
    }
    validate_instance(inst);
    return inst;
}

Instance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return instance_from_json(j);
}

std::string serialize_instance(const Instance& inst, int indent) {
    return instance_to_json(inst).dump(indent);
}

json result_to_json(const KernelResult& r) {
    json j;
    j["status"] = to_string(r.status);
    j["instance"] = instance_to_json(r.instance);
    json tr = json::array();
    for (auto& t : r.trace) {
        json e{{"rule", t.rule}};
        if (!t.vertices.empty()) e["vertices"] = t.vertices;
        if (!t.edges.empty()) e["edges"] = write_pairs(t.edges);
        if (!t.note.empty()) e["note"] = t.note;
        tr.push_back(e);
    }
    j["trace"] = tr;
    auto st = [](const SizeStats& s) {
        return json{{"vertices", s.vertices}, {"edges", s.edges}, {"bits", s.bits}};
    };
    j["stats"] = {{"before", st(r.before)}, {"after", st(r.after)}};
    j["vertex_map"] = r.vertex_map;
    return j;
}

std::string serialize_result(const KernelResult& r, int indent) { return result_to_json(r).dump(indent); }

}  // namespace kernelcut
