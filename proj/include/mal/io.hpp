#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mal/labeling.hpp"
#include "mal/reductions.hpp"

namespace mal {

// Text graph format: optional '# comment' lines, a header 'n m [directed]',
// then m lines 'u v' with 0-based endpoints. The writer emits the canonical
// form (edges sorted, no comments), so write(read(write(g))) is bit-exact.
inline std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges();
    if (g.directed()) out << " directed";
    out << '\n';
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph read_graph(std::istream& in) {
    std::string line;
    auto next_data_line = [&](std::string& out_line) {
        while (std::getline(in, line)) {
            size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            out_line = line;
            return true;
        }
        return false;
    };
    std::string header;
    if (!next_data_line(header)) throw ParseError("graph file: missing header line");
    std::istringstream hs(header);
    long long n = 0, m = 0;
    std::string flag;
    if (!(hs >> n >> m)) throw ParseError("graph file: header must be 'n m [directed]'");
    bool directed = false;
    if (hs >> flag) {
        if (flag != "directed") throw ParseError("graph file: unknown header flag '" + flag + "'");
        directed = true;
    }
    if (n < 0 || m < 0) throw ParseError("graph file: negative counts");
    Graph g(static_cast<int>(n), directed);
    for (long long i = 0; i < m; ++i) {
        std::string edge_line;
        if (!next_data_line(edge_line)) throw ParseError("graph file: fewer edges than declared");
        std::istringstream es(edge_line);
        int u = 0, v = 0;
        if (!(es >> u >> v)) throw ParseError("graph file: malformed edge line");
        try {
            g.add_edge(u, v);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("graph file: ") + e.what());
        }
    }
    return g;
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

// Labeling format: {"age": L, "edges": [{"u":.., "v":.., "labels": [..]}]}
// with edges sorted by (u,v) and labels ascending. Canonical 2-space JSON.
inline std::string write_labeling(const Labeling& lambda) {
    nlohmann::ordered_json doc;
    doc["age"] = lambda.lifetime();
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [e, labels] : lambda.entries()) {
        if (labels.empty()) continue;
        nlohmann::ordered_json entry;
        entry["u"] = e.first;
        entry["v"] = e.second;
        entry["labels"] = labels;
        doc["edges"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

inline Labeling parse_labeling(const std::string& text) {
    Labeling lambda;
    try {
        auto doc = nlohmann::json::parse(text);
        for (const auto& entry : doc.at("edges")) {
            int u = entry.at("u").get<int>();
            int v = entry.at("v").get<int>();
            for (int t : entry.at("labels").get<std::vector<int>>())
                lambda.add({u, v}, t);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("labeling file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("labeling file: ") + e.what());
    }
    return lambda;
}

// {"universeSize": eta, "sets": [[..], ..]}
inline std::string write_set_cover(const SetCoverInstance& sc) {
    nlohmann::ordered_json doc;
    doc["universeSize"] = sc.universe_size;
    doc["sets"] = sc.sets;
    return doc.dump(2) + "\n";
}

inline SetCoverInstance parse_set_cover(const std::string& text) {
    SetCoverInstance sc;
    try {
        auto doc = nlohmann::json::parse(text);
        sc.universe_size = doc.at("universeSize").get<int>();
        sc.sets = doc.at("sets").get<std::vector<std::vector<int>>>();
        sc.validate();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("set-cover file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("set-cover file: ") + e.what());
    }
    return sc;
}

// {"groupsA": [[..], ..], "groupsB": [[..], ..], "edges": [[a, b], ..]}
inline std::string write_minrep(const MinRepInstance& mr) {
    nlohmann::ordered_json doc;
    doc["groupsA"] = mr.groups_a;
    doc["groupsB"] = mr.groups_b;
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : mr.edges) doc["edges"].push_back({a, b});
    return doc.dump(2) + "\n";
}

inline MinRepInstance parse_minrep(const std::string& text) {
    MinRepInstance mr;
    try {
        auto doc = nlohmann::json::parse(text);
        mr.groups_a = doc.at("groupsA").get<std::vector<std::vector<int>>>();
        mr.groups_b = doc.at("groupsB").get<std::vector<std::vector<int>>>();
        for (const auto& e : doc.at("edges"))
            mr.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        mr.validate();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("min-rep file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("min-rep file: ") + e.what());
    }
    return mr;
}

// Role-map sidecar emitted next to generated reduction graphs.
inline std::string write_roles(const ReductionArtifacts& art) {
    nlohmann::ordered_json doc;
    doc["x"] = art.x;
    doc["param"] = art.param;
    doc["roles"] = art.roles;
    return doc.dump(2) + "\n";
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

}  // namespace mal
