#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypergraph.hpp"

namespace zyclone {

// .khg text format: optional '#' comment lines, then "n k", then one edge
// per line as k space-separated 0-based vertex indices. The writer emits
// edges sorted lexicographically with LF line endings, so serialization is
// canonical and round-trips bit-exactly.

inline void write_khg(std::ostream& os, const Hypergraph& h) {
    os << h.n() << ' ' << h.k() << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) os << ' ';
            os << e[i];
        }
        os << '\n';
    }
}

inline std::string write_khg(const Hypergraph& h) {
    std::ostringstream os;
    write_khg(os, h);
    return os.str();
}

inline Hypergraph read_khg(std::istream& is) {
    std::string line;
    int lineno = 0;
    int n = -1, k = -1;
    std::vector<std::vector<Vertex>> edges;
    while (std::getline(is, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> k) || n < 0 || k < 1)
                throw ParseError("khg line " + std::to_string(lineno) +
                                 ": expected header 'n k'");
            std::string rest;
            if (ls >> rest)
                throw ParseError("khg line " + std::to_string(lineno) +
                                 ": trailing tokens after header");
            continue;
        }
        std::vector<Vertex> e;
        Vertex v;
        while (ls >> v) e.push_back(v);
        if (!ls.eof())
            throw ParseError("khg line " + std::to_string(lineno) +
                             ": expected vertex indices");
        if (!e.empty()) edges.push_back(std::move(e));
    }
    if (n < 0) throw ParseError("khg: missing 'n k' header");
    try {
        return Hypergraph::build(n, k, edges);
    } catch (const Error& err) {
        throw ParseError(std::string("khg: ") + err.what());
    }
}

inline Hypergraph read_khg(const std::string& text) {
    std::istringstream is(text);
    return read_khg(is);
}

inline nlohmann::json to_json(const Hypergraph& h) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : h.edges()) edges.push_back(e.vertices());
    return nlohmann::json{{"edges", std::move(edges)}, {"k", h.k()}, {"n", h.n()}};
}

inline Hypergraph hypergraph_from_json(const nlohmann::json& j) {
    try {
        int n = j.at("n").get<int>();
        int k = j.at("k").get<int>();
        std::vector<std::vector<Vertex>> edges =
            j.at("edges").get<std::vector<std::vector<Vertex>>>();
        return Hypergraph::build(n, k, edges);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("json hypergraph: ") + e.what());
    } catch (const Error& e) {
        throw ParseError(std::string("json hypergraph: ") + e.what());
    }
}

inline void write_edge_list(std::ostream& os, const Hypergraph& h) {
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) os << ' ';
            os << e[i];
        }
        os << '\n';
    }
}

// Accepts either format: JSON documents start with '{'.
inline Hypergraph read_hypergraph(const std::string& text) {
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text[start] == '{') {
        nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
        if (j.is_discarded()) throw ParseError("invalid JSON hypergraph");
        return hypergraph_from_json(j);
    }
    return read_khg(text);
}

}  // namespace zyclone
