#include "hdran/network_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hdran/csv.hpp"
#include "hdran/error.hpp"

namespace hdran::io {

std::string to_json(const Network& net) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"schema_version\": " << kNetworkSchemaVersion << ",\n";
    out << "  \"k\": " << net.index_k() << ",\n";
    out << "  \"n\": " << net.time_n() << ",\n";
    out << "  \"seed\": " << net.seed_value() << ",\n";
    const auto& state = net.rng().state();
    out << "  \"rng_state\": [" << state[0] << ", " << state[1] << ", " << state[2] << ", " << state[3] << "],\n";
    out << "  \"edges\": [";
    bool first = true;
    for (VertexId u = 0; u < net.vertex_count(); ++u) {
        for (VertexId v : net.neighbors(u)) {
            if (v <= u) continue;
            out << (first ? "\n" : ",\n") << "    [" << u << ", " << v << "]";
            first = false;
        }
    }
    out << (first ? "],\n" : "\n  ],\n");
    out << "  \"active_cliques\": [";
    for (std::size_t slot = 0; slot < net.active_count(); ++slot) {
        const auto c = net.active_clique(slot);
        out << (slot == 0 ? "\n" : ",\n") << "    {\"depth\": " << c.depth << ", \"vertices\": [";
        for (std::size_t i = 0; i < c.vertices.size(); ++i) out << (i ? ", " : "") << c.vertices[i];
        out << "]}";
    }
    out << (net.active_count() == 0 ? "]\n" : "\n  ]\n");
    out << "}\n";
    return out.str();
}

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ParseError("network file: " + what); }

std::uint64_t line_of_byte(const std::string& text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::uint64_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::uint64_t get_unsigned(const json& doc, const char* key) {
    if (!doc.contains(key)) fail(std::string("missing field \"") + key + "\"");
    const auto& v = doc.at(key);
    if (!v.is_number_unsigned()) fail(std::string("field \"") + key + "\" must be a non-negative integer");
    return v.get<std::uint64_t>();
}

}  // namespace

Network from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("malformed JSON at line " + std::to_string(line_of_byte(text, e.byte)) + ": " + e.what());
    }
    if (!doc.is_object()) fail("top level must be an object");

    const std::uint64_t version = get_unsigned(doc, "schema_version");
    if (version != static_cast<std::uint64_t>(kNetworkSchemaVersion)) {
        fail("unsupported schema_version " + std::to_string(version));
    }
    const std::uint64_t k64 = get_unsigned(doc, "k");
    if (k64 < 3 || k64 > 1'000'000) fail("k must be >= 3 (got " + std::to_string(k64) + ")");
    const auto k = static_cast<int>(k64);
    const std::uint64_t n = get_unsigned(doc, "n");
    const std::uint64_t seed = get_unsigned(doc, "seed");
    const std::uint64_t vertices = k64 + n;
    if (vertices >= UINT32_MAX) fail("n too large");

    Xoshiro256 rng(seed);
    if (doc.contains("rng_state")) {
        const auto& st = doc.at("rng_state");
        if (!st.is_array() || st.size() != 4) fail("rng_state must be an array of four integers");
        Xoshiro256::State s{};
        for (std::size_t i = 0; i < 4; ++i) {
            if (!st[i].is_number_unsigned()) fail("rng_state[" + std::to_string(i) + "] must be an unsigned integer");
            s[i] = st[i].get<std::uint64_t>();
        }
        if (s == Xoshiro256::State{}) fail("rng_state must not be all zero");
        rng = Xoshiro256(s);
    }

    if (!doc.contains("edges") || !doc.at("edges").is_array()) fail("missing array \"edges\"");
    const auto& edges = doc.at("edges");
    const std::uint64_t expected_edges = expected_edge_count(k64, n);
    if (edges.size() != expected_edges) {
        fail("edge count " + std::to_string(edges.size()) + " violates E = k(k-1)/2 + n k = " +
             std::to_string(expected_edges) + " for k = " + std::to_string(k) + ", n = " + std::to_string(n));
    }
    std::vector<std::vector<VertexId>> adjacency(vertices);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
            fail(where + " must be a pair of vertex ids");
        }
        const auto u = e[0].get<std::uint64_t>();
        const auto v = e[1].get<std::uint64_t>();
        if (u >= vertices || v >= vertices) fail(where + " has a vertex id >= k + n = " + std::to_string(vertices));
        if (u == v) fail(where + " is a self loop");
        adjacency[u].push_back(static_cast<VertexId>(v));
        adjacency[v].push_back(static_cast<VertexId>(u));
    }
    for (VertexId v = 0; v < vertices; ++v) {
        auto& row = adjacency[v];
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
            fail("duplicate edge at vertex " + std::to_string(v));
        }
    }

    if (!doc.contains("active_cliques") || !doc.at("active_cliques").is_array()) {
        fail("missing array \"active_cliques\"");
    }
    const auto& cliques = doc.at("active_cliques");
    const std::uint64_t expected_active = expected_active_count(k64, n);
    if (cliques.size() != expected_active) {
        fail("active clique count " + std::to_string(cliques.size()) + " violates 1 + (k-1) n = " +
             std::to_string(expected_active));
    }
    std::vector<std::pair<std::vector<VertexId>, Depth>> active;
    active.reserve(cliques.size());
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        const auto& c = cliques[i];
        const std::string where = "active_cliques[" + std::to_string(i) + "]";
        if (!c.is_object() || !c.contains("vertices") || !c.contains("depth")) {
            fail(where + " must have \"vertices\" and \"depth\"");
        }
        const auto& vs = c.at("vertices");
        if (!vs.is_array() || vs.size() != k64) fail(where + " must list exactly k = " + std::to_string(k) + " vertices");
        if (!c.at("depth").is_number_unsigned()) fail(where + " depth must be a non-negative integer");
        const auto depth = c.at("depth").get<std::uint64_t>();
        if (depth > n || (n > 0 && depth == 0)) fail(where + " depth " + std::to_string(depth) + " out of range");
        std::vector<VertexId> members;
        for (const auto& x : vs) {
            if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= vertices) {
                fail(where + " has an invalid vertex id");
            }
            members.push_back(static_cast<VertexId>(x.get<std::uint64_t>()));
        }
        std::vector<VertexId> sorted = members;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail(where + " repeats a vertex");
        for (std::size_t a = 0; a < sorted.size(); ++a) {
            for (std::size_t b = a + 1; b < sorted.size(); ++b) {
                const auto& row = adjacency[sorted[a]];
                if (!std::binary_search(row.begin(), row.end(), sorted[b])) {
                    fail(where + " members " + std::to_string(sorted[a]) + " and " + std::to_string(sorted[b]) +
                         " are not adjacent");
                }
            }
        }
        active.emplace_back(std::move(members), static_cast<Depth>(depth));
    }
    return Network::from_parts(k, n, seed, std::move(adjacency), active, rng);
}

void save_network(const Network& net, const std::filesystem::path& path) { write_text_file(path, to_json(net)); }

Network load_network(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open network file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return from_json(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

}  // namespace hdran::io
