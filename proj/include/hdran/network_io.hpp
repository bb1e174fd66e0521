#ifndef HDRAN_NETWORK_IO_HPP
#define HDRAN_NETWORK_IO_HPP

#include <filesystem>
#include <string>

#include "hdran/network.hpp"

namespace hdran::io {

inline constexpr int kNetworkSchemaVersion = 1;

/// Canonical JSON text of a network:
///
///   {
///     "schema_version": 1,
///     "k": 3, "n": 2, "seed": 42,
///     "rng_state": [s0, s1, s2, s3],
///     "edges": [
///       [0, 1],
///       ...
///     ],
///     "active_cliques": [
///       {"depth": 1, "vertices": [3, 1, 2]},
///       ...
///     ]
///   }
///
/// Edges are sorted (u < v, lexicographic). Cliques appear in active-slot
/// order so that a reloaded network continues evolving identically.
/// Equal networks produce byte-identical text.
std::string to_json(const Network& net);

/// Parses and validates: schema version, k >= 3, vertex ids < k + n, no
/// duplicate or self edges, edge count k(k-1)/2 + nk, active-clique count
/// 1 + (k-1)n, and every clique k distinct pairwise adjacent vertices.
/// Throws ParseError naming the offending line or element.
Network from_json(const std::string& text);

void save_network(const Network& net, const std::filesystem::path& path);
Network load_network(const std::filesystem::path& path);

}  // namespace hdran::io

#endif  // HDRAN_NETWORK_IO_HPP
