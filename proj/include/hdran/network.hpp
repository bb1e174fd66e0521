#ifndef HDRAN_NETWORK_HPP
#define HDRAN_NETWORK_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hdran/budget.hpp"
#include "hdran/rng.hpp"

namespace hdran {

using VertexId = std::uint32_t;
using CliqueId = std::uint64_t;
using Depth = std::uint32_t;

/// Read-only view of one clique in the arena.
struct CliqueRef {
    std::span<const VertexId> vertices;
    Depth depth;
    bool active;
};

/// Closed-form counts of a network of index k at time n.
constexpr std::uint64_t expected_vertex_count(std::uint64_t k, std::uint64_t n) { return k + n; }
/// K_k contributes k(k-1)/2 edges and every step adds k more.
constexpr std::uint64_t expected_edge_count(std::uint64_t k, std::uint64_t n) {
    return k * (k - 1) / 2 + n * k;
}
constexpr std::uint64_t expected_active_count(std::uint64_t k, std::uint64_t n) {
    return 1 + (k - 1) * n;
}

/// A high-dimensional random Apollonian network of index k.
///
/// Vertices 0..k-1 form the initial clique. The newcomer of step t gets id
/// k-1+t, so the vertex with label j >= 1 is `vertex_of_label(j)`.
///
/// Cliques live in an append-only arena; active ones are indexed by a dense
/// slot array so that a uniform choice is a single bounded draw. When slot r
/// is chosen, its clique is deactivated, child 0 (the clique with position 0
/// replaced by the newcomer) takes slot r and children 1..k-1 are appended.
///
/// Evolution is single-writer. A finished network is safe to read from any
/// number of threads.
class Network {
public:
    /// Time-0 network: K_k with a single active root clique of depth 0.
    /// Throws DomainError for k < 3.
    explicit Network(int k);

    void seed(std::uint64_t seed);
    std::uint64_t seed_value() const noexcept { return seed_; }
    const Xoshiro256& rng() const noexcept { return rng_; }
    void set_rng(const Xoshiro256& rng) noexcept { rng_ = rng; }

    /// One step with a uniformly random active clique. Returns the newcomer.
    VertexId evolve_step();
    /// One step with the clique in the given active slot.
    VertexId evolve_step_at(std::size_t active_slot);

    int index_k() const noexcept { return k_; }
    std::uint64_t time_n() const noexcept { return n_; }
    std::uint64_t vertex_count() const noexcept { return adjacency_.size(); }
    std::uint64_t edge_count() const noexcept { return edge_count_; }
    std::uint64_t active_count() const noexcept { return active_ids_.size(); }
    std::uint64_t arena_size() const noexcept { return depth_.size(); }

    /// Neighbors of v in ascending order.
    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
    std::uint64_t degree(VertexId v) const { return adjacency_.at(v).size(); }
    bool adjacent(VertexId u, VertexId v) const;

    CliqueRef clique(CliqueId id) const;
    std::span<const CliqueId> active_ids() const noexcept { return active_ids_; }
    CliqueRef active_clique(std::size_t slot) const { return clique(active_ids_.at(slot)); }

    VertexId vertex_of_label(std::uint64_t label) const;
    /// Label of a newcomer vertex; nullopt for the k initial vertices.
    std::optional<std::uint64_t> label_of_vertex(VertexId v) const;

    /// Rebuild from serialized parts. Adjacency lists are sorted; active
    /// cliques become a fresh arena in the given order. No validation here,
    /// see network_io for the checked path.
    static Network from_parts(int k, std::uint64_t n, std::uint64_t seed,
                              std::vector<std::vector<VertexId>> adjacency,
                              const std::vector<std::pair<std::vector<VertexId>, Depth>>& active,
                              const Xoshiro256& rng);

private:
    Network() = default;
    CliqueId push_clique(std::span<const VertexId> vertices, Depth depth, bool active);

    int k_ = 0;
    std::uint64_t n_ = 0;
    std::uint64_t seed_ = 0;
    std::uint64_t edge_count_ = 0;
    Xoshiro256 rng_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<VertexId> clique_vertices_;  // k ids per arena entry
    std::vector<Depth> depth_;
    std::vector<std::uint8_t> active_;
    std::vector<CliqueId> active_ids_;
};

/// Network at time n grown from seed. Deterministic in (k, n, seed) on every
/// platform. Throws DomainError for k < 3 and ResourceError when the arena
/// would exceed the budget (checked before allocating).
Network generate(int k, std::uint64_t n, std::uint64_t seed,
                 const ResourceBudget& budget = ResourceBudget{});

struct CliqueCensus {
    std::uint64_t active_count = 0;
    std::map<Depth, std::uint64_t> depth_counts;
    std::uint64_t total_depth = 0;
};

/// Depth statistics over active cliques.
CliqueCensus clique_census(const Network& net);

/// Structural equality: index, time, seed, adjacency and the ordered list of
/// active cliques with depths. Inactive arena history is not compared.
bool same_structure(const Network& a, const Network& b);

}  // namespace hdran

#endif  // HDRAN_NETWORK_HPP
