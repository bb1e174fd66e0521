#include "hdran/network.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hdran/error.hpp"

namespace hdran {

Network::Network(int k) : k_(k) {
    if (k < 3) {
        throw DomainError("network index k must be >= 3 (got " + std::to_string(k) + ")");
    }
    const auto uk = static_cast<std::size_t>(k);
    adjacency_.resize(uk);
    for (VertexId v = 0; v < uk; ++v) {
        auto& row = adjacency_[v];
        row.reserve(uk - 1);
        for (VertexId u = 0; u < uk; ++u) {
            if (u != v) row.push_back(u);
        }
    }
    edge_count_ = uk * (uk - 1) / 2;
    std::vector<VertexId> root(uk);
    for (VertexId v = 0; v < uk; ++v) root[v] = v;
    active_ids_.push_back(push_clique(root, 0, true));
}

void Network::seed(std::uint64_t seed) {
    seed_ = seed;
    rng_ = Xoshiro256(seed);
}

CliqueId Network::push_clique(std::span<const VertexId> vertices, Depth depth, bool active) {
    const CliqueId id = depth_.size();
    clique_vertices_.insert(clique_vertices_.end(), vertices.begin(), vertices.end());
    depth_.push_back(depth);
    active_.push_back(active ? 1 : 0);
    return id;
}

VertexId Network::evolve_step() {
    return evolve_step_at(static_cast<std::size_t>(rng_.bounded(active_ids_.size())));
}

VertexId Network::evolve_step_at(std::size_t active_slot) {
    if (active_slot >= active_ids_.size()) {
        throw DomainError("active slot out of range");
    }
    if (adjacency_.size() >= std::numeric_limits<VertexId>::max()) {
        throw ResourceError("vertex id space exhausted");
    }
    const auto uk = static_cast<std::size_t>(k_);
    const CliqueId chosen = active_ids_[active_slot];
    // Copy before the arena grows.
    std::vector<VertexId> members(clique_vertices_.begin() + static_cast<std::ptrdiff_t>(chosen * uk),
                                  clique_vertices_.begin() + static_cast<std::ptrdiff_t>((chosen + 1) * uk));
    const Depth child_depth = depth_[chosen] + 1;
    active_[chosen] = 0;

    const auto v = static_cast<VertexId>(adjacency_.size());
    std::vector<VertexId> row = members;
    std::sort(row.begin(), row.end());
    for (VertexId u : members) adjacency_[u].push_back(v);  // v is the largest id
    adjacency_.push_back(std::move(row));
    edge_count_ += uk;

    for (std::size_t i = 0; i < uk; ++i) {
        const VertexId replaced = members[i];
        members[i] = v;
        const CliqueId id = push_clique(members, child_depth, true);
        members[i] = replaced;
        if (i == 0) {
            active_ids_[active_slot] = id;
        } else {
            active_ids_.push_back(id);
        }
    }
    ++n_;
    return v;
}

bool Network::adjacent(VertexId u, VertexId v) const {
    const auto& row = adjacency_.at(u);
    return std::binary_search(row.begin(), row.end(), v);
}

CliqueRef Network::clique(CliqueId id) const {
    if (id >= depth_.size()) throw DomainError("clique id out of range");
    const auto uk = static_cast<std::size_t>(k_);
    return CliqueRef{std::span<const VertexId>(clique_vertices_).subspan(id * uk, uk), depth_[id],
                     active_[id] != 0};
}

VertexId Network::vertex_of_label(std::uint64_t label) const {
    if (label < 1 || label > n_) {
        throw DomainError("label must lie in [1, n] (got " + std::to_string(label) + ", n = " +
                          std::to_string(n_) + ")");
    }
    return static_cast<VertexId>(static_cast<std::uint64_t>(k_) - 1 + label);
}

std::optional<std::uint64_t> Network::label_of_vertex(VertexId v) const {
    if (v >= adjacency_.size()) throw DomainError("vertex id out of range");
    if (v < static_cast<VertexId>(k_)) return std::nullopt;
    return static_cast<std::uint64_t>(v) - static_cast<std::uint64_t>(k_) + 1;
}

Network Network::from_parts(int k, std::uint64_t n, std::uint64_t seed,
                            std::vector<std::vector<VertexId>> adjacency,
                            const std::vector<std::pair<std::vector<VertexId>, Depth>>& active,
                            const Xoshiro256& rng) {
    Network net;
    net.k_ = k;
    net.n_ = n;
    net.seed_ = seed;
    net.rng_ = rng;
    std::uint64_t degree_sum = 0;
    for (auto& row : adjacency) {
        std::sort(row.begin(), row.end());
        degree_sum += row.size();
    }
    net.adjacency_ = std::move(adjacency);
    net.edge_count_ = degree_sum / 2;
    net.active_ids_.reserve(active.size());
    for (const auto& [vertices, depth] : active) {
        net.active_ids_.push_back(net.push_clique(vertices, depth, true));
    }
    return net;
}

Network generate(int k, std::uint64_t n, std::uint64_t seed, const ResourceBudget& budget) {
    if (k < 3) {
        throw DomainError("network index k must be >= 3 (got " + std::to_string(k) + ")");
    }
    const auto uk = static_cast<std::uint64_t>(k);
    const std::uint64_t limit = budget.max_arena_cells;
    // k * (1 + k * n) without overflow
    const bool too_large = n > (limit / uk - 1) / uk || uk * (1 + uk * n) > limit ||
                           uk + n >= std::numeric_limits<VertexId>::max();
    if (too_large) {
        throw ResourceError("network (k = " + std::to_string(k) + ", n = " + std::to_string(n) +
                            ") exceeds the clique-arena budget of " + std::to_string(limit) +
                            " cells; raise HDRAN_MAX_ARENA_CELLS to allow it");
    }
    Network net(k);
    net.seed(seed);
    for (std::uint64_t t = 0; t < n; ++t) net.evolve_step();
    return net;
}

CliqueCensus clique_census(const Network& net) {
    CliqueCensus census;
    census.active_count = net.active_count();
    for (CliqueId id : net.active_ids()) {
        const Depth d = net.clique(id).depth;
        ++census.depth_counts[d];
        census.total_depth += d;
    }
    return census;
}

bool same_structure(const Network& a, const Network& b) {
    if (a.index_k() != b.index_k() || a.time_n() != b.time_n() ||
        a.seed_value() != b.seed_value() || a.vertex_count() != b.vertex_count() ||
        a.active_count() != b.active_count()) {
        return false;
    }
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
        const auto ra = a.neighbors(v);
        const auto rb = b.neighbors(v);
        if (!std::equal(ra.begin(), ra.end(), rb.begin(), rb.end())) return false;
    }
    for (std::size_t slot = 0; slot < a.active_count(); ++slot) {
        const auto ca = a.active_clique(slot);
        const auto cb = b.active_clique(slot);
        if (ca.depth != cb.depth ||
            !std::equal(ca.vertices.begin(), ca.vertices.end(), cb.vertices.begin(), cb.vertices.end())) {
            return false;
        }
    }
    return true;
}

}  // namespace hdran
