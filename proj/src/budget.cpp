#include "hdran/budget.hpp"

#include <cstdlib>

namespace hdran {

namespace {

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0') return fallback;
    return value;
}

}  // namespace

ResourceBudget ResourceBudget::from_environment() {
    ResourceBudget b;
    b.max_arena_cells = env_or("HDRAN_MAX_ARENA_CELLS", b.max_arena_cells);
    b.exact_distance_vertices = env_or("HDRAN_EXACT_DISTANCE_VERTICES", b.exact_distance_vertices);
    b.max_work_units = env_or("HDRAN_MAX_WORK_UNITS", b.max_work_units);
    return b;
}

}  // namespace hdran
