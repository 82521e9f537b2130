#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cagrow {

struct GrowthEntry {
    std::uint64_t t = 0;
    std::uint64_t span = 0;
    std::int64_t left = 0;   // 0 when span == 0
    std::int64_t right = 0;  // right < left encodes the empty window
    std::uint64_t hash = 0;  // canonical-word hash
};

// Per-step size records for a run; t runs 0..steps consecutively.
struct GrowthTrace {
    std::vector<GrowthEntry> entries;
    bool truncated = false;  // memory budget hit before the requested horizon

    std::size_t length() const { return entries.size(); }
    std::uint64_t span_at(std::uint64_t t) const { return entries.at(t).span; }
};

std::string growth_trace_csv(const GrowthTrace& g);
GrowthTrace parse_growth_trace_csv(const std::string& text);

}  // namespace cagrow
