#pragma once

#include <optional>
#include <string>

#include "cagrow/tape.hpp"

namespace cagrow {

enum class Layer { sigma, sigma1 };

// Layered symbol names are written "s/q/p" (symbol, state, head position).
struct LayeredParts {
    std::string sym, state, pos;
};
std::optional<LayeredParts> split_layered(const std::string& name);
std::string join_layered(const std::string& sym, const std::string& state, const std::string& pos);

// First coordinate of a cell: the bare name for plain alphabets, the "s"
// part for layered names.
std::string first_coordinate(const Alphabet& a, Symbol s);

// sigma: unique S, unique F, every non-blank cell between them.
// sigma1: additionally a unique head-position H among non-blank cells, R on
// every non-blank cell left of it and L on every one right of it, judged on
// the layered position coordinate.
bool is_standard_config(const Configuration& c, Layer layer);

// Sm*nF with MSB-first binary numerals; either numeral may be empty, and an
// empty numeral is distinct from 0.
struct IoForm {
    std::optional<std::uint64_t> m, n;
    bool operator==(const IoForm& o) const { return m == o.m && n == o.n; }
};
std::optional<IoForm> is_standard_io(const Configuration& c);

std::string binary_digits(std::uint64_t v);
Configuration make_io_configuration(const AlphabetPtr& a, std::optional<std::uint64_t> m,
                                    std::optional<std::uint64_t> n, std::int64_t offset = 0);

// Projection of a configuration onto first coordinates, over the given
// plain alphabet. Cells whose first coordinate is not in `target` are an error.
Configuration project_first(const Configuration& c, const AlphabetPtr& target);

}  // namespace cagrow
