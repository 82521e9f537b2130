#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cagrow/alphabet.hpp"

namespace cagrow {

// A finite non-blank window on a two-way infinite tape. `offset` is the
// absolute index of the first stored cell. Invariant after normalize():
// first and last stored cells are non-blank (empty cells = all-blank tape),
// so span == cells.size(). Interior blanks are allowed.
struct Configuration {
    AlphabetPtr alphabet;
    std::int64_t offset = 0;
    std::vector<Symbol> cells;

    Configuration() = default;
    Configuration(AlphabetPtr a, std::int64_t off, std::vector<Symbol> c)
        : alphabet(std::move(a)), offset(off), cells(std::move(c)) {
        normalize();
    }

    bool all_blank() const { return cells.empty(); }
    std::int64_t leftmost() const { return offset; }
    std::int64_t rightmost() const { return offset + static_cast<std::int64_t>(cells.size()) - 1; }

    Symbol at(std::int64_t pos) const {
        if (pos < offset || pos > rightmost() || cells.empty()) return Alphabet::blank;
        return cells[static_cast<std::size_t>(pos - offset)];
    }

    void set(std::int64_t pos, Symbol s);

    // Trims blank ends, keeps offset consistent. All-blank resets offset to 0.
    void normalize();

    bool operator==(const Configuration& o) const {
        return offset == o.offset && cells == o.cells;
    }
};

struct Span {
    std::uint64_t value = 0;
};

// Inclusive cell count between the extreme non-blank cells; 0 when all blank.
inline Span span(const Configuration& c) { return Span{c.cells.size()}; }

inline Configuration shift(Configuration c, std::int64_t k) {
    if (!c.all_blank()) c.offset += k;
    return c;
}

// Trimmed word plus the offset it starts at. Two configurations are
// translates of each other iff the word components are equal.
struct CanonicalWord {
    std::vector<Symbol> word;
    std::int64_t offset = 0;
    bool operator==(const CanonicalWord& o) const { return word == o.word; }
};

inline CanonicalWord canonicalize(const Configuration& c) {
    return CanonicalWord{c.cells, c.offset};
}

// FNV-1a over the trimmed word; stable across platforms and runs.
std::uint64_t canonical_hash(const Configuration& c);

// Text format: optional `@k` offset prefix, then whitespace-separated symbol
// names. Unknown names are an error unless `grow` adds them to a private copy.
Configuration parse_configuration(const AlphabetPtr& a, const std::string& text);
std::string format_configuration(const Configuration& c, bool with_offset = true);

}  // namespace cagrow
