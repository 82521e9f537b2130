#include "cagrow/standard.hpp"

#include <algorithm>

namespace cagrow {

std::optional<LayeredParts> split_layered(const std::string& name) {
    auto p1 = name.find('/');
    if (p1 == std::string::npos) return std::nullopt;
    auto p2 = name.find('/', p1 + 1);
    if (p2 == std::string::npos || name.find('/', p2 + 1) != std::string::npos) return std::nullopt;
    LayeredParts parts{name.substr(0, p1), name.substr(p1 + 1, p2 - p1 - 1), name.substr(p2 + 1)};
    if (parts.sym.empty() || parts.state.empty() || parts.pos.empty()) return std::nullopt;
    return parts;
}

std::string join_layered(const std::string& sym, const std::string& state, const std::string& pos) {
    return sym + "/" + state + "/" + pos;
}

std::string first_coordinate(const Alphabet& a, Symbol s) {
    const std::string& n = a.name(s);
    if (auto parts = split_layered(n)) return parts->sym;
    return n;
}

namespace {

std::string position_coordinate(const Alphabet& a, Symbol s) {
    if (s == Alphabet::blank) return "B";
    if (auto parts = split_layered(a.name(s))) return parts->pos;
    throw std::invalid_argument("alphabet mismatch: '" + a.name(s) + "' is not a layered symbol");
}

bool standard_sigma_firsts(const Configuration& c) {
    const Alphabet& a = *c.alphabet;
    int s_count = 0, f_count = 0;
    std::int64_t s_pos = 0, f_pos = 0;
    std::int64_t left = 0, right = -1;
    bool any = false;
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        if (c.cells[i] == Alphabet::blank) continue;
        std::string fc = first_coordinate(a, c.cells[i]);
        std::int64_t pos = c.offset + static_cast<std::int64_t>(i);
        if (fc == "B") continue;
        if (!any) left = pos, any = true;
        right = pos;
        if (fc == "S") ++s_count, s_pos = pos;
        if (fc == "F") ++f_count, f_pos = pos;
    }
    if (!any) return false;
    if (s_count != 1 || f_count != 1) return false;
    return s_pos == left && f_pos == right && s_pos < f_pos;
}

}  // namespace

bool is_standard_config(const Configuration& c, Layer layer) {
    const Alphabet& a = *c.alphabet;
    if (layer == Layer::sigma) {
        if (!a.contains("S") || !a.contains("F"))
            throw std::invalid_argument("alphabet mismatch: missing S/F");
        int s_count = 0, f_count = 0;
        std::int64_t s_pos = 0, f_pos = 0;
        for (std::size_t i = 0; i < c.cells.size(); ++i) {
            const std::string& n = a.name(c.cells[i]);
            if (n == "S") ++s_count, s_pos = c.offset + static_cast<std::int64_t>(i);
            if (n == "F") ++f_count, f_pos = c.offset + static_cast<std::int64_t>(i);
        }
        if (s_count != 1 || f_count != 1 || c.all_blank()) return false;
        return s_pos == c.leftmost() && f_pos == c.rightmost();
    }
    // sigma1
    if (!standard_sigma_firsts(c)) return false;
    int h_count = 0;
    std::int64_t h_pos = 0;
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        if (c.cells[i] == Alphabet::blank) continue;
        if (position_coordinate(a, c.cells[i]) == "H") {
            ++h_count;
            h_pos = c.offset + static_cast<std::int64_t>(i);
        }
    }
    if (h_count != 1) return false;
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        if (c.cells[i] == Alphabet::blank) continue;
        std::int64_t pos = c.offset + static_cast<std::int64_t>(i);
        std::string p = position_coordinate(a, c.cells[i]);
        if (pos < h_pos && p != "R") return false;
        if (pos > h_pos && p != "L") return false;
    }
    return true;
}

std::optional<IoForm> is_standard_io(const Configuration& c) {
    const Alphabet& a = *c.alphabet;
    if (c.all_blank()) return std::nullopt;
    std::vector<std::string> names;
    names.reserve(c.cells.size());
    for (Symbol s : c.cells) names.push_back(first_coordinate(a, s));
    if (names.front() != "S" || names.back() != "F") return std::nullopt;
    std::size_t star = names.size();
    for (std::size_t i = 1; i + 1 < names.size(); ++i)
        if (names[i] == "*") {
            if (star != names.size()) return std::nullopt;
            star = i;
        }
    if (star == names.size()) return std::nullopt;
    auto decode = [&](std::size_t from, std::size_t to) -> std::optional<std::optional<std::uint64_t>> {
        if (from == to) return std::optional<std::uint64_t>{};
        std::uint64_t v = 0;
        for (std::size_t i = from; i < to; ++i) {
            if (names[i] != "0" && names[i] != "1") return std::nullopt;
            v = (v << 1) | (names[i] == "1" ? 1u : 0u);
        }
        return std::optional<std::uint64_t>{v};
    };
    auto m = decode(1, star);
    auto n = decode(star + 1, names.size() - 1);
    if (!m || !n) return std::nullopt;
    return IoForm{*m, *n};
}

std::string binary_digits(std::uint64_t v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(char('0' + (v & 1)));
        v >>= 1;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

Configuration make_io_configuration(const AlphabetPtr& a, std::optional<std::uint64_t> m,
                                    std::optional<std::uint64_t> n, std::int64_t offset) {
    std::vector<Symbol> cells;
    cells.push_back(a->id("S"));
    if (m)
        for (char d : binary_digits(*m)) cells.push_back(a->id(std::string(1, d)));
    cells.push_back(a->id("*"));
    if (n)
        for (char d : binary_digits(*n)) cells.push_back(a->id(std::string(1, d)));
    cells.push_back(a->id("F"));
    return Configuration(a, offset, std::move(cells));
}

Configuration project_first(const Configuration& c, const AlphabetPtr& target) {
    std::vector<Symbol> cells;
    cells.reserve(c.cells.size());
    for (Symbol s : c.cells) {
        std::string fc = first_coordinate(*c.alphabet, s);
        cells.push_back(target->id(fc));
    }
    return Configuration(target, c.offset, std::move(cells));
}

}  // namespace cagrow
