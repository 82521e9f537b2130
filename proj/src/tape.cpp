#include "cagrow/tape.hpp"

#include <sstream>

namespace cagrow {

void Configuration::normalize() {
    std::size_t lead = 0;
    while (lead < cells.size() && cells[lead] == Alphabet::blank) ++lead;
    if (lead == cells.size()) {
        cells.clear();
        offset = 0;
        return;
    }
    std::size_t tail = cells.size();
    while (tail > lead && cells[tail - 1] == Alphabet::blank) --tail;
    if (lead > 0 || tail < cells.size()) {
        cells = std::vector<Symbol>(cells.begin() + lead, cells.begin() + tail);
        offset += static_cast<std::int64_t>(lead);
    }
}

void Configuration::set(std::int64_t pos, Symbol s) {
    if (cells.empty()) {
        if (s == Alphabet::blank) return;
        offset = pos;
        cells.assign(1, s);
        return;
    }
    if (pos < offset) {
        if (s == Alphabet::blank) return;
        cells.insert(cells.begin(), static_cast<std::size_t>(offset - pos), Alphabet::blank);
        offset = pos;
        cells[0] = s;
        return;
    }
    if (pos > rightmost()) {
        if (s == Alphabet::blank) return;
        cells.resize(static_cast<std::size_t>(pos - offset) + 1, Alphabet::blank);
        cells.back() = s;
        return;
    }
    cells[static_cast<std::size_t>(pos - offset)] = s;
    if (s == Alphabet::blank && (pos == offset || pos == rightmost())) normalize();
}

std::uint64_t canonical_hash(const Configuration& c) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(c.cells.size());
    for (Symbol s : c.cells) mix(s);
    return h;
}

Configuration parse_configuration(const AlphabetPtr& a, const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::int64_t off = 0;
    std::vector<Symbol> cells;
    bool first = true;
    while (in >> tok) {
        if (first && tok.size() > 1 && tok[0] == '@') {
            off = std::stoll(tok.substr(1));
            first = false;
            continue;
        }
        first = false;
        cells.push_back(a->id(tok));
    }
    return Configuration(a, off, std::move(cells));
}

std::string format_configuration(const Configuration& c, bool with_offset) {
    std::ostringstream out;
    if (with_offset) out << '@' << c.offset;
    for (Symbol s : c.cells) {
        if (out.tellp() > 0) out << ' ';
        out << c.alphabet->name(s);
    }
    if (out.tellp() == 0) out << "@0";
    return out.str();
}

}  // namespace cagrow
