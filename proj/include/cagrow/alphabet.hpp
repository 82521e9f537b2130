#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cagrow {

using Symbol = std::uint16_t;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite symbol set with a designated blank. The blank is always index 0,
// so blank tests are a comparison against zero everywhere.
class Alphabet {
  public:
    Alphabet() { add("B"); }
    explicit Alphabet(const std::vector<std::string>& names, const std::string& blank_name = "B") {
        add(blank_name);
        for (const auto& n : names)
            if (n != blank_name) add(n);
    }

    Symbol add(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        if (name.empty() || name.find_first_of(" \t\n") != std::string::npos)
            throw std::invalid_argument("bad symbol name: '" + name + "'");
        Symbol id = static_cast<Symbol>(names_.size());
        names_.push_back(name);
        index_.emplace(name, id);
        return id;
    }

    std::size_t size() const { return names_.size(); }
    static constexpr Symbol blank = 0;

    const std::string& name(Symbol s) const { return names_.at(s); }
    bool contains(const std::string& n) const { return index_.count(n) != 0; }
    Symbol id(const std::string& n) const {
        auto it = index_.find(n);
        if (it == index_.end()) throw ParseError("unknown symbol '" + n + "'");
        return it->second;
    }
    std::int32_t find(const std::string& n) const {
        auto it = index_.find(n);
        return it == index_.end() ? -1 : static_cast<std::int32_t>(it->second);
    }

    bool operator==(const Alphabet& o) const { return names_ == o.names_; }

    // True when every TM-facing symbol the constructions rely on is present.
    bool has_tm_symbols() const {
        for (const char* n : {"0", "1", "S", "F", "*", "B"})
            if (!contains(n)) return false;
        return true;
    }

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Symbol> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr tm_alphabet(const std::vector<std::string>& extra = {}) {
    auto a = std::make_shared<Alphabet>();
    for (const char* n : {"0", "1", "S", "F", "*"}) a->add(n);
    for (const auto& n : extra) a->add(n);
    return a;
}

}  // namespace cagrow
