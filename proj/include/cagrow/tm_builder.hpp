#pragma once

#include <string>
#include <vector>

#include "cagrow/machine.hpp"

namespace cagrow {

// Incremental transition-table builder. fill() completes a state's row with
// reprint-and-move defaults; bracket symbols get forced directions so the
// defaults cannot trip convention clauses 1/2 (S is never exited leftward,
// F never rightward).
struct TmBuilder {
    AlphabetPtr a;
    std::vector<std::string> names;
    std::vector<std::string> halting;
    std::string initial;
    struct Entry {
        std::string q, s, w;
        Move mv;
        std::string n;
    };
    std::vector<Entry> entries;

    explicit TmBuilder(AlphabetPtr alphabet) : a(std::move(alphabet)) {}

    void state(const std::string& n, bool halt = false) {
        names.push_back(n);
        if (halt) halting.push_back(n);
    }
    bool covered(const std::string& q, const std::string& s) const {
        for (const auto& e : entries)
            if (e.q == q && e.s == s) return true;
        return false;
    }
    void on(const std::string& q, const std::string& s, const std::string& w, Move mv,
            const std::string& n) {
        entries.push_back({q, s, w, mv, n});
    }
    void fill(const std::string& q, Move mv, const std::string& n) {
        for (std::size_t i = 0; i < a->size(); ++i) {
            std::string s = a->name(static_cast<Symbol>(i));
            if (covered(q, s)) continue;
            Move dir = mv;
            if (s == "S") dir = Move::R;
            if (s == "F") dir = Move::L;
            on(q, s, s, dir, n);
        }
    }
    TuringMachineSpec build() const {
        TuringMachineSpec probe(a, names, 0, {});
        std::vector<StateId> halt_ids;
        for (const auto& h : halting) halt_ids.push_back(static_cast<StateId>(probe.find_state(h)));
        std::int32_t init = probe.find_state(initial);
        if (init < 0) throw std::invalid_argument("initial state missing");
        TuringMachineSpec m(a, names, static_cast<StateId>(init), halt_ids);
        for (const auto& e : entries)
            m.set(static_cast<StateId>(m.find_state(e.q)), a->id(e.s),
                  Transition{a->id(e.w), e.mv, static_cast<StateId>(m.find_state(e.n))});
        m.validate_total();
        return m;
    }
};

}  // namespace cagrow
