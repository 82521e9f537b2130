#pragma once

#include <map>
#include <string>

#include "cagrow/machine.hpp"
#include "cagrow/standard.hpp"

namespace testsup {

using namespace cagrow;

inline Configuration cfg(const AlphabetPtr& a, const std::string& text) {
    return parse_configuration(a, text);
}

// Independent reference stepper: a deliberately different tape representation
// (sparse map keyed by absolute position) for differential checks against
// tm_step.
struct RefTm {
    std::map<std::int64_t, std::string> tape;
    std::int64_t head = 0;
    std::string state;

    static RefTm from(const TuringMachineSpec& m, const TmConfiguration& c) {
        RefTm r;
        const Alphabet& a = *m.alphabet();
        for (std::int64_t i = c.tape.leftmost(); i <= c.tape.rightmost() && !c.tape.all_blank(); ++i)
            if (c.tape.at(i) != Alphabet::blank) r.tape[i] = a.name(c.tape.at(i));
        r.head = c.head;
        r.state = m.state_name(c.state);
        return r;
    }

    void step(const TuringMachineSpec& m) {
        StateId q = static_cast<StateId>(m.find_state(state));
        if (m.is_halting(q)) return;
        auto it = tape.find(head);
        std::string read = it == tape.end() ? "B" : it->second;
        const Transition& t = m.at(q, m.alphabet()->id(read));
        std::string written = m.alphabet()->name(t.write);
        if (written == "B")
            tape.erase(head);
        else
            tape[head] = written;
        head += (t.move == Move::L) ? -1 : 1;
        state = m.state_name(t.next);
    }

    bool matches(const TuringMachineSpec& m, const TmConfiguration& c) const {
        if (head != c.head || state != m.state_name(c.state)) return false;
        RefTm other = from(m, c);
        return other.tape == tape;
    }
};

}  // namespace testsup
