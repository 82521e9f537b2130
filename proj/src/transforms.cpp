#include "cagrow/transforms.hpp"

#include <algorithm>

#include "cagrow/tm_builder.hpp"

namespace cagrow {

std::string pair_symbol_name(const std::string& base_name, char track2) {
    if (track2 == 'B') return base_name;
    return base_name + "." + track2;
}

AlphabetPtr pair_alphabet(const AlphabetPtr& base) {
    auto a = std::make_shared<Alphabet>();
    for (std::size_t i = 0; i < base->size(); ++i) a->add(base->name(static_cast<Symbol>(i)));
    for (char t : {'0', '1'})
        for (std::size_t i = 0; i < base->size(); ++i)
            a->add(pair_symbol_name(base->name(static_cast<Symbol>(i)), t));
    return a;
}

namespace {

// Track decomposition of a pair-alphabet symbol name.
struct PairParts {
    std::string base;
    char track2;  // 'B', '0' or '1'
};

PairParts pair_parts(const std::string& name) {
    if (name.size() > 2 && name[name.size() - 2] == '.' &&
        (name.back() == '0' || name.back() == '1'))
        return {name.substr(0, name.size() - 2), name.back()};
    return {name, 'B'};
}

}  // namespace

Configuration embed_track1(const Configuration& plain, const AlphabetPtr& paired) {
    std::vector<Symbol> cells;
    cells.reserve(plain.cells.size());
    for (Symbol s : plain.cells) cells.push_back(paired->id(plain.alphabet->name(s)));
    return Configuration(paired, plain.offset, std::move(cells));
}

Configuration project_track1(const Configuration& paired, const AlphabetPtr& plain) {
    std::vector<Symbol> cells;
    cells.reserve(paired.cells.size());
    for (Symbol s : paired.cells)
        cells.push_back(plain->id(pair_parts(paired.alphabet->name(s)).base));
    return Configuration(plain, paired.offset, std::move(cells));
}

// ---------------------------------------------------------------------------
// make_nocycle

TuringMachineSpec make_nocycle(const TuringMachineSpec& m) {
    const Alphabet& base = *m.alphabet();
    AlphabetPtr paired = pair_alphabet(m.alphabet());
    TmBuilder b(paired);

    auto wr = [](const std::string& q) { return "wr:" + q; };
    auto wb = [](const std::string& q) { return "wb:" + q; };

    for (std::size_t q = 0; q < m.state_count(); ++q) {
        bool halt = m.is_halting(static_cast<StateId>(q));
        b.state(m.state_name(static_cast<StateId>(q)), halt);
        if (!halt) {
            b.state(wr(m.state_name(static_cast<StateId>(q))));
            b.state(wb(m.state_name(static_cast<StateId>(q))));
        }
    }
    b.initial = m.state_name(m.initial());

    for (StateId q = 0; q < m.state_count(); ++q) {
        if (m.is_halting(q)) continue;
        const std::string qn = m.state_name(q);
        for (Symbol s = 0; s < base.size(); ++s) {
            const std::string sn = base.name(s);
            const Transition& t = m.at(q, s);
            const std::string wn = base.name(t.write);
            const std::string next =
                m.state_name(t.next);  // halting targets keep their own (frozen) names
            // Fresh cell: fuse the mark with the simulated step.
            b.on(qn, pair_symbol_name(sn, 'B'), pair_symbol_name(wn, '1'), t.move, next);
            // Marked cell: drop a 0 breadcrumb and walk right for a fresh mark.
            b.on(qn, pair_symbol_name(sn, '0'), pair_symbol_name(sn, '0'), Move::R, wr(qn));
            b.on(qn, pair_symbol_name(sn, '1'), pair_symbol_name(sn, '0'), Move::R, wr(qn));
            // Walk right over 1s; mark the first other cell and turn around.
            b.on(wr(qn), pair_symbol_name(sn, '1'), pair_symbol_name(sn, '1'), Move::R, wr(qn));
            b.on(wr(qn), pair_symbol_name(sn, '0'), pair_symbol_name(sn, '1'), Move::L, wb(qn));
            b.on(wr(qn), pair_symbol_name(sn, 'B'), pair_symbol_name(sn, '1'), Move::L, wb(qn));
            // Walk back to the breadcrumb; flip it to 1 fused with the step.
            b.on(wb(qn), pair_symbol_name(sn, '1'), pair_symbol_name(sn, '1'), Move::L, wb(qn));
            b.on(wb(qn), pair_symbol_name(sn, '0'), pair_symbol_name(wn, '1'), t.move, next);
            b.on(wb(qn), pair_symbol_name(sn, 'B'), pair_symbol_name(wn, '1'), t.move, next);
        }
    }
    return b.build();
}

// ---------------------------------------------------------------------------
// make_fully_compute

namespace {

void require_wrappable(const TuringMachineSpec& m_f) {
    auto rep = check_conventions(m_f);
    if (!rep.ok())
        throw ConventionError("input machine violates the operating conventions:\n" +
                              rep.to_string());
    const Symbol S = m_f.alphabet()->id("S");
    for (StateId q = 0; q < m_f.state_count(); ++q) {
        if (m_f.is_halting(q)) continue;
        const Transition& t = m_f.at(q, S);
        if (t.write != S || t.move != Move::R)
            throw std::invalid_argument(
                "input machine must keep its S bracket in place (entry (" + m_f.state_name(q) +
                ", S) rewrites or exits it leftward)");
    }
}

std::string m_state(const std::string& n) { return "m:" + n; }

}  // namespace

TuringMachineSpec make_fully_compute(const TuringMachineSpec& m_f) {
    require_wrappable(m_f);
    const Alphabet& ma = *m_f.alphabet();

    std::vector<std::string> extra = {"0m", "1m"};
    for (std::size_t i = 0; i < ma.size(); ++i) extra.push_back(ma.name(static_cast<Symbol>(i)));
    AlphabetPtr a = tm_alphabet(extra);
    TmBuilder b(a);

    for (const char* n : {"q0", "postS", "mWalkR", "fRest", "retL", "cpFind", "cpScan", "carry0",
                          "carry1", "unm", "mgo", "eE", "eW", "inc"})
        b.state(n);
    for (StateId q = 0; q < m_f.state_count(); ++q)
        if (!m_f.is_halting(q)) b.state(m_state(m_f.state_name(q)));
    b.initial = "q0";

    auto tgt = [&](StateId q) {
        return m_f.is_halting(q) ? std::string("eE") : m_state(m_f.state_name(q));
    };

    // Boot / S-restore. q0 is the restorer, so a running computation's S cell
    // always carries state q0 after the head moves on.
    b.on("q0", "S", "0", Move::L, "q0");
    b.on("q0", "B", "S", Move::R, "postS");
    b.fill("q0", Move::R, "postS");

    b.on("postS", "0", "0", Move::R, "mWalkR");
    b.on("postS", "1", "1", Move::R, "mWalkR");
    b.on("postS", "B", "0", Move::R, "mWalkR");  // blank boot: first digit of m=0
    b.fill("postS", Move::R, "mWalkR");

    b.on("mWalkR", "0", "0", Move::R, "mWalkR");
    b.on("mWalkR", "1", "1", Move::R, "mWalkR");
    b.on("mWalkR", "*", "*", Move::L, "cpFind");
    b.on("mWalkR", "B", "*", Move::R, "fRest");  // scaffold: * then F
    b.fill("mWalkR", Move::R, "mWalkR");

    b.on("fRest", "B", "F", Move::L, "retL");
    b.fill("fRest", Move::L, "retL");

    b.on("retL", "0", "0", Move::L, "retL");
    b.on("retL", "1", "1", Move::L, "retL");
    b.on("retL", "B", "B", Move::L, "retL");
    b.on("retL", "*", "*", Move::L, "cpFind");
    b.fill("retL", Move::L, "retL");

    for (const char* s : {"0", "1", "0m", "1m", "*"}) b.on("cpFind", s, s, Move::L, "cpFind");
    b.on("cpFind", "S", "S", Move::R, "cpScan");
    b.fill("cpFind", Move::L, "cpFind");

    b.on("cpScan", "0m", "0m", Move::R, "cpScan");
    b.on("cpScan", "1m", "1m", Move::R, "cpScan");
    b.on("cpScan", "0", "0m", Move::R, "carry0");
    b.on("cpScan", "1", "1m", Move::R, "carry1");
    b.on("cpScan", "*", "*", Move::L, "unm");
    b.fill("cpScan", Move::R, "cpScan");

    for (const char* carry : {"carry0", "carry1"}) {
        const char* bit = carry[5] == '0' ? "0" : "1";
        for (const char* s : {"0", "1", "0m", "1m", "*"}) b.on(carry, s, s, Move::R, carry);
        b.on(carry, "B", bit, Move::L, "retL");
        b.on(carry, "F", bit, Move::R, "fRest");
        b.fill(carry, Move::R, carry);
    }

    b.on("unm", "0m", "0", Move::L, "unm");
    b.on("unm", "1m", "1", Move::L, "unm");
    b.on("unm", "0", "0", Move::L, "unm");
    b.on("unm", "1", "1", Move::L, "unm");
    b.on("unm", "S", "S", Move::R, "mgo");
    b.fill("unm", Move::L, "unm");

    b.on("mgo", "0", "0", Move::R, "mgo");
    b.on("mgo", "1", "1", Move::R, "mgo");
    if (m_f.is_halting(m_f.initial()))
        b.on("mgo", "*", "*", Move::R, "eE");
    else
        b.on("mgo", "*", "*", Move::R, tgt(m_f.at(m_f.initial(), ma.id("S")).next));
    b.fill("mgo", Move::R, "mgo");

    b.on("eE", "F", "F", Move::L, "eW");
    b.fill("eE", Move::R, "eE");

    b.on("eW", "*", "*", Move::L, "inc");
    b.on("eW", "B", "B", Move::L, "eW");
    for (std::size_t i = 0; i < a->size(); ++i) {
        std::string s = a->name(static_cast<Symbol>(i));
        if (s == "*" || s == "B" || s == "S" || s == "F") continue;
        b.on("eW", s, "B", Move::L, "eW");
    }
    b.fill("eW", Move::L, "eW");

    b.on("inc", "0", "1", Move::L, "cpFind");
    b.on("inc", "1", "0", Move::L, "inc");
    b.on("inc", "S", "1", Move::L, "q0");
    b.fill("inc", Move::L, "inc");

    // The wrapped machine, reading * where it would read S; transitions into
    // its halting states divert to the erase phase.
    for (StateId q = 0; q < m_f.state_count(); ++q) {
        if (m_f.is_halting(q)) continue;
        const std::string qn = m_state(m_f.state_name(q));
        for (Symbol s = 0; s < ma.size(); ++s) {
            const std::string sn = ma.name(s);
            if (sn == "S") continue;
            const Transition& t = m_f.at(q, s);
            if (sn == "*") {
                const Transition& ts = m_f.at(q, ma.id("S"));
                b.on(qn, "*", "*", Move::R, tgt(ts.next));
                continue;
            }
            b.on(qn, sn, ma.name(t.write), t.move, tgt(t.next));
        }
        b.fill(qn, Move::R, qn);
    }

    return b.build();
}

// ---------------------------------------------------------------------------
// make_minima_machine

TuringMachineSpec make_minima_machine(const TuringMachineSpec& m_f) {
    require_wrappable(m_f);
    const Alphabet& ma = *m_f.alphabet();

    std::vector<std::string> extra = {"0m", "1m"};
    for (std::size_t i = 0; i < ma.size(); ++i) extra.push_back(ma.name(static_cast<Symbol>(i)));
    AlphabetPtr base = tm_alphabet(extra);
    AlphabetPtr a = pair_alphabet(base);
    TmBuilder b(a);

    auto P = [](const std::string& s, char t) { return pair_symbol_name(s, t); };
    auto is_bracket = [](const std::string& s) { return s == "S" || s == "F" || s == "*"; };
    const std::vector<char> tracks = {'B', '0', '1'};

    for (const char* n : {"q0", "postS", "mWalkR", "fRest", "retL", "cpFind", "cpScan", "carry0",
                          "carry1", "unm", "mgo", "tx", "eA", "bumpW", "eBb0", "eBb1", "eBc",
                          "eBd", "eBe", "eBf", "eBf2", "eBg", "inc"})
        b.state(n);
    for (StateId q = 0; q < m_f.state_count(); ++q)
        if (!m_f.is_halting(q)) {
            b.state(m_state(m_f.state_name(q)));
            b.state("wr:" + m_f.state_name(q));
            b.state("wb:" + m_f.state_name(q));
        }
    b.initial = "q0";

    auto tgt = [&](StateId q) {
        return m_f.is_halting(q) ? std::string("tx") : m_state(m_f.state_name(q));
    };

    // Boot and S-restore, as in the fully-compute wrapper. Bracket cells stay
    // unmarked so the S cell keeps its stop-cell shape.
    for (char t : tracks) b.on("q0", P("S", t), P("0", t), Move::L, "q0");
    for (char t : tracks) b.on("q0", P("B", t), P("S", 'B'), Move::R, "postS");
    b.fill("q0", Move::R, "postS");

    for (char t : tracks) {
        b.on("postS", P("0", t), P("0", t), Move::R, "mWalkR");
        b.on("postS", P("1", t), P("1", t), Move::R, "mWalkR");
        b.on("postS", P("B", t), P("0", t), Move::R, "mWalkR");
    }
    b.fill("postS", Move::R, "mWalkR");

    for (char t : tracks) {
        b.on("mWalkR", P("0", t), P("0", t), Move::R, "mWalkR");
        b.on("mWalkR", P("1", t), P("1", t), Move::R, "mWalkR");
        b.on("mWalkR", P("*", t), P("*", t), Move::L, "cpFind");
        b.on("mWalkR", P("B", t), P("*", 'B'), Move::R, "fRest");
    }
    b.fill("mWalkR", Move::R, "mWalkR");

    for (char t : tracks) b.on("fRest", P("B", t), P("F", 'B'), Move::L, "retL");
    b.fill("fRest", Move::L, "retL");

    for (char t : tracks) {
        for (const char* s : {"0", "1", "B"}) b.on("retL", P(s, t), P(s, t), Move::L, "retL");
        b.on("retL", P("*", t), P("*", t), Move::L, "cpFind");
    }
    b.fill("retL", Move::L, "retL");

    for (char t : tracks) {
        for (const char* s : {"0", "1", "0m", "1m", "*"})
            b.on("cpFind", P(s, t), P(s, t), Move::L, "cpFind");
        b.on("cpFind", P("S", t), P("S", t), Move::R, "cpScan");
    }
    b.fill("cpFind", Move::L, "cpFind");

    for (char t : tracks) {
        b.on("cpScan", P("0m", t), P("0m", t), Move::R, "cpScan");
        b.on("cpScan", P("1m", t), P("1m", t), Move::R, "cpScan");
        b.on("cpScan", P("0", t), P("0m", t), Move::R, "carry0");
        b.on("cpScan", P("1", t), P("1m", t), Move::R, "carry1");
        b.on("cpScan", P("*", t), P("*", t), Move::L, "unm");
    }
    b.fill("cpScan", Move::R, "cpScan");

    for (const char* carry : {"carry0", "carry1"}) {
        const char* bit = carry[5] == '0' ? "0" : "1";
        for (char t : tracks) {
            for (const char* s : {"0", "1", "0m", "1m", "*"})
                b.on(carry, P(s, t), P(s, t), Move::R, carry);
            b.on(carry, P("B", t), P(bit, t), Move::L, "retL");
            b.on(carry, P("F", t), P(bit, t), Move::R, "fRest");
        }
        b.fill(carry, Move::R, carry);
    }

    for (char t : tracks) {
        b.on("unm", P("0m", t), P("0", t), Move::L, "unm");
        b.on("unm", P("1m", t), P("1", t), Move::L, "unm");
        b.on("unm", P("0", t), P("0", t), Move::L, "unm");
        b.on("unm", P("1", t), P("1", t), Move::L, "unm");
        b.on("unm", P("S", t), P("S", t), Move::R, "mgo");
    }
    b.fill("unm", Move::L, "unm");

    for (char t : tracks) {
        b.on("mgo", P("0", t), P("0", t), Move::R, "mgo");
        b.on("mgo", P("1", t), P("1", t), Move::R, "mgo");
        if (m_f.is_halting(m_f.initial()))
            b.on("mgo", P("*", t), P("*", t), Move::R, "tx");
        else
            b.on("mgo", P("*", t), P("*", t), Move::R,
                 tgt(m_f.at(m_f.initial(), ma.id("S")).next));
    }
    b.fill("mgo", Move::R, "mgo");

    // Wrapped machine with track-2 marking fused into every step on
    // non-bracket cells; marked cells trigger the breadcrumb walk.
    for (StateId q = 0; q < m_f.state_count(); ++q) {
        if (m_f.is_halting(q)) continue;
        const std::string qn = m_state(m_f.state_name(q));
        const std::string wrq = "wr:" + m_f.state_name(q);
        const std::string wbq = "wb:" + m_f.state_name(q);
        for (Symbol s = 0; s < ma.size(); ++s) {
            const std::string sn = ma.name(s);
            if (sn == "S") continue;
            Transition t;
            std::string wn;
            if (sn == "*") {
                const Transition& ts = m_f.at(q, ma.id("S"));
                t = Transition{0, Move::R, ts.next};
                wn = "*";
            } else {
                t = m_f.at(q, s);
                wn = ma.name(t.write);
            }
            if (is_bracket(sn)) {
                for (char tr : tracks) b.on(qn, P(sn, tr), P(wn, tr), t.move, tgt(t.next));
            } else {
                b.on(qn, P(sn, 'B'), P(wn, '1'), t.move, tgt(t.next));
                b.on(qn, P(sn, '0'), P(sn, '0'), Move::R, wrq);
                b.on(qn, P(sn, '1'), P(sn, '0'), Move::R, wrq);
                b.on(wbq, P(sn, '0'), P(wn, '1'), t.move, tgt(t.next));
                b.on(wbq, P(sn, 'B'), P(wn, '1'), t.move, tgt(t.next));
            }
        }
        // Walk right to the first unmarked non-bracket cell; brackets pass.
        for (std::size_t i = 0; i < ma.size(); ++i) {
            const std::string sn = ma.name(static_cast<Symbol>(i));
            if (is_bracket(sn)) {
                for (char tr : tracks) {
                    if (!b.covered(wrq, P(sn, tr))) b.on(wrq, P(sn, tr), P(sn, tr), Move::R, wrq);
                    if (!b.covered(wbq, P(sn, tr))) b.on(wbq, P(sn, tr), P(sn, tr), Move::L, wbq);
                }
            } else {
                b.on(wrq, P(sn, '1'), P(sn, '1'), Move::R, wrq);
                b.on(wrq, P(sn, '0'), P(sn, '1'), Move::L, wbq);
                b.on(wrq, P(sn, 'B'), P(sn, '1'), Move::L, wbq);
                b.on(wbq, P(sn, '1'), P(sn, '1'), Move::L, wbq);
            }
        }
        b.fill(qn, Move::R, qn);
        b.fill(wrq, Move::R, wrq);
        b.fill(wbq, Move::L, wbq);
    }

    // Tail extension: one fresh mark past everything (the interpolated step).
    b.on("tx", P("B", 'B'), P("B", '1'), Move::L, "eA");
    b.fill("tx", Move::R, "tx");

    // Erase the track-2 tail back to the rightmost track-1 cell.
    b.on("eA", P("B", '0'), P("B", 'B'), Move::L, "eA");
    b.on("eA", P("B", '1'), P("B", 'B'), Move::L, "eA");
    for (std::size_t i = 0; i < ma.size(); ++i) {
        const std::string sn = ma.name(static_cast<Symbol>(i));
        if (sn == "B") continue;
        for (char tr : tracks)
            if (!b.covered("eA", P(sn, tr))) b.on("eA", P(sn, tr), P(sn, tr), Move::R, "bumpW");
    }
    for (const char* sn : {"0m", "1m"})
        for (char tr : tracks) b.on("eA", P(sn, tr), P(sn, tr), Move::R, "bumpW");
    b.fill("eA", Move::L, "eA");

    // One-cell bump, erased immediately; it separates the two minima.
    b.on("bumpW", P("B", 'B'), P("B", '1'), Move::R, "eBb0");
    b.fill("bumpW", Move::R, "bumpW");
    b.on("eBb0", P("B", 'B'), P("B", 'B'), Move::L, "eBb1");
    b.fill("eBb0", Move::L, "eBb1");
    b.on("eBb1", P("B", '1'), P("B", 'B'), Move::L, "eBc");
    b.fill("eBb1", Move::L, "eBc");

    // Erase F, then the output digits right-to-left; the most significant
    // digit cell becomes the new F, so the tape bottoms out reading Sn*F.
    for (char tr : tracks) b.on("eBc", P("F", tr), P("B", 'B'), Move::L, "eBd");
    b.fill("eBc", Move::L, "eBd");

    for (const char* sn : {"0", "1", "0m", "1m"})
        for (char tr : tracks) b.on("eBd", P(sn, tr), P(sn, tr), Move::L, "eBe");
    for (char tr : tracks) b.on("eBd", P("*", tr), P("*", tr), Move::R, "eBf2");
    b.fill("eBd", Move::L, "eBd");

    for (char tr : tracks) b.on("eBe", P("*", tr), P("*", tr), Move::R, "eBf");
    for (const char* sn : {"0", "1", "0m", "1m"})
        for (char tr : tracks) b.on("eBe", P(sn, tr), P(sn, tr), Move::R, "eBg");
    b.fill("eBe", Move::R, "eBg");

    for (const char* sn : {"0", "1", "0m", "1m", "B"})
        for (char tr : tracks)
            if (!b.covered("eBg", P(sn, tr))) b.on("eBg", P(sn, tr), P("B", 'B'), Move::L, "eBd");
    b.fill("eBg", Move::L, "eBd");

    for (const char* sn : {"0", "1", "0m", "1m"})
        for (char tr : tracks) b.on("eBf", P(sn, tr), P("F", 'B'), Move::L, "inc");
    b.fill("eBf", Move::L, "inc");

    // Increment, with the S-shift through q0 on overflow.
    for (char t : tracks) {
        b.on("inc", P("*", t), P("*", t), Move::L, "inc");
        b.on("inc", P("0", t), P("1", t), Move::L, "cpFind");
        b.on("inc", P("1", t), P("0", t), Move::L, "inc");
        b.on("inc", P("S", t), P("1", 'B'), Move::L, "q0");
    }
    b.fill("inc", Move::L, "inc");

    for (char tr : tracks) b.on("eBf2", P("B", tr), P("F", 'B'), Move::L, "inc");
    b.fill("eBf2", Move::L, "inc");

    return b.build();
}

}  // namespace cagrow
