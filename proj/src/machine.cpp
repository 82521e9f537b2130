#include "cagrow/machine.hpp"

#include <algorithm>
#include <sstream>

#include "cagrow/tm_builder.hpp"

namespace cagrow {

TuringMachineSpec::TuringMachineSpec(AlphabetPtr alphabet, std::vector<std::string> state_names,
                                     StateId initial, std::vector<StateId> halting)
    : alphabet_(std::move(alphabet)), state_names_(std::move(state_names)), initial_(initial) {
    if (!alphabet_ || !alphabet_->has_tm_symbols())
        throw std::invalid_argument("machine alphabet must contain 0,1,S,F,*,B");
    if (initial_ >= state_names_.size()) throw std::invalid_argument("bad initial state");
    halting_mask_.assign(state_names_.size(), false);
    for (StateId h : halting) halting_mask_.at(h) = true;
    table_.assign(state_names_.size() * alphabet_->size(), Transition{});
    defined_.assign(table_.size(), false);
}

std::int32_t TuringMachineSpec::find_state(const std::string& n) const {
    auto it = std::find(state_names_.begin(), state_names_.end(), n);
    if (it == state_names_.end()) return -1;
    return static_cast<std::int32_t>(it - state_names_.begin());
}

void TuringMachineSpec::set(StateId q, Symbol s, Transition t) {
    if (q >= state_names_.size() || s >= alphabet_->size() || t.next >= state_names_.size())
        throw std::invalid_argument("transition out of range");
    if (is_halting(q)) throw std::invalid_argument("halting states take no transitions");
    table_[index(q, s)] = t;
    defined_[index(q, s)] = true;
}

const Transition& TuringMachineSpec::at(StateId q, Symbol s) const {
    if (!defined_.at(index(q, s)))
        throw std::logic_error("undefined transition (" + state_name(q) + ", " +
                               alphabet_->name(s) + ")");
    return table_[index(q, s)];
}

void TuringMachineSpec::validate_total() const {
    std::string missing;
    for (StateId q = 0; q < state_names_.size(); ++q) {
        if (is_halting(q)) continue;
        for (Symbol s = 0; s < alphabet_->size(); ++s)
            if (!defined_[index(q, s)])
                missing += "  (" + state_name(q) + ", " + alphabet_->name(s) + ")\n";
    }
    if (!missing.empty()) throw ParseError("transition table is partial; missing pairs:\n" + missing);
}

std::uint64_t TuringMachineSpec::content_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    auto mix_str = [&](const std::string& s) {
        for (char c : s) mix(static_cast<unsigned char>(c));
        mix(0xff);
    };
    for (std::size_t i = 0; i < alphabet_->size(); ++i) mix_str(alphabet_->name(static_cast<Symbol>(i)));
    for (const auto& n : state_names_) mix_str(n);
    mix(initial_);
    for (std::size_t i = 0; i < table_.size(); ++i) {
        mix(defined_[i]);
        if (!defined_[i]) continue;
        mix(table_[i].write);
        mix(table_[i].move == Move::L ? 1 : 2);
        mix(table_[i].next);
    }
    for (bool b : halting_mask_) mix(b);
    return h;
}

TmCanonical tm_canonical(const TmConfiguration& c) {
    return TmCanonical{c.tape.cells, c.head - c.tape.offset, c.state};
}

std::uint64_t tm_canonical_hash(const TmConfiguration& c) {
    std::uint64_t h = canonical_hash(c.tape);
    h ^= 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(c.head - c.tape.offset);
    h *= 1099511628211ull;
    h ^= c.state;
    h *= 1099511628211ull;
    return h;
}

std::string ConventionReport::to_string() const {
    std::ostringstream out;
    for (const auto& v : violations)
        out << "clause " << v.clause << " at (" << v.state << ", " << v.symbol << "): " << v.detail
            << '\n';
    return out.str();
}

ConventionReport check_conventions(const TuringMachineSpec& m) {
    ConventionReport rep;
    const Alphabet& a = *m.alphabet();
    const Symbol S = a.id("S"), F = a.id("F");
    const Symbol zero = a.id("0"), one = a.id("1");

    auto violate = [&](StateId q, Symbol s, int clause, const std::string& d) {
        rep.violations.push_back({m.state_name(q), a.name(s), clause, d});
    };

    // Successor states of legal S-replacements / F-replacements.
    std::vector<bool> s_restorer(m.state_count(), false), f_restorer(m.state_count(), false);
    for (StateId q = 0; q < m.state_count(); ++q) {
        if (m.is_halting(q)) continue;
        if (m.has(q, S)) {
            const auto& t = m.at(q, S);
            if (t.move == Move::L && (t.write == zero || t.write == one)) s_restorer[t.next] = true;
        }
        if (m.has(q, F)) {
            const auto& t = m.at(q, F);
            if (t.move == Move::R && (t.write == zero || t.write == one)) f_restorer[t.next] = true;
        }
    }

    for (StateId q = 0; q < m.state_count(); ++q) {
        if (m.is_halting(q)) continue;
        // Clause 1: reading S, a left move must replace S by 0/1 and the next
        // state must put S back on the blank cell it lands on.
        if (m.has(q, S)) {
            const auto& t = m.at(q, S);
            if (t.move == Move::L) {
                if (t.write != zero && t.write != one)
                    violate(q, S, 1, "left move off S without replacing it by 0/1");
                else if (m.is_halting(t.next) || !m.has(t.next, Alphabet::blank) ||
                         m.at(t.next, Alphabet::blank).write != S ||
                         m.at(t.next, Alphabet::blank).move != Move::R)
                    violate(q, S, 1, "successor state does not print S and return right");
            }
        }
        // Clause 2: mirror image for F and right moves.
        if (m.has(q, F)) {
            const auto& t = m.at(q, F);
            if (t.move == Move::R) {
                if (t.write != zero && t.write != one)
                    violate(q, F, 2, "right move off F without replacing it by 0/1");
                else if (m.is_halting(t.next) || !m.has(t.next, Alphabet::blank) ||
                         m.at(t.next, Alphabet::blank).write != F ||
                         m.at(t.next, Alphabet::blank).move != Move::L)
                    violate(q, F, 2, "successor state does not print F and return left");
            }
        }
        // Clause 3: S/F written over a different symbol only from restorer states.
        for (Symbol s = 0; s < a.size(); ++s) {
            if (!m.has(q, s)) continue;
            const auto& t = m.at(q, s);
            if (t.write == S && s != S && !s_restorer[q])
                violate(q, s, 3, "prints S outside the S-shift maneuver");
            if (t.write == F && s != F && !f_restorer[q])
                violate(q, s, 3, "prints F outside the F-shift maneuver");
        }
    }
    return rep;
}

TmConfiguration tm_step(const TuringMachineSpec& m, const TmConfiguration& c) {
    if (m.is_halting(c.state)) return c;
    Symbol read = c.tape.at(c.head);
    const Transition& t = m.at(c.state, read);
    TmConfiguration out = c;
    out.tape.set(c.head, t.write);
    out.head += (t.move == Move::L) ? -1 : 1;
    out.state = t.next;
    return out;
}

TmRunResult tm_run(const TuringMachineSpec& m, const TmConfiguration& start, std::uint64_t steps,
                   bool capture_rows) {
    TmRunResult res;
    const Alphabet& a = *m.alphabet();
    const Symbol star = a.id("*"), zero = a.id("0"), one = a.id("1");
    TmConfiguration cur = start;
    bool prev_star_overprint = false;

    auto record = [&](std::uint64_t t) {
        GrowthEntry e;
        e.t = t;
        e.span = cur.tape.cells.size();
        e.left = cur.tape.all_blank() ? 0 : cur.tape.leftmost();
        e.right = cur.tape.all_blank() ? -1 : cur.tape.rightmost();
        e.hash = canonical_hash(cur.tape);
        res.growth.entries.push_back(e);
        if (capture_rows) res.rows.push_back(cur);
    };

    record(0);
    for (std::uint64_t t = 0; t < steps; ++t) {
        if (m.is_halting(cur.state)) {
            record(t + 1);
            continue;
        }
        Symbol read = cur.tape.at(cur.head);
        const Transition& tr = m.at(cur.state, read);
        if (tr.write == star && read != star && !prev_star_overprint) {
            res.dynamic_report.violations.push_back(
                {m.state_name(cur.state), a.name(read), 4,
                 "prints * without a * overprinted by 0/1 on the preceding step"});
        }
        prev_star_overprint = (read == star && (tr.write == zero || tr.write == one));
        cur = tm_step(m, cur);
        record(t + 1);
    }
    res.final = cur;
    return res;
}

TmConfiguration tm_start_on(const TuringMachineSpec& m, const Configuration& tape) {
    TmConfiguration c;
    c.tape = tape;
    c.head = tape.all_blank() ? 0 : tape.leftmost();
    c.state = m.initial();
    return c;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

TuringMachineSpec parse_machine(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> alpha_names, state_names, halting_names;
    std::string initial_name;
    struct RawLine {
        int no;
        std::string q, s, w, mv, n;
    };
    std::vector<RawLine> raws;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto starts = [&](const char* p) { return line.rfind(p, 0) == 0; };
        if (starts("alphabet:")) {
            alpha_names = split_ws(line.substr(9));
        } else if (starts("states:")) {
            state_names = split_ws(line.substr(7));
        } else if (starts("initial:")) {
            initial_name = trim(line.substr(8));
        } else if (starts("halting:")) {
            halting_names = split_ws(line.substr(8));
        } else {
            auto arrow = line.find("->");
            if (arrow == std::string::npos)
                throw ParseError("line " + std::to_string(lineno) + ": expected 'q , s -> s' , L|R , q''");
            auto lhs = line.substr(0, arrow);
            auto rhs = line.substr(arrow + 2);
            auto split_commas = [&](const std::string& part, std::size_t want) {
                std::vector<std::string> out;
                std::size_t pos = 0;
                while (true) {
                    auto comma = part.find(',', pos);
                    if (comma == std::string::npos) {
                        out.push_back(trim(part.substr(pos)));
                        break;
                    }
                    out.push_back(trim(part.substr(pos, comma - pos)));
                    pos = comma + 1;
                }
                if (out.size() != want)
                    throw ParseError("line " + std::to_string(lineno) + ": malformed transition");
                return out;
            };
            auto l = split_commas(lhs, 2);
            auto r = split_commas(rhs, 3);
            raws.push_back({lineno, l[0], l[1], r[0], r[1], r[2]});
        }
    }
    if (state_names.empty()) throw ParseError("missing 'states:' header");
    if (initial_name.empty()) throw ParseError("missing 'initial:' header");

    auto alphabet = std::make_shared<Alphabet>(alpha_names);
    TuringMachineSpec m(alphabet, state_names, 0, {});
    std::int32_t init = m.find_state(initial_name);
    if (init < 0) throw ParseError("unknown initial state '" + initial_name + "'");
    std::vector<StateId> halting;
    for (const auto& h : halting_names) {
        std::int32_t id = m.find_state(h);
        if (id < 0) throw ParseError("unknown halting state '" + h + "'");
        halting.push_back(static_cast<StateId>(id));
    }
    m = TuringMachineSpec(alphabet, state_names, static_cast<StateId>(init), halting);
    for (const auto& raw : raws) {
        std::int32_t q = m.find_state(raw.q), n = m.find_state(raw.n);
        if (q < 0 || n < 0)
            throw ParseError("line " + std::to_string(raw.no) + ": unknown state");
        if (!alphabet->contains(raw.s) || !alphabet->contains(raw.w))
            throw ParseError("line " + std::to_string(raw.no) + ": unknown symbol");
        if (raw.mv != "L" && raw.mv != "R")
            throw ParseError("line " + std::to_string(raw.no) + ": move must be L or R");
        m.set(static_cast<StateId>(q), alphabet->id(raw.s),
              Transition{alphabet->id(raw.w), raw.mv == "L" ? Move::L : Move::R,
                         static_cast<StateId>(n)});
    }
    m.validate_total();
    return m;
}

std::string format_machine(const TuringMachineSpec& m) {
    std::ostringstream out;
    const Alphabet& a = *m.alphabet();
    out << "alphabet:";
    for (std::size_t i = 0; i < a.size(); ++i) out << ' ' << a.name(static_cast<Symbol>(i));
    out << "\nstates:";
    for (std::size_t q = 0; q < m.state_count(); ++q) out << ' ' << m.state_name(static_cast<StateId>(q));
    out << "\ninitial: " << m.state_name(m.initial());
    out << "\nhalting:";
    for (std::size_t q = 0; q < m.state_count(); ++q)
        if (m.is_halting(static_cast<StateId>(q))) out << ' ' << m.state_name(static_cast<StateId>(q));
    out << '\n';
    for (std::size_t q = 0; q < m.state_count(); ++q) {
        if (m.is_halting(static_cast<StateId>(q))) continue;
        for (Symbol s = 0; s < a.size(); ++s) {
            if (!m.has(static_cast<StateId>(q), s)) continue;
            const auto& t = m.at(static_cast<StateId>(q), s);
            out << m.state_name(static_cast<StateId>(q)) << " , " << a.name(s) << " -> "
                << a.name(t.write) << " , " << (t.move == Move::L ? 'L' : 'R') << " , "
                << m.state_name(t.next) << '\n';
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Builtins: small normal computers of total functions, plus a one-state
// machine that loops in place (handy as a no-cycle transform subject).

namespace {

TuringMachineSpec make_identity() {
    TmBuilder b(tm_alphabet());
    b.state("q0");
    b.state("halt", true);
    b.initial = "q0";
    b.fill("q0", Move::R, "halt");
    return b.build();
}

// Overflow needs no S shift: after the carry turns every digit into 0, the
// result is 1 followed by zeros, so set the first digit and append one 0 at
// the F end.
TuringMachineSpec make_successor() {
    TmBuilder b(tm_alphabet());
    for (const char* n : {"q0", "walk", "inc", "ov1", "ov2", "fr"}) b.state(n);
    b.state("halt", true);
    b.initial = "q0";
    b.on("q0", "S", "S", Move::R, "walk");
    b.fill("q0", Move::R, "halt");
    b.on("walk", "0", "0", Move::R, "walk");
    b.on("walk", "1", "1", Move::R, "walk");
    b.on("walk", "F", "F", Move::L, "inc");
    b.fill("walk", Move::R, "walk");
    b.on("inc", "1", "0", Move::L, "inc");
    b.on("inc", "0", "1", Move::R, "halt");
    b.on("inc", "S", "S", Move::R, "ov1");
    b.fill("inc", Move::L, "inc");
    b.on("ov1", "0", "1", Move::R, "ov2");
    b.fill("ov1", Move::R, "ov2");
    b.on("ov2", "0", "0", Move::R, "ov2");
    b.on("ov2", "F", "0", Move::R, "fr");
    b.fill("ov2", Move::R, "ov2");
    b.on("fr", "B", "F", Move::L, "halt");
    b.fill("fr", Move::L, "halt");
    return b.build();
}

TuringMachineSpec make_const0() {
    TmBuilder b(tm_alphabet());
    b.state("q0");
    b.state("z");
    b.state("halt", true);
    b.initial = "q0";
    b.on("q0", "S", "S", Move::R, "z");
    b.fill("q0", Move::R, "halt");
    b.on("z", "0", "0", Move::R, "z");
    b.on("z", "1", "0", Move::R, "z");
    b.on("z", "F", "F", Move::L, "halt");
    b.fill("z", Move::R, "z");
    return b.build();
}

TuringMachineSpec make_double() {
    TmBuilder b(tm_alphabet());
    for (const char* n : {"q0", "walk", "fr"}) b.state(n);
    b.state("halt", true);
    b.initial = "q0";
    b.on("q0", "S", "S", Move::R, "walk");
    b.fill("q0", Move::R, "halt");
    b.on("walk", "0", "0", Move::R, "walk");
    b.on("walk", "1", "1", Move::R, "walk");
    b.on("walk", "F", "0", Move::R, "fr");
    b.fill("walk", Move::R, "walk");
    b.on("fr", "B", "F", Move::L, "halt");
    b.fill("fr", Move::L, "halt");
    return b.build();
}

// Bounces between the brackets forever; never halts, never prints anything.
TuringMachineSpec make_looper() {
    TmBuilder b(tm_alphabet());
    b.state("q0");
    b.initial = "q0";
    b.fill("q0", Move::R, "q0");
    return b.build();
}

}  // namespace

TuringMachineSpec builtin_machine(const std::string& name) {
    if (name == "identity") return make_identity();
    if (name == "successor") return make_successor();
    if (name == "const0") return make_const0();
    if (name == "double") return make_double();
    if (name == "looper") return make_looper();
    throw std::invalid_argument("unknown builtin machine '" + name + "'");
}

std::vector<std::string> builtin_machine_names() {
    return {"identity", "successor", "const0", "double", "looper"};
}

}  // namespace cagrow
