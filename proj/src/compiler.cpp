#include "cagrow/compiler.hpp"

#include <algorithm>

#include "cagrow/standard.hpp"

namespace cagrow {

namespace {
const char* pos_name(HeadPos p) {
    switch (p) {
        case HeadPos::B: return "B";
        case HeadPos::L: return "L";
        case HeadPos::R: return "R";
        default: return "H";
    }
}
}  // namespace

LayeredCodec::LayeredCodec(AlphabetPtr base, std::vector<std::string> state_names)
    : base_(std::move(base)), state_names_(std::move(state_names)) {
    const std::size_t ns = base_->size(), nq = state_names_.size() + 1;
    auto a = std::make_shared<Alphabet>();  // blank "B" present at index 0
    cells_.push_back(LayeredCell{Alphabet::blank, blank_state(), HeadPos::B});
    packed_.assign(ns * nq * 4, 0);
    auto state_name = [&](StateId q) {
        return q == blank_state() ? std::string("B") : state_names_.at(q);
    };
    for (Symbol s = 0; s < ns; ++s)
        for (StateId q = 0; q <= state_names_.size(); ++q)
            for (std::uint8_t p = 0; p < 4; ++p) {
                LayeredCell cell{s, q, static_cast<HeadPos>(p)};
                if (s == Alphabet::blank && q == blank_state() && cell.pos == HeadPos::B)
                    continue;  // the blank triple is the alphabet's blank
                Symbol id = a->add(join_layered(base_->name(s), state_name(q),
                                                pos_name(cell.pos)));
                cells_.push_back(cell);
                packed_[(s * nq + q) * 4 + p] = id;
            }
    sigma1_ = a;
}

Symbol LayeredCodec::pack(const LayeredCell& c) const {
    if (c.sym == Alphabet::blank && c.state == blank_state() && c.pos == HeadPos::B) return 0;
    return packed_.at((c.sym * (state_names_.size() + 1) + c.state) * 4 +
                      static_cast<std::uint8_t>(c.pos));
}

Configuration lift(const LayeredCodec& codec, const TmConfiguration& c) {
    if (!is_standard_config(c.tape, Layer::sigma))
        throw std::invalid_argument("lift requires a standard configuration");
    if (c.head < c.tape.leftmost() || c.head > c.tape.rightmost())
        throw std::invalid_argument("lift requires the head between S and F");
    std::vector<Symbol> cells;
    for (std::int64_t i = c.tape.leftmost(); i <= c.tape.rightmost(); ++i) {
        Symbol s = c.tape.at(i);
        if (s == Alphabet::blank && i != c.head) {
            cells.push_back(Alphabet::blank);
            continue;
        }
        LayeredCell cell;
        cell.sym = s;
        cell.state = (i == c.head) ? c.state : codec.blank_state();
        cell.pos = (i == c.head) ? HeadPos::H : (i < c.head ? HeadPos::R : HeadPos::L);
        cells.push_back(codec.pack(cell));
    }
    return Configuration(codec.sigma1(), c.tape.leftmost(), std::move(cells));
}

TmConfiguration project_tm(const LayeredCodec& codec, const Configuration& c) {
    TmConfiguration out;
    std::vector<Symbol> tape;
    bool found = false;
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        LayeredCell cell = codec.unpack(c.cells[i]);
        tape.push_back(cell.sym);
        if (cell.pos == HeadPos::H) {
            out.head = c.offset + static_cast<std::int64_t>(i);
            out.state = cell.state;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("no head cell in configuration");
    out.tape = Configuration(codec.base(), c.offset, std::move(tape));
    return out;
}

Configuration reference_input(const LayeredCodec& codec, const TuringMachineSpec& m) {
    Configuration io = make_io_configuration(codec.base(), std::nullopt, std::nullopt);
    return lift(codec, TmConfiguration{io, io.leftmost(), m.initial()});
}

// ---------------------------------------------------------------------------
// SimulatingRule

namespace {
std::vector<std::string> state_names_of(const TuringMachineSpec& m) {
    std::vector<std::string> names;
    for (std::size_t q = 0; q < m.state_count(); ++q)
        names.push_back(m.state_name(static_cast<StateId>(q)));
    return names;
}
}  // namespace

SimulatingRule::SimulatingRule(TuringMachineSpec machine)
    : machine_(std::move(machine)), codec_(machine_.alphabet(), state_names_of(machine_)) {}

Symbol SimulatingRule::apply(const Symbol* w) const {
    const LayeredCell L = codec_.unpack(w[0]), C = codec_.unpack(w[1]), R = codec_.unpack(w[2]);
    const StateId nb = codec_.blank_state();
    auto live = [&](const LayeredCell& x) {
        return x.pos == HeadPos::H && x.state != nb && !machine_.is_halting(x.state);
    };
    auto make = [&](Symbol sym, StateId q, HeadPos p) {
        return codec_.pack(LayeredCell{sym, q, p});
    };

    // Hand-off reception, rightmost first.
    if (live(R)) {
        const Transition& t = machine_.at(R.state, R.sym);
        if (t.move == Move::L) return make(C.sym, t.next, HeadPos::H);
    }
    if (C.pos == HeadPos::H) {
        if (C.state == nb || machine_.is_halting(C.state)) return w[1];  // frozen
        const Transition& t = machine_.at(C.state, C.sym);
        if (t.write == Alphabet::blank) return Alphabet::blank;  // erased cells go fully blank
        return make(t.write, C.state, t.move == Move::L ? HeadPos::L : HeadPos::R);
    }
    if (live(L)) {
        const Transition& t = machine_.at(L.state, L.sym);
        if (t.move == Move::R) return make(C.sym, t.next, HeadPos::H);
    }
    return w[1];
}

std::shared_ptr<const SimulatingRule> compile_simulating(const TuringMachineSpec& m,
                                                         bool enforce_conventions) {
    if (enforce_conventions) {
        auto rep = check_conventions(m);
        if (!rep.ok())
            throw ConventionError("compilation refused, convention violations:\n" +
                                  rep.to_string());
    }
    return std::make_shared<SimulatingRule>(m);
}

// ---------------------------------------------------------------------------
// Acceptable sites

std::uint64_t AcceptableSiteSet::content_hash() const {
    std::vector<std::uint64_t> sorted(windows.begin(), windows.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::uint64_t> sorted2(pairs.begin(), pairs.end());
    std::sort(sorted2.begin(), sorted2.end());
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (auto v : sorted) mix(v);
    mix(0xabcdef);
    for (auto v : sorted2) mix(v);
    return h;
}

AcceptableSiteSet compute_acceptable_sites(const TuringMachineSpec& t_f, std::uint64_t budget) {
    auto rule = std::make_shared<SimulatingRule>(t_f);
    const LayeredCodec& codec = rule->codec();

    AcceptableSiteSet acc;
    acc.windows.insert(AcceptableSiteSet::pack3(0, 0, 0));
    acc.pairs.insert(AcceptableSiteSet::pack2(0, 0));

    Configuration ref = reference_input(codec, t_f);
    Configuration lone(codec.sigma1(), 0,
                       {codec.pack(LayeredCell{codec.base()->id("S"), t_f.initial(), HeadPos::H})});

    bool grew = false;
    auto collect = [&](const Configuration& c) {
        if (c.all_blank()) return;
        for (std::int64_t i = c.leftmost() - 1; i <= c.rightmost() + 1; ++i) {
            if (acc.windows.insert(AcceptableSiteSet::pack3(c.at(i - 1), c.at(i), c.at(i + 1)))
                    .second)
                grew = true;
            if (acc.pairs.insert(AcceptableSiteSet::pack2(c.at(i), c.at(i + 1))).second)
                grew = true;
        }
    };

    std::uint64_t last_m = 0;
    bool seen_milestone = false;
    bool iteration_clean = false;
    std::uint64_t t = 0;
    for (; t < budget; ++t) {
        collect(ref);
        collect(lone);
        // Iteration boundary: the reference run reaches the next Sn*f(n)F.
        Configuration proj = project_first(ref, codec.base());
        if (auto io = is_standard_io(proj)) {
            if (io->m && io->n && (!seen_milestone || *io->m > last_m)) {
                if (seen_milestone && *io->m == last_m + 1) {
                    if (!grew && iteration_clean) {
                        acc.saturated = true;
                        ++t;
                        break;
                    }
                    iteration_clean = !grew;
                    grew = false;
                }
                seen_milestone = true;
                last_m = *io->m;
            }
        }
        ref = ca_step(*rule, ref);
        lone = ca_step(*rule, lone);
    }
    acc.budget_used = t;
    return acc;
}

SiteClass classify_site(const Symbol site[3], const AcceptableSiteSet& acc,
                        const LayeredCodec& codec, StateId q0) {
    const Symbol S = codec.base()->id("S");
    const Symbol stop_r = codec.pack(LayeredCell{S, q0, HeadPos::R});
    const Symbol stop_h = codec.pack(LayeredCell{S, q0, HeadPos::H});
    const LayeredCell C = codec.unpack(site[1]);
    if ((site[2] == stop_r || site[2] == stop_h) && C.pos == HeadPos::H) return SiteClass::quiet;
    if (acc.has_window(site[0], site[1], site[2])) return SiteClass::acceptable;
    if (site[1] == stop_h && acc.has_pair(site[1], site[2])) return SiteClass::acceptable;
    return SiteClass::generating;
}

// ---------------------------------------------------------------------------
// DominatingRule

DominatingRule::DominatingRule(TuringMachineSpec machine, AcceptableSiteSet acc)
    : sim_(std::move(machine)), acc_(std::move(acc)) {
    const Symbol S = sim_.codec().base()->id("S");
    stop_r_ = sim_.codec().pack(LayeredCell{S, sim_.machine().initial(), HeadPos::R});
    stop_h_ = sim_.codec().pack(LayeredCell{S, sim_.machine().initial(), HeadPos::H});
}

bool DominatingRule::acceptable(const Symbol* w) const {
    if (acc_.has_window(w[0], w[1], w[2])) return true;
    return w[1] == stop_h_ && acc_.has_pair(w[1], w[2]);
}

SiteClass DominatingRule::classify(const Symbol site[3]) const {
    return classify_site(site, acc_, sim_.codec(), sim_.machine().initial());
}

Symbol DominatingRule::apply(const Symbol* w) const {
    const LayeredCodec& codec = sim_.codec();
    const TuringMachineSpec& tm = sim_.machine();
    const LayeredCell L = codec.unpack(w[0]), C = codec.unpack(w[1]), R = codec.unpack(w[2]);
    const StateId nb = codec.blank_state();
    auto live = [&](const LayeredCell& x) {
        return x.pos == HeadPos::H && x.state != nb && !tm.is_halting(x.state);
    };
    auto make = [&](Symbol sym, StateId q, HeadPos p) {
        return codec.pack(LayeredCell{sym, q, p});
    };

    if (w[1] == Alphabet::blank) {
        if (live(R)) {
            const Transition& t = tm.at(R.state, R.sym);
            if (t.move == Move::L) return make(Alphabet::blank, t.next, HeadPos::H);
        }
        if (live(L)) {
            const Transition& t = tm.at(L.state, L.sym);
            if (t.move == Move::R) return make(Alphabet::blank, t.next, HeadPos::H);
        }
        return Alphabet::blank;
    }

    // Reception from the right wins over everything: the rightmost head has
    // priority, writing over whatever it enters. Entering a cell whose site
    // never occurs in the reference run clears the cell first.
    if (live(R)) {
        const Transition& t = tm.at(R.state, R.sym);
        if (t.move == Move::L)
            return make(acceptable(w) ? C.sym : Alphabet::blank, t.next, HeadPos::H);
    }
    if (C.pos == HeadPos::H && live(C)) {
        if (is_stop_cell(w[2])) return make(Alphabet::blank, C.state, HeadPos::R);  // quiet
        const Transition& t = tm.at(C.state, C.sym);
        if (t.write == Alphabet::blank) return Alphabet::blank;
        return make(t.write, C.state, t.move == Move::L ? HeadPos::L : HeadPos::R);
    }
    if (live(L) && !is_stop_cell(w[1])) {
        const Transition& t = tm.at(L.state, L.sym);
        if (t.move == Move::R)
            return make(acceptable(w) ? C.sym : Alphabet::blank, t.next, HeadPos::H);
    }

    // Passive non-blank cell: quiet residue stays put while it is chained to
    // a stop cell; anything else is either reference material or a generating
    // site that plants a fresh head.
    if (C.sym == Alphabet::blank && C.pos == HeadPos::R) {
        bool chained = is_stop_cell(w[2]) ||
                       (R.sym == Alphabet::blank && R.pos == HeadPos::R && w[2] != Alphabet::blank);
        if (chained) return w[1];
    }
    if (acceptable(w)) return w[1];
    return stop_h_;  // generating: plant <S,q0,H>
}

Symbol DominatingRule::foreign_stand_in() const {
    const LayeredCodec& codec = sim_.codec();
    return codec.pack(LayeredCell{codec.base()->id("1"), codec.blank_state(), HeadPos::B});
}

std::shared_ptr<const DominatingRule> compile_dominating(const TuringMachineSpec& t_f,
                                                         const AcceptableSiteSet& acc) {
    if (!acc.saturated)
        throw std::invalid_argument("acceptable-site set is unsaturated; raise the budget");
    return std::make_shared<DominatingRule>(t_f, acc);
}

}  // namespace cagrow
