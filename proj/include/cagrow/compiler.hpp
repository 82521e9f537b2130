#pragma once

#include <unordered_set>

#include "cagrow/ca.hpp"
#include "cagrow/machine.hpp"

namespace cagrow {

enum class HeadPos : std::uint8_t { B = 0, L = 1, R = 2, H = 3 };

struct LayeredCell {
    Symbol sym = 0;       // base-alphabet symbol
    StateId state = 0;    // nstates encodes the blank state
    HeadPos pos = HeadPos::B;
};

// Flattened simulation alphabet Sigma x (Q u {B}) x {L,R,H,B} with names
// "s/q/p"; the blank cell <B,B,B> is index 0.
class LayeredCodec {
  public:
    LayeredCodec(AlphabetPtr base, std::vector<std::string> state_names);

    const AlphabetPtr& sigma1() const { return sigma1_; }
    const AlphabetPtr& base() const { return base_; }
    std::size_t state_count() const { return state_names_.size(); }
    StateId blank_state() const { return static_cast<StateId>(state_names_.size()); }

    Symbol pack(const LayeredCell& c) const;
    LayeredCell unpack(Symbol s) const { return cells_.at(s); }

  private:
    AlphabetPtr base_;
    std::vector<std::string> state_names_;
    AlphabetPtr sigma1_;
    std::vector<LayeredCell> cells_;
    std::vector<Symbol> packed_;  // dense (sym,state,pos) -> symbol
};

// Head on a standard tape -> standard Sigma1 configuration: the head cell
// carries (state, H), cells left of it R, right of it L.
Configuration lift(const LayeredCodec& codec, const TmConfiguration& c);
TmConfiguration project_tm(const LayeredCodec& codec, const Configuration& c);

class SimulatingRule final : public CaRule {
  public:
    explicit SimulatingRule(TuringMachineSpec machine);

    const AlphabetPtr& alphabet() const override { return codec_.sigma1(); }
    unsigned radius() const override { return 1; }
    Symbol apply(const Symbol* w) const override;
    std::string kind() const override { return "simulating"; }

    const TuringMachineSpec& machine() const { return machine_; }
    const LayeredCodec& codec() const { return codec_; }

  private:
    friend class DominatingRule;
    TuringMachineSpec machine_;
    LayeredCodec codec_;
};

// Radius-1 simulation of a convention-checked machine. `enforce = false`
// compiles arbitrary machines (the construction itself never needs the
// conventions; they guard the standardness lemma).
std::shared_ptr<const SimulatingRule> compile_simulating(const TuringMachineSpec& m,
                                                         bool enforce_conventions = true);

struct AcceptableSiteSet {
    std::unordered_set<std::uint64_t> windows;  // packed width-3 sites
    std::unordered_set<std::uint64_t> pairs;    // packed (cell, right-neighbor)
    std::uint64_t budget_used = 0;
    bool saturated = false;

    static std::uint64_t pack3(Symbol a, Symbol b, Symbol c) {
        return (static_cast<std::uint64_t>(a) << 32) | (static_cast<std::uint64_t>(b) << 16) | c;
    }
    static std::uint64_t pack2(Symbol a, Symbol b) {
        return (static_cast<std::uint64_t>(a) << 16) | b;
    }
    bool has_window(Symbol a, Symbol b, Symbol c) const { return windows.count(pack3(a, b, c)); }
    bool has_pair(Symbol a, Symbol b) const { return pairs.count(pack2(a, b)); }
    std::uint64_t content_hash() const;
};

// Collects every width-3 window (blank fringe included) that occurs when the
// compiled machine runs from lift(S*F), together with the run from a lone
// <S,q0,H> cell (the generating subroutine's own evolution). Saturated once a
// full increment-copy-compute iteration adds no new window.
AcceptableSiteSet compute_acceptable_sites(const TuringMachineSpec& t_f, std::uint64_t budget);

enum class SiteClass { acceptable, quiet, generating };

SiteClass classify_site(const Symbol site[3], const AcceptableSiteSet& acc,
                        const LayeredCodec& codec, StateId q0);

class DominatingRule final : public CaRule {
  public:
    DominatingRule(TuringMachineSpec machine, AcceptableSiteSet acc);

    const AlphabetPtr& alphabet() const override { return sim_.alphabet(); }
    unsigned radius() const override { return 1; }
    Symbol apply(const Symbol* w) const override;
    std::string kind() const override { return "dominating"; }
    // A cell with no head-position coordinate never occurs in a reference
    // run, so it reads as junk and gets the generating treatment.
    Symbol foreign_stand_in() const override;

    const TuringMachineSpec& machine() const { return sim_.machine(); }
    const LayeredCodec& codec() const { return sim_.codec(); }
    const AcceptableSiteSet& acceptable_sites() const { return acc_; }
    SiteClass classify(const Symbol site[3]) const;
    bool is_stop_cell(Symbol s) const { return s == stop_r_ || s == stop_h_; }
    Symbol generating_head() const { return stop_h_; }

  private:
    bool acceptable(const Symbol* w) const;

    SimulatingRule sim_;
    AcceptableSiteSet acc_;
    Symbol stop_r_, stop_h_;  // <S,q0,R>, <S,q0,H>
};

std::shared_ptr<const DominatingRule> compile_dominating(const TuringMachineSpec& t_f,
                                                         const AcceptableSiteSet& acc);

// lift(S*F) with the head on S in the initial state: the reference input.
Configuration reference_input(const LayeredCodec& codec, const TuringMachineSpec& m);

}  // namespace cagrow
