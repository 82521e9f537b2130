#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cagrow/standard.hpp"
#include "cagrow/tape.hpp"
#include "cagrow/trace.hpp"

namespace cagrow {

using StateId = std::uint16_t;
enum class Move : std::int8_t { L = -1, R = 1 };

struct Transition {
    Symbol write = 0;
    Move move = Move::R;
    StateId next = 0;
};

struct ConventionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// T : Q x Sigma -> Sigma x {L,R} x Q, total on non-halting states.
class TuringMachineSpec {
  public:
    TuringMachineSpec() = default;
    TuringMachineSpec(AlphabetPtr alphabet, std::vector<std::string> state_names,
                      StateId initial, std::vector<StateId> halting);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    std::size_t state_count() const { return state_names_.size(); }
    const std::string& state_name(StateId q) const { return state_names_.at(q); }
    std::int32_t find_state(const std::string& n) const;
    StateId initial() const { return initial_; }
    bool is_halting(StateId q) const { return halting_mask_.at(q); }

    void set(StateId q, Symbol s, Transition t);
    bool has(StateId q, Symbol s) const { return defined_.at(index(q, s)); }
    const Transition& at(StateId q, Symbol s) const;

    // Throws with a listing of missing (state, symbol) pairs.
    void validate_total() const;

    std::uint64_t content_hash() const;

  private:
    std::size_t index(StateId q, Symbol s) const { return q * alphabet_->size() + s; }

    AlphabetPtr alphabet_;
    std::vector<std::string> state_names_;
    StateId initial_ = 0;
    std::vector<bool> halting_mask_;
    std::vector<Transition> table_;
    std::vector<bool> defined_;
};

struct TmConfiguration {
    Configuration tape;
    std::int64_t head = 0;
    StateId state = 0;

    bool operator==(const TmConfiguration& o) const {
        return head == o.head && state == o.state && tape == o.tape;
    }
};

// Shift-invariant identity of a machine configuration; used for cycle checks.
struct TmCanonical {
    std::vector<Symbol> word;
    std::int64_t head_rel = 0;
    StateId state = 0;
    bool operator==(const TmCanonical& o) const = default;
};
TmCanonical tm_canonical(const TmConfiguration& c);
std::uint64_t tm_canonical_hash(const TmConfiguration& c);

struct ConventionViolation {
    std::string state;
    std::string symbol;
    int clause = 0;
    std::string detail;
};
struct ConventionReport {
    std::vector<ConventionViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Static check of operating-convention clauses 1-3. Clause 4 is dynamic and
// reported by tm_run.
ConventionReport check_conventions(const TuringMachineSpec& m);

// One transition; identity on halting configurations.
TmConfiguration tm_step(const TuringMachineSpec& m, const TmConfiguration& c);

struct TmRunResult {
    TmConfiguration final;
    GrowthTrace growth;
    std::vector<TmConfiguration> rows;  // filled only when capture_rows
    ConventionReport dynamic_report;    // clause-4 events seen during the run
};
TmRunResult tm_run(const TuringMachineSpec& m, const TmConfiguration& start, std::uint64_t steps,
                   bool capture_rows = false);

TmConfiguration tm_start_on(const TuringMachineSpec& m, const Configuration& tape);

// Text format:
//   alphabet: <names>
//   states: <names>
//   initial: <name>
//   halting: <names>
//   q , s -> s' , L|R , q'
TuringMachineSpec parse_machine(const std::string& text);
std::string format_machine(const TuringMachineSpec& m);

// Sample library: identity, successor, const0, double.
TuringMachineSpec builtin_machine(const std::string& name);
std::vector<std::string> builtin_machine_names();

}  // namespace cagrow
