#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cagrow/tape.hpp"
#include "cagrow/trace.hpp"

namespace cagrow {

// A radius-r rule: a total map from (2r+1)-windows to symbols with a
// quiescent blank. Compiled rules are functions of the window rather than
// materialized tables, so the interface is the apply() contract; table-backed
// rules (dense map + fallback) cover hand-written and file-loaded rules.
class CaRule {
  public:
    virtual ~CaRule() = default;
    virtual const AlphabetPtr& alphabet() const = 0;
    virtual unsigned radius() const = 0;
    virtual Symbol apply(const Symbol* window) const = 0;  // 2r+1 cells
    virtual std::string kind() const = 0;
    // Stand-in used when a composition feeds this rule a symbol from a
    // sibling's alphabet: a non-blank symbol the rule treats as unrecognized
    // content.
    virtual Symbol foreign_stand_in() const {
        return alphabet()->size() > 1 ? Symbol{1} : Alphabet::blank;
    }
    std::uint64_t rule_hash() const;
};

using CaRulePtr = std::shared_ptr<const CaRule>;

enum class Fallback { none, identity };

class TableRule final : public CaRule {
  public:
    TableRule(AlphabetPtr alphabet, unsigned radius, Fallback fallback);

    void set(const std::vector<Symbol>& window, Symbol out);
    const AlphabetPtr& alphabet() const override { return alphabet_; }
    unsigned radius() const override { return radius_; }
    Symbol apply(const Symbol* window) const override;
    std::string kind() const override { return "table"; }
    Fallback fallback() const { return fallback_; }

    // Deterministically ordered explicit entries.
    std::vector<std::pair<std::vector<Symbol>, Symbol>> entries() const;

  private:
    std::uint64_t key(const Symbol* window) const;

    AlphabetPtr alphabet_;
    unsigned radius_;
    Fallback fallback_;
    std::unordered_map<std::uint64_t, Symbol> table_;
};

// Common toy rules used throughout the tests and the classifier examples.
CaRulePtr blank_out_rule(AlphabetPtr a);
CaRulePtr identity_rule(AlphabetPtr a);
CaRulePtr copy_right_neighbor_rule(AlphabetPtr a);  // pattern glides left
CaRulePtr right_expanding_rule(AlphabetPtr a);

Configuration ca_step(const CaRule& rule, const Configuration& c);

enum class Capture { growth_only, full };

struct SpaceTimeTrace {
    std::vector<Configuration> rows;  // filled when Capture::full
    GrowthTrace growth;
};

// steps+1 growth entries unless the span budget truncates the run.
SpaceTimeTrace ca_run(const CaRule& rule, const Configuration& input, std::uint64_t steps,
                      Capture capture = Capture::growth_only,
                      std::uint64_t span_budget = 1u << 22);

// Space-time diagram: one row per step. Text grid maps symbol index i to a
// printable glyph; PGM (binary P5) maps it to a gray level.
std::string diagram_text(const SpaceTimeTrace& trace);
std::string diagram_pgm(const SpaceTimeTrace& trace);

}  // namespace cagrow
