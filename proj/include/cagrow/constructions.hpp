#pragma once

#include "cagrow/ca.hpp"

namespace cagrow {

// Disjoint tag classes X = X_0 u ... u X_{n-1} steering which component rule
// a cell follows.
struct TagPartition {
    std::vector<std::string> tags;      // all tag names, in order
    std::vector<std::size_t> part_of;   // tag index -> part index
    std::size_t parts = 0;

    static TagPartition sized(const std::vector<std::size_t>& sizes);
    std::size_t tag_count() const { return tags.size(); }
};

// Product-alphabet composition. Cells are (base symbol, tag); the blank is
// the unique (B, no-tag) pair. The first component of a surviving cell steps
// by the rule its tag selects; a cell born from blank inherits the nearest
// non-blank neighbor's tag (rightmost on ties).
class ComposedRule final : public CaRule {
  public:
    ComposedRule(std::vector<CaRulePtr> components, TagPartition partition);

    const AlphabetPtr& alphabet() const override { return alphabet_; }
    unsigned radius() const override { return radius_; }
    Symbol apply(const Symbol* w) const override;
    std::string kind() const override { return "composed"; }

    const std::vector<CaRulePtr>& components() const { return components_; }
    const TagPartition& partition() const { return partition_; }

    // (base symbol of the shared union alphabet, tag index or npos for blank)
    Symbol pack(Symbol base_sym, std::size_t tag) const;
    std::pair<Symbol, std::size_t> unpack(Symbol s) const;
    static constexpr std::size_t no_tag = static_cast<std::size_t>(-1);

    const AlphabetPtr& shared_base() const { return base_; }
    // Maps a shared-base symbol into component i's alphabet; returns -1 for
    // symbols foreign to that component.
    std::int32_t to_component(std::size_t i, Symbol base_sym) const;

  private:
    std::vector<CaRulePtr> components_;
    TagPartition partition_;
    AlphabetPtr base_;      // union of component alphabets
    AlphabetPtr alphabet_;  // (base \ {B}) x tags, plus blank
    unsigned radius_;
    std::vector<std::vector<std::int32_t>> base_to_component_;
    std::vector<std::vector<Symbol>> component_to_base_;
};

std::shared_ptr<const ComposedRule> compose(std::vector<CaRulePtr> automata,
                                            const TagPartition& partition);

// Composition of a class-3 and a class-4 dominating automaton with tag
// counts p_num : q_num.
std::shared_ptr<const ComposedRule> build_Apq(std::size_t p_num, std::size_t q_num, CaRulePtr a3,
                                              CaRulePtr a4);

// Marked wrapper: second coordinate M never unmarks, so the span never
// shrinks; first coordinates evolve exactly as the wrapped rule.
class MonotoneRule final : public CaRule {
  public:
    explicit MonotoneRule(CaRulePtr inner);

    const AlphabetPtr& alphabet() const override { return alphabet_; }
    unsigned radius() const override { return 1; }
    Symbol apply(const Symbol* w) const override;
    std::string kind() const override { return "monotone"; }

    const CaRulePtr& inner() const { return inner_; }
    Symbol pack(Symbol inner_sym, bool marked) const;
    std::pair<Symbol, bool> unpack(Symbol s) const;

  private:
    CaRulePtr inner_;
    AlphabetPtr alphabet_;
};

std::shared_ptr<const MonotoneRule> make_monotone(CaRulePtr a);

}  // namespace cagrow
