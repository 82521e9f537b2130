#include "cagrow/constructions.hpp"

#include <algorithm>

#include "cagrow/standard.hpp"

namespace cagrow {

TagPartition TagPartition::sized(const std::vector<std::size_t>& sizes) {
    TagPartition p;
    p.parts = sizes.size();
    std::size_t k = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (std::size_t j = 0; j < sizes[i]; ++j) {
            p.tags.push_back("x" + std::to_string(k++));
            p.part_of.push_back(i);
        }
    return p;
}

ComposedRule::ComposedRule(std::vector<CaRulePtr> components, TagPartition partition)
    : components_(std::move(components)), partition_(std::move(partition)) {
    if (components_.empty()) throw std::invalid_argument("composition needs components");
    if (partition_.parts != components_.size())
        throw std::invalid_argument("partition parts must match component count");
    if (partition_.tags.empty()) throw std::invalid_argument("zero total tags");
    for (std::size_t i = 0; i < partition_.parts; ++i)
        if (std::count(partition_.part_of.begin(), partition_.part_of.end(), i) == 0)
            throw std::invalid_argument("every part needs at least one tag");
    radius_ = components_.front()->radius();
    for (const auto& c : components_)
        if (c->radius() != radius_) throw std::invalid_argument("component radii differ");

    // Shared base: union of the component alphabets, keyed by symbol name.
    auto base = std::make_shared<Alphabet>();
    for (const auto& c : components_) {
        const Alphabet& ca = *c->alphabet();
        for (std::size_t i = 0; i < ca.size(); ++i) base->add(ca.name(static_cast<Symbol>(i)));
    }
    base_ = base;

    base_to_component_.resize(components_.size());
    component_to_base_.resize(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const Alphabet& ca = *components_[i]->alphabet();
        base_to_component_[i].assign(base_->size(), -1);
        component_to_base_[i].assign(ca.size(), 0);
        for (std::size_t s = 0; s < ca.size(); ++s) {
            Symbol b = base_->id(ca.name(static_cast<Symbol>(s)));
            base_to_component_[i][b] = static_cast<std::int32_t>(s);
            component_to_base_[i][s] = b;
        }
    }

    auto a = std::make_shared<Alphabet>();
    for (const auto& tag : partition_.tags)
        for (std::size_t s = 1; s < base_->size(); ++s)
            a->add(base_->name(static_cast<Symbol>(s)) + "~" + tag);
    alphabet_ = a;
}

Symbol ComposedRule::pack(Symbol base_sym, std::size_t tag) const {
    if (base_sym == Alphabet::blank || tag == no_tag) return Alphabet::blank;
    return static_cast<Symbol>(1 + tag * (base_->size() - 1) + (base_sym - 1));
}

std::pair<Symbol, std::size_t> ComposedRule::unpack(Symbol s) const {
    if (s == Alphabet::blank) return {Alphabet::blank, no_tag};
    std::size_t v = s - 1;
    std::size_t tag = v / (base_->size() - 1);
    Symbol base_sym = static_cast<Symbol>(1 + v % (base_->size() - 1));
    return {base_sym, tag};
}

std::int32_t ComposedRule::to_component(std::size_t i, Symbol base_sym) const {
    return base_to_component_[i][base_sym];
}

Symbol ComposedRule::apply(const Symbol* w) const {
    const unsigned width = 2 * radius_ + 1;
    const Symbol center = w[radius_];

    std::size_t tag;
    if (center != Alphabet::blank) {
        tag = unpack(center).second;
    } else {
        // Inheritance: nearest non-blank neighbor, rightmost on ties.
        tag = no_tag;
        for (unsigned d = 1; d <= radius_ && tag == no_tag; ++d) {
            if (w[radius_ + d] != Alphabet::blank)
                tag = unpack(w[radius_ + d]).second;
            else if (w[radius_ - d] != Alphabet::blank)
                tag = unpack(w[radius_ - d]).second;
        }
        if (tag == no_tag) return Alphabet::blank;  // quiescence
    }

    const std::size_t part = partition_.part_of[tag];
    const CaRule& rule = *components_[part];
    // Map first components into the part's own alphabet; symbols foreign to
    // it stand in as junk the rule has never seen.
    std::vector<Symbol> firsts(width);
    for (unsigned j = 0; j < width; ++j) {
        if (w[j] == Alphabet::blank) {
            firsts[j] = Alphabet::blank;
            continue;
        }
        std::int32_t mapped = to_component(part, unpack(w[j]).first);
        firsts[j] = mapped >= 0 ? static_cast<Symbol>(mapped) : rule.foreign_stand_in();
    }
    Symbol out = rule.apply(firsts.data());
    if (out == Alphabet::blank) return Alphabet::blank;
    return pack(component_to_base_[part][out], tag);
}

std::shared_ptr<const ComposedRule> compose(std::vector<CaRulePtr> automata,
                                            const TagPartition& partition) {
    return std::make_shared<ComposedRule>(std::move(automata), partition);
}

std::shared_ptr<const ComposedRule> build_Apq(std::size_t p_num, std::size_t q_num, CaRulePtr a3,
                                              CaRulePtr a4) {
    if (p_num + q_num == 0) throw std::invalid_argument("zero total tags");
    std::vector<CaRulePtr> comps;
    std::vector<std::size_t> sizes;
    if (p_num > 0) {
        comps.push_back(std::move(a3));
        sizes.push_back(p_num);
    }
    if (q_num > 0) {
        comps.push_back(std::move(a4));
        sizes.push_back(q_num);
    }
    return compose(std::move(comps), TagPartition::sized(sizes));
}

MonotoneRule::MonotoneRule(CaRulePtr inner) : inner_(std::move(inner)) {
    if (!inner_) throw std::invalid_argument("monotone wrapper needs a rule");
    if (inner_->radius() != 1) throw std::invalid_argument("monotone wrapper needs radius 1");
    auto a = std::make_shared<Alphabet>();
    const Alphabet& ia = *inner_->alphabet();
    for (std::size_t s = 1; s < ia.size(); ++s) a->add(ia.name(static_cast<Symbol>(s)));
    for (std::size_t s = 0; s < ia.size(); ++s)
        a->add(ia.name(static_cast<Symbol>(s)) + ".M");
    alphabet_ = a;
}

Symbol MonotoneRule::pack(Symbol inner_sym, bool marked) const {
    if (!marked) return inner_sym;  // same index: unmarked names precede marks
    return static_cast<Symbol>(inner_->alphabet()->size() + inner_sym);
}

std::pair<Symbol, bool> MonotoneRule::unpack(Symbol s) const {
    const std::size_t n = inner_->alphabet()->size();
    if (s < n) return {s, false};
    return {static_cast<Symbol>(s - n), true};
}

Symbol MonotoneRule::apply(const Symbol* w) const {
    if (w[0] == Alphabet::blank && w[1] == Alphabet::blank && w[2] == Alphabet::blank)
        return Alphabet::blank;
    Symbol firsts[3];
    for (int j = 0; j < 3; ++j) firsts[j] = unpack(w[j]).first;
    return pack(inner_->apply(firsts), true);
}

std::shared_ptr<const MonotoneRule> make_monotone(CaRulePtr a) {
    return std::make_shared<MonotoneRule>(std::move(a));
}

}  // namespace cagrow
