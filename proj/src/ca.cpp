#include "cagrow/ca.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cagrow {

std::uint64_t CaRule::rule_hash() const {
    // Hash of the rule's observable behavior on a bounded probe set plus its
    // alphabet; enough to key provenance headers.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    const Alphabet& a = *alphabet();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (char ch : a.name(static_cast<Symbol>(i))) mix(static_cast<unsigned char>(ch));
    mix(radius());
    const std::size_t n = a.size();
    const unsigned w = 2 * radius() + 1;
    if (w == 3 && n * n * n <= (1u << 15)) {
        std::array<Symbol, 3> win;
        for (Symbol x = 0; x < n; ++x)
            for (Symbol y = 0; y < n; ++y)
                for (Symbol z = 0; z < n; ++z) {
                    win = {x, y, z};
                    mix(apply(win.data()));
                }
    }
    return h;
}

TableRule::TableRule(AlphabetPtr alphabet, unsigned radius, Fallback fallback)
    : alphabet_(std::move(alphabet)), radius_(radius), fallback_(fallback) {
    if (radius_ == 0) throw std::invalid_argument("radius must be positive");
    if (!alphabet_) throw std::invalid_argument("rule needs an alphabet");
}

std::uint64_t TableRule::key(const Symbol* window) const {
    std::uint64_t k = 0;
    for (unsigned i = 0; i < 2 * radius_ + 1; ++i) k = k * alphabet_->size() + window[i];
    return k;
}

void TableRule::set(const std::vector<Symbol>& window, Symbol out) {
    if (window.size() != 2 * radius_ + 1) throw std::invalid_argument("window width mismatch");
    bool all_blank = std::all_of(window.begin(), window.end(),
                                 [](Symbol s) { return s == Alphabet::blank; });
    if (all_blank && out != Alphabet::blank)
        throw std::invalid_argument("quiescence: the all-blank window must map to blank");
    table_[key(window.data())] = out;
}

Symbol TableRule::apply(const Symbol* window) const {
    auto it = table_.find(key(window));
    if (it != table_.end()) return it->second;
    bool all_blank = true;
    for (unsigned i = 0; i < 2 * radius_ + 1; ++i)
        if (window[i] != Alphabet::blank) all_blank = false;
    if (all_blank) return Alphabet::blank;
    if (fallback_ == Fallback::identity) return window[radius_];
    throw std::logic_error("rule table has no entry for a reachable window");
}

std::vector<std::pair<std::vector<Symbol>, Symbol>> TableRule::entries() const {
    std::vector<std::pair<std::uint64_t, Symbol>> keyed(table_.begin(), table_.end());
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::pair<std::vector<Symbol>, Symbol>> out;
    const unsigned w = 2 * radius_ + 1;
    for (auto& [k, v] : keyed) {
        std::vector<Symbol> win(w);
        std::uint64_t rest = k;
        for (unsigned i = w; i-- > 0;) {
            win[i] = static_cast<Symbol>(rest % alphabet_->size());
            rest /= alphabet_->size();
        }
        out.emplace_back(std::move(win), v);
    }
    return out;
}

namespace {

class LambdaRule final : public CaRule {
  public:
    using Fn = Symbol (*)(const Symbol*);
    LambdaRule(AlphabetPtr a, Fn fn, std::string kind)
        : alphabet_(std::move(a)), fn_(fn), kind_(std::move(kind)) {}
    const AlphabetPtr& alphabet() const override { return alphabet_; }
    unsigned radius() const override { return 1; }
    Symbol apply(const Symbol* w) const override { return fn_(w); }
    std::string kind() const override { return kind_; }

  private:
    AlphabetPtr alphabet_;
    Fn fn_;
    std::string kind_;
};

}  // namespace

CaRulePtr blank_out_rule(AlphabetPtr a) {
    return std::make_shared<LambdaRule>(
        std::move(a), +[](const Symbol*) { return Alphabet::blank; }, "blank-out");
}

CaRulePtr identity_rule(AlphabetPtr a) {
    return std::make_shared<LambdaRule>(
        std::move(a), +[](const Symbol* w) { return w[1]; }, "identity");
}

CaRulePtr copy_right_neighbor_rule(AlphabetPtr a) {
    return std::make_shared<LambdaRule>(
        std::move(a), +[](const Symbol* w) { return w[2]; }, "copy-right");
}

CaRulePtr right_expanding_rule(AlphabetPtr a) {
    return std::make_shared<LambdaRule>(
        std::move(a),
        +[](const Symbol* w) {
            if (w[1] != Alphabet::blank) return w[1];
            return w[0];  // blank cell adopts its left neighbor
        },
        "right-expanding");
}

Configuration ca_step(const CaRule& rule, const Configuration& c) {
    if (c.alphabet && rule.alphabet() && c.cells.size() > 0) {
        for (Symbol s : c.cells)
            if (s >= rule.alphabet()->size())
                throw std::invalid_argument("configuration symbol outside the rule alphabet");
    }
    const int r = static_cast<int>(rule.radius());
    if (c.all_blank()) return c;
    const std::int64_t lo = c.leftmost() - r, hi = c.rightmost() + r;
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    std::vector<Symbol> window(2 * r + 1);
    for (std::int64_t i = lo; i <= hi; ++i) {
        for (int j = -r; j <= r; ++j) window[static_cast<std::size_t>(j + r)] = c.at(i + j);
        out.push_back(rule.apply(window.data()));
    }
    Configuration next(c.alphabet ? c.alphabet : rule.alphabet(), lo, std::move(out));
    return next;
}

SpaceTimeTrace ca_run(const CaRule& rule, const Configuration& input, std::uint64_t steps,
                      Capture capture, std::uint64_t span_budget) {
    SpaceTimeTrace trace;
    Configuration cur = input;
    auto record = [&](std::uint64_t t) {
        GrowthEntry e;
        e.t = t;
        e.span = cur.cells.size();
        e.left = cur.all_blank() ? 0 : cur.leftmost();
        e.right = cur.all_blank() ? -1 : cur.rightmost();
        e.hash = canonical_hash(cur);
        trace.growth.entries.push_back(e);
        if (capture == Capture::full) trace.rows.push_back(cur);
    };
    record(0);
    for (std::uint64_t t = 0; t < steps; ++t) {
        if (cur.cells.size() > span_budget) {
            trace.growth.truncated = true;
            break;
        }
        cur = ca_step(rule, cur);
        record(t + 1);
    }
    return trace;
}

std::string diagram_text(const SpaceTimeTrace& trace) {
    static const char glyphs[] = ".#*+ox%@ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
    if (trace.rows.empty()) return "";
    std::int64_t lo = trace.rows.front().offset, hi = lo;
    for (const auto& row : trace.rows) {
        if (row.all_blank()) continue;
        lo = std::min(lo, row.leftmost());
        hi = std::max(hi, row.rightmost());
    }
    std::ostringstream out;
    for (const auto& row : trace.rows) {
        for (std::int64_t i = lo; i <= hi; ++i) {
            Symbol s = row.at(i);
            out << (s < sizeof(glyphs) - 1 ? glyphs[s] : '?');
        }
        out << '\n';
    }
    return out.str();
}

std::string diagram_pgm(const SpaceTimeTrace& trace) {
    if (trace.rows.empty()) return std::string("P5\n1 1\n255\n") + '\0';
    std::int64_t lo = trace.rows.front().offset, hi = lo;
    for (const auto& row : trace.rows) {
        if (row.all_blank()) continue;
        lo = std::min(lo, row.leftmost());
        hi = std::max(hi, row.rightmost());
    }
    const std::size_t w = static_cast<std::size_t>(hi - lo + 1);
    const std::size_t n = trace.rows.front().alphabet ? trace.rows.front().alphabet->size() : 256;
    std::ostringstream out;
    out << "P5\n# gray = 255 - symbol_index * (255 / alphabet_size)\n"
        << w << ' ' << trace.rows.size() << "\n255\n";
    for (const auto& row : trace.rows)
        for (std::int64_t i = lo; i <= hi; ++i) {
            unsigned g = 255u - static_cast<unsigned>(row.at(i)) * (255u / std::max<std::size_t>(n, 1));
            out.put(static_cast<char>(g));
        }
    return out.str();
}

}  // namespace cagrow
