#include "cagrow/rule_io.hpp"

#include <algorithm>
#include <sstream>

#include "cagrow/compiler.hpp"
#include "cagrow/constructions.hpp"

namespace cagrow {

namespace {

std::string alphabet_line(const Alphabet& a) {
    std::string out = "alphabet:";
    for (std::size_t i = 0; i < a.size(); ++i) out += " " + a.name(static_cast<Symbol>(i));
    return out;
}

std::size_t count_lines(const std::string& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::string serialize_table_like(const CaRule& rule) {
    const Alphabet& a = *rule.alphabet();
    const unsigned w = 2 * rule.radius() + 1;
    double combos = 1;
    for (unsigned i = 0; i < w; ++i) combos *= static_cast<double>(a.size());
    if (combos > (1 << 20))
        throw std::invalid_argument("rule too large to materialize as a table");
    std::ostringstream out;
    out << "kind: table\nradius: " << rule.radius() << "\nfallback: none\n"
        << alphabet_line(a) << "\ntable:\n";
    std::vector<Symbol> win(w, 0);
    bool done = false;
    while (!done) {
        Symbol o = rule.apply(win.data());
        for (unsigned i = 0; i < w; ++i) out << a.name(win[i]) << ' ';
        out << "-> " << a.name(o) << '\n';
        std::size_t i = 0;
        for (; i < w; ++i) {
            if (++win[i] < a.size()) break;
            win[i] = 0;
        }
        done = (i == w);
    }
    out << "end\n";
    return out.str();
}

std::string serialize_embedded(const std::string& label, const std::string& body) {
    std::ostringstream out;
    out << label << ": " << count_lines(body) << " lines\n" << body;
    return out.str();
}

struct LineReader {
    std::istringstream in;
    explicit LineReader(const std::string& text) : in(text) {}
    bool next(std::string& line) { return static_cast<bool>(std::getline(in, line)); }
    std::string take_lines(std::size_t n) {
        std::string out, line;
        for (std::size_t i = 0; i < n; ++i) {
            if (!next(line)) throw ParseError("rule file truncated inside an embedded block");
            out += line + "\n";
        }
        return out;
    }
};

std::string field(const std::string& line, const std::string& key) {
    if (line.rfind(key, 0) != 0) throw ParseError("expected '" + key + "' in rule file");
    auto v = line.substr(key.size());
    auto b = v.find_first_not_of(" \t");
    return b == std::string::npos ? "" : v.substr(b);
}

}  // namespace

std::string serialize_rule(const CaRule& rule) {
    std::ostringstream out;
    out << "# cagrow rule v1\n";
    out << "# rule-hash: " << rule.rule_hash() << "\n";

    if (auto* t = dynamic_cast<const TableRule*>(&rule)) {
        out << "kind: table\nradius: " << t->radius() << "\nfallback: "
            << (t->fallback() == Fallback::identity ? "identity" : "none") << '\n'
            << alphabet_line(*t->alphabet()) << "\ntable:\n";
        const Alphabet& a = *t->alphabet();
        for (const auto& [win, o] : t->entries()) {
            for (Symbol s : win) out << a.name(s) << ' ';
            out << "-> " << a.name(o) << '\n';
        }
        out << "end\n";
        return out.str();
    }
    if (auto* s = dynamic_cast<const SimulatingRule*>(&rule)) {
        out << "kind: simulating\n";
        out << "# source-machine: " << s->machine().content_hash() << "\n";
        out << serialize_embedded("machine", format_machine(s->machine()));
        return out.str();
    }
    if (auto* d = dynamic_cast<const DominatingRule*>(&rule)) {
        const auto& acc = d->acceptable_sites();
        out << "kind: dominating\n";
        out << "# source-machine: " << d->machine().content_hash() << "\n";
        out << "# acceptable-set: " << acc.content_hash() << "\n";
        out << serialize_embedded("machine", format_machine(d->machine()));
        out << "saturated: " << (acc.saturated ? 1 : 0) << '\n';
        out << "budget-used: " << acc.budget_used << '\n';
        const Alphabet& a = *d->alphabet();
        std::vector<std::uint64_t> wins(acc.windows.begin(), acc.windows.end());
        std::sort(wins.begin(), wins.end());
        out << "windows: " << wins.size() << '\n';
        for (auto v : wins)
            out << a.name(static_cast<Symbol>(v >> 32)) << ' '
                << a.name(static_cast<Symbol>((v >> 16) & 0xffff)) << ' '
                << a.name(static_cast<Symbol>(v & 0xffff)) << '\n';
        std::vector<std::uint64_t> prs(acc.pairs.begin(), acc.pairs.end());
        std::sort(prs.begin(), prs.end());
        out << "pairs: " << prs.size() << '\n';
        for (auto v : prs)
            out << a.name(static_cast<Symbol>(v >> 16)) << ' '
                << a.name(static_cast<Symbol>(v & 0xffff)) << '\n';
        return out.str();
    }
    if (auto* c = dynamic_cast<const ComposedRule*>(&rule)) {
        out << "kind: composed\nparts:";
        std::vector<std::size_t> sizes(c->partition().parts, 0);
        for (std::size_t p : c->partition().part_of) sizes[p]++;
        for (std::size_t s : sizes) out << ' ' << s;
        out << '\n';
        for (const auto& comp : c->components())
            out << serialize_embedded("component", serialize_rule(*comp));
        return out.str();
    }
    if (auto* m = dynamic_cast<const MonotoneRule*>(&rule)) {
        out << "kind: monotone\n";
        out << serialize_embedded("inner", serialize_rule(*m->inner()));
        return out.str();
    }
    // Anything else (builtin demo rules) is materialized as an explicit table.
    out << serialize_table_like(rule);
    return out.str();
}

CaRulePtr parse_rule(const std::string& text) {
    LineReader rd(text);
    std::string line;
    // Skip comments/blank lines up to `kind:`.
    while (rd.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        break;
    }
    std::string kind = field(line, "kind:");

    if (kind == "table") {
        if (!rd.next(line)) throw ParseError("missing radius");
        unsigned radius = static_cast<unsigned>(std::stoul(field(line, "radius:")));
        if (!rd.next(line)) throw ParseError("missing fallback");
        std::string fb = field(line, "fallback:");
        if (!rd.next(line)) throw ParseError("missing alphabet");
        std::istringstream as(field(line, "alphabet:"));
        std::vector<std::string> names;
        std::string tok;
        while (as >> tok) names.push_back(tok);
        if (names.empty() || names.front() != "B")
            throw ParseError("rule alphabet must start with its blank 'B'");
        auto a = std::make_shared<Alphabet>(std::vector<std::string>(names.begin() + 1, names.end()));
        auto rule = std::make_shared<TableRule>(
            a, radius, fb == "identity" ? Fallback::identity : Fallback::none);
        if (!rd.next(line) || line != "table:") throw ParseError("missing table section");
        const unsigned w = 2 * radius + 1;
        while (rd.next(line)) {
            if (line == "end") break;
            std::istringstream ls(line);
            std::vector<Symbol> win;
            std::string arrow, o;
            for (unsigned i = 0; i < w; ++i) {
                if (!(ls >> tok)) throw ParseError("short table line: " + line);
                win.push_back(a->id(tok));
            }
            if (!(ls >> arrow >> o) || arrow != "->") throw ParseError("bad table line: " + line);
            rule->set(win, a->id(o));
        }
        return rule;
    }
    if (kind == "simulating") {
        if (!rd.next(line)) throw ParseError("missing machine block");
        std::size_t n = std::stoul(field(line, "machine:"));
        TuringMachineSpec m = parse_machine(rd.take_lines(n));
        return compile_simulating(m, /*enforce_conventions=*/false);
    }
    if (kind == "dominating") {
        if (!rd.next(line)) throw ParseError("missing machine block");
        std::size_t n = std::stoul(field(line, "machine:"));
        TuringMachineSpec m = parse_machine(rd.take_lines(n));
        AcceptableSiteSet acc;
        if (!rd.next(line)) throw ParseError("missing saturated flag");
        acc.saturated = field(line, "saturated:") == "1";
        if (!rd.next(line)) throw ParseError("missing budget-used");
        acc.budget_used = std::stoull(field(line, "budget-used:"));
        SimulatingRule probe(m);  // codec for name -> symbol
        const Alphabet& a = *probe.alphabet();
        if (!rd.next(line)) throw ParseError("missing windows");
        std::size_t nw = std::stoul(field(line, "windows:"));
        for (std::size_t i = 0; i < nw; ++i) {
            if (!rd.next(line)) throw ParseError("truncated window list");
            std::istringstream ls(line);
            std::string x, y, z;
            ls >> x >> y >> z;
            acc.windows.insert(AcceptableSiteSet::pack3(a.id(x), a.id(y), a.id(z)));
        }
        if (!rd.next(line)) throw ParseError("missing pairs");
        std::size_t np = std::stoul(field(line, "pairs:"));
        for (std::size_t i = 0; i < np; ++i) {
            if (!rd.next(line)) throw ParseError("truncated pair list");
            std::istringstream ls(line);
            std::string x, y;
            ls >> x >> y;
            acc.pairs.insert(AcceptableSiteSet::pack2(a.id(x), a.id(y)));
        }
        return std::make_shared<DominatingRule>(m, acc);
    }
    if (kind == "composed") {
        if (!rd.next(line)) throw ParseError("missing parts");
        std::istringstream ps(field(line, "parts:"));
        std::vector<std::size_t> sizes;
        std::size_t v;
        while (ps >> v) sizes.push_back(v);
        std::vector<CaRulePtr> comps;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            if (!rd.next(line)) throw ParseError("missing component block");
            std::size_t n = std::stoul(field(line, "component:"));
            comps.push_back(parse_rule(rd.take_lines(n)));
        }
        return compose(std::move(comps), TagPartition::sized(sizes));
    }
    if (kind == "monotone") {
        if (!rd.next(line)) throw ParseError("missing inner block");
        std::size_t n = std::stoul(field(line, "inner:"));
        return make_monotone(parse_rule(rd.take_lines(n)));
    }
    throw ParseError("unknown rule kind '" + kind + "'");
}

}  // namespace cagrow
