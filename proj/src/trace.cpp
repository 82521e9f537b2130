#include "cagrow/trace.hpp"

#include <sstream>

namespace cagrow {

std::string growth_trace_csv(const GrowthTrace& g) {
    std::ostringstream out;
    out << "t,span,left,right,hash\n";
    for (const auto& e : g.entries)
        out << e.t << ',' << e.span << ',' << e.left << ',' << e.right << ',' << e.hash << '\n';
    if (g.truncated) out << "# truncated: memory budget exceeded\n";
    return out.str();
}

GrowthTrace parse_growth_trace_csv(const std::string& text) {
    GrowthTrace g;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.find("truncated") != std::string::npos) g.truncated = true;
            continue;
        }
        if (header) {
            header = false;
            continue;
        }
        GrowthEntry e;
        char comma;
        std::istringstream ls(line);
        ls >> e.t >> comma >> e.span >> comma >> e.left >> comma >> e.right >> comma >> e.hash;
        g.entries.push_back(e);
    }
    return g;
}

}  // namespace cagrow
