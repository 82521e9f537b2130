#pragma once

#include <string>

#include "cagrow/ca.hpp"

namespace cagrow {

// Rule file: a `kind:`/`radius:` header, provenance comments (source machine
// hash, acceptable-set hash, budgets), then a kind-specific body. Table rules
// carry explicit neighborhood lines; compiled and composed rules embed their
// construction inputs so a parsed rule replays byte-for-byte.
std::string serialize_rule(const CaRule& rule);
CaRulePtr parse_rule(const std::string& text);

}  // namespace cagrow
