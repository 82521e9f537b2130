#include <doctest.h>

#include "cagrow/standard.hpp"
#include "cagrow/tape.hpp"
#include "support.hpp"

using namespace cagrow;
using testsup::cfg;

TEST_CASE("span counts cells between the extreme non-blank cells") {
    auto a = tm_alphabet();
    CHECK(span(cfg(a, "")).value == 0);
    CHECK(span(cfg(a, "S 0 * 1 F")).value == 5);
    CHECK(span(cfg(a, "@17 S 0 * 1 F")).value == 5);
    CHECK(span(cfg(a, "B B S F B")).value == 2);
    CHECK(span(cfg(a, "S B B F")).value == 4);  // interior blanks count
}

TEST_CASE("canonicalize trims and is translation-equivariant") {
    auto a = tm_alphabet();
    Configuration c = cfg(a, "B B S F B");
    auto canon = canonicalize(c);
    CHECK(canon.offset == 2);
    CHECK(canon.word.size() == 2);
    CHECK(format_configuration(c) == "@2 S F");

    auto blank = canonicalize(cfg(a, ""));
    CHECK(blank.word.empty());
    CHECK(blank.offset == 0);

    Configuration shifted = shift(c, 7);
    CHECK(canonicalize(shifted).word == canon.word);
    CHECK(canonicalize(shifted).offset == canon.offset + 7);
    CHECK(span(shifted).value == span(c).value);
    CHECK(canonical_hash(shifted) == canonical_hash(c));

    // Idempotent on the word component.
    Configuration again(a, canon.offset, canon.word);
    CHECK(canonicalize(again).word == canon.word);
}

TEST_CASE("set keeps the trim invariant") {
    auto a = tm_alphabet();
    Configuration c = cfg(a, "S F");
    c.set(5, a->id("1"));
    CHECK(c.rightmost() == 5);
    CHECK(span(c).value == 6);
    c.set(5, Alphabet::blank);
    CHECK(c.rightmost() == 1);
    c.set(-3, a->id("0"));
    CHECK(c.leftmost() == -3);
    c.set(-3, Alphabet::blank);
    CHECK(c.leftmost() == 0);
}

TEST_CASE("standard sigma configurations") {
    auto a = tm_alphabet();
    CHECK(is_standard_config(cfg(a, "S 0 * 1 F"), Layer::sigma));
    CHECK(is_standard_config(cfg(a, "S B 1 F"), Layer::sigma));
    CHECK_FALSE(is_standard_config(cfg(a, "S 0 S F"), Layer::sigma));
    CHECK_FALSE(is_standard_config(cfg(a, "S 0 1"), Layer::sigma));
    CHECK_FALSE(is_standard_config(cfg(a, "F 0 S"), Layer::sigma));
    CHECK_FALSE(is_standard_config(cfg(a, ""), Layer::sigma));
}

TEST_CASE("standard sigma1 configurations") {
    std::vector<std::string> names;
    for (const char* s : {"S/q0/H", "S/q0/R", "0/B/R", "0/B/L", "*/B/L", "F/B/L", "F/q1/L"})
        names.push_back(s);
    auto a1 = std::make_shared<Alphabet>(names);
    auto c = [&](const std::string& t) { return parse_configuration(a1, t); };

    CHECK(is_standard_config(c("S/q0/H */B/L F/B/L"), Layer::sigma1));
    CHECK(is_standard_config(c("S/q0/R 0/B/L */B/L F/B/L"), Layer::sigma1));
    // Two heads, head-position order violations, missing head.
    CHECK_FALSE(is_standard_config(c("S/q0/H */B/L F/q1/L S/q0/H"), Layer::sigma1));
    CHECK_FALSE(is_standard_config(c("S/q0/R 0/B/L F/B/L"), Layer::sigma1));
    CHECK_FALSE(is_standard_config(c("0/B/R S/q0/H F/B/L"), Layer::sigma1));

    // sigma1-standard implies sigma-standard on first coordinates.
    auto base = tm_alphabet();
    Configuration good = c("S/q0/H */B/L F/B/L");
    CHECK(is_standard_config(project_first(good, base), Layer::sigma));
}

TEST_CASE("standard io parsing") {
    auto a = tm_alphabet();
    auto io = is_standard_io(cfg(a, "S 1 0 * 1 1 F"));
    REQUIRE(io.has_value());
    CHECK(io->m == 2);
    CHECK(io->n == 3);

    io = is_standard_io(cfg(a, "S * F"));
    REQUIRE(io.has_value());
    CHECK_FALSE(io->m.has_value());
    CHECK_FALSE(io->n.has_value());

    CHECK_FALSE(is_standard_io(cfg(a, "S 0 1 F")).has_value());
    CHECK_FALSE(is_standard_io(cfg(a, "S 0 * 1 * F")).has_value());
    CHECK_FALSE(is_standard_io(cfg(a, "S 0 * B 1 F")).has_value());

    // Leading zeros decode by value; the numeral builder emits none.
    io = is_standard_io(cfg(a, "S 0 0 1 0 * F"));
    CHECK(io->m == 2);
    CHECK(make_io_configuration(a, 2, 3).cells == cfg(a, "S 1 0 * 1 1 F").cells);
}

TEST_CASE("configuration text format round trip") {
    auto a = tm_alphabet();
    Configuration c = cfg(a, "@-3 S 0 * 1 F");
    CHECK(c.offset == -3);
    Configuration back = parse_configuration(a, format_configuration(c));
    CHECK(back == c);
    CHECK_THROWS_AS(cfg(a, "S nope F"), ParseError);
}
