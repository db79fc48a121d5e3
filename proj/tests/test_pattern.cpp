#include <doctest.h>

#include <algorithm>
#include <set>

#include "husp/pattern.hpp"
#include "test_util.hpp"

using namespace husp;

namespace {
Pattern pat(const char* text) { return pattern_from_string(text); }
}

TEST_CASE("pattern rendering round-trips and orders canonically") {
    CHECK(pattern_to_string(pat("1 -1 2")) == "1 -1 2 -2");
    CHECK(pattern_to_string(pat("1 3 -1 2 -2")) == "1 3 -1 2 -2");
    CHECK(pat("1 -1 2 -2") == pat("1 -1 2"));
    CHECK(pat("1 -1 2").length() == 2);

    CHECK(pattern_less(pat("2"), pat("1 -1 1")));      // fewer itemsets first
    CHECK(pattern_less(pat("1 2"), pat("1 3")));
    CHECK(pattern_less(pat("1 -1 2"), pat("2 -1 1")));
    CHECK_FALSE(pattern_less(pat("1"), pat("1")));

    CHECK_THROWS_AS(pat("1 1"), ParseError);   // duplicate within itemset
    CHECK_THROWS_AS(pat("2 1"), ParseError);   // unsorted itemset
    CHECK_THROWS_AS(pat(""), ParseError);
    CHECK_THROWS_AS(pat("-1 2"), ParseError);
}

TEST_CASE("matches of <[a],[b]> in S1") {
    const auto db = husptest::table1();
    const auto& s1 = db.sequences[0];
    const auto matches = find_matches(pat("1 -1 2"), s1);
    REQUIRE(matches.size() == 3);
    std::multiset<Money> utilities;
    for (const auto& m : matches) utilities.insert(match_utility(db.profits, s1, m));
    CHECK(utilities == std::multiset<Money>{money_from_units(13), money_from_units(25),
                                            money_from_units(30)});
}

TEST_CASE("whole-sequence match and absent pattern") {
    const auto db = husptest::table1();
    const auto& s1 = db.sequences[0];
    const auto whole = find_matches(pat("1 3 -1 1 2 3 -1 1 2 4 -1 5"), s1);
    REQUIRE(whole.size() == 1);
    CHECK(match_utility(db.profits, s1, whole[0]) == s1.totalUtility);
    CHECK(find_matches(pat("6 -1 3"), s1).empty());
}

TEST_CASE("match vectors reproduce the pattern at their positions") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto db = husptest::random_db(seed);
        for (const auto& s : db.sequences) {
            // flatten for position lookups
            std::vector<ItemId> flat;
            std::vector<std::size_t> itemsetOf;
            for (std::size_t j = 0; j < s.itemsets.size(); ++j)
                for (const auto& qi : s.itemsets[j].items) {
                    flat.push_back(qi.item);
                    itemsetOf.push_back(j);
                }
            for (const char* text : {"1 -1 1", "1 2", "2 -1 1 -1 1", "1 -1 2 -1 3"}) {
                Pattern t;
                try {
                    t = pat(text);
                } catch (const ParseError&) {
                    continue;
                }
                for (const auto& m : find_matches(t, s)) {
                    REQUIRE(m.groups.size() == t.itemsets.size());
                    Pos prev = 0;
                    for (std::size_t g = 0; g < m.groups.size(); ++g) {
                        REQUIRE(m.groups[g].size() == t.itemsets[g].size());
                        for (std::size_t k = 0; k < m.groups[g].size(); ++k) {
                            const Pos p = m.groups[g][k];
                            CHECK(p > prev);
                            prev = p;
                            CHECK(flat[static_cast<std::size_t>(p - 1)] == t.itemsets[g][k]);
                            CHECK(itemsetOf[static_cast<std::size_t>(p - 1)] ==
                                  itemsetOf[static_cast<std::size_t>(m.groups[g][0] - 1)]);
                        }
                        if (g > 0)
                            CHECK(itemsetOf[static_cast<std::size_t>(m.groups[g][0] - 1)] >
                                  itemsetOf[static_cast<std::size_t>(m.groups[g - 1][0] - 1)]);
                    }
                }
            }
        }
    }
}

TEST_CASE("naive pattern utility on the running example") {
    const auto db = husptest::table1();
    CHECK(naive_pattern_utility(pat("1 -1 2"), db) == money_from_units(160));
    CHECK(naive_pattern_utility_in(pat("1 -1 2"), db.sequences[0], db.profits) ==
          money_from_units(30));
    // brute-force over per-transaction occurrence maxima: 20+25+15+25+20+25
    CHECK(naive_pattern_utility(pat("1"), db) == money_from_units(130));
    CHECK(naive_pattern_utility(pat("6 -1 3"), db) == 0);
}

TEST_CASE("zero utility iff no matches anywhere") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto db = husptest::random_db(seed);
        for (const char* text : {"1", "1 -1 1", "1 2 3", "2 -1 2"}) {
            Pattern t;
            try {
                t = pat(text);
            } catch (const ParseError&) {
                continue;
            }
            bool any = false;
            for (const auto& s : db.sequences) any = any || !find_matches(t, s).empty();
            CHECK((naive_pattern_utility(t, db) == 0) == !any);
        }
    }
}
