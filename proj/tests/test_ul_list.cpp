#include <doctest.h>

#include "husp/ul_list.hpp"
#include "test_util.hpp"

using namespace husp;

TEST_CASE("UL-list of S1 matches the documented layout") {
    const auto db = husptest::table1();
    const auto ul = build_ul_list(db.sequences[0], db.profits);

    REQUIRE(ul.flat_length() == 9);
    CHECK(ul.totalUtility == money_from_units(94));

    // first element (a, 10, 84, next=3)
    CHECK(ul.at(1).item == 1);
    CHECK(ul.at(1).utility == money_from_units(10));
    CHECK(ul.at(1).remainingUtility == money_from_units(84));
    CHECK(ul.at(1).nextPos == 3);

    // position 4 is (b, 3, 54, next=7); the last element is (e, 3, 0, -)
    CHECK(ul.at(4).item == 2);
    CHECK(ul.at(4).utility == money_from_units(3));
    CHECK(ul.at(4).remainingUtility == money_from_units(54));
    CHECK(ul.at(4).nextPos == 7);
    CHECK(ul.at(9).item == 5);
    CHECK(ul.at(9).utility == money_from_units(3));
    CHECK(ul.at(9).remainingUtility == 0);
    CHECK_FALSE(ul.at(9).nextPos.has_value());

    // header (a,1)(b,4)(c,2)(d,8)(e,9)
    REQUIRE(ul.header.size() == 5);
    const std::vector<std::pair<ItemId, Pos>> expected{{1, 1}, {2, 4}, {3, 2}, {4, 8}, {5, 9}};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(ul.header[i].item == expected[i].first);
        CHECK(ul.header[i].firstPos == expected[i].second);
    }

    // itemset boundaries: positions 1-2 / 3-5 / 6-8 / 9
    CHECK(ul.itemset_of(2) == 0);
    CHECK(ul.itemset_of(3) == 1);
    CHECK(ul.itemset_of(5) == 1);
    CHECK(ul.itemset_of(6) == 2);
    CHECK(ul.itemset_of(9) == 3);
}

TEST_CASE("UL-list of S2: flattened order and first occurrences") {
    const auto db = husptest::table1();
    const auto ul = build_ul_list(db.sequences[1], db.profits);
    const std::vector<ItemId> order{1, 5, 1, 2, 4, 2, 3, 4, 5};
    REQUIRE(ul.flat_length() == 9);
    for (Pos p = 1; p <= 9; ++p) CHECK(ul.at(p).item == order[static_cast<std::size_t>(p - 1)]);
    const std::vector<std::pair<ItemId, Pos>> expected{{1, 1}, {2, 4}, {3, 7}, {4, 5}, {5, 2}};
    REQUIRE(ul.header.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(ul.header[i].item == expected[i].first);
        CHECK(ul.header[i].firstPos == expected[i].second);
    }
}

TEST_CASE("rest utility lookups") {
    const auto db = husptest::table1();
    const auto ul1 = build_ul_list(db.sequences[0], db.profits);
    CHECK(ul1.rest_utility(4) == money_from_units(54));
    CHECK(ul1.rest_utility(9) == 0);
    const auto ul2 = build_ul_list(db.sequences[1], db.profits);
    CHECK(ul2.rest_utility(6) == money_from_units(15));
    CHECK_THROWS_AS(ul1.rest_utility(0), std::out_of_range);
    CHECK_THROWS_AS(ul1.rest_utility(10), std::out_of_range);
}

TEST_CASE("inspect layout for S1") {
    const auto db = husptest::table1();
    const auto text = format_ul_list(build_ul_list(db.sequences[0], db.profits));
    CHECK(text ==
          "SID: 1\n"
          "UP: <[(1,10,84,3) (3,12,72,5)], [(1,15,57,6) (2,3,54,7) (3,8,46,-)], "
          "[(1,20,26,-) (2,15,11,-) (4,8,3,-)], [(5,3,0,-)]>\n"
          "Header: (1,1) (2,4) (3,2) (4,8) (5,9)\n");
}

TEST_CASE("UL-list invariants on random databases") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto db = husptest::random_db(seed);
        for (const auto& s : db.sequences) {
            const auto ul = build_ul_list(s, db.profits);
            REQUIRE(ul.flat_length() == s.flatLength);

            // reconstruction: element utilities sum to u(s)
            Money sum = 0;
            for (Pos p = 1; p <= ul.flat_length(); ++p) sum += ul.at(p).utility;
            CHECK(sum == s.totalUtility);
            CHECK(ul.totalUtility == s.totalUtility);
            if (ul.flat_length() > 0)
                CHECK(ul.totalUtility == ul.at(1).utility + ul.at(1).remainingUtility);

            // rest utility equals the direct suffix sum
            for (Pos p = 1; p <= ul.flat_length(); ++p) {
                Money direct = 0;
                for (Pos q = p + 1; q <= ul.flat_length(); ++q) direct += ul.at(q).utility;
                CHECK(ul.rest_utility(p) == direct);
                if (p < ul.flat_length())
                    CHECK(ul.at(p).remainingUtility ==
                          ul.at(p + 1).remainingUtility + ul.at(p + 1).utility);
                CHECK(ul.itemset_of(p) >= ul.itemset_of(std::max<Pos>(1, p - 1)));
            }

            // next-position chains visit exactly the positions of each item
            for (const auto& h : ul.header) {
                std::vector<Pos> viaChain;
                auto p = ul.first_pos(h.item);
                while (p) {
                    viaChain.push_back(*p);
                    p = ul.at(*p).nextPos;
                }
                std::vector<Pos> direct;
                for (Pos q = 1; q <= ul.flat_length(); ++q)
                    if (ul.at(q).item == h.item) direct.push_back(q);
                CHECK(viaChain == direct);
            }
        }
    }
}
