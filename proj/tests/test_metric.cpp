#include "editstat/metric.hpp"

#include "editstat/corpus.hpp"
#include "editstat/error.hpp"
#include "editstat/unicode.hpp"
#include "oracles.hpp"

#include "doctest.h"

#include <random>

using namespace editstat;

TEST_CASE("edit_distance on the Middle English spellings") {
    CHECK(edit_distance("old", "halde") == 3);
    CHECK(edit_distance("brewers", "brueres") == 3);
    CHECK(edit_distance("brewers", "breweres") == 1);
    CHECK(oracles::lev_recursive(U"brewers", U"breweres") == 1);
}

TEST_CASE("edit_distance basics") {
    CHECK(edit_distance("", "") == 0);
    CHECK(edit_distance("", "abc") == 3);
    CHECK(edit_distance("abc", "") == 3);
    CHECK(edit_distance("kitten", "kitten") == 0);
    CHECK(edit_distance("ab", "ba") == 2);
    // yogh/thorn are single edit units
    CHECK(edit_distance("ȝe", "þe") == 1);
    CHECK(edit_distance("beoþ", "beoth") == 2);
    // case-sensitive at this layer
    CHECK(edit_distance("Cokes", "cokes") == 1);
}

TEST_CASE("edit_distance with non-unit costs") {
    const EditCosts heavy_sub{1, 1, 5};
    // substitution is priced out; insert+delete wins
    CHECK(edit_distance("a", "b", heavy_sub) == 2);
    const EditCosts weighted{2, 3, 4};
    CHECK(edit_distance("", "ab", weighted) == 4);
    CHECK(edit_distance("ab", "", weighted) == 6);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = oracles::random_string(rng, U"abc", 4);
        const auto b = oracles::random_string(rng, U"abc", 4);
        CHECK(edit_distance(a, b, weighted) ==
              oracles::lev_recursive_costs(a, b, weighted));
    }
}

TEST_CASE("edit_distance rejects invalid UTF-8") {
    CHECK_THROWS_AS(edit_distance("ok", "\xFF"), DataError);
}

TEST_CASE("metric axioms on random triples") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = oracles::random_string(rng, oracles::kAlphabet, 20);
        const auto b = oracles::random_string(rng, oracles::kAlphabet, 20);
        const auto c = oracles::random_string(rng, oracles::kAlphabet, 20);
        const auto dab = edit_distance(a, b);
        const auto dba = edit_distance(b, a);
        const auto dac = edit_distance(a, c);
        const auto dbc = edit_distance(b, c);
        REQUIRE(dab == dba);
        REQUIRE((dab == 0) == (a == b));
        REQUIRE(dac <= dab + dbc);
    }
}

TEST_CASE("unit-cost bounds") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = oracles::random_string(rng, oracles::kAlphabet, 20);
        const auto b = oracles::random_string(rng, oracles::kAlphabet, 20);
        const auto d = edit_distance(a, b);
        const auto la = a.size(), lb = b.size();
        REQUIRE(d >= (la > lb ? la - lb : lb - la));
        REQUIRE(d <= std::max(la, lb));
    }
}

TEST_CASE("DP equals the recursive-definition oracle on short strings") {
    // The full length <= 6 sweep lives in the acceptance suite; this keeps a
    // quick version in the unit run.
    const auto strings = oracles::all_strings(U"abc", 4);
    for (std::size_t i = 0; i < strings.size(); ++i)
        for (std::size_t j = i; j < strings.size(); ++j) {
            const auto expected = oracles::lev_recursive(strings[i], strings[j]);
            REQUIRE(edit_distance(strings[i], strings[j]) == expected);
            REQUIRE(edit_distance(strings[j], strings[i]) == expected);
        }
}

TEST_CASE("distance_matrix basics") {
    SUBCASE("single item") {
        const std::vector<std::string> items{"a"};
        const DistanceMatrix dm = distance_matrix(items);
        CHECK(dm.size() == 1);
        CHECK(dm.at(0, 0) == 0);
    }
    SUBCASE("two substitutions") {
        const std::vector<std::string> items{"ab", "ba"};
        const DistanceMatrix dm = distance_matrix(items);
        CHECK(dm.at(0, 1) == 2);
        CHECK(dm.at(1, 0) == 2);
        CHECK(dm.at(0, 0) == 0);
        CHECK(dm.at(1, 1) == 0);
        CHECK(oracles::lev_recursive(U"ab", U"ba") == 2);
    }
    SUBCASE("empty item sequence is rejected") {
        CHECK_THROWS_AS(distance_matrix(std::vector<std::string>{}), DataError);
    }
    SUBCASE("asymmetric costs are rejected") {
        const std::vector<std::string> items{"a", "b"};
        CHECK_THROWS_AS(distance_matrix(items, EditCosts{1, 2, 1}), DataError);
    }
}

TEST_CASE("EditCosts validity predicates") {
    CHECK(EditCosts{}.metric());
    CHECK(EditCosts{1, 1, 2}.metric());
    CHECK_FALSE(EditCosts{1, 1, 3}.metric());  // substitution too expensive
    CHECK_FALSE(EditCosts{1, 2, 1}.symmetric());
}

TEST_CASE("the 17-line fixture gives a matrix with no zero off-diagonals") {
    const Corpus corpus = load_corpus(std::string(EDITSTAT_DATA_DIR) +
                                      "/figure1_b.json");
    std::vector<std::string> lines;
    for (const Witness& w : corpus.witnesses) lines.push_back(w.lines[0]);
    const DistanceMatrix dm = distance_matrix(lines);
    REQUIRE(dm.size() == 17);
    for (std::size_t i = 0; i < 17; ++i)
        for (std::size_t j = 0; j < 17; ++j) {
            if (i == j) REQUIRE(dm.at(i, j) == 0);
            else REQUIRE(dm.at(i, j) > 0);
        }
}

TEST_CASE("distance_matrix is independent of thread count") {
    std::mt19937_64 rng(5);
    std::vector<std::string> items;
    for (int i = 0; i < 25; ++i)
        items.push_back(encode_utf8(oracles::random_string(rng, oracles::kAlphabet, 30)));
    const DistanceMatrix serial = distance_matrix(items, {}, 1);
    const DistanceMatrix threaded = distance_matrix(items, {}, 4);
    CHECK(serial.values() == threaded.values());

    // symmetry and triangle inequality hold on the computed matrix
    const std::size_t n = serial.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            REQUIRE(serial.at(i, j) == serial.at(j, i));
            for (std::size_t k = 0; k < n; ++k)
                REQUIRE(serial.at(i, j) <= serial.at(i, k) + serial.at(k, j));
        }
}
