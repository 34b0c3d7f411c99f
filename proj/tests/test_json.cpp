#include <doctest.h>

#include "hkmod/hilb2.hpp"
#include "hkmod/json_io.hpp"

using namespace hkmod;

TEST_CASE("exact rational JSON round trip") {
    Rat r = frac(Int(-22), Int(8));
    json j = rat_json(r);
    CHECK(j["num"] == "-11");
    CHECK(j["den"] == "4");
    CHECK(rat_from_json(j) == r);
    CHECK(rat_from_json(json(5)) == 5);
    CHECK(rat_from_json(json("3/9")) == frac(Int(1), Int(3)));
    CHECK(rat_from_json(json("-7")) == -7);
    CHECK_THROWS_AS(rat_from_json(json("x")), usage_error);
    CHECK_THROWS_AS(rat_from_json(json::array()), usage_error);
    CHECK_THROWS_AS(rat_from_json(json("1/0")), usage_error);
}

TEST_CASE("character round trip") {
    auto cat = catalog();
    for (const auto& ent : cat) {
        json j = character_json(ent.model, ent.ch);
        auto [m, ch] = character_from_json(j);
        CHECK(m.lattice.gram == ent.model.lattice.gram);
        CHECK(ch == ent.ch);
    }
    Hilb2Character hc = hilb2_chern(Int(3), Int(5), Sign::plus);
    auto [m, ch] = character_from_json(character_json(hc.model, hc.ch));
    CHECK(ch == hc.ch);
}

TEST_CASE("character parsing accepts sparse input and rejects malformed data") {
    json j{{"model", {{"gram", json::array({json::array({22})})}}},
           {"ch0", 4},
           {"ch1", json::array({1})}};
    auto [m, ch] = character_from_json(j);
    CHECK(m.rank() == 1);
    CHECK(ch.ch0 == 4);
    CHECK(ch.ch2.is_zero());

    CHECK_THROWS_AS(character_from_json(json::array()), usage_error);
    CHECK_THROWS_AS(character_from_json(json{{"ch0", 1}}), usage_error);
    json bad = j;
    bad["ch1"] = json::array({1, 2});  // wrong rank
    CHECK_THROWS_AS(character_from_json(bad), usage_error);
    json asym = j;
    asym["ch2"] = json{{"sym2", json::array({json::array({0})})}, {"c2", 0}};
    CHECK_NOTHROW(character_from_json(asym));
    json asym2{{"model", {{"gram", json::array({json::array({0, 3}), json::array({3, 2})})}}},
               {"ch2", {{"sym2", json::array({json::array({0, 1}), json::array({2, 0})})}}}};
    CHECK_THROWS_AS(character_from_json(asym2), usage_error);
}
