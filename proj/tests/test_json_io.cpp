#include <doctest.h>

#include "demazure/cvmod.hpp"
#include "demazure/json_io.hpp"

using namespace demazure;

TEST_CASE("qpoly json round trip") {
    QPoly p{1, 1};
    nlohmann::json j = qpoly_to_json(p);
    CHECK(j.dump() == R"(["1","1"])");
    CHECK(qpoly_from_json(j) == p);

    CHECK(qpoly_to_json(QPoly()).dump() == "[]");
    QPoly big = QPoly::monomial(3, mpz_class("123456789012345678901234567890"));
    CHECK(qpoly_from_json(qpoly_to_json(big)) == big);
    CHECK(qpoly_from_json(qpoly_to_json(QPoly{-2, 0, 5})) == QPoly{-2, 0, 5});
}

TEST_CASE("character json round trip") {
    GradedCharacter c = cv_char(Partition{2, 1});
    nlohmann::json j = character_to_json(c);
    CHECK(j.contains("weights"));
    CHECK(j["weights"]["3"].dump() == R"(["1"])");
    CHECK(j["weights"]["1"].dump() == R"(["1","1"])");
    CHECK(character_from_json(j) == c);
    CHECK(character_from_json(character_to_json(GradedCharacter())) == GradedCharacter());
}

TEST_CASE("decomposition json") {
    auto d = decompose_irreducible(weyl_char(2));
    nlohmann::json j = irreducible_to_json(d);
    CHECK(j["parts"]["2"].dump() == R"(["1"])");
    CHECK(j["parts"]["0"].dump() == R"(["0","1"])");

    auto f = demazure_flag_decompose(weyl_char(2), 2);
    nlohmann::json jf = flag_to_json(f);
    CHECK(jf["level"] == 2);
    CHECK(jf["parts"]["0"].dump() == R"(["0","1"])");
}
