#include <doctest.h>

#include "demazure/character.hpp"
#include "demazure/cvmod.hpp"

using namespace demazure;

using demazure::tensor;  // avoid std::tensor-like ADL surprises

TEST_CASE("irr_char") {
    GradedCharacter v0 = irr_char(0);
    CHECK(v0.weights().size() == 1);
    CHECK(v0.at(0) == QPoly(1));

    GradedCharacter v2 = irr_char(2);
    CHECK(v2.at(2) == QPoly(1));
    CHECK(v2.at(0) == QPoly(1));
    CHECK(v2.at(-2) == QPoly(1));
    CHECK(v2.at(1).is_zero());
    CHECK(dimension(v2) == 3);
    CHECK_THROWS_AS(irr_char(-1), std::domain_error);
}

TEST_CASE("tensor") {
    GradedCharacter v1 = irr_char(1);
    GradedCharacter t = tensor(v1, v1);
    CHECK(t.at(2) == QPoly(1));
    CHECK(t.at(0) == QPoly(2));
    CHECK(t.at(-2) == QPoly(1));

    GradedCharacter t2 = tensor(v1, irr_char(2));
    CHECK(t2.at(3) == QPoly(1));
    CHECK(t2.at(1) == QPoly(2));
    CHECK(t2.at(-1) == QPoly(2));
    CHECK(t2.at(-3) == QPoly(1));

    CHECK(tensor(t2, irr_char(0)) == t2);
    CHECK(dimension(tensor(weyl_char(3), irr_char(2))) == 8 * 3);
}

TEST_CASE("shift") {
    GradedCharacter c = irr_char(2);
    CHECK(shift(c, 0) == c);
    GradedCharacter s = shift(irr_char(0), 3);
    CHECK(s.at(0) == QPoly::monomial(3));
    CHECK(shift(shift(c, 2), 3) == shift(c, 5));
    CHECK_THROWS_AS(shift(c, -1), std::domain_error);
}

TEST_CASE("decompose_irreducible") {
    auto d = decompose_irreducible(irr_char(5));
    CHECK(d.parts.size() == 1);
    CHECK(d.parts.at(5) == QPoly(1));

    auto t = decompose_irreducible(tensor(irr_char(1), irr_char(1)));
    CHECK(t.parts.at(2) == QPoly(1));
    CHECK(t.parts.at(0) == QPoly(1));

    auto w = decompose_irreducible(weyl_char(2));
    CHECK(w.parts.at(2) == QPoly(1));
    CHECK(w.parts.at(0) == QPoly::monomial(1));

    // round trip on CV characters
    for (const Partition& xi : {Partition{2, 2, 1}, Partition{3, 1, 1}, Partition{}}) {
        GradedCharacter c = cv_char(xi);
        CHECK(recompose(decompose_irreducible(c)) == c);
    }

    GradedCharacter bad;
    bad.add(2, QPoly(1));  // not weight-symmetric
    CHECK_THROWS_AS(decompose_irreducible(bad), NotAModuleCharacter);
}

TEST_CASE("demazure_flag_decompose") {
    auto f = demazure_flag_decompose(weyl_char(2), 2);
    CHECK(f.level == 2);
    CHECK(f.parts.at(2) == QPoly(1));
    CHECK(f.parts.at(0) == QPoly::monomial(1));
    CHECK(recompose(f) == weyl_char(2));

    // self-decomposition of a Demazure character
    GradedCharacter d23 = cv_char(demazure_partition(2, 3));
    auto self = demazure_flag_decompose(d23, 2);
    CHECK(self.parts.size() == 1);
    CHECK(self.parts.at(3) == QPoly(1));

    CHECK_THROWS_AS(demazure_flag_decompose(irr_char(3), 2), NoFlag);
    CHECK_THROWS_AS(demazure_flag_decompose(irr_char(0), 0), std::domain_error);
}

TEST_CASE("graded_dimension") {
    CHECK(graded_dimension(weyl_char(2)) == QPoly{3, 1});
    CHECK(dimension(weyl_char(12)) == 4096);
    CHECK(dimension(cv_char(Partition{2, 2, 1})) == 18);
}
