#include <doctest.h>

#include "demazure/cvmod.hpp"

using namespace demazure;

TEST_CASE("Partition basics") {
    Partition p{1, 2, 2};
    CHECK(p.parts() == std::vector<long>{2, 2, 1});  // sorted descending
    CHECK(p.size() == 5);
    CHECK(p.largest() == 2);
    CHECK(p.to_text() == "2,2,1");
    CHECK(Partition::from_text("2,2,1") == p);
    CHECK(Partition::from_text("") == Partition());
    CHECK(Partition({3, 0, 1}).num_parts() == 2);  // zeros dropped
    CHECK_THROWS_AS(Partition({-1, 2}), std::domain_error);
    CHECK_THROWS_AS(Partition::from_text("2,,1"), std::invalid_argument);
}

TEST_CASE("named families") {
    CHECK(weyl_partition(3) == Partition{1, 1, 1});
    CHECK(weyl_partition(0) == Partition());
    CHECK(demazure_partition(2, 3) == Partition{2, 1});
    CHECK(demazure_partition(2, 4) == Partition{2, 2});
    CHECK(demazure_partition(1, 3) == Partition{1, 1, 1});
    CHECK(truncated_weyl_partition(5, 3) == Partition{2, 2, 1});
    CHECK(truncated_weyl_partition(0, 0) == Partition());
    CHECK(hook_partition(3, 2) == Partition{2, 1});
    CHECK(hook_partition(3, 3) == Partition{1, 1, 1});
    CHECK_THROWS_AS(hook_partition(2, 3), std::domain_error);
    CHECK_THROWS_AS(truncated_weyl_partition(1, 0), std::domain_error);
    CHECK_THROWS_AS(demazure_partition(0, 3), std::domain_error);
}

TEST_CASE("ses_transforms") {
    SesTransforms t = ses_transforms(Partition{2, 1});
    CHECK(t.plus == Partition{3});
    CHECK(t.minus == Partition{1});
    CHECK(t.shift == 1);

    t = ses_transforms(Partition{1, 1});
    CHECK(t.plus == Partition{2});
    CHECK(t.minus == Partition());
    CHECK(t.shift == 1);

    t = ses_transforms(Partition{2, 2});
    CHECK(t.plus == Partition{3, 1});
    CHECK(t.minus == Partition());
    CHECK(t.shift == 2);

    CHECK_THROWS_AS(ses_transforms(Partition{4}), SingletonPartition);
}

TEST_CASE("cv_dimension") {
    CHECK(cv_dimension(Partition()) == 1);
    CHECK(cv_dimension(Partition{2, 2, 1}) == 18);
    CHECK(cv_dimension(Partition{1, 1, 1}) == 8);
}

TEST_CASE("cv_char examples") {
    CHECK(cv_char(Partition{2}) == irr_char(2));

    GradedCharacter c = cv_char(Partition{1, 1});
    CHECK(c.at(2) == QPoly(1));
    CHECK(c.at(0) == QPoly{1, 1});
    CHECK(c.at(-2) == QPoly(1));

    GradedCharacter d = cv_char(Partition{2, 1});
    CHECK(d.at(3) == QPoly(1));
    CHECK(d.at(1) == QPoly{1, 1});
    CHECK(d.at(-1) == QPoly{1, 1});
    CHECK(d.at(-3) == QPoly(1));
}

TEST_CASE("enumerate_basis") {
    CHECK(enumerate_basis(Partition{1}).size() == 2);
    CHECK(enumerate_basis(Partition{2}).size() == 3);
    CHECK(enumerate_basis(Partition{2, 1}).size() == 6);
    CHECK(enumerate_basis(Partition()).size() == 1);
}

TEST_CASE("basis_char is the oracle") {
    CHECK(basis_char(Partition{1}) == irr_char(1));
    CHECK(basis_char(Partition{1, 1}) == cv_char(Partition{1, 1}));
    for (int n = 0; n <= 8; ++n)
        CHECK(basis_char(Partition{n}) == irr_char(n));
    for (const Partition& xi :
         {Partition{2, 2, 1}, Partition{3, 2}, Partition{4, 1, 1}, Partition{5, 5}})
        CHECK(basis_char(xi) == cv_char(xi));
}

TEST_CASE("weyl_char") {
    CHECK(weyl_char(0) == irr_char(0));
    GradedCharacter w2 = weyl_char(2);
    CHECK(w2.at(2) == QPoly(1));
    CHECK(w2.at(0) == QPoly{1, 1});

    auto d3 = decompose_irreducible(weyl_char(3));
    CHECK(d3.parts.at(3) == QPoly(1));
    CHECK(d3.parts.at(1) == QPoly{0, 1, 1});  // q + q^2

    for (int m = 0; m <= 8; ++m)
        CHECK(weyl_char(m) == cv_char(weyl_partition(m)));
}
