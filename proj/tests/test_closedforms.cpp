#include <doctest.h>

#include "demazure/closedforms.hpp"
#include "demazure/cvmod.hpp"

using namespace demazure;

TEST_CASE("hook_char_closed") {
    // wide family (k+r, 1^k): k=1, r=1 gives ch V(3) + q ch V(1)
    GradedCharacter h = hook_char_closed(2, 1);
    CHECK(h == irr_char(3) + shift(irr_char(1), 1));
    // degenerate column: just an irreducible
    CHECK(hook_char_closed(4, 0) == irr_char(4));
    // tall families agree with the recursion
    CHECK(hook_char_closed(1, 2) == cv_char(Partition{1, 1, 1}));
    CHECK(hook_char_closed(1, 3) == cv_char(Partition{1, 1, 1, 1}));
    CHECK(hook_char_closed(2, 5) == cv_char(Partition{2, 1, 1, 1, 1, 1}));
    // sweep all shapes of total size <= 9
    for (long first = 1; first <= 9; ++first)
        for (long ones = 0; first + ones <= 9; ++ones) {
            std::vector<long> parts{first};
            parts.insert(parts.end(), ones, 1);
            CHECK(hook_char_closed(first, ones) == cv_char(Partition(std::move(parts))));
        }
    CHECK_THROWS_AS(hook_char_closed(0, 2), ShapeNotHook);
}

TEST_CASE("kus recursions") {
    for (long k = 1; k <= 5; ++k)
        for (long r = 0; k + r <= 7; ++r) {
            CHECK(kus_recursion_wide(k, r));
            CHECK(kus_recursion_tall(k, r));
        }
}

TEST_CASE("weyl_tensor_irr_quotients") {
    auto q21 = weyl_tensor_irr_quotients(2, 1);
    REQUIRE(q21.size() == 2);
    CHECK(q21[0] == Partition{1});
    CHECK(q21[1] == Partition{2, 1});

    // character sums against the direct tensor
    for (long m = 1; m <= 6; ++m)
        for (long n = 1; n <= 6; ++n) {
            GradedCharacter sum;
            for (const Partition& xi : weyl_tensor_irr_quotients(m, n)) sum += cv_char(xi);
            CHECK(sum == tensor(weyl_char(static_cast<int>(m)), irr_char(static_cast<int>(n))));
            CHECK(dim_sum_check(m, n));
        }
}

TEST_CASE("weyl_tensor_irr_multiplicities") {
    auto d12 = weyl_tensor_irr_multiplicities(1, 2);
    CHECK(d12.parts.at(3) == QPoly(1));
    CHECK(d12.parts.at(1) == QPoly(1));

    auto d21 = weyl_tensor_irr_multiplicities(2, 1);
    CHECK(d21.parts.at(3) == QPoly(1));
    CHECK(d21.parts.at(1) == QPoly{1, 1});

    for (long m = 1; m <= 7; ++m)
        for (long n = 1; n <= 7; ++n) {
            auto got = weyl_tensor_irr_multiplicities(m, n);
            auto want = decompose_irreducible(
                tensor(weyl_char(static_cast<int>(m)), irr_char(static_cast<int>(n))));
            CHECK(got.parts == want.parts);
        }
}

TEST_CASE("char_2a1b forms") {
    CHECK(char_2a1b_weyl_form(0, 3) == weyl_char(3));
    CHECK(char_2a1b_weyl_form(1, 0) == irr_char(2));
    CHECK(char_2a1b_weyl_form(1, 1) == weyl_char(3) - shift(weyl_char(1), 2));
    CHECK(char_2a1b_weyl_form(1, 1) == cv_char(Partition{2, 1}));

    auto f = char_2a1b_demazure_form(1, 2);
    CHECK(f.level == 2);
    CHECK(f.parts.at(4) == QPoly(1));
    CHECK(f.parts.at(2) == QPoly::monomial(2));
    CHECK(recompose(f) == cv_char(Partition{2, 1, 1}));

    auto g = char_2a1b_demazure_form(3, 0);
    CHECK(g.parts.size() == 1);
    CHECK(g.parts.at(6) == QPoly(1));

    for (long a = 0; a <= 4; ++a)
        for (long b = 0; 2 * a + b <= 9; ++b) {
            std::vector<long> parts(a, 2);
            parts.insert(parts.end(), b, 1);
            GradedCharacter want = cv_char(Partition(std::move(parts)));
            CHECK(char_2a1b_weyl_form(a, b) == want);
            CHECK(recompose(char_2a1b_demazure_form(a, b)) == want);
        }
}

TEST_CASE("weyl tensor weyl routes") {
    GradedCharacter t11 = tensor(weyl_char(1), weyl_char(1));
    CHECK(t11.at(2) == QPoly(1));
    CHECK(t11.at(0) == QPoly(2));
    CHECK(tensor_weyl_weyl_pieri_form(1, 1) == t11);
    CHECK(tensor_weyl_weyl_truncated_form(1, 1) == t11);
    CHECK(tensor_weyl_weyl_pieri_form(5, 0) == weyl_char(5));

    for (long n = 0; n <= 6; ++n)
        for (long m = 0; m <= n; ++m) {
            GradedCharacter direct =
                tensor(weyl_char(static_cast<int>(n)), weyl_char(static_cast<int>(m)));
            CHECK(tensor_weyl_weyl_pieri_form(n, m) == direct);
            CHECK(tensor_weyl_weyl_truncated_form(n, m) == direct);
            if (m >= 1) {
                GradedCharacter sum;
                for (const auto& fq : weyl_tensor_weyl_quotients(n, m)) {
                    long r = (m + n - fq.partition.size()) / 2;
                    CHECK(fq.shift >= 0);
                    CHECK(fq.shift <= r * (m - r));
                    sum += shift(cv_char(fq.partition), static_cast<int>(fq.shift));
                }
                CHECK(sum == direct);
            }
        }
    CHECK_THROWS_AS(tensor_weyl_weyl_truncated_form(1, 2), OrderViolation);
    CHECK_THROWS_AS(weyl_tensor_weyl_quotients(1, 2), OrderViolation);
}

TEST_CASE("weyl_tensor_level2_multiplicities") {
    auto f11 = weyl_tensor_level2_multiplicities(1, 1);
    CHECK(f11.parts.at(2) == QPoly(1));
    CHECK(f11.parts.at(0) == QPoly(1));

    for (long n = 0; n <= 6; ++n)
        for (long m = 0; m <= n; ++m) {
            GradedCharacter prod =
                tensor(weyl_char(static_cast<int>(n)), weyl_char(static_cast<int>(m)));
            auto want = demazure_flag_decompose(prod, 2);
            auto got = weyl_tensor_level2_multiplicities(n, m);
            CHECK(got.parts == want.parts);
        }
    CHECK_THROWS_AS(weyl_tensor_level2_multiplicities(2, 3), OrderViolation);
}

TEST_CASE("binomial matrices") {
    auto a1 = matrix_A(5, 1);
    CHECK(a1.entries == std::vector<std::vector<mpz_class>>{{1}});
    CHECK(determinant(a1) == 1);
    for (long r = 2; r <= 8; ++r) CHECK(determinant(matrix_A(r, 2)) == 1);
    CHECK(is_invertible(matrix_B(1, 3)));
    for (long r = 1; r <= 8; ++r)
        for (long i = 1; i <= 8; ++i) {
            if (i <= r) CHECK(is_invertible(matrix_A(r, i)));
            if (r < i) CHECK(is_invertible(matrix_B(r, i)));
        }
    CHECK_THROWS_AS(matrix_A(2, 3), std::domain_error);
    CHECK_THROWS_AS(matrix_B(3, 3), std::domain_error);
}
