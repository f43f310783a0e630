#include "demazure/verify.hpp"

#include "demazure/closedforms.hpp"
#include "demazure/cvmod.hpp"
#include "demazure/json_io.hpp"
#include "demazure/macdonald.hpp"
#include "demazure/qalg.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace demazure {

namespace {

std::string char_text(const GradedCharacter& c) { return character_to_json(c).dump(); }
std::string parts_text(const std::map<int, QPoly>& parts) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, p] : parts) j[std::to_string(k)] = qpoly_to_json(p);
    return j.dump();
}

SweepFailure fail(std::string params, std::string expected, std::string actual) {
    return SweepFailure{std::move(params), std::move(expected), std::move(actual)};
}

std::optional<SweepFailure> expect_eq(const std::string& params, const QPoly& expected,
                                      const QPoly& actual) {
    if (expected == actual) return std::nullopt;
    return fail(params, expected.to_text(), actual.to_text());
}

std::optional<SweepFailure> expect_eq(const std::string& params, const GradedCharacter& expected,
                                      const GradedCharacter& actual) {
    if (expected == actual) return std::nullopt;
    return fail(params, char_text(expected), char_text(actual));
}

}  // namespace

SweepReport run_suite(std::string suite, std::string bounds,
                      const std::vector<CheckFn>& checks, int jobs) {
    SweepReport report;
    report.suite = std::move(suite);
    report.bounds = std::move(bounds);
    std::vector<std::optional<SweepFailure>> results(checks.size());
    auto run_one = [&](size_t i) {
        try {
            results[i] = checks[i]();
        } catch (const std::exception& e) {
            results[i] = fail("check #" + std::to_string(i), "no exception", e.what());
        }
    };
    if (jobs <= 1) {
        for (size_t i = 0; i < checks.size(); ++i) run_one(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        for (int t = 0; t < jobs; ++t)
            workers.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < checks.size(); i = next.fetch_add(1))
                    run_one(i);
            });
        for (auto& w : workers) w.join();
    }
    for (auto& r : results) {
        if (r) {
            ++report.failed;
            report.failures.push_back(std::move(*r));
        } else {
            ++report.passed;
        }
    }
    return report;
}

std::vector<Partition> partitions_up_to(long max_size, long max_part) {
    std::vector<Partition> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long budget, long cap) {
        out.push_back(Partition(cur));
        for (long p = std::min(budget, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(budget - p, p);
            cur.pop_back();
        }
    };
    rec(max_size, max_part);
    return out;
}

SweepReport verify_qidentities(int max_n, int jobs) {
    std::vector<CheckFn> checks;
    // Pascal recurrences
    for (int n = 1; n <= max_n; ++n)
        for (int r = 0; r <= n + 1; ++r) {
            if (r <= n)
                checks.push_back([n, r]() -> std::optional<SweepFailure> {
                    QPoly lhs = qbinom(n - 1, r).shifted(r) + qbinom(n - 1, r - 1);
                    return expect_eq("pascalA n=" + std::to_string(n) + " r=" + std::to_string(r),
                                     qbinom(n, r), lhs);
                });
            checks.push_back([n, r]() -> std::optional<SweepFailure> {
                QPoly lhs = qbinom(n, r) + qbinom(n, r - 1).shifted(n - r + 1);
                return expect_eq("pascalB n=" + std::to_string(n) + " r=" + std::to_string(r),
                                 qbinom(n + 1, r), lhs);
            });
        }
    // Hockey-stick
    const int hs = std::min(max_n, 20);
    for (int m = 1; m <= hs; ++m)
        for (int n = 0; n <= hs; ++n)
            checks.push_back([m, n]() -> std::optional<SweepFailure> {
                QPoly lhs;
                for (int i = 0; i <= n; ++i) lhs += qbinom(m + i, i).shifted(i);
                return expect_eq("hockey m=" + std::to_string(m) + " n=" + std::to_string(n),
                                 qbinom(n + m + 1, n), lhs);
            });
    // Alternating identity
    const int alt = std::min(max_n, 20);
    for (int n = 0; n <= alt; ++n)
        for (int i = 0; i <= n; ++i)
            checks.push_back([n, i]() -> std::optional<SweepFailure> {
                QPoly lhs;
                for (int k = 0; k <= i; ++k) {
                    QPoly t = qbinom(i, k).shifted(k * (n - i + k) - k * (k - 1) / 2);
                    lhs += (k % 2) ? -t : t;
                }
                return expect_eq("alternating n=" + std::to_string(n) + " i=" + std::to_string(i),
                                 qbinom(n, i) * qpochhammer(i), lhs);
            });
    // q-binomial theorem at x = q^n
    for (int i = 0; i <= std::min(max_n, 12); ++i)
        for (int n = 0; n <= 12; ++n)
            checks.push_back([i, n]() -> std::optional<SweepFailure> {
                QPoly lhs;
                for (int k = 0; k <= i; ++k) {
                    QPoly t = qbinom(i, k).shifted((i - k) * (i - k - 1) / 2 + n * k);
                    lhs += ((i - k) % 2) ? -t : t;
                }
                QPoly rhs(1);
                for (int j = 0; j < i; ++j)
                    rhs *= QPoly::monomial(n) - QPoly::monomial(j);
                return expect_eq("qbinthm i=" + std::to_string(i) + " n=" + std::to_string(n),
                                 rhs, lhs);
            });
    // recurrence vs exact-division construction, and q = 1 specialization
    for (int n = 0; n <= std::min(max_n, 20); ++n)
        for (int r = 0; r <= n; ++r) {
            checks.push_back([n, r]() -> std::optional<SweepFailure> {
                return expect_eq("division n=" + std::to_string(n) + " r=" + std::to_string(r),
                                 qbinom(n, r), qbinom_by_division(n, r));
            });
            checks.push_back([n, r]() -> std::optional<SweepFailure> {
                mpz_class b;
                mpz_bin_uiui(b.get_mpz_t(), n, r);
                mpz_class got = qbinom(n, r).eval_one();
                if (b == got) return std::nullopt;
                return fail("q=1 n=" + std::to_string(n) + " r=" + std::to_string(r),
                            b.get_str(), got.get_str());
            });
        }
    return run_suite("qidentities", "n <= " + std::to_string(max_n), checks, jobs);
}

SweepReport verify_cv_oracle(long max_size, long max_part, int jobs) {
    std::vector<CheckFn> checks;
    for (const Partition& xi : partitions_up_to(max_size, max_part)) {
        checks.push_back([xi]() -> std::optional<SweepFailure> {
            return expect_eq("recursion-vs-basis xi=(" + xi.to_text() + ")", basis_char(xi),
                             cv_char(xi));
        });
        checks.push_back([xi]() -> std::optional<SweepFailure> {
            mpz_class want = cv_dimension(xi);
            mpz_class dim = dimension(cv_char(xi));
            mpz_class card = enumerate_basis(xi).size();
            if (want == dim && want == card) return std::nullopt;
            return fail("dimension xi=(" + xi.to_text() + ")", want.get_str(),
                        dim.get_str() + "/" + card.get_str());
        });
        if (xi.num_parts() >= 2)
            checks.push_back([xi]() -> std::optional<SweepFailure> {
                SesTransforms t = ses_transforms(xi);
                bool size_ok = t.plus.size() == xi.size();
                bool dim_ok =
                    cv_dimension(xi) == cv_dimension(t.plus) + cv_dimension(t.minus);
                if (size_ok && dim_ok) return std::nullopt;
                return fail("ses-law xi=(" + xi.to_text() + ")", "size and dimension laws",
                            "plus=(" + t.plus.to_text() + ") minus=(" + t.minus.to_text() + ")");
            });
    }
    for (int m = 0; m <= 12; ++m) {
        checks.push_back([m]() -> std::optional<SweepFailure> {
            return expect_eq("weyl-closed m=" + std::to_string(m), cv_char(weyl_partition(m)),
                             weyl_char(m));
        });
        checks.push_back([m]() -> std::optional<SweepFailure> {
            mpz_class want;
            mpz_ui_pow_ui(want.get_mpz_t(), 2, m);
            mpz_class got = dimension(weyl_char(m));
            if (want == got) return std::nullopt;
            return fail("weyl-dim m=" + std::to_string(m), want.get_str(), got.get_str());
        });
    }
    for (int n = 0; n <= 10; ++n)
        checks.push_back([n]() -> std::optional<SweepFailure> {
            return expect_eq("level1-naming n=" + std::to_string(n), weyl_char(n),
                             cv_char(demazure_partition(1, n)));
        });
    return run_suite("cv-oracle",
                     "|xi| <= " + std::to_string(max_size) + ", parts <= " +
                         std::to_string(max_part),
                     checks, jobs);
}

SweepReport verify_dims(long max, int jobs) {
    std::vector<CheckFn> checks;
    for (long m = 1; m <= max; ++m)
        for (long n = 1; n <= max; ++n)
            checks.push_back([m, n]() -> std::optional<SweepFailure> {
                if (dim_sum_check(m, n)) return std::nullopt;
                return fail("dim-sum m=" + std::to_string(m) + " n=" + std::to_string(n),
                            "2^m (n+1)", "mismatch");
            });
    for (long m = 0; m <= std::min<long>(max, 6); ++m)
        for (const Partition& xi : partitions_up_to(6, 3))
            checks.push_back([m, xi]() -> std::optional<SweepFailure> {
                mpz_class want;
                mpz_ui_pow_ui(want.get_mpz_t(), 2, static_cast<unsigned long>(m));
                want *= cv_dimension(xi);
                mpz_class got =
                    dimension(tensor(weyl_char(static_cast<int>(m)), cv_char(xi)));
                if (want == got) return std::nullopt;
                return fail("mixed-dim m=" + std::to_string(m) + " xi=(" + xi.to_text() + ")",
                            want.get_str(), got.get_str());
            });
    return run_suite("dims", "m, n <= " + std::to_string(max), checks, jobs);
}

SweepReport verify_hooks(long max_size, int jobs) {
    std::vector<CheckFn> checks;
    for (long first = 1; first <= max_size; ++first)
        for (long ones = 0; first + ones <= max_size; ++ones)
            checks.push_back([first, ones]() -> std::optional<SweepFailure> {
                std::vector<long> parts{first};
                parts.insert(parts.end(), ones, 1);
                return expect_eq(
                    "hook first=" + std::to_string(first) + " ones=" + std::to_string(ones),
                    cv_char(Partition(std::move(parts))), hook_char_closed(first, ones));
            });
    return run_suite("hooks", "total size <= " + std::to_string(max_size), checks, jobs);
}

SweepReport verify_kus(long max, int jobs) {
    std::vector<CheckFn> checks;
    for (long k = 1; k <= max; ++k)
        for (long r = 0; k + r <= max; ++r) {
            checks.push_back([k, r]() -> std::optional<SweepFailure> {
                if (kus_recursion_wide(k, r)) return std::nullopt;
                return fail("wide k=" + std::to_string(k) + " r=" + std::to_string(r),
                            "character identity", "mismatch");
            });
            checks.push_back([k, r]() -> std::optional<SweepFailure> {
                if (kus_recursion_tall(k, r)) return std::nullopt;
                return fail("tall k=" + std::to_string(k) + " r=" + std::to_string(r),
                            "character identity", "mismatch");
            });
        }
    return run_suite("kus", "k + r <= " + std::to_string(max), checks, jobs);
}

SweepReport verify_graded_mul(long max, int jobs) {
    std::vector<CheckFn> checks;
    for (long m = 1; m <= max; ++m)
        for (long n = 1; n <= max; ++n) {
            checks.push_back([m, n]() -> std::optional<SweepFailure> {
                GradedCharacter prod =
                    tensor(weyl_char(static_cast<int>(m)), irr_char(static_cast<int>(n)));
                IrreducibleDecomposition want = decompose_irreducible(prod);
                IrreducibleDecomposition got = weyl_tensor_irr_multiplicities(m, n);
                if (want.parts == got.parts) return std::nullopt;
                return fail("multiplicity m=" + std::to_string(m) + " n=" + std::to_string(n),
                            parts_text(want.parts), parts_text(got.parts));
            });
            checks.push_back([m, n]() -> std::optional<SweepFailure> {
                GradedCharacter sum;
                for (const Partition& xi : weyl_tensor_irr_quotients(m, n)) sum += cv_char(xi);
                return expect_eq(
                    "quotient-sum m=" + std::to_string(m) + " n=" + std::to_string(n),
                    tensor(weyl_char(static_cast<int>(m)), irr_char(static_cast<int>(n))), sum);
            });
        }
    return run_suite("graded-mul", "m, n <= " + std::to_string(max), checks, jobs);
}

SweepReport verify_tensor_routes(long max, int jobs) {
    std::vector<CheckFn> checks;
    for (long n = 0; n <= max; ++n)
        for (long m = 0; m <= n; ++m) {
            checks.push_back([n, m]() -> std::optional<SweepFailure> {
                GradedCharacter direct =
                    tensor(weyl_char(static_cast<int>(n)), weyl_char(static_cast<int>(m)));
                return expect_eq("pieri-route n=" + std::to_string(n) + " m=" + std::to_string(m),
                                 direct, tensor_weyl_weyl_pieri_form(n, m));
            });
            checks.push_back([n, m]() -> std::optional<SweepFailure> {
                GradedCharacter direct =
                    tensor(weyl_char(static_cast<int>(n)), weyl_char(static_cast<int>(m)));
                return expect_eq(
                    "truncated-route n=" + std::to_string(n) + " m=" + std::to_string(m), direct,
                    tensor_weyl_weyl_truncated_form(n, m));
            });
            if (m >= 1)
                checks.push_back([n, m]() -> std::optional<SweepFailure> {
                    std::string params =
                        "quotient-route n=" + std::to_string(n) + " m=" + std::to_string(m);
                    GradedCharacter sum;
                    for (const FiltrationQuotient& fq : weyl_tensor_weyl_quotients(n, m)) {
                        long r = (m + n - fq.partition.size()) / 2;
                        if (fq.shift < 0 || fq.shift > r * (m - r))
                            return fail(params, "grade within [0, r(m-r)]",
                                        "g=" + std::to_string(fq.shift) + " r=" + std::to_string(r));
                        sum += shift(cv_char(fq.partition), static_cast<int>(fq.shift));
                    }
                    GradedCharacter direct =
                        tensor(weyl_char(static_cast<int>(n)), weyl_char(static_cast<int>(m)));
                    return expect_eq(params, direct, sum);
                });
        }
    return run_suite("tensor-routes", "0 <= m <= n <= " + std::to_string(max), checks, jobs);
}

SweepReport verify_level2(long max_size, long max_nm, int jobs) {
    std::vector<CheckFn> checks;
    for (long a = 0; 2 * a <= max_size; ++a)
        for (long b = 0; 2 * a + b <= max_size; ++b) {
            checks.push_back([a, b]() -> std::optional<SweepFailure> {
                std::vector<long> parts(a, 2);
                parts.insert(parts.end(), b, 1);
                return expect_eq("weyl-form a=" + std::to_string(a) + " b=" + std::to_string(b),
                                 cv_char(Partition(std::move(parts))), char_2a1b_weyl_form(a, b));
            });
            checks.push_back([a, b]() -> std::optional<SweepFailure> {
                std::vector<long> parts(a, 2);
                parts.insert(parts.end(), b, 1);
                GradedCharacter want = cv_char(Partition(std::move(parts)));
                FlagDecomposition form = char_2a1b_demazure_form(a, b);
                if (recompose(form) != want)
                    return fail("flag-form a=" + std::to_string(a) + " b=" + std::to_string(b),
                                char_text(want), char_text(recompose(form)));
                FlagDecomposition solved = demazure_flag_decompose(want, 2);
                if (solved.parts != form.parts)
                    return fail("flag-solver a=" + std::to_string(a) + " b=" + std::to_string(b),
                                parts_text(solved.parts), parts_text(form.parts));
                return std::nullopt;
            });
        }
    for (long n = 0; n <= max_nm; ++n)
        for (long m = 0; m <= n; ++m)
            checks.push_back([n, m]() -> std::optional<SweepFailure> {
                GradedCharacter prod =
                    tensor(weyl_char(static_cast<int>(n)), weyl_char(static_cast<int>(m)));
                FlagDecomposition want = demazure_flag_decompose(prod, 2);
                FlagDecomposition got = weyl_tensor_level2_multiplicities(n, m);
                if (want.parts == got.parts) return std::nullopt;
                return fail("corollary n=" + std::to_string(n) + " m=" + std::to_string(m),
                            parts_text(want.parts), parts_text(got.parts));
            });
    return run_suite("level2",
                     "2a + b <= " + std::to_string(max_size) + ", m <= n <= " +
                         std::to_string(max_nm),
                     checks, jobs);
}

SweepReport verify_flag_existence(long max_part, long max_size, int jobs) {
    std::vector<CheckFn> checks;
    for (const Partition& xi : partitions_up_to(max_size, max_part)) {
        long n1 = std::max<long>(xi.largest(), 1);
        for (long level = n1; level <= n1 + 2; ++level)
            checks.push_back([xi, level]() -> std::optional<SweepFailure> {
                std::string params =
                    "xi=(" + xi.to_text() + ") level=" + std::to_string(level);
                GradedCharacter want = cv_char(xi);
                try {
                    FlagDecomposition d = demazure_flag_decompose(want, static_cast<int>(level));
                    return expect_eq(params, want, recompose(d));
                } catch (const NoFlag& e) {
                    return fail(params, "flag exists", e.what());
                }
            });
    }
    checks.push_back([]() -> std::optional<SweepFailure> {
        try {
            demazure_flag_decompose(irr_char(3), 2);
        } catch (const NoFlag&) {
            return std::nullopt;
        }
        return fail("irr(3) level=2", "NoFlag", "flag found");
    });
    return run_suite("flag-existence",
                     "parts <= " + std::to_string(max_part) + ", |xi| <= " +
                         std::to_string(max_size) + ", level >= n1",
                     checks, jobs);
}

SweepReport verify_matrices(long max, int jobs) {
    std::vector<CheckFn> checks;
    for (long r = 1; r <= max; ++r)
        for (long i = 1; i <= max; ++i) {
            if (i <= r)
                checks.push_back([r, i]() -> std::optional<SweepFailure> {
                    mpz_class det = determinant(matrix_A(r, i));
                    if (det != 0) return std::nullopt;
                    return fail("A r=" + std::to_string(r) + " i=" + std::to_string(i),
                                "nonzero determinant", "0");
                });
            else if (r < i)
                checks.push_back([r, i]() -> std::optional<SweepFailure> {
                    mpz_class det = determinant(matrix_B(r, i));
                    if (det != 0) return std::nullopt;
                    return fail("B r=" + std::to_string(r) + " i=" + std::to_string(i),
                                "nonzero determinant", "0");
                });
        }
    for (long r = 2; r <= max; ++r)
        checks.push_back([r]() -> std::optional<SweepFailure> {
            mpz_class det = determinant(matrix_A(r, 2));
            if (det == 1) return std::nullopt;
            return fail("detA2 r=" + std::to_string(r), "1", det.get_str());
        });
    return run_suite("matrices", "r, i <= " + std::to_string(max), checks, jobs);
}

SweepReport verify_pieri(long max_total, long bridge_max, long appendix_max, int jobs) {
    std::vector<CheckFn> checks;
    for (long n = 0; n <= max_total; ++n)
        for (long m = 0; m <= n && n + m <= max_total; ++m)
            checks.push_back([n, m]() -> std::optional<SweepFailure> {
                try {
                    pieri_expand(n, m);  // throws InconsistentPieri on route mismatch
                    return std::nullopt;
                } catch (const InconsistentPieri& e) {
                    return fail("routes n=" + std::to_string(n) + " m=" + std::to_string(m),
                                "route agreement", e.what());
                }
            });
    for (long m = 0; m <= bridge_max; ++m)
        checks.push_back([m]() -> std::optional<SweepFailure> {
            return expect_eq("bridge m=" + std::to_string(m), weyl_char(static_cast<int>(m)),
                             sympoly_to_character(macdonald_p(m, 0)));
        });
    for (long m = 0; m <= 10; ++m)
        checks.push_back([m]() -> std::optional<SweepFailure> {
            if (gm(m) == gm_closed(m)) return std::nullopt;
            return fail("gm m=" + std::to_string(m), "series equals closed form", "mismatch");
        });
    for (long n = 0; n <= appendix_max; ++n)
        for (long m = 0; m <= n; ++m)
            checks.push_back([n, m]() -> std::optional<SweepFailure> {
                std::string params = "appendix n=" + std::to_string(n) + " m=" + std::to_string(m);
                auto phi = pieri_expand(n, m);
                if (phi.size() != static_cast<size_t>(m + 1))
                    return fail(params, std::to_string(m + 1) + " terms",
                                std::to_string(phi.size()) + " terms");
                QRat clear(qpochhammer(static_cast<int>(m)));
                GradedCharacter sum;
                for (const auto& [lam, coeff] : phi) {
                    long i = lam.second;
                    QRat cleared = clear * coeff;
                    QRat pieri_term(qbinom(static_cast<int>(n), static_cast<int>(i)) *
                                    qbinom(static_cast<int>(m), static_cast<int>(i)) *
                                    qpochhammer(static_cast<int>(i)));
                    if (cleared != pieri_term)
                        return fail(params + " lambda=(" + std::to_string(lam.first) + "," +
                                        std::to_string(lam.second) + ")",
                                    pieri_term.to_text(), cleared.to_text());
                    sum += weyl_char(static_cast<int>(lam.first - lam.second)) * cleared.num();
                }
                return expect_eq(params,
                                 tensor(weyl_char(static_cast<int>(n)),
                                        weyl_char(static_cast<int>(m))),
                                 sum);
            });
    return run_suite("pieri",
                     "n + m <= " + std::to_string(max_total) + ", bridge m <= " +
                         std::to_string(bridge_max) + ", appendix n <= " +
                         std::to_string(appendix_max),
                     checks, jobs);
}

SweepReport verify_flags_level3(long max_w, long max_m, int jobs) {
    std::vector<CheckFn> checks;
    for (long w = 0; w <= max_w; ++w)
        for (long m = 0; m <= max_m; ++m)
            checks.push_back([w, m]() -> std::optional<SweepFailure> {
                std::string params = "w=" + std::to_string(w) + " m=" + std::to_string(m);
                GradedCharacter prod = tensor(cv_char(demazure_partition(2, w)),
                                              weyl_char(static_cast<int>(m)));
                try {
                    FlagDecomposition d = demazure_flag_decompose(prod, 3);
                    return expect_eq(params, prod, recompose(d));
                } catch (const NoFlag& e) {
                    return fail(params, "level-3 flag", e.what());
                }
            });
    SweepReport r = run_suite("flags-level3",
                              "w <= " + std::to_string(max_w) + ", m <= " +
                                  std::to_string(max_m),
                              checks, jobs);
    r.advisory = true;
    return r;
}

std::vector<std::string> verify_suite_names() {
    return {"qidentities", "cv-oracle",  "dims",    "hooks",          "kus",
            "graded-mul",  "tensor-routes", "level2", "flag-existence", "matrices",
            "pieri",       "flags-level3"};
}

SweepReport run_named_suite(const std::string& name, int jobs) {
    if (name == "qidentities") return verify_qidentities(30, jobs);
    if (name == "cv-oracle") return verify_cv_oracle(12, 5, jobs);
    if (name == "dims") return verify_dims(10, jobs);
    if (name == "hooks") return verify_hooks(14, jobs);
    if (name == "kus") return verify_kus(12, jobs);
    if (name == "graded-mul") return verify_graded_mul(10, jobs);
    if (name == "tensor-routes") return verify_tensor_routes(10, jobs);
    if (name == "level2") return verify_level2(14, 10, jobs);
    if (name == "flag-existence") return verify_flag_existence(3, 10, jobs);
    if (name == "matrices") return verify_matrices(12, jobs);
    if (name == "pieri") return verify_pieri(12, 10, 8, jobs);
    if (name == "flags-level3") return verify_flags_level3(8, 4, jobs);
    throw std::invalid_argument("unknown verify suite: " + name);
}

nlohmann::json sweep_report_to_json(const SweepReport& r) {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"params", f.params}, {"expected", f.expected}, {"actual", f.actual}});
    return nlohmann::json{{"suite", r.suite},     {"bounds", r.bounds},
                          {"passed", r.passed},   {"failed", r.failed},
                          {"advisory", r.advisory}, {"failures", fails}};
}

}  // namespace demazure
