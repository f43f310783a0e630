/**
 * @file verify.hpp
 * @brief Named invariant sweeps: each suite runs a family of exact
 *        polynomial equalities over a pinned parameter range and reports
 *        pass/fail counts plus the failing tuples. Suites are the engine
 *        behind the CLI `verify` subcommand and the acceptance tests.
 */
#pragma once

#include "demazure/partition.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace demazure {

struct SweepFailure {
    std::string params;
    std::string expected;
    std::string actual;
};

struct SweepReport {
    std::string suite;
    std::string bounds;
    long passed = 0;
    long failed = 0;
    /// Advisory suites report failures without failing the build.
    bool advisory = false;
    std::vector<SweepFailure> failures;
    bool ok() const { return failed == 0; }
};

/// One independent check; empty optional means pass.
using CheckFn = std::function<std::optional<SweepFailure>()>;

/// Run the checks (across `jobs` workers when jobs > 1) and aggregate in
/// index order, so the report is identical at any worker count.
SweepReport run_suite(std::string suite, std::string bounds,
                      const std::vector<CheckFn>& checks, int jobs = 1);

SweepReport verify_qidentities(int max_n, int jobs = 1);
SweepReport verify_cv_oracle(long max_size, long max_part, int jobs = 1);
SweepReport verify_dims(long max, int jobs = 1);
SweepReport verify_hooks(long max_size, int jobs = 1);
SweepReport verify_kus(long max, int jobs = 1);
SweepReport verify_graded_mul(long max, int jobs = 1);
SweepReport verify_tensor_routes(long max, int jobs = 1);
SweepReport verify_level2(long max_size, long max_nm, int jobs = 1);
SweepReport verify_flag_existence(long max_part, long max_size, int jobs = 1);
SweepReport verify_matrices(long max, int jobs = 1);
SweepReport verify_pieri(long max_total, long bridge_max, long appendix_max, int jobs = 1);
/// Advisory: level-3 flags of D(2,w) (x) W_loc(m).
SweepReport verify_flags_level3(long max_w, long max_m, int jobs = 1);

/// Suite names accepted by run_named_suite, in canonical order.
std::vector<std::string> verify_suite_names();

/// Run a suite by name at its default bounds; throws std::invalid_argument
/// for an unknown name.
SweepReport run_named_suite(const std::string& name, int jobs = 1);

nlohmann::json sweep_report_to_json(const SweepReport& r);

/// All partitions with |xi| <= max_size and every part <= max_part,
/// including the zero partition.
std::vector<Partition> partitions_up_to(long max_size, long max_part);

}  // namespace demazure
