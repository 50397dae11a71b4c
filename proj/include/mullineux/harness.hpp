#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mullineux/golden.hpp"
#include "mullineux/partition.hpp"

namespace mullineux::harness {

struct Counterexample {
    int e = 0;
    int n = 0;
    int w = 0; // 0 where the check has no weight
    std::string detail;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Outcome of one suite. A failing report always carries the failure with
/// the smallest (n, w, e); `failures` counts all of them.
struct VerificationReport {
    std::string name;
    std::string params;
    bool passed = true;
    std::int64_t checked = 0;
    std::int64_t failures = 0;
    std::optional<Counterexample> counterexample;
    std::vector<std::string> notes;
    double seconds = 0.0;
};

/// Parameter ranges shared by the suites. `n_max` is the size bound; `aux`
/// is a second bound where a suite needs one (core size for round trips).
struct Bounds {
    std::vector<int> e;
    int n_max = 0;
    int aux = 0;
};

VerificationReport verify_involution(const std::vector<int>& es, int n_max);
VerificationReport verify_me_set(const std::vector<int>& es, int n_max);
/// Fixed-point counts vs the partition classes and MF_e coefficients.
VerificationReport verify_main(const std::vector<int>& es, int n_max);
/// MF_e(-q) vs (-1)^n mf_e(n), the direct product, and embedded prefixes.
VerificationReport verify_alternating(const std::vector<int>& es, int n_max);
/// Per-(core, weight) fixed-point counts vs κ(e/2, w) (e even) or
/// g_e(w/2)·[w even] (e odd).
VerificationReport verify_blocks(const std::vector<int>& es, int n_max);
VerificationReport verify_nvector(const std::vector<int>& es, int n_max);
/// SC_e vs self-conjugate core enumeration; for e = 4 also the embedded
/// prefix and the weight-0 column of the reference table.
VerificationReport verify_sc(const std::vector<int>& es, int n_max);
/// f_4 prefix, embedded cubic-partition prefix, f_e = κ(e/2, ·) for even e.
VerificationReport verify_multipliers(const std::vector<int>& es, int n_max);
/// Bar-core counts, order independence and runner avoidance for t = 2e,
/// e even, on odd distinct parts up to size_max.
VerificationReport verify_barcore(const std::vector<int>& es, int size_max);
/// reconstruct ∘ compute_symbol on e-regular partitions up to n_max, and
/// n-vector round trips on e-cores up to core_max.
VerificationReport verify_roundtrip(const std::vector<int>& es, int n_max, int core_max);
/// Grid reproduction by brute force, closed form and MF_e(x,q), each
/// compared with `expected` when given, and with each other always.
VerificationReport verify_table(int e, int n_max, int w_max,
                                const golden::GoldenTable* expected);
/// verify_table(4, 20, 5, reference table).
VerificationReport verify_table_e4();

enum class TableRoute { brute_force, closed_form, series };

/// grid[n-1][w] for 1 ≤ n ≤ n_max, 0 ≤ w ≤ w_max.
std::vector<std::vector<std::int64_t>> fixed_point_grid(int e, int n_max, int w_max, TableRoute route);

/// Fixed points of n, memoized across suites.
const std::vector<Partition>& cached_fixed_points(int n, int e);

/// A registered suite with its default bounds.
struct Suite {
    std::string name;
    std::string description;
    Bounds defaults;
    std::function<VerificationReport(const Bounds&)> run;
};

const std::vector<Suite>& suites();

/// A theorem-level statement and the suite that owns it.
struct Claim {
    std::string id;
    std::string statement;
    std::string owner;
};

const std::vector<Claim>& claims();
/// Claims whose owner is not a registered suite.
std::vector<std::string> unowned_claims();

/// Runs the named suites (all when empty) concurrently; results keep the
/// order of `names`. Unknown names throw std::invalid_argument. Any bound
/// left at its zero value in `overrides` falls back to the suite default.
std::vector<VerificationReport> run_suites(const std::vector<std::string>& names,
                                           const Bounds& overrides = {});

std::string render_report(const VerificationReport& report);

} // namespace mullineux::harness
