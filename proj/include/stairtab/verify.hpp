#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stairtab/json_io.hpp"

namespace stairtab {

enum class TheoremId {
    thm1,
    thm2,
    thm3,
    thm4,
    cor_tr_sym,
    prop_tr,
    cor_final,
    jdt_laws,
    psi_laws,
};

std::string to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& s);

/// Parameters of a single verification case; only the fields a theorem
/// uses need to be present.
struct VerifyParams {
    std::optional<int> n;
    std::optional<Partition> mu;
    std::optional<Partition> lambda;
    std::optional<IndexSet> set;
    std::optional<IndexSet> set2;
    std::optional<int> letter;
    std::optional<int> m;
    std::optional<long> random_cases;
    std::optional<std::uint64_t> seed;
};

struct VerifyReport {
    TheoremId theorem = TheoremId::thm1;
    VerifyParams params;
    bool pass = false;
    std::optional<Json> counterexample;  // present exactly when pass is false
    std::chrono::milliseconds elapsed{0};
};

/// Runs one theorem check; throws std::invalid_argument on parameter
/// violations (missing fields, mu ⊄ δ(n), and so on).
VerifyReport run_verify(TheoremId id, const VerifyParams& params);

struct SweepOptions {
    int n_max = 3;
    int m = 3;
    int size_max = 6;
    int jobs = 1;
};

/// All admissible parameter combinations within the bounds, evaluated
/// in canonical order (parallel execution preserves the order).
std::vector<VerifyReport> sweep(TheoremId id, const SweepOptions& options);

bool all_pass(std::span<const VerifyReport> reports);

/// JSON lines, one report per line, stable field order; elapsed time is
/// deliberately not serialized so identical inputs give identical bytes.
void emit_report_json(std::ostream& os, std::span<const VerifyReport> reports);
/// Human-readable table, one row per report, with elapsed times.
void emit_report_summary(std::ostream& os, std::span<const VerifyReport> reports);

Json report_to_json(const VerifyReport& report);

/// Seed from STAIRTAB_SEED when set, otherwise a fixed default.
std::uint64_t default_seed();

/// Parameter-space helpers shared by sweeps, tests and the CLI.
std::vector<Partition> subpartitions(const Partition& bound);
std::vector<Partition> partitions_up_to(int max_size);
std::vector<IndexSet> all_index_sets(int m);

}  // namespace stairtab
