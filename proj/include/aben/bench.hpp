#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "aben/params.hpp"

namespace aben {

enum class BenchOp { setup, keygen, encrypt, decrypt };
enum class WorkloadShape { and_chain, k_of_n };

const char* to_string(BenchOp op);

// One sweep: (scheme × op × level × attribute count) cells, `reps` timed
// executions each. Attribute counts default to 1..30 and repetitions to 100.
struct BenchPlan {
    bool run_cp = true;
    bool run_kp = true;
    std::vector<BenchOp> ops{BenchOp::setup, BenchOp::keygen, BenchOp::encrypt,
                             BenchOp::decrypt};
    std::vector<unsigned> attr_counts;  // empty → 1..30
    std::vector<int> levels{80, 112, 128};
    unsigned reps = 100;
    uint64_t seed = 1;
    WorkloadShape shape = WorkloadShape::and_chain;
    unsigned k = 1;       // threshold for k_of_n
    unsigned warmup = 0;  // untimed executions before the measured reps
};

struct BenchRecord {
    std::string scheme;  // "cp" | "kp"
    std::string op;      // "setup" | "keygen" | "encrypt" | "decrypt"
    int sec_level = 0;
    unsigned n_attrs = 0;
    unsigned rep = 0;
    uint64_t duration_ns = 0;
    uint64_t size_bytes = 0;
};

struct BenchSummary {
    std::string scheme;
    std::string op;
    int sec_level = 0;
    unsigned n_attrs = 0;
    double mean_ns = 0;
    double std_ns = 0;  // sample (n−1) standard deviation
    uint64_t min_ns = 0;
    uint64_t max_ns = 0;
};

// Source of group parameters per level; the default generates fresh ones
// (once per level, reused across every cell of that level). Tests inject
// pre-generated fixtures here.
using ParamsSource = std::function<GroupParams(int level, Rng&)>;

// Workload per cell: N attributes named a01..aN (zero-padded to equal
// width). and_chain uses the N-ary AND policy over them; k_of_n uses
// "k of (a01, …, aN)". The key/header attribute set is always the full set,
// so decryption touches all selected leaves. Inputs of each timed operation
// are prebuilt outside the timed region; hash-to-group work belonging to the
// operation itself stays inside it. Timing is wall-clock monotonic,
// single-threaded, one operation per region.
// Throws PlanInfeasible for unusable plans (zero reps, zero attribute
// counts, k out of range for the sweep, empty op/level lists).
std::vector<BenchRecord> run_plan(const BenchPlan& plan,
                                  const ParamsSource& params = {});

// Per-cell mean / sample stddev / min / max, sorted like the raw records.
// Throws EmptyCell on empty input.
std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records);

// Raw columns:     scheme,op,sec_level,n_attrs,rep,duration_ns,size_bytes
// Summary columns: scheme,op,sec_level,n_attrs,mean_ns,std_ns,min_ns,max_ns
// Header row always present; rows sorted by (scheme, op, sec_level, n_attrs,
// rep). Optional metadata lines are written before the header as "# …"
// comments (readers skip them).
void emit_csv(const std::vector<BenchRecord>& records, const std::string& path,
              const std::vector<std::string>& comments = {});
void emit_csv(const std::vector<BenchSummary>& summaries,
              const std::string& path,
              const std::vector<std::string>& comments = {});

// Re-parse of an emitted raw CSV (testing oracle and plotting aid).
std::vector<BenchRecord> parse_csv(const std::string& path);

}  // namespace aben
