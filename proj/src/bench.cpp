#include "aben/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "aben/cpabe.hpp"
#include "aben/errors.hpp"
#include "aben/kpabe.hpp"
#include "aben/serial.hpp"

namespace aben {

const char* to_string(BenchOp op) {
    switch (op) {
        case BenchOp::setup: return "setup";
        case BenchOp::keygen: return "keygen";
        case BenchOp::encrypt: return "encrypt";
        case BenchOp::decrypt: return "decrypt";
    }
    return "?";
}

namespace {

template <class F>
uint64_t timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    auto ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    return ns > 0 ? static_cast<uint64_t>(ns) : 1;
}

// a01..aN, zero-padded to equal width so per-attribute serialized sizes (and
// thus header growth) stay exactly affine in N.
std::vector<std::string> bench_attr_names(unsigned n) {
    size_t width = std::max<size_t>(2, std::to_string(n).size());
    std::vector<std::string> names;
    names.reserve(n);
    for (unsigned i = 1; i <= n; ++i) {
        std::string num = std::to_string(i);
        names.push_back("a" + std::string(width - num.size(), '0') + num);
    }
    return names;
}

AccessTree bench_policy(WorkloadShape shape, unsigned k,
                        const std::vector<std::string>& names) {
    if (shape == WorkloadShape::and_chain && names.size() == 1)
        return AccessTree{AccessNode::leaf(names[0])};
    std::vector<AccessNode> leaves;
    leaves.reserve(names.size());
    for (const std::string& a : names) leaves.push_back(AccessNode::leaf(a));
    unsigned threshold = shape == WorkloadShape::and_chain
                             ? static_cast<unsigned>(leaves.size())
                             : k;
    return AccessTree{AccessNode::gate(threshold, std::move(leaves))};
}

struct CellKey {
    const char* scheme;
    BenchOp op;
    int level;
    unsigned n;
};

void push_record(std::vector<BenchRecord>& out, const CellKey& cell,
                 unsigned rep, uint64_t ns, uint64_t size) {
    BenchRecord rec;
    rec.scheme = cell.scheme;
    rec.op = to_string(cell.op);
    rec.sec_level = cell.level;
    rec.n_attrs = cell.n;
    rec.rep = rep;
    rec.duration_ns = ns;
    rec.size_bytes = size;
    out.push_back(std::move(rec));
}

void run_cp_cell(const BenchPlan& plan, const CellKey& cell,
                 const GroupParams& params, Rng& rng,
                 std::vector<BenchRecord>& out) {
    std::vector<std::string> names = bench_attr_names(cell.n);
    AttributeSet attrs(names);
    AccessTree policy = bench_policy(plan.shape, plan.k, names);

    // Everything the timed operation consumes is prebuilt here; the
    // operation's own hash-to-group work stays inside the timed region.
    std::optional<std::pair<CpPublicParams, CpMasterKey>> keys;
    if (cell.op != BenchOp::setup) keys.emplace(cp_setup(params, rng));

    std::optional<CpPrivateKey> dec_key;
    std::optional<CpHeader> dec_header;
    uint64_t dec_size = 0;
    if (cell.op == BenchOp::decrypt) {
        if (!satisfies(policy, attrs))
            throw PlanInfeasible("generated workload cannot decrypt");
        dec_key.emplace(cp_keygen(keys->first, keys->second, attrs, rng));
        CpEncryption enc = cp_encrypt(keys->first, policy, rng);
        dec_size = serialize_cp_header(enc.header, params).size();
        dec_header.emplace(std::move(enc.header));
    }

    auto one = [&](bool record, unsigned rep) {
        uint64_t ns = 0, size = 0;
        switch (cell.op) {
            case BenchOp::setup: {
                std::optional<std::pair<CpPublicParams, CpMasterKey>> res;
                ns = timed([&] { res.emplace(cp_setup(params, rng)); });
                size = serialize_cp_public(res->first).size();
                break;
            }
            case BenchOp::keygen: {
                std::optional<CpPrivateKey> res;
                ns = timed(
                    [&] { res.emplace(cp_keygen(keys->first, keys->second, attrs, rng)); });
                size = serialize_cp_key(*res, params).size();
                break;
            }
            case BenchOp::encrypt: {
                std::optional<CpEncryption> res;
                ns = timed([&] { res.emplace(cp_encrypt(keys->first, policy, rng)); });
                size = serialize_cp_header(res->header, params).size();
                break;
            }
            case BenchOp::decrypt: {
                std::optional<GtElement> res;
                ns = timed(
                    [&] { res.emplace(cp_decrypt(keys->first, *dec_key, *dec_header)); });
                size = dec_size;
                break;
            }
        }
        if (record) push_record(out, cell, rep, ns, size);
    };
    for (unsigned w = 0; w < plan.warmup; ++w) one(false, 0);
    for (unsigned rep = 0; rep < plan.reps; ++rep) one(true, rep);
}

void run_kp_cell(const BenchPlan& plan, const CellKey& cell,
                 const GroupParams& params, Rng& rng,
                 std::vector<BenchRecord>& out) {
    std::vector<std::string> names = bench_attr_names(cell.n);
    AttributeSet attrs(names);
    AccessTree policy = bench_policy(plan.shape, plan.k, names);

    std::optional<std::pair<KpPublicParams, KpMasterKey>> keys;
    if (cell.op != BenchOp::setup) keys.emplace(kp_setup(params, names, rng));

    std::optional<KpPrivateKey> dec_key;
    std::optional<KpHeader> dec_header;
    uint64_t dec_size = 0;
    if (cell.op == BenchOp::decrypt) {
        if (!satisfies(policy, attrs))
            throw PlanInfeasible("generated workload cannot decrypt");
        dec_key.emplace(kp_keygen(keys->first, keys->second, policy, rng));
        KpEncryption enc = kp_encrypt(keys->first, attrs, rng);
        dec_size = serialize_kp_header(enc.header, params).size();
        dec_header.emplace(std::move(enc.header));
    }

    auto one = [&](bool record, unsigned rep) {
        uint64_t ns = 0, size = 0;
        switch (cell.op) {
            case BenchOp::setup: {
                std::optional<std::pair<KpPublicParams, KpMasterKey>> res;
                ns = timed([&] { res.emplace(kp_setup(params, names, rng)); });
                size = serialize_kp_public(res->first).size();
                break;
            }
            case BenchOp::keygen: {
                std::optional<KpPrivateKey> res;
                ns = timed(
                    [&] { res.emplace(kp_keygen(keys->first, keys->second, policy, rng)); });
                size = serialize_kp_key(*res, params).size();
                break;
            }
            case BenchOp::encrypt: {
                std::optional<KpEncryption> res;
                ns = timed([&] { res.emplace(kp_encrypt(keys->first, attrs, rng)); });
                size = serialize_kp_header(res->header, params).size();
                break;
            }
            case BenchOp::decrypt: {
                std::optional<GtElement> res;
                ns = timed(
                    [&] { res.emplace(kp_decrypt(keys->first, *dec_key, *dec_header)); });
                size = dec_size;
                break;
            }
        }
        if (record) push_record(out, cell, rep, ns, size);
    };
    for (unsigned w = 0; w < plan.warmup; ++w) one(false, 0);
    for (unsigned rep = 0; rep < plan.reps; ++rep) one(true, rep);
}

}  // namespace

std::vector<BenchRecord> run_plan(const BenchPlan& plan,
                                  const ParamsSource& params) {
    if (plan.reps < 1) throw PlanInfeasible("repetitions must be >= 1");
    if (!plan.run_cp && !plan.run_kp) throw PlanInfeasible("no scheme selected");
    if (plan.ops.empty()) throw PlanInfeasible("no operations selected");
    if (plan.levels.empty()) throw PlanInfeasible("no security levels selected");

    std::vector<unsigned> counts = plan.attr_counts;
    if (counts.empty())
        for (unsigned n = 1; n <= 30; ++n) counts.push_back(n);
    for (unsigned n : counts)
        if (n < 1) throw PlanInfeasible("attribute counts must be >= 1");
    if (plan.shape == WorkloadShape::k_of_n) {
        unsigned min_n = *std::min_element(counts.begin(), counts.end());
        if (plan.k < 1 || plan.k > min_n)
            throw PlanInfeasible("k outside 1..min(attribute counts)");
    }

    ParamsSource source =
        params ? params : [](int level, Rng& rng) {
            return GroupParams::generate(level, rng);
        };

    Rng master(plan.seed);
    std::map<int, GroupParams> by_level;
    for (int level : plan.levels) {
        if (by_level.count(level)) continue;
        Rng prng = master.fork("params/" + std::to_string(level));
        by_level.emplace(level, source(level, prng));
    }

    std::vector<BenchRecord> out;
    for (const char* scheme : {"cp", "kp"}) {
        if (scheme[0] == 'c' ? !plan.run_cp : !plan.run_kp) continue;
        for (BenchOp op : plan.ops) {
            for (int level : plan.levels) {
                const GroupParams& gp = by_level.at(level);
                for (unsigned n : counts) {
                    CellKey cell{scheme, op, level, n};
                    std::ostringstream label;
                    label << scheme << "/" << to_string(op) << "/" << level
                          << "/" << n;
                    Rng rng = master.fork(label.str());
                    if (scheme[0] == 'c')
                        run_cp_cell(plan, cell, gp, rng, out);
                    else
                        run_kp_cell(plan, cell, gp, rng, out);
                }
            }
        }
    }
    return out;
}

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records) {
    if (records.empty()) throw EmptyCell("summarize: no records");
    using Key = std::tuple<std::string, std::string, int, unsigned>;
    std::map<Key, std::vector<uint64_t>> cells;
    for (const BenchRecord& r : records)
        cells[{r.scheme, r.op, r.sec_level, r.n_attrs}].push_back(r.duration_ns);

    std::vector<BenchSummary> out;
    out.reserve(cells.size());
    for (const auto& [key, durations] : cells) {
        BenchSummary s;
        s.scheme = std::get<0>(key);
        s.op = std::get<1>(key);
        s.sec_level = std::get<2>(key);
        s.n_attrs = std::get<3>(key);
        double n = static_cast<double>(durations.size());
        double sum = 0;
        s.min_ns = durations.front();
        s.max_ns = durations.front();
        for (uint64_t d : durations) {
            sum += static_cast<double>(d);
            s.min_ns = std::min(s.min_ns, d);
            s.max_ns = std::max(s.max_ns, d);
        }
        s.mean_ns = sum / n;
        double ss = 0;
        for (uint64_t d : durations) {
            double delta = static_cast<double>(d) - s.mean_ns;
            ss += delta * delta;
        }
        s.std_ns = durations.size() > 1 ? std::sqrt(ss / (n - 1)) : 0.0;
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

constexpr const char* kRawHeader =
    "scheme,op,sec_level,n_attrs,rep,duration_ns,size_bytes";
constexpr const char* kSummaryHeader =
    "scheme,op,sec_level,n_attrs,mean_ns,std_ns,min_ns,max_ns";

std::ofstream open_csv(const std::string& path,
                       const std::vector<std::string>& comments,
                       const char* header) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open \"" + path + "\" for writing");
    for (const std::string& c : comments) out << "# " << c << "\n";
    out << header << "\n";
    return out;
}

std::string format_fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

void emit_csv(const std::vector<BenchRecord>& records, const std::string& path,
              const std::vector<std::string>& comments) {
    std::vector<BenchRecord> rows = records;
    std::sort(rows.begin(), rows.end(),
              [](const BenchRecord& a, const BenchRecord& b) {
                  return std::tie(a.scheme, a.op, a.sec_level, a.n_attrs, a.rep) <
                         std::tie(b.scheme, b.op, b.sec_level, b.n_attrs, b.rep);
              });
    std::ofstream out = open_csv(path, comments, kRawHeader);
    for (const BenchRecord& r : rows)
        out << r.scheme << ',' << r.op << ',' << r.sec_level << ',' << r.n_attrs
            << ',' << r.rep << ',' << r.duration_ns << ',' << r.size_bytes
            << '\n';
    out.flush();
    if (!out) throw IoError("write failure on \"" + path + "\"");
}

void emit_csv(const std::vector<BenchSummary>& summaries,
              const std::string& path,
              const std::vector<std::string>& comments) {
    std::vector<BenchSummary> rows = summaries;
    std::sort(rows.begin(), rows.end(),
              [](const BenchSummary& a, const BenchSummary& b) {
                  return std::tie(a.scheme, a.op, a.sec_level, a.n_attrs) <
                         std::tie(b.scheme, b.op, b.sec_level, b.n_attrs);
              });
    std::ofstream out = open_csv(path, comments, kSummaryHeader);
    for (const BenchSummary& s : rows)
        out << s.scheme << ',' << s.op << ',' << s.sec_level << ',' << s.n_attrs
            << ',' << format_fixed3(s.mean_ns) << ',' << format_fixed3(s.std_ns)
            << ',' << s.min_ns << ',' << s.max_ns << '\n';
    out.flush();
    if (!out) throw IoError("write failure on \"" + path + "\"");
}

std::vector<BenchRecord> parse_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open \"" + path + "\" for reading");
    std::string line;
    bool saw_header = false;
    std::vector<BenchRecord> out;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!saw_header) {
            if (line != kRawHeader)
                throw IoError("\"" + path + "\" is not a raw bench CSV");
            saw_header = true;
            continue;
        }
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 7)
            throw IoError("\"" + path + "\": malformed row \"" + line + "\"");
        BenchRecord r;
        r.scheme = fields[0];
        r.op = fields[1];
        r.sec_level = std::stoi(fields[2]);
        r.n_attrs = static_cast<unsigned>(std::stoul(fields[3]));
        r.rep = static_cast<unsigned>(std::stoul(fields[4]));
        r.duration_ns = std::stoull(fields[5]);
        r.size_bytes = std::stoull(fields[6]);
        out.push_back(std::move(r));
    }
    if (!saw_header) throw IoError("\"" + path + "\" has no header row");
    return out;
}

}  // namespace aben
