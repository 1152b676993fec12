// aben — command-line front end: key management, envelope encryption, and
// the timing harness. One subcommand per operation; see --help.
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aben/bench.hpp"
#include "aben/cpabe.hpp"
#include "aben/envelope.hpp"
#include "aben/errors.hpp"
#include "aben/kpabe.hpp"
#include "aben/serial.hpp"

namespace {

using namespace aben;

Rng make_rng(const std::optional<uint64_t>& seed) {
    return seed ? Rng(*seed) : Rng::from_entropy();
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

AttributeSet attr_set(const std::string& text) {
    std::vector<std::string> names = split_list(text);
    if (names.empty()) throw EmptyAttributeSet("--attrs names no attributes");
    return AttributeSet(names);
}

// "1..30", "5", or a comma list mixing both.
std::vector<unsigned> parse_counts(const std::string& text) {
    std::vector<unsigned> out;
    for (const std::string& piece : split_list(text)) {
        size_t dots = piece.find("..");
        try {
            if (dots == std::string::npos) {
                out.push_back(static_cast<unsigned>(std::stoul(piece)));
            } else {
                unsigned lo = static_cast<unsigned>(std::stoul(piece.substr(0, dots)));
                unsigned hi = static_cast<unsigned>(std::stoul(piece.substr(dots + 2)));
                if (hi < lo) throw PlanInfeasible("empty range " + piece);
                for (unsigned n = lo; n <= hi; ++n) out.push_back(n);
            }
        } catch (const std::logic_error&) {
            throw PlanInfeasible("bad attribute count \"" + piece + "\"");
        }
    }
    return out;
}

int cmd_setup(const std::string& scheme, int level, const std::string& universe,
              std::optional<uint64_t> seed, const std::string& pub_path,
              const std::string& msk_path) {
    Rng rng = make_rng(seed);
    Rng prng = rng.fork("params");
    GroupParams params = GroupParams::generate(level, prng);
    if (scheme == "cp") {
        auto [pk, mk] = cp_setup(params, rng);
        write_file(pub_path, serialize_cp_public(pk));
        write_file(msk_path, serialize_cp_master(mk, params));
    } else {
        std::vector<std::string> names = split_list(universe);
        if (names.empty())
            throw EmptyAttributeSet("kp setup needs --attrs with the universe");
        auto [pk, mk] = kp_setup(params, names, rng);
        write_file(pub_path, serialize_kp_public(pk));
        write_file(msk_path, serialize_kp_master(mk, params));
    }
    return 0;
}

int cmd_keygen(const std::string& pub_path, const std::string& msk_path,
               const std::string& attrs, const std::string& policy,
               std::optional<uint64_t> seed, const std::string& key_path) {
    Rng rng = make_rng(seed);
    std::vector<uint8_t> pub = read_file(pub_path);
    std::vector<uint8_t> msk = read_file(msk_path);
    if (blob_scheme(pub) == Scheme::cp) {
        if (attrs.empty())
            throw EmptyAttributeSet("cp keygen needs --attrs");
        CpPublicParams pk = deserialize_cp_public(pub);
        CpMasterKey mk = deserialize_cp_master(msk, pk.params);
        CpPrivateKey sk = cp_keygen(pk, mk, attr_set(attrs), rng);
        write_file(key_path, serialize_cp_key(sk, pk.params));
    } else {
        if (policy.empty())
            throw SyntaxError(0, {"policy"}, "kp keygen needs --policy");
        KpPublicParams pk = deserialize_kp_public(pub);
        KpMasterKey mk = deserialize_kp_master(msk, pk.params);
        KpPrivateKey sk = kp_keygen(pk, mk, parse_policy(policy), rng);
        write_file(key_path, serialize_kp_key(sk, pk.params));
    }
    return 0;
}

int cmd_encrypt(const std::string& pub_path, const std::string& attrs,
                const std::string& policy, std::optional<uint64_t> seed,
                const std::string& in_path, const std::string& out_path) {
    Rng rng = make_rng(seed);
    std::vector<uint8_t> pub = read_file(pub_path);
    std::vector<uint8_t> payload = read_file(in_path);
    Envelope env = [&] {
        if (blob_scheme(pub) == Scheme::cp) {
            if (policy.empty())
                throw SyntaxError(0, {"policy"}, "cp encrypt needs --policy");
            CpPublicParams pk = deserialize_cp_public(pub);
            return seal_cp(pk, parse_policy(policy), payload, rng);
        }
        if (attrs.empty())
            throw EmptyAttributeSet("kp encrypt needs --attrs");
        KpPublicParams pk = deserialize_kp_public(pub);
        return seal_kp(pk, attr_set(attrs), payload, rng);
    }();
    write_file(out_path, serialize_envelope(env));
    return 0;
}

int cmd_decrypt(const std::string& pub_path, const std::string& key_path,
                const std::string& in_path, const std::string& out_path) {
    std::vector<uint8_t> pub = read_file(pub_path);
    std::vector<uint8_t> key = read_file(key_path);
    Envelope env = deserialize_envelope(read_file(in_path));
    std::vector<uint8_t> payload;
    if (blob_scheme(pub) == Scheme::cp) {
        CpPublicParams pk = deserialize_cp_public(pub);
        payload = open_cp(pk, deserialize_cp_key(key, pk.params), env);
    } else {
        KpPublicParams pk = deserialize_kp_public(pub);
        payload = open_kp(pk, deserialize_kp_key(key, pk.params), env);
    }
    write_file(out_path, payload);
    return 0;
}

std::string summary_path(const std::string& out) {
    size_t dot = out.rfind('.');
    if (dot == std::string::npos || out.find('/', dot) != std::string::npos)
        return out + "_summary";
    return out.substr(0, dot) + "_summary" + out.substr(dot);
}

int cmd_bench(const std::string& scheme, const std::string& ops,
              const std::string& counts, const std::string& levels,
              unsigned reps, const std::string& shape, unsigned k,
              uint64_t seed, unsigned warmup, const std::string& out,
              bool summary) {
    BenchPlan plan;
    plan.run_cp = scheme == "cp" || scheme == "both";
    plan.run_kp = scheme == "kp" || scheme == "both";

    plan.ops.clear();
    for (const std::string& op : split_list(ops)) {
        if (op == "setup") plan.ops.push_back(BenchOp::setup);
        else if (op == "keygen") plan.ops.push_back(BenchOp::keygen);
        else if (op == "encrypt") plan.ops.push_back(BenchOp::encrypt);
        else if (op == "decrypt") plan.ops.push_back(BenchOp::decrypt);
        else throw PlanInfeasible("unknown operation \"" + op + "\"");
    }
    plan.attr_counts = parse_counts(counts);
    plan.levels.clear();
    for (const std::string& l : split_list(levels)) {
        if (l != "80" && l != "112" && l != "128")
            throw PlanInfeasible("unknown security level \"" + l + "\"");
        plan.levels.push_back(std::stoi(l));
    }
    plan.reps = reps;
    plan.seed = seed;
    plan.warmup = warmup;
    plan.shape = shape == "kofn" ? WorkloadShape::k_of_n : WorkloadShape::and_chain;
    plan.k = k;

    std::vector<BenchRecord> records = run_plan(plan);

    std::vector<std::string> meta{
        "workload shape: " + std::string(shape == "kofn" ? "k-of-n, k=" + std::to_string(k)
                                                         : "and-chain"),
        "seed: " + std::to_string(seed),
        "reps: " + std::to_string(reps) + ", warmup: " + std::to_string(warmup),
    };
    emit_csv(records, out, meta);
    if (summary) emit_csv(summarize(records), summary_path(out), meta);
    std::fprintf(stderr, "aben bench: %zu records -> %s\n", records.size(),
                 out.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"attribute-based encryption toolkit"};
    app.require_subcommand(1);

    std::string scheme = "cp", universe, pub_path, msk_path, key_path;
    std::string attrs, policy, in_path, out_path;
    int level = 80;
    std::optional<uint64_t> seed;

    CLI::App* setup = app.add_subcommand("setup", "generate group parameters and a key pair");
    setup->add_option("--scheme", scheme, "cp or kp")->check(CLI::IsMember({"cp", "kp"}));
    setup->add_option("--level", level, "security level")->check(CLI::IsMember({80, 112, 128}));
    setup->add_option("--attrs", universe, "kp only: comma-separated attribute universe");
    setup->add_option("--seed", seed, "deterministic rng seed");
    setup->add_option("--pub", pub_path, "public parameters output")->required();
    setup->add_option("--msk", msk_path, "master key output")->required();

    CLI::App* keygen = app.add_subcommand("keygen", "derive a private key");
    keygen->add_option("--pub", pub_path, "public parameters")->required();
    keygen->add_option("--msk", msk_path, "master key")->required();
    keygen->add_option("--attrs", attrs, "cp: comma-separated attribute set");
    keygen->add_option("--policy", policy, "kp: access policy");
    keygen->add_option("--seed", seed, "deterministic rng seed");
    keygen->add_option("--key", key_path, "private key output")->required();

    CLI::App* encrypt = app.add_subcommand("encrypt", "seal a payload into an envelope");
    encrypt->add_option("--pub", pub_path, "public parameters")->required();
    encrypt->add_option("--policy", policy, "cp: access policy");
    encrypt->add_option("--attrs", attrs, "kp: comma-separated attribute set");
    encrypt->add_option("--seed", seed, "deterministic rng seed");
    encrypt->add_option("--in", in_path, "payload file")->required();
    encrypt->add_option("--out", out_path, "envelope output")->required();

    CLI::App* decrypt = app.add_subcommand("decrypt", "open an envelope");
    decrypt->add_option("--pub", pub_path, "public parameters")->required();
    decrypt->add_option("--key", key_path, "private key")->required();
    decrypt->add_option("--in", in_path, "envelope file")->required();
    decrypt->add_option("--out", out_path, "payload output")->required();

    std::string bscheme = "cp", bops = "setup,keygen,encrypt,decrypt";
    std::string bcounts = "1..30", blevels = "80,112,128", bshape = "and";
    unsigned breps = 100, bk = 1, bwarmup = 0;
    uint64_t bseed = 1;
    bool bsummary = false;

    CLI::App* bench = app.add_subcommand("bench", "timing sweeps with CSV output");
    bench->add_option("--scheme", bscheme, "cp, kp, or both")
        ->check(CLI::IsMember({"cp", "kp", "both"}));
    bench->add_option("--op", bops, "comma-separated operations");
    bench->add_option("--attrs", bcounts, "attribute counts, e.g. 1..30 or 5,10");
    bench->add_option("--levels", blevels, "comma-separated security levels");
    bench->add_option("--reps", breps, "repetitions per cell");
    bench->add_option("--shape", bshape, "workload shape")
        ->check(CLI::IsMember({"and", "kofn"}));
    bench->add_option("--k", bk, "threshold for --shape kofn");
    bench->add_option("--seed", bseed, "rng seed (default 1)");
    bench->add_option("--warmup", bwarmup, "untimed runs per cell before timing");
    bench->add_option("--out", out_path, "raw CSV output path")->required();
    bench->add_flag("--summary", bsummary, "also write per-cell statistics CSV");

    CLI11_PARSE(app, argc, argv);

    try {
        if (setup->parsed())
            return cmd_setup(scheme, level, universe, seed, pub_path, msk_path);
        if (keygen->parsed())
            return cmd_keygen(pub_path, msk_path, attrs, policy, seed, key_path);
        if (encrypt->parsed())
            return cmd_encrypt(pub_path, attrs, policy, seed, in_path, out_path);
        if (decrypt->parsed())
            return cmd_decrypt(pub_path, key_path, in_path, out_path);
        if (bench->parsed())
            return cmd_bench(bscheme, bops, bcounts, blevels, breps, bshape, bk,
                             bseed, bwarmup, out_path, bsummary);
    } catch (const Error& e) {
        std::fprintf(stderr, "aben: %s\n", e.what());
        return 1;
    }
    return 0;
}
