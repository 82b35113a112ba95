// Copyright (c) 2026 the sha1assp authors
// SPDX-License-Identifier: Apache-2.0

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sha1assp/datapath_sim.hpp"
#include "sha1assp/perf_model.hpp"
#include "sha1assp/sha1.hpp"

namespace {

using namespace sha1assp;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1; // operational failure
constexpr int kExitUsage = 2;   // bad invocation or malformed input values

struct ModelConfig {
    int ni = 48;
    double ts_ns = 10.909;
};

// flat key=value text; '#' starts a comment
ModelConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot read config file: " + path);
    ModelConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::string key, value;
        std::istringstream ls(line);
        if (!std::getline(ls, key, '='))
            continue; // blank
        std::getline(ls, value);
        auto trim = [](std::string& s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
        };
        trim(key);
        trim(value);
        if (key.empty())
            continue;
        try {
            if (key == "ni")
                cfg.ni = std::stoi(value);
            else if (key == "ts_ns")
                cfg.ts_ns = std::stod(value);
            else
                throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": bad config entry '" + line + "'");
        }
    }
    return cfg;
}

std::optional<std::vector<std::uint8_t>> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::vector<std::uint8_t> data;
    char chunk[65536];
    while (in.read(chunk, sizeof chunk) || in.gcount() > 0)
        data.insert(data.end(), chunk, chunk + in.gcount());
    return data;
}

std::vector<std::uint8_t> read_stdin() {
    std::vector<std::uint8_t> data;
    char chunk[65536];
    while (std::cin.read(chunk, sizeof chunk) || std::cin.gcount() > 0)
        data.insert(data.end(), chunk, chunk + std::cin.gcount());
    return data;
}

BitMessage to_message(std::vector<std::uint8_t> bytes, std::optional<std::uint64_t> bits) {
    if (!bits)
        return BitMessage::from_bytes(bytes);
    if (*bits > bytes.size() * 8)
        throw std::invalid_argument("--bits exceeds the input length");
    return BitMessage::from_bits(bytes, *bits);
}

std::string expand_alphabet(const std::string& spec) {
    static const std::string digits = "0123456789";
    static const std::string lower = "abcdefghijklmnopqrstuvwxyz";
    static const std::string upper = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
    std::string alphabet = spec;
    if (spec == "digits")
        alphabet = digits;
    else if (spec == "lower")
        alphabet = lower;
    else if (spec == "upper")
        alphabet = upper;
    else if (spec == "alnum")
        alphabet = digits + lower + upper;
    for (unsigned char c : alphabet)
        if (std::isspace(c) || c == '\0')
            throw std::invalid_argument("alphabet symbols must be printable");
    return alphabet;
}

double ms(std::chrono::duration<double> d) {
    return std::chrono::duration<double, std::milli>(d).count();
}

// ---- hash ------------------------------------------------------------

int cmd_hash(const std::vector<std::string>& files, std::optional<std::uint64_t> bits) {
    if (bits && files.size() > 1)
        throw std::invalid_argument("--bits needs a single input");
    bool failed = false;
    auto emit = [](const Digest& d, const std::string& name) {
        std::cout << d.hex() << "  " << name << '\n';
    };
    if (files.empty()) {
        emit(digest(to_message(read_stdin(), bits)), "-");
        return kExitOk;
    }
    for (const std::string& path : files) {
        if (path == "-") {
            emit(digest(to_message(read_stdin(), bits)), "-");
            continue;
        }
        auto data = read_file(path);
        if (!data) {
            std::cerr << "sha1assp: cannot read '" << path << "'\n";
            failed = true;
            continue;
        }
        emit(digest(to_message(std::move(*data), bits)), path);
    }
    return failed ? kExitFailure : kExitOk;
}

// ---- simulate --------------------------------------------------------

int cmd_simulate(const std::string& input, const std::string& trace_path,
                 std::optional<std::uint64_t> bits, bool machine) {
    std::vector<std::uint8_t> data;
    std::string name = input.empty() ? "-" : input;
    if (name == "-") {
        data = read_stdin();
    } else {
        auto file = read_file(input);
        if (!file) {
            std::cerr << "sha1assp: cannot read '" << input << "'\n";
            return kExitFailure;
        }
        data = std::move(*file);
    }

    DatapathSim sim(preprocess(to_message(std::move(data), bits)));
    std::ofstream trace;
    if (!trace_path.empty()) {
        trace.open(trace_path);
        if (!trace) {
            std::cerr << "sha1assp: cannot write trace file '" << trace_path << "'\n";
            return kExitFailure;
        }
        sim.emit_trace(trace);
    }
    const auto [dig, cycles] = sim.run_to_completion();
    const std::uint64_t blocks = sim.message().block_count();
    if (machine)
        std::cout << dig.hex() << ' ' << blocks << ' ' << cycles << ' ' << name << '\n';
    else
        std::cout << dig.hex() << "  " << name << "  blocks=" << blocks
                  << " cycles=" << cycles << '\n';
    return kExitOk;
}

// ---- reproduce-table ---------------------------------------------------

int cmd_reproduce_table(double tolerance, const std::string& export_path, bool machine) {
    if (!export_path.empty()) {
        std::ofstream out(export_path);
        out << table1_csv();
        if (!out) {
            std::cerr << "sha1assp: cannot write '" << export_path << "'\n";
            return kExitFailure;
        }
    }
    bool all_ok = true;
    if (!machine)
        std::printf("%4s %9s %12s %12s %9s  %s\n", "NI", "Ts(ns)", "Rs published",
                    "Rs computed", "delta", "verdict");
    for (const SynthesisRecord& row : table1()) {
        const double computed = throughput_gbps(row.ni, row.ts_ns);
        const double delta = computed - row.rs_gbps;
        const bool ok = std::fabs(delta) <= tolerance;
        all_ok = all_ok && ok;
        if (machine)
            std::printf("%d %.3f %.3f %.4f %+.4f\n", row.ni, row.ts_ns, row.rs_gbps,
                        computed, delta);
        else
            std::printf("%4d %9.3f %12.3f %12.4f %+9.4f  %s\n", row.ni, row.ts_ns,
                        row.rs_gbps, computed, delta, ok ? "pass" : "FAIL");
    }
    if (!machine) {
        // occupancy consistency against the device totals, informational
        for (const SynthesisRecord& row : table1()) {
            const double pr = 100.0 * row.nr / kDeviceRegisters;
            const double plut = 100.0 * row.nlut / kDeviceLuts;
            std::printf("NI=%-2d occupancy: PR %5.2f%% (published %5.2f%%)  PLUT %5.2f%% "
                        "(published %5.2f%%)\n",
                        row.ni, pr, row.pr_pct, plut, row.plut_pct);
        }
        std::printf("%s (tolerance %.3f Gbps)\n", all_ok ? "all rows pass" : "FAILURES",
                    tolerance);
    }
    return all_ok ? kExitOk : kExitFailure;
}

// ---- crack -------------------------------------------------------------

int cmd_crack(const std::string& target_hex, const std::string& alphabet_spec,
              std::uint32_t length, int workers, const std::string& engine_name,
              const ModelConfig& model, bool machine) {
    const auto target = Digest::from_hex(target_hex);
    if (!target)
        throw std::invalid_argument("target must be 40 hex characters");
    const KeyspaceSpec spec{expand_alphabet(alphabet_spec), length};
    const CrackEngine engine =
        engine_name == "sim" ? CrackEngine::datapath : CrackEngine::fast;

    const CrackResult result = crack(*target, spec, workers, engine, model.ni, model.ts_ns);

    if (machine) {
        std::printf("target=%s alphabet=%s length=%u found=%s tested=%llu "
                    "wall_ms=%.3f predicted_ms=%.3f\n",
                    target_hex.c_str(), spec.alphabet.c_str(), length,
                    result.found ? result.found->c_str() : "-",
                    static_cast<unsigned long long>(result.candidates_tested),
                    ms(result.wall_time), ms(result.predicted_time));
    } else {
        if (result.found)
            std::printf("found: %s\n", result.found->c_str());
        else
            std::printf("not found\n");
        std::printf("candidates tested: %llu of %llu\n",
                    static_cast<unsigned long long>(result.candidates_tested),
                    static_cast<unsigned long long>(spec.size()));
        std::printf("wall time: %.3f ms\n", ms(result.wall_time));
        std::printf("modeled hardware worst case (NI=%d, Ts=%.3f ns): %.3f ms\n", model.ni,
                    model.ts_ns, ms(result.predicted_time));
    }
    return kExitOk;
}

// ---- bench -------------------------------------------------------------

int cmd_bench(double seconds, const ModelConfig& model, bool machine) {
    const int hw = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::pair<int, double>> fast_rates;
    fast_rates.emplace_back(1, bench_fast_engine(seconds, 1));
    if (hw > 1)
        fast_rates.emplace_back(hw, bench_fast_engine(seconds, hw));
    const double sim_rate = bench_datapath_engine(seconds);
    const double model_rate = hashes_per_second(model.ni, model.ts_ns, 1);

    if (machine) {
        for (auto [threads, rate] : fast_rates)
            std::printf("engine=fast threads=%d hps=%.0f\n", threads, rate);
        std::printf("engine=sim threads=1 hps=%.0f\n", sim_rate);
        std::printf("model ni=%d ts_ns=%.3f hps=%.0f\n", model.ni, model.ts_ns, model_rate);
    } else {
        std::printf("local software rates (single-block candidates):\n");
        for (auto [threads, rate] : fast_rates)
            std::printf("  fast engine, %d thread%s: %12.0f hashes/s\n", threads,
                        threads == 1 ? " " : "s", rate);
        std::printf("  cycle-accurate sim      : %12.0f hashes/s\n", sim_rate);
        std::printf("modeled hardware rate (NI=%d, Ts=%.3f ns): %.0f hashes/s\n", model.ni,
                    model.ts_ns, model_rate);
        std::printf("note: software throughput and the modeled silicon rate are not\n"
                    "comparable quantities; the model describes the synthesized design.\n");
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SHA-1 hashing, a cycle-accurate model of an iterative-looping SHA-1 "
                 "datapath, and a throughput / brute-force harness"};
    app.require_subcommand(1);

    bool machine = false;
    std::string config_path;
    int ni = 0;       // 0 = not set
    double ts_ns = 0; // 0 = not set
    app.add_flag("--machine", machine, "machine-readable record lines on stdout");
    app.add_option("--config", config_path, "config file with ni= and ts_ns= defaults");
    app.add_option("--ni", ni, "instance count for model predictions (default 48)");
    app.add_option("--ts-ns", ts_ns, "clock period ns for model predictions (default 10.909)");

    auto* hash = app.add_subcommand("hash", "hash files (or stdin) and print digests");
    std::vector<std::string> hash_files;
    std::uint64_t bits_value = 0;
    hash->add_option("files", hash_files, "input files; '-' or none reads stdin");
    auto* hash_bits = hash->add_option("--bits", bits_value, "use only the first N bits");

    auto* simulate =
        app.add_subcommand("simulate", "hash one input on the simulated datapath");
    std::string sim_input;
    std::string trace_path;
    simulate->add_option("input", sim_input, "input file; '-' or none reads stdin");
    simulate->add_option("--trace", trace_path, "write a per-cycle trace file");
    auto* sim_bits = simulate->add_option("--bits", bits_value, "use only the first N bits");

    auto* table = app.add_subcommand(
        "reproduce-table", "recompute the bundled synthesis rows from the throughput model");
    double tolerance = 0.001;
    std::string export_path;
    table->add_option("--tolerance", tolerance, "allowed |delta| in Gbps (default 0.001)");
    table->add_option("--export", export_path, "also write the rows as CSV");

    auto* crack_cmd = app.add_subcommand("crack", "brute-force a digest over a keyspace");
    std::string target_hex, alphabet_spec, engine_name = "fast";
    std::uint32_t length = 0;
    int workers = std::max(1u, std::thread::hardware_concurrency());
    crack_cmd->add_option("target", target_hex, "target digest, 40 hex chars")->required();
    crack_cmd
        ->add_option("--alphabet", alphabet_spec,
                     "digits|lower|upper|alnum or a literal symbol string")
        ->required();
    crack_cmd->add_option("--length", length, "password length")->required();
    crack_cmd->add_option("--workers", workers, "concurrent workers");
    crack_cmd->add_option("--engine", engine_name, "fast|sim")
        ->check(CLI::IsMember({"fast", "sim"}));

    auto* bench = app.add_subcommand("bench", "measure local engine rates");
    double bench_seconds = 0.5;
    bench->add_option("--seconds", bench_seconds, "sampling time per engine");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help and friends
        app.exit(e);
        return kExitUsage;
    }

    try {
        ModelConfig model;
        if (!config_path.empty())
            model = load_config(config_path);
        if (ni != 0)
            model.ni = ni; // flags win over the config file
        if (ts_ns != 0)
            model.ts_ns = ts_ns;

        if (*hash)
            return cmd_hash(hash_files,
                            *hash_bits ? std::optional(bits_value) : std::nullopt);
        if (*simulate)
            return cmd_simulate(sim_input, trace_path,
                                *sim_bits ? std::optional(bits_value) : std::nullopt,
                                machine);
        if (*table)
            return cmd_reproduce_table(tolerance, export_path, machine);
        if (*crack_cmd)
            return cmd_crack(target_hex, alphabet_spec, length, workers, engine_name, model,
                             machine);
        if (*bench)
            return cmd_bench(bench_seconds, model, machine);
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "sha1assp: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "sha1assp: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "sha1assp: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "sha1assp: " << e.what() << '\n';
        return kExitFailure;
    }
}
