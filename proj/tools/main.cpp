// sqdigits - verification suites and experiments on digital functions along
// squares. Exit codes: 0 ok, 1 contract violation, 2 usage, 3 capacity.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "sqdigits/errors.hpp"

namespace {

enum Exit { kOk = 0, kContract = 1, kUsage = 2, kCapacity = 3 };

// Integer count that may be written as 10000000 or 1e7.
std::uint64_t parse_count(const std::string& s) {
    static const std::regex digits("[0-9]+");
    if (std::regex_match(s, digits)) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw sqcli::UsageError("--x out of range: " + s);
        }
    }
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw sqcli::UsageError("--x expects an integer such as 10000000 or 1e7, got " + s);
    }
    if (used != s.size() || !std::isfinite(v) || v < 0 || v != std::floor(v) || v > 1.8e19)
        throw sqcli::UsageError("--x expects an integer such as 10000000 or 1e7, got " + s);
    return static_cast<std::uint64_t>(v);
}

}  // namespace

int main(int argc, char** argv) {
    sqcli::Config cfg;
    std::string x_text = "1e7";
    std::string output;
    std::string format = "json";

    CLI::App app{"Digital functions along squares: lemma checks and experiments"};
    app.require_subcommand(1);
    app.fallthrough();
    auto* q_opt = app.add_option("--q", cfg.q, "base q")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 20));
    app.add_option("--m", cfg.m, "modulus for equidist")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 20));
    app.add_option("--gamma", cfg.gamma, "digit frequency, exact rational a/b");
    app.add_option("--x", x_text, "upper limit, e.g. 1e7");
    app.add_option("--theta", cfg.theta, "additive frequency");
    app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
    app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--output", output, "report file (stdout when absent)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    app.add_subcommand("verify", "all explicit-constant lemma suites; exit 1 on any violation");
    app.add_subcommand("constants", "c and eta with their bounds (every q in 2..13 unless --q is given)");
    app.add_subcommand("equidist", "s_q(p^2) mod m over primes p <= x");
    auto* expsum = app.add_subcommand("expsum", "bound reports for one exponential-sum family");
    expsum->add_option("--family", cfg.family, "lemma family")->check(CLI::IsMember(sqcli::kFamilies));
    app.add_subcommand("typesums", "type I / type II sums with parameter plans");
    app.add_subcommand("decay", "decay of the Lambda-weighted sum from 1e4 to x");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.all_q = q_opt->count() == 0 && cfg.command == "constants";

    try {
        cfg.x = parse_count(x_text);
        // floating gamma is refused outright; the rational parser would also reject it
        static const std::regex rational("[+-]?[0-9]+(/[0-9]+)?");
        if (!std::regex_match(cfg.gamma, rational))
            throw sqcli::UsageError("--gamma must be an exact rational a/b, got " + cfg.gamma);
        if (!std::isfinite(cfg.theta)) throw sqcli::UsageError("--theta must be finite");

        const auto report = sqcli::run(cfg);
        std::ostringstream buf;
        if (format == "csv") sqcli::write_csv(buf, report);
        else sqcli::write_json(buf, report);
        if (output.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream out(output, std::ios::binary);
            if (!out) throw sqcli::UsageError("cannot open " + output);
            out << buf.str();
        }
        if (!report.ok()) {
            std::fprintf(stderr, "sqdigits: contract violation in %s\n", cfg.command.c_str());
            return kContract;
        }
        return kOk;
    } catch (const sqcli::UsageError& e) {
        std::fprintf(stderr, "sqdigits: %s\n", e.what());
        return kUsage;
    } catch (const sqdigits::CapacityError& e) {
        std::fprintf(stderr, "sqdigits: capacity: %s\n", e.what());
        return kCapacity;
    } catch (const sqdigits::RangeError& e) {
        std::fprintf(stderr, "sqdigits: capacity: %s\n", e.what());
        return kCapacity;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "sqdigits: %s\n", e.what());
        return kContract;
    }
}
