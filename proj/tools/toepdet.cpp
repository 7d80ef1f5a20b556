// Command-line driver: Toeplitz determinants, Szego constants, Wiener-Hopf
// factorization, winding-index determinant predictions, and the seeded
// verification suites.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "szego/errors.hpp"
#include "szego/harness.hpp"

namespace {

std::vector<int> parse_n_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw szego::ConfigError("bad n value '" + item + "'");
        }
    }
    if (out.empty()) throw szego::ConfigError("empty n list");
    return out;
}

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::string n_csv;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int kappa = 0;
    bool kappa_set = false;
};

szego::ExperimentConfig resolve(const CommonOpts& o, bool need_config) {
    szego::ExperimentConfig cfg;
    if (!o.config_path.empty()) {
        cfg = szego::load_config_file(o.config_path);
    } else if (need_config) {
        throw szego::ConfigError("this subcommand needs --config <path>");
    }
    if (!o.out_path.empty()) cfg.out_path = o.out_path;
    if (o.seed_set) cfg.seed = o.seed;
    if (o.kappa_set) cfg.kappa = o.kappa;
    if (!o.n_csv.empty()) {
        cfg.n_list = parse_n_list(o.n_csv);
        for (std::size_t i = 1; i < cfg.n_list.size(); ++i)
            if (cfg.n_list[i] <= cfg.n_list[i - 1])
                throw szego::ConfigError("--n list must be strictly increasing");
    }
    return cfg;
}

void add_common(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--config", o.config_path, "experiment config (JSON)");
    sub->add_option("--out", o.out_path, "output path");
    sub->add_option("--seed", o.seed, "seed for randomized suites")
        ->each([&](const std::string&) { o.seed_set = true; });
    sub->add_option("--n", o.n_csv, "comma-separated n list (overrides config)");
    sub->add_option("--kappa", o.kappa, "winding index of the shift t^kappa")
        ->each([&](const std::string&) { o.kappa_set = true; });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toeplitz determinant asymptotics toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    CLI::App* factor = app.add_subcommand(
        "factor", "Wiener-Hopf factorization, G(a) and E(a)");
    CLI::App* szego_cmd = app.add_subcommand(
        "szego", "determinants against G^{n+1} E (index zero)");
    CLI::App* sweep = app.add_subcommand(
        "sweep", "determinant sweep with winding-index predictions");
    CLI::App* verify = app.add_subcommand(
        "verify", "seeded property suites (nonzero exit on failure)");
    CLI::App* orlicz = app.add_subcommand(
        "orlicz-check", "norms, class membership, hypothesis constants");
    for (CLI::App* sub : {factor, szego_cmd, sweep, verify, orlicz})
        add_common(sub, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (factor->parsed()) return szego::cmd_factor(resolve(opts, true), std::cout);
        if (szego_cmd->parsed()) return szego::cmd_szego(resolve(opts, true), std::cout);
        if (sweep->parsed()) return szego::cmd_sweep(resolve(opts, true), std::cout);
        if (verify->parsed()) return szego::cmd_verify(resolve(opts, false), std::cout);
        if (orlicz->parsed())
            return szego::cmd_orlicz_check(resolve(opts, true), std::cout);
    } catch (const szego::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const szego::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
