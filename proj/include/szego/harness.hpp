#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "szego/asymptotics.hpp"
#include "szego/config.hpp"

namespace szego {

/// Deterministic random source for the property suites: doubles are drawn
/// from raw engine bits so reports are byte-identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) { // inclusive
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    cplx unit_disk() {
        for (;;) {
            const double x = uniform(-1.0, 1.0), y = uniform(-1.0, 1.0);
            if (x * x + y * y <= 1.0) return {x, y};
        }
    }

private:
    std::mt19937_64 eng_;
};

struct SweepRow {
    int n = 0;
    double exact_logabs = 0.0, exact_phase = 0.0;
    double predicted_logabs = 0.0, predicted_phase = 0.0;
    double delta = 0.0, normalized_delta = 0.0;
    bool below_floor = false;
};

struct SweepReport {
    int kappa = 0;
    std::vector<SweepRow> rows;
    std::vector<double> normalized_alt;
    double fitted_exponent = 0.0;
    int noise_floor_hits = 0;
    bool all_below_floor = false;
    // hypothesis panel
    double pairing_m = 0.0;
    std::optional<bool> pairing_finite;
    double reciprocal_partial = 0.0;
    std::optional<bool> reciprocal_convergent;
    double delta2_phi_upper = 0.0, delta2_psi_upper = 0.0;
    WClassReport w_phi, w_psi;
    cplx g_const{1.0, 0.0}, e_const{1.0, 0.0};
    double residual = 0.0;
};

SweepReport run_sweep(const ExperimentConfig& cfg,
                      std::optional<int> kappa_override = std::nullopt);

// CSV table with a fixed column order and 17 significant digits.
void write_csv(const SweepReport& rep, std::ostream& out);
nlohmann::json sweep_summary_json(const SweepReport& rep, const ExperimentConfig& cfg);

struct VerifyReport {
    std::string text;  // deterministic, byte-identical for a fixed seed
    int failures = 0;
};

// Seeded property suites: Jacobi identities, the algebra bound, Luxemburg
// norms against an independent oracle, and the Toeplitz/Hankel product
// identities. Failures carry seed and trial index.
VerifyReport run_verify(std::uint64_t seed, int trials, double tol);

// subcommand drivers; return process exit codes
int cmd_factor(const ExperimentConfig& cfg, std::ostream& out);
int cmd_szego(const ExperimentConfig& cfg, std::ostream& out);
int cmd_sweep(const ExperimentConfig& cfg, std::ostream& out);
int cmd_verify(const ExperimentConfig& cfg, std::ostream& out);
int cmd_orlicz_check(const ExperimentConfig& cfg, std::ostream& out);

} // namespace szego
