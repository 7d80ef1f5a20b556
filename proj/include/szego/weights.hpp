#pragma once

#include <optional>
#include <vector>

namespace szego {

/// A positive weight sequence {nu_k}_{k>=0}: either the analytic power
/// family nu_k = (k+1)^alpha or an explicit finite table.
class WeightSeq {
public:
    enum class Kind { power, explicit_values };

    static WeightSeq power(double alpha);
    static WeightSeq explicit_values(std::vector<double> values);

    Kind kind() const { return kind_; }
    double alpha() const { return alpha_; } // power kind only

    // Largest index the sequence can be evaluated at (unbounded for power).
    std::optional<std::size_t> max_index() const;

    double at(std::size_t k) const;

private:
    WeightSeq() = default;
    Kind kind_ = Kind::power;
    double alpha_ = 0.0;
    std::vector<double> values_;
};

struct WClassReport {
    bool member = false;
    double c_nu = 1.0;                        // finite-horizon doubling constant
    std::optional<std::size_t> first_violation; // monotonicity / nu_0 failure index
    std::optional<double> analytic_c_nu;      // 2^alpha for the power family
};

// Checks nu_0 = 1 and monotonicity up to the horizon and measures
// c_nu = max nu_{2k} / nu_k. Violations are reported, never thrown.
WClassReport class_w_check(const WeightSeq& w, std::size_t horizon);

struct PairingConstant {
    double max_ratio = 0.0;                 // max over k <= horizon of k/(phi_k psi_k)
    std::optional<bool> analytic_finite;    // power kinds: alpha + beta >= 1
    std::optional<double> analytic_sup;     // power kinds with finite sup
};

// Hypothesis constant M with k <= M phi_k psi_k.
PairingConstant pairing_constant(const WeightSeq& phi, const WeightSeq& psi,
                                 std::size_t horizon);

struct ReciprocalSum {
    double partial = 0.0;                  // sum_{j=1}^{horizon} 1/(phi_j psi_j)
    std::optional<bool> convergent;        // power kinds: alpha + beta > 1
};

ReciprocalSum reciprocal_sum(const WeightSeq& phi, const WeightSeq& psi,
                             std::size_t horizon);

} // namespace szego
