#include "szego/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "szego/errors.hpp"

namespace szego {

WeightSeq WeightSeq::power(double alpha) {
    if (alpha < 0.0) throw std::invalid_argument("power weight requires alpha >= 0");
    WeightSeq w;
    w.kind_ = Kind::power;
    w.alpha_ = alpha;
    return w;
}

WeightSeq WeightSeq::explicit_values(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("explicit weight needs values");
    for (double v : values)
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("weights must be positive and finite");
    WeightSeq w;
    w.kind_ = Kind::explicit_values;
    w.values_ = std::move(values);
    return w;
}

std::optional<std::size_t> WeightSeq::max_index() const {
    if (kind_ == Kind::power) return std::nullopt;
    return values_.size() - 1;
}

double WeightSeq::at(std::size_t k) const {
    if (kind_ == Kind::power)
        return std::pow(static_cast<double>(k) + 1.0, alpha_);
    if (k >= values_.size())
        throw OutOfRange("weight index beyond the explicit table");
    return values_[k];
}

WClassReport class_w_check(const WeightSeq& w, std::size_t horizon) {
    if (horizon < 2) throw std::invalid_argument("class check needs horizon >= 2");
    if (auto mi = w.max_index()) horizon = std::min(horizon, *mi);

    WClassReport rep;
    rep.member = true;
    if (std::abs(w.at(0) - 1.0) > 1e-12) {
        rep.member = false;
        rep.first_violation = 0;
    }
    for (std::size_t k = 1; k <= horizon; ++k) {
        if (w.at(k - 1) > w.at(k)) {
            rep.member = false;
            if (!rep.first_violation) rep.first_violation = k;
            break;
        }
    }
    rep.c_nu = 1.0;
    for (std::size_t k = 1; 2 * k <= horizon; ++k)
        rep.c_nu = std::max(rep.c_nu, w.at(2 * k) / w.at(k));
    if (w.kind() == WeightSeq::Kind::power)
        rep.analytic_c_nu = std::pow(2.0, w.alpha());
    return rep;
}

PairingConstant pairing_constant(const WeightSeq& phi, const WeightSeq& psi,
                                 std::size_t horizon) {
    if (horizon < 1) throw std::invalid_argument("pairing needs horizon >= 1");
    for (const auto* w : {&phi, &psi})
        if (auto mi = w->max_index()) horizon = std::min(horizon, *mi);

    PairingConstant pc;
    for (std::size_t k = 0; k <= horizon; ++k)
        pc.max_ratio = std::max(
            pc.max_ratio, static_cast<double>(k) / (phi.at(k) * psi.at(k)));

    if (phi.kind() == WeightSeq::Kind::power && psi.kind() == WeightSeq::Kind::power) {
        const double s = phi.alpha() + psi.alpha();
        pc.analytic_finite = s >= 1.0;
        if (s == 1.0) {
            pc.analytic_sup = 1.0; // k/(k+1) increases to 1
        } else if (s > 1.0) {
            // f(k) = k/(k+1)^s peaks near k* = 1/(s-1)
            const double kstar = 1.0 / (s - 1.0);
            double sup = 0.0;
            for (double k : {std::floor(kstar), std::ceil(kstar), 1.0})
                if (k >= 0.0) sup = std::max(sup, k / std::pow(k + 1.0, s));
            pc.analytic_sup = sup;
        }
    }
    return pc;
}

ReciprocalSum reciprocal_sum(const WeightSeq& phi, const WeightSeq& psi,
                             std::size_t horizon) {
    if (horizon < 1) throw std::invalid_argument("reciprocal sum needs horizon >= 1");
    for (const auto* w : {&phi, &psi})
        if (auto mi = w->max_index()) horizon = std::min(horizon, *mi);

    ReciprocalSum rs;
    for (std::size_t j = 1; j <= horizon; ++j)
        rs.partial += 1.0 / (phi.at(j) * psi.at(j));
    if (phi.kind() == WeightSeq::Kind::power && psi.kind() == WeightSeq::Kind::power)
        rs.convergent = phi.alpha() + psi.alpha() > 1.0;
    return rs;
}

} // namespace szego
