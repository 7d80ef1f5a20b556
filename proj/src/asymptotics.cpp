#include "szego/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "szego/errors.hpp"

namespace szego {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_phase(double phi) {
    phi = std::fmod(phi, 2.0 * kPi);
    if (phi > kPi) phi -= 2.0 * kPi;
    if (phi <= -kPi) phi += 2.0 * kPi;
    return phi;
}

// log G(a)^{n+1} E(a) as a complex exponent
cplx base_exponent(const WienerHopfFactors& f, int n) {
    const cplx g0 = f.log_coeffs.coeff(0);
    cplx e_sum(0.0);
    for (int k = 1; k <= f.log_coeffs.radius(); ++k)
        e_sum += static_cast<double>(k) * f.log_coeffs.coeff(k) * f.log_coeffs.coeff(-k);
    return static_cast<double>(n + 1) * g0 + e_sum;
}

cplx exp_or_inf(double log_abs, double phase) {
    if (std::isinf(log_abs) && log_abs < 0.0) return cplx(0.0);
    if (log_abs >= 700.0)
        return std::polar(std::numeric_limits<double>::infinity(), phase);
    return std::exp(log_abs) * std::polar(1.0, phase);
}

double fit_slope(const std::vector<double>& logx, const std::vector<double>& logy) {
    const double n = static_cast<double>(logx.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < logx.size(); ++i) {
        sx += logx[i];
        sy += logy[i];
        sxx += logx[i] * logx[i];
        sxy += logx[i] * logy[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return (n * sxy - sx * sy) / denom;
}

} // namespace

cplx szego_prediction(const WienerHopfFactors& f, int n) {
    const cplx z = base_exponent(f, n);
    return exp_or_inf(z.real(), wrap_phase(z.imag()));
}

WienerHopfFactors ensure_radius(const WienerHopfFactors& f, int radius) {
    if (f.out_radius >= radius) return f;
    return wiener_hopf(f.input, radius, f.tol);
}

CMatrix correction_matrix(const WienerHopfFactors& f, int n, int kappa,
                          int sign_of_kappa) {
    if (kappa < 1) throw std::invalid_argument("correction matrix needs kappa >= 1");
    if (sign_of_kappa == 0) throw std::invalid_argument("sign of kappa must be nonzero");
    const int needed = n + kappa;
    const WienerHopfFactors* use = &f;
    WienerHopfFactors widened;
    if (std::min(f.b.radius(), f.c.radius()) < needed) {
        widened = wiener_hopf(f.input, 2 * needed, f.tol);
        if (std::min(widened.b.radius(), widened.c.radius()) < needed)
            throw RadiusTooSmall("factor radius " + std::to_string(widened.b.radius()) +
                                 " below required " + std::to_string(needed) +
                                 " after one doubling");
        use = &widened;
    }

    const std::size_t kk = static_cast<std::size_t>(kappa);
    CMatrix m(kk, kk);
    for (std::size_t i = 0; i < kk; ++i)
        for (std::size_t j = 0; j < kk; ++j) {
            const int di = static_cast<int>(i), dj = static_cast<int>(j);
            m(i, j) = sign_of_kappa < 0 ? use->b.coeff(n + 1 + di - dj)
                                        : use->c.coeff(-n - 1 - di + dj);
        }
    return m;
}

Prediction szego_prediction_record(const WienerHopfFactors& f, int n) {
    Prediction p;
    p.n = n;
    p.kappa = 0;
    const cplx z = base_exponent(f, n);
    p.log_abs = z.real();
    p.phase = wrap_phase(z.imag());
    p.leading = exp_or_inf(p.log_abs, p.phase);
    p.e_const = f.e_const;
    const cplx gp = static_cast<double>(n + 1) * f.log_coeffs.coeff(0);
    p.g_power = exp_or_inf(gp.real(), wrap_phase(gp.imag()));
    return p;
}

Prediction winding_prediction(const WienerHopfFactors& f, int n, int kappa) {
    if (kappa == 0)
        throw std::invalid_argument("winding prediction needs kappa != 0");
    const int mag = std::abs(kappa);

    Prediction p;
    p.n = n;
    p.kappa = kappa;
    p.e_const = f.e_const;
    p.sign = ((static_cast<long long>(n) + mag) * mag) % 2 == 0 ? 1 : -1;

    const GBc g = g_of_b_and_c(f);
    const cplx index_base = kappa < 0 ? g.g_c : g.g_b;
    p.index_factor = std::pow(index_base, mag);

    const CMatrix corr = correction_matrix(f, n, mag, kappa < 0 ? -1 : +1);
    const LogDet corr_det = log_det_matrix(corr);
    p.correction_det = corr_det.value.value_or(
        exp_or_inf(corr_det.log_abs, corr_det.phase));

    const cplx z = base_exponent(f, n);
    const cplx gp = static_cast<double>(n + 1) * f.log_coeffs.coeff(0);
    p.g_power = exp_or_inf(gp.real(), wrap_phase(gp.imag()));

    if (corr_det.singular()) {
        p.log_abs = -std::numeric_limits<double>::infinity();
        p.phase = 0.0;
        p.leading = cplx(0.0);
        return p;
    }
    p.log_abs = z.real() + static_cast<double>(mag) * std::log(std::abs(index_base)) +
                corr_det.log_abs;
    p.phase = wrap_phase(z.imag() + (p.sign < 0 ? kPi : 0.0) +
                         static_cast<double>(mag) * std::arg(index_base) +
                         corr_det.phase);
    p.leading = exp_or_inf(p.log_abs, p.phase);
    return p;
}

RemainderSeries remainder_series(const FourierSymbol& a, const WienerHopfFactors& f,
                                 int kappa, const std::vector<int>& n_list,
                                 const WeightSeq& phi, const WeightSeq& psi,
                                 double fit_floor) {
    if (n_list.empty()) throw std::invalid_argument("empty n list");
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1])
            throw std::invalid_argument("n list must be strictly increasing");

    const int mag = std::abs(kappa);
    const WienerHopfFactors factors =
        kappa == 0 ? f : ensure_radius(f, n_list.back() + mag + 1);

    RemainderSeries rs;
    rs.kappa = kappa;
    rs.n_values = n_list;

    std::vector<double> fit_logn, fit_logrho;
    for (int n : n_list) {
        const LogDet exact = kappa == 0 ? log_det(a, n) : shifted_log_det(a, kappa, n);
        const Prediction pred = kappa == 0 ? szego_prediction_record(factors, n)
                                           : winding_prediction(factors, n, kappa);

        // ratio of the exact determinant to the prediction base (everything
        // except the correction determinant), in log space
        const cplx z = base_exponent(factors, n);
        double base_log = z.real();
        double base_phase = z.imag();
        if (kappa != 0) {
            base_log += std::log(std::abs(pred.index_factor));
            base_phase += (pred.sign < 0 ? kPi : 0.0) + std::arg(pred.index_factor);
        }

        double delta;
        double scale;
        if (exact.singular()) {
            delta = kappa == 0 ? 1.0 : std::abs(pred.correction_det);
            scale = std::max(std::abs(pred.correction_det), 0.0);
        } else {
            const cplx ratio = exp_or_inf(exact.log_abs - base_log,
                                          wrap_phase(exact.phase - base_phase));
            if (kappa == 0) {
                delta = std::abs(ratio - cplx(1.0));
                scale = std::max(std::abs(ratio), 1.0);
            } else {
                delta = std::abs(ratio - pred.correction_det);
                scale = std::max(std::abs(ratio), std::abs(pred.correction_det));
            }
        }
        if (kappa == 0) scale = std::max(scale, 1.0);

        const bool below = delta < fit_floor * scale;
        const std::size_t un = static_cast<std::size_t>(n);
        double normalized = delta;
        double normalized_alt = delta;
        if (kappa < 0) {
            normalized = delta * psi.at(un);
            normalized_alt = delta * phi.at(un + static_cast<std::size_t>(mag) + 1) *
                             psi.at(un + static_cast<std::size_t>(mag) + 1) *
                             psi.at(un + static_cast<std::size_t>(mag) + 1);
        } else if (kappa > 0) {
            normalized = delta * phi.at(un);
            normalized_alt = delta * phi.at(un + static_cast<std::size_t>(mag) + 1) *
                             phi.at(un + static_cast<std::size_t>(mag) + 1) *
                             psi.at(un + static_cast<std::size_t>(mag) + 1);
        }

        rs.exact.push_back(exact);
        rs.predicted.push_back(pred);
        rs.delta.push_back(delta);
        rs.normalized.push_back(normalized);
        rs.normalized_alt.push_back(normalized_alt);
        rs.below_floor.push_back(below);
        if (below) {
            ++rs.noise_floor_hits;
        } else if (delta > 0.0) {
            fit_logn.push_back(std::log(static_cast<double>(n)));
            fit_logrho.push_back(std::log(delta));
        }
    }

    rs.all_below_floor = rs.noise_floor_hits == static_cast<int>(n_list.size());
    rs.fitted_exponent = fit_logn.size() >= 2
                             ? fit_slope(fit_logn, fit_logrho)
                             : std::numeric_limits<double>::quiet_NaN();
    return rs;
}

} // namespace szego
