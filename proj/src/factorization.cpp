#include "szego/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "szego/errors.hpp"
#include "szego/fft.hpp"

namespace szego {

namespace {

// Keep only k <= 0 (side < 0) or k >= 0 (side > 0); the discarded side of an
// exponentiated half-series holds FFT round-off only, and the factor
// invariants require it to be exactly zero.
FourierSymbol project_half(const FourierSymbol& s, int side) {
    std::vector<cplx> out(2 * static_cast<std::size_t>(s.radius()) + 1, cplx(0.0));
    for (int k = -s.radius(); k <= s.radius(); ++k) {
        if ((side < 0 && k > 0) || (side > 0 && k < 0)) continue;
        out[static_cast<std::size_t>(k + s.radius())] = s.coeff(k);
    }
    return FourierSymbol(s.radius(), std::move(out));
}

FourierSymbol half_log(const FourierSymbol& log_a, int side, bool include_zero) {
    std::vector<cplx> out(2 * static_cast<std::size_t>(log_a.radius()) + 1, cplx(0.0));
    for (int k = 1; k <= log_a.radius(); ++k) {
        const int idx = side < 0 ? -k : k;
        out[static_cast<std::size_t>(idx + log_a.radius())] = log_a.coeff(idx);
    }
    if (include_zero)
        out[static_cast<std::size_t>(log_a.radius())] = log_a.coeff(0);
    return FourierSymbol(log_a.radius(), std::move(out));
}

double grid_residual(const FourierSymbol& a, const FourierSymbol& minus,
                     const FourierSymbol& plus) {
    const std::size_t n = fft::next_pow2(std::max<std::size_t>(
        64, 4 * static_cast<std::size_t>(
                std::max({a.radius(), minus.radius(), plus.radius()})) + 2));
    const auto va = circle_samples(a, n);
    const auto vm = circle_samples(minus, n);
    const auto vp = circle_samples(plus, n);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        worst = std::max(worst, std::abs(va[i] - vm[i] * vp[i]));
    return worst;
}

WienerHopfFactors factor_once(const FourierSymbol& a, int out_radius, double tol) {
    const SpectralResult log_res = log_symbol(a, out_radius);
    const FourierSymbol& g = log_res.symbol;

    WienerHopfFactors f;
    f.input = a;
    f.log_coeffs = g;
    f.out_radius = out_radius;
    f.tol = tol;
    f.alias_warning = log_res.alias_warning;

    const FourierSymbol g_minus = half_log(g, -1, false);
    const FourierSymbol g_plus = half_log(g, +1, true);
    f.a_minus = project_half(exp_symbol(g_minus, out_radius).symbol, -1);
    f.a_plus = project_half(exp_symbol(g_plus, out_radius).symbol, +1);
    f.a_minus_inv = project_half(exp_symbol(scale(g_minus, cplx(-1.0)), out_radius).symbol, -1);
    f.a_plus_inv = project_half(exp_symbol(scale(g_plus, cplx(-1.0)), out_radius).symbol, +1);
    f.b = truncate(multiply(f.a_minus, f.a_plus_inv), out_radius);
    f.c = truncate(multiply(f.a_minus_inv, f.a_plus), out_radius);

    f.g_const = std::exp(g.coeff(0));
    cplx e_sum(0.0);
    for (int k = 1; k <= g.radius(); ++k)
        e_sum += static_cast<double>(k) * g.coeff(k) * g.coeff(-k);
    f.e_const = std::exp(e_sum);
    f.e_tail_term = std::abs(static_cast<double>(g.radius()) * g.coeff(g.radius()) *
                             g.coeff(-g.radius()));
    f.e_tail_warning = f.e_tail_term > 1e-13 * std::abs(e_sum);

    f.residual = grid_residual(a, f.a_minus, f.a_plus);
    return f;
}

} // namespace

WienerHopfFactors wiener_hopf(const FourierSymbol& a, int out_radius, double tol) {
    if (out_radius <= 0) throw std::invalid_argument("factor radius must be positive");
    WienerHopfFactors f = factor_once(a, out_radius, tol);
    if (f.residual > tol) {
        f = factor_once(a, 2 * out_radius, tol);
        if (f.residual > tol) throw ResidualTooLarge(f.residual, tol);
    }
    return f;
}

WienerHopfFactors wiener_hopf(const FourierSymbol& a) {
    return wiener_hopf(a, 4 * std::max(a.radius(), 1));
}

cplx g_constant(const WienerHopfFactors& f) { return f.g_const; }

cplx g_constant(const FourierSymbol& a) { return wiener_hopf(a).g_const; }

EConstReport e_constant(const WienerHopfFactors& f) {
    return {f.e_const, f.e_tail_term, f.e_tail_warning};
}

GBc g_of_b_and_c(const WienerHopfFactors& f) {
    // route 1: zeroth log coefficient of the derived symbols themselves
    const int probe_radius = std::max(4, f.out_radius / 4);
    const cplx g_b_direct = std::exp(log_symbol(f.b, probe_radius).symbol.coeff(0));
    const cplx g_c_direct = std::exp(log_symbol(f.c, probe_radius).symbol.coeff(0));

    // route 2: ratio identities; G(a_+) is the constant coefficient of a_+
    // and G(a_-) = 1 under the normalization here
    const cplx g_plus = f.a_plus.coeff(0);
    const cplx g_minus = f.a_minus.coeff(0);
    const cplx g_b_ratio = f.g_const / (g_plus * g_plus);
    const cplx g_c_ratio = f.g_const / (g_minus * g_minus);

    const double rel_b = std::abs(g_b_direct - g_b_ratio) / std::max(std::abs(g_b_ratio), 1e-300);
    const double rel_c = std::abs(g_c_direct - g_c_ratio) / std::max(std::abs(g_c_ratio), 1e-300);
    if (rel_b > 1e-10 || rel_c > 1e-10)
        throw InconsistentRoutes(
            "log-coefficient and ratio routes for G(b)/G(c) disagree: rel errors " +
            std::to_string(rel_b) + ", " + std::to_string(rel_c));
    return {g_b_ratio, g_c_ratio};
}

} // namespace szego
