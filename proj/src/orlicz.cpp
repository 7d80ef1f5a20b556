#include "szego/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "szego/errors.hpp"

namespace szego {

namespace {

// modular that treats out-of-table arguments as +inf, for bracketing only
double modular_or_inf(std::span<const cplx> c, const OrliczSpaceSpec& spec,
                      double lambda) {
    try {
        return modular(c, spec, lambda);
    } catch (const OutOfRange&) {
        return std::numeric_limits<double>::infinity();
    }
}

std::vector<cplx> minus_sequence(const FourierSymbol& a) {
    std::vector<cplx> c(static_cast<std::size_t>(std::max(a.radius(), 0)));
    for (int k = 1; k <= a.radius(); ++k)
        c[static_cast<std::size_t>(k - 1)] = a.coeff(-k);
    return c;
}

std::vector<cplx> plus_sequence(const FourierSymbol& a) {
    std::vector<cplx> c(static_cast<std::size_t>(a.radius()) + 1);
    for (int k = 0; k <= a.radius(); ++k)
        c[static_cast<std::size_t>(k)] = a.coeff(k);
    return c;
}

} // namespace

double modular(std::span<const cplx> c, const OrliczSpaceSpec& spec, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("modular requires lambda > 0");
    const std::size_t k0 = spec.first_index();
    double sum = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double mag = std::abs(c[i]);
        if (mag == 0.0) continue;
        sum += phi_value(spec.f, mag * spec.w.at(k0 + i) / lambda);
    }
    return sum;
}

double luxemburg_norm(std::span<const cplx> c, const OrliczSpaceSpec& spec) {
    const std::size_t k0 = spec.first_index();
    double weighted_sum = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double mag = std::abs(c[i]);
        if (mag > 0.0) weighted_sum += mag * spec.w.at(k0 + i);
    }
    if (weighted_sum == 0.0) return 0.0;

    // lambda_hi guarantees modular <= 1: each argument is at most
    // Phi^{-1}(1) and the arguments sum to at most Phi^{-1}(1), so convexity
    // with Phi(0) = 0 bounds the modular by 1.
    const double inv1 = phi_inverse(spec.f, 1.0);
    double hi = weighted_sum * std::max(1.0, 1.0 / inv1);
    double lo = hi;
    while (lo > 1e-300 && modular_or_inf(c, spec, lo) <= 1.0) {
        hi = lo;
        lo *= 0.5;
    }
    if (lo <= 1e-300) return 0.0;
    while (hi - lo > 1e-12 * hi) {
        const double mid = 0.5 * (lo + hi);
        (modular_or_inf(c, spec, mid) <= 1.0 ? hi : lo) = mid;
    }
    return hi;
}

FlNormReport fl_norm(const FourierSymbol& a, const NFunction& Phi, const NFunction& Psi,
                     const WeightSeq& phi, const WeightSeq& psi) {
    FlNormReport rep;
    rep.wiener = wiener_norm(a);
    const std::vector<cplx> am = minus_sequence(a);
    const std::vector<cplx> ap = plus_sequence(a);
    rep.minus_part = luxemburg_norm(am, {Phi, phi, IndexSet::naturals});
    rep.plus_part = luxemburg_norm(ap, {Psi, psi, IndexSet::nonneg});
    rep.total = rep.wiener + rep.minus_part + rep.plus_part;
    return rep;
}

ClassMembership class_membership(const FourierSymbol& a, const NFunction& Phi,
                                 const NFunction& Psi, const WeightSeq& phi,
                                 const WeightSeq& psi) {
    const std::vector<cplx> am = minus_sequence(a);
    const std::vector<cplx> ap = plus_sequence(a);
    ClassMembership cm;
    cm.modular_sum = (am.empty() ? 0.0 : modular(am, {Phi, phi, IndexSet::naturals}, 1.0)) +
                     modular(ap, {Psi, psi, IndexSet::nonneg}, 1.0);
    cm.member = true;
    return cm;
}

std::vector<double> tail_norm_series(const FourierSymbol& a, const NFunction& Phi,
                                     const NFunction& Psi, const WeightSeq& phi,
                                     const WeightSeq& psi,
                                     const std::vector<int>& n_list) {
    std::vector<double> out;
    out.reserve(n_list.size());
    for (int n : n_list) {
        const FourierSymbol tail = subtract(a, truncate(a, n));
        out.push_back(fl_norm(tail, Phi, Psi, phi, psi).fl_part());
    }
    return out;
}

AlgebraBound algebra_bound_check(const FourierSymbol& a, const FourierSymbol& b,
                                 const NFunction& Phi, const NFunction& Psi,
                                 const WeightSeq& phi, const WeightSeq& psi) {
    constexpr std::size_t kHorizon = 1 << 16;
    const WClassReport wphi = class_w_check(phi, kHorizon);
    const WClassReport wpsi = class_w_check(psi, kHorizon);
    if (!wphi.member) throw WeightNotInW("phi fails the weight-class check");
    if (!wpsi.member) throw WeightNotInW("psi fails the weight-class check");
    const double c_phi = wphi.analytic_c_nu.value_or(wphi.c_nu);
    const double c_psi = wpsi.analytic_c_nu.value_or(wpsi.c_nu);

    AlgebraBound res;
    res.lhs = fl_norm(multiply(a, b), Phi, Psi, phi, psi).total;
    res.rhs = (1.0 + 2.0 * c_phi + 2.0 * c_psi) *
              fl_norm(a, Phi, Psi, phi, psi).total *
              fl_norm(b, Phi, Psi, phi, psi).total;
    res.holds = res.lhs <= res.rhs * (1.0 + 1e-9);
    return res;
}

} // namespace szego
