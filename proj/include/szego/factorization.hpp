#pragma once

#include <complex>

#include "szego/symbol.hpp"

namespace szego {

/// Wiener-Hopf factorization data for a nonvanishing index-zero symbol:
/// a = a_minus * a_plus with a_minus^{+-1} supported on k <= 0 and
/// a_plus^{+-1} on k >= 0. Normalization: the constant log coefficient goes
/// to a_plus, so a_minus(inf) = 1 and G(a_minus) = 1 exactly.
struct WienerHopfFactors {
    FourierSymbol input; // the symbol that was factorized
    FourierSymbol a_minus, a_plus, a_minus_inv, a_plus_inv;
    FourierSymbol b; // a_minus * a_plus_inv
    FourierSymbol c; // a_minus_inv * a_plus
    FourierSymbol log_coeffs;
    cplx g_const{1.0, 0.0}; // G(a) = exp((log a)_0)
    cplx e_const{1.0, 0.0}; // E(a) = exp(sum k (log a)_k (log a)_{-k})
    double e_tail_term = 0.0;  // magnitude of the last retained E-series term
    bool e_tail_warning = false;
    double residual = 0.0; // max over the grid of |a - a_minus a_plus|
    int out_radius = 0;
    double tol = 0.0;
    bool alias_warning = false; // from the log coefficient extraction
};

// Factorize via the coefficient split of log a; factors, their inverses and
// the derived b, c are truncated at out_radius. When the grid residual
// exceeds tol the radius is doubled once before ResidualTooLarge is thrown.
// Throws NonzeroIndex / NearZeroOnCircle for inadmissible symbols.
WienerHopfFactors wiener_hopf(const FourierSymbol& a, int out_radius, double tol = 1e-10);

// Convenience overload: out_radius = 4 * max(radius, 1).
WienerHopfFactors wiener_hopf(const FourierSymbol& a);

cplx g_constant(const WienerHopfFactors& f);
cplx g_constant(const FourierSymbol& a); // factorize, then read G

struct EConstReport {
    cplx value{1.0, 0.0};
    double last_term = 0.0; // |K (log a)_K (log a)_{-K}|
    bool tail_warning = false;
};

EConstReport e_constant(const WienerHopfFactors& f);

struct GBc {
    cplx g_b, g_c;
};

// G(b) and G(c) by two routes (the zeroth log coefficient of the materialized
// derived symbols, and the ratio identities G(a)/G(a_+)^2, G(a)/G(a_-)^2);
// throws InconsistentRoutes when they disagree beyond 1e-10 relative.
GBc g_of_b_and_c(const WienerHopfFactors& f);

} // namespace szego
