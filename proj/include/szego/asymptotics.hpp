#pragma once

#include <vector>

#include "szego/factorization.hpp"
#include "szego/matrix.hpp"
#include "szego/toeplitz.hpp"
#include "szego/weights.hpp"

namespace szego {

/// Predicted determinant value, assembled factor by factor. The log form is
/// always valid; `leading` is materialized when representable. A singular
/// correction determinant gives leading = 0.
struct Prediction {
    int n = 0;
    int kappa = 0;
    cplx leading{0.0, 0.0};
    int sign = 1;                   // (-1)^{(n+|kappa|)|kappa|}
    cplx g_power{1.0, 0.0};         // G(a)^{n+1}
    cplx e_const{1.0, 0.0};
    cplx index_factor{1.0, 0.0};    // G(c)^{|kappa|} (kappa<0), G(b)^{|kappa|} (kappa>0)
    cplx correction_det{1.0, 0.0};
    double log_abs = 0.0;           // log |leading|
    double phase = 0.0;             // arg leading in (-pi, pi]
};

// G(a)^{n+1} E(a), exponent accumulated in log space.
cplx szego_prediction(const WienerHopfFactors& f, int n);

// Returns factors whose derived symbols b, c reach at least the given
// radius, refactorizing from the stored input when needed.
WienerHopfFactors ensure_radius(const WienerHopfFactors& f, int radius);

// kappa x kappa Toeplitz-structured matrix of b (sign_of_kappa < 0, entries
// b_{n+1+i-j}) or c (sign_of_kappa > 0, entries c_{-n-1-i+j}) coefficients.
// Refactorizes once with a doubled radius when the stored factors are too
// short; then throws RadiusTooSmall.
CMatrix correction_matrix(const WienerHopfFactors& f, int n, int kappa,
                          int sign_of_kappa);

// Full prediction for D_n[a t^kappa], kappa != 0 (signed).
Prediction winding_prediction(const WienerHopfFactors& f, int n, int kappa);

// kappa = 0 prediction record (sign, index factor and correction all one).
Prediction szego_prediction_record(const WienerHopfFactors& f, int n);

/// Measured determinants against predictions over a sweep in n.
struct RemainderSeries {
    int kappa = 0;
    std::vector<int> n_values;
    std::vector<LogDet> exact;
    std::vector<Prediction> predicted;
    std::vector<double> delta;          // delta_1(n) for kappa = 0, rho(n) otherwise
    std::vector<double> normalized;     // psi_n rho / phi_n rho / delta_1
    std::vector<double> normalized_alt; // the finer weight-product normalization
    std::vector<bool> below_floor;
    double fitted_exponent = 0.0; // NaN when no fit was possible
    int noise_floor_hits = 0;
    bool all_below_floor = false;
};

// Extraction rule: delta_1(n) = |D_n(a)/(G^{n+1}E) - 1| for kappa = 0;
// otherwise rho(n) = |D_n[a t^kappa]/(G^{n+1}E sign index) - det(correction)|.
// Points below fit_floor * per-n scale are excluded from the exponent fit.
RemainderSeries remainder_series(const FourierSymbol& a, const WienerHopfFactors& f,
                                 int kappa, const std::vector<int>& n_list,
                                 const WeightSeq& phi, const WeightSeq& psi,
                                 double fit_floor = 1e-13);

} // namespace szego
