#pragma once

#include <optional>
#include <vector>

#include "szego/factorization.hpp"
#include "szego/matrix.hpp"
#include "szego/nfunction.hpp"
#include "szego/symbol.hpp"
#include "szego/weights.hpp"

namespace szego {

/// Log-scaled complex determinant: value = exp(log_abs) * e^{i phase},
/// materialized only when representable (log_abs < 700). Exactly singular
/// matrices carry log_abs = -infinity.
struct LogDet {
    double log_abs = 0.0;
    double phase = 0.0; // in (-pi, pi]
    std::optional<cplx> value;

    bool singular() const;
    static LogDet singular_sentinel();
};

// LU-based determinant of an arbitrary square matrix in log scale.
LogDet log_det_matrix(const CMatrix& m);

// (n+1) x (n+1) matrix with entry (j, k) = a_{j-k}.
CMatrix toeplitz_matrix(const FourierSymbol& a, int n);

// Hankel matrix with entry (j, k) = a_{j+k+1}; pass reflect(a) for H(a~),
// whose entries are a_{-j-k-1}.
CMatrix hankel_matrix(const FourierSymbol& a, int rows, int cols);

// D_n(a) = det T_n(a).
LogDet log_det(const FourierSymbol& a, int n);

// det T_n(a t^kappa); the shift moves coefficient indices by kappa.
LogDet shifted_log_det(const FourierSymbol& a, int kappa, int n);

enum class Corner { lower_left, upper_right };

/// kappa x kappa corner block of T_n^{-1}(a): rows n-kappa+1..n against
/// columns 0..kappa-1 (lower_left) or rows 0..kappa-1 against columns
/// n-kappa+1..n (upper_right).
struct CornerMinor {
    int kappa = 0;
    Corner which = Corner::lower_left;
    CMatrix block;
};

CornerMinor corner_minor(const FourierSymbol& a, int n, int kappa, Corner which);

/// Both corner-minor determinant identities against ratios of shifted
/// determinants.
struct JacobiCheck {
    cplx lhs_minus, rhs_minus; // lower-left corner vs D_{n-k}[a t^{-k}] / D_n
    cplx lhs_plus, rhs_plus;   // upper-right corner vs D_{n-k}[a t^{+k}] / D_n
    double max_rel_err = 0.0;
};

JacobiCheck jacobi_check(const FourierSymbol& a, int n, int kappa);

/// Right-hand-side quantities of the truncation estimates (without the
/// unspecified constant) plus the exact l2 norms of the truncated column
/// Q_n T(a) Delta_j and row Delta_j T(a) Q_n.
struct TruncationDecay {
    double bound_col = 0.0; // ||a - a^{(n-j)}||_Fl / psi_{n-j+1}
    double bound_row = 0.0; // ||a - a^{(n-j)}||_Fl / phi_{n-j+1}
    double col_norm_l2 = 0.0;
    double row_norm_l2 = 0.0;
};

TruncationDecay truncation_decay(const FourierSymbol& a, const NFunction& Phi,
                                 const NFunction& Psi, const WeightSeq& phi,
                                 const WeightSeq& psi, int n, int j);

/// l2 operator norms of the Bottcher-Silbermann remainder operators and of
/// the summed Neumann series, measured on big_n x big_n finite sections.
struct BsRemainderNorms {
    double x_norm = 0.0;
    double y_norm = 0.0;
    double series_norm = 0.0;
};

BsRemainderNorms bs_remainder_norms(const WienerHopfFactors& f, int n, int kappa,
                                    int big_n);

// The kappa x kappa leading product that replaces the corner minor in the
// asymptotic analysis: block products of T(a_-^{-1}), T(b) (lower_left) or
// T(a_+^{-1}), T(c) (upper_right) over the corner index ranges.
CMatrix bs_leading_minor(const WienerHopfFactors& f, int n, int kappa, Corner which);

struct SectionProbe {
    int n = 0;
    double inv_norm_l2 = 0.0;
    bool singular = false;
};

// l2 operator norm of T_n^{-1}(a) per n; singular sections are reported
// per-n and the probe continues.
std::vector<SectionProbe> finite_section_probe(const FourierSymbol& a,
                                               const std::vector<int>& n_list);
std::vector<SectionProbe> finite_section_probe(const WienerHopfFactors& f,
                                               const std::vector<int>& n_list);

} // namespace szego
