#pragma once

#include <complex>
#include <map>
#include <vector>

namespace szego {

using cplx = std::complex<double>;

/// A function on the unit circle represented by a finite two-sided Fourier
/// coefficient array over k in [-K, K]. Immutable after construction;
/// coefficient queries outside the stored range return exactly zero.
class FourierSymbol {
public:
    FourierSymbol() : radius_(0), coeffs_(1, cplx(0.0)) {}

    // coeffs.size() must equal 2*radius+1; coeffs[i] holds the coefficient
    // at k = i - radius. All entries must be finite.
    FourierSymbol(int radius, std::vector<cplx> coeffs);

    static FourierSymbol constant(cplx c);
    static FourierSymbol monomial(int k, cplx c = cplx(1.0));
    static FourierSymbol from_coeffs(const std::map<int, cplx>& coeffs);

    int radius() const { return radius_; }

    cplx coeff(int k) const {
        if (k < -radius_ || k > radius_) return cplx(0.0);
        return coeffs_[static_cast<std::size_t>(k + radius_)];
    }

    const std::vector<cplx>& raw() const { return coeffs_; }

    bool operator==(const FourierSymbol& o) const = default;

private:
    int radius_;
    std::vector<cplx> coeffs_;
};

// a(e^{i theta}) as the exact finite sum over the stored coefficients.
cplx evaluate(const FourierSymbol& a, double theta);

// Coefficient convolution realizing the pointwise product; output radius
// is the sum of the input radii.
FourierSymbol multiply(const FourierSymbol& a, const FourierSymbol& b);

FourierSymbol add(const FourierSymbol& a, const FourierSymbol& b);
FourierSymbol subtract(const FourierSymbol& a, const FourierSymbol& b);
FourierSymbol scale(const FourierSymbol& a, cplx s);

// Sum of |a_k|.
double wiener_norm(const FourierSymbol& a);

// Keep coefficients with |k| <= n.
FourierSymbol truncate(const FourierSymbol& a, int n);

// a(1/t): coefficient at k moves to -k.
FourierSymbol reflect(const FourierSymbol& a);

// Pointwise complex conjugate on the circle: coefficients conj(a_{-k}).
FourierSymbol conj_symbol(const FourierSymbol& a);

// a(t) * t^kappa: coefficient index shift (a t^kappa)_k = a_{k-kappa}.
FourierSymbol times_tk(const FourierSymbol& a, int kappa);

// Values a(e^{2 pi i m / n}) for m = 0..n-1, via zero-padded FFT
// (n must be a power of two and > 2*radius).
std::vector<cplx> circle_samples(const FourierSymbol& a, std::size_t n);

// Winding number of theta -> a(e^{i theta}) about 0, accumulated from
// argument increments between consecutive grid points.
// Throws NearZeroOnCircle, BranchAmbiguity, NonIntegerWinding.
int cauchy_index(const FourierSymbol& a, int grid_size, double abs_floor = 1e-12);

/// Result of an FFT-based coefficient extraction. boundary_ratio is the
/// magnitude of the largest kept edge coefficient relative to the largest
/// coefficient overall; alias_warning flags boundary_ratio > 1e-10.
struct SpectralResult {
    FourierSymbol symbol;
    double boundary_ratio = 0.0;
    bool alias_warning = false;
};

// Fourier coefficients of log a for |k| <= out_radius from circle samples
// with continuously unwrapped argument. Requires index 0 and a nonvanishing
// on the grid; throws NonzeroIndex / NearZeroOnCircle / BranchAmbiguity.
SpectralResult log_symbol(const FourierSymbol& a, int out_radius);

// Fourier coefficients of exp g for |k| <= out_radius (sample, exponentiate
// pointwise, transform back).
SpectralResult exp_symbol(const FourierSymbol& g, int out_radius);

} // namespace szego
