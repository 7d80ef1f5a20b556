#include "szego/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "szego/errors.hpp"
#include "szego/fft.hpp"

namespace szego {

namespace {

constexpr double kPi = std::numbers::pi;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Grid size for sampling: power of two, oversampled 8x past both the input
// support and the requested output radius.
std::size_t sampling_grid(int in_radius, int out_radius) {
    const std::size_t need = std::max<std::size_t>(
        64, 8 * static_cast<std::size_t>(std::max({in_radius, out_radius, 1})));
    return fft::next_pow2(need);
}

// Forward DFT of the samples, divided by N, read out at |k| <= out_radius.
SpectralResult coeffs_from_samples(std::vector<cplx> samples, int out_radius) {
    const std::size_t n = samples.size();
    fft::transform(samples, false);
    std::vector<cplx> coeffs(2 * static_cast<std::size_t>(out_radius) + 1);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (int k = -out_radius; k <= out_radius; ++k) {
        const std::size_t idx =
            static_cast<std::size_t>((k % static_cast<int>(n) + static_cast<int>(n)) %
                                     static_cast<int>(n));
        coeffs[static_cast<std::size_t>(k + out_radius)] = samples[idx] * inv_n;
    }
    SpectralResult res{FourierSymbol(out_radius, std::move(coeffs)), 0.0, false};
    double max_abs = 0.0;
    for (int k = -out_radius; k <= out_radius; ++k)
        max_abs = std::max(max_abs, std::abs(res.symbol.coeff(k)));
    const double edge = std::max(std::abs(res.symbol.coeff(out_radius)),
                                 std::abs(res.symbol.coeff(-out_radius)));
    res.boundary_ratio = max_abs > 0.0 ? edge / max_abs : 0.0;
    res.alias_warning = res.boundary_ratio > 1e-10;
    return res;
}

// Winding number from a closed loop of samples; increments must stay below
// pi in magnitude and the total must land on an integer multiple of 2 pi.
int winding_from_samples(const std::vector<cplx>& v, double abs_floor) {
    double min_abs = std::abs(v[0]);
    for (const auto& z : v) min_abs = std::min(min_abs, std::abs(z));
    if (!(min_abs > abs_floor)) throw NearZeroOnCircle(min_abs);

    const double jump_limit = kPi * (1.0 - 1e-6);
    double total = 0.0;
    const std::size_t n = v.size();
    for (std::size_t m = 0; m < n; ++m) {
        const cplx ratio = v[(m + 1) % n] / v[m];
        const double d = std::arg(ratio);
        if (std::abs(d) >= jump_limit) throw BranchAmbiguity(d);
        total += d;
    }
    const double raw = total / (2.0 * kPi);
    const double rounded = std::round(raw);
    if (std::abs(raw - rounded) > 1e-6) throw NonIntegerWinding(raw);
    return static_cast<int>(rounded);
}

// log samples with continuously unwrapped argument; requires winding 0.
std::vector<cplx> log_samples(const std::vector<cplx>& v, double abs_floor) {
    const int index = winding_from_samples(v, abs_floor);
    if (index != 0) throw NonzeroIndex(index);
    std::vector<cplx> out(v.size());
    double arg = std::arg(v[0]);
    for (std::size_t m = 0; m < v.size(); ++m) {
        if (m > 0) arg += std::arg(v[m] / v[m - 1]);
        out[m] = cplx(std::log(std::abs(v[m])), arg);
    }
    return out;
}

} // namespace

FourierSymbol::FourierSymbol(int radius, std::vector<cplx> coeffs)
    : radius_(radius), coeffs_(std::move(coeffs)) {
    if (radius_ < 0) throw std::invalid_argument("negative symbol radius");
    if (coeffs_.size() != 2 * static_cast<std::size_t>(radius_) + 1)
        throw std::invalid_argument("coefficient array size does not match radius");
    for (const auto& z : coeffs_)
        if (!finite(z)) throw std::invalid_argument("non-finite Fourier coefficient");
}

FourierSymbol FourierSymbol::constant(cplx c) {
    return FourierSymbol(0, {c});
}

FourierSymbol FourierSymbol::monomial(int k, cplx c) {
    const int r = std::abs(k);
    std::vector<cplx> coeffs(2 * static_cast<std::size_t>(r) + 1, cplx(0.0));
    coeffs[static_cast<std::size_t>(k + r)] = c;
    return FourierSymbol(r, std::move(coeffs));
}

FourierSymbol FourierSymbol::from_coeffs(const std::map<int, cplx>& coeffs) {
    int r = 0;
    for (const auto& [k, v] : coeffs) r = std::max(r, std::abs(k));
    std::vector<cplx> arr(2 * static_cast<std::size_t>(r) + 1, cplx(0.0));
    for (const auto& [k, v] : coeffs) arr[static_cast<std::size_t>(k + r)] = v;
    return FourierSymbol(r, std::move(arr));
}

cplx evaluate(const FourierSymbol& a, double theta) {
    cplx sum(0.0);
    for (int k = -a.radius(); k <= a.radius(); ++k)
        sum += a.coeff(k) * std::polar(1.0, static_cast<double>(k) * theta);
    return sum;
}

FourierSymbol multiply(const FourierSymbol& a, const FourierSymbol& b) {
    const int r = a.radius() + b.radius();
    std::vector<cplx> out(2 * static_cast<std::size_t>(r) + 1, cplx(0.0));
    for (int j = -a.radius(); j <= a.radius(); ++j) {
        const cplx aj = a.coeff(j);
        if (aj == cplx(0.0)) continue;
        for (int m = -b.radius(); m <= b.radius(); ++m)
            out[static_cast<std::size_t>(j + m + r)] += aj * b.coeff(m);
    }
    return FourierSymbol(r, std::move(out));
}

FourierSymbol add(const FourierSymbol& a, const FourierSymbol& b) {
    const int r = std::max(a.radius(), b.radius());
    std::vector<cplx> out(2 * static_cast<std::size_t>(r) + 1);
    for (int k = -r; k <= r; ++k)
        out[static_cast<std::size_t>(k + r)] = a.coeff(k) + b.coeff(k);
    return FourierSymbol(r, std::move(out));
}

FourierSymbol subtract(const FourierSymbol& a, const FourierSymbol& b) {
    return add(a, scale(b, cplx(-1.0)));
}

FourierSymbol scale(const FourierSymbol& a, cplx s) {
    std::vector<cplx> out = a.raw();
    for (auto& z : out) z *= s;
    return FourierSymbol(a.radius(), std::move(out));
}

double wiener_norm(const FourierSymbol& a) {
    double sum = 0.0;
    for (const auto& z : a.raw()) sum += std::abs(z);
    return sum;
}

FourierSymbol truncate(const FourierSymbol& a, int n) {
    if (n < 0) throw std::invalid_argument("truncation order must be nonnegative");
    const int r = std::min(n, a.radius());
    std::vector<cplx> out(2 * static_cast<std::size_t>(r) + 1);
    for (int k = -r; k <= r; ++k) out[static_cast<std::size_t>(k + r)] = a.coeff(k);
    return FourierSymbol(r, std::move(out));
}

FourierSymbol reflect(const FourierSymbol& a) {
    std::vector<cplx> out(a.raw().rbegin(), a.raw().rend());
    return FourierSymbol(a.radius(), std::move(out));
}

FourierSymbol conj_symbol(const FourierSymbol& a) {
    std::vector<cplx> out(a.raw().rbegin(), a.raw().rend());
    for (auto& z : out) z = std::conj(z);
    return FourierSymbol(a.radius(), std::move(out));
}

FourierSymbol times_tk(const FourierSymbol& a, int kappa) {
    const int r = a.radius() + std::abs(kappa);
    std::vector<cplx> out(2 * static_cast<std::size_t>(r) + 1, cplx(0.0));
    for (int k = -a.radius(); k <= a.radius(); ++k)
        out[static_cast<std::size_t>(k + kappa + r)] = a.coeff(k);
    return FourierSymbol(r, std::move(out));
}

std::vector<cplx> circle_samples(const FourierSymbol& a, std::size_t n) {
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("sample count must be a power of two");
    if (n <= 2 * static_cast<std::size_t>(a.radius()))
        throw std::invalid_argument("sample count must exceed twice the radius");
    std::vector<cplx> x(n, cplx(0.0));
    for (int k = -a.radius(); k <= a.radius(); ++k) {
        const std::size_t idx =
            static_cast<std::size_t>((k % static_cast<int>(n) + static_cast<int>(n)) %
                                     static_cast<int>(n));
        x[idx] += a.coeff(k);
    }
    // values are the unscaled inverse transform of the coefficient array
    fft::transform(x, true);
    for (auto& z : x) z *= static_cast<double>(n);
    return x;
}

int cauchy_index(const FourierSymbol& a, int grid_size, double abs_floor) {
    if (grid_size <= 0) throw std::invalid_argument("grid size must be positive");
    std::vector<cplx> v(static_cast<std::size_t>(grid_size));
    for (int m = 0; m < grid_size; ++m)
        v[static_cast<std::size_t>(m)] =
            evaluate(a, 2.0 * kPi * static_cast<double>(m) / static_cast<double>(grid_size));
    return winding_from_samples(v, abs_floor);
}

SpectralResult log_symbol(const FourierSymbol& a, int out_radius) {
    if (out_radius <= 0) throw std::invalid_argument("output radius must be positive");
    const std::size_t n = sampling_grid(a.radius(), out_radius);
    const std::vector<cplx> v = circle_samples(a, n);
    return coeffs_from_samples(log_samples(v, 1e-12), out_radius);
}

SpectralResult exp_symbol(const FourierSymbol& g, int out_radius) {
    if (out_radius <= 0) throw std::invalid_argument("output radius must be positive");
    const std::size_t n = sampling_grid(g.radius(), out_radius);
    std::vector<cplx> v = circle_samples(g, n);
    for (auto& z : v) z = std::exp(z);
    return coeffs_from_samples(std::move(v), out_radius);
}

} // namespace szego
