#include "szego/nfunction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "szego/errors.hpp"

namespace szego {

NFunction NFunction::power(double p) {
    if (!(p > 1.0)) throw std::invalid_argument("power N-function requires p > 1");
    NFunction f;
    f.kind_ = Kind::power;
    f.p_ = p;
    return f;
}

NFunction NFunction::tabulated(std::vector<double> grid, std::vector<double> density) {
    if (grid.size() < 2 || grid.size() != density.size())
        throw std::invalid_argument("density table needs matching arrays, length >= 2");
    if (grid.front() != 0.0) throw std::invalid_argument("density grid must start at 0");
    if (density.front() != 0.0) throw std::invalid_argument("density must vanish at 0");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("density grid must be strictly increasing");
        if (density[i] < density[i - 1])
            throw std::invalid_argument("density must be nondecreasing");
        if (!std::isfinite(grid[i]) || !std::isfinite(density[i]))
            throw std::invalid_argument("non-finite density table entry");
    }
    if (density.back() <= 0.0)
        throw std::invalid_argument("density must become positive");
    NFunction f;
    f.kind_ = Kind::tabulated;
    f.grid_ = std::move(grid);
    f.density_ = std::move(density);
    // cumulative trapezoid, exact per cell for a piecewise-linear density
    f.integral_.assign(f.grid_.size(), 0.0);
    for (std::size_t i = 1; i < f.grid_.size(); ++i)
        f.integral_[i] = f.integral_[i - 1] +
                         0.5 * (f.density_[i] + f.density_[i - 1]) *
                             (f.grid_[i] - f.grid_[i - 1]);
    return f;
}

double NFunction::t_max() const {
    if (kind_ != Kind::tabulated)
        throw std::logic_error("t_max is defined for the tabulated kind only");
    return grid_.back();
}

double NFunction::density_at(double x) const {
    if (x < 0.0) throw OutOfRange("density argument must be nonnegative");
    if (kind_ == Kind::power) return std::pow(x, p_ - 1.0);
    if (x > grid_.back()) throw OutOfRange("density argument beyond table range");
    const auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
    if (it == grid_.begin()) return density_.front();
    const std::size_t i = static_cast<std::size_t>(it - grid_.begin());
    if (i == grid_.size()) return density_.back();
    const double t0 = grid_[i - 1], t1 = grid_[i];
    const double w = (x - t0) / (t1 - t0);
    return density_[i - 1] * (1.0 - w) + density_[i] * w;
}

double phi_value(const NFunction& f, double x) {
    if (x < 0.0) throw OutOfRange("N-function argument must be nonnegative");
    if (f.kind() == NFunction::Kind::power) return std::pow(x, f.exponent()) / f.exponent();
    if (x > f.t_max()) throw OutOfRange("N-function argument beyond table range");
    const auto& grid = f.grid();
    // largest breakpoint at or below x (grid starts at 0, so lo >= 0)
    const auto it = std::upper_bound(grid.begin(), grid.end(), x);
    const std::size_t lo = static_cast<std::size_t>(it - grid.begin()) - 1;
    const double base = f.integral_[lo];
    if (x == grid[lo]) return base;
    return base + 0.5 * (f.density()[lo] + f.density_at(x)) * (x - grid[lo]);
}

double phi_inverse(const NFunction& f, double y) {
    if (y < 0.0) throw OutOfRange("N-function value must be nonnegative");
    if (y == 0.0) return 0.0;
    if (f.kind() == NFunction::Kind::power)
        return std::pow(f.exponent() * y, 1.0 / f.exponent());
    const double phimax = phi_value(f, f.t_max());
    if (y > phimax) throw OutOfRange("value beyond the represented range of Phi");
    double lo = 0.0, hi = f.t_max();
    while (hi - lo > 1e-12 * hi) {
        const double mid = 0.5 * (lo + hi);
        (phi_value(f, mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

NFunction complementary(const NFunction& f) {
    if (f.kind() == NFunction::Kind::power) {
        const double p = f.exponent();
        return NFunction::power(p / (p - 1.0));
    }
    const auto& grid = f.grid();
    const auto& dens = f.density();
    // degenerate: density never increases after becoming positive
    double first_pos = 0.0;
    for (std::size_t i = 0; i < dens.size(); ++i)
        if (dens[i] > 0.0) { first_pos = dens[i]; break; }
    if (dens.back() <= first_pos)
        throw DegenerateDensity(
            "density is constant over its positive range; the complementary "
            "density is unbounded at that level");

    // q(s) = sup{t : p(t) <= s} on a fresh uniform s-grid over [0, p(t_max)].
    // Flat segments of p resolve to their right endpoint; steep segments make
    // q flat across the corresponding s-range.
    const double s_max = dens.back();
    const std::size_t cells = std::max<std::size_t>(4 * grid.size(), 256);
    std::vector<double> s_grid(cells + 1), q(cells + 1);
    for (std::size_t j = 0; j <= cells; ++j) {
        const double s = s_max * static_cast<double>(j) / static_cast<double>(cells);
        s_grid[j] = s;
        // rightmost t with p(t) <= s
        std::size_t i = grid.size() - 1;
        while (i > 0 && dens[i] > s) --i;
        double t = grid[i];
        if (i + 1 < grid.size() && dens[i + 1] > dens[i] && s >= dens[i] && s < dens[i + 1]) {
            const double w = (s - dens[i]) / (dens[i + 1] - dens[i]);
            t = grid[i] + w * (grid[i + 1] - grid[i]);
        }
        q[j] = t;
    }
    q[0] = 0.0;
    return NFunction::tabulated(std::move(s_grid), std::move(q));
}

double delta2_zero_estimate(const NFunction& f, int depth) {
    if (depth < 4) throw std::invalid_argument("delta2 estimate needs depth >= 4");
    if (f.kind() == NFunction::Kind::power)
        return std::pow(2.0, f.exponent());
    double worst = 0.0;
    for (int j = 1; j <= depth; ++j) {
        const double x = std::ldexp(1.0, -j);
        if (2.0 * x > f.t_max()) continue;
        const double lo = phi_value(f, x);
        if (lo < 1e-300) break;
        worst = std::max(worst, phi_value(f, 2.0 * x) / lo);
    }
    return worst;
}

} // namespace szego
