#pragma once

#include <vector>

namespace szego {

/// A convex Young function Phi(x) = integral of a density p over [0, x].
/// Two kinds: the analytic power family Phi(x) = x^p / p (density t^{p-1},
/// p > 1), and a tabulated density given as a nondecreasing piecewise-linear
/// sample table on [0, t_max].
class NFunction {
public:
    enum class Kind { power, tabulated };

    static NFunction power(double p);
    // grid strictly increasing starting at 0, density nondecreasing with
    // density[0] = 0 and positive from some breakpoint on.
    static NFunction tabulated(std::vector<double> grid, std::vector<double> density);

    Kind kind() const { return kind_; }
    double exponent() const { return p_; } // power kind only
    double t_max() const;                  // tabulated kind only

    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& density() const { return density_; }

    // density value p(x) (piecewise-linear interpolation for tabulated kind)
    double density_at(double x) const;

private:
    NFunction() = default;
    Kind kind_ = Kind::power;
    double p_ = 2.0;
    std::vector<double> grid_, density_, integral_; // tabulated tables
    friend double phi_value(const NFunction&, double);
};

// Phi(x); throws OutOfRange when x > t_max for the tabulated kind.
double phi_value(const NFunction& f, double x);

// Unique x with Phi(x) = y (closed form for power; monotone bisection to
// relative tolerance 1e-12 for tabulated). Throws OutOfRange when y exceeds
// Phi(t_max).
double phi_inverse(const NFunction& f, double y);

// The complementary N-function built from the generalized inverse density
// q(s) = sup{t : p(t) <= s}. power(p) -> power(p/(p-1)); tabulated densities
// get a fresh tabulated result. Throws DegenerateDensity when the density is
// constant over its whole positive range.
NFunction complementary(const NFunction& f);

// max over x = 2^-j, j = 1..depth, of Phi(2x)/Phi(x); finite-sample estimate
// of the Delta_2^0 constant. Stops descending when Phi(x) underflows.
double delta2_zero_estimate(const NFunction& f, int depth);

} // namespace szego
