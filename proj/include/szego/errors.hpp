#pragma once

#include <stdexcept>
#include <string>

namespace szego {

// Base class for all numerical-precondition failures raised by the library.
// The CLI maps these to exit code 3; config problems use ConfigError (exit 2).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NearZeroOnCircle : public Error {
public:
    explicit NearZeroOnCircle(double min_abs)
        : Error("symbol comes within " + std::to_string(min_abs) +
                " of zero on the circle; winding number is undefined"),
          min_abs(min_abs) {}
    double min_abs;
};

class BranchAmbiguity : public Error {
public:
    explicit BranchAmbiguity(double increment)
        : Error("argument increment " + std::to_string(increment) +
                " reaches pi between grid points; refine the grid"),
          increment(increment) {}
    double increment;
};

class NonIntegerWinding : public Error {
public:
    explicit NonIntegerWinding(double raw)
        : Error("accumulated winding " + std::to_string(raw) +
                " is not close to an integer"),
          raw(raw) {}
    double raw;
};

class NonzeroIndex : public Error {
public:
    explicit NonzeroIndex(int index)
        : Error("symbol has Cauchy index " + std::to_string(index) +
                "; a single-valued logarithm requires index 0"),
          index(index) {}
    int index;
};

class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& msg) : Error(msg) {}
};

class DegenerateDensity : public Error {
public:
    explicit DegenerateDensity(const std::string& msg) : Error(msg) {}
};

class WeightNotInW : public Error {
public:
    explicit WeightNotInW(const std::string& msg) : Error(msg) {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& msg) : Error(msg) {}
};

class ResidualTooLarge : public Error {
public:
    ResidualTooLarge(double residual, double tol)
        : Error("factorization residual " + std::to_string(residual) +
                " exceeds tolerance " + std::to_string(tol) +
                " even after raising the radius"),
          residual(residual), tol(tol) {}
    double residual;
    double tol;
};

class InconsistentRoutes : public Error {
public:
    explicit InconsistentRoutes(const std::string& msg) : Error(msg) {}
};

class RadiusTooSmall : public Error {
public:
    explicit RadiusTooSmall(const std::string& msg) : Error(msg) {}
};

class SeriesDiverging : public Error {
public:
    explicit SeriesDiverging(const std::string& msg) : Error(msg) {}
};

// Invalid experiment configuration (bad JSON, bad shapes, bad n_list, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace szego
