#pragma once

#include <span>
#include <vector>

#include "szego/nfunction.hpp"
#include "szego/symbol.hpp"
#include "szego/weights.hpp"

namespace szego {

enum class IndexSet { naturals, nonneg }; // N starts at 1, Z_+ at 0

/// A weighted Orlicz sequence space: N-function, weight, index set.
struct OrliczSpaceSpec {
    NFunction f;
    WeightSeq w;
    IndexSet index_set = IndexSet::nonneg;

    // sequence position i corresponds to index k = i (Z_+) or k = i+1 (N)
    std::size_t first_index() const { return index_set == IndexSet::naturals ? 1 : 0; }
};

// sum over the sequence of Phi(|c_i| w_i / lambda); c is finitely supported
// by construction (a span), so the sum is exact.
double modular(std::span<const cplx> c, const OrliczSpaceSpec& spec, double lambda);

// inf{lambda > 0 : modular(c, lambda) <= 1} by bracketing and bisection to
// relative width 1e-12; zero sequences give 0.
double luxemburg_norm(std::span<const cplx> c, const OrliczSpaceSpec& spec);

/// Parts of the combined Wiener + Fourier-Orlicz norm of a symbol.
struct FlNormReport {
    double wiener = 0.0;
    double minus_part = 0.0; // {a_{-k}}_{k in N} in l^Phi_phi(N)
    double plus_part = 0.0;  // {a_k}_{k in Z_+} in l^Psi_psi(Z_+)
    double total = 0.0;      // wiener + minus_part + plus_part

    double fl_part() const { return minus_part + plus_part; }
};

FlNormReport fl_norm(const FourierSymbol& a, const NFunction& Phi, const NFunction& Psi,
                     const WeightSeq& phi, const WeightSeq& psi);

struct ClassMembership {
    double modular_sum = 0.0; // at lambda = 1
    bool member = true;       // always true for finitely supported symbols
};

ClassMembership class_membership(const FourierSymbol& a, const NFunction& Phi,
                                 const NFunction& Psi, const WeightSeq& phi,
                                 const WeightSeq& psi);

// ||a - a^{(n)}|| in the Fourier-Orlicz part of the norm, per n; reaches 0
// once n covers the support.
std::vector<double> tail_norm_series(const FourierSymbol& a, const NFunction& Phi,
                                     const NFunction& Psi, const WeightSeq& phi,
                                     const WeightSeq& psi,
                                     const std::vector<int>& n_list);

struct AlgebraBound {
    double lhs = 0.0; // ||ab|| in the combined norm
    double rhs = 0.0; // (1 + 2 C_phi + 2 C_psi) ||a|| ||b||
    bool holds = false;
};

// Banach-algebra inequality with the doubling constants from class_w_check
// (analytic 2^alpha for power weights). Throws WeightNotInW when a weight
// fails the class check.
AlgebraBound algebra_bound_check(const FourierSymbol& a, const FourierSymbol& b,
                                 const NFunction& Phi, const NFunction& Psi,
                                 const WeightSeq& phi, const WeightSeq& psi);

} // namespace szego
