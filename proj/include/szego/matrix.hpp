#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace szego {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major, value semantics.
class CMatrix {
public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), d_(rows * cols, cplx(0.0)) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

    CMatrix operator*(const CMatrix& o) const;
    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;

    CMatrix adjoint() const;
    CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    // Largest absolute entry.
    double max_abs() const;

    bool operator==(const CMatrix& o) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<cplx> d_;
};

/// Partial-pivoting LU decomposition of a square matrix, kept packed in lu.
struct LuFactors {
    CMatrix lu;
    std::vector<std::size_t> perm; // row swap targets per elimination step
    int perm_sign = 1;
    double max_entry = 0.0; // of the input matrix
    double min_pivot = 0.0;
    // Pivot at or below 1e-13 * max_entry (numerically rank deficient).
    bool singular = false;
};

LuFactors lu_factor(CMatrix a);

// Back/forward substitution; requires !f.singular.
std::vector<cplx> lu_solve(const LuFactors& f, std::vector<cplx> rhs);
CMatrix lu_solve_many(const LuFactors& f, const CMatrix& rhs);

// Full inverse via LU solves; throws SingularMatrix.
CMatrix inverse(const CMatrix& a);

// Plain determinant value of a small matrix (via LU).
cplx det_value(const CMatrix& a);

// l2 operator norm (largest singular value) via power iteration on A^H A.
double opnorm_l2(const CMatrix& a, double tol = 1e-10);

} // namespace szego
