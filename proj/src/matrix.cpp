#include "szego/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "szego/errors.hpp"

namespace szego {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = cplx(1.0);
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    CMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx(0.0)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += aik * o(k, j);
        }
    }
    return out;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    CMatrix out = *this;
    for (std::size_t i = 0; i < d_.size(); ++i) out.d_[i] += o.d_[i];
    return out;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    CMatrix out = *this;
    for (std::size_t i = 0; i < d_.size(); ++i) out.d_[i] -= o.d_[i];
    return out;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

CMatrix CMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw std::invalid_argument("block exceeds matrix bounds");
    CMatrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : d_) m = std::max(m, std::abs(z));
    return m;
}

LuFactors lu_factor(CMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("LU requires a square matrix");
    const std::size_t n = a.rows();
    LuFactors f;
    f.max_entry = a.max_abs();
    f.perm.resize(n);
    f.min_pivot = f.max_entry;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(a(r, col));
            if (v > best) { best = v; piv = r; }
        }
        f.perm[col] = piv;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
            f.perm_sign = -f.perm_sign;
        }
        const cplx pivot = a(col, col);
        f.min_pivot = std::min(f.min_pivot, std::abs(pivot));
        if (std::abs(pivot) <= 1e-13 * f.max_entry) {
            f.singular = true;
            // keep factoring the rest so perm stays a complete record
            continue;
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const cplx m = a(r, col) / pivot;
            a(r, col) = m;
            if (m == cplx(0.0)) continue;
            for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= m * a(col, j);
        }
    }
    f.lu = std::move(a);
    return f;
}

std::vector<cplx> lu_solve(const LuFactors& f, std::vector<cplx> rhs) {
    if (f.singular) throw SingularMatrix("solve on a singular LU factorization");
    const std::size_t n = f.lu.rows();
    if (rhs.size() != n) throw std::invalid_argument("rhs size mismatch");
    for (std::size_t i = 0; i < n; ++i)
        if (f.perm[i] != i) std::swap(rhs[i], rhs[f.perm[i]]);
    for (std::size_t i = 1; i < n; ++i) {
        cplx s = rhs[i];
        for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * rhs[j];
        rhs[i] = s;
    }
    for (std::size_t ii = n; ii-- > 0;) {
        cplx s = rhs[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= f.lu(ii, j) * rhs[j];
        rhs[ii] = s / f.lu(ii, ii);
    }
    return rhs;
}

CMatrix lu_solve_many(const LuFactors& f, const CMatrix& rhs) {
    const std::size_t n = f.lu.rows();
    if (rhs.rows() != n) throw std::invalid_argument("rhs rows mismatch");
    CMatrix out(n, rhs.cols());
    std::vector<cplx> col(n);
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
        for (std::size_t i = 0; i < n; ++i) col[i] = rhs(i, j);
        const std::vector<cplx> x = lu_solve(f, col);
        for (std::size_t i = 0; i < n; ++i) out(i, j) = x[i];
    }
    return out;
}

CMatrix inverse(const CMatrix& a) {
    const LuFactors f = lu_factor(a);
    if (f.singular) throw SingularMatrix("matrix is numerically singular");
    return lu_solve_many(f, CMatrix::identity(a.rows()));
}

cplx det_value(const CMatrix& a) {
    const LuFactors f = lu_factor(a);
    if (f.singular) return cplx(0.0);
    cplx det(static_cast<double>(f.perm_sign), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) det *= f.lu(i, i);
    return det;
}

double opnorm_l2(const CMatrix& a, double tol) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    const CMatrix ah = a.adjoint();
    const std::size_t n = a.cols();

    // deterministic pseudo-random start vector to avoid orthogonal bad luck
    std::vector<cplx> v(n);
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    double vnorm2 = 0.0;
    for (auto& z : v) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        const double re = static_cast<double>(state >> 11) * 0x1.0p-53 - 0.5;
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        const double im = static_cast<double>(state >> 11) * 0x1.0p-53 - 0.5;
        z = cplx(re, im);
        vnorm2 += std::norm(z);
    }
    for (auto& z : v) z /= std::sqrt(vnorm2);

    auto apply = [&](const CMatrix& m, const std::vector<cplx>& x) {
        std::vector<cplx> y(m.rows(), cplx(0.0));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            cplx s(0.0);
            for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * x[j];
            y[i] = s;
        }
        return y;
    };

    double sigma = 0.0;
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<cplx> w = apply(a, v);
        double wn2 = 0.0;
        for (const auto& z : w) wn2 += std::norm(z);
        if (wn2 == 0.0) return 0.0;
        std::vector<cplx> u = apply(ah, w);
        double un2 = 0.0;
        for (const auto& z : u) un2 += std::norm(z);
        const double next = std::sqrt(wn2); // ||Av|| with ||v|| = 1
        if (un2 == 0.0) return next;
        const double un = std::sqrt(un2);
        for (std::size_t i = 0; i < n; ++i) v[i] = u[i] / un;
        if (iter > 0 && std::abs(next - sigma) <= tol * std::max(1.0, next)) {
            sigma = next;
            break;
        }
        sigma = next;
    }
    return sigma;
}

} // namespace szego
