#include "szego/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "szego/errors.hpp"
#include "szego/orlicz.hpp"

namespace szego {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_phase(double phi) {
    phi = std::fmod(phi, 2.0 * kPi);
    if (phi > kPi) phi -= 2.0 * kPi;
    if (phi <= -kPi) phi += 2.0 * kPi;
    return phi;
}

// rows/cols index ranges of the two corner blocks
struct CornerRanges {
    std::size_t row0, col0;
};

CornerRanges corner_ranges(int n, int kappa, Corner which) {
    const std::size_t lo = static_cast<std::size_t>(n - kappa + 1);
    if (which == Corner::lower_left) return {lo, 0};
    return {0, lo};
}

} // namespace

bool LogDet::singular() const { return std::isinf(log_abs) && log_abs < 0.0; }

LogDet LogDet::singular_sentinel() {
    LogDet d;
    d.log_abs = -std::numeric_limits<double>::infinity();
    d.phase = 0.0;
    d.value = cplx(0.0);
    return d;
}

LogDet log_det_matrix(const CMatrix& m) {
    const LuFactors f = lu_factor(m);
    if (f.singular) return LogDet::singular_sentinel();
    LogDet d;
    double phase = f.perm_sign < 0 ? kPi : 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const cplx piv = f.lu(i, i);
        d.log_abs += std::log(std::abs(piv));
        phase += std::arg(piv);
    }
    d.phase = wrap_phase(phase);
    if (d.log_abs < 700.0)
        d.value = std::exp(d.log_abs) * std::polar(1.0, d.phase);
    return d;
}

CMatrix toeplitz_matrix(const FourierSymbol& a, int n) {
    if (n < 0) throw std::invalid_argument("matrix order must be nonnegative");
    const std::size_t dim = static_cast<std::size_t>(n) + 1;
    CMatrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
            m(j, k) = a.coeff(static_cast<int>(j) - static_cast<int>(k));
    return m;
}

CMatrix hankel_matrix(const FourierSymbol& a, int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative Hankel shape");
    CMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (int j = 0; j < rows; ++j)
        for (int k = 0; k < cols; ++k)
            m(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) =
                a.coeff(j + k + 1);
    return m;
}

LogDet log_det(const FourierSymbol& a, int n) {
    return log_det_matrix(toeplitz_matrix(a, n));
}

LogDet shifted_log_det(const FourierSymbol& a, int kappa, int n) {
    return log_det(times_tk(a, kappa), n);
}

CornerMinor corner_minor(const FourierSymbol& a, int n, int kappa, Corner which) {
    if (kappa < 1 || kappa > n + 1)
        throw std::invalid_argument("corner size must satisfy 1 <= kappa <= n+1");
    const LuFactors f = lu_factor(toeplitz_matrix(a, n));
    if (f.singular) throw SingularMatrix("T_n(a) is numerically singular");

    const std::size_t dim = static_cast<std::size_t>(n) + 1;
    const std::size_t kk = static_cast<std::size_t>(kappa);
    const CornerRanges r = corner_ranges(n, kappa, which);

    // columns col0..col0+kappa-1 of the inverse, then keep the corner rows
    CMatrix rhs(dim, kk);
    for (std::size_t j = 0; j < kk; ++j) rhs(r.col0 + j, j) = cplx(1.0);
    const CMatrix cols = lu_solve_many(f, rhs);

    CornerMinor out;
    out.kappa = kappa;
    out.which = which;
    out.block = cols.block(r.row0, 0, kk, kk);
    return out;
}

JacobiCheck jacobi_check(const FourierSymbol& a, int n, int kappa) {
    if (kappa < 1 || kappa > n)
        throw std::invalid_argument("jacobi check needs 1 <= kappa <= n");
    const LogDet dn = log_det(a, n);
    if (dn.singular()) throw SingularMatrix("T_n(a) is singular");

    const double sign_phase = (static_cast<long long>(n) * kappa) % 2 == 0 ? 0.0 : kPi;

    auto ratio = [&](int shift) -> cplx {
        const LogDet num = shifted_log_det(a, shift, n - kappa);
        if (num.singular()) return cplx(0.0);
        const double log_abs = num.log_abs - dn.log_abs;
        const double phase = num.phase - dn.phase + sign_phase;
        return std::exp(log_abs) * std::polar(1.0, phase);
    };

    JacobiCheck jc;
    jc.lhs_minus = det_value(corner_minor(a, n, kappa, Corner::lower_left).block);
    jc.rhs_minus = ratio(-kappa);
    jc.lhs_plus = det_value(corner_minor(a, n, kappa, Corner::upper_right).block);
    jc.rhs_plus = ratio(kappa);

    auto rel = [](cplx lhs, cplx rhs) {
        const double scale = std::max(std::abs(lhs), std::abs(rhs));
        return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
    };
    jc.max_rel_err = std::max(rel(jc.lhs_minus, jc.rhs_minus),
                              rel(jc.lhs_plus, jc.rhs_plus));
    return jc;
}

TruncationDecay truncation_decay(const FourierSymbol& a, const NFunction& Phi,
                                 const NFunction& Psi, const WeightSeq& phi,
                                 const WeightSeq& psi, int n, int j) {
    if (j < 0 || j > n) throw std::invalid_argument("need 0 <= j <= n");
    const FourierSymbol tail = subtract(a, truncate(a, n - j));
    const double fl = fl_norm(tail, Phi, Psi, phi, psi).fl_part();
    TruncationDecay td;
    td.bound_col = fl / psi.at(static_cast<std::size_t>(n - j + 1));
    td.bound_row = fl / phi.at(static_cast<std::size_t>(n - j + 1));

    // column j of T(a) below row n has entries a_{k-j}, k > n; the row
    // analog has entries a_{j-k}, k > n; both tails are finite sums
    double col2 = 0.0, row2 = 0.0;
    for (int k = n + 1; k <= j + a.radius(); ++k) col2 += std::norm(a.coeff(k - j));
    for (int k = n + 1; k <= j + a.radius(); ++k) row2 += std::norm(a.coeff(j - k));
    td.col_norm_l2 = std::sqrt(col2);
    td.row_norm_l2 = std::sqrt(row2);
    return td;
}

CMatrix bs_leading_minor(const WienerHopfFactors& f, int n, int kappa, Corner which) {
    if (kappa < 1 || kappa > n) throw std::invalid_argument("need 1 <= kappa <= n");
    const std::size_t kk = static_cast<std::size_t>(kappa);
    const int lo = n - kappa + 1;

    auto toeplitz_block = [&](const FourierSymbol& s, int r0, int c0) {
        CMatrix m(kk, kk);
        for (std::size_t i = 0; i < kk; ++i)
            for (std::size_t j = 0; j < kk; ++j)
                m(i, j) = s.coeff(r0 + static_cast<int>(i) - c0 - static_cast<int>(j));
        return m;
    };

    if (which == Corner::lower_left)
        return toeplitz_block(f.a_minus_inv, lo, lo) * toeplitz_block(f.b, lo, 0) *
               toeplitz_block(f.a_minus_inv, 0, 0);
    return toeplitz_block(f.a_plus_inv, 0, 0) * toeplitz_block(f.c, 0, lo) *
           toeplitz_block(f.a_plus_inv, lo, lo);
}

BsRemainderNorms bs_remainder_norms(const WienerHopfFactors& f, int n, int kappa,
                                    int big_n) {
    if (kappa < 1 || kappa > n) throw std::invalid_argument("need 1 <= kappa <= n");
    const int k_factors = std::max({f.b.radius(), f.c.radius(), f.a_minus_inv.radius(),
                                    f.a_plus_inv.radius()});
    if (big_n < 4 * (n + k_factors))
        throw std::invalid_argument("finite section needs big_n >= 4*(n + factor radius)");

    const std::size_t dim = static_cast<std::size_t>(big_n);
    auto toeplitz_n = [&](const FourierSymbol& s) {
        return toeplitz_matrix(s, big_n - 1);
    };
    auto project = [&](std::size_t lo, std::size_t hi) { // keep rows lo..hi
        CMatrix p(dim, dim);
        for (std::size_t i = lo; i <= hi && i < dim; ++i) p(i, i) = cplx(1.0);
        return p;
    };

    const std::size_t nn = static_cast<std::size_t>(n);
    const std::size_t kk = static_cast<std::size_t>(kappa);
    const CMatrix p_n = project(0, nn);
    const CMatrix q_n = project(nn + 1, dim - 1);
    const CMatrix p_k1 = project(0, kk - 1);
    const CMatrix gap = project(nn - kk + 1, nn); // P_n - P_{n-kappa}

    const CMatrix t_b = toeplitz_n(f.b);
    const CMatrix t_c = toeplitz_n(f.c);
    const CMatrix t_minus_inv = toeplitz_n(f.a_minus_inv);
    const CMatrix t_plus_inv = toeplitz_n(f.a_plus_inv);
    const CMatrix h_b = hankel_matrix(f.b, big_n, big_n);
    const CMatrix h_c_refl = hankel_matrix(reflect(f.c), big_n, big_n);
    const CMatrix h_plus_inv = hankel_matrix(f.a_plus_inv, big_n, big_n);
    const CMatrix h_minus_inv_refl = hankel_matrix(reflect(f.a_minus_inv), big_n, big_n);

    // Neumann series sum_{m>=1} (Q_n H(b) H(c~) Q_n)^m with divergence guard
    const CMatrix g = q_n * h_b * h_c_refl * q_n;
    CMatrix series = g;
    CMatrix term = g;
    double prev_norm = opnorm_l2(term);
    if (prev_norm >= 1e-14) {
        int non_decreasing = 0;
        bool converged = false;
        for (int m = 2; m <= 100; ++m) {
            term = term * g;
            const double tn = opnorm_l2(term);
            series = series + term;
            if (tn < 1e-14) { converged = true; break; }
            non_decreasing = tn >= prev_norm ? non_decreasing + 1 : 0;
            if (non_decreasing >= 5)
                throw SeriesDiverging("Neumann term norms non-decreasing over 5 "
                                      "consecutive terms; n is too small for contraction");
            prev_norm = tn;
        }
        if (!converged)
            throw SeriesDiverging("Neumann series did not reach the term cutoff "
                                  "within 100 terms");
    }

    const CMatrix x =
        gap * h_plus_inv * h_c_refl * q_n * t_b * p_k1 * t_minus_inv * p_k1 -
        gap * t_plus_inv * p_n * t_c * series * t_b * p_k1 * t_minus_inv * p_k1;
    const CMatrix y =
        p_k1 * t_plus_inv * p_k1 * t_c * q_n * h_b * h_minus_inv_refl * gap -
        p_k1 * t_plus_inv * p_k1 * t_c * series * t_b * p_n * t_minus_inv * gap;

    BsRemainderNorms out;
    out.x_norm = opnorm_l2(x);
    out.y_norm = opnorm_l2(y);
    out.series_norm = opnorm_l2(series);
    return out;
}

std::vector<SectionProbe> finite_section_probe(const FourierSymbol& a,
                                               const std::vector<int>& n_list) {
    std::vector<SectionProbe> out;
    out.reserve(n_list.size());
    for (int n : n_list) {
        SectionProbe p;
        p.n = n;
        try {
            p.inv_norm_l2 = opnorm_l2(inverse(toeplitz_matrix(a, n)));
        } catch (const SingularMatrix&) {
            p.singular = true;
        }
        out.push_back(p);
    }
    return out;
}

std::vector<SectionProbe> finite_section_probe(const WienerHopfFactors& f,
                                               const std::vector<int>& n_list) {
    return finite_section_probe(f.input, n_list);
}

} // namespace szego
