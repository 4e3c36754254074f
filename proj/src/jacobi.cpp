#include "hb/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dd.hpp"

namespace hb {

using detail::DD;

namespace {

cplx cdot(const std::vector<cplx>& x, const std::vector<cplx>& y) {  // x^* y
    cplx s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

double cnorm(const std::vector<cplx>& x) {
    double s = 0.0;
    for (const cplx& v : x) s += std::norm(v);
    return std::sqrt(s);
}

}  // namespace

JacobiMatrix::JacobiMatrix(std::vector<double> b, std::vector<double> a) : b_(std::move(b)), a_(std::move(a)) {
    if (b_.empty()) throw ValidationError("Jacobi matrix needs at least one diagonal entry");
    if (a_.size() + 1 != b_.size()) throw ValidationError("Jacobi matrix needs n - 1 off-diagonal entries");
    for (double x : b_)
        if (!std::isfinite(x)) throw ValidationError("Jacobi matrix diagonal must be finite");
    for (double x : a_)
        if (!(x > 0) || !std::isfinite(x)) throw ValidationError("Jacobi matrix off-diagonal entries must be positive");
}

JacobiMatrix JacobiMatrix::truncated(std::size_t j) const {
    if (j >= size()) throw ValidationError("truncation removes the whole matrix");
    return JacobiMatrix({b_.begin() + static_cast<std::ptrdiff_t>(j), b_.end()},
                        {a_.begin() + static_cast<std::ptrdiff_t>(j), a_.end()});
}

CMatrix JacobiMatrix::dense() const {
    const std::size_t n = size();
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = b_[i];
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = a_[i];
    return m;
}

HermitianMatrix::HermitianMatrix(CMatrix entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) throw ValidationError("Hermitian matrix must be square and nonempty");
    const double scale = std::max(1.0, m_.max_abs());
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const cplx x = m_(i, j);
            if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
                throw ValidationError("Hermitian matrix entries must be finite");
            if (std::abs(x - std::conj(m_(j, i))) > 1e-12 * scale)
                throw ValidationError("matrix is not Hermitian");
        }
}

std::vector<RealPoly> char_polys(const JacobiMatrix& J) {
    const std::size_t n = J.size();
    std::vector<RealPoly> p(n + 1);
    p[n] = RealPoly::constant(1.0);
    const RealPoly z = RealPoly::power(1);
    for (std::size_t j = n; j >= 1; --j) {
        RealPoly next = (z - RealPoly::constant(J.b()[j - 1])) * p[j];
        if (j < n) next = next - (J.a()[j - 1] * J.a()[j - 1]) * p[j + 1];
        p[j - 1] = next;
    }
    return p;
}

std::vector<double> eigen(const JacobiMatrix& J) {
    const std::size_t n = J.size();
    std::vector<double> d = J.b();
    std::vector<double> e(n, 0.0);
    std::copy(J.a().begin(), J.a().end(), e.begin());
    constexpr double eps = std::numeric_limits<double>::epsilon();

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (++iter > 60) throw NumericalError("eigen: QL iteration did not converge");

            // Wilkinson shift from the leading 2x2 block.
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> spectral_weights(const std::vector<double>& lams, const std::vector<double>& mus) {
    if (lams.empty() || mus.size() + 1 != lams.size())
        throw ValidationError("spectral weights need n and n - 1 points");
    std::vector<double> w(lams.size());
    for (std::size_t j = 0; j < lams.size(); ++j) {
        double num = 1.0;
        for (double mu : mus) num *= lams[j] - mu;
        double den = 1.0;
        for (std::size_t i = 0; i < lams.size(); ++i)
            if (i != j) den *= lams[j] - lams[i];
        w[j] = num / den;
    }
    return w;
}

JacobiMatrix detail::reconstruct_extended(const std::vector<DD>& lams, const std::vector<DD>& w) {
    if (lams.empty() || w.size() != lams.size())
        throw ValidationError("reconstruct: need one weight per eigenvalue");
    if (lams.size() > 50) throw ValidationError("reconstruct: at most 50 eigenvalues are supported");
    for (std::size_t j = 1; j < lams.size(); ++j)
        if (!(lams[j - 1] < lams[j])) throw ValidationError("reconstruct: eigenvalues must be strictly ascending");
    const std::size_t n = lams.size();
    DD total;
    for (const DD& x : w) {
        if (!(x.hi > 0) || !std::isfinite(x.hi)) throw NumericalError("reconstruct: non-positive spectral weight");
        total += x;
    }

    // Stieltjes procedure for the measure sum_j w_j delta_{lam_j}, carried in
    // orthonormal node coordinates with full reorthogonalization. The
    // recurrence loses accuracy in proportion to the spread of the weights,
    // so it runs in double-double.
    std::vector<std::vector<DD>> q;
    q.reserve(n);
    std::vector<DD> first(n);
    for (std::size_t j = 0; j < n; ++j) first[j] = sqrt(w[j] / total);
    q.push_back(std::move(first));

    std::vector<double> b(n), a;
    a.reserve(n - 1);
    std::vector<DD> prev_a;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<DD> next(n);
        for (std::size_t j = 0; j < n; ++j) next[j] = lams[j] * q[k][j];
        const DD bk = dot(q[k], next);
        b[k] = bk.value();
        if (k + 1 == n) break;
        for (std::size_t j = 0; j < n; ++j) {
            next[j] -= bk * q[k][j];
            if (k > 0) next[j] -= prev_a.back() * q[k - 1][j];
        }
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& old : q) {
                const DD c = dot(old, next);
                for (std::size_t j = 0; j < n; ++j) next[j] -= c * old[j];
            }
        const DD norm = sqrt(dot(next, next));
        if (!(norm.hi > 0)) throw NumericalError("reconstruct: Stieltjes recurrence broke down");
        prev_a.push_back(norm);
        a.push_back(norm.value());
        for (DD& x : next) x = x / norm;
        q.push_back(std::move(next));
    }
    return JacobiMatrix(std::move(b), std::move(a));
}

JacobiMatrix reconstruct_from_weights(const std::vector<double>& lams, const std::vector<double>& w) {
    return detail::reconstruct_extended({lams.begin(), lams.end()}, {w.begin(), w.end()});
}

JacobiMatrix reconstruct(const std::vector<double>& lams, const std::vector<double>& mus, double separation) {
    if (lams.size() > 50) throw ValidationError("reconstruct: at most 50 eigenvalues are supported");
    if (!is_strictly_interlacing(lams, mus, separation))
        throw ValidationError("reconstruct: eigenvalue sets do not strictly interlace");
    return reconstruct_from_weights(lams, spectral_weights(lams, mus));
}

LanczosResult lanczos_reduce(const HermitianMatrix& H, const std::vector<cplx>& v) {
    const std::size_t n = H.size();
    if (v.size() != n) throw ValidationError("lanczos_reduce: vector length does not match the matrix");
    const double vnorm = cnorm(v);
    if (!(vnorm > 0)) throw ValidationError("lanczos_reduce: starting vector is zero");
    const CMatrix& m = H.entries();
    const double breakdown = 1e-12 * m.max_abs();

    std::vector<std::vector<cplx>> q;
    std::vector<cplx> start(v);
    for (cplx& x : start) x /= vnorm;
    q.push_back(std::move(start));

    std::vector<double> b, a;
    for (std::size_t k = 0;; ++k) {
        std::vector<cplx> w(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) w[i] += m(i, j) * q[k][j];
        b.push_back(cdot(q[k], w).real());
        if (k + 1 == n) break;
        for (std::size_t i = 0; i < n; ++i) {
            w[i] -= b[k] * q[k][i];
            if (k > 0) w[i] -= a[k - 1] * q[k - 1][i];
        }
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& prev : q) {
                const cplx c = cdot(prev, w);
                for (std::size_t i = 0; i < n; ++i) w[i] -= c * prev[i];
            }
        const double beta = cnorm(w);
        if (beta <= breakdown) break;
        a.push_back(beta);
        for (cplx& x : w) x /= beta;
        q.push_back(std::move(w));
    }

    const std::size_t k = q.size();
    CMatrix basis(k, n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c) basis(r, c) = std::conj(q[r][c]);
    return {JacobiMatrix(std::move(b), std::move(a)), std::move(basis), k};
}

}  // namespace hb
