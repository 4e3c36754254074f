#include "hb/poly.hpp"

#include <algorithm>
#include <cmath>

namespace hb {

namespace {

template <class T>
std::vector<T> trimmed(std::vector<T> c) {
    if (c.empty()) throw ValidationError("polynomial needs at least one coefficient");
    while (c.size() > 1 && c.back() == T{0}) c.pop_back();
    return c;
}

template <class T>
T horner(const std::vector<T>& c, T z) {
    T acc = c.back();
    for (std::size_t j = c.size() - 1; j-- > 0;) acc = acc * z + c[j];
    return acc;
}

template <class T>
Poly<T> add(const Poly<T>& a, const Poly<T>& b, T sign) {
    std::vector<T> c(std::max(a.coeffs().size(), b.coeffs().size()), T{0});
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = a[j] + sign * b[j];
    return Poly<T>(std::move(c));
}

template <class T>
Poly<T> mul(const Poly<T>& a, const Poly<T>& b) {
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<T> c(x.size() + y.size() - 1, T{0});
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) c[i + j] += x[i] * y[j];
    return Poly<T>(std::move(c));
}

template <class T>
Poly<T> diff(const Poly<T>& p) {
    if (p.degree() == 0) return Poly<T>::constant(T{0});
    std::vector<T> c(p.degree());
    for (std::size_t j = 1; j <= p.degree(); ++j) c[j - 1] = static_cast<double>(j) * p[j];
    return Poly<T>(std::move(c));
}

template <class T>
double coeff_diff(const Poly<T>& a, const Poly<T>& b) {
    const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
    double worst = 0.0;
    for (std::size_t j = 0; j < len; ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
    return worst;
}

}  // namespace

template <class T>
Poly<T>::Poly(std::vector<T> coeffs) : coeffs_(trimmed(std::move(coeffs))) {}

template <class T>
Poly<T> Poly<T>::monic(std::vector<T> coeffs) {
    auto c = trimmed(std::move(coeffs));
    const T lead = c.back();
    if (lead == T{0}) throw ValidationError("cannot normalize the zero polynomial");
    for (auto& x : c) x /= lead;
    c.back() = T{1};
    return Poly(std::move(c));
}

template <class T>
Poly<T> Poly<T>::power(std::size_t n) {
    std::vector<T> c(n + 1, T{0});
    c.back() = T{1};
    return Poly(std::move(c));
}

template class Poly<double>;
template class Poly<cplx>;

ComplexPoly to_complex(const RealPoly& p) {
    return ComplexPoly(std::vector<cplx>(p.coeffs().begin(), p.coeffs().end()));
}

cplx eval(const RealPoly& p, cplx z) {
    const auto& c = p.coeffs();
    cplx acc = c.back();
    for (std::size_t j = c.size() - 1; j-- > 0;) acc = acc * z + c[j];
    return acc;
}

cplx eval(const ComplexPoly& p, cplx z) { return horner(p.coeffs(), z); }
double eval(const RealPoly& p, double t) { return horner(p.coeffs(), t); }

RealPoly derivative(const RealPoly& p) { return diff(p); }
ComplexPoly derivative(const ComplexPoly& p) { return diff(p); }

RealPoly operator+(const RealPoly& a, const RealPoly& b) { return add(a, b, 1.0); }
RealPoly operator-(const RealPoly& a, const RealPoly& b) { return add(a, b, -1.0); }
RealPoly operator*(const RealPoly& a, const RealPoly& b) { return mul(a, b); }
RealPoly operator*(double s, const RealPoly& p) { return mul(RealPoly::constant(s), p); }
ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) { return add(a, b, cplx{1.0}); }
ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) { return add(a, b, cplx{-1.0}); }
ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) { return mul(a, b); }
ComplexPoly operator*(cplx s, const ComplexPoly& p) { return mul(ComplexPoly::constant(s), p); }

double max_coeff_diff(const RealPoly& a, const RealPoly& b) { return coeff_diff(a, b); }
double max_coeff_diff(const ComplexPoly& a, const ComplexPoly& b) { return coeff_diff(a, b); }

ComplexPoly from_roots(std::span<const cplx> zeros) {
    std::vector<cplx> c{cplx{1.0}};
    c.reserve(zeros.size() + 1);
    for (const cplx& z : zeros) {
        c.push_back(c.back());
        for (std::size_t j = c.size() - 2; j > 0; --j) c[j] = c[j - 1] - z * c[j];
        c[0] = -z * c[0];
    }
    return ComplexPoly(std::move(c));
}

RealPoly from_real_roots(std::span<const double> zeros) {
    std::vector<double> c{1.0};
    c.reserve(zeros.size() + 1);
    for (double x : zeros) {
        c.push_back(c.back());
        for (std::size_t j = c.size() - 2; j > 0; --j) c[j] = c[j - 1] - x * c[j];
        c[0] = -x * c[0];
    }
    return RealPoly(std::move(c));
}

Deflation deflate(const RealPoly& p, double x) {
    const auto& c = p.coeffs();
    if (c.size() == 1) return {RealPoly::constant(0.0), c[0]};
    std::vector<double> q(c.size() - 1);
    double carry = c.back();
    for (std::size_t j = c.size() - 1; j-- > 0;) {
        q[j] = carry;
        carry = c[j] + x * carry;
    }
    return {RealPoly(std::move(q)), carry};
}

ZeroSet::ZeroSet(std::vector<cplx> zeros, double real_axis_tol)
    : zeros_(std::move(zeros)), real_flags_(zeros_.size(), false), real_axis_tol_(real_axis_tol) {
    for (std::size_t j = 0; j < zeros_.size(); ++j) {
        const cplx z = zeros_[j];
        if (std::abs(z.imag()) <= real_axis_tol * (1.0 + std::abs(z))) {
            real_flags_[j] = true;
            ++n_real_;
        } else if (z.imag() > 0) {
            ++n_plus_;
        } else {
            ++n_minus_;
        }
    }
}

bool is_strictly_interlacing(std::span<const double> lams, std::span<const double> mus,
                             double separation) {
    if (lams.empty() || mus.size() + 1 != lams.size())
        throw ValidationError("interlacing check needs n and n-1 points");
    const double eps = separation * (lams.back() - lams.front());
    for (std::size_t j = 0; j < mus.size(); ++j) {
        if (!(mus[j] - lams[j] > eps)) return false;
        if (!(lams[j + 1] - mus[j] > eps)) return false;
    }
    return true;
}

int almost_interlacing_index(std::span<const double> lams, std::span<const double> mus, double xi,
                             double separation) {
    if (lams.size() != mus.size())
        throw ValidationError("broken interlacing check needs two sets of equal size");
    std::vector<double> merged(lams.begin(), lams.end());
    merged.insert(std::upper_bound(merged.begin(), merged.end(), xi), xi);
    if (!is_strictly_interlacing(merged, mus, separation)) return -1;
    return static_cast<int>(std::count_if(lams.begin(), lams.end(), [xi](double x) { return x < xi; }));
}

}  // namespace hb
