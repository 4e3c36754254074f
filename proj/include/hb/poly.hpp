#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "hb/error.hpp"

namespace hb {

using cplx = std::complex<double>;

/// Dense polynomial in coefficient form, constant term first.
///
/// Trailing zero coefficients are trimmed on construction so that the last
/// entry is the leading coefficient (the zero polynomial is stored as {0}).
/// Instances are immutable.
template <class T>
class Poly {
public:
    using value_type = T;

    Poly() : coeffs_{T{0}} {}
    explicit Poly(std::vector<T> coeffs);

    /// Divides through by the leading coefficient.
    static Poly monic(std::vector<T> coeffs);
    static Poly constant(T c) { return Poly(std::vector<T>{c}); }
    /// The monomial z^n.
    static Poly power(std::size_t n);

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<T>& coeffs() const { return coeffs_; }
    T operator[](std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : T{0}; }
    T leading() const { return coeffs_.back(); }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == T{0}; }
    bool is_monic() const { return coeffs_.back() == T{1}; }

private:
    std::vector<T> coeffs_;
};

using RealPoly = Poly<double>;
using ComplexPoly = Poly<cplx>;

extern template class Poly<double>;
extern template class Poly<cplx>;

ComplexPoly to_complex(const RealPoly& p);

cplx eval(const RealPoly& p, cplx z);
cplx eval(const ComplexPoly& p, cplx z);
double eval(const RealPoly& p, double t);

RealPoly derivative(const RealPoly& p);
ComplexPoly derivative(const ComplexPoly& p);

RealPoly operator+(const RealPoly& a, const RealPoly& b);
RealPoly operator-(const RealPoly& a, const RealPoly& b);
RealPoly operator*(const RealPoly& a, const RealPoly& b);
RealPoly operator*(double s, const RealPoly& p);
ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b);
ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b);
ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
ComplexPoly operator*(cplx s, const ComplexPoly& p);

/// Largest coefficient-wise absolute difference; missing entries count as 0.
double max_coeff_diff(const RealPoly& a, const RealPoly& b);
double max_coeff_diff(const ComplexPoly& a, const ComplexPoly& b);

/// Monic product of (z - z_j); the empty product is 1.
ComplexPoly from_roots(std::span<const cplx> zeros);
RealPoly from_real_roots(std::span<const double> zeros);

/// Quotient of p by (z - x) via synthetic division; the remainder is p(x).
struct Deflation {
    RealPoly quotient;
    double remainder;
};
Deflation deflate(const RealPoly& p, double x);

/// Multiset of complex zeros with their half-plane classification.
class ZeroSet {
public:
    ZeroSet() = default;
    explicit ZeroSet(std::vector<cplx> zeros, double real_axis_tol = Tolerances{}.real_axis);

    const std::vector<cplx>& zeros() const { return zeros_; }
    std::size_t size() const { return zeros_.size(); }
    bool empty() const { return zeros_.empty(); }
    const cplx& operator[](std::size_t j) const { return zeros_[j]; }
    int n_plus() const { return n_plus_; }
    int n_minus() const { return n_minus_; }
    int n_real() const { return n_real_; }
    /// Whether zero j lies on the real axis within tolerance.
    bool is_real(std::size_t j) const { return real_flags_[j]; }
    double real_axis_tol() const { return real_axis_tol_; }

private:
    std::vector<cplx> zeros_;
    std::vector<bool> real_flags_;
    int n_plus_ = 0;
    int n_minus_ = 0;
    int n_real_ = 0;
    double real_axis_tol_ = Tolerances{}.real_axis;
};

struct RootOptions {
    int max_iterations = 200;
    // Converged once every Aberth correction is below step_tol * (1 + |z|).
    double step_tol = 1e-13;
    double real_axis_tol = Tolerances{}.real_axis;
};

/// All complex roots of p with multiplicity, by Aberth-Ehrlich simultaneous
/// iteration followed by Newton polishing. Throws ValidationError for a
/// constant polynomial and NumericalError when the iteration stalls.
ZeroSet roots(const ComplexPoly& p, const RootOptions& opts = {});
ZeroSet roots(const RealPoly& p, const RootOptions& opts = {});

/// Roots of a real polynomial known to have only real zeros, sorted ascending.
/// Imaginary parts left over from the complex iteration are discarded.
std::vector<double> real_roots(const RealPoly& p, const RootOptions& opts = {});

/// lams[0] < mus[0] < lams[1] < ... < mus[n-2] < lams[n-1], with every gap
/// larger than separation * (lams.back() - lams.front()). Both inputs sorted.
bool is_strictly_interlacing(std::span<const double> lams, std::span<const double> mus,
                             double separation = Tolerances{}.interlace_separation);

/// Interlacing broken once around xi: inserting xi into lams gives a set that
/// strictly interlaces mus (lams and mus of equal length). On success returns
/// the number of lams below xi; otherwise -1.
int almost_interlacing_index(std::span<const double> lams, std::span<const double> mus, double xi,
                             double separation = Tolerances{}.interlace_separation);

}  // namespace hb
