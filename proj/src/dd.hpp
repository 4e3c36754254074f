#pragma once

#include <cmath>
#include <vector>

#include "hb/jacobi.hpp"

namespace hb::detail {

// Double-double arithmetic: hi + lo carries about twice the working precision.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    DD() = default;
    DD(double x) : hi(x) {}
    DD(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD operator+(DD x, DD y) {
    const DD s = two_sum(x.hi, y.hi);
    const DD t = two_sum(x.lo, y.lo);
    const DD u = quick_two_sum(s.hi, s.lo + t.hi);
    return quick_two_sum(u.hi, u.lo + t.lo);
}

inline DD operator-(DD x) { return {-x.hi, -x.lo}; }
inline DD operator-(DD x, DD y) { return x + (-y); }

inline DD operator*(DD x, DD y) {
    const double p = x.hi * y.hi;
    const double e = std::fma(x.hi, y.hi, -p);
    return quick_two_sum(p, e + (x.hi * y.lo + x.lo * y.hi));
}

inline DD operator/(DD x, DD y) {
    const double q1 = x.hi / y.hi;
    const DD r = x - y * DD(q1);
    const double q2 = r.hi / y.hi;
    const DD s = r - y * DD(q2);
    return quick_two_sum(q1, q2) + DD(s.hi / y.hi);
}

inline DD& operator+=(DD& x, DD y) { return x = x + y; }
inline DD& operator-=(DD& x, DD y) { return x = x - y; }

inline DD sqrt(DD x) {
    if (x.hi <= 0.0) return {};
    const double r = std::sqrt(x.hi);
    const DD e = x - DD(r) * DD(r);
    return quick_two_sum(r, e.hi / (2.0 * r));
}

inline bool operator<(DD x, DD y) { return x.hi < y.hi || (x.hi == y.hi && x.lo < y.lo); }

struct DDComplex {
    DD re;
    DD im;
};

inline DDComplex operator*(const DDComplex& x, const DDComplex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

inline DD dot(const std::vector<DD>& x, const std::vector<DD>& y) {
    DD s;
    for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * y[j];
    return s;
}

// Jacobi matrix with spectral measure sum_j w_j delta_{lams_j}, from nodes and
// weights given to double-double accuracy.
JacobiMatrix reconstruct_extended(const std::vector<DD>& lams, const std::vector<DD>& w);

}  // namespace hb::detail
