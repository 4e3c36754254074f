#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hb/poly.hpp"

#include "dd.hpp"

namespace hb {

namespace {

using detail::DD;

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct HornerPair {
    cplx value;
    cplx slope;
};

HornerPair eval_with_slope(const std::vector<cplx>& c, cplx z) {
    cplx v = c.back();
    cplx d = 0.0;
    for (std::size_t j = c.size() - 1; j-- > 0;) {
        d = d * z + v;
        v = v * z + c[j];
    }
    return {v, d};
}

// p(z) by Horner's rule in double-double complex arithmetic, rounded once.
cplx accurate_eval(const std::vector<cplx>& c, cplx z) {
    DD re = c.back().real(), im = c.back().imag();
    for (std::size_t j = c.size() - 1; j-- > 0;) {
        const DD nre = re * z.real() - im * z.imag() + c[j].real();
        const DD nim = re * z.imag() + im * z.real() + c[j].imag();
        re = nre;
        im = nim;
    }
    return {re.value(), im.value()};
}

// Bound on |p(z)| attainable by rounding alone when evaluating at z.
double rounding_scale(const std::vector<cplx>& c, cplx z) {
    const double r = std::abs(z);
    double acc = 0.0;
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * r + std::abs(c[j]);
    return acc;
}

// Fujiwara's bound: every root satisfies |z| <= 2 max_k |c_{n-k}|^{1/k}
// (with c_0 halved) for a monic polynomial.
double root_radius(const std::vector<cplx>& c) {
    const std::size_t n = c.size() - 1;
    double bound = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        double a = std::abs(c[n - k]);
        if (k == n) a *= 0.5;
        bound = std::max(bound, std::pow(a, 1.0 / static_cast<double>(k)));
    }
    return 2.0 * bound;
}

}  // namespace

ZeroSet roots(const ComplexPoly& input, const RootOptions& opts) {
    if (input.degree() == 0) throw ValidationError("roots: polynomial has degree 0");
    const ComplexPoly p = ComplexPoly::monic(input.coeffs());
    const auto& c = p.coeffs();
    const std::size_t n = p.degree();

    if (n == 1) return ZeroSet({-c[0]}, opts.real_axis_tol);

    const double radius = std::max(root_radius(c), 1e-300);
    std::vector<cplx> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        // Offset breaks the symmetry with conjugate-symmetric inputs.
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
        z[k] = std::polar(radius, theta);
    }

    std::vector<bool> done(n, false);
    bool converged = false;
    for (int iter = 0; iter < opts.max_iterations && !converged; ++iter) {
        converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            const auto [v, d] = eval_with_slope(c, z[i]);
            if (std::abs(v) <= 2.0 * static_cast<double>(n) * kEps * rounding_scale(c, z[i])) {
                done[i] = true;
                continue;
            }
            cplx repulsion = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) repulsion += 1.0 / (z[i] - z[j]);
            const cplx newton = v / d;
            const cplx step = newton / (1.0 - newton * repulsion);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                converged = false;
                z[i] *= cplx(1.0 + 1e-3, 1e-3);
                continue;
            }
            z[i] -= step;
            if (std::abs(step) < opts.step_tol * (1.0 + std::abs(z[i])))
                done[i] = true;
            else
                converged = false;
        }
    }
    if (!converged) throw NumericalError("roots: Aberth iteration did not converge");

    // Newton polishing against the double-double residual; a step is kept
    // only if it lowers that residual and stays well inside the gap to the
    // nearest other root.
    for (std::size_t i = 0; i < n; ++i) {
        double gap = INFINITY;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) gap = std::min(gap, std::abs(z[i] - z[j]));
        cplx v = accurate_eval(c, z[i]);
        for (int k = 0; k < 8 && v != 0.0; ++k) {
            const cplx d = eval_with_slope(c, z[i]).slope;
            if (d == 0.0) break;
            const cplx step = v / d;
            if (!(std::abs(step) < 0.25 * gap)) break;
            const cplx cand = z[i] - step;
            const cplx vc = accurate_eval(c, cand);
            if (!(std::abs(vc) < std::abs(v))) break;
            z[i] = cand;
            v = vc;
            if (std::abs(step) <= kEps * std::abs(z[i])) break;
        }
    }
    return ZeroSet(std::move(z), opts.real_axis_tol);
}

ZeroSet roots(const RealPoly& p, const RootOptions& opts) { return roots(to_complex(p), opts); }

std::vector<double> real_roots(const RealPoly& p, const RootOptions& opts) {
    const ZeroSet zs = roots(p, opts);
    std::vector<double> out;
    out.reserve(zs.size());
    for (const cplx& z : zs.zeros()) out.push_back(z.real());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hb
