#include "hb/hb_transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hb {

namespace {

void require_monic(const RealPoly& p, const char* what) {
    if (!p.is_monic()) throw ValidationError(std::string(what) + " must be monic");
}

}  // namespace

ComplexPoly classical_combine(const RealPoly& p, const RealPoly& q, double l) {
    require_monic(p, "classical_combine: p");
    require_monic(q, "classical_combine: q");
    if (p.degree() == 0 || q.degree() + 1 > p.degree())
        throw ValidationError("classical_combine: need deg p = n >= 1 and deg q <= n - 1");
    std::vector<cplx> c(p.degree() + 1);
    for (std::size_t j = 0; j <= p.degree(); ++j) c[j] = cplx(p[j], -l * q[j]);
    return ComplexPoly(std::move(c));
}

ClassicalSplit classical_split(const ComplexPoly& h) {
    if (!h.is_monic()) throw ValidationError("classical_split: h must be monic");
    std::vector<double> re(h.coeffs().size()), im(h.coeffs().size());
    for (std::size_t j = 0; j < re.size(); ++j) {
        re[j] = h[j].real();
        im[j] = h[j].imag();
    }
    ClassicalSplit out{RealPoly(std::move(re)), std::nullopt, 0.0};
    const RealPoly imag_part(std::move(im));
    if (imag_part.is_zero()) return out;
    // -l q = imag part, q monic.
    out.l = -imag_part.leading();
    out.q = RealPoly::monic(imag_part.coeffs());
    return out;
}

HbCheck hb_verify(const RealPoly& p, const RealPoly& q, double l, const Tolerances& tol) {
    HbCheck out;
    if (!p.is_monic() || !q.is_monic() || p.degree() == 0 || q.degree() + 1 != p.degree())
        throw ValidationError("hb_verify: need monic p of degree n and monic q of degree n - 1");

    const ZeroSet combined = roots(classical_combine(p, q, l));
    out.combined_in_upper = combined.n_plus() == static_cast<int>(combined.size());

    const ZeroSet zp = roots(p);
    const ZeroSet zq = q.degree() > 0 ? roots(q) : ZeroSet{};
    if (!(l > 0)) {
        out.reason = "l is not positive";
    } else if (zp.n_real() != static_cast<int>(zp.size()) || zq.n_real() != static_cast<int>(zq.size())) {
        out.reason = "p or q has non-real zeros";
    } else {
        std::vector<double> lams, mus;
        for (const cplx& z : zp.zeros()) lams.push_back(z.real());
        for (const cplx& z : zq.zeros()) mus.push_back(z.real());
        std::sort(lams.begin(), lams.end());
        std::sort(mus.begin(), mus.end());
        if (is_strictly_interlacing(lams, mus, tol.interlace_separation))
            out.holds = true;
        else
            out.reason = "zeros of p and q do not strictly interlace";
    }
    out.agree = out.holds == out.combined_in_upper;
    return out;
}

ComplexPoly generalized_combine(const RealPoly& p, const RealPoly& q, cplx alpha, double xi) {
    if (!(alpha.imag() > 0)) throw ValidationError("generalized_combine: Im alpha must be positive");
    require_monic(p, "generalized_combine: p");
    require_monic(q, "generalized_combine: q");
    if (p.degree() == 0 || q.degree() + 1 != p.degree())
        throw ValidationError("generalized_combine: need deg p = n >= 1 and deg q = n - 1");
    if (eval(p, xi) == 0.0)
        throw ValidationError("generalized_combine: p(xi) = 0, divide out (z - xi) and use the pencil form");
    const RealPoly shifted = RealPoly({-xi, 1.0}) * q;
    std::vector<cplx> c(p.degree() + 1);
    for (std::size_t j = 0; j <= p.degree(); ++j) c[j] = alpha * p[j] + (1.0 - alpha) * shifted[j];
    c.back() = 1.0;
    return ComplexPoly(std::move(c));
}

PencilSplit pencil_split(const ComplexPoly& h, cplx alpha) {
    if (alpha.imag() == 0.0) throw ValidationError("pencil_split: Im alpha must be nonzero");
    // alpha p + (1 - alpha) r rounds its leading coefficient, so allow a few ulps.
    const double lead_tol = 8.0 * std::numeric_limits<double>::epsilon() * (1.0 + 2.0 * std::abs(alpha));
    if (!(std::abs(h.coeffs().back() - 1.0) <= lead_tol)) throw ValidationError("pencil_split: h must be monic");
    const double ar = alpha.real();
    const double ai = alpha.imag();
    const std::size_t n = h.degree();
    std::vector<double> p(n + 1), r(n + 1);
    // [ar, 1 - ar; ai, -ai] (p_j, r_j) = (Re h_j, Im h_j); determinant -ai.
    for (std::size_t j = 0; j <= n; ++j) {
        const double x = h[j].real();
        const double y = h[j].imag();
        p[j] = x + (1.0 - ar) * y / ai;
        r[j] = x - ar * y / ai;
    }
    p[n] = 1.0;
    r[n] = 1.0;
    return {RealPoly(std::move(p)), RealPoly(std::move(r)), alpha};
}

GeneralizedSplit generalized_split(const ComplexPoly& h, cplx alpha, double xi, const Tolerances& tol) {
    if (!(alpha.imag() > 0)) throw ValidationError("generalized_split: Im alpha must be positive");
    if (!h.is_monic() || h.degree() == 0) throw ValidationError("generalized_split: h must be monic of degree >= 1");

    const ZeroSet zeros = roots(h);
    const ConfigReport report = classify_config(zeros, alpha, xi, tol);
    if (report.verdict == Verdict::HasRealZero)
        throw ValidationError("generalized_split: h has a zero on the real axis");
    if (report.verdict == Verdict::Neither)
        throw ValidationError(
            "generalized_split: angle sum exceeds Arg alpha, outside both broken-interlacing theorems");

    const PencilSplit pencil = pencil_split(h, alpha);
    GeneralizedSplit out{report, pencil.p, pencil.r, {}, {}, 0, false, {}};
    const std::size_t n = h.degree();

    if (report.verdict == Verdict::Equal) {
        const auto [quotient, remainder] = deflate(pencil.r, xi);
        const double limit = tol.division_residual * std::pow(1.0 + std::abs(xi), static_cast<double>(n));
        if (std::abs(remainder) > limit)
            throw NumericalError("generalized_split: r(xi) is not zero although the angle sum matches Arg alpha");
        // Renormalize: the quotient of a monic by (z - xi) is monic up to rounding.
        out.second = RealPoly::monic(quotient.coeffs());
        out.lams = real_roots(out.p);
        out.mus = n > 1 ? real_roots(out.second) : std::vector<double>{};
        out.interlacing_ok = is_strictly_interlacing(out.lams, out.mus, tol.interlace_separation);
        out.s = static_cast<int>(std::count_if(out.lams.begin(), out.lams.end(), [xi](double x) { return x < xi; }));
        if (!out.interlacing_ok) out.warning = "zeros of p and q fail to interlace: numerical breakdown";
    } else {
        out.lams = real_roots(out.p);
        out.mus = real_roots(out.second);
        const int s = almost_interlacing_index(out.lams, out.mus, xi, tol.interlace_separation);
        out.interlacing_ok = s >= 0;
        out.s = out.interlacing_ok
                    ? s
                    : static_cast<int>(std::count_if(out.lams.begin(), out.lams.end(), [xi](double x) { return x < xi; }));
        if (!out.interlacing_ok) out.warning = "zeros of p and r fail the broken interlacing pattern: numerical breakdown";
    }
    if (out.interlacing_ok && out.s != report.n_minus) {
        out.interlacing_ok = false;
        out.warning = "zero counts of h and p disagree: numerical breakdown";
    }
    return out;
}

}  // namespace hb
