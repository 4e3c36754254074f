#include "hb/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dd.hpp"

namespace hb {

using detail::DD;
using detail::DDComplex;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
// Forward re-solve must land within this distance (scaled by 1 + max|z|).
constexpr double kRoundTripTol = 1e-6;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double max_modulus(const std::vector<cplx>& zs) {
    double r = 0.0;
    for (const cplx& z : zs) r = std::max(r, std::abs(z));
    return r;
}

void require_rank2_size(const JacobiMatrix& J) {
    if (J.size() < 2) throw ValidationError("rank-two perturbation needs a matrix of size at least 2");
}

struct Deflated {
    std::vector<cplx> rest;
};

// Removes the single zero at `at`; the corollaries for singular matrices
// require exactly one (simple) such zero.
Deflated remove_simple_zero(const ZeroSet& zeros, double at, const Tolerances& tol) {
    const double limit = tol.simple_zero * (1.0 + max_modulus(zeros.zeros()));
    Deflated out;
    int hits = 0;
    for (const cplx& z : zeros.zeros()) {
        if (std::abs(z - at) <= limit)
            ++hits;
        else
            out.rest.push_back(z);
    }
    if (hits != 1)
        throw ValidationError("singular case requires exactly one simple zero at the break point, found " +
                              std::to_string(hits));
    return out;
}

bool has_zero_near(const ZeroSet& zeros, double at, const Tolerances& tol) {
    const double limit = tol.simple_zero * (1.0 + max_modulus(zeros.zeros()));
    return std::any_of(zeros.zeros().begin(), zeros.zeros().end(),
                       [&](const cplx& z) { return std::abs(z - at) <= limit; });
}

// prod_k (t - z_k) in double-double.
DDComplex factored(const std::vector<cplx>& z, DD t) {
    DDComplex h{DD(1.0), DD(0.0)};
    for (const cplx& w : z) h = h * DDComplex{t - w.real(), DD(-w.imag())};
    return h;
}

// J from the pencil h = alpha p + (1 - alpha) r, where h is known through its
// zeros z and approx holds the zeros of p to working precision. On the real
// line p = Re h + (1 - Re alpha) / Im alpha Im h and r = Re h - Re alpha /
// Im alpha Im h, so Newton on the factored form refines the nodes past double
// precision and the weights q(lambda) / p_J'(lambda) follow without going
// through coefficients. Regular case: p_J = p and q_J = r / (t - xi).
// Singular case: xi is an extra eigenvalue, p_J = (t - xi) p and q_J = r.
JacobiMatrix pencil_jacobi(const std::vector<cplx>& z, cplx alpha, const std::vector<double>& approx, double xi,
                           bool singular) {
    const double to_p = (1.0 - alpha.real()) / alpha.imag();
    const double to_r = -alpha.real() / alpha.imag();
    std::vector<DD> nodes;
    for (std::size_t j = 0; j < approx.size(); ++j) {
        double gap = INFINITY;
        for (std::size_t k = 0; k < approx.size(); ++k)
            if (k != j) gap = std::min(gap, std::abs(approx[j] - approx[k]));
        DD t = approx[j];
        for (int iter = 0; iter < 4; ++iter) {
            const DDComplex h = factored(z, t);
            cplx log_slope = 0.0;
            for (const cplx& w : z) log_slope += 1.0 / (t.value() - w);
            const cplx dh = cplx(h.re.value(), h.im.value()) * log_slope;
            const double slope = dh.real() + to_p * dh.imag();
            const DD value = h.re + h.im * DD(to_p);
            if (slope == 0.0 || !std::isfinite(slope)) break;
            const DD step = value / DD(slope);
            if (!(std::abs(step.hi) < 0.25 * gap)) break;
            t -= step;
        }
        nodes.push_back(t);
    }
    if (singular) nodes.push_back(DD(xi));
    std::sort(nodes.begin(), nodes.end());

    const std::size_t n = nodes.size();
    std::vector<DD> weights(n);
    for (std::size_t j = 0; j < n; ++j) {
        const DDComplex h = factored(z, nodes[j]);
        DD q = h.re + h.im * DD(to_r);
        if (!singular) q = q / (nodes[j] - xi);
        DD spread(1.0);
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) spread = spread * (nodes[j] - nodes[k]);
        weights[j] = q / spread;
    }
    return detail::reconstruct_extended(nodes, weights);
}

double checked_residual(const ZeroSet& input, const JacobiMatrix& J, const PerturbationSpec& spec) {
    const ZeroSet again = spectrum(J, spec);
    const double residual = spectrum_mismatch(input.zeros(), again.zeros());
    if (!(residual <= kRoundTripTol * (1.0 + max_modulus(input.zeros()))))
        throw NumericalError("inverse problem: reconstructed matrix does not reproduce the spectrum (residual " +
                             std::to_string(residual) + ")");
    return residual;
}

// Broken interlacing around `at` with the isolated zero restored: lams gains
// `at`, and the enlarged set must interlace mus strictly.
JacobiMatrix reconstruct_singular(const std::vector<cplx>& rest, cplx alpha, double at, const Tolerances& tol) {
    std::vector<double> lams{at};
    std::vector<double> mus;
    if (!rest.empty()) {
        const ZeroSet rest_set(rest, tol.real_axis);
        const ConfigReport rep = classify_config(rest_set, alpha, at, tol);
        if (rep.verdict == Verdict::HasRealZero)
            throw ValidationError("singular case: remaining zeros must be non-real");
        if (rep.verdict != Verdict::Less)
            throw ValidationError("singular case: shifted angle sum of the remaining zeros must be below Arg alpha");
        const PencilSplit pencil = pencil_split(from_roots(rest), alpha);
        const auto hat = real_roots(pencil.p);
        lams.insert(lams.end(), hat.begin(), hat.end());
        mus = real_roots(pencil.r);
        std::sort(lams.begin(), lams.end());
    }
    if (!is_strictly_interlacing(lams, mus, tol.interlace_separation))
        throw NumericalError("singular case: recovered zeros fail to interlace (numerical breakdown)");
    if (rest.empty()) return JacobiMatrix({at}, {});
    lams.erase(std::find(lams.begin(), lams.end(), at));
    return pencil_jacobi(rest, alpha, lams, at, true);
}

// The t with phase(zeros, t) = target, for zeros in the upper half-plane where
// the phase increases strictly from -n pi to 0. Newton steps safeguarded by
// bisection.
double solve_phase(const ZeroSet& zeros, double target, double scale) {
    double lo = -2.0 * (1.0 + scale), hi = 2.0 * (1.0 + scale);
    while (phase(zeros, lo) > target) lo *= 2.0;
    while (phase(zeros, hi) < target) hi *= 2.0;
    double t = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double g = phase(zeros, t) - target;
        if (g == 0.0) return t;
        if (g < 0.0)
            lo = t;
        else
            hi = t;
        double slope = 0.0;
        for (const cplx& z : zeros.zeros()) slope += z.imag() / std::norm(t - z);
        double next = t - g / slope;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - t) <= 2.0 * std::numeric_limits<double>::epsilon() * std::abs(t) || hi - lo <= 0.0 ||
            next == lo || next == hi)
            return next;
        t = next;
    }
    return t;
}

}  // namespace

void validate(const PerturbationSpec& spec) {
    std::visit(overloaded{
                   [](const AdditiveRank1& s) {
                       if (!std::isfinite(s.l)) throw ValidationError("additive perturbation: l must be finite");
                   },
                   [](const MultiplicativeRank1& s) {
                       if (!(s.k > 0) || !std::isfinite(s.k))
                           throw ValidationError("multiplicative perturbation: k must be positive");
                   },
                   [](const Rank2& s) {
                       if (!std::isfinite(s.l)) throw ValidationError("rank-two perturbation: l must be finite");
                       if (!(s.m > 0) || !std::isfinite(s.m))
                           throw ValidationError("rank-two perturbation: m must be positive");
                   },
               },
               spec);
}

PerturbedMatrix build(const JacobiMatrix& J, const PerturbationSpec& spec) {
    validate(spec);
    CMatrix m = J.dense();
    std::visit(overloaded{
                   [&](const AdditiveRank1& s) { m(0, 0) += cplx(0.0, s.l); },
                   [&](const MultiplicativeRank1& s) {
                       const cplx f(1.0, s.k);
                       m(0, 0) *= f;
                       if (J.size() > 1) m(1, 0) *= f;
                   },
                   [&](const Rank2& s) {
                       require_rank2_size(J);
                       m(0, 0) += cplx(0.0, s.l);
                       m(1, 0) += cplx(0.0, s.m);
                   },
               },
               spec);
    return {J, spec, std::move(m)};
}

double rank2_shift(const JacobiMatrix& J, const Rank2& spec) {
    require_rank2_size(J);
    if (!(spec.m > 0)) throw ValidationError("rank-two perturbation: m must be positive");
    return J.b()[0] - spec.l * J.a()[0] / spec.m;
}

ComplexPoly perturbed_char_poly(const JacobiMatrix& J, const PerturbationSpec& spec) {
    validate(spec);
    const auto polys = char_polys(J);
    const RealPoly& p0 = polys[0];
    const RealPoly& p1 = polys[1];
    const std::size_t n = J.size();

    // alpha p0 + (1 - alpha)(z - xi) p1
    auto pencil = [&](cplx alpha, double xi) {
        const RealPoly shifted = RealPoly({-xi, 1.0}) * p1;
        std::vector<cplx> c(n + 1);
        for (std::size_t j = 0; j <= n; ++j) c[j] = alpha * p0[j] + (1.0 - alpha) * shifted[j];
        c[n] = 1.0;
        return ComplexPoly(std::move(c));
    };

    return std::visit(overloaded{
                          [&](const AdditiveRank1& s) { return classical_combine(p0, p1, s.l); },
                          [&](const MultiplicativeRank1& s) { return pencil(alpha_from_k(s.k), 0.0); },
                          [&](const Rank2& s) {
                              const double xi = rank2_shift(J, s);
                              return pencil(alpha_from_k(s.m / J.a()[0]), xi);
                          },
                      },
                      spec);
}

ZeroSet spectrum(const JacobiMatrix& J, const PerturbationSpec& spec) {
    std::vector<cplx> z = roots(perturbed_char_poly(J, spec)).zeros();

    // Every perturbation only touches the first row and column, so the
    // perturbed matrix stays tridiagonal: diagonal d, off-diagonal products c.
    const std::size_t n = J.size();
    std::vector<cplx> d(J.b().begin(), J.b().end());
    std::vector<cplx> c(n > 0 ? n - 1 : 0);
    for (std::size_t j = 0; j + 1 < n; ++j) c[j] = J.a()[j] * J.a()[j];
    std::visit(overloaded{
                   [&](const AdditiveRank1& s) { d[0] += cplx(0.0, s.l); },
                   [&](const MultiplicativeRank1& s) {
                       d[0] *= cplx(1.0, s.k);
                       if (n > 1) c[0] *= cplx(1.0, s.k);
                   },
                   [&](const Rank2& s) {
                       d[0] += cplx(0.0, s.l);
                       c[0] = J.a()[0] * cplx(J.a()[0], s.m);
                   },
               },
               spec);

    // det(x - M) and its derivative by the three-term recurrence, which is
    // backward stable in the matrix entries, unlike the coefficient form.
    auto det = [&](cplx x) {
        cplx f1 = 1.0, f2 = 0.0, g1 = 0.0, g2 = 0.0;
        for (std::size_t j = n; j-- > 0;) {
            const cplx cj = j + 1 < n ? c[j] : cplx(0.0);
            const cplx f = (x - d[j]) * f1 - cj * f2;
            const cplx g = f1 + (x - d[j]) * g1 - cj * g2;
            f2 = f1;
            f1 = f;
            g2 = g1;
            g1 = g;
        }
        return std::pair{f1, g1};
    };

    for (std::size_t i = 0; i < z.size(); ++i) {
        double gap = INFINITY;
        for (std::size_t j = 0; j < z.size(); ++j)
            if (j != i) gap = std::min(gap, std::abs(z[i] - z[j]));
        auto [f, g] = det(z[i]);
        for (int k = 0; k < 8 && f != 0.0 && g != 0.0; ++k) {
            const cplx step = f / g;
            if (!(std::abs(step) < 0.25 * gap)) break;
            const cplx cand = z[i] - step;
            const auto [fc, gc] = det(cand);
            if (!(std::abs(fc) < std::abs(f))) break;
            z[i] = cand;
            f = fc;
            g = gc;
            if (std::abs(step) <= std::numeric_limits<double>::epsilon() * std::abs(z[i])) break;
        }
    }
    return ZeroSet(std::move(z));
}

AdditiveSolution inverse_additive(const ZeroSet& zeros, const Tolerances&) {
    if (zeros.empty()) throw ValidationError("inverse_additive: empty spectrum");
    // The theorem only needs Im z_j > 0; the routine below never divides by
    // Im z_j, so no safety band around the axis is applied.
    for (const cplx& w : zeros.zeros())
        if (!(w.imag() > 0.0) || !std::isfinite(w.real()))
            throw ValidationError(
                "inverse_additive: Hermite-Biehler theorem requires every zero in the open upper half-plane");

    // h = p - i l q with l = sum Im z_j. The zeros of p are where the phase of
    // h, a strictly increasing function for zeros in the upper half-plane,
    // crosses -pi/2 - m pi; the weights follow from |h| at those points. Both
    // use the factored form of h, which keeps eigenvalue pairs of J and J^(1)
    // that nearly coincide resolvable.
    const ZeroSet upper(zeros.zeros(), 0.0);
    const std::vector<cplx>& z = upper.zeros();
    const std::size_t n = z.size();
    double l = 0.0, radius = 0.0;
    for (const cplx& w : z) {
        l += w.imag();
        radius = std::max(radius, std::abs(w));
    }

    std::vector<double> lams(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double target = -kHalfPi - std::numbers::pi * static_cast<double>(n - 1 - j);
        lams[j] = solve_phase(upper, target, radius + l);
    }
    for (std::size_t j = 1; j < n; ++j)
        if (!(lams[j] > lams[j - 1])) throw NumericalError("inverse_additive: zeros of p are not simple");

    // Both the nodes and the weights are needed well beyond working precision:
    // when an eigenvalue of J nearly coincides with one of J^(1), rounding the
    // node to double moves the reconstructed matrix by far more than the
    // rounding itself. Newton on Re h in double-double recovers the digits.
    std::vector<DD> nodes(lams.begin(), lams.end());
    for (std::size_t j = 0; j < n; ++j) {
        for (int iter = 0; iter < 3; ++iter) {
            const DDComplex h = factored(z, nodes[j]);
            cplx log_slope = 0.0;
            for (const cplx& w : z) log_slope += 1.0 / (nodes[j].value() - w);
            const double slope = (cplx(h.re.value(), h.im.value()) * log_slope).real();
            if (slope == 0.0 || !std::isfinite(slope)) break;
            nodes[j] -= h.re / DD(slope);
        }
    }
    DD l_ext;
    for (const cplx& w : z) l_ext += w.imag();
    std::vector<DD> weights(n);
    for (std::size_t j = 0; j < n; ++j) {
        DD spread(1.0);
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) spread = spread * (nodes[j] - nodes[k]);
        weights[j] = -factored(z, nodes[j]).im / l_ext / spread;
    }
    for (std::size_t j = 1; j < n; ++j)
        if (!(nodes[j - 1] < nodes[j])) throw NumericalError("inverse_additive: zeros of p are not simple");

    JacobiMatrix J = detail::reconstruct_extended(nodes, weights);
    const double residual = checked_residual(zeros, J, AdditiveRank1{l});
    return {std::move(J), l, residual};
}

MultiplicativeSolution inverse_multiplicative(const ZeroSet& zeros, std::optional<double> k, const Tolerances& tol) {
    if (zeros.empty()) throw ValidationError("inverse_multiplicative: empty spectrum");

    if (k) {
        if (!(*k > 0) || !std::isfinite(*k)) throw ValidationError("inverse_multiplicative: k must be positive");
        const auto [rest] = remove_simple_zero(zeros, 0.0, tol);
        JacobiMatrix J = reconstruct_singular(rest, alpha_from_k(*k), 0.0, tol);
        const double residual = checked_residual(zeros, J, MultiplicativeRank1{*k});
        return {std::move(J), *k, true, residual};
    }

    if (has_zero_near(zeros, 0.0, tol))
        throw ValidationError(
            "inverse_multiplicative: spectrum contains 0, so det J = 0 and k must be supplied (not unique otherwise)");
    if (zeros.n_real() > 0) throw ValidationError("inverse_multiplicative: spectrum must be non-real");
    const double sum = arg_sum(zeros, 0.0);
    if (!(sum > 0 && sum < kHalfPi))
        throw ValidationError("inverse_multiplicative: angle sum must lie in (0, pi/2) for det J != 0");

    const double kk = std::tan(sum);
    const GeneralizedSplit gs = generalized_split(from_roots(zeros.zeros()), alpha_from_k(kk), 0.0, tol);
    if (gs.report.verdict != Verdict::Equal)
        throw NumericalError("inverse_multiplicative: angle sum drifted off Arg alpha");
    if (!gs.interlacing_ok) throw NumericalError("inverse_multiplicative: " + gs.warning);
    const double limit = tol.simple_zero * (1.0 + max_modulus(zeros.zeros()));
    for (double lam : gs.lams)
        if (std::abs(lam) <= limit)
            throw ValidationError("inverse_multiplicative: recovered J is singular; use the singular case with k");

    JacobiMatrix J = pencil_jacobi(zeros.zeros(), alpha_from_k(kk), gs.lams, 0.0, false);
    const double residual = checked_residual(zeros, J, MultiplicativeRank1{kk});
    return {std::move(J), kk, false, residual};
}

Rank2Solution inverse_rank2(const ZeroSet& zeros, double xi, std::optional<double> ratio, const Tolerances& tol) {
    if (zeros.size() < 2) throw ValidationError("inverse_rank2: need at least two zeros");
    if (!std::isfinite(xi)) throw ValidationError("inverse_rank2: xi must be finite");

    if (ratio) {
        if (!(*ratio > 0) || !std::isfinite(*ratio)) throw ValidationError("inverse_rank2: A must be positive");
        const auto [rest] = remove_simple_zero(zeros, xi, tol);
        JacobiMatrix J = reconstruct_singular(rest, alpha_from_k(*ratio), xi, tol);
        const double m = J.a()[0] * *ratio;
        const double l = *ratio * (J.b()[0] - xi);
        const double residual = checked_residual(zeros, J, Rank2{l, m});
        return {std::move(J), l, m, xi, true, residual};
    }

    if (has_zero_near(zeros, xi, tol))
        throw ValidationError("inverse_rank2: spectrum contains xi, so det(J - xi) = 0 and A must be supplied");
    const double angle = arg_sum(zeros, xi);
    if (!(angle > 0 && angle < kHalfPi))
        throw ValidationError("inverse_rank2: shifted angle sum must lie in (0, pi/2)");

    const double tan_a = std::tan(angle);
    const GeneralizedSplit gs = generalized_split(from_roots(zeros.zeros()), alpha_from_k(tan_a), xi, tol);
    if (gs.report.verdict != Verdict::Equal) throw NumericalError("inverse_rank2: angle sum drifted off Arg alpha");
    if (!gs.interlacing_ok) throw NumericalError("inverse_rank2: " + gs.warning);

    JacobiMatrix J = pencil_jacobi(zeros.zeros(), alpha_from_k(tan_a), gs.lams, xi, false);
    const double m = J.a()[0] * tan_a;
    const double l = tan_a * (J.b()[0] - xi);
    const double residual = checked_residual(zeros, J, Rank2{l, m});
    return {std::move(J), l, m, xi, false, residual};
}

double spectrum_mismatch(const std::vector<cplx>& expected, const std::vector<cplx>& actual) {
    if (expected.size() != actual.size()) return std::numeric_limits<double>::infinity();
    std::vector<bool> used(actual.size(), false);
    double worst = 0.0;
    for (const cplx& z : expected) {
        std::size_t best = actual.size();
        double dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < actual.size(); ++j)
            if (!used[j] && std::abs(actual[j] - z) < dist) {
                dist = std::abs(actual[j] - z);
                best = j;
            }
        used[best] = true;
        worst = std::max(worst, dist);
    }
    return worst;
}

}  // namespace hb
