#include "hb/hodograph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hb {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRefineStep = kPi / 4.0;
constexpr std::size_t kMaxSamples = std::size_t{1} << 20;
constexpr int kUniformPoints = 256;

void require_no_real(const ZeroSet& zeros, const char* what) {
    if (zeros.n_real() > 0) throw ValidationError(std::string(what) + ": zero set has a real member");
}

double max_modulus(const ZeroSet& zeros) {
    double r = 0.0;
    for (const cplx& z : zeros.zeros()) r = std::max(r, std::abs(z));
    return r;
}

// arg h(t) from the coefficients. For |t| > 1 the reversed polynomial in 1/t
// is used so that large abscissae do not overflow.
double coeff_arg(const ComplexPoly& h, double t) {
    if (std::abs(t) <= 1.0) return std::arg(eval(h, cplx(t)));
    const auto& c = h.coeffs();
    const double u = 1.0 / t;
    cplx acc = 0.0;
    for (const cplx& cj : c) acc = acc * u + cj;
    const double n = static_cast<double>(h.degree());
    return std::arg(acc) + (t < 0 ? n * kPi : 0.0);
}

double wrap(double d) { return std::remainder(d, 2.0 * kPi); }

struct RawSample {
    double t;
    double arg;
};

// Upper bound on the total variation of arg h over [t1, t2]: each factor
// t - z_j turns by at most the angle the segment subtends at z_j.
double variation_bound(const ZeroSet& zeros, double t1, double t2) {
    const double len = t2 - t1;
    double bound = 0.0;
    for (const cplx& z : zeros.zeros()) {
        const double dx = std::max({0.0, t1 - z.real(), z.real() - t2});
        const double dist = std::hypot(dx, z.imag());
        bound += std::min(kPi, len / dist);
    }
    return bound;
}

// Refines the seed abscissae until every phase step is at most kRefineStep and
// no interval can hide a full turn, then unwraps. phi of the last sample is
// anchored at anchor_right up to whole turns.
std::vector<PhaseSample> refine_and_unwrap(const ComplexPoly& h, const ZeroSet& zeros,
                                           std::vector<double> seeds, double anchor_right) {
    std::vector<RawSample> done;
    done.reserve(seeds.size() * 2);
    std::vector<RawSample> pending;  // stack, right end of the current interval on top
    for (auto it = seeds.rbegin(); it != seeds.rend(); ++it) pending.push_back({*it, coeff_arg(h, *it)});

    done.push_back(pending.back());
    pending.pop_back();
    while (!pending.empty()) {
        const RawSample left = done.back();
        const RawSample right = pending.back();
        const double step = std::abs(wrap(right.arg - left.arg));
        const double mid = 0.5 * (left.t + right.t);
        const bool coarse = step > kRefineStep || variation_bound(zeros, left.t, right.t) > kPi / 2.0;
        if (coarse && done.size() + pending.size() < kMaxSamples && mid > left.t &&
            mid < right.t) {
            pending.push_back({mid, coeff_arg(h, mid)});
            continue;
        }
        done.push_back(right);
        pending.pop_back();
    }

    std::vector<PhaseSample> out(done.size());
    double phi = 0.0;
    for (std::size_t j = 0; j < done.size(); ++j) {
        phi = j == 0 ? done[0].arg : phi + wrap(done[j].arg - done[j - 1].arg);
        out[j] = {done[j].t, cplx{}, phi};
    }
    const double shift = anchor_right - out.back().phi;
    // Whole turns only: the unwrapped branch is fixed up to 2 pi k.
    const double turns = std::round(shift / (2.0 * kPi)) * 2.0 * kPi;
    for (auto& s : out) s.phi += turns;
    return out;
}

}  // namespace

double arg_mod_pi(cplx z) {
    if (z == 0.0) throw ValidationError("arg_mod_pi: argument is zero");
    if (z.imag() == 0.0) return 0.0;
    double a = std::arg(z);
    if (a < 0) a += kPi;
    return a;
}

double phase(const ZeroSet& zeros, double t) {
    require_no_real(zeros, "phase");
    double phi = 0.0;
    for (const cplx& z : zeros.zeros()) phi += std::arg(cplx(t) - z);
    return phi;
}

std::vector<PhaseSample> trace_hodograph(const ZeroSet& zeros) {
    require_no_real(zeros, "hodograph");
    const ComplexPoly h = from_roots(zeros.zeros());
    const double half_width = 2.0 * (1.0 + max_modulus(zeros));
    std::vector<double> seeds(kUniformPoints);
    for (int k = 0; k < kUniformPoints; ++k)
        seeds[k] = -half_width + 2.0 * half_width * k / (kUniformPoints - 1);
    auto samples = refine_and_unwrap(h, zeros, std::move(seeds), phase(zeros, half_width));
    for (auto& s : samples) s.value = eval(h, cplx(s.t));
    return samples;
}

PhaseIncrement phase_increment(const ZeroSet& zeros) {
    require_no_real(zeros, "phase_increment");
    const double symbolic = kPi * (zeros.n_plus() - zeros.n_minus());
    if (zeros.empty()) return {0.0, 0.0};

    const double radius = max_modulus(zeros);
    const double inner = 2.0 * (1.0 + radius);
    // Each factor's tail beyond |t| = T is below atan(R / (T - R)).
    const double n = static_cast<double>(zeros.size());
    const double outer = radius + 2.0 * n * radius * 1e8 + inner;

    std::vector<double> seeds{-outer, outer};
    for (double t = 2.0 * inner; t < outer; t *= 2.0) {
        seeds.push_back(t);
        seeds.push_back(-t);
    }
    for (int k = 0; k < kUniformPoints; ++k) seeds.push_back(-inner + 2.0 * inner * k / (kUniformPoints - 1));
    std::sort(seeds.begin(), seeds.end());

    const ComplexPoly h = from_roots(zeros.zeros());
    const auto trace = refine_and_unwrap(h, zeros, std::move(seeds), 0.0);
    const double numeric = trace.back().phi - trace.front().phi;
    if (std::abs(numeric - symbolic) > 1e-6)
        throw NumericalError("phase_increment: traced increment disagrees with the zero count");
    return {symbolic, numeric};
}

double arg_sum(const ZeroSet& zeros, double xi) {
    double sum = 0.0;
    for (std::size_t j = 0; j < zeros.size(); ++j) {
        const cplx w = zeros[j] - xi;
        if (std::abs(w.imag()) <= zeros.real_axis_tol() * (1.0 + std::abs(w)))
            throw ValidationError("arg_sum: zero set has a real member");
        sum += arg_mod_pi(w);
    }
    return sum;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Equal: return "Equal";
        case Verdict::Less: return "Less";
        case Verdict::Neither: return "Neither";
        case Verdict::HasRealZero: return "HasRealZero";
    }
    return "?";
}

ConfigReport classify_config(const ZeroSet& zeros, cplx alpha, double xi, const Tolerances& tol) {
    if (!(alpha.imag() > 0)) throw ValidationError("classify_config: Im alpha must be positive");
    ConfigReport rep;
    rep.arg_alpha = std::arg(alpha);
    rep.a1 = arg_mod_pi(1.0 - alpha);
    rep.a2 = arg_mod_pi(alpha);

    bool has_real = false;
    for (const cplx& z : zeros.zeros()) {
        const cplx w = z - xi;
        if (std::abs(w.imag()) <= tol.real_axis * (1.0 + std::abs(w))) {
            has_real = true;
            continue;
        }
        rep.arg_sum += arg_mod_pi(w);
        if (w.imag() > 0)
            ++rep.n_plus;
        else
            ++rep.n_minus;
    }
    rep.s = rep.n_minus;
    if (has_real) {
        rep.verdict = Verdict::HasRealZero;
        return rep;
    }
    const double slack = tol.angle * static_cast<double>(std::max<std::size_t>(zeros.size(), 1));
    if (std::abs(rep.arg_sum - rep.arg_alpha) <= slack)
        rep.verdict = Verdict::Equal;
    else if (rep.arg_sum < rep.arg_alpha)
        rep.verdict = Verdict::Less;
    else
        rep.verdict = Verdict::Neither;
    return rep;
}

Localization localization(const ZeroSet& zeros, const Tolerances& tol) {
    if (zeros.n_minus() > 0 || zeros.n_real() > 0)
        throw ValidationError("localization: every zero must lie in the upper half-plane");
    double sum = 0.0;
    for (const cplx& z : zeros.zeros()) sum += std::arg(z);
    const double x = (sum - kPi / 2.0) / kPi;
    const double nearest = std::round(x);
    const double slack = tol.angle * static_cast<double>(std::max<std::size_t>(zeros.size(), 1));
    if (std::abs(sum - (kPi / 2.0 + kPi * nearest)) <= slack)
        return {static_cast<int>(nearest), true};
    return {static_cast<int>(std::floor(x)) + 1, false};
}

}  // namespace hb
