#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hb/poly.hpp"

namespace hb {

/// Argument reduced modulo pi into [0, pi): Arg z on the upper half-plane,
/// pi + Arg z on the lower one, 0 on the real axis. Throws on z = 0.
double arg_mod_pi(cplx z);

/// Continuous branch of arg h(t) on the real line, as the sum of principal
/// arguments of t - z_j. Requires a zero set without real members.
double phase(const ZeroSet& zeros, double t);

struct PhaseSample {
    double t;
    cplx value;  // h(t)
    double phi;
};

/// Adaptive trace of the hodograph t -> h(t) over [-T, T] with
/// T = 2 (1 + max|z_j|). The branch of arg h is tracked by unwrapping the
/// argument of h evaluated from its coefficients; consecutive samples differ
/// in phase by less than pi/4 unless the point cap was hit.
std::vector<PhaseSample> trace_hodograph(const ZeroSet& zeros);

struct PhaseIncrement {
    double symbolic;  // pi (n_+ - n_-)
    double numeric;   // unwrapped change of arg h(t) along the real line
};

/// Total change of the phase along the real line. The numeric route traces
/// arg h(t) far enough out that the neglected tails are below 1e-8 and must
/// agree with the symbolic count within 1e-6 (NumericalError otherwise).
PhaseIncrement phase_increment(const ZeroSet& zeros);

/// Sum of arg_mod_pi(z_j - xi).
double arg_sum(const ZeroSet& zeros, double xi = 0.0);

enum class Verdict { Equal, Less, Neither, HasRealZero };
std::string_view to_string(Verdict v);

struct ConfigReport {
    double arg_sum = 0.0;
    double arg_alpha = 0.0;
    double a1 = 0.0;  // arg_mod_pi(1 - alpha)
    double a2 = 0.0;  // arg_mod_pi(alpha)
    int n_plus = 0;
    int n_minus = 0;
    int s = 0;  // zeros in the lower half-plane
    Verdict verdict = Verdict::Neither;
};

/// Classifies a zero set against the broken-interlacing theorems with the
/// break shifted to xi: Equal when the shifted angle sum matches Arg alpha,
/// Less when it is strictly below, Neither otherwise. HasRealZero is reported
/// when some z_j - xi is real within tolerance. Requires Im alpha > 0.
ConfigReport classify_config(const ZeroSet& zeros, cplx alpha, double xi = 0.0,
                             const Tolerances& tol = {});

struct Localization {
    int s = 0;
    bool at_boundary = false;
};

/// For zeros all in the upper half-plane: the number s of negative zeros of
/// the real part p, from pi/2 + pi(s-1) < sum Arg z_j < pi/2 + pi s. When the
/// sum sits on pi/2 + pi s within tolerance, p(0) = 0 and at_boundary is set.
Localization localization(const ZeroSet& zeros, const Tolerances& tol = {});

}  // namespace hb
