#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hb/hodograph.hpp"
#include "hb/poly.hpp"

namespace hb {

/// h = p - i l q with p, q monic real. q is absent when h is real (l = 0),
/// which is the unperturbed Hermitian case.
struct ClassicalSplit {
    RealPoly p;
    std::optional<RealPoly> q;
    double l = 0.0;

    bool hermitian() const { return !q.has_value(); }
};

/// h = alpha p + (1 - alpha) r with p, r monic real of the same degree.
struct PencilSplit {
    RealPoly p;
    RealPoly r;
    cplx alpha;
};

/// alpha = 1 + i k, the parametrization used by the matrix perturbations.
inline cplx alpha_from_k(double k) { return {1.0, k}; }

/// p - i l q. Requires p monic of degree n and q monic of degree <= n - 1.
ComplexPoly classical_combine(const RealPoly& p, const RealPoly& q, double l);

/// Inverse of classical_combine for a monic h.
ClassicalSplit classical_split(const ComplexPoly& h);

struct HbCheck {
    bool holds = false;            // l > 0 and zeros of p, q real, simple, strictly interlacing
    bool combined_in_upper = false;  // every root of p - i l q lies in the open upper half-plane
    bool agree = false;            // the two routes give the same answer
    std::string reason;            // why holds is false
};

/// Hermite-Biehler criterion for p - i l q, checked against the root locations
/// of the combined polynomial.
HbCheck hb_verify(const RealPoly& p, const RealPoly& q, double l, const Tolerances& tol = {});

/// alpha p + (1 - alpha)(z - xi) q. Requires Im alpha > 0, p monic of degree
/// n, q monic of degree n - 1 and p(xi) != 0.
ComplexPoly generalized_combine(const RealPoly& p, const RealPoly& q, cplx alpha, double xi = 0.0);

/// Unique monic real p, r with h = alpha p + (1 - alpha) r, solving the 2x2
/// real system per coefficient. Requires Im alpha != 0 and h monic.
PencilSplit pencil_split(const ComplexPoly& h, cplx alpha);

struct GeneralizedSplit {
    ConfigReport report;
    RealPoly p;
    // Equal branch: q with r = (z - xi) q. Less branch: r itself.
    RealPoly second;
    std::vector<double> lams;  // zeros of p, ascending
    std::vector<double> mus;   // zeros of second, ascending
    int s = 0;                 // zeros of p below xi
    bool interlacing_ok = false;
    std::string warning;
};

/// Converse direction of the broken-interlacing theorems. The verdict of
/// classify_config picks the branch; Neither and HasRealZero are rejected with
/// ValidationError. An interlacing failure on an accepted verdict is reported
/// through interlacing_ok / warning rather than thrown.
GeneralizedSplit generalized_split(const ComplexPoly& h, cplx alpha, double xi = 0.0,
                                   const Tolerances& tol = {});

}  // namespace hb
