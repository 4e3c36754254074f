#pragma once

#include <optional>
#include <variant>

#include "hb/hb_transform.hpp"
#include "hb/jacobi.hpp"

namespace hb {

/// b_1 -> b_1 + i l.
struct AdditiveRank1 {
    double l;
};
/// J (I + i k e_1 e_1^T): first column scaled by 1 + i k, k > 0.
struct MultiplicativeRank1 {
    double k;
};
/// b_1 -> b_1 + i l and the (2,1) entry a_1 -> a_1 + i m, m > 0.
struct Rank2 {
    double l;
    double m;
};

using PerturbationSpec = std::variant<AdditiveRank1, MultiplicativeRank1, Rank2>;

/// Throws ValidationError unless k > 0 / m > 0 and all parameters are finite.
void validate(const PerturbationSpec& spec);

struct PerturbedMatrix {
    JacobiMatrix base;
    PerturbationSpec spec;
    CMatrix entries;
};

PerturbedMatrix build(const JacobiMatrix& J, const PerturbationSpec& spec);

/// Shift of the rank-two pencil, xi = b_1 - l a_1 / m.
double rank2_shift(const JacobiMatrix& J, const Rank2& spec);

/// det(z - perturbed matrix) from p_0 = det(z - J) and p_1 = det(z - J^{(1)}):
///   additive:        p_0 - i l p_1
///   multiplicative:  (1 + i k) p_0 - i k z p_1
///   rank two:        alpha p_0 + (1 - alpha)(z - xi) p_1, alpha = 1 + i m / a_1
ComplexPoly perturbed_char_poly(const JacobiMatrix& J, const PerturbationSpec& spec);

ZeroSet spectrum(const JacobiMatrix& J, const PerturbationSpec& spec);

// residual: largest zero mismatch after re-solving the forward problem.
struct AdditiveSolution {
    JacobiMatrix jacobi;
    double l;
    double residual;
};

struct MultiplicativeSolution {
    JacobiMatrix jacobi;
    double k;
    bool singular;  // det J = 0
    double residual;
};

struct Rank2Solution {
    JacobiMatrix jacobi;
    double l;
    double m;
    double xi;
    bool singular;  // det(J - xi) = 0
    double residual;
};

/// Jacobi matrix and l > 0 whose additive perturbation has the given
/// spectrum. Every zero must lie strictly in the upper half-plane.
AdditiveSolution inverse_additive(const ZeroSet& zeros, const Tolerances& tol = {});

/// Without k: det J != 0, the angle sum fixes k = tan(sum). With k: the
/// singular case, exactly one zero at 0 and the rest with angle sum below
/// arctan k.
MultiplicativeSolution inverse_multiplicative(const ZeroSet& zeros, std::optional<double> k = std::nullopt,
                                              const Tolerances& tol = {});

/// Without ratio: det(J - xi) != 0, A = sum arg_mod_pi(z_j - xi) in (0, pi/2)
/// gives m = a_1 tan A. With ratio = m / a_1: the singular case, exactly one
/// zero at xi and the rest with shifted angle sum below arctan(ratio).
Rank2Solution inverse_rank2(const ZeroSet& zeros, double xi, std::optional<double> ratio = std::nullopt,
                            const Tolerances& tol = {});

/// Largest distance between the two zero multisets after greedy nearest matching.
double spectrum_mismatch(const std::vector<cplx>& expected, const std::vector<cplx>& actual);

}  // namespace hb
