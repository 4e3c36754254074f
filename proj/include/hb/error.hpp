#pragma once

#include <stdexcept>
#include <string>

namespace hb {

// Input violates a precondition (bad shape, wrong half-plane, theorem hypothesis not met).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A solver failed to converge or a numerical consistency check broke down.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Decision thresholds shared by the classifiers and inverse solvers.
struct Tolerances {
    // |Im z| <= real_axis * (1 + |z|) counts as a real zero.
    double real_axis = 1e-10;
    // Angle sums are compared with slack angle * n.
    double angle = 1e-8;
    // |z - xi| <= simple_zero * (1 + max|z_j|) counts as a zero at xi.
    double simple_zero = 1e-8;
    // |r(xi)| <= division_residual * (1 + |xi|)^n before factoring out (z - xi).
    double division_residual = 1e-8;
    // Interlacing gaps must exceed interlace_separation * (lam_n - lam_1).
    double interlace_separation = 1e-9;
};

}  // namespace hb
