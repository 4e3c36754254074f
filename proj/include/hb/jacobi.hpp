#pragma once

#include <cstddef>
#include <vector>

#include "hb/matrix.hpp"
#include "hb/poly.hpp"

namespace hb {

/// Real symmetric tridiagonal matrix with diagonal b (n entries) and strictly
/// positive off-diagonal a (n - 1 entries).
class JacobiMatrix {
public:
    JacobiMatrix(std::vector<double> b, std::vector<double> a);

    std::size_t size() const { return b_.size(); }
    const std::vector<double>& b() const { return b_; }
    const std::vector<double>& a() const { return a_; }

    /// J^{(j)}: the first j rows and columns removed. Requires j < n.
    JacobiMatrix truncated(std::size_t j) const;
    CMatrix dense() const;

private:
    std::vector<double> b_;
    std::vector<double> a_;
};

/// Hermitian n x n matrix (symmetric up to 1e-12 on construction).
class HermitianMatrix {
public:
    explicit HermitianMatrix(CMatrix entries);

    std::size_t size() const { return m_.rows(); }
    const CMatrix& entries() const { return m_; }

private:
    CMatrix m_;
};

/// Characteristic polynomials p_0, ..., p_n of J^{(0)}, ..., J^{(n)} from the
/// backward recurrence p_{j-1} = (z - b_j) p_j - a_j^2 p_{j+1}, p_n = 1.
std::vector<RealPoly> char_polys(const JacobiMatrix& J);

/// Eigenvalues in ascending order (implicit-shift QL, Wilkinson shift).
std::vector<double> eigen(const JacobiMatrix& J);

/// Masses w_j = p_1(lam_j) / p_0'(lam_j) of the spectral measure at e_1, with
/// p_0, p_1 the monic polynomials with zeros lams, mus.
std::vector<double> spectral_weights(const std::vector<double>& lams, const std::vector<double>& mus);

/// The unique Jacobi matrix with spectrum lams (strictly ascending) whose
/// spectral measure at e_1 has masses proportional to w (all positive).
JacobiMatrix reconstruct_from_weights(const std::vector<double>& lams, const std::vector<double>& w);

/// The unique Jacobi matrix with spectrum lams whose first truncation has
/// spectrum mus. Requires strict interlacing.
JacobiMatrix reconstruct(const std::vector<double>& lams, const std::vector<double>& mus,
                         double separation = Tolerances{}.interlace_separation);

struct LanczosResult {
    JacobiMatrix jacobi;
    CMatrix basis;  // k x n, orthonormal rows, basis * v = |v| e_1
    std::size_t k;  // dimension of the Krylov space of v
};

/// Reduces H on the Krylov space of v to Jacobi form, basis H basis^* = J.
/// Stops early when v is not cyclic.
LanczosResult lanczos_reduce(const HermitianMatrix& H, const std::vector<cplx>& v);

}  // namespace hb
