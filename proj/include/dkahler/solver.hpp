#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "dkahler/equations.hpp"

namespace dkahler {

using Matrix16 = Eigen::Matrix<Complex, kBladeCount, kBladeCount>;
using Vector16 = Eigen::Matrix<Complex, kBladeCount, 1>;

/// Discrete momentum n with 0 <= n_mu < N_mu.
struct Momentum {
  std::array<int, kDimensions> n{};
  friend auto operator<=>(const Momentum &, const Momentum &) = default;
};

using Symbol = std::array<Complex, kDimensions>;

/// lambda_mu = exp(2 pi i n_mu / N_mu) - 1, the eigenvalue of Delta_mu on
/// the plane wave exp(2 pi i sum_mu n_mu k_mu / N_mu).
Symbol symbol(const Momentum &n, const LatticeShape &shape);

// Matrices of a -> m*a and a -> a*m in the blade basis.
Matrix16 left_mul_matrix(const Multivector &m);
Matrix16 right_mul_matrix(const Multivector &m);

Vector16 to_vector(const Multivector &m);
Multivector to_multivector(const Vector16 &v);

/// An equation restricted to one plane wave reads lhs * psi = m * carrier * psi.
struct SymbolPair {
  Matrix16 lhs;
  Matrix16 carrier;
};

SymbolPair symbol_matrix(EquationKind kind, const Symbol &lambda);

struct MomentumMode {
  Momentum n;
  Symbol lambda{};
  Complex mass;
  Multivector amplitude; // unit 2-norm
};

struct EigenOptions {
  // Eigenvalues closer than cluster_tol * max(1, |A|) share an eigenspace.
  double cluster_tol = 1e-6;
  // Singular values below null_tol * max(1, |A|) span the eigenspace.
  double null_tol = 1e-9;
};

/// Eigenpairs of carrier^-1 * lhs at momentum n. Each eigenspace is returned
/// as an orthonormal basis; modes are ordered by (Re m, Im m), then
/// lexicographically by amplitude. Defective eigenvalues contribute only
/// their true eigenvectors. Throws NumericError if an eigenvalue cluster has
/// no numerically null direction.
std::vector<MomentumMode> eigenmodes(EquationKind kind, const LatticeShape &shape,
                                     const Momentum &n, const EigenOptions &opts = {});

FormField plane_wave(const MomentumMode &mode, const LatticeShape &shape);

} // namespace dkahler
