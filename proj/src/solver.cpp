#include "dkahler/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace dkahler {

namespace {

constexpr Complex kI{0.0, 1.0};

// exp(2 pi i j / n), exact at multiples of a quarter turn.
Complex root_of_unity(long j, long n) {
  j %= n;
  if (j < 0)
    j += n;
  if (j == 0)
    return 1.0;
  if (2 * j == n)
    return -1.0;
  if (4 * j == n)
    return kI;
  if (4 * j == 3 * n)
    return -kI;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                             static_cast<double>(n));
}

void check_momentum(const Momentum &n, const LatticeShape &shape) {
  for (int mu = 0; mu < kDimensions; ++mu) {
    const int v = n.n[static_cast<std::size_t>(mu)];
    if (v < 0 || v >= shape.extent(mu))
      throw UsageError("momentum component " + std::to_string(v) + " outside 0.." +
                       std::to_string(shape.extent(mu) - 1) + " in direction " +
                       std::to_string(mu));
  }
}

// Sort key on a 1e-9 grid so that roundoff does not reorder equal masses.
std::pair<long long, long long> mass_key(Complex m) {
  return {std::llround(m.real() * 1e9), std::llround(m.imag() * 1e9)};
}

bool amplitude_less(const Multivector &a, const Multivector &b) {
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    const auto ka = std::pair{std::llround(a.c[i].real() * 1e12), std::llround(a.c[i].imag() * 1e12)};
    const auto kb = std::pair{std::llround(b.c[i].real() * 1e12), std::llround(b.c[i].imag() * 1e12)};
    if (ka != kb)
      return ka < kb;
  }
  return false;
}

// First component of non-negligible size becomes real and positive.
Vector16 fix_phase(Vector16 v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-8) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = std::abs(v(i));
      break;
    }
  }
  return v;
}

// Single-linkage clusters of eigenvalues.
std::vector<std::vector<Complex>> cluster(const Vector16 &values, double tol) {
  std::vector<int> parent(kBladeCount);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[static_cast<std::size_t>(i)] != i)
      i = parent[static_cast<std::size_t>(i)];
    return i;
  };
  for (int i = 0; i < kBladeCount; ++i)
    for (int j = i + 1; j < kBladeCount; ++j)
      if (std::abs(values(i) - values(j)) <= tol)
        parent[static_cast<std::size_t>(find(j))] = find(i);

  std::vector<std::vector<Complex>> groups(kBladeCount);
  for (int i = 0; i < kBladeCount; ++i)
    groups[static_cast<std::size_t>(find(i))].push_back(values(i));
  std::erase_if(groups, [](const auto &g) { return g.empty(); });
  return groups;
}

} // namespace

Symbol symbol(const Momentum &n, const LatticeShape &shape) {
  check_momentum(n, shape);
  Symbol lambda{};
  for (int mu = 0; mu < kDimensions; ++mu) {
    const auto m = static_cast<std::size_t>(mu);
    lambda[m] = root_of_unity(n.n[m], shape.extent(mu)) - 1.0;
  }
  return lambda;
}

Vector16 to_vector(const Multivector &m) {
  Vector16 v;
  for (int i = 0; i < kBladeCount; ++i)
    v(i) = m.c[static_cast<std::size_t>(i)];
  return v;
}

Multivector to_multivector(const Vector16 &v) {
  Multivector m;
  for (int i = 0; i < kBladeCount; ++i)
    m.c[static_cast<std::size_t>(i)] = v(i);
  return m;
}

Matrix16 left_mul_matrix(const Multivector &m) {
  Matrix16 out = Matrix16::Zero();
  for (unsigned j = 0; j < kBladeCount; ++j)
    out.col(j) = to_vector(m * Multivector::blade(Blade(j)));
  return out;
}

Matrix16 right_mul_matrix(const Multivector &m) {
  Matrix16 out = Matrix16::Zero();
  for (unsigned j = 0; j < kBladeCount; ++j)
    out.col(j) = to_vector(Multivector::blade(Blade(j)) * m);
  return out;
}

SymbolPair symbol_matrix(EquationKind kind, const Symbol &lambda) {
  Multivector slash;
  for (int mu = 0; mu < kDimensions; ++mu)
    slash += lambda[static_cast<std::size_t>(mu)] * Multivector::generator(mu);
  const Matrix16 S = left_mul_matrix(slash);

  SymbolPair out{Matrix16::Zero(), right_mul_matrix(mass_carrier(kind))};
  switch (kind) {
  case EquationKind::dirac_kahler:
  case EquationKind::joyce:
    out.lhs = kI * S;
    break;
  case EquationKind::hestenes:
    out.lhs = -right_mul_matrix(Multivector::blade(Blade::of({1, 2}))) * S;
    break;
  case EquationKind::volume:
    out.lhs = -S;
    break;
  }
  return out;
}

std::vector<MomentumMode> eigenmodes(EquationKind kind, const LatticeShape &shape,
                                     const Momentum &n, const EigenOptions &opts) {
  const Symbol lambda = symbol(n, shape);
  const SymbolPair sp = symbol_matrix(kind, lambda);
  const Matrix16 A = sp.carrier.partialPivLu().solve(sp.lhs);
  const double scale = std::max(1.0, A.norm());

  Eigen::ComplexEigenSolver<Matrix16> es(A, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw NumericError("eigenvalue iteration did not converge for equation " +
                       std::string(to_string(kind)));

  std::vector<std::vector<Complex>> clusters = cluster(es.eigenvalues(), opts.cluster_tol * scale);
  std::vector<Complex> masses;
  masses.reserve(clusters.size());
  for (const auto &g : clusters)
    masses.push_back(std::accumulate(g.begin(), g.end(), Complex{}) /
                     static_cast<double>(g.size()));
  std::vector<std::size_t> order(clusters.size());
  std::iota(order.begin(), order.end(), 0);
  std::ranges::sort(order, [&](std::size_t a, std::size_t b) {
    return mass_key(masses[a]) < mass_key(masses[b]);
  });

  std::vector<MomentumMode> modes;
  for (std::size_t c : order) {
    const Complex m = masses[c];
    const Matrix16 shifted = A - m * Matrix16::Identity();
    Eigen::JacobiSVD<Matrix16> svd(shifted, Eigen::ComputeFullV);
    const auto &sigma = svd.singularValues();

    std::size_t null_dim = 0;
    for (Eigen::Index i = kBladeCount - 1; i >= 0 && sigma(i) <= opts.null_tol * scale; --i)
      ++null_dim;
    null_dim = std::min(null_dim, clusters[c].size());
    if (null_dim == 0) {
      std::ostringstream msg;
      msg << "no eigenvector found for mass " << m << " (cluster of " << clusters[c].size()
          << ", smallest singular value " << sigma(kBladeCount - 1) << ", |A| = " << scale
          << ")";
      throw NumericError(msg.str());
    }

    std::vector<MomentumMode> block;
    for (std::size_t j = 0; j < null_dim; ++j) {
      const Vector16 v = fix_phase(svd.matrixV().col(kBladeCount - 1 - static_cast<Eigen::Index>(j)));
      const double err = ((sp.lhs - m * sp.carrier) * v).cwiseAbs().maxCoeff();
      if (err > 1e-10) {
        std::ostringstream msg;
        msg << "eigenvector residual " << err << " for mass " << m << " exceeds 1e-10";
        throw NumericError(msg.str());
      }
      block.push_back({n, lambda, m, to_multivector(v)});
    }
    std::ranges::sort(block, [](const MomentumMode &a, const MomentumMode &b) {
      return amplitude_less(a.amplitude, b.amplitude);
    });
    modes.insert(modes.end(), block.begin(), block.end());
  }
  return modes;
}

FormField plane_wave(const MomentumMode &mode, const LatticeShape &shape) {
  check_momentum(mode.n, shape);
  FormField out(shape);
  for (std::size_t s = 0; s < shape.site_count(); ++s) {
    const SiteIndex k = shape.site_at(s);
    Complex phase = 1.0;
    for (int mu = 0; mu < kDimensions; ++mu) {
      const auto m = static_cast<std::size_t>(mu);
      phase *= root_of_unity(static_cast<long>(mode.n.n[m]) * k.k[m], shape.extent(mu));
    }
    for (unsigned b = 0; b < kBladeCount; ++b)
      out(s, Blade(b)) = mode.amplitude.c[b] * phase;
  }
  return out;
}

} // namespace dkahler
