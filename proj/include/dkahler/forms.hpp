#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "dkahler/clifford.hpp"
#include "dkahler/lattice.hpp"

namespace dkahler {

using Complex = std::complex<double>;

/// Value of a form at a single site: one complex coefficient per blade,
/// indexed by blade mask. Also serves as a constant form (the same value
/// at every site).
struct Multivector {
  std::array<Complex, kBladeCount> c{};

  Complex &operator[](Blade b) { return c[b.index()]; }
  const Complex &operator[](Blade b) const { return c[b.index()]; }

  static Multivector unit() { return blade(Blade::unit()); }
  static Multivector volume() { return blade(Blade::volume()); }
  static Multivector generator(int mu);
  static Multivector blade(Blade b, Complex coeff = 1.0);

  Multivector &operator+=(const Multivector &o);
  Multivector &operator-=(const Multivector &o);
  Multivector &operator*=(Complex s);

  friend bool operator==(const Multivector &, const Multivector &) = default;
};

Multivector operator+(Multivector a, const Multivector &b);
Multivector operator-(Multivector a, const Multivector &b);
Multivector operator-(Multivector a);
Multivector operator*(Complex s, Multivector a);
Multivector operator*(const Multivector &a, const Multivector &b);

// Accumulates a*b into out without allocating.
void multiply_add(const Complex *a, const Complex *b, Complex *out);

double sup_norm(const Multivector &a);

/// Discrete inhomogeneous form: 16 complex coefficients per site, stored
/// site-major and blade-minor (blade order = mask 0..15).
class FormField {
public:
  explicit FormField(LatticeShape shape);
  FormField(LatticeShape shape, std::vector<Complex> coeffs);

  const LatticeShape &shape() const { return shape_; }
  std::size_t site_count() const { return shape_.site_count(); }

  Complex &operator()(std::size_t site, Blade b) { return coeffs_[site * kBladeCount + b.index()]; }
  const Complex &operator()(std::size_t site, Blade b) const {
    return coeffs_[site * kBladeCount + b.index()];
  }
  Complex &at(const SiteIndex &site, Blade b);
  const Complex &at(const SiteIndex &site, Blade b) const;

  std::span<Complex, kBladeCount> site(std::size_t s) {
    return std::span<Complex, kBladeCount>(coeffs_.data() + s * kBladeCount, kBladeCount);
  }
  std::span<const Complex, kBladeCount> site(std::size_t s) const {
    return std::span<const Complex, kBladeCount>(coeffs_.data() + s * kBladeCount, kBladeCount);
  }
  Multivector value_at(std::size_t s) const;

  std::span<Complex> coeffs() { return coeffs_; }
  std::span<const Complex> coeffs() const { return coeffs_; }

  FormField &operator+=(const FormField &o);
  FormField &operator-=(const FormField &o);
  FormField &operator*=(Complex s);

  friend bool operator==(const FormField &, const FormField &) = default;

private:
  LatticeShape shape_;
  std::vector<Complex> coeffs_;
};

FormField operator+(FormField a, const FormField &b);
FormField operator-(FormField a, const FormField &b);
FormField operator-(FormField a);
FormField operator*(Complex s, FormField a);

FormField zero(const LatticeShape &shape);
FormField unit_x(const LatticeShape &shape);
FormField basis_e(const LatticeShape &shape, int mu);
FormField unit_e(const LatticeShape &shape);
FormField constant_form(const LatticeShape &shape, const Multivector &value);

// Throws UsageError on shape mismatch.
FormField add(const FormField &a, const FormField &b);
FormField scale(Complex s, const FormField &a);

/// Site-wise Clifford product.
FormField clifford_mul(const FormField &a, const FormField &b);
FormField operator*(const FormField &a, const FormField &b);
// Products with a constant form, without materialising it on the lattice.
FormField operator*(const FormField &a, const Multivector &right);
FormField operator*(const Multivector &left, const FormField &a);

FormField grade_project(const FormField &a, int r);
FormField even_part(const FormField &a);
FormField odd_part(const FormField &a);

FormField conjugate(const FormField &a);
FormField real_part(const FormField &a);
FormField imag_part(const FormField &a);

double sup_norm(const FormField &a);
double sup_distance(const FormField &a, const FormField &b);

// Largest coefficient modulus on odd blades / largest imaginary part.
// Diagnostics only; nothing rejects forms on these grounds.
double odd_excess(const FormField &a);
double imaginary_excess(const FormField &a);

bool is_constant(const FormField &a);

} // namespace dkahler
