#include "dkahler/forms.hpp"

#include <algorithm>
#include <cmath>

namespace dkahler {

namespace {

void require_same_shape(const FormField &a, const FormField &b, const char *op) {
  if (!(a.shape() == b.shape()))
    throw UsageError(std::string(op) + ": shape mismatch " + to_string(a.shape()) +
                     " vs " + to_string(b.shape()));
}

template <typename Fn> FormField map_coeffs(const FormField &a, Fn fn) {
  FormField out(a.shape());
  auto src = a.coeffs();
  auto dst = out.coeffs();
  for (std::size_t i = 0; i < src.size(); ++i)
    dst[i] = fn(src[i], static_cast<unsigned>(i % kBladeCount));
  return out;
}

template <typename Keep> FormField filter_blades(const FormField &a, Keep keep) {
  return map_coeffs(a, [&](Complex c, unsigned mask) {
    return keep(Blade(mask)) ? c : Complex{};
  });
}

} // namespace

// Multivector ----------------------------------------------------------------

Multivector Multivector::generator(int mu) {
  check_direction(mu);
  return blade(Blade::generator(mu));
}

Multivector Multivector::blade(Blade b, Complex coeff) {
  Multivector m;
  m[b] = coeff;
  return m;
}

Multivector &Multivector::operator+=(const Multivector &o) {
  for (std::size_t i = 0; i < kBladeCount; ++i)
    c[i] += o.c[i];
  return *this;
}

Multivector &Multivector::operator-=(const Multivector &o) {
  for (std::size_t i = 0; i < kBladeCount; ++i)
    c[i] -= o.c[i];
  return *this;
}

Multivector &Multivector::operator*=(Complex s) {
  for (auto &v : c)
    v *= s;
  return *this;
}

Multivector operator+(Multivector a, const Multivector &b) { return a += b; }
Multivector operator-(Multivector a, const Multivector &b) { return a -= b; }
Multivector operator-(Multivector a) { return a *= -1.0; }
Multivector operator*(Complex s, Multivector a) { return a *= s; }

void multiply_add(const Complex *a, const Complex *b, Complex *out) {
  for (unsigned i = 0; i < kBladeCount; ++i) {
    if (a[i] == Complex{})
      continue;
    for (unsigned j = 0; j < kBladeCount; ++j) {
      const SignedBlade p = blade_product(Blade(i), Blade(j));
      const Complex term = a[i] * b[j];
      if (p.sign > 0)
        out[p.blade.index()] += term;
      else
        out[p.blade.index()] -= term;
    }
  }
}

Multivector operator*(const Multivector &a, const Multivector &b) {
  Multivector out;
  multiply_add(a.c.data(), b.c.data(), out.c.data());
  return out;
}

double sup_norm(const Multivector &a) {
  double m = 0.0;
  for (const auto &v : a.c)
    m = std::max(m, std::abs(v));
  return m;
}

// FormField ------------------------------------------------------------------

FormField::FormField(LatticeShape shape)
    : shape_(shape), coeffs_(shape.site_count() * kBladeCount) {}

FormField::FormField(LatticeShape shape, std::vector<Complex> coeffs)
    : shape_(shape), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != shape_.site_count() * kBladeCount)
    throw UsageError("coefficient count does not match 16 * site_count");
}

Complex &FormField::at(const SiteIndex &s, Blade b) {
  return (*this)(shape_.linear_index(s), b);
}

const Complex &FormField::at(const SiteIndex &s, Blade b) const {
  return (*this)(shape_.linear_index(s), b);
}

Multivector FormField::value_at(std::size_t s) const {
  Multivector m;
  std::ranges::copy(site(s), m.c.begin());
  return m;
}

FormField &FormField::operator+=(const FormField &o) {
  require_same_shape(*this, o, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  return *this;
}

FormField &FormField::operator-=(const FormField &o) {
  require_same_shape(*this, o, "subtract");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  return *this;
}

FormField &FormField::operator*=(Complex s) {
  for (auto &v : coeffs_)
    v *= s;
  return *this;
}

FormField operator+(FormField a, const FormField &b) { return a += b; }
FormField operator-(FormField a, const FormField &b) { return a -= b; }
FormField operator-(FormField a) { return a *= -1.0; }
FormField operator*(Complex s, FormField a) { return a *= s; }

FormField zero(const LatticeShape &shape) { return FormField(shape); }

FormField constant_form(const LatticeShape &shape, const Multivector &value) {
  FormField out(shape);
  for (std::size_t s = 0; s < out.site_count(); ++s)
    std::ranges::copy(value.c, out.site(s).begin());
  return out;
}

FormField unit_x(const LatticeShape &shape) {
  return constant_form(shape, Multivector::unit());
}

FormField basis_e(const LatticeShape &shape, int mu) {
  return constant_form(shape, Multivector::generator(mu));
}

FormField unit_e(const LatticeShape &shape) {
  return constant_form(shape, Multivector::volume());
}

FormField add(const FormField &a, const FormField &b) { return a + b; }

FormField scale(Complex s, const FormField &a) { return s * a; }

FormField clifford_mul(const FormField &a, const FormField &b) {
  require_same_shape(a, b, "clifford_mul");
  FormField out(a.shape());
  for (std::size_t s = 0; s < a.site_count(); ++s)
    multiply_add(a.site(s).data(), b.site(s).data(), out.site(s).data());
  return out;
}

FormField operator*(const FormField &a, const FormField &b) {
  return clifford_mul(a, b);
}

FormField operator*(const FormField &a, const Multivector &right) {
  FormField out(a.shape());
  for (std::size_t s = 0; s < a.site_count(); ++s)
    multiply_add(a.site(s).data(), right.c.data(), out.site(s).data());
  return out;
}

FormField operator*(const Multivector &left, const FormField &a) {
  FormField out(a.shape());
  for (std::size_t s = 0; s < a.site_count(); ++s)
    multiply_add(left.c.data(), a.site(s).data(), out.site(s).data());
  return out;
}

FormField grade_project(const FormField &a, int r) {
  if (r < 0 || r > 4)
    throw UsageError("grade must be in 0..4, got " + std::to_string(r));
  return filter_blades(a, [r](Blade b) { return b.grade() == r; });
}

FormField even_part(const FormField &a) {
  return filter_blades(a, [](Blade b) { return b.is_even(); });
}

FormField odd_part(const FormField &a) {
  return filter_blades(a, [](Blade b) { return !b.is_even(); });
}

FormField conjugate(const FormField &a) {
  return map_coeffs(a, [](Complex c, unsigned) { return std::conj(c); });
}

FormField real_part(const FormField &a) {
  return map_coeffs(a, [](Complex c, unsigned) { return Complex(c.real(), 0.0); });
}

FormField imag_part(const FormField &a) {
  return map_coeffs(a, [](Complex c, unsigned) { return Complex(c.imag(), 0.0); });
}

double sup_norm(const FormField &a) {
  double m = 0.0;
  for (const auto &v : a.coeffs())
    m = std::max(m, std::abs(v));
  return m;
}

double sup_distance(const FormField &a, const FormField &b) {
  require_same_shape(a, b, "sup_distance");
  double m = 0.0;
  auto ca = a.coeffs();
  auto cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i)
    m = std::max(m, std::abs(ca[i] - cb[i]));
  return m;
}

double odd_excess(const FormField &a) { return sup_norm(odd_part(a)); }

double imaginary_excess(const FormField &a) {
  double m = 0.0;
  for (const auto &v : a.coeffs())
    m = std::max(m, std::abs(v.imag()));
  return m;
}

bool is_constant(const FormField &a) {
  for (std::size_t s = 1; s < a.site_count(); ++s)
    if (!std::ranges::equal(a.site(s), a.site(0)))
      return false;
  return true;
}

} // namespace dkahler
