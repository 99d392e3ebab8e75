#include "dkahler/calculus.hpp"

#include <string>

namespace dkahler {

namespace {

// Forward differences of all 16 components at one site, in every direction.
struct SiteDifferences {
  std::array<std::array<Complex, kBladeCount>, kDimensions> d;

  SiteDifferences(const FormField &a, std::size_t s) {
    for (int mu = 0; mu < kDimensions; ++mu) {
      const std::size_t t = a.shape().shifted(s, mu);
      for (unsigned b = 0; b < kBladeCount; ++b)
        d[static_cast<std::size_t>(mu)][b] = a(t, Blade(b)) - a(s, Blade(b));
    }
  }

  // Delta_mu omega^{indices}
  Complex operator()(int mu, std::initializer_list<int> indices) const {
    return d[static_cast<std::size_t>(mu)][Blade::of(indices).index()];
  }
};

constexpr Blade B(std::initializer_list<int> indices) { return Blade::of(indices); }

} // namespace

OperatorKind parse_operator_kind(std::string_view tag) {
  if (tag == "dc")
    return OperatorKind::dc;
  if (tag == "deltac")
    return OperatorKind::deltac;
  if (tag == "dirac")
    return OperatorKind::dirac;
  throw UsageError("unknown operator '" + std::string(tag) + "'");
}

FormField delta_mu(const FormField &a, int mu) {
  check_direction(mu);
  FormField out(a.shape());
  for (std::size_t s = 0; s < a.site_count(); ++s) {
    const std::size_t t = a.shape().shifted(s, mu);
    for (unsigned b = 0; b < kBladeCount; ++b)
      out(s, Blade(b)) = a(t, Blade(b)) - a(s, Blade(b));
  }
  return out;
}

FormField d_c(const FormField &a) {
  FormField out(a.shape());
  for (std::size_t s = 0; s < a.site_count(); ++s) {
    const SiteDifferences D(a, s);
    auto w = [&](std::initializer_list<int> blade) -> Complex & { return out(s, B(blade)); };

    // 0-form
    for (int mu = 0; mu < 4; ++mu)
      w({mu}) += D(mu, {});

    // 1-form
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu + 1; nu < 4; ++nu)
        w({mu, nu}) += D(mu, {nu}) - D(nu, {mu});

    // 2-form
    w({0, 1, 2}) += D(0, {1, 2}) - D(1, {0, 2}) + D(2, {0, 1});
    w({0, 1, 3}) += D(0, {1, 3}) - D(1, {0, 3}) + D(3, {0, 1});
    w({0, 2, 3}) += D(0, {2, 3}) - D(2, {0, 3}) + D(3, {0, 2});
    w({1, 2, 3}) += D(1, {2, 3}) - D(2, {1, 3}) + D(3, {1, 2});

    // 3-form; a 4-form maps to zero
    w({0, 1, 2, 3}) += D(0, {1, 2, 3}) - D(1, {0, 2, 3}) + D(2, {0, 1, 3}) - D(3, {0, 1, 2});
  }
  return out;
}

FormField delta_c(const FormField &a) {
  FormField out(a.shape());
  for (std::size_t s = 0; s < a.site_count(); ++s) {
    const SiteDifferences D(a, s);
    auto w = [&](std::initializer_list<int> blade) -> Complex & { return out(s, B(blade)); };
    const std::initializer_list<int> vol = {0, 1, 2, 3};

    // a 0-form maps to zero; 1-form
    w({}) += D(0, {0}) - D(1, {1}) - D(2, {2}) - D(3, {3});

    // 2-form
    w({0}) += D(1, {0, 1}) + D(2, {0, 2}) + D(3, {0, 3});
    w({1}) += D(0, {0, 1}) + D(2, {1, 2}) + D(3, {1, 3});
    w({2}) += D(0, {0, 2}) - D(1, {1, 2}) + D(3, {2, 3});
    w({3}) += D(0, {0, 3}) - D(1, {1, 3}) - D(2, {2, 3});

    // 3-form
    w({0, 1}) += -D(2, {0, 1, 2}) - D(3, {0, 1, 3});
    w({0, 2}) += D(1, {0, 1, 2}) - D(3, {0, 2, 3});
    w({0, 3}) += D(1, {0, 1, 3}) + D(2, {0, 2, 3});
    w({1, 2}) += D(0, {0, 1, 2}) - D(3, {1, 2, 3});
    w({1, 3}) += D(0, {0, 1, 3}) + D(2, {1, 2, 3});
    w({2, 3}) += D(0, {0, 2, 3}) - D(1, {1, 2, 3});

    // 4-form
    w({0, 1, 2}) += D(3, vol);
    w({0, 1, 3}) += -D(2, vol);
    w({0, 2, 3}) += D(1, vol);
    w({1, 2, 3}) += D(0, vol);
  }
  return out;
}

FormField dirac(const FormField &a) {
  FormField out(a.shape());
  for (int mu = 0; mu < kDimensions; ++mu)
    out += clifford_mul(basis_e(a.shape(), mu), delta_mu(a, mu));
  return out;
}

FormField apply(OperatorKind kind, const FormField &a) {
  switch (kind) {
  case OperatorKind::dc:
    return d_c(a);
  case OperatorKind::deltac:
    return delta_c(a);
  case OperatorKind::dirac:
    return dirac(a);
  }
  throw UsageError("unknown operator kind");
}

} // namespace dkahler
