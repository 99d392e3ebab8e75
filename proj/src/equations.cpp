#include "dkahler/equations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dkahler/calculus.hpp"

namespace dkahler {

namespace {

constexpr Complex kI{0.0, 1.0};

Multivector bivector12() { return Multivector::blade(Blade::of({1, 2})); }

// Omega± = Re-part ± (i/2)(Omega - conj Omega) * carrier; the real part of
// Omega is (Omega + conj Omega)/2.
RealPair real_pair(const FormField &omega, const Multivector &carrier) {
  const FormField bar = conjugate(omega);
  const FormField sum = 0.5 * (omega + bar);
  const FormField twist = (0.5 * kI) * ((omega - bar) * carrier);
  return {sum + twist, sum - twist};
}

FormField reconstruct(const RealPair &pair, const Multivector &carrier) {
  const auto &[plus, minus] = pair;
  return 0.5 * (plus + minus) + (0.5 * kI) * ((plus - minus) * carrier);
}

std::vector<ProjectorKind> sorted_unique(std::span<const ProjectorKind> kinds) {
  std::vector<ProjectorKind> v(kinds.begin(), kinds.end());
  std::ranges::sort(v);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

} // namespace

EquationKind parse_equation_kind(std::string_view tag) {
  if (tag == "dk" || tag == "dirac_kahler")
    return EquationKind::dirac_kahler;
  if (tag == "hestenes")
    return EquationKind::hestenes;
  if (tag == "joyce")
    return EquationKind::joyce;
  if (tag == "volume")
    return EquationKind::volume;
  throw UsageError("unknown equation '" + std::string(tag) + "'");
}

std::string_view to_string(EquationKind kind) {
  switch (kind) {
  case EquationKind::dirac_kahler:
    return "dk";
  case EquationKind::hestenes:
    return "hestenes";
  case EquationKind::joyce:
    return "joyce";
  case EquationKind::volume:
    return "volume";
  }
  return "?";
}

Mass::Mass(Complex value) : value_(value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    throw UsageError("mass parameter must be finite");
}

Multivector mass_carrier(EquationKind kind) {
  switch (kind) {
  case EquationKind::dirac_kahler:
    return Multivector::unit();
  case EquationKind::hestenes:
  case EquationKind::joyce:
    return Multivector::generator(0);
  case EquationKind::volume:
    return Multivector::volume();
  }
  throw UsageError("unknown equation kind");
}

FormField residual(EquationKind kind, const FormField &omega, Mass m) {
  const FormField D = dirac(omega);
  FormField lhs = [&] {
    switch (kind) {
    case EquationKind::dirac_kahler:
    case EquationKind::joyce:
      return kI * D;
    case EquationKind::hestenes:
      return -(D * bivector12());
    case EquationKind::volume:
      return -D;
    }
    throw UsageError("unknown equation kind");
  }();
  return lhs - m.value() * (omega * mass_carrier(kind));
}

ComponentResidual component_residual_hestenes(const FormField &omega, Mass m) {
  const LatticeShape &shape = omega.shape();
  ComponentResidual out{FormField(shape), odd_excess(omega)};
  const Complex mass = m.value();

  for (std::size_t s = 0; s < omega.site_count(); ++s) {
    auto D = [&](int mu, std::initializer_list<int> blade) {
      const Blade b = Blade::of(blade);
      return omega(shape.shifted(s, mu), b) - omega(s, b);
    };
    auto w = [&](std::initializer_list<int> blade) { return omega(s, Blade::of(blade)); };
    auto r = [&](std::initializer_list<int> blade) -> Complex & {
      return out.residual(s, Blade::of(blade));
    };
    const std::initializer_list<int> vol = {0, 1, 2, 3};

    r({}) = D(0, {1, 2}) - D(1, {0, 2}) + D(2, {0, 1}) + D(3, vol) - mass * w({});
    r({0, 1}) = D(2, {}) + D(0, {0, 2}) - D(1, {1, 2}) + D(3, {2, 3}) - mass * w({0, 1});
    r({0, 2}) = -D(1, {}) - D(0, {0, 1}) - D(2, {1, 2}) - D(3, {1, 3}) - mass * w({0, 2});
    r({0, 3}) = -D(1, {2, 3}) + D(2, {1, 3}) - D(3, {1, 2}) - D(0, vol) - mass * w({0, 3});
    r({1, 2}) = -D(0, {}) - D(1, {0, 1}) - D(2, {0, 2}) - D(3, {0, 3}) - mass * w({1, 2});
    r({1, 3}) = -D(0, {2, 3}) + D(2, {0, 3}) - D(3, {0, 2}) - D(1, vol) - mass * w({1, 3});
    r({2, 3}) = D(0, {1, 3}) - D(1, {0, 3}) + D(3, {0, 1}) - D(2, vol) - mass * w({2, 3});
    r(vol) = D(3, {}) + D(0, {0, 3}) - D(1, {1, 3}) - D(2, {2, 3}) - mass * w(vol);
  }
  return out;
}

ComponentResidual component_residual_joyce(const FormField &omega, Mass m) {
  const LatticeShape &shape = omega.shape();
  ComponentResidual out{FormField(shape), odd_excess(omega)};
  const Complex mass = m.value();

  for (std::size_t s = 0; s < omega.site_count(); ++s) {
    auto D = [&](int mu, std::initializer_list<int> blade) {
      const Blade b = Blade::of(blade);
      return omega(shape.shifted(s, mu), b) - omega(s, b);
    };
    auto w = [&](std::initializer_list<int> blade) { return omega(s, Blade::of(blade)); };
    auto r = [&](std::initializer_list<int> blade) -> Complex & {
      return out.residual(s, Blade::of(blade));
    };
    const std::initializer_list<int> vol = {0, 1, 2, 3};

    // Rows whose right-hand side reads -m omega_beta are negated so every
    // row has the form "... = m omega_beta".
    r({}) = kI * (D(0, {}) + D(1, {0, 1}) + D(2, {0, 2}) + D(3, {0, 3})) - mass * w({});
    r({0, 1}) = -kI * (D(1, {}) + D(0, {0, 1}) + D(2, {1, 2}) + D(3, {1, 3})) - mass * w({0, 1});
    r({0, 2}) = -kI * (D(2, {}) + D(0, {0, 2}) - D(1, {1, 2}) + D(3, {2, 3})) - mass * w({0, 2});
    r({0, 3}) = -kI * (D(3, {}) + D(0, {0, 3}) - D(1, {1, 3}) - D(2, {2, 3})) - mass * w({0, 3});
    r({1, 2}) = kI * (D(0, {1, 2}) - D(1, {0, 2}) + D(2, {0, 1}) + D(3, vol)) - mass * w({1, 2});
    r({1, 3}) = kI * (D(0, {1, 3}) - D(1, {0, 3}) + D(3, {0, 1}) - D(2, vol)) - mass * w({1, 3});
    r({2, 3}) = kI * (D(0, {2, 3}) - D(2, {0, 3}) + D(3, {0, 2}) + D(1, vol)) - mass * w({2, 3});
    r(vol) = -kI * (D(1, {2, 3}) - D(2, {1, 3}) + D(3, {1, 2}) + D(0, vol)) - mass * w(vol);
  }
  return out;
}

ProjectorKind parse_projector_kind(std::string_view tag) {
  if (tag == "p0+")
    return ProjectorKind::p0_plus;
  if (tag == "p0-")
    return ProjectorKind::p0_minus;
  if (tag == "p12+")
    return ProjectorKind::p12_plus;
  if (tag == "p12-")
    return ProjectorKind::p12_minus;
  if (tag == "pe+")
    return ProjectorKind::pe_plus;
  if (tag == "pe-")
    return ProjectorKind::pe_minus;
  throw UsageError("unknown projector '" + std::string(tag) + "'");
}

std::string_view to_string(ProjectorKind kind) {
  switch (kind) {
  case ProjectorKind::p0_plus:
    return "p0+";
  case ProjectorKind::p0_minus:
    return "p0-";
  case ProjectorKind::p12_plus:
    return "p12+";
  case ProjectorKind::p12_minus:
    return "p12-";
  case ProjectorKind::pe_plus:
    return "pe+";
  case ProjectorKind::pe_minus:
    return "pe-";
  }
  return "?";
}

int projector_sign(ProjectorKind kind) {
  switch (kind) {
  case ProjectorKind::p0_plus:
  case ProjectorKind::p12_plus:
  case ProjectorKind::pe_plus:
    return 1;
  default:
    return -1;
  }
}

Multivector projector(ProjectorKind kind) {
  const double sign = projector_sign(kind);
  Multivector twist;
  switch (kind) {
  case ProjectorKind::p0_plus:
  case ProjectorKind::p0_minus:
    twist = Multivector::generator(0);
    break;
  case ProjectorKind::p12_plus:
  case ProjectorKind::p12_minus:
    twist = kI * bivector12();
    break;
  case ProjectorKind::pe_plus:
  case ProjectorKind::pe_minus:
    twist = kI * Multivector::volume();
    break;
  }
  return 0.5 * (Multivector::unit() + Complex(sign) * twist);
}

FormField projector(ProjectorKind kind, const LatticeShape &shape) {
  return constant_form(shape, projector(kind));
}

std::vector<DecomposedPart> decompose(const FormField &omega,
                                      std::span<const ProjectorKind> kinds) {
  using P = ProjectorKind;
  const std::vector<P> family = sorted_unique(kinds);
  auto is = [&](std::vector<P> expected) { return sorted_unique(expected) == family; };

  std::vector<std::vector<P>> chains;
  if (is({P::p0_plus, P::p0_minus})) {
    chains = {{P::p0_plus}, {P::p0_minus}};
  } else if (is({P::p12_plus, P::p12_minus})) {
    chains = {{P::p12_plus}, {P::p12_minus}};
  } else if (is({P::pe_plus, P::pe_minus})) {
    chains = {{P::pe_minus}, {P::pe_plus}};
  } else if (is({P::p0_plus, P::p0_minus, P::p12_plus, P::p12_minus})) {
    chains = {{P::p0_plus, P::p12_plus},
              {P::p0_plus, P::p12_minus},
              {P::p0_minus, P::p12_plus},
              {P::p0_minus, P::p12_minus}};
  } else if (is({P::p0_plus, P::p0_minus, P::p12_plus, P::p12_minus, P::pe_plus,
                 P::pe_minus})) {
    for (P p12 : {P::p12_plus, P::p12_minus})
      for (P p0 : {P::p0_plus, P::p0_minus})
        for (P pe : {P::pe_minus, P::pe_plus})
          chains.push_back({pe, p0, p12});
  } else {
    throw UsageError("unsupported projector family");
  }

  std::vector<DecomposedPart> parts;
  parts.reserve(chains.size());
  for (auto &chain : chains) {
    Multivector product = Multivector::unit();
    for (P p : chain)
      product = product * projector(p);
    parts.push_back({std::move(chain), omega * product});
  }
  return parts;
}

FormField mass_flip_hestenes(const FormField &omega) {
  return omega * Multivector::blade(Blade::of({2, 3}));
}

FormField mass_flip_volume(const FormField &omega) {
  return omega * Multivector::blade(Blade::of({1, 2, 3}));
}

RealPair real_pair_hestenes(const FormField &omega) { return real_pair(omega, bivector12()); }

RealPair real_pair_volume(const FormField &omega) {
  return real_pair(omega, Multivector::volume());
}

FormField reconstruct_hestenes(const RealPair &pair) { return reconstruct(pair, bivector12()); }

FormField reconstruct_volume(const RealPair &pair) {
  return reconstruct(pair, Multivector::volume());
}

} // namespace dkahler
