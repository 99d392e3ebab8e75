#include "dkahler/verify.hpp"

#include <algorithm>
#include <cstdio>

#include "dkahler/calculus.hpp"
#include "dkahler/random.hpp"

namespace dkahler {

namespace {

constexpr Complex kI{0.0, 1.0};
using P = ProjectorKind;

constexpr P kAllProjectors[] = {P::p0_plus,   P::p0_minus, P::p12_plus,
                                P::p12_minus, P::pe_plus,  P::pe_minus};

// Stream ids keep each suite's random data independent of which other
// suites run.
enum Stream : std::uint64_t { kCliffordStream = 1, kCalculusStream, kDecompStream, kSolverStream };

class Report {
public:
  explicit Report(double tol) : tol_(tol) {}

  void add(std::string id, double residual) {
    results_.push_back({std::move(id), residual, residual <= tol_});
  }

  std::vector<PropResult> take() { return std::move(results_); }

private:
  double tol_;
  std::vector<PropResult> results_;
};

// Running maximum.
struct Max {
  double value = 0.0;
  void operator()(double v) { value = std::max(value, v); }
};

Multivector bivector(int a, int b) { return Multivector::blade(Blade::of({a, b})); }

FormField sum_parts(const std::vector<DecomposedPart> &parts, const LatticeShape &shape) {
  FormField total(shape);
  for (const auto &p : parts)
    total += p.form;
  return total;
}

// Product of the +/- signs of a projector chain.
int chain_sign(const std::vector<ProjectorKind> &chain, ProjectorKind family_plus) {
  for (ProjectorKind p : chain)
    if (p == family_plus)
      return 1;
  return -1;
}

void clifford_suite(const VerifyOptions &opts, Report &report) {
  Max assoc, anti, unit, vol;
  for (unsigned a = 0; a < kBladeCount; ++a)
    for (unsigned b = 0; b < kBladeCount; ++b)
      for (unsigned c = 0; c < kBladeCount; ++c) {
        const auto A = Multivector::blade(Blade(a));
        const auto B = Multivector::blade(Blade(b));
        const auto C = Multivector::blade(Blade(c));
        assoc(sup_norm((A * B) * C - A * (B * C)));
      }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const auto em = Multivector::generator(mu);
      const auto en = Multivector::generator(nu);
      const double g = mu == nu ? metric(mu) : 0.0;
      anti(sup_norm(em * en + en * em - Complex(2.0 * g) * Multivector::unit()));
    }
  for (unsigned b = 0; b < kBladeCount; ++b) {
    const auto B = Multivector::blade(Blade(b));
    unit(sup_norm(Multivector::unit() * B - B));
    unit(sup_norm(B * Multivector::unit() - B));
  }
  const auto e = Multivector::volume();
  vol(sup_norm(Multivector::generator(0) * Multivector::generator(1) * Multivector::generator(2) *
                   Multivector::generator(3) -
               e));
  vol(sup_norm(e * e + Multivector::unit()));

  FormSampler sampler(opts.seed, kCliffordStream);
  const FormField omega = sampler.form(opts.shape);
  unit(sup_distance(unit_x(opts.shape) * omega, omega));
  unit(sup_distance(omega * unit_x(opts.shape), omega));

  report.add("blade-associativity", assoc.value);
  report.add("generator-anticommutation", anti.value);
  report.add("unit-element", unit.value);
  report.add("volume-element-square", vol.value);
}

void calculus_suite(const VerifyOptions &opts, Report &report) {
  FormSampler sampler(opts.seed, kCalculusStream);
  const LatticeShape &shape = opts.shape;
  Max dual, dc2, dl2, commute, grades, constants, right_const, hestenes, joyce;

  for (int i = 0; i < opts.samples; ++i) {
    const FormField omega = sampler.form(shape);
    dual(sup_distance(d_c(omega) + delta_c(omega), dirac(omega)));

    const FormField even = sampler.even_form(shape);
    const Mass m = sampler.coefficient();
    const Multivector e0 = Multivector::generator(0);
    hestenes(sup_distance(residual(EquationKind::hestenes, even, m),
                          component_residual_hestenes(even, m).residual * e0));
    joyce(sup_distance(residual(EquationKind::joyce, even, m),
                       component_residual_joyce(even, m).residual * e0));
  }

  const int structural = std::max(1, std::min(opts.samples, 20));
  for (int i = 0; i < structural; ++i) {
    const FormField omega = sampler.form(shape);
    dc2(sup_norm(d_c(d_c(omega))));
    dl2(sup_norm(delta_c(delta_c(omega))));
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu + 1; nu < 4; ++nu)
        commute(sup_distance(delta_mu(delta_mu(omega, mu), nu), delta_mu(delta_mu(omega, nu), mu)));
    for (int r = 0; r <= 4; ++r) {
      const FormField part = grade_project(omega, r);
      grades(sup_distance(d_c(part), grade_project(d_c(part), std::min(r + 1, 4))));
      if (r == 4)
        grades(sup_norm(d_c(part)));
      grades(sup_distance(delta_c(part), grade_project(delta_c(part), std::max(r - 1, 0))));
      if (r == 0)
        grades(sup_norm(delta_c(part)));
    }
    const FormField c = constant_form(shape, sampler.multivector());
    constants(sup_norm(dirac(c)));
    constants(sup_norm(d_c(c)));
    constants(sup_norm(delta_c(c)));
    const Multivector p = sampler.multivector();
    right_const(sup_distance(dirac(omega * p), dirac(omega) * p));
  }

  report.add("dirac-dual-route", dual.value);
  report.add("hestenes-component-rows", hestenes.value);
  report.add("joyce-component-rows", joyce.value);
  report.add("dc-nilpotent", dc2.value);
  report.add("deltac-nilpotent", dl2.value);
  report.add("differences-commute", commute.value);
  report.add("grade-shift", grades.value);
  report.add("constants-annihilated", constants.value);
  report.add("dirac-commutes-with-constant-right-mul", right_const.value);
}

void projector_suite(Report &report) {
  const auto x = Multivector::unit();
  const auto e0 = Multivector::generator(0);
  const auto e12 = bivector(1, 2);
  const auto e23 = bivector(2, 3);
  const auto e = Multivector::volume();
  const auto e123 = Multivector::blade(Blade::of({1, 2, 3}));
  auto proj = [](P p) { return projector(p); };

  Max idem, pairs, commute, carrier, absorb, flip12, flipe;
  for (P p : kAllProjectors)
    idem(sup_norm(proj(p) * proj(p) - proj(p)));
  pairs(sup_norm(proj(P::p0_plus) + proj(P::p0_minus) - x));
  pairs(sup_norm(proj(P::p12_plus) + proj(P::p12_minus) - x));
  pairs(sup_norm(proj(P::pe_plus) + proj(P::pe_minus) - x));
  for (P a : {P::p0_plus, P::p0_minus, P::pe_plus, P::pe_minus})
    for (P b : {P::p12_plus, P::p12_minus})
      commute(sup_norm(proj(a) * proj(b) - proj(b) * proj(a)));
  for (P p : {P::p0_plus, P::p0_minus}) {
    carrier(sup_norm(e0 * proj(p) - proj(p) * e0));
    absorb(sup_norm(proj(p) - Complex(projector_sign(p)) * (proj(p) * e0)));
  }
  for (P p : {P::p12_plus, P::p12_minus}) {
    carrier(sup_norm(e12 * proj(p) - proj(p) * e12));
    absorb(sup_norm(proj(p) - Complex(projector_sign(p)) * kI * (proj(p) * e12)));
  }
  for (P p : {P::pe_plus, P::pe_minus}) {
    carrier(sup_norm(e * proj(p) - proj(p) * e));
    absorb(sup_norm(proj(p) - Complex(projector_sign(p)) * kI * (proj(p) * e)));
  }
  flip12(sup_norm(proj(P::p12_plus) * e23 - e23 * proj(P::p12_minus)));
  flip12(sup_norm(proj(P::p12_minus) * e23 - e23 * proj(P::p12_plus)));
  flipe(sup_norm(proj(P::pe_plus) * e123 - e123 * proj(P::pe_minus)));
  flipe(sup_norm(proj(P::pe_minus) * e123 - e123 * proj(P::pe_plus)));

  report.add("projector-idempotent", idem.value);
  report.add("projector-pairs-sum-to-unit", pairs.value);
  report.add("projectors-commute", commute.value);
  report.add("projector-commutes-with-carrier", carrier.value);
  report.add("projector-absorbs-carrier", absorb.value);
  report.add("e23-swaps-p12", flip12.value);
  report.add("e123-swaps-pe", flipe.value);
}

std::vector<Momentum> sample_momenta(const LatticeShape &shape, FormSampler &sampler, int count) {
  std::vector<Momentum> out;
  for (int i = 0; i < count; ++i) {
    Momentum n;
    for (int mu = 0; mu < kDimensions; ++mu)
      n.n[static_cast<std::size_t>(mu)] = sampler.uniform_int(0, shape.extent(mu) - 1);
    out.push_back(n);
  }
  return out;
}

void decomposition_suite(const VerifyOptions &opts, Report &report) {
  const LatticeShape &shape = opts.shape;
  FormSampler sampler(opts.seed, kDecompStream);
  const Multivector e12 = bivector(1, 2);
  const Multivector e23 = bivector(2, 3);
  const Multivector e = Multivector::volume();
  const Multivector e123 = Multivector::blade(Blade::of({1, 2, 3}));
  const int samples = std::max(1, std::min(opts.samples, 20));

  // Identities valid for every form.
  Max joyce_dk, joyce_hest, volume_dk, flip_h, flip_v, sums, proj12, projE, rebuild, reality;
  for (int i = 0; i < samples; ++i) {
    const FormField omega = sampler.form(shape);
    const FormField even = sampler.even_form(shape);
    const Mass m = sampler.coefficient();
    const FormField J = residual(EquationKind::joyce, omega, m);
    const FormField E = residual(EquationKind::volume, omega, m);
    const FormField H = residual(EquationKind::hestenes, omega, m);

    for (P p : {P::p0_plus, P::p0_minus}) {
      const Mass signed_m = Complex(projector_sign(p)) * m.value();
      joyce_dk(sup_distance(residual(EquationKind::dirac_kahler, omega * projector(p), signed_m),
                            J * projector(p)));
    }
    for (P p : {P::p12_plus, P::p12_minus}) {
      const Complex s = projector_sign(p);
      joyce_hest(sup_distance(residual(EquationKind::hestenes, omega * projector(p), s * m.value()),
                              s * (J * projector(p))));
    }
    // P-e pairs with +m, P+e with -m.
    for (P p : {P::pe_minus, P::pe_plus}) {
      const Complex s = -projector_sign(p);
      volume_dk(sup_distance(residual(EquationKind::dirac_kahler, omega * projector(p), s * m.value()),
                             -kI * (E * projector(p))));
    }
    flip_h(sup_distance(residual(EquationKind::hestenes, mass_flip_hestenes(omega), -m), -(H * e23)));
    flip_v(sup_distance(residual(EquationKind::volume, mass_flip_volume(omega), -m), E * e123));

    const std::vector<std::vector<P>> families = {
        {P::p0_plus, P::p0_minus},
        {P::p12_plus, P::p12_minus},
        {P::pe_plus, P::pe_minus},
        {P::p0_plus, P::p0_minus, P::p12_plus, P::p12_minus},
        {P::p0_plus, P::p0_minus, P::p12_plus, P::p12_minus, P::pe_plus, P::pe_minus}};
    for (const auto &family : families)
      sums(sup_distance(sum_parts(decompose(omega, family), shape), omega));

    const auto [hp, hm] = real_pair_hestenes(even);
    proj12(sup_distance(even * projector(P::p12_plus), hp * projector(P::p12_plus)));
    proj12(sup_distance(even * projector(P::p12_minus), hm * projector(P::p12_minus)));
    const auto [vp, vm] = real_pair_volume(omega);
    projE(sup_distance(omega * projector(P::pe_plus), vp * projector(P::pe_plus)));
    projE(sup_distance(omega * projector(P::pe_minus), vm * projector(P::pe_minus)));
    rebuild(sup_distance(reconstruct_hestenes({hp, hm}), even));
    rebuild(sup_distance(reconstruct_volume({vp, vm}), omega));
    for (const FormField *f : {&hp, &hm, &vp, &vm})
      reality(imaginary_excess(*f));
  }
  report.add("joyce-to-dk-intertwining", joyce_dk.value);
  report.add("joyce-to-hestenes-intertwining", joyce_hest.value);
  report.add("volume-to-dk-intertwining", volume_dk.value);
  report.add("hestenes-mass-flip", flip_h.value);
  report.add("volume-mass-flip", flip_v.value);
  report.add("decomposition-parts-sum", sums.value);
  report.add("hestenes-real-pair-projection", proj12.value);
  report.add("volume-real-pair-projection", projE.value);
  report.add("real-pair-reconstruction", rebuild.value);
  report.add("real-pair-is-real", reality.value);

  // Solution-based checks on plane-wave eigenmodes.
  const Momentum real_n = real_mass_momentum(shape);
  std::vector<Momentum> momenta = sample_momenta(shape, sampler, 2);
  momenta.insert(momenta.begin(), real_n);

  Max joyce_split_dk, joyce_split_h, fourfold, volume_split, eightfold, sol_flip_h, sol_flip_v,
      solution_sums;
  for (const Momentum &n : momenta) {
    for (const MomentumMode &mode : eigenmodes(EquationKind::joyce, shape, n)) {
      const FormField omega = plane_wave(mode, shape);
      const Complex m = mode.mass;
      for (const auto &part : decompose(omega, std::vector{P::p0_plus, P::p0_minus})) {
        const Complex s = projector_sign(part.chain[0]);
        joyce_split_dk(sup_norm(residual(EquationKind::dirac_kahler, part.form, s * m)));
      }
      for (const auto &part : decompose(omega, std::vector{P::p12_plus, P::p12_minus})) {
        const Complex s = projector_sign(part.chain[0]);
        joyce_split_h(sup_norm(residual(EquationKind::hestenes, part.form, s * m)));
      }
      const auto parts = decompose(omega, std::vector{P::p0_plus, P::p0_minus, P::p12_plus, P::p12_minus});
      for (const auto &part : parts) {
        const Complex s0 = chain_sign(part.chain, P::p0_plus);
        const Complex s12 = chain_sign(part.chain, P::p12_plus);
        fourfold(sup_norm(residual(EquationKind::dirac_kahler, part.form, s0 * m)));
        fourfold(sup_norm(residual(EquationKind::hestenes, part.form, s12 * m)));
      }
      solution_sums(sup_distance(sum_parts(parts, shape), omega));
    }
    for (const MomentumMode &mode : eigenmodes(EquationKind::volume, shape, n)) {
      const FormField omega = plane_wave(mode, shape);
      const Complex m = mode.mass;
      for (const auto &part : decompose(omega, std::vector{P::pe_plus, P::pe_minus})) {
        const Complex s = -projector_sign(part.chain[0]);
        volume_split(sup_norm(residual(EquationKind::dirac_kahler, part.form, s * m)));
      }
      const auto parts = decompose(omega, kAllProjectors);
      for (const auto &part : parts) {
        const Complex s = -chain_sign(part.chain, P::pe_plus) * chain_sign(part.chain, P::p0_plus) *
                          chain_sign(part.chain, P::p12_plus);
        eightfold(sup_norm(residual(EquationKind::hestenes, part.form, s * m)));
      }
      solution_sums(sup_distance(sum_parts(parts, shape), omega));
      sol_flip_v(sup_norm(residual(EquationKind::volume, mass_flip_volume(omega), -m)));
    }
    for (const MomentumMode &mode : eigenmodes(EquationKind::hestenes, shape, n)) {
      const FormField omega = plane_wave(mode, shape);
      sol_flip_h(sup_norm(residual(EquationKind::hestenes, mass_flip_hestenes(omega), -mode.mass)));
    }
  }
  report.add("joyce-solution-p0-split", joyce_split_dk.value);
  report.add("joyce-solution-p12-split", joyce_split_h.value);
  report.add("joyce-solution-fourfold-split", fourfold.value);
  report.add("volume-solution-pe-split", volume_split.value);
  report.add("volume-solution-eightfold-split", eightfold.value);
  report.add("solution-parts-sum", solution_sums.value);
  report.add("hestenes-solution-mass-flip", sol_flip_h.value);
  report.add("volume-solution-mass-flip", sol_flip_v.value);

  // Real parts of real-mass solutions.
  Max hest_real, vol_real;
  for (const MomentumMode &mode : eigenmodes(EquationKind::joyce, shape, real_n)) {
    const FormField omega = even_part(plane_wave(mode, shape));
    if (sup_norm(omega) < 1e-8)
      continue;
    const Mass m = mode.mass.real();
    const auto [plus, minus] = real_pair_hestenes(omega);
    hest_real(sup_norm(residual(EquationKind::hestenes, 0.5 * plus, m)));
    hest_real(sup_norm(residual(EquationKind::hestenes, 0.5 * (plus * e12), m)));
    hest_real(sup_norm(residual(EquationKind::hestenes, 0.5 * minus, -m)));
    hest_real(sup_norm(residual(EquationKind::hestenes, 0.5 * (minus * e12), -m)));
    hest_real(std::abs(mode.mass.imag()));
  }
  for (const MomentumMode &mode : eigenmodes(EquationKind::dirac_kahler, shape, real_n)) {
    const FormField omega = plane_wave(mode, shape);
    const Mass m = mode.mass.real();
    const auto [plus, minus] = real_pair_volume(omega);
    vol_real(sup_norm(residual(EquationKind::volume, 0.5 * minus, m)));
    vol_real(sup_norm(residual(EquationKind::volume, 0.5 * (minus * e), m)));
    vol_real(sup_norm(residual(EquationKind::volume, 0.5 * plus, -m)));
    vol_real(sup_norm(residual(EquationKind::volume, 0.5 * (plus * e), -m)));
    vol_real(std::abs(mode.mass.imag()));
  }
  report.add("joyce-real-mass-hestenes-parts", hest_real.value);
  report.add("dk-real-mass-volume-parts", vol_real.value);
}

void solver_suite(const VerifyOptions &opts, Report &report) {
  const LatticeShape &shape = opts.shape;
  FormSampler sampler(opts.seed, kSolverStream);
  std::vector<Momentum> momenta = sample_momenta(shape, sampler, 3);
  momenta.insert(momenta.begin(), real_mass_momentum(shape));
  momenta.insert(momenta.begin(), Momentum{});

  Max consistency, square, mass_square, modes_ok, pairing, zero_modes;
  for (const Momentum &n : momenta) {
    const Symbol lambda = symbol(n, shape);
    const Complex c = lambda[0] * lambda[0] - lambda[1] * lambda[1] - lambda[2] * lambda[2] -
                      lambda[3] * lambda[3];
    Multivector slash;
    for (int mu = 0; mu < 4; ++mu)
      slash += lambda[static_cast<std::size_t>(mu)] * Multivector::generator(mu);
    square(sup_norm(slash * slash - c * Multivector::unit()));

    for (EquationKind kind : kAllEquations) {
      const SymbolPair sp = symbol_matrix(kind, lambda);
      // Lattice residual of a plane wave vs the symbol applied to its amplitude.
      const MomentumMode probe{n, lambda, 0.0, sampler.multivector()};
      const Mass m = sampler.coefficient();
      const Vector16 image = (sp.lhs - m.value() * sp.carrier) * to_vector(probe.amplitude);
      const MomentumMode image_mode{n, lambda, 0.0, to_multivector(image)};
      consistency(sup_distance(residual(kind, plane_wave(probe, shape), m), plane_wave(image_mode, shape)));

      const auto modes = eigenmodes(kind, shape, n);
      for (const auto &mode : modes) {
        modes_ok(sup_norm(residual(kind, plane_wave(mode, shape), mode.mass)));
        mass_square(std::abs(mode.mass * mode.mass + c));
      }
      if (n == Momentum{}) {
        zero_modes(std::abs(static_cast<double>(modes.size()) - 16.0));
        for (const auto &mode : modes)
          zero_modes(std::abs(mode.mass));
      }
      if (kind == EquationKind::dirac_kahler) {
        const Matrix16 sq = sp.lhs * sp.lhs + c * Matrix16::Identity();
        square(sq.cwiseAbs().maxCoeff());
        for (const auto &mode : modes) {
          double nearest = 1e300;
          for (const auto &other : modes)
            nearest = std::min(nearest, std::abs(other.mass + mode.mass));
          pairing(nearest);
        }
      }
    }
  }
  report.add("symbol-consistency", consistency.value);
  report.add("clifford-square-law", square.value);
  report.add("mass-square-law", mass_square.value);
  report.add("eigenmode-residual", modes_ok.value);
  report.add("dk-spectrum-pairing", pairing.value);
  report.add("zero-momentum-modes", zero_modes.value);
}

} // namespace

Suite parse_suite(std::string_view tag) {
  if (tag == "all")
    return Suite::all;
  if (tag == "clifford")
    return Suite::clifford;
  if (tag == "calculus")
    return Suite::calculus;
  if (tag == "projectors")
    return Suite::projectors;
  if (tag == "decompositions")
    return Suite::decompositions;
  if (tag == "solver")
    return Suite::solver;
  throw UsageError("unknown suite '" + std::string(tag) + "'");
}

Momentum real_mass_momentum(const LatticeShape &shape) {
  for (int mu = 1; mu < kDimensions; ++mu) {
    if (shape.extent(mu) % 2 == 0) {
      Momentum n;
      n.n[static_cast<std::size_t>(mu)] = shape.extent(mu) / 2;
      return n;
    }
  }
  throw UsageError("real-mass cases need an even extent in a spatial direction, shape is " +
                   to_string(shape));
}

std::vector<PropResult> run_verify(const VerifyOptions &opts) {
  Report report(opts.tol);
  const bool all = opts.suite == Suite::all;
  if (all || opts.suite == Suite::decompositions || opts.suite == Suite::solver)
    (void)real_mass_momentum(opts.shape); // fail fast on usage
  if (all || opts.suite == Suite::clifford)
    clifford_suite(opts, report);
  if (all || opts.suite == Suite::calculus)
    calculus_suite(opts, report);
  if (all || opts.suite == Suite::projectors)
    projector_suite(report);
  if (all || opts.suite == Suite::decompositions)
    decomposition_suite(opts, report);
  if (all || opts.suite == Suite::solver)
    solver_suite(opts, report);
  return report.take();
}

std::string format_report_line(const PropResult &r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", r.max_residual);
  return "PROP " + r.id + " " + buf + " " + (r.pass ? "PASS" : "FAIL");
}

} // namespace dkahler
