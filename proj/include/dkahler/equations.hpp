#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dkahler/forms.hpp"

namespace dkahler {

/// The four discrete first-order equations, each written as
/// (left-hand operator) Omega = m * Omega * (mass carrier):
///   dirac_kahler   i D Omega        = m Omega
///   hestenes      -D Omega e1e2     = m Omega e0
///   joyce          i D Omega        = m Omega e0
///   volume        -D Omega          = m Omega e
/// with D = d_c + delta_c.
enum class EquationKind { dirac_kahler, hestenes, joyce, volume };

inline constexpr EquationKind kAllEquations[] = {
    EquationKind::dirac_kahler, EquationKind::hestenes, EquationKind::joyce,
    EquationKind::volume};

EquationKind parse_equation_kind(std::string_view tag);
std::string_view to_string(EquationKind kind);

/// Complex mass parameter m.
class Mass {
public:
  Mass(Complex value); // NOLINT(google-explicit-constructor)
  Mass(double value) : Mass(Complex(value, 0.0)) {} // NOLINT(google-explicit-constructor)

  Complex value() const { return value_; }
  Mass operator-() const { return Mass(-value_); }

private:
  Complex value_;
};

/// Constant form multiplying Omega on the right of the mass term.
Multivector mass_carrier(EquationKind kind);

/// Left-hand side minus right-hand side. Domain restrictions (real, even) are
/// not enforced; Omega solves the equation iff the residual vanishes.
FormField residual(EquationKind kind, const FormField &omega, Mass m);

/// Residuals of the explicit eight-row difference systems for the Hestenes
/// and Joyce equations. Each row is written as "expression = m * omega_beta"
/// for an even blade beta and its residual is stored at blade beta. For even
/// input, residual(kind, omega, m) == component_residual * e0.
struct ComponentResidual {
  FormField residual;
  // Largest odd-grade coefficient of the input, which the rows never read.
  double ignored_odd = 0.0;
};

ComponentResidual component_residual_hestenes(const FormField &omega, Mass m);
ComponentResidual component_residual_joyce(const FormField &omega, Mass m);

enum class ProjectorKind { p0_plus, p0_minus, p12_plus, p12_minus, pe_plus, pe_minus };

ProjectorKind parse_projector_kind(std::string_view tag); // "p0+", "pe-", ...
std::string_view to_string(ProjectorKind kind);

/// P±0 = (x ± e0)/2, P±12 = (x ± i e1e2)/2, P±e = (x ± i e)/2.
Multivector projector(ProjectorKind kind);
FormField projector(ProjectorKind kind, const LatticeShape &shape);

/// +1 for the "+" member of a projector pair, -1 for the "-" member.
int projector_sign(ProjectorKind kind);

struct DecomposedPart {
  std::vector<ProjectorKind> chain; // Omega * P_chain[0] * P_chain[1] * ...
  FormField form;
};

/// Splits Omega by right multiplication with one of the supported families,
/// given as the set of projector kinds involved:
///   {p0±}, {p12±}, {pe±}, {p0±, p12±} (four parts), {pe±, p0±, p12±} (eight).
/// Parts come back in the canonical order listed in the implementation and
/// always sum to Omega. Any other set is a UsageError.
std::vector<DecomposedPart> decompose(const FormField &omega,
                                      std::span<const ProjectorKind> kinds);

/// Omega -> Omega e2e3; reverses the mass sign of the Hestenes equation.
FormField mass_flip_hestenes(const FormField &omega);
/// Omega -> Omega e1e2e3; reverses the mass sign of the volume equation.
FormField mass_flip_volume(const FormField &omega);

using RealPair = std::pair<FormField, FormField>; // (Omega+, Omega-)

/// Omega± = (Omega + conj Omega)/2 ± (i/2)(Omega - conj Omega) e1e2
RealPair real_pair_hestenes(const FormField &omega);
/// Omega± = (Omega + conj Omega)/2 ± (i/2)(Omega - conj Omega) e
RealPair real_pair_volume(const FormField &omega);

/// Inverses: Omega = (Omega+ + Omega-)/2 + (i/2)(Omega+ - Omega-) * carrier.
FormField reconstruct_hestenes(const RealPair &pair);
FormField reconstruct_volume(const RealPair &pair);

} // namespace dkahler
