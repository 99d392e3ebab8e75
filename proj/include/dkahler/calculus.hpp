#pragma once

#include <string_view>

#include "dkahler/forms.hpp"

namespace dkahler {

enum class OperatorKind { dc, deltac, dirac };

OperatorKind parse_operator_kind(std::string_view tag);

/// Forward difference: c_k -> c_{tau_mu k} - c_k on every blade.
FormField delta_mu(const FormField &a, int mu);

/// Discrete exterior derivative, grade r -> r+1, written out component by
/// component from the difference tables.
FormField d_c(const FormField &a);

/// Discrete codifferential, grade r -> r-1, likewise component by component.
FormField delta_c(const FormField &a);

/// sum_mu e_mu Delta_mu a, assembled from Clifford products. Equals
/// d_c(a) + delta_c(a); the two are kept as separate code paths.
FormField dirac(const FormField &a);

FormField apply(OperatorKind kind, const FormField &a);

} // namespace dkahler
