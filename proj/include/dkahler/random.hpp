#pragma once

#include <cstdint>
#include <random>

#include "dkahler/forms.hpp"

namespace dkahler {

/// Source of random test forms. Coefficients are i.i.d. with real and
/// imaginary parts uniform in [-1, 1]. Streams with distinct ids derived from
/// the same seed are independent.
class FormSampler {
public:
  explicit FormSampler(std::uint64_t seed, std::uint64_t stream = 0);

  Complex coefficient();
  Multivector multivector();
  FormField form(const LatticeShape &shape);
  FormField even_form(const LatticeShape &shape);
  FormField real_form(const LatticeShape &shape);
  int uniform_int(int lo, int hi); // inclusive

  std::mt19937_64 &engine() { return rng_; }

private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> unit_{-1.0, 1.0};
};

} // namespace dkahler
