#include "dkahler/random.hpp"

namespace dkahler {

namespace {

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

} // namespace

FormSampler::FormSampler(std::uint64_t seed, std::uint64_t stream)
    : rng_(seeded(seed, stream)) {}

Complex FormSampler::coefficient() {
  const double re = unit_(rng_);
  const double im = unit_(rng_);
  return {re, im};
}

Multivector FormSampler::multivector() {
  Multivector m;
  for (auto &c : m.c)
    c = coefficient();
  return m;
}

FormField FormSampler::form(const LatticeShape &shape) {
  FormField out(shape);
  for (auto &c : out.coeffs())
    c = coefficient();
  return out;
}

FormField FormSampler::even_form(const LatticeShape &shape) { return even_part(form(shape)); }

FormField FormSampler::real_form(const LatticeShape &shape) { return real_part(form(shape)); }

int FormSampler::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

} // namespace dkahler
