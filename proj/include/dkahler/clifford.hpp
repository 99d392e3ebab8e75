#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace dkahler {

inline constexpr int kBladeCount = 16;

// Metric g = diag(+1, -1, -1, -1).
constexpr int metric(int mu) { return mu == 0 ? 1 : -1; }

/// Basis element of Cl(1,3): bit mu of the mask is set iff e_mu is a factor.
/// Factors are kept in ascending order, so mask 0 is the unit x and mask 15
/// is the volume element e = e0 e1 e2 e3.
class Blade {
public:
  constexpr Blade() = default;
  constexpr explicit Blade(unsigned mask) : mask_(static_cast<std::uint8_t>(mask & 0xFu)) {}

  static constexpr Blade unit() { return Blade(0); }
  static constexpr Blade volume() { return Blade(0xF); }
  static constexpr Blade generator(int mu) { return Blade(1u << mu); }
  static constexpr Blade of(std::initializer_list<int> indices) {
    unsigned mask = 0;
    for (int mu : indices)
      mask |= 1u << mu;
    return Blade(mask);
  }

  constexpr unsigned mask() const { return mask_; }
  constexpr std::size_t index() const { return mask_; }
  constexpr int grade() const { return std::popcount(mask_); }
  constexpr bool contains(int mu) const { return (mask_ >> mu) & 1u; }
  constexpr bool is_even() const { return grade() % 2 == 0; }

  friend constexpr bool operator==(Blade, Blade) = default;

private:
  std::uint8_t mask_ = 0;
};

constexpr int grade(Blade b) { return b.grade(); }

struct SignedBlade {
  int sign = 1;
  Blade blade;

  friend constexpr bool operator==(const SignedBlade &, const SignedBlade &) = default;
};

namespace detail {

constexpr SignedBlade compute_product(Blade a, Blade b) {
  // Sorting the concatenation a|b takes one transposition per pair
  // (i in a, j in b) with i > j; each shared generator then contracts to g_mu.
  int swaps = 0;
  for (int i = 0; i < 4; ++i)
    if (a.contains(i))
      for (int j = 0; j < i; ++j)
        if (b.contains(j))
          ++swaps;
  int sign = swaps % 2 == 0 ? 1 : -1;
  for (int mu = 0; mu < 4; ++mu)
    if (a.contains(mu) && b.contains(mu))
      sign *= metric(mu);
  return {sign, Blade(a.mask() ^ b.mask())};
}

using ProductTable = std::array<std::array<SignedBlade, kBladeCount>, kBladeCount>;

constexpr ProductTable build_product_table() {
  ProductTable table{};
  for (unsigned a = 0; a < kBladeCount; ++a)
    for (unsigned b = 0; b < kBladeCount; ++b)
      table[a][b] = compute_product(Blade(a), Blade(b));
  return table;
}

inline constexpr ProductTable kProductTable = build_product_table();

} // namespace detail

constexpr SignedBlade blade_product(Blade a, Blade b) {
  return detail::kProductTable[a.index()][b.index()];
}

/// "x", "e0", "e12", "e013", "e" (volume).
std::string blade_name(Blade b);

} // namespace dkahler
