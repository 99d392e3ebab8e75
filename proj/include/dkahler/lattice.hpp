#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "dkahler/errors.hpp"

namespace dkahler {

inline constexpr int kDimensions = 4;

// Throws UsageError unless 0 <= mu < 4.
void check_direction(int mu);

/// Multi-index k = (k0, k1, k2, k3) of a lattice site.
struct SiteIndex {
  std::array<int, kDimensions> k{};

  int operator[](int mu) const { return k[static_cast<std::size_t>(mu)]; }
  friend auto operator<=>(const SiteIndex &, const SiteIndex &) = default;
};

std::string to_string(const SiteIndex &site);

/// Extents of a finite periodic 4-D lattice. Sites are linearised
/// lexicographically with k0 outermost and k3 innermost.
class LatticeShape {
public:
  explicit LatticeShape(std::array<int, kDimensions> extents);

  int extent(int mu) const;
  const std::array<int, kDimensions> &extents() const { return extents_; }
  std::size_t site_count() const { return site_count_; }

  bool contains(const SiteIndex &site) const;
  std::size_t linear_index(const SiteIndex &site) const;
  SiteIndex site_at(std::size_t linear) const;

  // Linear index of tau_mu applied to the site with the given linear index.
  std::size_t shifted(std::size_t linear, int mu) const;

  friend bool operator==(const LatticeShape &, const LatticeShape &) = default;

private:
  std::array<int, kDimensions> extents_;
  std::array<std::size_t, kDimensions> strides_{};
  std::size_t site_count_ = 1;
};

std::string to_string(const LatticeShape &shape);

/// tau_mu: increments k_mu modulo N_mu.
SiteIndex shift(const SiteIndex &site, int mu, const LatticeShape &shape);

/// Every site once, lexicographic order.
std::vector<SiteIndex> sites(const LatticeShape &shape);

} // namespace dkahler
