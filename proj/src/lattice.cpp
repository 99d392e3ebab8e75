#include "dkahler/lattice.hpp"

#include <limits>
#include <sstream>

namespace dkahler {

void check_direction(int mu) {
  if (mu < 0 || mu >= kDimensions)
    throw UsageError("direction must be in 0..3, got " + std::to_string(mu));
}

LatticeShape::LatticeShape(std::array<int, kDimensions> extents)
    : extents_(extents) {
  for (int mu = kDimensions - 1; mu >= 0; --mu) {
    const int n = extents_[static_cast<std::size_t>(mu)];
    if (n < 1)
      throw UsageError("lattice extent must be positive, got " +
                       std::to_string(n) + " in direction " +
                       std::to_string(mu));
    strides_[static_cast<std::size_t>(mu)] = site_count_;
    if (site_count_ > std::numeric_limits<std::size_t>::max() /
                          static_cast<std::size_t>(n))
      throw UsageError("lattice site count overflows");
    site_count_ *= static_cast<std::size_t>(n);
  }
}

int LatticeShape::extent(int mu) const {
  check_direction(mu);
  return extents_[static_cast<std::size_t>(mu)];
}

bool LatticeShape::contains(const SiteIndex &site) const {
  for (std::size_t mu = 0; mu < kDimensions; ++mu)
    if (site.k[mu] < 0 || site.k[mu] >= extents_[mu])
      return false;
  return true;
}

std::size_t LatticeShape::linear_index(const SiteIndex &site) const {
  if (!contains(site))
    throw UsageError("site " + to_string(site) + " outside lattice " +
                     to_string(*this));
  std::size_t linear = 0;
  for (std::size_t mu = 0; mu < kDimensions; ++mu)
    linear += static_cast<std::size_t>(site.k[mu]) * strides_[mu];
  return linear;
}

SiteIndex LatticeShape::site_at(std::size_t linear) const {
  if (linear >= site_count_)
    throw UsageError("linear site index out of range");
  SiteIndex site;
  for (std::size_t mu = 0; mu < kDimensions; ++mu) {
    site.k[mu] = static_cast<int>(linear / strides_[mu]);
    linear %= strides_[mu];
  }
  return site;
}

std::size_t LatticeShape::shifted(std::size_t linear, int mu) const {
  const auto m = static_cast<std::size_t>(mu);
  const auto n = static_cast<std::size_t>(extents_[m]);
  const std::size_t k = (linear / strides_[m]) % n;
  // k -> k+1 wraps to 0 at the boundary
  return k + 1 == n ? linear - k * strides_[m] : linear + strides_[m];
}

std::string to_string(const SiteIndex &site) {
  std::ostringstream out;
  out << '(' << site.k[0] << ',' << site.k[1] << ',' << site.k[2] << ','
      << site.k[3] << ')';
  return out.str();
}

std::string to_string(const LatticeShape &shape) {
  std::ostringstream out;
  out << shape.extents()[0] << 'x' << shape.extents()[1] << 'x'
      << shape.extents()[2] << 'x' << shape.extents()[3];
  return out.str();
}

SiteIndex shift(const SiteIndex &site, int mu, const LatticeShape &shape) {
  check_direction(mu);
  if (!shape.contains(site))
    throw UsageError("site " + to_string(site) + " outside lattice " +
                     to_string(shape));
  SiteIndex out = site;
  auto &k = out.k[static_cast<std::size_t>(mu)];
  k = (k + 1) % shape.extent(mu);
  return out;
}

std::vector<SiteIndex> sites(const LatticeShape &shape) {
  std::vector<SiteIndex> out;
  out.reserve(shape.site_count());
  for (std::size_t i = 0; i < shape.site_count(); ++i)
    out.push_back(shape.site_at(i));
  return out;
}

} // namespace dkahler
