#include "dkahler/clifford.hpp"

namespace dkahler {

std::string blade_name(Blade b) {
  if (b == Blade::unit())
    return "x";
  if (b == Blade::volume())
    return "e";
  std::string name = "e";
  for (int mu = 0; mu < 4; ++mu)
    if (b.contains(mu))
      name += static_cast<char>('0' + mu);
  return name;
}

} // namespace dkahler
