#pragma once

#include <utility>
#include <vector>

#include "cremona/upoly.hpp"

namespace cremona {

struct RootMultiplicity {
  Rational value;
  int multiplicity = 0;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct RationalRoots {
  std::vector<RootMultiplicity> roots;  // sorted by value
  QPoly cofactor;                       // p / prod (x - r)^m, no rational roots
};

/// Square-free decomposition p = lc * prod_i s_i^i (Yun); entry i-1 holds s_i.
std::vector<QPoly> squarefree_decomposition(const QPoly& p);

/// All rational roots of p != 0 with multiplicities, plus the root-free
/// cofactor. Roots are found modulo a prime where p is square-free and
/// lifted p-adically past the Cauchy bound, then confirmed exactly.
RationalRoots rational_roots(const QPoly& p);

}  // namespace cremona
