#pragma once

#include <string_view>

#include "cremona/jonq.hpp"

namespace cremona::named {

// sigma = (YZ:XZ:XY), tau = (Y:X:Z), nu1 = (XY:Z^2:YZ), nu2 = (Z^2:XY:XZ),
// rho1 = (X:Z-Y:Z), rho2 = (Z-X:Y:Z).
const CremonaMap& sigma();
const CremonaMap& nu1();
const CremonaMap& nu2();
const ProjLinearMap& tau();
const ProjLinearMap& rho1();
const ProjLinearMap& rho2();

const JonqElement& sigma_j();
const JonqElement& nu1_j();
const JonqElement& nu2_j();
const JonqElement& rho1_j();
const JonqElement& rho2_j();

/// Looks up "sigma", "tau", "nu1", "nu2", "rho1", "rho2"; null if unknown.
const CremonaMap* lookup(std::string_view name);

}  // namespace cremona::named
