#pragma once

#include "cremona/bubble.hpp"
#include "cremona/named.hpp"
#include "cremona/word.hpp"

namespace cremona {

enum class QuadCore { Sigma, Nu1, Nu2 };

const JonqElement& core_jonq(QuadCore c);
std::string to_string(QuadCore c);

/// A quadratic de Jonquieres map with base points p1, `second` and `third`,
/// stored as map = a1 * core * a2 with a1, a2 in A n J.
struct QuadraticJMap {
  JonqElement map;
  ProjPoint second;
  BubblePoint third;
  ProjLinearMap a1;
  QuadCore core;
  ProjLinearMap a2;
};

/// c^{-1} core c where the frame map c fixes p1, sends `second` to p2 and the
/// third datum to p3 (a proper point, or the tangent point w of an infinitely
/// near one), and sends the first completion candidate in general position to
/// (1:1:1). The core is sigma, or nu_i when the third point lies over the i-th.
QuadraticJMap quadratic_j_map(const ProjPoint& second, const BubblePoint& third);

/// Rebuilds the base-point data and factorization of a quadratic element of J.
QuadraticJMap quadratic_from_jonq(const JonqElement& theta);

struct QuadFactors {
  ProjLinearMap a1;
  QuadCore core;
  ProjLinearMap a2;
};
/// Exact factorization theta = a1 * core * a2, checked by composition.
QuadFactors factor_quadratic(const QuadraticJMap& theta);

/// [rho_i, sigma, rho_i, sigma, rho_i] as J-letters.
Word nu_expand(int i);

struct Conjugation {
  QuadraticJMap theta_prime;  // nu theta nu^{-1}
  Trace cert;                 // [nu][theta^{-1}] -> [theta'^{-1}][nu]
};

/// nu must exchange p1 and theta.second, and theta must also preserve the
/// pencil through its second point (a1 sends p2 to the second point).
Conjugation lemma1_conjugate(const QuadraticJMap& theta, const ProjLinearMap& nu);

}  // namespace cremona
