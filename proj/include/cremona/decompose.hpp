#pragma once

#include "cremona/quadlib.hpp"

namespace cremona {

struct DecompositionStep {
  std::vector<BubblePoint> points;  // the three base points removed, or the centre of a de Jonquieres step
  std::vector<int> multiplicities;
  int degree_before = 0;
  int degree_after = 0;
};

struct DecompositionResult {
  Word word;  // evaluates to the input
  std::vector<DecompositionStep> steps;
};

/// Greedy factorization: while the degree exceeds one, remove the first
/// admissible triple of base points (by decreasing multiplicity) that lowers
/// the degree, using a quadratic map preceded by a linear map taking the first
/// point to p1. When no triple qualifies but a proper point has multiplicity
/// d - 1, the rest is emitted as one de Jonquieres letter between two linear
/// ones. Throws NotHomaloidal, NonRationalBasePoint or DecompositionStuck.
DecompositionResult decompose(const CremonaMap& f);

nlohmann::json to_json(const DecompositionResult& r);

}  // namespace cremona
