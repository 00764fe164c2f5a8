#pragma once

#include <random>

#include "cremona/quadlib.hpp"

namespace testgen {

using namespace cremona;

inline CremonaMap named(const char* s) { return CremonaMap::parse(s); }
inline const CremonaMap& sigma() { static auto m = named("[Y*Z : X*Z : X*Y]"); return m; }
inline const CremonaMap& nu1() { static auto m = named("[X*Y : Z^2 : Y*Z]"); return m; }
inline const CremonaMap& nu2() { static auto m = named("[Z^2 : X*Y : X*Z]"); return m; }

inline ProjLinearMap random_matrix(std::mt19937_64& rng, int range = 3) {
  std::uniform_int_distribution<int> d(-range, range);
  while (true) {
    std::array<Rational, 9> m;
    for (auto& v : m) v = d(rng);
    if (!det3(m).is_zero()) return ProjLinearMap(m);
  }
}

inline CremonaMap random_linear(std::mt19937_64& rng) { return CremonaMap::from_linear(random_matrix(rng)); }

/// Product of `letters` quadratic generators separated by random linear maps,
/// rejected while the degree exceeds max_degree.
inline CremonaMap random_word(std::mt19937_64& rng, int letters, int max_degree = 8) {
  const CremonaMap* gens[] = {&sigma(), &nu1(), &nu2()};
  std::uniform_int_distribution<int> pick(0, 2);
  while (true) {
    CremonaMap f = random_linear(rng);
    bool ok = true;
    for (int i = 0; i < letters && ok; ++i) {
      f = random_linear(rng) * *gens[pick(rng)] * f;
      ok = f.degree() <= max_degree;
    }
    if (ok) return f;
  }
}

/// A random element of A n J.
inline ProjLinearMap random_fixing_p1(std::mt19937_64& rng, int range = 3) {
  while (true) {
    ProjLinearMap m = random_matrix(rng, range);
    if (m.fixes_p1()) return m;
    std::array<Rational, 9> e = m.entries();
    e[3] = e[6] = 0;
    if (!det3(e).is_zero()) return ProjLinearMap(e);
  }
}

/// a1 * core * a2 with random a_i in A n J.
inline JonqElement random_quadratic_j(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  const QuadCore core = static_cast<QuadCore>(pick(rng));
  return JonqElement::from_linear(random_fixing_p1(rng)) * core_jonq(core) *
         JonqElement::from_linear(random_fixing_p1(rng));
}

/// A word of the given length over random A-letters, random quadratic
/// J-letters and the named generators.
inline Word random_letter_word(std::mt19937_64& rng, int length) {
  std::uniform_int_distribution<int> pick(0, 6);
  Word w;
  for (int i = 0; i < length; ++i) {
    switch (pick(rng)) {
      case 0: w.push_back(Letter::a(random_matrix(rng))); break;
      case 1: w.push_back(Letter::j(random_quadratic_j(rng))); break;
      case 2: w.push_back(Letter::j(named::sigma_j())); break;
      case 3: w.push_back(Letter::j(pick(rng) % 2 ? named::nu1_j() : named::nu2_j())); break;
      case 4: w.push_back(Letter::a(named::tau())); break;
      case 5: w.push_back(Letter::a(pick(rng) % 2 ? named::rho1() : named::rho2())); break;
      default: w.push_back(Letter::a(random_matrix(rng))); break;
    }
  }
  return w;
}

/// g followed by its formal inverse.
inline Word identity_word(std::mt19937_64& rng, int length) {
  Word g = random_letter_word(rng, length);
  Word gi = invert_word(g);
  g.insert(g.end(), gi.begin(), gi.end());
  return g;
}

/// Identity words needing the relation: (sigma tau)^2, tau nu1 tau nu2 or
/// rho1 sigma rho1 sigma rho1 nu1.
inline Word relator(std::mt19937_64& rng) {
  const Letter s = Letter::j(named::sigma_j()), t = Letter::a(named::tau());
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return {s, t, s, t};
    case 1: return {t, Letter::j(named::nu1_j()), t, Letter::j(named::nu2_j())};
    default: {
      Word w = nu_expand(1);
      w.push_back(Letter::j(named::nu1_j()));
      w[0] = Letter::a(named::rho1());
      w[2] = Letter::a(named::rho1());
      w[4] = Letter::a(named::rho1());
      return w;
    }
  }
}

/// g R g^-1 for a random relator R.
inline Word conjugated_relator(std::mt19937_64& rng, int length) {
  Word g = random_letter_word(rng, length);
  Word gi = invert_word(g);
  Word r = relator(rng);
  g.insert(g.end(), r.begin(), r.end());
  g.insert(g.end(), gi.begin(), gi.end());
  return g;
}

}  // namespace testgen
