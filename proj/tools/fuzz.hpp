#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cremona/word.hpp"

namespace cremona::cli {

/// Random words over random linear maps, random quadratic de Jonquieres maps
/// and the named generators.
Word random_letter_word(std::mt19937_64& rng, int length);
/// g followed by its formal inverse.
Word free_identity_word(std::mt19937_64& rng, int length);
/// g R g^-1 with R one of (sigma tau)^2, tau nu1 tau nu2, rho1 sigma rho1 sigma rho1 nu1.
Word conjugated_relator(std::mt19937_64& rng, int length);

struct FuzzOptions {
  std::uint64_t seed = 1;
  int count = 20;
  int length = 4;
  std::optional<std::size_t> budget;
  std::uint64_t prime = 0;  // 0 selects the rewriter fuzz over Q
};

struct FuzzFailure {
  int index = 0;
  std::string word;
  std::string reason;
};

struct FuzzReport {
  int runs = 0;
  std::size_t moves = 0, elementary = 0, max_elementary = 0;
  int case_a = 0, case_b_left = 0, case_b_right = 0;
  std::size_t checks = 0;  // kernel identities checked over F_p
  std::vector<FuzzFailure> failures;
  double seconds = 0;
};

/// Alternates free identity words with conjugated relators; every word goes
/// through reduce_identity and verify_trace.
FuzzReport fuzz_rewriter(const FuzzOptions& opt);
/// Polynomial and field identities over F_p.
FuzzReport fuzz_prime_field(const FuzzOptions& opt);

nlohmann::json to_json(const FuzzReport& r);

}  // namespace cremona::cli
