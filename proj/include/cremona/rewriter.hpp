#pragma once

#include <compare>
#include <optional>

#include "cremona/quadlib.hpp"

namespace cremona {

/// Letters grouped as f = j_r a_r ... j_1 a_1, reading runs of equal tag as
/// single letters. Missing a_1 (word ends in J) or j_{r+1} count as identity.
struct WordLayout {
  // Index ranges [first, last) into the word, one per a_i / j_i, i >= 1.
  struct Run {
    std::size_t first = 0, last = 0;
    bool empty() const { return first == last; }
  };
  std::vector<Run> a;  // a[i] for i = 1..r+1 (a[0] unused)
  std::vector<Run> j;  // j[i] for i = 1..r (j[0] unused)
  std::size_t r() const { return j.size() - 1; }
};
WordLayout layout(const Word& w);

/// The inverse prefix maps F_i^{-1}, i = 0..r, with F_i = j_i a_i ... j_1 a_1;
/// the components of F_i^{-1} span Lambda_i.
std::vector<CremonaMap> prefix_maps(const Word& w);
/// Classes of Lambda_0, ..., Lambda_r.
std::vector<LinearSystemClass> prefix_systems(const Word& w);

struct RewriteComplexity {
  int D = 1;
  std::size_t n = 0;
  int k = 0;
  /// Lexicographic order on (D, k); n is carried along.
  friend std::strong_ordering operator<=>(const RewriteComplexity& a, const RewriteComplexity& b) {
    if (auto c = a.D <=> b.D; c != 0) return c;
    return a.k <=> b.k;
  }
  friend bool operator==(const RewriteComplexity& a, const RewriteComplexity& b) { return a.D == b.D && a.k == b.k; }
};
RewriteComplexity complexity(const Word& w);
nlohmann::json to_json(const RewriteComplexity& c);

/// A rewritten word with the moves taking the input to it.
struct RewriteStep {
  Word word;
  std::vector<Move> moves;
};

/// Drops identity letters, merges neighbours of equal tag and moves letters of
/// A n J into the group of a neighbour until the word is reduced: every
/// A-letter between J-letters moves p1 and every J-letter between A-letters
/// is nonlinear. In particular j_n, j_{n+1} lie in J \ A and a_{n+1} in A \ J.
RewriteStep normalize_neighbors(const Word& w);

enum class Side { Left, Right };

/// The data the case analysis reads at the maximal index n of a reduced word.
struct CaseContext {
  RewriteComplexity cx;
  int d_n = 0, d_prev = 0, d_next = 0;
  std::size_t pos_jn = 0, pos_a = 0, pos_jn1 = 0;  // word positions of j_n, a_{n+1}, j_{n+1}
  CremonaMap lambda_n = CremonaMap::identity();   // F_n^{-1}
  ProjPoint l0 = ProjPoint::p1();                 // a_{n+1}^{-1}(p1)
  int DL = 0, DR = 0;                             // degrees of j_{n+1}, j_n
  std::vector<std::pair<BubblePoint, int>> left;   // l1, l2, ... with m(l_i)
  std::vector<std::pair<BubblePoint, int>> right;  // r1, r2, ... with m(r_i)
  int m_l0 = 0, m_r0 = 0;
};
/// Throws ProofGapDetected when a degree formula or the multiplicity inequality at the peak fails.
CaseContext analyze(const Word& w);

RewriteStep case_a_step(const Word& w, const CaseContext& ctx);
RewriteStep case_b_step(const Word& w, const CaseContext& ctx, Side side);

struct CaseRecord {
  MoveKind kind = MoveKind::CaseARewrite;
  Side side = Side::Right;
  RewriteComplexity before, after;
};

struct RewriteOptions {
  std::optional<std::size_t> budget;  // elementary moves; default 10 * (sum of degrees)^2
  bool check_steps = true;            // replay each emitted move while rewriting
};

struct RewriteResult {
  Trace trace;
  std::vector<CaseRecord> cases;
  std::size_t elementary_moves = 0;
  std::size_t budget = 0;
};

std::size_t default_budget(const Word& w);

/// Rewrites a word evaluating to the identity down to the empty word.
RewriteResult reduce_identity(const Word& w, const RewriteOptions& opt = {});

}  // namespace cremona
