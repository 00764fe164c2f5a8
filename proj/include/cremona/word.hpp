#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "cremona/jonq.hpp"

namespace cremona {

enum class Tag { A, J };

/// An element of A = PGL(3) or of the de Jonquieres group J.
class Letter {
 public:
  static Letter a(ProjLinearMap m) { return Letter(std::move(m)); }
  static Letter j(JonqElement g) { return Letter(std::move(g)); }

  Tag tag() const { return std::holds_alternative<ProjLinearMap>(v_) ? Tag::A : Tag::J; }
  const ProjLinearMap& linear() const;
  const JonqElement& jonq() const;

  Letter inverse() const;
  CremonaMap to_cremona() const;
  int degree() const;
  bool is_identity() const;
  /// Lies in A n J: an A-letter fixing p1 or a linear J-letter.
  bool in_intersection() const;
  /// The same element as a letter of the other tag; requires in_intersection().
  Letter shifted() const;

  friend bool operator==(const Letter&, const Letter&) = default;

  /// "A[...]" (row-major matrix) or "J(...)".
  std::string str() const;

 private:
  explicit Letter(ProjLinearMap m) : v_(std::move(m)) {}
  explicit Letter(JonqElement g) : v_(std::move(g)) {}
  std::variant<ProjLinearMap, JonqElement> v_;
};

/// Letters in written order: the rightmost letter is applied first.
using Word = std::vector<Letter>;

CremonaMap eval_word(const Word& w);
/// Reversed word of inverses.
Word invert_word(const Word& w);
/// Group product of a run of letters of one tag (the identity for an empty run).
ProjLinearMap product_a(const Word& run);
JonqElement product_j(const Word& run);
std::string word_str(const Word& w);

nlohmann::json to_json(const Letter& l);
Letter letter_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);

enum class MoveKind {
  MergeA,             // a run of A-letters replaced by a run with the same product
  MergeJ,             // same for J-letters
  ShiftIntersection,  // one letter of A n J changes tag
  SigmaTauSwap,       // [sigma][tau] <-> [tau][sigma]
  InsertCancelPair,   // [] -> [x][x^-1]
  Lemma1Macro,
  CaseARewrite,
  CaseBRewrite,
};

std::string to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);
bool is_macro(MoveKind k);

/// Replaces word[position, position + consumed.size()) by produced. Macro
/// sub-moves act on the consumed segment, positions relative to it.
struct Move {
  MoveKind kind = MoveKind::MergeA;
  std::size_t position = 0;
  Word consumed;
  Word produced;
  nlohmann::json justification = nlohmann::json::object();
  std::vector<Move> sub;
};

struct Trace {
  Word initial;
  std::vector<Move> moves;
  Word final_word;
};

/// Applies a move without checking its justification; throws if the
/// consumed letters are not found at the position.
Word apply_move(const Word& w, const Move& m);

struct Verdict {
  bool ok = true;
  std::optional<std::size_t> failing_move;  // index into Trace::moves
  std::string reason;
};

/// Checks one move against the word it acts on.
Verdict check_move(const Word& before, const Move& m, bool check_eval);
/// Replays every move, checking each schema by exact group arithmetic and
/// (when check_eval) the Cremona evaluation of every rewritten segment.
Verdict verify_trace(const Trace& t, bool check_eval = true);

/// The trace acting on inverted words: reversed letters, mirrored positions.
Trace invert_trace(const Trace& t);

/// Appends moves to a running word.
class MoveRecorder {
 public:
  explicit MoveRecorder(Word w) : initial_(w), w_(std::move(w)) {}

  const Word& word() const { return w_; }
  const std::vector<Move>& moves() const { return moves_; }
  Trace trace() const { return {initial_, moves_, w_}; }

  /// Rewrites word[pos, pos + count) into produced.
  void emit(MoveKind kind, std::size_t pos, std::size_t count, Word produced,
            nlohmann::json justification = nlohmann::json::object(), std::vector<Move> sub = {});
  /// ShiftIntersection of the letter at pos.
  void shift(std::size_t pos);

 private:
  Word initial_;
  Word w_;
  std::vector<Move> moves_;
};

/// Number of non-macro moves, counting inside macros.
std::size_t elementary_count(const Move& m);

nlohmann::json to_json(const Move& m);
Move move_from_json(const nlohmann::json& j);
/// JSON lines: header, one record per move, footer.
std::string trace_to_jsonl(const Trace& t);
Trace trace_from_jsonl(const std::string& text);

}  // namespace cremona
