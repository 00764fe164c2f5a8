#include "cremona/word.hpp"

#include <sstream>

#include "cremona/named.hpp"

namespace cremona {

using nlohmann::json;

const ProjLinearMap& Letter::linear() const {
  if (tag() != Tag::A) fail(ErrorKind::ParseError, "letter is not in A");
  return std::get<ProjLinearMap>(v_);
}

const JonqElement& Letter::jonq() const {
  if (tag() != Tag::J) fail(ErrorKind::ParseError, "letter is not in J");
  return std::get<JonqElement>(v_);
}

Letter Letter::inverse() const {
  return tag() == Tag::A ? Letter::a(linear().inverse()) : Letter::j(jonq().inverse());
}

CremonaMap Letter::to_cremona() const {
  return tag() == Tag::A ? CremonaMap::from_linear(linear()) : jonq().to_cremona();
}

int Letter::degree() const { return tag() == Tag::A ? 1 : jonq().degree(); }

bool Letter::is_identity() const { return tag() == Tag::A ? linear().is_identity() : jonq().is_identity(); }

bool Letter::in_intersection() const { return tag() == Tag::A ? linear().fixes_p1() : jonq().is_linear(); }

Letter Letter::shifted() const {
  if (!in_intersection()) fail(ErrorKind::NotDeJonquieres, str() + " is not in A n J");
  return tag() == Tag::A ? Letter::j(JonqElement::from_linear(linear())) : Letter::a(jonq().to_linear());
}

std::string Letter::str() const { return tag() == Tag::A ? "A" + linear().str() : jonq().str(); }

CremonaMap eval_word(const Word& w) {
  CremonaMap f = CremonaMap::identity();
  for (const auto& l : w) f = f * l.to_cremona();
  return f;
}

Word invert_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

ProjLinearMap product_a(const Word& run) {
  ProjLinearMap p = ProjLinearMap::identity();
  for (const auto& l : run) p = p * l.linear();
  return p;
}

JonqElement product_j(const Word& run) {
  JonqElement p = JonqElement::identity();
  for (const auto& l : run) p = p * l.jonq();
  return p;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "()";
  std::string s;
  for (const auto& l : w) s += (s.empty() ? "" : " ") + l.str();
  return s;
}

json to_json(const Letter& l) {
  json out = json::object();
  if (l.tag() == Tag::A) {
    out["tag"] = "A";
    json m = json::array();
    for (const auto& e : l.linear().entries()) m.push_back(e.str());
    out["matrix"] = m;
  } else {
    out = to_json(l.jonq());
    out["tag"] = "J";
  }
  return out;
}

Letter letter_from_json(const json& j) {
  try {
    const auto tag = j.at("tag").get<std::string>();
    if (tag == "A") {
      const auto& m = j.at("matrix");
      if (!m.is_array() || m.size() != 9) fail(ErrorKind::ParseError, "A-letter needs nine entries");
      std::array<Rational, 9> e;
      for (std::size_t i = 0; i < 9; ++i) e[i] = Rational::parse(m[i].get<std::string>());
      return Letter::a(ProjLinearMap(e));
    }
    if (tag == "J") return Letter::j(jonq_from_json(j));
    fail(ErrorKind::ParseError, "unknown letter tag '" + tag + "'");
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("letter JSON: ") + e.what());
  }
}

json to_json(const Word& w) {
  json out = json::array();
  for (const auto& l : w) out.push_back(to_json(l));
  return out;
}

Word word_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorKind::ParseError, "word JSON must be an array");
  Word w;
  for (const auto& l : j) w.push_back(letter_from_json(l));
  return w;
}

namespace {
constexpr std::pair<MoveKind, const char*> kKindNames[] = {
    {MoveKind::MergeA, "MergeA"},
    {MoveKind::MergeJ, "MergeJ"},
    {MoveKind::ShiftIntersection, "ShiftIntersection"},
    {MoveKind::SigmaTauSwap, "SigmaTauSwap"},
    {MoveKind::InsertCancelPair, "InsertCancelPair"},
    {MoveKind::Lemma1Macro, "Lemma1Macro"},
    {MoveKind::CaseARewrite, "CaseARewrite"},
    {MoveKind::CaseBRewrite, "CaseBRewrite"},
};
}  // namespace

std::string to_string(MoveKind k) {
  for (auto [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
  for (auto [kind, name] : kKindNames)
    if (s == name) return kind;
  fail(ErrorKind::ParseError, "unknown move kind '" + s + "'");
}

bool is_macro(MoveKind k) {
  return k == MoveKind::Lemma1Macro || k == MoveKind::CaseARewrite || k == MoveKind::CaseBRewrite;
}

Word apply_move(const Word& w, const Move& m) {
  const std::size_t c = m.consumed.size();
  if (m.position > w.size() || c > w.size() - m.position)
    fail(ErrorKind::ProofGapDetected, "move " + to_string(m.kind) + " reaches past the end of the word");
  for (std::size_t i = 0; i < c; ++i)
    if (!(w[m.position + i] == m.consumed[i]))
      fail(ErrorKind::ProofGapDetected,
           "move " + to_string(m.kind) + ": letter " + std::to_string(m.position + i) + " differs from the word");
  Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m.position));
  out.insert(out.end(), m.produced.begin(), m.produced.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(m.position + c), w.end());
  return out;
}

namespace {

bool all_tagged(const Word& w, Tag t) {
  for (const auto& l : w)
    if (l.tag() != t) return false;
  return true;
}

std::string schema_error(const Move& m) {
  const Word& c = m.consumed;
  const Word& p = m.produced;
  switch (m.kind) {
    case MoveKind::MergeA:
      if (!all_tagged(c, Tag::A) || !all_tagged(p, Tag::A)) return "MergeA on a letter outside A";
      if (!(product_a(c) == product_a(p))) return "MergeA changes the product in A";
      return {};
    case MoveKind::MergeJ:
      if (!all_tagged(c, Tag::J) || !all_tagged(p, Tag::J)) return "MergeJ on a letter outside J";
      if (!(product_j(c) == product_j(p))) return "MergeJ changes the product in J";
      return {};
    case MoveKind::ShiftIntersection:
      if (c.size() != 1 || p.size() != 1) return "ShiftIntersection must rewrite one letter";
      if (c[0].tag() == p[0].tag()) return "ShiftIntersection keeps the tag";
      if (!c[0].in_intersection()) return "ShiftIntersection on a letter outside A n J";
      if (!(c[0].shifted() == p[0])) return "ShiftIntersection changes the element";
      return {};
    case MoveKind::SigmaTauSwap: {
      const Letter s = Letter::j(named::sigma_j()), t = Letter::a(named::tau());
      const bool fwd = c == Word{s, t} && p == Word{t, s};
      const bool bwd = c == Word{t, s} && p == Word{s, t};
      return fwd || bwd ? std::string() : "SigmaTauSwap needs the literal letters sigma and tau";
    }
    case MoveKind::InsertCancelPair:
      if (!c.empty() || p.size() != 2) return "InsertCancelPair must insert two letters";
      if (p[0].tag() != p[1].tag() || !(p[1] == p[0].inverse())) return "inserted letters do not cancel";
      return {};
    case MoveKind::Lemma1Macro:
    case MoveKind::CaseARewrite:
    case MoveKind::CaseBRewrite: {
      if (m.sub.empty()) return to_string(m.kind) + " has no sub-moves";
      Word w = c;
      for (std::size_t i = 0; i < m.sub.size(); ++i) {
        Verdict v = check_move(w, m.sub[i], false);
        if (!v.ok) return to_string(m.kind) + " sub-move " + std::to_string(i) + ": " + v.reason;
        w = apply_move(w, m.sub[i]);
      }
      if (!(w == p)) return to_string(m.kind) + " sub-moves do not produce the stated letters";
      return {};
    }
  }
  return "unknown move kind";
}

}  // namespace

Verdict check_move(const Word& before, const Move& m, bool check_eval) {
  Verdict v;
  try {
    (void)apply_move(before, m);
    std::string err = schema_error(m);
    if (err.empty() && check_eval && !(eval_word(m.consumed) == eval_word(m.produced)))
      err = to_string(m.kind) + " changes the evaluated segment";
    if (!err.empty()) {
      v.ok = false;
      v.reason = err;
    }
  } catch (const Error& e) {
    v.ok = false;
    v.reason = e.detail();
  }
  return v;
}

Verdict verify_trace(const Trace& t, bool check_eval) {
  Word w = t.initial;
  for (std::size_t i = 0; i < t.moves.size(); ++i) {
    Verdict v = check_move(w, t.moves[i], check_eval);
    if (!v.ok) {
      v.failing_move = i;
      return v;
    }
    w = apply_move(w, t.moves[i]);
  }
  if (!(w == t.final_word)) return {false, t.moves.size(), "final word does not match the replayed moves"};
  return {};
}

namespace {

std::vector<Move> invert_moves(const Word& initial, const std::vector<Move>& moves) {
  std::vector<Move> out;
  Word w = initial;
  for (const auto& m : moves) {
    Move r;
    r.kind = m.kind;
    r.position = w.size() - m.position - m.consumed.size();
    r.consumed = invert_word(m.consumed);
    r.produced = invert_word(m.produced);
    r.justification = m.justification;
    r.sub = invert_moves(m.consumed, m.sub);
    out.push_back(std::move(r));
    w = apply_move(w, m);
  }
  return out;
}

}  // namespace

Trace invert_trace(const Trace& t) {
  return {invert_word(t.initial), invert_moves(t.initial, t.moves), invert_word(t.final_word)};
}

void MoveRecorder::emit(MoveKind kind, std::size_t pos, std::size_t count, Word produced, json justification,
                        std::vector<Move> sub) {
  Move m;
  m.kind = kind;
  m.position = pos;
  if (pos > w_.size() || count > w_.size() - pos) fail(ErrorKind::ProofGapDetected, "move outside the word");
  m.consumed.assign(w_.begin() + static_cast<std::ptrdiff_t>(pos), w_.begin() + static_cast<std::ptrdiff_t>(pos + count));
  m.produced = std::move(produced);
  m.justification = std::move(justification);
  m.sub = std::move(sub);
  w_ = apply_move(w_, m);
  moves_.push_back(std::move(m));
}

void MoveRecorder::shift(std::size_t pos) {
  emit(MoveKind::ShiftIntersection, pos, 1, {w_.at(pos).shifted()}, {{"rule", "A n J"}});
}

std::size_t elementary_count(const Move& m) {
  if (!is_macro(m.kind)) return 1;
  std::size_t n = 0;
  for (const auto& s : m.sub) n += elementary_count(s);
  return n;
}

json to_json(const Move& m) {
  json out = json::object();
  out["kind"] = to_string(m.kind);
  out["position"] = m.position;
  out["consumed"] = to_json(m.consumed);
  out["produced"] = to_json(m.produced);
  out["justification"] = m.justification;
  json sub = json::array();
  for (const auto& s : m.sub) sub.push_back(to_json(s));
  out["sub"] = sub;
  return out;
}

Move move_from_json(const json& j) {
  try {
    Move m;
    m.kind = move_kind_from_string(j.at("kind").get<std::string>());
    m.position = j.at("position").get<std::size_t>();
    m.consumed = word_from_json(j.at("consumed"));
    m.produced = word_from_json(j.at("produced"));
    if (j.contains("justification")) m.justification = j.at("justification");
    if (j.contains("sub"))
      for (const auto& s : j.at("sub")) m.sub.push_back(move_from_json(s));
    return m;
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("move JSON: ") + e.what());
  }
}

std::string trace_to_jsonl(const Trace& t) {
  std::ostringstream out;
  out << json{{"record", "header"}, {"version", 1}, {"word", to_json(t.initial)}}.dump() << '\n';
  for (std::size_t i = 0; i < t.moves.size(); ++i) {
    json r = to_json(t.moves[i]);
    r["record"] = "move";
    r["index"] = i;
    out << r.dump() << '\n';
  }
  out << json{{"record", "footer"}, {"moves", t.moves.size()}, {"word", to_json(t.final_word)}}.dump() << '\n';
  return out.str();
}

Trace trace_from_jsonl(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Trace t;
  bool header = false, footer = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (footer) fail(ErrorKind::ParseError, "trace line " + std::to_string(lineno) + " follows the footer");
    json r;
    try {
      r = json::parse(line);
    } catch (const json::exception& e) {
      fail(ErrorKind::ParseError, "trace line " + std::to_string(lineno) + ": " + e.what());
    }
    const std::string kind = r.value("record", "");
    if (kind == "header") {
      if (header) fail(ErrorKind::ParseError, "duplicate trace header");
      t.initial = word_from_json(r.at("word"));
      header = true;
    } else if (kind == "move") {
      if (!header) fail(ErrorKind::ParseError, "trace move before header");
      t.moves.push_back(move_from_json(r));
    } else if (kind == "footer") {
      if (!header) fail(ErrorKind::ParseError, "trace footer before header");
      t.final_word = word_from_json(r.at("word"));
      footer = true;
    } else {
      fail(ErrorKind::ParseError, "trace line " + std::to_string(lineno) + " has no record type");
    }
  }
  if (!header || !footer) fail(ErrorKind::ParseError, "trace needs a header and a footer");
  return t;
}

}  // namespace cremona
