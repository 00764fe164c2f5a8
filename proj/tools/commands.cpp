#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cremona/decompose.hpp"
#include "cremona/prime_field.hpp"
#include "cremona/rewriter.hpp"
#include "expr.hpp"
#include "fuzz.hpp"

namespace cremona::cli {

namespace {

using nlohmann::json;

struct Settings {
  bool json = false;
  std::uint64_t seed = 1;
  std::optional<std::size_t> budget;
  std::string field = "q";
  std::string trace;
  std::string expr;
  int count = 20;
  int length = 4;
};

// 0 for Q.
std::uint64_t parse_field(const std::string& f) {
  if (f == "q" || f == "Q") return 0;
  if (f.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoull(f.substr(3), &used);
      if (used != f.size() - 3) p = 0;
    } catch (const std::exception&) {
      p = 0;
    }
    if (p >= 5 && p < (1ULL << 62) && is_prime(p)) return p;
  }
  fail(ErrorKind::ParseError, "--field expects q or fp:P with P a prime >= 5");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json trace_records(const Trace& t) {
  json recs = json::array();
  std::istringstream in(trace_to_jsonl(t));
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) recs.push_back(json::parse(line));
  return recs;
}

std::string side_name(const CaseRecord& c) {
  if (c.kind == MoveKind::CaseARewrite) return "a";
  return c.side == Side::Left ? "b-left" : "b-right";
}

int cmd_compose(const Settings& s, std::ostream& out) {
  const CremonaMap f = to_map(parse_expr(s.expr));
  if (s.json) out << json{{"map", f.str()}, {"degree", f.degree()}}.dump() << "\n";
  else out << f.str() << "\ndegree " << f.degree() << "\n";
  return 0;
}

int cmd_degree(const Settings& s, std::ostream& out) {
  const CremonaMap f = to_map(parse_expr(s.expr));
  if (s.json) out << json{{"degree", f.degree()}}.dump() << "\n";
  else out << f.degree() << "\n";
  return 0;
}

int cmd_basepoints(const Settings& s, std::ostream& out) {
  const CremonaMap f = to_map(parse_expr(s.expr));
  const MultiplicityMap bp = base_points(f);
  if (s.json) {
    out << json{{"degree", f.degree()}, {"base_points", to_json(bp)}}.dump() << "\n";
    return 0;
  }
  out << "degree " << f.degree() << "\n";
  for (const auto& [p, m] : bp) out << p.str() << "  m=" << m << "\n";
  return 0;
}

int cmd_jmember(const Settings& s, std::ostream& out) {
  const CremonaMap f = to_map(parse_expr(s.expr));
  const bool in = is_in_J(f);
  if (s.json) {
    json j{{"in_J", in}};
    if (in) j["jonq"] = to_json(cremona_to_jonq(f));
    out << j.dump() << "\n";
  } else {
    out << (in ? "yes" : "no") << "\n";
    if (in) out << cremona_to_jonq(f).str() << "\n";
  }
  return 0;
}

int cmd_decompose(const Settings& s, std::ostream& out) {
  const DecompositionResult r = decompose(to_map(parse_expr(s.expr)));
  if (s.json) {
    out << to_json(r).dump() << "\n";
    return 0;
  }
  out << word_str(r.word) << "\n";
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const auto& st = r.steps[i];
    out << "step " << i + 1 << ": degree " << st.degree_before << " -> " << st.degree_after << " removing";
    for (std::size_t t = 0; t < st.points.size(); ++t) out << " " << st.points[t].str() << "(" << st.multiplicities[t] << ")";
    out << "\n";
  }
  return 0;
}

int cmd_rewrite(const Settings& s, std::ostream& out) {
  const Word w = to_letters(parse_expr(s.expr));
  RewriteOptions opt;
  opt.budget = s.budget;
  const RewriteResult r = reduce_identity(w, opt);
  if (!s.trace.empty()) {
    std::ofstream f(s.trace);
    if (!f) fail(ErrorKind::ParseError, "cannot write " + s.trace);
    f << trace_to_jsonl(r.trace);
  }
  if (s.json) {
    json cases = json::array();
    for (const auto& c : r.cases)
      cases.push_back({{"case", side_name(c)}, {"before", to_json(c.before)}, {"after", to_json(c.after)}});
    out << json{{"trace", trace_records(r.trace)},
                {"cases", cases},
                {"elementary_moves", r.elementary_moves},
                {"budget", r.budget}}
               .dump()
        << "\n";
    return 0;
  }
  out << "word: " << word_str(r.trace.initial) << "\n";
  for (std::size_t i = 0; i < r.trace.moves.size(); ++i) {
    const Move& m = r.trace.moves[i];
    out << i << " " << to_string(m.kind) << " at " << m.position << ": " << m.consumed.size() << " letters -> "
        << m.produced.size() << "\n";
  }
  out << "final: " << (r.trace.final_word.empty() ? "(empty)" : word_str(r.trace.final_word)) << "\n";
  out << "cases:";
  for (const auto& c : r.cases) out << " " << side_name(c);
  out << "\nelementary moves " << r.elementary_moves << " of budget " << r.budget << "\n";
  return 0;
}

int cmd_verify(const Settings& s, std::ostream& out) {
  if (s.trace.empty()) fail(ErrorKind::ParseError, "verify needs a trace file");
  const Trace t = trace_from_jsonl(read_file(s.trace));
  const Verdict v = verify_trace(t);
  if (s.json) {
    json j{{"ok", v.ok}, {"moves", t.moves.size()}};
    if (!v.ok) {
      j["failing_move"] = v.failing_move.value_or(0);
      j["reason"] = v.reason;
    }
    out << j.dump() << "\n";
  } else if (v.ok) {
    out << "OK (" << t.moves.size() << " moves)\n";
  } else {
    out << "REJECTED at move " << v.failing_move.value_or(0) << ": " << v.reason << "\n";
  }
  return v.ok ? 0 : 1;
}

int cmd_fuzz(const Settings& s, std::uint64_t prime, std::ostream& out) {
  FuzzOptions opt;
  opt.seed = s.seed;
  opt.count = s.count;
  opt.length = s.length;
  opt.budget = s.budget;
  opt.prime = prime;
  const FuzzReport r = prime ? fuzz_prime_field(opt) : fuzz_rewriter(opt);
  if (s.json) {
    json j = to_json(r);
    j["seed"] = s.seed;
    j["field"] = s.field;
    out << j.dump() << "\n";
  } else {
    out << "seed " << s.seed << ", field " << s.field << ", " << r.runs << " runs, " << r.failures.size()
        << " failures\n";
    if (prime) out << "kernel checks " << r.checks << "\n";
    else
      out << "moves " << r.moves << ", elementary " << r.elementary << " (max " << r.max_elementary << ")\n"
          << "case a " << r.case_a << ", case b left " << r.case_b_left << ", case b right " << r.case_b_right
          << "\n";
    for (const auto& f : r.failures) out << "failure " << f.index << ": " << f.reason << "\n  " << f.word << "\n";
  }
  return r.failures.empty() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plane Cremona maps: composition, base points, decomposition and identity-word rewriting", "cremona"};
  app.require_subcommand(1);
  Settings s;
  auto global = [&](CLI::App* c) {
    c->fallthrough();
    c->add_flag("--json", s.json, "JSON output");
    c->add_option("--seed", s.seed, "random seed")->capture_default_str();
    c->add_option("--budget", s.budget, "elementary move budget for rewriting");
    c->add_option("--field", s.field, "q, or fp:P for the prime field kernel fuzz")->capture_default_str();
    c->add_option("--trace", s.trace, "trace file (JSON lines)");
  };
  global(&app);
  const char* with_expr[][2] = {{"compose", "evaluate an expression to a polynomial triple"},
                                {"degree", "degree of the map"},
                                {"basepoints", "base points with multiplicities"},
                                {"jmember", "membership in the de Jonquieres group"},
                                {"decompose", "factor into linear and de Jonquieres letters"},
                                {"rewrite", "reduce an identity word to the empty word"}};
  for (const auto& [name, help] : with_expr) app.add_subcommand(name, help)->add_option("expr", s.expr)->required();
  auto* verify = app.add_subcommand("verify", "replay a trace file");
  verify->add_option("file", s.trace, "trace file");
  auto* fuzz = app.add_subcommand("fuzz", "random identity words through rewrite and verify");
  fuzz->add_option("--count", s.count, "number of words")->capture_default_str();
  fuzz->add_option("--length", s.length, "maximal length of the random conjugator")->capture_default_str();
  for (auto* c : app.get_subcommands({})) c->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    const std::uint64_t prime = parse_field(s.field);
    if (prime && cmd != "fuzz") fail(ErrorKind::ParseError, "--field fp:P is only used by fuzz");
    if (cmd == "compose") return cmd_compose(s, out);
    if (cmd == "degree") return cmd_degree(s, out);
    if (cmd == "basepoints") return cmd_basepoints(s, out);
    if (cmd == "jmember") return cmd_jmember(s, out);
    if (cmd == "decompose") return cmd_decompose(s, out);
    if (cmd == "rewrite") return cmd_rewrite(s, out);
    if (cmd == "verify") return cmd_verify(s, out);
    return cmd_fuzz(s, prime, out);
  } catch (const Error& e) {
    if (s.json) err << json{{"error", to_string(e.kind())}, {"detail", e.detail()}}.dump() << "\n";
    else err << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError ? 2 : 1;
  }
}

}  // namespace cremona::cli
