#include "cremona/rewriter.hpp"

#include <algorithm>
#include <numeric>

namespace cremona {

using nlohmann::json;

namespace {

[[noreturn]] void gap(const std::string& why) { fail(ErrorKind::ProofGapDetected, why); }

Word slice(const Word& w, const WordLayout::Run& r) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(r.first), w.begin() + static_cast<std::ptrdiff_t>(r.last));
}

CremonaMap run_inverse(const Word& w, const WordLayout::Run& r, Tag t) {
  if (r.empty()) return CremonaMap::identity();
  if (t == Tag::A) return CremonaMap::from_linear(product_a(slice(w, r)).inverse());
  return product_j(slice(w, r)).inverse().to_cremona();
}

int run_degree(const Word& w, const WordLayout::Run& r) {
  return r.empty() ? 1 : product_j(slice(w, r)).degree();
}

RewriteComplexity complexity_from(const Word& w, const WordLayout& L, const std::vector<CremonaMap>& H) {
  RewriteComplexity c;
  for (std::size_t i = 1; i < H.size(); ++i) {
    const int d = H[i].degree();
    if (d >= c.D) {
      c.D = d;
      c.n = i;
    }
  }
  for (std::size_t i = 1; i <= c.n; ++i) c.k += run_degree(w, L.j[i]) - 1;
  return c;
}

// Sorted by decreasing multiplicity, infinitely near points after their parents.
void order_points(std::vector<std::pair<BubblePoint, int>>& pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    if (x.first.level() != y.first.level()) return x.first.level() < y.first.level();
    return x.first.str() < y.first.str();
  });
}

std::vector<std::pair<BubblePoint, int>> others(const MultiplicityMap& bp, const ProjPoint& main, int main_mult,
                                                const CremonaMap& lambda, const std::string& what) {
  std::vector<std::pair<BubblePoint, int>> out;
  const BubblePoint m(main);
  auto it = bp.find(m);
  if (it == bp.end() || it->second != main_mult)
    gap(what + ": " + main.str() + " is not a base point of multiplicity " + std::to_string(main_mult));
  for (const auto& [q, mult] : bp) {
    if (q == m) continue;
    if (mult != 1) gap(what + ": base point " + q.str() + " is not simple");
    out.emplace_back(q, multiplicity_at(lambda, q));
  }
  if (out.size() < 2) gap(what + ": fewer than two simple base points");
  order_points(out);
  return out;
}

int sum_second(const std::vector<std::pair<BubblePoint, int>>& v) {
  return std::accumulate(v.begin(), v.end(), 0, [](int s, const auto& p) { return s + p.second; });
}

json point_json(const BubblePoint& q, int m) { return {{"point", q.str()}, {"m", m}}; }

Move macro(MoveKind kind, std::size_t pos, const MoveRecorder& rec, json just) {
  Move m;
  m.kind = kind;
  m.position = pos;
  m.consumed = rec.trace().initial;
  m.produced = rec.word();
  m.justification = std::move(just);
  m.sub = rec.moves();
  return m;
}

}  // namespace

WordLayout layout(const Word& w) {
  WordLayout L;
  L.a.emplace_back();
  L.j.emplace_back();
  auto run_left = [&](std::size_t end, Tag t) {
    std::size_t b = end;
    while (b > 0 && w[b - 1].tag() == t) --b;
    return WordLayout::Run{b, end};
  };
  std::size_t end = w.size();
  while (true) {
    const auto a = run_left(end, Tag::A);
    L.a.push_back(a);
    end = a.first;
    if (end == 0) break;
    const auto j = run_left(end, Tag::J);
    L.j.push_back(j);
    end = j.first;
    if (end == 0) {
      L.a.push_back({0, 0});
      break;
    }
  }
  return L;
}

std::vector<CremonaMap> prefix_maps(const Word& w) {
  const WordLayout L = layout(w);
  std::vector<CremonaMap> H{CremonaMap::identity()};
  for (std::size_t i = 1; i <= L.r(); ++i)
    H.push_back(H.back() * run_inverse(w, L.a[i], Tag::A) * run_inverse(w, L.j[i], Tag::J));
  return H;
}

std::vector<LinearSystemClass> prefix_systems(const Word& w) {
  std::vector<LinearSystemClass> out;
  for (const auto& h : prefix_maps(w)) out.push_back(system_class(h));
  return out;
}

RewriteComplexity complexity(const Word& w) { return complexity_from(w, layout(w), prefix_maps(w)); }

json to_json(const RewriteComplexity& c) { return {{"D", c.D}, {"n", c.n}, {"k", c.k}}; }

RewriteStep normalize_neighbors(const Word& w) {
  MoveRecorder rec(w);
  auto merge_kind = [](Tag t) { return t == Tag::A ? MoveKind::MergeA : MoveKind::MergeJ; };
  while (true) {
    const Word& c = rec.word();
    bool moved = false;
    for (std::size_t i = 0; i < c.size() && !moved; ++i)
      if (c[i].is_identity()) {
        rec.emit(merge_kind(c[i].tag()), i, 1, {}, {{"rule", "drop identity"}});
        moved = true;
      }
    for (std::size_t i = 0; i + 1 < c.size() && !moved; ++i)
      if (c[i].tag() == c[i + 1].tag()) {
        const Word pair{c[i], c[i + 1]};
        const Letter p = c[i].tag() == Tag::A ? Letter::a(product_a(pair)) : Letter::j(product_j(pair));
        rec.emit(merge_kind(p.tag()), i, 2, p.is_identity() ? Word{} : Word{p}, {{"rule", "product"}});
        moved = true;
      }
    // Linear J-letters first, then A-letters fixing p1, each next to a letter of the other group.
    for (Tag t : {Tag::J, Tag::A}) {
      for (std::size_t i = 0; i < c.size() && !moved; ++i) {
        if (c[i].tag() != t) continue;
        const bool neighbour = (i > 0 && c[i - 1].tag() != t) || (i + 1 < c.size() && c[i + 1].tag() != t);
        if (neighbour && c[i].in_intersection()) {
          rec.shift(i);
          moved = true;
        }
      }
    }
    if (!moved) break;
  }
  return {rec.word(), rec.moves()};
}

CaseContext analyze(const Word& w) {
  const WordLayout L = layout(w);
  for (std::size_t i = 1; i < L.a.size(); ++i)
    if (L.a[i].last - L.a[i].first > 1) gap("analysis needs a reduced word");
  for (std::size_t i = 1; i < L.j.size(); ++i)
    if (L.j[i].last - L.j[i].first != 1) gap("analysis needs a reduced word");
  const std::vector<CremonaMap> H = prefix_maps(w);
  CaseContext ctx;
  ctx.cx = complexity_from(w, L, H);
  const std::size_t n = ctx.cx.n;
  if (ctx.cx.D <= 1) gap("no letter of degree above one");
  if (n + 1 > L.r() || L.a[n + 1].empty()) gap("maximal system at the last J-letter");
  ctx.pos_jn = L.j[n].first;
  ctx.pos_a = L.a[n + 1].first;
  ctx.pos_jn1 = L.j[n + 1].first;
  ctx.d_n = H[n].degree();
  ctx.d_prev = H[n - 1].degree();
  ctx.d_next = H[n + 1].degree();
  ctx.lambda_n = H[n];
  const JonqElement& jn = w[ctx.pos_jn].jonq();
  const JonqElement& jn1 = w[ctx.pos_jn1].jonq();
  const ProjLinearMap& a = w[ctx.pos_a].linear();
  const ProjPoint p1 = ProjPoint::p1();
  if (a(p1) == p1) gap("a_{n+1} fixes p1");
  ctx.l0 = a.inverse()(p1);
  ctx.DL = jn1.degree();
  ctx.DR = jn.degree();
  if (ctx.DL < 2 || ctx.DR < 2) gap("linear J-letter next to the maximal system");

  const MultiplicityMap left_bp = base_points(jn1.to_cremona() * CremonaMap::from_linear(a));
  const MultiplicityMap right_bp = base_points(jn.inverse().to_cremona());
  ctx.left = others(left_bp, ctx.l0, ctx.DL - 1, ctx.lambda_n, "j_{n+1} a_{n+1}");
  ctx.right = others(right_bp, p1, ctx.DR - 1, ctx.lambda_n, "j_n^-1");
  ctx.m_l0 = multiplicity_at(ctx.lambda_n, BubblePoint(ctx.l0));
  ctx.m_r0 = multiplicity_at(ctx.lambda_n, BubblePoint(p1));

  const int next = jonq_degree_formula(ctx.d_n, ctx.DL, ctx.m_l0, sum_second(ctx.left));
  const int prev = jonq_degree_formula(ctx.d_n, ctx.DR, ctx.m_r0, sum_second(ctx.right));
  if (next != ctx.d_next || prev != ctx.d_prev)
    gap("degree formula gives (" + std::to_string(next) + ", " + std::to_string(prev) + "), systems have (" +
        std::to_string(ctx.d_next) + ", " + std::to_string(ctx.d_prev) + ")");
  if (!(ctx.d_next < ctx.d_n) || !(ctx.d_prev <= ctx.d_n)) gap("n is not the last maximal index");
  if (!(ctx.m_l0 + ctx.left[0].second + ctx.left[1].second > ctx.d_n))
    gap("m(l0) + m(l1) + m(l2) > d_n fails");
  if (!(ctx.m_r0 + ctx.right[0].second + ctx.right[1].second >= ctx.d_n))
    gap("m(r0) + m(r1) + m(r2) >= d_n fails");
  return ctx;
}

RewriteStep case_a_step(const Word& w, const CaseContext& ctx) {
  if (ctx.m_l0 < ctx.left[0].second || ctx.m_r0 < ctx.right[0].second) gap("case (a) outside its guard");
  const BubblePoint L0(ctx.l0), R0(ProjPoint::p1());
  // Candidate q among l1, l2, r1, r2: proper, else over r0, else over l0.
  struct Cand {
    BubblePoint q;
    int m;
    int cat;
  };
  std::vector<Cand> cands;
  for (const auto* side : {&ctx.left, &ctx.right})
    for (std::size_t i = 0; i < 2; ++i) {
      const auto& [q, m] = (*side)[i];
      if (q == L0 || q == R0) continue;
      int cat = q.is_proper() ? 0 : q.is_in_first_neighbourhood_of(R0) ? 1 : q.is_in_first_neighbourhood_of(L0) ? 2 : 3;
      if (cat < 3) cands.push_back({q, m, cat});
    }
  if (cands.empty()) gap("no admissible q among l1, l2, r1, r2");
  const Cand best = *std::min_element(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
    if (x.m != y.m) return x.m > y.m;
    if (x.cat != y.cat) return x.cat < y.cat;
    return x.q.str() < y.q.str();
  });
  if (!(ctx.m_l0 + ctx.m_r0 + best.m > ctx.d_n)) gap("m(l0) + m(r0) + m(q) > d_n fails for q = " + best.q.str());
  QuadraticJMap theta = [&] {
    try {
      return quadratic_j_map(ctx.l0, best.q);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateConfiguration) throw;
      gap("l0, r0, q: " + e.detail());
    }
  }();

  const std::size_t pos = ctx.pos_jn1;
  MoveRecorder rec({w[pos], w[pos + 1], w[pos + 2]});
  const ProjLinearMap& a = w[ctx.pos_a].linear();
  const ProjPoint target = a(ProjPoint::p1());
  if (!(target == ctx.l0)) {
    // a_{n+1} -> nu a_{n+1}, j_{n+1} -> j_{n+1} nu^{-1} with nu in A n J sending a_{n+1}(r0) to l0.
    const ProjLinearMap nu = stabilizer_map_sending(target, ctx.l0);
    rec.emit(MoveKind::MergeA, 1, 1, {Letter::a(nu.inverse()), Letter::a(nu * a)}, {{"rule", "split through A n J"}});
    rec.shift(1);
    rec.emit(MoveKind::MergeJ, 0, 2, {Letter::j(rec.word()[0].jonq() * rec.word()[1].jonq())}, {{"rule", "product"}});
  }
  const ProjLinearMap a2 = rec.word()[1].linear();
  const JonqElement& jn = rec.word()[2].jonq();
  rec.emit(MoveKind::MergeJ, 2, 1, {Letter::j(theta.map.inverse()), Letter::j(theta.map * jn)},
           {{"rule", "j_n = theta^-1 (theta j_n)"}});
  const Conjugation conj = lemma1_conjugate(theta, a2);
  rec.emit(MoveKind::Lemma1Macro, 1, 2, conj.cert.final_word,
           {{"theta", theta.map.str()}, {"nu", a2.str()}, {"theta_prime", conj.theta_prime.map.str()}},
           conj.cert.moves);
  rec.emit(MoveKind::MergeJ, 0, 2, {Letter::j(rec.word()[0].jonq() * rec.word()[1].jonq())}, {{"rule", "product"}});

  json just = {{"n", ctx.cx.n},
               {"d_n", ctx.d_n},
               {"l0", point_json(L0, ctx.m_l0)},
               {"r0", point_json(R0, ctx.m_r0)},
               {"q", point_json(best.q, best.m)},
               {"theta", theta.map.str()}};
  Move m = macro(MoveKind::CaseARewrite, pos, rec, just);
  return {apply_move(w, m), {m}};
}

RewriteStep case_b_step(const Word& w, const CaseContext& ctx, Side side) {
  const ProjPoint p1 = ProjPoint::p1();
  if (side == Side::Right) {
    if (!(ctx.right[0].second > ctx.m_r0)) gap("case (b) right outside its guard");
    const BubblePoint& r1 = ctx.right[0].first;
    const BubblePoint& r2 = ctx.right[1].first;
    if (!r1.is_proper()) gap("r1 = " + r1.str() + " is not proper");
    QuadraticJMap theta = [&] {
      try {
        return quadratic_j_map(r1.root(), r2);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateConfiguration) throw;
        gap("r0, r1, r2: " + e.detail());
      }
    }();
    const ProjLinearMap nu = swap_map(p1, r1.root());
    const std::size_t pos = ctx.pos_a;
    MoveRecorder rec({w[pos], w[pos + 1]});
    const ProjLinearMap& a = w[pos].linear();
    const JonqElement& jn = w[pos + 1].jonq();
    rec.emit(MoveKind::MergeJ, 1, 1, {Letter::j(theta.map.inverse()), Letter::j(theta.map * jn)},
             {{"rule", "j_n = theta^-1 (theta j_n)"}});
    rec.emit(MoveKind::MergeA, 0, 1, {Letter::a(a * nu.inverse()), Letter::a(nu)}, {{"rule", "a = (a nu^-1) nu"}});
    const Conjugation conj = lemma1_conjugate(theta, nu);
    rec.emit(MoveKind::Lemma1Macro, 1, 2, conj.cert.final_word,
             {{"theta", theta.map.str()}, {"nu", nu.str()}, {"theta_prime", conj.theta_prime.map.str()}},
             conj.cert.moves);
    json just = {{"side", "right"},
                 {"n", ctx.cx.n},
                 {"d_n", ctx.d_n},
                 {"r0", point_json(BubblePoint(p1), ctx.m_r0)},
                 {"r1", point_json(r1, ctx.right[0].second)},
                 {"r2", point_json(r2, ctx.right[1].second)},
                 {"theta", theta.map.str()}};
    Move m = macro(MoveKind::CaseBRewrite, pos, rec, just);
    return {apply_move(w, m), {m}};
  }

  // Left side, read in the plane of a_{n+1}(Lambda_n) where j_{n+1} has its base points.
  const ProjLinearMap& a = w[ctx.pos_a].linear();
  const JonqElement& jn1 = w[ctx.pos_jn1].jonq();
  const CremonaMap lambda = ctx.lambda_n * CremonaMap::from_linear(a.inverse());
  const auto pts = others(base_points(jn1.to_cremona()), p1, ctx.DL - 1, lambda, "j_{n+1}");
  const int m0 = multiplicity_at(lambda, BubblePoint(p1));
  if (m0 != ctx.m_l0 || pts[0].second != ctx.left[0].second) gap("left base points disagree after moving by a_{n+1}");
  if (!(pts[0].second > m0)) gap("case (b) left outside its guard");
  const BubblePoint& b1 = pts[0].first;
  const BubblePoint& b2 = pts[1].first;
  if (!b1.is_proper()) gap("l1 = " + b1.str() + " is not proper");
  QuadraticJMap theta = [&] {
    try {
      return quadratic_j_map(b1.root(), b2);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateConfiguration) throw;
      gap("l0, l1, l2: " + e.detail());
    }
  }();
  const ProjLinearMap nu = swap_map(p1, b1.root());
  const std::size_t pos = ctx.pos_jn1;
  MoveRecorder rec({w[pos], w[pos + 1]});
  rec.emit(MoveKind::MergeJ, 0, 1, {Letter::j(jn1 * theta.map.inverse()), Letter::j(theta.map)},
           {{"rule", "j_{n+1} = (j_{n+1} theta^-1) theta"}});
  rec.emit(MoveKind::MergeA, 2, 1, {Letter::a(nu.inverse()), Letter::a(nu * a)}, {{"rule", "a = nu^-1 (nu a)"}});
  // nu theta^{-1} = theta'^{-1} nu, read backwards: theta nu^{-1} = nu^{-1} theta'.
  const Trace back = invert_trace(lemma1_conjugate(theta, nu).cert);
  rec.emit(MoveKind::Lemma1Macro, 1, 2, back.final_word,
           {{"theta", theta.map.str()}, {"nu", nu.str()}, {"inverted", true}}, back.moves);
  json just = {{"side", "left"},
               {"n", ctx.cx.n},
               {"d_n", ctx.d_n},
               {"l0", point_json(BubblePoint(ctx.l0), ctx.m_l0)},
               {"l1", point_json(b1, pts[0].second)},
               {"l2", point_json(b2, pts[1].second)},
               {"theta", theta.map.str()}};
  Move m = macro(MoveKind::CaseBRewrite, pos, rec, just);
  return {apply_move(w, m), {m}};
}

std::size_t default_budget(const Word& w) {
  std::size_t s = 0;
  for (const auto& l : w) s += static_cast<std::size_t>(l.degree());
  return std::max<std::size_t>(10 * s * s, 10);
}

RewriteResult reduce_identity(const Word& w, const RewriteOptions& opt) {
  if (!eval_word(w).is_identity()) fail(ErrorKind::NotIdentityInput, "word evaluates to " + eval_word(w).str());
  RewriteResult res;
  res.budget = opt.budget ? *opt.budget : default_budget(w);
  res.trace.initial = w;
  Word cur = w;
  auto push = [&](const Move& m) {
    res.elementary_moves += elementary_count(m);
    if (res.elementary_moves > res.budget)
      fail(ErrorKind::BudgetExceeded, std::to_string(res.elementary_moves) + " elementary moves exceed the budget of " +
                                          std::to_string(res.budget));
    if (opt.check_steps) {
      const Verdict v = check_move(cur, m, false);
      if (!v.ok) gap("emitted move fails its own check: " + v.reason);
    }
    cur = apply_move(cur, m);
    res.trace.moves.push_back(m);
  };
  while (true) {
    for (const auto& m : normalize_neighbors(cur).moves) push(m);
    if (cur.empty()) break;
    const CaseContext ctx = analyze(cur);
    CaseRecord rec;
    rec.before = ctx.cx;
    RewriteStep step;
    if (ctx.right[0].second > ctx.m_r0) {
      rec.kind = MoveKind::CaseBRewrite;
      rec.side = Side::Right;
      step = case_b_step(cur, ctx, Side::Right);
    } else if (ctx.left[0].second > ctx.m_l0) {
      rec.kind = MoveKind::CaseBRewrite;
      rec.side = Side::Left;
      step = case_b_step(cur, ctx, Side::Left);
    } else {
      rec.kind = MoveKind::CaseARewrite;
      step = case_a_step(cur, ctx);
    }
    rec.after = complexity(step.word);
    if (rec.kind == MoveKind::CaseARewrite && !(rec.after < rec.before)) gap("case (a) did not decrease (D, k)");
    if (rec.kind == MoveKind::CaseBRewrite && !(rec.after == rec.before)) gap("case (b) changed (D, k)");
    if (rec.kind == MoveKind::CaseBRewrite && rec.after.n != rec.before.n + (rec.side == Side::Right ? 1 : 0))
      gap("case (b) moved n unexpectedly");
    for (const auto& m : step.moves) push(m);
    res.cases.push_back(rec);
  }
  res.trace.final_word = cur;
  return res;
}

}  // namespace cremona
