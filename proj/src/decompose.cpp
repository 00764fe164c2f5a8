#include "cremona/decompose.hpp"

#include <algorithm>

namespace cremona {

namespace {

struct Pick {
  std::vector<std::size_t> idx;
  QuadraticJMap theta;
  ProjLinearMap c;
};

// theta o c has base points exactly the three chosen ones, or nothing.
std::optional<Pick> admissible(const std::vector<std::pair<BubblePoint, int>>& pts, std::size_t i, std::size_t j,
                               std::size_t k) {
  std::vector<std::size_t> idx{i, j, k};
  std::vector<std::size_t> proper, near;
  for (auto t : idx) (pts[t].first.is_proper() ? proper : near).push_back(t);
  if (proper.size() < 2 || near.size() > 1) return std::nullopt;
  std::size_t q0 = proper[0], q1 = proper[1], q2 = near.empty() ? proper[2] : near[0];
  if (!near.empty()) {
    const BubblePoint& t = pts[q2].first;
    if (t.level() != 1) return std::nullopt;
    const ProjPoint& root = t.root();
    if (!(root == pts[q0].first.root()) && !(root == pts[q1].first.root())) return std::nullopt;
  }
  const ProjPoint p1 = ProjPoint::p1();
  const ProjPoint& a = pts[q0].first.root();
  const ProjLinearMap c = a == p1 ? ProjLinearMap::identity() : swap_map(p1, a);
  try {
    QuadraticJMap theta = quadratic_j_map(c(pts[q1].first.root()), transport(c, pts[q2].first));
    return Pick{{q0, q1, q2}, std::move(theta), c};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateConfiguration) throw;
    return std::nullopt;
  }
}

std::string dump(const MultiplicityMap& bp) { return to_json(bp).dump(); }

std::array<Rational, 3> cross(const std::array<Rational, 3>& u, const std::array<Rational, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

std::array<Rational, 3> coords(const ProjPoint& p) { return {p[0], p[1], p[2]}; }

// g sends lines through p1 to lines; returns the common point of the image
// lines Y = lambda Z, sampled at points off the base locus.
std::optional<ProjPoint> image_pencil_centre(const CremonaMap& g) {
  std::vector<std::array<Rational, 3>> lines;
  for (int lambda = 1; lambda <= 12 && lines.size() < 2; ++lambda) {
    std::vector<ProjPoint> img;
    for (int x = 2; x <= 40 && img.size() < 2; ++x) {
      try {
        const ProjPoint q = g(ProjPoint(x, lambda, 1));
        if (img.empty() || !(img[0] == q)) img.push_back(q);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BasePointEvaluation) throw;
      }
    }
    if (img.size() < 2) continue;
    const auto l = cross(coords(img[0]), coords(img[1]));
    if (lines.empty() || !cross(lines[0], l)[0].is_zero() || !cross(lines[0], l)[1].is_zero() ||
        !cross(lines[0], l)[2].is_zero())
      lines.push_back(l);
  }
  if (lines.size() < 2) return std::nullopt;
  return ProjPoint(cross(lines[0], lines[1]));
}

// f = a o g o c with g in J, when f has a proper base point of multiplicity d - 1.
struct JonqPick {
  BubblePoint centre;
  ProjLinearMap a, c;
  JonqElement g;
};

std::optional<JonqPick> jonquieres_split(const CremonaMap& f, const std::vector<std::pair<BubblePoint, int>>& pts) {
  const ProjPoint p1 = ProjPoint::p1();
  for (const auto& [q, m] : pts) {
    if (!q.is_proper() || m != f.degree() - 1) continue;
    const ProjLinearMap c = q.root() == p1 ? ProjLinearMap::identity() : swap_map(p1, q.root());
    const CremonaMap g = f * CremonaMap::from_linear(c.inverse());
    const auto centre = image_pencil_centre(g);
    if (!centre) continue;
    const ProjLinearMap a = *centre == p1 ? ProjLinearMap::identity() : swap_map(p1, *centre);
    const CremonaMap rest = CremonaMap::from_linear(a.inverse()) * g;
    if (!is_in_J(rest)) continue;
    return JonqPick{q, a, c, cremona_to_jonq(rest)};
  }
  return std::nullopt;
}

}  // namespace

DecompositionResult decompose(const CremonaMap& f) {
  DecompositionResult res;
  CremonaMap cur = f;
  Word tail;  // letters applied first, in written order
  while (cur.degree() > 1) {
    const int d = cur.degree();
    const MultiplicityMap bp = base_points(cur);
    std::vector<std::pair<BubblePoint, int>> pts(bp.begin(), bp.end());
    std::stable_sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
      if (x.second != y.second) return x.second > y.second;
      if (x.first.level() != y.first.level()) return x.first.level() < y.first.level();
      return x.first.str() < y.first.str();
    });
    std::optional<Pick> pick;
    for (std::size_t i = 0; i < pts.size() && !pick; ++i)
      for (std::size_t j = i + 1; j < pts.size() && !pick; ++j)
        for (std::size_t k = j + 1; k < pts.size() && !pick; ++k) {
          if (2 * d - pts[i].second - pts[j].second - pts[k].second >= d) continue;
          pick = admissible(pts, i, j, k);
        }
    if (!pick) {
      // No quadratic step applies (towers of infinitely near points); finish
      // with a single de Jonquieres letter if the map has one.
      const auto jp = jonquieres_split(cur, pts);
      if (!jp) fail(ErrorKind::DecompositionStuck, "degree " + std::to_string(d) + ", base points " + dump(bp));
      res.steps.push_back({{jp->centre}, {d - 1}, d, 1});
      Word part{Letter::j(jp->g)};
      if (!jp->c.is_identity()) part.push_back(Letter::a(jp->c));
      tail.insert(tail.begin(), part.begin(), part.end());
      cur = CremonaMap::from_linear(jp->a);
      break;
    }

    // cur = (cur o c^{-1} o theta^{-1}) o theta o c
    const CremonaMap next = cur * CremonaMap::from_linear(pick->c.inverse()) * pick->theta.map.inverse().to_cremona();
    DecompositionStep step;
    for (auto t : pick->idx) {
      step.points.push_back(pts[t].first);
      step.multiplicities.push_back(pts[t].second);
    }
    step.degree_before = d;
    step.degree_after = next.degree();
    const int expect = quadratic_pushforward_degree(d, step.multiplicities[0], step.multiplicities[1],
                                                    step.multiplicities[2]);
    if (step.degree_after != expect || step.degree_after >= d)
      fail(ErrorKind::ProofGapDetected, "quadratic step gave degree " + std::to_string(step.degree_after) +
                                            ", expected " + std::to_string(expect));
    res.steps.push_back(std::move(step));
    Word part{Letter::j(pick->theta.map)};
    if (!pick->c.is_identity()) part.push_back(Letter::a(pick->c));
    tail.insert(tail.begin(), part.begin(), part.end());
    cur = next;
  }
  const ProjLinearMap residue = cur.to_linear();
  if (!residue.is_identity() || tail.empty()) res.word.push_back(Letter::a(residue));
  res.word.insert(res.word.end(), tail.begin(), tail.end());
  if (!(eval_word(res.word) == f)) fail(ErrorKind::ProofGapDetected, "decomposition does not evaluate to the input");
  return res;
}

nlohmann::json to_json(const DecompositionResult& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.steps) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : s.points) pts.push_back(p.str());
    steps.push_back({{"points", pts},
                     {"multiplicities", s.multiplicities},
                     {"degree_before", s.degree_before},
                     {"degree_after", s.degree_after}});
  }
  return {{"word", to_json(r.word)}, {"steps", steps}};
}

}  // namespace cremona
