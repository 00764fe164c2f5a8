#include "cremona/quadlib.hpp"

namespace cremona {

namespace {

[[noreturn]] void degenerate(const std::string& why) { fail(ErrorKind::DegenerateConfiguration, why); }

JonqElement J(const ProjLinearMap& m) { return JonqElement::from_linear(m); }

Word core_letters(QuadCore c) {
  switch (c) {
    case QuadCore::Sigma:
      return {Letter::j(named::sigma_j())};
    case QuadCore::Nu1:
      return nu_expand(1);
    case QuadCore::Nu2:
      return nu_expand(2);
  }
  return {};
}

QuadCore swapped(QuadCore c) {
  return c == QuadCore::Nu1 ? QuadCore::Nu2 : c == QuadCore::Nu2 ? QuadCore::Nu1 : c;
}

}  // namespace

const JonqElement& core_jonq(QuadCore c) {
  switch (c) {
    case QuadCore::Sigma:
      return named::sigma_j();
    case QuadCore::Nu1:
      return named::nu1_j();
    case QuadCore::Nu2:
      return named::nu2_j();
  }
  return named::sigma_j();
}

std::string to_string(QuadCore c) { return c == QuadCore::Sigma ? "sigma" : c == QuadCore::Nu1 ? "nu1" : "nu2"; }

QuadraticJMap quadratic_j_map(const ProjPoint& second, const BubblePoint& third) {
  const ProjPoint p1 = ProjPoint::p1();
  if (second == p1) degenerate("second point equals p1");
  ProjPoint w = p1;
  QuadCore core = QuadCore::Sigma;
  if (third.is_proper()) {
    w = third.root();
    if (w == p1 || w == second) degenerate("third point repeats " + w.str());
    if (collinear(p1, second, w)) degenerate(p1.str() + ", " + second.str() + ", " + w.str() + " are collinear");
  } else if (third.level() == 1) {
    if (third.root() == p1) core = QuadCore::Nu1;
    else if (third.root() == second) core = QuadCore::Nu2;
    else degenerate(third.str() + " is not over p1 or " + second.str());
    w = tangent_point(third);
    if (collinear(p1, second, w)) degenerate(third.str() + " points along the line through p1 and " + second.str());
  } else {
    degenerate(third.str() + " lies beyond the first neighbourhood");
  }
  const std::array<ProjPoint, 3> three{p1, second, w};
  const std::array<ProjPoint, 4> src{p1, second, w, complete_frame(three)};
  const std::array<ProjPoint, 4> dst{p1, ProjPoint::p2(), ProjPoint::p3(), ProjPoint(1, 1, 1)};
  const ProjLinearMap c = linear_map_through(src, dst);
  const ProjLinearMap ci = c.inverse();
  return {J(ci) * core_jonq(core) * J(c), second, third, ci, core, c};
}

QuadraticJMap quadratic_from_jonq(const JonqElement& theta) {
  const CremonaMap f = theta.to_cremona();
  if (f.degree() != 2) fail(ErrorKind::FactorizationFailed, "degree " + std::to_string(f.degree()) + ", not 2");
  const MultiplicityMap bp = base_points(f);
  const BubblePoint p1(ProjPoint::p1());
  if (bp.size() != 3 || !bp.contains(p1)) fail(ErrorKind::FactorizationFailed, "p1 is not a base point");
  std::vector<BubblePoint> others;
  for (auto it = bp.rbegin(); it != bp.rend(); ++it)
    if (!(it->first == p1)) others.push_back(it->first);
  for (int swap = 0; swap < 2; ++swap) {
    const BubblePoint& s = others[swap];
    const BubblePoint& t = others[1 - swap];
    if (!s.is_proper()) continue;
    QuadraticJMap q = [&]() -> QuadraticJMap {
      try {
        return quadratic_j_map(s.root(), t);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateConfiguration) throw;
        return {JonqElement::identity(), s.root(), t, ProjLinearMap::identity(), QuadCore::Sigma,
                ProjLinearMap::identity()};
      }
    }();
    if (q.map.is_identity()) continue;
    // theta = a1 * core * a2 with a2 = q.a2; the residue must be linear.
    const JonqElement residue = theta * J(q.a2).inverse() * core_jonq(q.core);
    if (!residue.is_linear()) continue;
    return {theta, s.root(), t, residue.to_linear(), q.core, q.a2};
  }
  fail(ErrorKind::FactorizationFailed, "no assignment of the base points gives a linear residue");
}

QuadFactors factor_quadratic(const QuadraticJMap& theta) {
  if (!theta.a1.fixes_p1() || !theta.a2.fixes_p1())
    fail(ErrorKind::FactorizationFailed, "linear factors move p1");
  if (!(J(theta.a1) * core_jonq(theta.core) * J(theta.a2) == theta.map))
    fail(ErrorKind::FactorizationFailed, "a1 * core * a2 differs from " + theta.map.str());
  return {theta.a1, theta.core, theta.a2};
}

Word nu_expand(int i) {
  if (i != 1 && i != 2) fail(ErrorKind::ParseError, "nu index must be 1 or 2");
  const Letter r = Letter::j(i == 1 ? named::rho1_j() : named::rho2_j());
  const Letter s = Letter::j(named::sigma_j());
  return {r, s, r, s, r};
}

Conjugation lemma1_conjugate(const QuadraticJMap& theta, const ProjLinearMap& nu) {
  const ProjPoint& s = theta.second;
  const ProjPoint p1 = ProjPoint::p1();
  if (!(nu(p1) == s) || !(nu(s) == p1)) degenerate("nu does not exchange p1 and " + s.str());
  const auto [a1, core, a2] = factor_quadratic(theta);
  if (!(a2(s) == ProjPoint::p2()) || !(a1(ProjPoint::p2()) == s))
    degenerate("theta does not preserve the pencil through " + s.str());
  const ProjLinearMap& tau = named::tau();
  const ProjLinearMap a1i = a1.inverse(), a2i = a2.inverse();
  // nu theta^{-1} = nu a2^{-1} core a1^{-1} = X tau core a1^{-1} = X core' tau a1^{-1} = X core' Y nu
  const ProjLinearMap X = nu * a2i * tau;
  const ProjLinearMap Y = tau * a1i * nu.inverse();

  MoveRecorder b({Letter::a(nu), Letter::j(theta.map.inverse())});
  Word split;
  if (!a2i.is_identity()) split.push_back(Letter::j(J(a2i)));
  const Word pieces = core_letters(core);
  split.insert(split.end(), pieces.begin(), pieces.end());
  if (!a1i.is_identity()) split.push_back(Letter::j(J(a1i)));
  if (!(split == Word{b.word()[1]})) b.emit(MoveKind::MergeJ, 1, 1, split, {{"rule", "theta^-1 = a2^-1 core a1^-1"}});

  // nu (or nu a2^{-1}) becomes X tau.
  Word xt;
  if (!X.is_identity()) xt.push_back(Letter::a(X));
  xt.push_back(Letter::a(tau));
  if (!a2i.is_identity()) {
    b.shift(1);
    b.emit(MoveKind::MergeA, 0, 2, xt, {{"rule", "nu a2^-1 = X tau"}});
  } else if (!(xt == Word{b.word()[0]})) {
    b.emit(MoveKind::MergeA, 0, 1, xt, {{"rule", "nu = X tau"}});
  }

  // Push tau to the right through the core letters.
  std::size_t t = X.is_identity() ? 0 : 1;
  for (const auto& piece : pieces) {
    if (piece.jonq() == named::sigma_j()) {
      b.emit(MoveKind::SigmaTauSwap, t, 2, {Letter::j(named::sigma_j()), Letter::a(tau)}, {{"rule", "tau sigma = sigma tau"}});
    } else {
      const ProjLinearMap rho = piece.jonq().to_linear();
      const ProjLinearMap other = tau * rho * tau;
      b.shift(t + 1);
      b.emit(MoveKind::MergeA, t, 2, {Letter::a(other), Letter::a(tau)}, {{"rule", "tau rho_i = rho_j tau"}});
      b.shift(t);
    }
    ++t;
  }

  // tau (or tau a1^{-1}) becomes Y nu.
  Word yn;
  if (!Y.is_identity()) yn.push_back(Letter::a(Y));
  yn.push_back(Letter::a(nu));
  if (!a1i.is_identity()) {
    b.shift(t + 1);
    b.emit(MoveKind::MergeA, t, 2, yn, {{"rule", "tau a1^-1 = Y nu"}});
  } else if (!(yn == Word{b.word()[t]})) {
    b.emit(MoveKind::MergeA, t, 1, yn, {{"rule", "tau = Y nu"}});
  }
  if (!Y.is_identity()) b.shift(t);
  if (!X.is_identity()) b.shift(0);

  const std::size_t run = b.word().size() - 1;
  Word run_letters(b.word().begin(), b.word().begin() + static_cast<std::ptrdiff_t>(run));
  const JonqElement theta_prime_inv = product_j(run_letters);
  if (run > 1) b.emit(MoveKind::MergeJ, 0, run, {Letter::j(theta_prime_inv)}, {{"rule", "X core' Y"}});

  QuadraticJMap tp{theta_prime_inv.inverse(), s, transport(nu, theta.third), Y.inverse(), swapped(core), X.inverse()};
  if (!(tp.map.to_cremona() == CremonaMap::from_linear(nu) * theta.map.to_cremona() * CremonaMap::from_linear(nu.inverse())))
    fail(ErrorKind::ProofGapDetected, "conjugate differs from nu theta nu^-1");
  (void)factor_quadratic(tp);
  return {tp, b.trace()};
}

}  // namespace cremona
