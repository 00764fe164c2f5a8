#include "fuzz.hpp"

#include <chrono>

#include "cremona/prime_field.hpp"
#include "cremona/quadlib.hpp"
#include "cremona/rewriter.hpp"
#include "cremona/upoly.hpp"

namespace cremona::cli {

namespace {

ProjLinearMap random_matrix(std::mt19937_64& rng, bool fix_p1) {
  std::uniform_int_distribution<int> d(-3, 3);
  while (true) {
    std::array<Rational, 9> m;
    for (auto& v : m) v = d(rng);
    if (fix_p1) m[3] = m[6] = 0;
    if (!det3(m).is_zero()) return ProjLinearMap(m);
  }
}

JonqElement random_quadratic_j(std::mt19937_64& rng) {
  const auto core = static_cast<QuadCore>(std::uniform_int_distribution<int>(0, 2)(rng));
  return JonqElement::from_linear(random_matrix(rng, true)) * core_jonq(core) *
         JonqElement::from_linear(random_matrix(rng, true));
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Word random_letter_word(std::mt19937_64& rng, int length) {
  std::uniform_int_distribution<int> pick(0, 5);
  Word w;
  for (int i = 0; i < length; ++i) {
    const bool coin = rng() % 2;
    switch (pick(rng)) {
      case 0: w.push_back(Letter::a(random_matrix(rng, false))); break;
      case 1: w.push_back(Letter::j(random_quadratic_j(rng))); break;
      case 2: w.push_back(Letter::j(named::sigma_j())); break;
      case 3: w.push_back(Letter::j(coin ? named::nu1_j() : named::nu2_j())); break;
      case 4: w.push_back(Letter::a(named::tau())); break;
      default: w.push_back(Letter::a(coin ? named::rho1() : named::rho2())); break;
    }
  }
  return w;
}

Word free_identity_word(std::mt19937_64& rng, int length) {
  Word g = random_letter_word(rng, length);
  const Word gi = invert_word(g);
  g.insert(g.end(), gi.begin(), gi.end());
  return g;
}

Word conjugated_relator(std::mt19937_64& rng, int length) {
  const Letter s = Letter::j(named::sigma_j()), t = Letter::a(named::tau()), r1 = Letter::a(named::rho1());
  Word rel;
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: rel = {s, t, s, t}; break;
    case 1: rel = {t, Letter::j(named::nu1_j()), t, Letter::j(named::nu2_j())}; break;
    default: rel = {r1, s, r1, s, r1, Letter::j(named::nu1_j())}; break;
  }
  Word g = random_letter_word(rng, length);
  const Word gi = invert_word(g);
  g.insert(g.end(), rel.begin(), rel.end());
  g.insert(g.end(), gi.begin(), gi.end());
  return g;
}

FuzzReport fuzz_rewriter(const FuzzOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(opt.seed);
  FuzzReport rep;
  RewriteOptions ro;
  ro.budget = opt.budget;
  for (int i = 0; i < opt.count; ++i) {
    const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(opt.length, 1)));
    const Word w = i % 2 == 0 ? free_identity_word(rng, len) : conjugated_relator(rng, len);
    ++rep.runs;
    try {
      const RewriteResult r = reduce_identity(w, ro);
      const Verdict v = verify_trace(r.trace);
      if (!v.ok) {
        rep.failures.push_back({i, word_str(w), "move " + std::to_string(v.failing_move.value_or(0)) + ": " + v.reason});
        continue;
      }
      rep.moves += r.trace.moves.size();
      rep.elementary += r.elementary_moves;
      rep.max_elementary = std::max(rep.max_elementary, r.elementary_moves);
      for (const auto& c : r.cases) {
        if (c.kind == MoveKind::CaseARewrite) ++rep.case_a;
        else if (c.side == Side::Left) ++rep.case_b_left;
        else ++rep.case_b_right;
      }
    } catch (const Error& e) {
      rep.failures.push_back({i, word_str(w), e.what()});
    }
  }
  rep.seconds = since(t0);
  return rep;
}

FuzzReport fuzz_prime_field(const FuzzOptions& opt) {
  using P = UPoly<PrimeField>;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(opt.seed);
  const std::uint64_t p = opt.prime;
  auto elem = [&] { return PrimeField(static_cast<long>(rng() % p), p); };
  auto poly = [&](int deg) {
    std::vector<PrimeField> c;
    for (int i = 0; i <= deg; ++i) c.push_back(elem());
    return P(std::move(c));
  };
  FuzzReport rep;
  auto check = [&](bool ok, int i, const std::string& what) {
    ++rep.checks;
    if (!ok) rep.failures.push_back({i, "", what});
  };
  for (int i = 0; i < opt.count; ++i) {
    ++rep.runs;
    const PrimeField x = elem();
    if (!x.is_zero()) check(x * x.inverse() == PrimeField(1, p), i, "x * x^-1 != 1");
    const PrimeField y = elem(), z = elem();
    check(x * (y + z) == x * y + x * z, i, "distributivity fails");
    const int span = 1 + std::max(opt.length, 1);
    const P a = poly(static_cast<int>(rng() % span)), b = poly(1 + static_cast<int>(rng() % span)),
            c = poly(1 + static_cast<int>(rng() % span));
    if (b.is_zero() || c.is_constant()) continue;
    const auto [q, r] = P::divmod(a, b);
    check(q * b + r == a && r.degree() < b.degree(), i, "division identity fails");
    check((a * b) / b == a, i, "(a b) / b != a");
    const P g = gcd(a * c, b * c);
    check(g == (gcd(a, b) * c).monic(), i, "gcd(ac, bc) != gcd(a, b) c");
    check(resultant(a * c, b * c).is_zero(), i, "resultant with a common factor is nonzero");
    const PrimeField at = elem();
    check((a * b)(at) == a(at) * b(at), i, "evaluation is not multiplicative");
  }
  rep.seconds = since(t0);
  return rep;
}

nlohmann::json to_json(const FuzzReport& r) {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : r.failures) fails.push_back({{"index", f.index}, {"word", f.word}, {"reason", f.reason}});
  return {{"runs", r.runs},
          {"moves", r.moves},
          {"elementary_moves", r.elementary},
          {"max_elementary_moves", r.max_elementary},
          {"case_a", r.case_a},
          {"case_b_left", r.case_b_left},
          {"case_b_right", r.case_b_right},
          {"kernel_checks", r.checks},
          {"failures", fails},
          {"seconds", r.seconds}};
}

}  // namespace cremona::cli
