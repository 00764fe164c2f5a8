#include "cremona/mpoly.hpp"

#include <cctype>
#include <optional>
#include <random>

#include "cremona/modular.hpp"

namespace cremona {

RecPoly to_recursive(const Poly2& p) {
  RecPoly out(std::max(p.degree_in(1) + 1, 0));
  for (const auto& [e, c] : p.terms()) out[e[1]] += QPoly::monomial(c, e[0]);
  return out;
}

Poly2 from_recursive(const RecPoly& p) {
  Poly2 out;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const auto& cs = p[j].coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i)
      out += Poly2::monomial(cs[i], {static_cast<int>(i), static_cast<int>(j)});
  }
  return out;
}

namespace {

QPoly content(const RecPoly& p) {
  QPoly g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

RecPoly divide_coeffs(const RecPoly& p, const QPoly& d) {
  RecPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c / d);
  return out;
}

// Make the lex-leading coefficient 1 (over Q this is the only freedom left).
Poly2 normalize_lead(const Poly2& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.leading_term().second.inverse());
}

int x_degree(const RecPoly& p) {
  int d = 0;
  for (const auto& c : p) d = std::max(d, c.degree());
  return d;
}

bool divides(const Poly2& d, const Poly2& a) {
  try {
    (void)exact_div(a, d);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Values at xs of a polynomial of degree < xs.size(), to coefficients.
modp::Poly interpolate(const std::vector<std::uint64_t>& xs, std::vector<std::uint64_t> ys, std::uint64_t p) {
  const std::size_t n = xs.size();
  // Newton divided differences in place.
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      std::uint64_t num = (ys[i] + p - ys[i - 1]) % p;
      std::uint64_t den = (xs[i] + p - xs[i - j]) % p;
      ys[i] = modp::mul(num, modp::inv(den, p), p);
    }
  modp::Poly out(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    // out = out * (x - xs[k]) + ys[k]
    for (std::size_t i = n - 1; i > 0; --i) out[i] = (out[i - 1] + p - modp::mul(out[i], xs[k], p)) % p;
    out[0] = (p - modp::mul(out[0], xs[k], p) + ys[k]) % p;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::optional<std::vector<modp::Poly>> reduce_rec(const RecPoly& a, std::uint64_t p) {
  std::vector<modp::Poly> out;
  for (const auto& c : a) {
    auto r = modp::reduce(c, p);
    if (!r) return std::nullopt;
    out.push_back(std::move(*r));
  }
  return out;
}

// Gcd of two polynomials that are primitive in y with positive y-degree.
// Images mod p at several x are scaled by gamma = gcd of leading coefficients
// so that they interpolate to gamma/lc(g) * g, which is then lifted over Q.
Poly2 primitive_gcd(const RecPoly& A, const RecPoly& B) {
  const QPoly gamma = gcd(A.back(), B.back());
  const int npts = gamma.degree() + std::min(x_degree(A), x_degree(B)) + 1;
  int best = static_cast<int>(std::min(A.size(), B.size()));
  mpz_class modulus;
  std::vector<std::vector<mpz_class>> crt;
  std::optional<RecPoly> previous;
  for (std::size_t pi = 0;; ++pi) {
    const std::uint64_t p = modp::prime(pi);
    auto ap = reduce_rec(A, p), bp = reduce_rec(B, p);
    auto gp = modp::reduce(gamma, p);
    if (!ap || !bp || !gp) continue;
    std::vector<std::uint64_t> xs;
    std::vector<modp::Poly> images;
    int dy = best;
    // Fresh points per prime so an unlucky point cannot recur forever.
    std::mt19937_64 rng(pi);
    while (static_cast<int>(xs.size()) < npts) {
      std::uint64_t x = rng() % (p - 1) + 1;
      if (std::find(xs.begin(), xs.end(), x) != xs.end()) continue;
      if (modp::eval(ap->back(), x, p) == 0 || modp::eval(bp->back(), x, p) == 0) continue;
      modp::Poly ay, by;
      for (const auto& c : *ap) ay.push_back(modp::eval(c, x, p));
      for (const auto& c : *bp) by.push_back(modp::eval(c, x, p));
      modp::Poly g = modp::gcd(ay, by, p);
      int d = static_cast<int>(g.size()) - 1;
      if (d == 0) return Poly2(1);
      if (d > dy) continue;
      if (d < dy) {
        dy = d;
        xs.clear();
        images.clear();
      }
      std::uint64_t s = modp::eval(*gp, x, p);
      for (auto& c : g) c = modp::mul(c, s, p);
      xs.push_back(x);
      images.push_back(std::move(g));
    }
    if (dy > best) continue;
    mpz_class pz(static_cast<unsigned long>(p));
    std::vector<std::vector<mpz_class>> img(dy + 1, std::vector<mpz_class>(npts));
    for (int j = 0; j <= dy; ++j) {
      std::vector<std::uint64_t> ys;
      for (const auto& g : images) ys.push_back(g[j]);
      modp::Poly c = interpolate(xs, ys, p);
      for (std::size_t i = 0; i < c.size(); ++i) img[j][i] = static_cast<unsigned long>(c[i]);
    }
    if (dy < best || crt.empty()) {
      best = dy;
      crt = std::move(img);
      modulus = pz;
      previous.reset();
    } else {
      mpz_class minv;
      mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
      for (int j = 0; j <= dy; ++j)
        for (int i = 0; i < npts; ++i) {
          mpz_class t = (img[j][i] - crt[j][i]) * minv;
          mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
          crt[j][i] += modulus * t;
        }
      modulus *= pz;
    }
    RecPoly H;
    bool ok = true;
    for (int j = 0; j <= dy && ok; ++j) {
      std::vector<Rational> cs;
      for (int i = 0; i < npts && ok; ++i) {
        auto q = modp::rational_reconstruct(crt[j][i], modulus);
        if (!q) ok = false;
        else cs.push_back(*q);
      }
      H.emplace_back(std::move(cs));
    }
    if (!ok) continue;
    // Only verify once the lift has stabilised across two primes.
    if (!previous || *previous != H) {
      previous = H;
      continue;
    }
    Poly2 g = from_recursive(divide_coeffs(H, content(H)));
    if (divides(g, from_recursive(A)) && divides(g, from_recursive(B))) return g;
  }
}

}  // namespace

Poly2 gcd(const Poly2& a, const Poly2& b) {
  if (a.is_zero()) return normalize_lead(b);
  if (b.is_zero()) return normalize_lead(a);
  RecPoly A = to_recursive(a), B = to_recursive(b);
  QPoly ca = content(A), cb = content(B);
  QPoly c = gcd(ca, cb);
  A = divide_coeffs(A, ca);
  B = divide_coeffs(B, cb);
  Poly2 g = from_recursive(RecPoly{c});
  if (A.size() > 1 && B.size() > 1) g *= primitive_gcd(A, B);
  return normalize_lead(g);
}

Poly2 dehomogenize(const HomPoly& p) {
  Poly2 out;
  for (const auto& [e, c] : p.terms()) out += Poly2::monomial(c, {e[0], e[1]});
  return out;
}

HomPoly homogenize(const Poly2& p, int d) {
  HomPoly out;
  for (const auto& [e, c] : p.terms()) {
    int z = d - e[0] - e[1];
    if (z < 0) fail(ErrorKind::DegenerateConfiguration, "homogenize: degree too small");
    out += HomPoly::monomial(c, {e[0], e[1], z});
  }
  return out;
}

namespace {

int z_valuation(const HomPoly& p) {
  int v = -1;
  for (const auto& [e, c] : p.terms()) v = v < 0 ? e[2] : std::min(v, e[2]);
  return v;
}

}  // namespace

HomPoly gcd(const HomPoly& a, const HomPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  auto normalize = [](const HomPoly& p) { return p.scaled(p.leading_term().second.inverse()); };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  int za = z_valuation(a), zb = z_valuation(b);
  Poly2 g = gcd(dehomogenize(a), dehomogenize(b));
  HomPoly h = homogenize(g, g.degree());
  h *= HomPoly::monomial(Rational(1), {0, 0, std::min(za, zb)});
  return normalize(h);
}

QPoly resultant_y(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RecPoly A = to_recursive(a), B = to_recursive(b);
  const int da = static_cast<int>(A.size()) - 1, db = static_cast<int>(B.size()) - 1;
  if (da == 0) return A[0].pow(db);
  if (db == 0) return B[0].pow(da);
  const int bound = db * a.degree_in(0) + da * b.degree_in(0);
  std::vector<Rational> xs, ys;
  for (long t = 0; static_cast<int>(xs.size()) <= bound; t = t <= 0 ? 1 - t : -t) {
    Rational at(t);
    if (A.back()(at).is_zero() || B.back()(at).is_zero()) continue;
    std::vector<Rational> ua, ub;
    for (const auto& c : A) ua.push_back(c(at));
    for (const auto& c : B) ub.push_back(c(at));
    xs.push_back(at);
    ys.push_back(resultant(QPoly(ua), QPoly(ub)));
  }
  // Newton divided differences, then expand.
  const std::size_t n = xs.size();
  std::vector<Rational> coef = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  QPoly out(coef[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) out = out * QPoly{-xs[i], Rational(1)} + QPoly(coef[i]);
  return out;
}

namespace {

template <std::size_t N>
class Parser {
 public:
  Parser(std::string_view text, const std::array<char, N>& names) : names_(names) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  MPoly<N> run() {
    if (s_.empty()) error("empty polynomial");
    MPoly<N> p = expr();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& why) const {
    fail(ErrorKind::ParseError, why + " in polynomial '" + s_ + "'");
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  MPoly<N> expr() {
    MPoly<N> acc = term();
    while (peek('+') || peek('-')) {
      bool minus = s_[pos_++] == '-';
      MPoly<N> t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }
  MPoly<N> term() {
    MPoly<N> acc = power();
    while (peek('*')) {
      ++pos_;
      acc = acc * power();
    }
    return acc;
  }
  MPoly<N> power() {
    MPoly<N> base = unary();
    if (peek('^')) {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("missing exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }
  MPoly<N> unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return primary();
  }
  MPoly<N> primary() {
    if (pos_ >= s_.size()) error("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly<N> p = expr();
      if (!peek(')')) error("missing ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (peek('/') && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      return MPoly<N>(Rational::parse(s_.substr(start, pos_ - start)));
    }
    for (std::size_t i = 0; i < N; ++i)
      if (c == names_[i]) {
        ++pos_;
        return MPoly<N>::var(i);
      }
    error("unknown symbol '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
  std::array<char, N> names_;
};

}  // namespace

HomPoly parse_hompoly(std::string_view text) { return Parser<3>(text, {'X', 'Y', 'Z'}).run(); }

Poly2 parse_poly2(std::string_view text, const std::array<char, 2>& names) { return Parser<2>(text, names).run(); }

}  // namespace cremona
