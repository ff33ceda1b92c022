#include <algorithm>
#include <cmath>
#include <set>

#include "orbitkit/linalg.hpp"

namespace orbitkit {
namespace {

constexpr std::size_t kEnumerationBits = 40;
constexpr std::size_t kMaxCandidates = 200000;

std::size_t bit_length(const mpz_class& v) { return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2); }

std::vector<mpz_class> positive_divisors(const mpz_class& value) {
  mpz_class v = abs(value);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (mpz_class p = 2; p * p <= v; ++p) {
    unsigned e = 0;
    while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
      v /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  }
  if (v > 1) factors.emplace_back(v, 1);
  std::vector<mpz_class> divisors{1};
  for (const auto& [p, e] : factors) {
    const std::size_t count = divisors.size();
    mpz_class power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  return divisors;
}

// Exact test of P(p/q) = 0 via the homogenized Horner scheme.
bool is_root(const std::vector<mpz_class>& poly, const Rational& candidate) {
  const mpz_class& p = candidate.get_num();
  const mpz_class& q = candidate.get_den();
  const std::size_t deg = poly.size() - 1;
  mpz_class acc = poly[deg];
  mpz_class qpow = 1;
  for (std::size_t i = deg; i-- > 0;) {
    qpow *= q;
    acc = acc * p + poly[i] * qpow;
  }
  return sgn(acc) == 0;
}

mpf_class horner(const std::vector<mpf_class>& poly, const mpf_class& x, mp_bitcnt_t prec) {
  mpf_class acc(poly.back(), prec);
  for (std::size_t i = poly.size() - 1; i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

// Newton refinement of an approximate root at high precision, then rounding
// to the only denominators a rational root can have (divisors of the leading
// coefficient): lambda * a_n must be an integer.
Rational refine_candidate(const std::vector<mpz_class>& poly, double hint) {
  std::size_t max_bits = 0;
  for (const auto& c : poly) max_bits = std::max(max_bits, bit_length(c));
  const mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(std::max<std::size_t>(256, 2 * max_bits + 128));

  std::vector<mpf_class> f, df;
  for (const auto& c : poly) f.emplace_back(c, prec);
  for (std::size_t i = 1; i < poly.size(); ++i) df.emplace_back(mpz_class(poly[i] * static_cast<unsigned long>(i)), prec);

  mpf_class x(hint, prec);
  mpf_class tol(1, prec);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec - 16);
  for (int it = 0; it < 400; ++it) {
    const mpf_class fx = horner(f, x, prec);
    const mpf_class dfx = horner(df, x, prec);
    if (sgn(dfx) == 0) break;
    const mpf_class step = fx / dfx;
    x -= step;
    mpf_class bound = abs(x);
    if (bound < 1) bound = 1;
    if (abs(step) <= tol * bound) break;
  }
  mpf_class scaled(x * mpf_class(poly.back(), prec) + mpf_class(0.5, prec), prec);
  mpf_floor(scaled.get_mpf_t(), scaled.get_mpf_t());
  Rational candidate(mpz_class(scaled), poly.back());
  candidate.canonicalize();
  return candidate;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<mpz_class>& coeffs, const std::vector<double>& hints) {
  std::size_t top = coeffs.size();
  while (top > 0 && sgn(coeffs[top - 1]) == 0) --top;
  if (top == 0) throw Error(ErrorCode::OutOfRange, "rational_roots of the zero polynomial");

  std::set<Rational> roots;
  std::size_t low = 0;
  while (sgn(coeffs[low]) == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  std::vector<mpz_class> poly(coeffs.begin() + static_cast<std::ptrdiff_t>(low),
                              coeffs.begin() + static_cast<std::ptrdiff_t>(top));
  if (poly.size() <= 1) return {roots.begin(), roots.end()};

  mpz_class content = 0;
  for (const auto& c : poly) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  for (auto& c : poly) c /= content;

  const mpz_class& constant = poly.front();
  const mpz_class& leading = poly.back();
  std::set<Rational> candidates;
  std::vector<mpz_class> ps, qs;
  if (bit_length(constant) <= kEnumerationBits && bit_length(leading) <= kEnumerationBits) {
    ps = positive_divisors(constant);
    qs = positive_divisors(leading);
  }
  const bool enumerate = !ps.empty() && (ps.size() * qs.size() <= kMaxCandidates || hints.empty());
  if (enumerate) {
    for (const auto& p : ps) {
      for (const auto& q : qs) {
        Rational r(p, q);
        r.canonicalize();
        candidates.insert(r);
        candidates.insert(-r);
      }
    }
  } else {
    for (double h : hints) {
      if (!std::isfinite(h)) continue;
      Rational r = refine_candidate(poly, h);
      // rational root theorem: numerator divides the constant term
      if (sgn(r) != 0 && mpz_divisible_p(constant.get_mpz_t(), r.get_num_mpz_t())) candidates.insert(r);
    }
  }
  for (const auto& r : candidates) {
    if (is_root(poly, r)) roots.insert(r);
  }
  return {roots.begin(), roots.end()};
}

}  // namespace orbitkit
