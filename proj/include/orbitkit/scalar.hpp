#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <string>
#include <string_view>

namespace orbitkit {

/// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Complex = std::complex<double>;

enum class ScalarKind { Exact, F64 };

std::string_view scalar_kind_name(ScalarKind kind);

/// Builds p/q in lowest terms. Throws on q == 0.
Rational make_rational(long p, long q = 1);

/// Parses "p", "-p" or "p/q". Throws Error(ParseError) on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& v);

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr ScalarKind kind = ScalarKind::Exact;

  static Rational from_int(long v) { return Rational(v); }
  static Rational conj(const Rational& v) { return v; }
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  // Only used for reporting; may lose precision on huge values.
  static double magnitude(const Rational& v) { return std::fabs(v.get_d()); }
  static bool magnitude_less(const Rational& a, const Rational& b) { return abs(a) < abs(b); }
  static bool negligible(const Rational& v, double /*threshold*/) { return sgn(v) == 0; }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr ScalarKind kind = ScalarKind::F64;

  static Complex from_int(long v) { return Complex(static_cast<double>(v), 0.0); }
  static Complex conj(const Complex& v) { return std::conj(v); }
  static bool is_zero(const Complex& v) { return v == Complex(0.0, 0.0); }
  static double magnitude(const Complex& v) { return std::abs(v); }
  static bool magnitude_less(const Complex& a, const Complex& b) { return std::abs(a) < std::abs(b); }
  static bool negligible(const Complex& v, double threshold) { return std::abs(v) <= threshold; }
};

template <class S>
concept FieldScalar = requires { ScalarTraits<S>::exact; };

}  // namespace orbitkit
