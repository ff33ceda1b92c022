#include "orbitkit/separation.hpp"

#include <algorithm>
#include <cmath>

#include "orbitkit/random.hpp"
#include "orbitkit/tensors.hpp"

namespace orbitkit {

template <class S>
std::optional<ElementIndex> same_orbit(const Representation<S>& rep, std::span<const S> x, std::span<const S> y,
                                       double tol) {
  if (x.size() != y.size() || x.size() != rep.dim()) throw Error(ErrorCode::DimensionMismatch, "same_orbit");
  for (ElementIndex g = 0; g < rep.group().order(); ++g) {
    const auto gx = rep.apply(g, x);
    bool equal = true;
    for (std::size_t i = 0; i < gx.size() && equal; ++i) {
      if constexpr (ScalarTraits<S>::exact) {
        (void)tol;
        equal = gx[i] == y[i];
      } else {
        equal = std::abs(gx[i] - y[i]) <= tol;
      }
    }
    if (equal) return g;
  }
  return std::nullopt;
}

template <class S>
SeparationVerdict compare_invariants(const Representation<S>& rep, std::span<const S> x, std::span<const S> y,
                                     std::size_t max_degree, double tol) {
  SeparationVerdict verdict;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    if (!tensor_equal(invariant_tensor(rep, x, d), invariant_tensor(rep, y, d), tol)) break;
    verdict.invariants_agree_to_degree = d;
  }
  verdict.witness_group_element = same_orbit(rep, x, y, tol);
  verdict.same_orbit = verdict.witness_group_element.has_value();
  return verdict;
}

std::pair<Vector<Rational>, Vector<Rational>> cmf_flip_pair(std::size_t n, std::span<const Rational> standard_part,
                                                            const Rational& s0, const Rational& s_minus1) {
  if (standard_part.size() != n) throw Error(ErrorCode::DimensionMismatch, "standard part must have n entries");
  Vector<Rational> x(standard_part.begin(), standard_part.end());
  Vector<Rational> y = x;
  x.push_back(s0);
  y.push_back(-s0);
  if (n % 2 == 0) {
    x.push_back(s_minus1);
    y.push_back(-s_minus1);
  }
  return {std::move(x), std::move(y)};
}

CmfCounterexample dihedral_cmf_counterexample(std::size_t n, std::uint64_t seed) {
  constexpr std::int64_t kBox = 10;
  constexpr std::size_t kMaxResamples = 100;
  if (n < 3) throw Error(ErrorCode::OutOfRange, "counterexample needs n >= 3");
  const auto rep = dihedral_cmf<Rational>(n);
  SeededRng rng(seed);

  CmfCounterexample out;
  out.n = n;
  out.seed = seed;
  for (std::size_t attempt = 0; attempt <= kMaxResamples; ++attempt) {
    // n distinct values drawn from [-kBox, kBox] by a partial shuffle
    std::vector<std::int64_t> pool;
    for (std::int64_t v = -kBox; v <= kBox; ++v) pool.push_back(v);
    Vector<Rational> standard;
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(i),
                                                              static_cast<std::int64_t>(pool.size() - 1)));
      std::swap(pool[i], pool[j]);
      standard.emplace_back(pool[i]);
    }
    const Rational s0(rng.nonzero_int(kBox));
    const Rational sm1(rng.nonzero_int(kBox));
    auto [x, y] = cmf_flip_pair(n, standard, s0, sm1);
    out.verdict = compare_invariants<Rational>(rep, x, y, 3);
    out.x = std::move(x);
    out.y = std::move(y);
    out.resamples = attempt;
    if (!out.verdict.same_orbit) return out;
  }
  throw Error(ErrorCode::DegenerateSample, "every sampled pair lay in a single orbit");
}

template std::optional<ElementIndex> same_orbit<Rational>(const Representation<Rational>&, std::span<const Rational>,
                                                          std::span<const Rational>, double);
template std::optional<ElementIndex> same_orbit<Complex>(const Representation<Complex>&, std::span<const Complex>,
                                                         std::span<const Complex>, double);
template SeparationVerdict compare_invariants<Rational>(const Representation<Rational>&, std::span<const Rational>,
                                                        std::span<const Rational>, std::size_t, double);
template SeparationVerdict compare_invariants<Complex>(const Representation<Complex>&, std::span<const Complex>,
                                                       std::span<const Complex>, std::size_t, double);

}  // namespace orbitkit
