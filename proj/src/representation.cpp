#include "orbitkit/representation.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace orbitkit {
namespace {

template <class S>
bool near(const S& a, const S& b, double tol) {
  if constexpr (ScalarTraits<S>::exact) {
    (void)tol;
    return a == b;
  } else {
    return std::abs(a - b) <= tol;
  }
}

template <class S>
MonomialMatrix<S> compose(const MonomialMatrix<S>& a, const MonomialMatrix<S>& b) {
  MonomialMatrix<S> c;
  c.target.resize(b.dim());
  c.coef.resize(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    c.target[i] = a.target[b.target[i]];
    c.coef[i] = a.coef[b.target[i]] * b.coef[i];
  }
  return c;
}

template <class S>
MonomialMatrix<S> monomial_identity(std::size_t dim) {
  MonomialMatrix<S> m;
  for (std::size_t i = 0; i < dim; ++i) {
    m.target.push_back(i);
    m.coef.push_back(S(1));
  }
  return m;
}

template <class S>
MonomialMatrix<S> permutation_monomial(std::vector<std::size_t> target) {
  MonomialMatrix<S> m;
  m.coef.assign(target.size(), S(1));
  m.target = std::move(target);
  return m;
}

// Homomorphism checks against every pair are quadratic in |G|; above this
// budget only products with generators are checked, which suffices by
// induction on word length.
constexpr std::size_t kAllPairsBudget = 2'000'000;

}  // namespace

template <class S>
Matrix<S> MonomialMatrix<S>::dense() const {
  Matrix<S> m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) m(target[i], i) = coef[i];
  return m;
}

template <class S>
Representation<S>::Representation(std::shared_ptr<const GroupTable> group, std::vector<MonomialMatrix<S>> matrices,
                                   std::string name)
    : group_(std::move(group)), name_(std::move(name)), monomial_(std::move(matrices)) {
  if (!group_) throw Error(ErrorCode::GroupMismatch, "null group");
  if (monomial_.size() != group_->order()) throw Error(ErrorCode::DimensionMismatch, "one matrix per element required");
  dim_ = monomial_.front().dim();
  verify();
}

template <class S>
Representation<S>::Representation(std::shared_ptr<const GroupTable> group, std::vector<Matrix<S>> matrices,
                                   std::string name)
    : group_(std::move(group)), name_(std::move(name)), dense_(std::move(matrices)) {
  if (!group_) throw Error(ErrorCode::GroupMismatch, "null group");
  if (dense_.size() != group_->order()) throw Error(ErrorCode::DimensionMismatch, "one matrix per element required");
  dim_ = dense_.front().rows();
  verify();
}

template <class S>
Matrix<S> Representation<S>::matrix(ElementIndex g) const {
  return dense_.empty() ? monomial_.at(g).dense() : dense_.at(g);
}

template <class S>
Vector<S> Representation<S>::apply(ElementIndex g, std::span<const S> x) const {
  if (x.size() != dim_) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector of length " + std::to_string(x.size()) + " for a representation of dim " + std::to_string(dim_));
  }
  if (!dense_.empty()) return matvec(dense_.at(g), x);
  const auto& m = monomial_.at(g);
  Vector<S> y(dim_);
  for (std::size_t i = 0; i < dim_; ++i) y[m.target[i]] = m.coef[i] * x[i];
  return y;
}

template <class S>
void Representation<S>::verify() const {
  const GroupTable& g = *group_;
  const std::size_t order = g.order();
  const double tol = kHomomorphismTol;

  auto fail = [&](const std::string& what) { throw Error(ErrorCode::NotAHomomorphism, name_ + ": " + what); };

  if (dense_.empty()) {
    for (const auto& m : monomial_) {
      if (m.dim() != dim_ || m.coef.size() != dim_) fail("matrix sizes differ");
      std::vector<char> hit(dim_, 0);
      for (std::size_t i = 0; i < dim_; ++i) {
        if (m.target[i] >= dim_ || hit[m.target[i]]++) fail("monomial pattern is not a permutation");
        if (ScalarTraits<S>::is_zero(m.coef[i])) fail("singular monomial matrix");
      }
    }
    for (std::size_t i = 0; i < dim_; ++i) {
      if (monomial_[0].target[i] != i || !near(monomial_[0].coef[i], S(1), tol)) fail("identity does not act trivially");
    }
    const auto check = [&](ElementIndex a, ElementIndex b) {
      const auto prod = compose(monomial_[a], monomial_[b]);
      const auto& expect = monomial_[g.mul(a, b)];
      for (std::size_t i = 0; i < dim_; ++i) {
        if (prod.target[i] != expect.target[i] || !near(prod.coef[i], expect.coef[i], tol)) {
          fail("rho(" + g.label(a) + ") rho(" + g.label(b) + ") != rho(" + g.label(a) + g.label(b) + ")");
        }
      }
    };
    if (order * order * std::max<std::size_t>(dim_, 1) <= kAllPairsBudget) {
      for (ElementIndex a = 0; a < order; ++a)
        for (ElementIndex b = 0; b < order; ++b) check(a, b);
    } else {
      for (ElementIndex a = 0; a < order; ++a)
        for (ElementIndex s : g.generators()) check(a, s);
    }
    return;
  }

  for (const auto& m : dense_) {
    if (m.rows() != dim_ || m.cols() != dim_) fail("matrix sizes differ");
  }
  const Matrix<S> id = Matrix<S>::identity(dim_);
  const auto equal = [&](const Matrix<S>& a, const Matrix<S>& b) {
    for (std::size_t k = 0; k < a.data().size(); ++k)
      if (!near(a.data()[k], b.data()[k], tol)) return false;
    return true;
  };
  if (!equal(dense_[0], id)) fail("identity does not act trivially");
  const auto check = [&](ElementIndex a, ElementIndex b) {
    if (!equal(dense_[a] * dense_[b], dense_[g.mul(a, b)])) {
      fail("rho(" + g.label(a) + ") rho(" + g.label(b) + ") != rho(" + g.label(a) + g.label(b) + ")");
    }
  };
  if (order * order * std::max<std::size_t>(dim_ * dim_ * dim_, 1) <= kAllPairsBudget * 8) {
    for (ElementIndex a = 0; a < order; ++a)
      for (ElementIndex b = 0; b < order; ++b) check(a, b);
  } else {
    for (ElementIndex a = 0; a < order; ++a)
      for (ElementIndex s : g.generators()) check(a, s);
  }
  // with rho(e) = I and the homomorphism property, rho(g) rho(g^-1) = I, so
  // every matrix is invertible
}

template <class S>
Representation<S> regular(std::shared_ptr<const GroupTable> group) {
  const std::size_t n = group->order();
  std::vector<MonomialMatrix<S>> mats;
  mats.reserve(n);
  for (ElementIndex g = 0; g < n; ++g) {
    std::vector<std::size_t> target(n);
    for (ElementIndex h = 0; h < n; ++h) target[h] = group->mul(g, h);
    mats.push_back(permutation_monomial<S>(std::move(target)));
  }
  std::string name = "regular:" + group->name();
  return Representation<S>(std::move(group), std::move(mats), std::move(name));
}

Representation<Complex> cyclic_fourier(std::size_t n) {
  auto group = std::make_shared<const GroupTable>(cyclic(n));
  std::vector<MonomialMatrix<Complex>> mats;
  for (std::size_t l = 0; l < n; ++l) {
    MonomialMatrix<Complex> m = monomial_identity<Complex>(n);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t e = (k * l) % n;
      // exact values on the real and imaginary axes keep small cases clean
      if (4 * e % n == 0) {
        static constexpr Complex quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        m.coef[k] = quarter[4 * e / n];
      } else {
        m.coef[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n));
      }
    }
    mats.push_back(std::move(m));
  }
  return Representation<Complex>(std::move(group), std::move(mats), "fourier:" + std::to_string(n));
}

namespace {

template <class S>
std::vector<MonomialMatrix<S>> dihedral_standard_matrices(std::size_t n) {
  // element f*n + a acts as s^f r^a
  std::vector<MonomialMatrix<S>> mats;
  for (std::size_t x = 0; x < 2 * n; ++x) {
    const std::size_t f = x / n, a = x % n;
    std::vector<std::size_t> target(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t shifted = (i + a) % n;              // r^a sends e_i to e_{i+a}
      target[i] = f == 0 ? shifted : (n - shifted) % n;     // s sends e_j to e_{-j}
    }
    mats.push_back(permutation_monomial<S>(std::move(target)));
  }
  return mats;
}

template <class S>
Representation<S> dihedral_character(std::size_t n, bool rotation_sign, std::string name) {
  auto group = std::make_shared<const GroupTable>(dihedral(n));
  std::vector<MonomialMatrix<S>> mats;
  for (std::size_t x = 0; x < 2 * n; ++x) {
    const std::size_t f = x / n, a = x % n;
    const std::size_t parity = (f + (rotation_sign ? a : 0)) % 2;
    mats.push_back({{0}, {ScalarTraits<S>::from_int(parity == 0 ? 1 : -1)}});
  }
  return Representation<S>(std::move(group), std::move(mats), std::move(name));
}

}  // namespace

template <class S>
Representation<S> dihedral_standard(std::size_t n) {
  auto group = std::make_shared<const GroupTable>(dihedral(n));
  return Representation<S>(std::move(group), dihedral_standard_matrices<S>(n), "dihedral-standard:" + std::to_string(n));
}

template <class S>
Representation<S> character_S0(std::size_t n) {
  return dihedral_character<S>(n, false, "S0:" + std::to_string(n));
}

template <class S>
Representation<S> character_Sminus1(std::size_t n) {
  if (n % 2 != 0) throw Error(ErrorCode::ParityMismatch, "S_-1 exists only for even n, got " + std::to_string(n));
  return dihedral_character<S>(n, true, "S-1:" + std::to_string(n));
}

template <class S>
Representation<S> zero_representation(std::shared_ptr<const GroupTable> group) {
  std::vector<MonomialMatrix<S>> mats(group->order());
  return Representation<S>(std::move(group), std::move(mats), "zero");
}

template <class S>
Representation<S> direct_sum(const Representation<S>& a, const Representation<S>& b) {
  const GroupTable& ga = a.group();
  const GroupTable& gb = b.group();
  if (a.group_ptr() != b.group_ptr() &&
      (ga.name() != gb.name() || ga.order() != gb.order() ||
       !std::equal(ga.labels().begin(), ga.labels().end(), gb.labels().begin()))) {
    throw Error(ErrorCode::GroupMismatch, "direct sum of representations of " + ga.name() + " and " + gb.name());
  }
  const std::size_t n = a.dim(), m = b.dim();
  const std::string name = a.name() + "+" + b.name();
  if (a.is_monomial() && b.is_monomial()) {
    std::vector<MonomialMatrix<S>> mats;
    for (ElementIndex g = 0; g < ga.order(); ++g) {
      MonomialMatrix<S> s = a.monomial(g);
      const auto& mb = b.monomial(g);
      for (std::size_t i = 0; i < m; ++i) {
        s.target.push_back(n + mb.target[i]);
        s.coef.push_back(mb.coef[i]);
      }
      mats.push_back(std::move(s));
    }
    return Representation<S>(a.group_ptr(), std::move(mats), name);
  }
  std::vector<Matrix<S>> mats;
  for (ElementIndex g = 0; g < ga.order(); ++g) {
    Matrix<S> s(n + m, n + m);
    const Matrix<S> ma = a.matrix(g), mb = b.matrix(g);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s(i, j) = ma(i, j);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) s(n + i, n + j) = mb(i, j);
    mats.push_back(std::move(s));
  }
  return Representation<S>(a.group_ptr(), std::move(mats), name);
}

template <class S>
Representation<S> dihedral_cmf(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::OutOfRange, "complete multiplicity-free representation needs n >= 3");
  auto standard = dihedral_standard<S>(n);
  auto group = standard.group_ptr();
  auto rebind = [&](const Representation<S>& chi) {
    std::vector<MonomialMatrix<S>> mats;
    for (ElementIndex g = 0; g < group->order(); ++g) mats.push_back(chi.monomial(g));
    return Representation<S>(group, std::move(mats), chi.name());
  };
  auto sum = direct_sum(standard, rebind(character_S0<S>(n)));
  if (n % 2 == 0) sum = direct_sum(sum, rebind(character_Sminus1<S>(n)));
  std::vector<MonomialMatrix<S>> mats;
  for (ElementIndex g = 0; g < group->order(); ++g) mats.push_back(sum.monomial(g));
  return Representation<S>(group, std::move(mats), "dihedral-cmf:" + std::to_string(n));
}

template <class S>
Representation<S> symmetric_matrix_rep(std::size_t n, std::size_t d) {
  if (d < 1) throw Error(ErrorCode::OutOfRange, "symmetric_matrix_rep needs d >= 1");
  auto group = std::make_shared<const GroupTable>(symmetric(n));
  std::vector<MonomialMatrix<S>> mats;
  mats.reserve(group->order());
  for (ElementIndex g = 0; g < group->order(); ++g) {
    const auto perm = group->permutation(g);
    std::vector<std::size_t> target(n * d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < d; ++j) target[i * d + j] = perm[i] * d + j;
    mats.push_back(permutation_monomial<S>(std::move(target)));
  }
  return Representation<S>(std::move(group), std::move(mats),
                           "snmatrix:" + std::to_string(n) + ":" + std::to_string(d));
}

template <class S>
std::vector<Vector<S>> orbit(const Representation<S>& rep, std::span<const S> x) {
  std::vector<Vector<S>> out;
  out.reserve(rep.group().order());
  for (ElementIndex g = 0; g < rep.group().order(); ++g) out.push_back(rep.apply(g, x));
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::size_t parse_count(std::string_view text, std::string_view descriptor) {
  std::size_t value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::ParseError, "bad count '" + std::string(text) + "' in '" + std::string(descriptor) + "'");
  }
  return value;
}

}  // namespace

template <class S>
Representation<S> from_descriptor(std::string_view descriptor) {
  const auto parts = split(descriptor, ':');
  const auto bad = [&](const std::string& why) {
    return Error(ErrorCode::ParseError, "representation descriptor '" + std::string(descriptor) + "': " + why);
  };
  const std::string_view kind = parts[0];
  if (kind == "regular") {
    if (parts.size() != 3) throw bad("expected regular:<cyclic|dihedral|symmetric>:<n>");
    const std::size_t n = parse_count(parts[2], descriptor);
    std::shared_ptr<const GroupTable> group;
    if (parts[1] == "cyclic") {
      group = std::make_shared<const GroupTable>(cyclic(n));
    } else if (parts[1] == "dihedral") {
      group = std::make_shared<const GroupTable>(dihedral(n));
    } else if (parts[1] == "symmetric") {
      group = std::make_shared<const GroupTable>(symmetric(n));
    } else {
      throw bad("unknown group family '" + std::string(parts[1]) + "'");
    }
    return regular<S>(std::move(group));
  }
  if (kind == "fourier") {
    if (parts.size() != 2) throw bad("expected fourier:<n>");
    const std::size_t n = parse_count(parts[1], descriptor);
    if constexpr (ScalarTraits<S>::exact) {
      throw Error(ErrorCode::ScalarKindMismatch, "the Fourier representation needs complex scalars (--scalar f64)");
    } else {
      return cyclic_fourier(n);
    }
  }
  if (kind == "dihedral-standard") {
    if (parts.size() != 2) throw bad("expected dihedral-standard:<n>");
    return dihedral_standard<S>(parse_count(parts[1], descriptor));
  }
  if (kind == "dihedral-cmf") {
    if (parts.size() != 2) throw bad("expected dihedral-cmf:<n>");
    return dihedral_cmf<S>(parse_count(parts[1], descriptor));
  }
  if (kind == "snmatrix") {
    if (parts.size() != 3) throw bad("expected snmatrix:<n>:<d>");
    return symmetric_matrix_rep<S>(parse_count(parts[1], descriptor), parse_count(parts[2], descriptor));
  }
  throw bad("unknown kind '" + std::string(kind) + "'");
}

#define ORBITKIT_INSTANTIATE_REPS(S)                                                         \
  template struct MonomialMatrix<S>;                                                         \
  template class Representation<S>;                                                          \
  template Representation<S> regular<S>(std::shared_ptr<const GroupTable>);                  \
  template Representation<S> dihedral_standard<S>(std::size_t);                              \
  template Representation<S> character_S0<S>(std::size_t);                                   \
  template Representation<S> character_Sminus1<S>(std::size_t);                              \
  template Representation<S> zero_representation<S>(std::shared_ptr<const GroupTable>);      \
  template Representation<S> direct_sum<S>(const Representation<S>&, const Representation<S>&); \
  template Representation<S> dihedral_cmf<S>(std::size_t);                                   \
  template Representation<S> symmetric_matrix_rep<S>(std::size_t, std::size_t);              \
  template std::vector<Vector<S>> orbit<S>(const Representation<S>&, std::span<const S>);    \
  template Representation<S> from_descriptor<S>(std::string_view);

ORBITKIT_INSTANTIATE_REPS(Rational)
ORBITKIT_INSTANTIATE_REPS(Complex)

#undef ORBITKIT_INSTANTIATE_REPS

}  // namespace orbitkit
