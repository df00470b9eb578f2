#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_n).
//
// An element of order n is stored in the power basis 1, z, ..., z^(phi(n)-1)
// of Q[z] / Phi_n(z), with every coefficient a reduced GMP rational.  Every
// operation returns a fully reduced element, so equality is a plain
// coefficient comparison once both sides live in the same field.  Elements of
// different orders are promoted to Q(zeta_lcm) before combining.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cassert>
#include <compare>
#include <complex>
#include <cstddef>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mnet/errors.hpp"

namespace mnet {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {

// Dense univariate polynomial over Q, lowest degree first.
using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Polynomial long division over Q.  `divisor` must be nonzero after trimming.
inline std::pair<QPoly, QPoly> divmod(QPoly dividend, const QPoly& divisor) {
  trim(dividend);
  const std::size_t dn = divisor.size() - 1;
  if (dividend.size() < divisor.size()) return {QPoly{}, dividend};
  QPoly quotient(dividend.size() - dn, Rational(0));
  const Rational lead = divisor.back();
  for (std::size_t i = dividend.size(); i-- > dn;) {
    if (dividend[i] == 0) continue;
    Rational c = dividend[i] / lead;
    quotient[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) dividend[i - dn + j] -= c * divisor[j];
  }
  dividend.resize(dn);
  trim(dividend);
  trim(quotient);
  return {quotient, dividend};
}

// Remainder modulo a monic integer polynomial; the result has exactly
// deg(modulus) coefficients.
inline void reduce_monic(QPoly& p, const std::vector<Integer>& modulus) {
  const std::size_t m = modulus.size() - 1;
  for (std::size_t i = p.size(); i-- > m;) {
    if (p[i] == 0) continue;
    const Rational c = p[i];
    for (std::size_t j = 0; j <= m; ++j) p[i - m + j] -= c * modulus[j];
  }
  p.resize(m, Rational(0));
}

inline std::vector<Integer> divide_exact_monic(std::vector<Integer> num,
                                               const std::vector<Integer>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<Integer> quotient(num.size() - dn, Integer(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    const Integer c = num[i];
    quotient[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quotient;
}

inline const std::vector<Integer>& cyclotomic_locked(
    unsigned n, std::map<unsigned, std::vector<Integer>>& cache) {
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^n - 1 divided by every Phi_d with d | n, d < n.
  std::vector<Integer> poly(n + 1, Integer(0));
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    poly = divide_exact_monic(std::move(poly), cyclotomic_locked(d, cache));
  }
  return cache.emplace(n, std::move(poly)).first->second;
}

}  // namespace detail

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
inline const std::vector<Integer>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw InvalidInput("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<unsigned, std::vector<Integer>> cache;
  std::lock_guard lock(mutex);
  return detail::cyclotomic_locked(n, cache);
}

inline std::size_t euler_phi(unsigned n) { return cyclotomic_polynomial(n).size() - 1; }

class Cyclo {
 public:
  Cyclo() : order_(1), coeffs_{Rational(0)} {}
  Cyclo(long value) : order_(1), coeffs_{Rational(value)} {}  // NOLINT(implicit)
  Cyclo(const Rational& value) : order_(1), coeffs_{value} {}  // NOLINT(implicit)

  // Element sum_i poly[i] z^i of Q(zeta_order); poly may have any length.
  Cyclo(unsigned order, detail::QPoly poly) : order_(order) {
    for (auto& c : poly) c.canonicalize();
    detail::reduce_monic(poly, cyclotomic_polynomial(order));
    coeffs_ = std::move(poly);
  }

  /// zeta_n^power with zeta_n = exp(2 pi i / n).
  static Cyclo zeta(unsigned n, long power = 1) {
    if (n == 0) throw InvalidInput("cyclotomic order must be positive");
    const long e = ((power % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
    detail::QPoly p(static_cast<std::size_t>(e) + 1, Rational(0));
    p[static_cast<std::size_t>(e)] = 1;
    return Cyclo(n, std::move(p));
  }

  unsigned order() const noexcept { return order_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
  }

  std::optional<Rational> as_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_[0];
  }

  /// Image in Q(zeta_target); target must be a multiple of order().
  Cyclo promote(unsigned target) const {
    if (target == order_) return *this;
    if (target == 0 || target % order_ != 0)
      throw InvalidInput("cannot promote Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                         std::to_string(target) + ")");
    const std::size_t step = target / order_;
    detail::QPoly p(step * coeffs_.size() + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
    return Cyclo(target, std::move(p));
  }

  /// The same number written in Q(zeta_target), if it lies in that subfield.
  std::optional<Cyclo> demote(unsigned target) const;

  /// Complex conjugate, induced by zeta -> zeta^-1.
  Cyclo conj() const {
    detail::QPoly p(order_ + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p[(order_ - i) % order_] += coeffs_[i];
    return Cyclo(order_, std::move(p));
  }

  bool is_real() const { return *this == conj(); }

  Cyclo operator-() const {
    Cyclo r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = common(a, b);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
  }
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = common(a, b);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
  }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = common(a, b);
    if (x.order_ == 1) return Cyclo(Rational(x.coeffs_[0] * y.coeffs_[0]));
    detail::QPoly p(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < y.coeffs_.size(); ++j) p[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return Cyclo(x.order_, std::move(p));
  }
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * inv(b); }

  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  /// Multiplicative inverse by the extended Euclidean algorithm in Q[z].
  friend Cyclo inv(const Cyclo& a) {
    if (a.is_zero()) throw DivisionByZero();
    if (a.order_ == 1) return Cyclo(Rational(1 / a.coeffs_[0]));
    const auto& phi = cyclotomic_polynomial(a.order_);
    detail::QPoly r0(phi.begin(), phi.end());
    detail::QPoly r1 = a.coeffs_;
    detail::trim(r1);
    detail::QPoly s0{}, s1{Rational(1)};
    while (!r1.empty()) {
      auto [q, r] = detail::divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      // s0 - q * s1
      detail::QPoly next(std::max(s0.size(), q.size() + s1.size()), Rational(0));
      for (std::size_t i = 0; i < s0.size(); ++i) next[i] += s0[i];
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < s1.size(); ++j) next[i + j] -= q[i] * s1[j];
      detail::trim(next);
      s0 = std::move(s1);
      s1 = std::move(next);
    }
    // r0 is the (constant) gcd; s0 * a == r0 modulo Phi.
    assert(r0.size() == 1);
    const Rational scale = 1 / r0[0];
    for (auto& c : s0) c *= scale;
    return Cyclo(a.order_, std::move(s0));
  }

  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    auto [x, y] = common(a, b);
    return x.coeffs_ == y.coeffs_;
  }

  // Lexicographic on power-basis coefficients in the common field.
  friend std::strong_ordering operator<=>(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = common(a, b);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      const int c = cmp(x.coeffs_[i], y.coeffs_[i]);
      if (c < 0) return std::strong_ordering::less;
      if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  /// Human-readable form in the literal grammar, e.g. "1/2 + 3*z^2".
  /// `compact` drops the spaces (used for generated labels).
  std::string str(bool compact = false) const {
    std::string out;
    const char* plus = compact ? "+" : " + ";
    const char* minus = compact ? "-" : " - ";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      const bool negative = c < 0;
      const Rational mag = negative ? Rational(-c) : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? minus : plus;
      }
      std::string monomial = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
      if (monomial.empty())
        out += mag.get_str();
      else if (mag == 1)
        out += monomial;
      else
        out += mag.get_str() + "*" + monomial;
    }
    return out.empty() ? "0" : out;
  }

 private:
  static std::pair<Cyclo, Cyclo> common(const Cyclo& a, const Cyclo& b) {
    if (a.order_ == b.order_) return {a, b};
    const unsigned n = std::lcm(a.order_, b.order_);
    return {a.promote(n), b.promote(n)};
  }

  unsigned order_;
  std::vector<Rational> coeffs_;
};

inline std::optional<Cyclo> Cyclo::demote(unsigned target) const {
  if (target == 0) throw InvalidInput("cyclotomic order must be positive");
  const unsigned n = std::lcm(order_, target);
  const Cyclo value = promote(n);
  const std::size_t rows = euler_phi(n);
  const std::size_t unknowns = euler_phi(target);
  // Columns: images of 1, zeta_target, ..., zeta_target^(phi-1); last column
  // is the target vector.
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(unknowns + 1, Rational(0)));
  for (std::size_t j = 0; j < unknowns; ++j) {
    const Cyclo img = Cyclo::zeta(target, static_cast<long>(j)).promote(n);
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = img.coeffs_[i];
  }
  for (std::size_t i = 0; i < rows; ++i) m[i][unknowns] = value.coeffs_[i];

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational lead = m[r][c];
    for (auto& x : m[r]) x /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k <= unknowns; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][unknowns] != 0) return std::nullopt;
  detail::QPoly coeffs(unknowns, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) coeffs[pivot_cols[i]] = m[i][unknowns];
  return Cyclo(target, std::move(coeffs));
}

namespace detail {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  ~MpfrValue() { mpfr_clear(value_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

}  // namespace detail

/// Complex embedding zeta_n -> exp(2 pi i / n), evaluated with `precision`
/// working bits.  The result is rounded to long double, so accuracy
/// saturates at the long double mantissa (64 bits on x86).
inline std::complex<long double> embed_complex(const Cyclo& a, unsigned precision = 64) {
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max(precision, 2u)) + 32;
  detail::MpfrValue re(prec), im(prec), angle(prec), c(prec), s(prec), t(prec);
  mpfr_set_zero(re.get(), 1);
  mpfr_set_zero(im.get(), 1);
  const auto& coeffs = a.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    mpfr_set_q(t.get(), coeffs[k].get_mpq_t(), MPFR_RNDN);
    if (k == 0) {
      mpfr_add(re.get(), re.get(), t.get(), MPFR_RNDN);
      continue;
    }
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    mpfr_mul_ui(angle.get(), angle.get(), 2 * static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_div_ui(angle.get(), angle.get(), a.order(), MPFR_RNDN);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    mpfr_mul(c.get(), c.get(), t.get(), MPFR_RNDN);
    mpfr_mul(s.get(), s.get(), t.get(), MPFR_RNDN);
    mpfr_add(re.get(), re.get(), c.get(), MPFR_RNDN);
    mpfr_add(im.get(), im.get(), s.get(), MPFR_RNDN);
  }
  return {mpfr_get_ld(re.get(), MPFR_RNDN), mpfr_get_ld(im.get(), MPFR_RNDN)};
}

inline std::complex<double> approx(const Cyclo& a) {
  const auto z = embed_complex(a, 64);
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

}  // namespace mnet
