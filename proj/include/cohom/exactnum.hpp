#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <utility>
#include <vector>

namespace cohom {

using Rational = mpq_class;

/**
 * Exact real number  sum_d q_d * sqrt(d)  over squarefree d >= 1.
 *
 * Terms are kept sorted by radicand with nonzero coefficients, so the
 * representation is unique and equality is structural.
 */
class AlgNum {
public:
  using Term = std::pair<std::uint64_t, Rational>;

  // Radicands above this bound are rejected (trial-division factoring).
  static constexpr std::uint64_t kMaxRadicand = 1'000'000'000'000ULL;

  AlgNum() = default;
  AlgNum(long v);
  AlgNum(int v) : AlgNum(static_cast<long>(v)) {}
  AlgNum(const Rational& q);
  AlgNum(long num, long den);

  /// sqrt(n) for an integer n > 0, with the square part pulled out.
  static AlgNum sqrt(std::uint64_t n);
  static AlgNum from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool is_one() const;
  Rational rational_part() const;
  /// The rational value; throws if irrational.
  Rational to_rational() const;

  AlgNum inv() const;
  double to_float() const;

  AlgNum operator-() const;
  AlgNum& operator+=(const AlgNum& o);
  AlgNum& operator-=(const AlgNum& o);
  AlgNum& operator*=(const AlgNum& o);
  AlgNum& operator/=(const AlgNum& o);

  friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
  friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inv(); }
  friend bool operator==(const AlgNum& a, const AlgNum& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

  /// Canonical text: "a/b*sqrt(d)" terms sorted by radicand, joined by +/-.
  std::string str() const;

private:
  std::vector<Term> terms_;
  /// Conjugate flipping the sign of sqrt(p) in every key divisible by p.
  AlgNum conjugate(std::uint64_t p) const;
};

/// Squarefree decomposition n = s^2 * f, returns (s, f). Throws above the cap.
std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t n);
/// Prime factors of a squarefree n.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

} // namespace cohom
