#pragma once

#include "cohom/exactnum.hpp"

#include <string>
#include <vector>

namespace cohom {

/// Polynomial in t with exact coefficients; coeffs[i] multiplies t^i.
class Poly {
public:
  Poly() = default;
  Poly(AlgNum c) { if (!c.is_zero()) c_.push_back(std::move(c)); }
  static Poly monomial(const AlgNum& c, std::size_t power);

  bool is_zero() const { return c_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  AlgNum coeff(std::size_t i) const { return i < c_.size() ? c_[i] : AlgNum(); }
  const std::vector<AlgNum>& coeffs() const { return c_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const AlgNum& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Multiply by t^k.
  Poly shift(std::size_t k) const;
  /// p(t) -> p(t^2)
  Poly in_t_squared() const;

  /// Text such as "t^2 - 1/2*sqrt(3)*t^4"; variable name is configurable.
  std::string str(const std::string& var = "t") const;

private:
  std::vector<AlgNum> c_;
  void trim();
};

} // namespace cohom
