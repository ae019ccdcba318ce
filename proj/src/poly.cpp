#include "cohom/poly.hpp"

namespace cohom {

Poly Poly::monomial(const AlgNum& c, std::size_t power) {
  Poly p;
  if (c.is_zero())
    return p;
  p.c_.resize(power + 1);
  p.c_[power] = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero())
    c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero())
    return r;
  r.c_.resize(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero())
        r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

Poly operator*(const AlgNum& s, const Poly& p) {
  Poly r;
  if (s.is_zero())
    return r;
  r.c_ = p.c_;
  for (auto& x : r.c_)
    x = s * x;
  return r;
}

Poly Poly::shift(std::size_t k) const {
  Poly r;
  if (is_zero())
    return r;
  r.c_.assign(k, AlgNum());
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::in_t_squared() const {
  Poly r;
  if (is_zero())
    return r;
  r.c_.resize(2 * c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    r.c_[2 * i] = c_[i];
  return r;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero())
    return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero())
      continue;
    std::string c = c_[i].str();
    bool compound = c_[i].terms().size() > 1;
    bool neg = !compound && c[0] == '-';
    if (neg)
      c = c.substr(1);
    if (compound)
      c = "(" + c + ")";
    if (!out.empty())
      out += neg ? " - " : " + ";
    else if (neg)
      out += "-";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (i == 0)
      out += c;
    else if (c == "1")
      out += mono;
    else
      out += c + "*" + mono;
  }
  return out;
}

} // namespace cohom
