#include "cohom/exactnum.hpp"
#include "cohom/error.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace cohom {

int exit_code(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::Arithmetic:  // only reachable from input scalars
  case ErrorKind::Parse:
  case ErrorKind::Usage:
    return 2;
  case ErrorKind::Invariant:
    return 3;
  case ErrorKind::Rank:
    return 4;
  case ErrorKind::IdenticallyZero:
    return 5;
  case ErrorKind::Verify:
    return 6;
  default:
    return 1;
  }
}

std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t n) {
  if (n == 0)
    throw Error(ErrorKind::Arithmetic, "sqrt of zero has no squarefree part");
  if (n > AlgNum::kMaxRadicand)
    throw Error(ErrorKind::Arithmetic,
                "radicand " + std::to_string(n) + " exceeds supported bound");
  std::uint64_t s = 1, f = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2)
      s *= p;
    if (e % 2)
      f *= p;
  }
  f *= n;
  return {s, f};
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

AlgNum::AlgNum(long v) {
  if (v != 0)
    terms_.emplace_back(1, Rational(v));
}

AlgNum::AlgNum(const Rational& q) {
  if (q != 0) {
    terms_.emplace_back(1, q);
    terms_.back().second.canonicalize();
  }
}

AlgNum::AlgNum(long num, long den) {
  if (den == 0)
    throw Error(ErrorKind::Arithmetic, "division by zero");
  Rational q(num, den);
  q.canonicalize();
  if (q != 0)
    terms_.emplace_back(1, q);
}

AlgNum AlgNum::sqrt(std::uint64_t n) {
  if (n == 0)
    return AlgNum();
  auto [s, f] = squarefree_split(n);
  AlgNum r;
  r.terms_.emplace_back(f, Rational(static_cast<unsigned long>(s)));
  return r;
}

AlgNum AlgNum::from_terms(std::vector<Term> terms) {
  std::map<std::uint64_t, Rational> acc;
  for (auto& [d, q] : terms) {
    if (q == 0)
      continue;
    auto [s, f] = squarefree_split(d);
    acc[f] += q * Rational(static_cast<unsigned long>(s));
  }
  AlgNum r;
  for (auto& [d, q] : acc)
    if (q != 0)
      r.terms_.emplace_back(d, q);
  return r;
}

bool AlgNum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1);
}

bool AlgNum::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 1 && terms_[0].second == 1;
}

Rational AlgNum::rational_part() const {
  if (!terms_.empty() && terms_[0].first == 1)
    return terms_[0].second;
  return Rational(0);
}

Rational AlgNum::to_rational() const {
  if (!is_rational())
    throw Error(ErrorKind::Arithmetic, "expected a rational value, got " + str());
  return rational_part();
}

AlgNum AlgNum::operator-() const {
  AlgNum r = *this;
  for (auto& t : r.terms_)
    t.second = -t.second;
  return r;
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
  if (o.terms_.empty())
    return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin(), ie = terms_.end();
  auto j = o.terms_.begin(), je = o.terms_.end();
  while (i != ie || j != je) {
    if (j == je || (i != ie && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == ie || j->first < i->first) {
      out.push_back(*j++);
    } else {
      Rational q = i->second + j->second;
      if (q != 0)
        out.emplace_back(i->first, std::move(q));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) { return *this += -o; }

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
  if (a.terms_.empty() || b.terms_.empty())
    return AlgNum();
  if (a.is_rational() || b.is_rational()) {
    const AlgNum& r = a.is_rational() ? a : b;
    const AlgNum& o = a.is_rational() ? b : a;
    AlgNum out = o;
    for (auto& t : out.terms_)
      t.second *= r.terms_[0].second;
    return out;
  }
  std::map<std::uint64_t, Rational> acc;
  for (const auto& [da, qa] : a.terms_) {
    for (const auto& [db, qb] : b.terms_) {
      std::uint64_t g = std::gcd(da, db);
      unsigned __int128 key = static_cast<unsigned __int128>(da / g) * (db / g);
      if (key > AlgNum::kMaxRadicand)
        throw Error(ErrorKind::Arithmetic, "radicand product exceeds supported bound");
      acc[static_cast<std::uint64_t>(key)] += qa * qb * Rational(static_cast<unsigned long>(g));
    }
  }
  AlgNum out;
  for (auto& [d, q] : acc)
    if (q != 0)
      out.terms_.emplace_back(d, std::move(q));
  return out;
}

AlgNum& AlgNum::operator*=(const AlgNum& o) {
  *this = *this * o;
  return *this;
}

AlgNum& AlgNum::operator/=(const AlgNum& o) {
  *this = *this * o.inv();
  return *this;
}

AlgNum AlgNum::conjugate(std::uint64_t p) const {
  AlgNum r = *this;
  for (auto& t : r.terms_)
    if (t.first % p == 0)
      t.second = -t.second;
  return r;
}

AlgNum AlgNum::inv() const {
  if (is_zero())
    throw Error(ErrorKind::Arithmetic, "division by zero");
  if (is_rational())
    return AlgNum(Rational(1) / terms_[0].second);
  std::set<std::uint64_t> primes;
  for (const auto& t : terms_)
    for (auto p : prime_factors(t.first))
      primes.insert(p);
  AlgNum num(1), norm = *this;
  for (auto p : primes) {
    AlgNum c = norm.conjugate(p);
    num *= c;
    norm *= c;
  }
  if (!norm.is_rational() || norm.is_zero())
    throw Error(ErrorKind::Internal, "conjugate norm is not a nonzero rational");
  return num * AlgNum(Rational(1) / norm.terms_[0].second);
}

double AlgNum::to_float() const {
  double s = 0.0;
  for (const auto& [d, q] : terms_)
    s += q.get_d() * std::sqrt(static_cast<double>(d));
  return s;
}

std::string AlgNum::str() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, q] : terms_) {
    Rational mag = abs(q);
    bool neg = sgn(q) < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (d == 1) {
      out += mag.get_str();
    } else {
      if (mag != 1)
        out += mag.get_str() + "*";
      out += "sqrt(" + std::to_string(d) + ")";
    }
  }
  return out;
}

} // namespace cohom
