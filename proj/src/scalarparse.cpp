#include "cohom/scalarparse.hpp"
#include "cohom/error.hpp"

#include <cctype>

namespace cohom {
namespace {

class Parser {
public:
  explicit Parser(std::string_view s) : s_(s) {}

  AlgNum parse() {
    AlgNum v = expr();
    skip_ws();
    if (pos_ != s_.size())
      fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg, ErrorKind kind = ErrorKind::Parse) const {
    throw Error(kind, "scalar \"" + std::string(s_) + "\": " + msg + " at byte " +
                          std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  AlgNum expr() {
    AlgNum v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  AlgNum term() {
    AlgNum v = factor();
    for (;;) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        std::size_t at = pos_;
        AlgNum d = factor();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero", ErrorKind::Arithmetic);
        }
        v *= d.inv();
      } else {
        return v;
      }
    }
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  AlgNum factor() {
    skip_ws();
    if (pos_ >= s_.size())
      fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      AlgNum v = expr();
      if (!eat(')'))
        fail("expected ')'");
      return v;
    }
    if (s_.substr(pos_, 5) == "sqrt(") {
      pos_ += 5;
      skip_ws();
      std::size_t at = pos_;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
        fail("radicand must be a positive integer");
      mpz_class n = integer();
      if (n <= 0) {
        pos_ = at;
        fail("radicand must be a positive integer");
      }
      if (n > mpz_class(std::to_string(AlgNum::kMaxRadicand))) {
        pos_ = at;
        fail("radicand exceeds supported bound", ErrorKind::Arithmetic);
      }
      if (!eat(')'))
        fail("expected ')'");
      return AlgNum::sqrt(n.get_ui());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      std::size_t save = pos_;
      skip_ws();
      // integer '/' integer binds tighter than term-level division
      if (pos_ < s_.size() && s_[pos_] == '/') {
        std::size_t after = pos_ + 1;
        while (after < s_.size() && std::isspace(static_cast<unsigned char>(s_[after])))
          ++after;
        if (after < s_.size() && std::isdigit(static_cast<unsigned char>(s_[after]))) {
          pos_ = after;
          mpz_class den = integer();
          if (den == 0) {
            pos_ = after;
            fail("division by zero", ErrorKind::Arithmetic);
          }
          Rational q(num, den);
          q.canonicalize();
          return AlgNum(q);
        }
      }
      pos_ = save;
      return AlgNum(Rational(num));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }
};

} // namespace

AlgNum parse_scalar(std::string_view text) { return Parser(text).parse(); }

std::string format_scalar(const AlgNum& x) { return x.str(); }

} // namespace cohom
