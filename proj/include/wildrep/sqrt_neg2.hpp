#pragma once

// Exact numbers a + b*sqrt(-2) with rational a, b. The embedding into C
// sends sqrt(-2) to i*sqrt(2).

#include <gmpxx.h>

#include <string>

#include "wildrep/errors.hpp"

namespace wildrep {

class SqrtNeg2Number {
 public:
  SqrtNeg2Number() = default;
  SqrtNeg2Number(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  SqrtNeg2Number(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static SqrtNeg2Number root() { return {0, 1}; }

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }

  SqrtNeg2Number conj() const { return {a_, -b_}; }
  /// a^2 + 2b^2
  mpq_class norm() const { return a_ * a_ + 2 * b_ * b_; }

  friend SqrtNeg2Number operator+(const SqrtNeg2Number& x, const SqrtNeg2Number& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend SqrtNeg2Number operator-(const SqrtNeg2Number& x, const SqrtNeg2Number& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  SqrtNeg2Number operator-() const { return {-a_, -b_}; }
  friend SqrtNeg2Number operator*(const SqrtNeg2Number& x, const SqrtNeg2Number& y) {
    return {x.a_ * y.a_ - 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend bool operator==(const SqrtNeg2Number& x, const SqrtNeg2Number& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  SqrtNeg2Number pow(long k) const {
    require(k >= 0, ErrorKind::Precondition, "negative power of a sqrt(-2) number");
    SqrtNeg2Number r(1), base = *this;
    while (k) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  bool is_integral() const { return a_.get_den() == 1 && b_.get_den() == 1; }

  /// x == y mod m in Z[sqrt(-2)]; both must be integral.
  friend bool congruent(const SqrtNeg2Number& x, const SqrtNeg2Number& y, long m) {
    require(x.is_integral() && y.is_integral(), ErrorKind::Precondition, "congruence needs integral values");
    const SqrtNeg2Number d = x - y;
    return mpz_class(d.a_.get_num() % m) == 0 && mpz_class(d.b_.get_num() % m) == 0;
  }

  std::string to_string() const {
    if (b_ == 0) return a_.get_str();
    std::string s;
    auto coef = [](const mpq_class& q) -> std::string {
      if (q == 1) return "";
      if (q == -1) return "-";
      return q.get_str() + "*";
    };
    if (a_ != 0) s = a_.get_str() + (b_ > 0 ? " + " : " - ") + coef(abs(b_)) + "sqrt(-2)";
    else s = coef(b_) + "sqrt(-2)";
    return s;
  }

 private:
  mpq_class a_{0};
  mpq_class b_{0};
};

}  // namespace wildrep
