#pragma once

#include "prohecke/lattice.hpp"

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace prohecke {

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficients of generic Hecke elements outgrow 64 bits at moderate q.
using Coef = __int128;

std::string to_string(Coef c);

/// Laurent polynomial in v with integer coefficients; q = v^2.
class LaurentInt {
 public:
  LaurentInt() = default;
  LaurentInt(Int c) : LaurentInt(monomial(c, 0)) {}  // NOLINT: implicit from integers is intended
  static LaurentInt monomial(Coef coef, int exp);
  static LaurentInt v(int exp = 1) { return monomial(1, exp); }
  static LaurentInt q(int k = 1) { return monomial(1, 2 * k); }

  bool is_zero() const { return c_.empty(); }
  int min_exp() const { return low_; }
  int max_exp() const { return low_ + static_cast<int>(c_.size()) - 1; }
  Coef coeff(int exp) const;
  /// Nonzero terms as (exponent, coefficient), ascending.
  std::vector<std::pair<int, Coef>> terms() const;

  LaurentInt operator-() const;
  LaurentInt& operator+=(const LaurentInt& o);
  LaurentInt& operator-=(const LaurentInt& o);
  LaurentInt& operator*=(const LaurentInt& o) { return *this = *this * o; }
  friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
  friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);
  friend bool operator==(const LaurentInt& a, const LaurentInt& b) { return a.low_ == b.low_ && a.c_ == b.c_; }
  LaurentInt shift(int k) const;

  bool is_unit() const;
  /// Exact quotient; throws ArithmeticError carrying the residual.
  LaurentInt divide_exact(const LaurentInt& d) const;

  /// All exponents even and nonnegative.
  bool in_Zq() const;
  /// In Z[q] with no constant term.
  bool in_qZq() const { return in_Zq() && (is_zero() || low_ >= 2); }
  bool is_integer() const { return is_zero() || (low_ == 0 && c_.size() == 1); }

  std::string str() const;

 private:
  void normalize();
  void accumulate(const LaurentInt& o, bool negate);
  int low_ = 0;
  boost::container::small_vector<Coef, 3> c_;
};

/// F_q = F_p[X]/(f), f the least monic polynomial of degree f having X primitive.
/// Elements are encoded as integers sum c_i p^i.
class FiniteField {
 public:
  FiniteField(int p, int f);

  int p() const { return p_; }
  int degree() const { return f_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  int generator() const { return gen_; }

  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const;
  int inv(int a) const;
  /// Power of the fixed generator.
  int exp(Int k) const { return exp_[static_cast<std::size_t>(floor_mod(k, q_ - 1))]; }
  int log(int a) const;
  int from_int(Int n) const { return static_cast<int>(floor_mod(n, p_)); }
  std::vector<int> coefficients(int a) const;

 private:
  int p_, f_, q_;
  std::vector<int> modulus_;
  int gen_ = 1;
  std::vector<int> exp_, log_;
};

struct Fq {
  const FiniteField* field = nullptr;
  int v = 0;

  bool is_zero() const { return v == 0; }
  friend bool operator==(const Fq& a, const Fq& b) { return a.v == b.v; }
  Fq operator-() const { return {field, field ? field->neg(v) : 0}; }
  friend Fq operator+(const Fq& a, const Fq& b);
  friend Fq operator-(const Fq& a, const Fq& b) { return a + (-b); }
  friend Fq operator*(const Fq& a, const Fq& b);
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }
  Fq inverse() const;
};

/// q -> 0 and integers reduced mod p; requires the argument to lie in Z[q].
Fq specialize_mod_p(const LaurentInt& c, const FiniteField& F);

// Coefficient ring policies for the Hecke algebra.
struct LaurentRing {
  using Scalar = LaurentInt;
  static constexpr bool generic = true;
  Scalar zero() const { return {}; }
  Scalar one() const { return 1; }
  Scalar from_int(Int n) const { return n; }
  Scalar q() const { return LaurentInt::q(); }
  Scalar q_inverse() const { return LaurentInt::q(-1); }
  static bool is_zero(const Scalar& s) { return s.is_zero(); }
};

struct FqRing {
  using Scalar = Fq;
  static constexpr bool generic = false;
  const FiniteField* field;
  Scalar zero() const { return {field, 0}; }
  Scalar one() const { return {field, 1}; }
  Scalar from_int(Int n) const { return {field, field->from_int(n)}; }
  Scalar q() const { return zero(); }
  static bool is_zero(const Scalar& s) { return s.is_zero(); }
};

}  // namespace prohecke
