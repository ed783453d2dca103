#include "prohecke/coeff.hpp"

#include <algorithm>
#include <sstream>

namespace prohecke {

namespace {

Coef checked_add(Coef a, Coef b) {
  Coef r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("integer overflow in Laurent addition");
  return r;
}

Coef checked_mul(Coef a, Coef b) {
  Coef r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("integer overflow in Laurent multiplication");
  return r;
}

}  // namespace

std::string to_string(Coef c) {
  if (c == 0) return "0";
  const bool neg = c < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(c) : static_cast<unsigned __int128>(c);
  std::string out;
  for (; u > 0; u /= 10) out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
  if (neg) out.push_back('-');
  return {out.rbegin(), out.rend()};
}

LaurentInt LaurentInt::monomial(Coef coef, int exp) {
  LaurentInt out;
  if (coef != 0) {
    out.low_ = exp;
    out.c_ = {coef};
  }
  return out;
}

void LaurentInt::normalize() {
  if (c_.empty() || (c_.front() != 0 && c_.back() != 0)) return;
  std::size_t lo = 0;
  while (lo < c_.size() && c_[lo] == 0) ++lo;
  if (lo == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  std::size_t hi = c_.size();
  while (c_[hi - 1] == 0) --hi;
  c_.resize(hi);
  if (lo > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lo));
    low_ += static_cast<int>(lo);
  }
}

Coef LaurentInt::coeff(int exp) const {
  if (c_.empty() || exp < low_ || exp > max_exp()) return 0;
  return c_[static_cast<std::size_t>(exp - low_)];
}

std::vector<std::pair<int, Coef>> LaurentInt::terms() const {
  std::vector<std::pair<int, Coef>> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), c_[i]);
  return out;
}

LaurentInt LaurentInt::operator-() const {
  LaurentInt out = *this;
  for (Coef& x : out.c_) x = checked_mul(x, -1);
  return out;
}

void LaurentInt::accumulate(const LaurentInt& o, bool negate) {
  if (o.is_zero()) return;
  if (is_zero()) {
    *this = o;
    if (negate) *this = -*this;
    return;
  }
  if (o.low_ < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - o.low_), 0);
    low_ = o.low_;
  }
  if (o.max_exp() > max_exp()) c_.resize(static_cast<std::size_t>(o.max_exp() - low_ + 1), 0);
  Coef* d = c_.data() + (o.low_ - low_);
  const Coef* src = o.c_.data();
  const std::size_t n = o.c_.size();
  bool overflow = false;
  if (negate)
    for (std::size_t i = 0; i < n; ++i) overflow |= __builtin_sub_overflow(d[i], src[i], &d[i]);
  else
    for (std::size_t i = 0; i < n; ++i) overflow |= __builtin_add_overflow(d[i], src[i], &d[i]);
  if (overflow) throw ArithmeticError("integer overflow in Laurent addition");
  normalize();
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& o) {
  accumulate(o, false);
  return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& o) {
  accumulate(o, true);
  return *this;
}

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.c_.size() == 1 || b.c_.size() == 1) {
    const LaurentInt& m = a.c_.size() == 1 ? a : b;
    LaurentInt out = &m == &a ? b : a;
    out.low_ += m.low_;
    if (m.c_[0] != 1)
      for (Coef& x : out.c_) x = checked_mul(x, m.c_[0]);
    return out;
  }
  LaurentInt out;
  out.low_ = a.low_ + b.low_;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out.c_[i + j] = checked_add(out.c_[i + j], checked_mul(a.c_[i], b.c_[j]));
  }
  out.normalize();
  return out;
}

LaurentInt LaurentInt::shift(int k) const {
  LaurentInt out = *this;
  if (!out.is_zero()) out.low_ += k;
  return out;
}

bool LaurentInt::is_unit() const { return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1); }

LaurentInt LaurentInt::divide_exact(const LaurentInt& d) const {
  if (d.is_zero()) throw ArithmeticError("division by zero Laurent polynomial");
  if (is_zero()) return {};
  // Long division from the top degree down on the polynomial parts.
  std::vector<Coef> rem(c_.begin(), c_.end());
  const auto& den = d.c_;
  if (rem.size() < den.size()) {
    throw ArithmeticError("inexact Laurent division: residual " + str());
  }
  std::vector<Coef> quo(rem.size() - den.size() + 1, 0);
  Coef lead = den.back();
  for (std::size_t k = quo.size(); k-- > 0;) {
    Coef top = rem[k + den.size() - 1];
    if (top % lead != 0) break;
    Coef c = top / lead;
    quo[k] = c;
    for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] = checked_add(rem[k + j], -checked_mul(c, den[j]));
  }
  LaurentInt r;
  r.low_ = low_;
  r.c_.assign(rem.begin(), rem.end());
  r.normalize();
  if (!r.is_zero()) throw ArithmeticError("inexact Laurent division: residual " + r.str());
  LaurentInt out;
  out.low_ = low_ - d.low_;
  out.c_.assign(quo.begin(), quo.end());
  out.normalize();
  return out;
}

bool LaurentInt::in_Zq() const {
  if (is_zero()) return true;
  if (low_ < 0) return false;
  for (const auto& [e, c] : terms())
    if (e % 2 != 0) return false;
  return true;
}

std::string LaurentInt::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Coef a = c < 0 ? -c : c;
    if (e == 0) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

FiniteField::FiniteField(int p, int f) : p_(p), f_(f), q_(1) {
  if (p < 2 || f < 1) throw ArithmeticError("invalid field parameters");
  for (int i = 0; i < f; ++i) q_ *= p;
  const int n = q_ - 1;
  exp_.assign(std::max(n, 1), 1);
  if (f == 1) {
    for (int g = 1; g < p; ++g) {
      std::vector<int> pw(std::max(n, 1));
      int x = 1, order = 0;
      for (int k = 0; k < n; ++k) {
        pw[k] = x;
        x = x * g % p;
        ++order;
        if (x == 1) break;
      }
      if (order == n) {
        gen_ = g;
        exp_ = pw;
        break;
      }
    }
    modulus_ = {(p - gen_) % p, 1};
  } else {
    bool found = false;
    for (int code = 0; code < q_ && !found; ++code) {
      std::vector<int> c(f);
      for (int i = 0, x = code; i < f; ++i, x /= p) c[i] = x % p;
      if (c[0] == 0) continue;
      // Powers of X modulo X^f + c_{f-1}X^{f-1} + ... + c_0.
      std::vector<int> cur(f, 0);
      cur[0] = 1;
      std::vector<int> pw(n);
      int order = 0;
      bool ok = true;
      for (int k = 0; k < n; ++k) {
        int enc = 0;
        for (int i = f - 1; i >= 0; --i) enc = enc * p + cur[i];
        pw[k] = enc;
        if (k > 0 && enc == 1) {
          ok = false;
          break;
        }
        int top = cur[f - 1];
        for (int i = f - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        for (int i = 0; i < f; ++i) cur[i] = ((cur[i] - top * c[i]) % p + p) % p;
        ++order;
      }
      bool back_to_one = cur[0] == 1;
      for (int i = 1; i < f; ++i) back_to_one = back_to_one && cur[i] == 0;
      if (ok && order == n && back_to_one) {
        found = true;
        modulus_ = c;
        modulus_.push_back(1);
        exp_ = pw;
        gen_ = p;  // the class of X
      }
    }
    if (!found) throw ArithmeticError("no primitive modulus found");
  }
  log_.assign(q_, -1);
  for (int k = 0; k < n; ++k) log_[exp_[k]] = k;
  if (q_ == 2) {
    exp_ = {1};
    log_[1] = 0;
  }
}

int FiniteField::add(int a, int b) const {
  if (f_ == 1) return (a + b) % p_;
  int out = 0, scale = 1;
  for (int i = 0; i < f_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

int FiniteField::neg(int a) const {
  if (f_ == 1) return (p_ - a) % p_;
  int out = 0, scale = 1;
  for (int i = 0; i < f_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

int FiniteField::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[static_cast<std::size_t>((log_[a] + log_[b]) % (q_ - 1))];
}

int FiniteField::inv(int a) const {
  if (a == 0) throw ArithmeticError("inverse of zero in F_q");
  return exp_[static_cast<std::size_t>((q_ - 1 - log_[a]) % (q_ - 1))];
}

int FiniteField::log(int a) const {
  if (a == 0) throw ArithmeticError("discrete log of zero");
  return log_[a];
}

std::vector<int> FiniteField::coefficients(int a) const {
  std::vector<int> out(f_);
  for (int i = 0; i < f_; ++i, a /= p_) out[i] = a % p_;
  return out;
}

namespace {
const FiniteField* pick(const Fq& a, const Fq& b) {
  if (a.field && b.field && a.field != b.field && a.field->q() != b.field->q())
    throw ArithmeticError("mixing elements of different finite fields");
  return a.field ? a.field : b.field;
}
}  // namespace

Fq operator+(const Fq& a, const Fq& b) {
  const FiniteField* F = pick(a, b);
  if (!F) return {};
  return {F, F->add(a.v, b.v)};
}

Fq operator*(const Fq& a, const Fq& b) {
  const FiniteField* F = pick(a, b);
  if (!F) return {};
  return {F, F->mul(a.v, b.v)};
}

Fq Fq::inverse() const {
  if (!field) throw ArithmeticError("inverse of zero in F_q");
  return {field, field->inv(v)};
}

Fq specialize_mod_p(const LaurentInt& c, const FiniteField& F) {
  for (const auto& [e, coef] : c.terms())
    if (e < 0 || e % 2 != 0)
      throw ArithmeticError("non-integral element: exponent v^" + std::to_string(e) + " in " + c.str());
  return {&F, F.from_int(static_cast<Int>(c.coeff(0) % F.p()))};
}

}  // namespace prohecke
