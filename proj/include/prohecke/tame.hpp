#pragma once

#include "prohecke/weyl.hpp"

#include <vector>

namespace prohecke {

/// t * lift(x), with t in discrete-log coordinates mod q-1.
struct TameElt {
  Vec t;
  ExtWeylElt x;
};

inline bool operator==(const TameElt& a, const TameElt& b) { return same(a.t, b.t) && a.x == b.x; }

struct TameHash {
  std::size_t operator()(const TameElt& e) const { return hash_vec(e.t, ExtWeylHash{}(e.x)); }
};

struct TorusCharacter {
  Vec exps;  // mod q-1
};

inline bool operator==(const TorusCharacter& a, const TorusCharacter& b) { return same(a.exps, b.exps); }

class TameGroup {
 public:
  explicit TameGroup(const WeylGroup& W);

  const WeylGroup& weyl() const { return *W_; }
  const RootDatum& datum() const { return W_->datum(); }
  /// Order of the multiplicative group of the residue field.
  Int modulus() const { return m_; }

  Vec torus_zero() const { return Vec::Zero(datum().rank()); }
  Vec reduce(const Vec& t) const { return reduce_mod(t, m_); }
  Vec act_torus(WeylId w, const Vec& t) const { return reduce(W_->act_coweight(w, t)); }
  /// coroot(-1) as a torus point.
  Vec minus_one(const Vec& coroot) const;
  /// coroot (x) a for a in Z/(q-1), with repetitions when the coroot is not injective.
  std::vector<Vec> coroot_torus(const Vec& coroot) const;
  std::vector<Vec> all_torus_points() const;

  /// Torus part of lift(w) * lift(w').
  const Vec& cocycle(WeylId w, WeylId wp) const { return cocycle_[w * W_->size() + wp]; }

  TameElt identity() const { return {torus_zero(), W_->ext_identity()}; }
  TameElt lift(const ExtWeylElt& x) const { return {torus_zero(), x}; }
  TameElt torus(const Vec& t) const { return {reduce(t), W_->ext_identity()}; }
  TameElt mul(const TameElt& a, const TameElt& b) const;
  /// a * t for a torus point t.
  TameElt mul_torus(const TameElt& a, const Vec& t) const { return {reduce(a.t + W_->act_coweight(a.x.w, t)), a.x}; }
  TameElt inverse(const TameElt& a) const;
  TameElt pow(const TameElt& a, int k) const;

  /// Right action of the simple lift n_i on (t, u) by the letter rewriting rule.
  TameElt right_simple(const TameElt& a, int i) const;
  /// Lift of s_beta lying in the rank one subgroup of beta: lift(w) n_i lift(w)^{-1} with w(alpha_i) = beta.
  /// The canonical lift of s_beta can differ from it by a torus element outside T_beta.
  TameElt root_lift(int root) const;
  /// Product of simple lifts along an arbitrary word, via right_simple.
  TameElt lift_along(const std::vector<int>& word) const;

  // Characters of the finite torus.
  Int char_eval(const TorusCharacter& xi, const Vec& t) const { return floor_mod(xi.exps.dot(t), m_); }
  TorusCharacter act_char(WeylId w, const TorusCharacter& xi) const;
  /// Simple roots i with s_i . xi = xi.
  std::uint32_t char_stabilizer(const TorusCharacter& xi) const;
  /// Simple roots i with xi trivial on the image of the coroot of alpha_i.
  std::uint32_t char_coroot_trivial(const TorusCharacter& xi) const;
  std::vector<TorusCharacter> all_characters() const;

 private:
  const WeylGroup* W_;
  Int m_;
  std::vector<Vec> cocycle_;
};

}  // namespace prohecke
