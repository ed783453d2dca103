#include "prohecke/tame.hpp"

#include <algorithm>

namespace prohecke {

TameGroup::TameGroup(const WeylGroup& W) : W_(&W), m_(W.datum().q() - 1) {
  const int N = W.size();
  cocycle_.resize(static_cast<std::size_t>(N) * N);
  for (int w = 0; w < N; ++w)
    for (int wp = 0; wp < N; ++wp) {
      TameElt s{torus_zero(), W.finite(static_cast<WeylId>(w))};
      for (int i : W.word(static_cast<WeylId>(wp))) s = right_simple(s, i);
      cocycle_[w * N + wp] = s.t;
    }
}

Vec TameGroup::minus_one(const Vec& coroot) const {
  if (datum().q() % 2 == 0) return torus_zero();
  return reduce(coroot * (m_ / 2));
}

std::vector<Vec> TameGroup::coroot_torus(const Vec& coroot) const {
  std::vector<Vec> out;
  for (Int a = 0; a < m_; ++a) out.push_back(reduce(coroot * a));
  return out;
}

std::vector<Vec> TameGroup::all_torus_points() const {
  const int r = datum().rank();
  std::vector<Vec> out;
  Vec t = Vec::Zero(r);
  for (;;) {
    out.push_back(t);
    int i = 0;
    for (; i < r; ++i) {
      if (++t(i) < m_) break;
      t(i) = 0;
    }
    if (i == r) break;
  }
  return out;
}

TameElt TameGroup::right_simple(const TameElt& a, int i) const {
  const WeylGroup& W = *W_;
  WeylId s = W.simple(i);
  WeylId us = W.mul(a.x.w, s);
  TameElt out{a.t, {us, W.act_coweight(s, a.x.lam)}};
  if (W.length(us) < W.length(a.x.w))
    out.t = reduce(out.t + W.act_coweight(us, minus_one(datum().simple_coroot(i))));
  return out;
}

TameElt TameGroup::root_lift(int root) const {
  const WeylGroup& W = *W_;
  WeylId best = 0;
  int best_i = -1;
  for (int w = 0; w < W.size(); ++w)
    for (int i = 0; i < datum().num_simple(); ++i)
      if (W.act_root(static_cast<WeylId>(w), i) == root &&
          (best_i < 0 || W.length(static_cast<WeylId>(w)) < W.length(best))) {
        best = static_cast<WeylId>(w);
        best_i = i;
      }
  if (best_i < 0) throw DomainError("root is not conjugate to a simple root");
  TameElt lw = lift(W.finite(best));
  return mul(mul(lw, lift(W.finite(W.simple(best_i)))), inverse(lw));
}

TameElt TameGroup::lift_along(const std::vector<int>& word) const {
  TameElt s = identity();
  for (int i : word) s = right_simple(s, i);
  return s;
}

TameElt TameGroup::mul(const TameElt& a, const TameElt& b) const {
  const WeylGroup& W = *W_;
  Vec t = a.t + W.act_coweight(a.x.w, b.t) + cocycle(a.x.w, b.x.w);
  return {reduce(t), W.mul(a.x, b.x)};
}

TameElt TameGroup::inverse(const TameElt& a) const {
  const WeylGroup& W = *W_;
  WeylId wi = W.inv(a.x.w);
  Vec s = W.act_coweight(wi, -a.t - cocycle(a.x.w, wi));
  return {reduce(s), W.inverse(a.x)};
}

TameElt TameGroup::pow(const TameElt& a, int k) const {
  TameElt out = identity();
  TameElt base = k < 0 ? inverse(a) : a;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = mul(out, base);
  return out;
}

TorusCharacter TameGroup::act_char(WeylId w, const TorusCharacter& xi) const {
  Mat m = W_->coweight_matrix(W_->inv(w));
  return {reduce(m.transpose() * xi.exps)};
}

std::uint32_t TameGroup::char_stabilizer(const TorusCharacter& xi) const {
  std::uint32_t mask = 0;
  for (int i = 0; i < datum().num_simple(); ++i)
    if (act_char(W_->simple(i), xi) == xi) mask |= 1u << i;
  return mask;
}

std::uint32_t TameGroup::char_coroot_trivial(const TorusCharacter& xi) const {
  std::uint32_t mask = 0;
  for (int i = 0; i < datum().num_simple(); ++i)
    if (char_eval(xi, reduce(datum().simple_coroot(i))) == 0) mask |= 1u << i;
  return mask;
}

std::vector<TorusCharacter> TameGroup::all_characters() const {
  std::vector<TorusCharacter> out;
  for (const Vec& e : all_torus_points()) out.push_back({e});
  return out;
}

}  // namespace prohecke
