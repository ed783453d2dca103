#include "prohecke/hecke.hpp"

#include <climits>
#include <map>

namespace prohecke {

ModPElt specialize(const GenericElt& a, const FiniteField& F) {
  ModPElt out;
  for (const auto& [y, c] : a) out.add(y, specialize_mod_p(c, F));
  return out;
}

bool is_integral(const GenericElt& a) {
  for (const auto& [y, c] : a)
    if (!c.in_Zq()) return false;
  return true;
}

int min_exponent(const GenericElt& a) {
  int m = INT_MAX;
  for (const auto& [y, c] : a) m = std::min(m, c.min_exp());
  return m;
}

Fq char_value(const TameGroup& G, const FiniteField& F, const TorusCharacter& xi, const Vec& t) {
  return {&F, F.exp(G.char_eval(xi, t))};
}

ModPElt epsilon(const TameGroup& G, const FiniteField& F, const TorusCharacter& xi) {
  // |T|^{-1} = (q-1)^{-r} = (-1)^r in F_q.
  const int r = G.datum().rank();
  Fq sign{&F, r % 2 ? F.neg(1) : 1};
  ModPElt out;
  for (const Vec& t : G.all_torus_points()) {
    Fq val{&F, F.exp(-G.char_eval(xi, t))};
    out.add(G.torus(t), sign * val);
  }
  return out;
}

namespace {

template <class Ring>
std::vector<std::pair<ExtWeylElt, HeckeElt<typename Ring::Scalar>>> decompose_impl(
    const HeckeAlgebra<Ring>& H, const HeckeElt<typename Ring::Scalar>& a, Facet F) {
  const TameGroup& G = H.group();
  const WeylGroup& W = G.weyl();
  std::vector<std::pair<ExtWeylElt, HeckeElt<typename Ring::Scalar>>> out;
  std::unordered_map<ExtWeylElt, std::size_t, ExtWeylHash> slot;
  for (const auto& [y, c] : a) {
    auto [u, d] = coset_factor(W, y.x, F);
    TameElt ut = G.mul(y, G.inverse(G.lift(d)));
    auto [it, fresh] = slot.emplace(d, out.size());
    if (fresh) out.emplace_back(d, HeckeElt<typename Ring::Scalar>{});
    out[it->second].second.add(ut, c);
  }
  return out;
}

}  // namespace

std::vector<std::pair<ExtWeylElt, ModPElt>> finite_decompose(const ModPHecke& H, const ModPElt& a, Facet F) {
  return decompose_impl(H, a, F);
}

std::vector<std::pair<ExtWeylElt, GenericElt>> finite_decompose(const GenericHecke& H, const GenericElt& a,
                                                                Facet F) {
  return decompose_impl(H, a, F);
}

}  // namespace prohecke
