#include "prohecke/bernstein.hpp"

#include <algorithm>
#include <sstream>

namespace prohecke {

BernsteinMaps::BernsteinMaps(const GenericHecke& H, Facet F) : H_(&H), F_(F) {}

Vec BernsteinMaps::interior_point(Sign sign) const {
  const WeylGroup& W = H_->group().weyl();
  const RootDatum& d = W.datum();
  Vec rho = Vec::Zero(d.rank());
  for (int a = 0; a < d.num_positive(); ++a) rho += d.roots()[a].coroot;
  Vec nu = W.act_coweight(W.longest_in(F_), rho);
  return sign == Sign::Plus ? nu : Vec(-nu);
}

std::vector<Vec> BernsteinMaps::auxiliaries(const Vec& lam, Sign sign, int count) const {
  const WeylGroup& W = H_->group().weyl();
  Vec nu0 = interior_point(sign);
  std::vector<Vec> cands;
  for (const Vec& shift : {Vec(Vec::Zero(lam.size())), Vec(-lam)}) {
    int found = 0;
    for (int k = 0; k < 64 && found < count; ++k) {
      Vec nu = shift + k * nu0;
      if (in_chamber(nu, sign) && in_chamber(lam + nu, sign)) {
        if (std::none_of(cands.begin(), cands.end(), [&](const Vec& c) { return same(c, nu); }))
          cands.push_back(nu);
        ++found;
      }
    }
  }
  std::stable_sort(cands.begin(), cands.end(), [&](const Vec& a, const Vec& b) {
    int la = W.length(W.translation(a)), lb = W.length(W.translation(b));
    return la != lb ? la < lb : lex_less(a, b);
  });
  if (static_cast<int>(cands.size()) > count) cands.resize(count);
  return cands;
}

Vec BernsteinMaps::auxiliary(const Vec& lam, Sign sign) const {
  auto c = auxiliaries(lam, sign, 1);
  if (c.empty()) throw DomainError("no auxiliary coweight found for " + to_string(lam));
  return c.front();
}

GenericElt BernsteinMaps::theta(const TameElt& lam, Sign sign, const Vec& nu) const {
  const TameGroup& G = H_->group();
  const WeylGroup& W = G.weyl();
  if (lam.x.w != W.identity()) throw DomainError("theta expects a torus-decorated translation");
  if (!in_chamber(nu, sign) || !in_chamber(lam.x.lam + nu, sign))
    throw DomainError("auxiliary " + to_string(nu) + " is not admissible for " + to_string(lam.x.lam));
  Vec top = lam.x.lam + nu;
  int e = W.length(W.translation(nu)) - W.length(W.translation(top));
  TameElt head{lam.t, W.translation(top)};
  GenericElt prod = H_->right_mul_inverse(H_->tau(head), G.lift(W.translation(nu)));
  return prod.scaled(LaurentInt::v(e));
}

BernsteinElt BernsteinMaps::bernstein(const TameElt& lam, Sign sign) const {
  const WeylGroup& W = H_->group().weyl();
  GenericElt th = theta(lam, sign);
  GenericElt val = th.scaled(LaurentInt::v(W.length(lam.x)));
  for (const auto& [y, c] : val)
    if (!c.in_Zq()) {
      std::ostringstream os;
      os << "B_F(" << to_string(lam.x.lam) << ") has non-integral coefficient " << c.str() << " at (w=" << y.x.w
         << ", lam=" << to_string(y.x.lam) << ")";
      throw ArithmeticError(os.str());
    }
  return {F_, sign, lam, std::move(val)};
}

BernsteinElt BernsteinMaps::bernstein(const Vec& lam, Sign sign) const {
  const TameGroup& G = H_->group();
  return bernstein(G.lift(G.weyl().translation(lam)), sign);
}

bool in_qHZ(const GenericElt& a) {
  for (const auto& [y, c] : a)
    if (!c.in_qZq()) return false;
  return true;
}

bool iota_swap_check(const BernsteinMaps& B, const TameElt& lam) {
  const GenericHecke& H = B.hecke();
  GenericElt lhs = H.iota(B.bernstein(lam, Sign::Plus).value);
  GenericElt rhs = B.bernstein(lam, Sign::Minus).value;
  if (H.group().weyl().length(lam.x) % 2) rhs = -rhs;
  return lhs == rhs;
}

std::vector<CommutationEntry> commutation_report(const BernsteinMaps& B, const TameElt& lam, int alpha) {
  const GenericHecke& H = B.hecke();
  const RootDatum& d = H.system().datum();
  if (!d.is_dominant(lam.x.lam)) throw DomainError("commutation clauses need a dominant coweight");
  if (H.system().facet() != d.full_facet()) throw DomainError("commutation clauses need the full ring");
  const TameElt& n = H.simple_lift(alpha);
  Int m = d.pair(lam.x.lam, alpha);
  GenericElt tn = H.tau(n);
  GenericElt tstar = H.tau_star(n);
  GenericElt bplus = B.bernstein(lam, Sign::Plus).value;
  GenericElt bminus = B.bernstein(lam, Sign::Minus).value;

  // For m = 0: membership in tau H_Z via tau^{-1} X, in tau* H_Z via q^{-1} tau X.
  auto check = [&](const GenericElt& X, bool star) {
    if (m > 0) return in_qHZ(X);
    GenericElt y = star ? H.mul(tn, X).scaled(LaurentInt::q(-1)) : H.mul(H.tau_inverse(n), X);
    return is_integral(y);
  };
  std::vector<CommutationEntry> out;
  if (B.facet().contains(alpha)) {
    out.push_back({"a", m, check(H.mul(bminus, tstar), true)});
    out.push_back({"a'", m, check(H.mul(bplus, tn), false)});
  } else {
    out.push_back({"b", m, check(H.mul(bminus, tn), false)});
    out.push_back({"b'", m, check(H.mul(bplus, tstar), true)});
  }
  return out;
}

LeviCheck levi_compat_check(const BernsteinMaps& B, const GenericHecke& levi, const TameElt& lam) {
  const WeylGroup& W = levi.group().weyl();
  const AffineSystem& SF = levi.system();
  const Facet F = SF.facet();
  LeviCheck out;
  GenericElt lhs = levi.iota(levi.tau(lam));
  if (SF.length(lam.x) % 2) lhs = -lhs;
  out.leading_ok = lhs.coeff(lam) == LaurentInt(1);
  out.support_ok = true;
  for (const auto& [y, c] : lhs) {
    bool ok = c.in_Zq() && f_positive(W, y.x, F) && SF.bruhat_leq(y.x, lam.x);
    if (!ok) {
      out.support_ok = false;
      out.detail = "support element (w=" + std::to_string(y.x.w) + ", lam=" + to_string(y.x.lam) +
                   ") violates the triangularity clause";
      break;
    }
  }
  if (!out.support_ok) return out;
  GenericElt image = j_F_plus(W, F, lhs);
  out.equal = image == B.bernstein(lam, Sign::Plus).value;
  if (!out.equal) out.detail = "j_F^+ image differs from B_F^+";
  return out;
}

}  // namespace prohecke
