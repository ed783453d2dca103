#pragma once

#include "prohecke/hecke.hpp"

#include <string>
#include <vector>

namespace prohecke {

struct BernsteinElt {
  Facet F;
  Sign sign;
  TameElt lam;  // trivial finite part
  GenericElt value;
};

/// Theta and B maps for one standard facet, over the full generic ring.
class BernsteinMaps {
 public:
  BernsteinMaps(const GenericHecke& H, Facet F);

  Facet facet() const { return F_; }
  const GenericHecke& hecke() const { return *H_; }

  bool in_chamber(const Vec& lam, Sign sign) const { return chamber_member(H_->system().datum(), lam, F_, sign); }
  /// w_F applied to the sum of positive coroots, negated for the minus sign.
  Vec interior_point(Sign sign) const;
  /// Valid auxiliaries nu for lam: nu and lam + nu both in the chamber.
  std::vector<Vec> auxiliaries(const Vec& lam, Sign sign, int count) const;
  /// The auxiliary of least length among the standard candidates.
  Vec auxiliary(const Vec& lam, Sign sign) const;

  GenericElt theta(const TameElt& lam, Sign sign) const { return theta(lam, sign, auxiliary(lam.x.lam, sign)); }
  GenericElt theta(const TameElt& lam, Sign sign, const Vec& nu) const;
  /// Integral renormalization; throws ArithmeticError if a coefficient leaves Z[q].
  BernsteinElt bernstein(const TameElt& lam, Sign sign) const;
  BernsteinElt bernstein(const Vec& lam, Sign sign) const;

 private:

  const GenericHecke* H_;
  Facet F_;
};

/// iota(B^+(lam)) = (-1)^{l(e^lam)} B^-(lam).
bool iota_swap_check(const BernsteinMaps& B, const TameElt& lam);

enum class Membership { InQH, InTauH, Fails };

struct CommutationEntry {
  std::string clause;  // a, a', b, b'
  Int pairing = 0;     // <lam, alpha>
  bool ok = false;
};

/// The four membership clauses for dominant lam and a simple root alpha.
std::vector<CommutationEntry> commutation_report(const BernsteinMaps& B, const TameElt& lam, int alpha);

struct LeviCheck {
  bool equal = false;
  bool leading_ok = false;
  bool support_ok = false;  // every term F-positive and F-below e^lam, coefficients in Z[q]
  std::string detail;
};

/// j_F^+((-1)^{l_F} iota^F(tau^F_{e^lam})) against B_F^+(lam), computed in the Levi ring of F.
LeviCheck levi_compat_check(const BernsteinMaps& B, const GenericHecke& levi, const TameElt& lam);

bool in_qHZ(const GenericElt& a);

}  // namespace prohecke
