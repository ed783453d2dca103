#pragma once

#include "prohecke/bernstein.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace prohecke {

/// Character of the finite Hecke algebra: torus character plus the set of simple roots
/// whose generator acts by zero although the torus character allows -1.
struct HeckeCharacter {
  TorusCharacter xi;
  std::uint32_t pi_xibar = 0;
  std::uint32_t pi_chi = 0;
  Facet facet() const { return {pi_chi}; }
};

/// Simple roots alpha with xi trivial on the image of the coroot of alpha.
std::uint32_t character_support(const TameGroup& G, const TorusCharacter& xi);
std::vector<HeckeCharacter> enumerate_characters(const TameGroup& G);

/// Value on tau_u for u in the finite part (translation part zero).
Fq chi_value(const TameGroup& G, const FiniteField& F, const HeckeCharacter& chi, const TameElt& u);
Fq chi_generator(const FiniteField& F, const HeckeCharacter& chi, int i);
/// Checks multiplicativity against every basis element times every generator.
bool validate_character(const ModPHecke& H, const FiniteField& F, const HeckeCharacter& chi, std::string* why);
/// The formal character on the Levi part: alpha(t lift(x)) = xi^{-1}(t); true if multiplicative on samples.
bool alpha_multiplicative(const TameGroup& G, const HeckeCharacter& chi);

struct SphericalElt {
  std::unordered_map<ExtWeylElt, Fq, ExtWeylHash> coef;

  void add(const ExtWeylElt& d, const Fq& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coef.try_emplace(d, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) coef.erase(it);
    }
  }
  Fq at(const ExtWeylElt& d) const {
    auto it = coef.find(d);
    return it == coef.end() ? Fq{} : it->second;
  }
  SphericalElt scaled(const Fq& s) const {
    SphericalElt out;
    for (const auto& [d, c] : coef) out.add(d, s * c);
    return out;
  }
  SphericalElt& operator+=(const SphericalElt& o) {
    for (const auto& [d, c] : o.coef) add(d, c);
    return *this;
  }
  friend bool operator==(const SphericalElt& a, const SphericalElt& b) {
    if (a.coef.size() != b.coef.size()) return false;
    for (const auto& [d, c] : a.coef)
      if (!(b.at(d) == c)) return false;
    return true;
  }
};

/// The right module chi (x) H over the distinguished representatives.
class SphericalModule {
 public:
  SphericalModule(const ModPHecke& H, const FiniteField& F, HeckeCharacter chi);

  const HeckeCharacter& character() const { return chi_; }
  SphericalElt basis(const ExtWeylElt& d) const;
  SphericalElt project(const ModPElt& a) const;
  SphericalElt right_act(const SphericalElt& m, const ModPElt& a) const;
  /// Generators of the finite algebra: unit torus points, then tau_{n_i}.
  std::vector<std::pair<ModPElt, Fq>> generators() const;
  bool is_eigenvector(const SphericalElt& m, std::string* why = nullptr) const;

 private:
  const ModPHecke* H_;
  const FiniteField* F_;
  HeckeCharacter chi_;
};

struct SatakeMatrix {
  std::vector<Vec> window;
  std::vector<std::vector<Fq>> M, Minv;
  bool unitriangular = false;
  bool inverse_ok = false;
  bool expansion_ok = false;  // each T_lam equals sum_mu M[lam][mu] f_mu
};

/// Holds the generic and mod p rings of a datum and caches the Bernstein images.
class SatakeEngine {
 public:
  SatakeEngine(const GenericHecke& Hgen, const ModPHecke& Hp, const FiniteField& F);

  const GenericHecke& generic() const { return *Hgen_; }
  const ModPHecke& modp() const { return *Hp_; }
  const FiniteField& field() const { return *F_; }
  const BernsteinMaps& maps(Facet F) const;
  const GenericElt& bernstein_plus(Facet F, const Vec& lam) const;
  const ModPElt& bernstein_plus_modp(Facet F, const Vec& lam) const;

  SphericalElt satake_T(const HeckeCharacter& chi, const Vec& lam) const;
  /// Eigenvector on the layer of mu normalized at e^mu; dim receives the eigenspace dimension.
  std::optional<SphericalElt> f_basis(const HeckeCharacter& chi, const Vec& mu, int* dim) const;
  /// Sum of f_mu over dominant mu below lam for the facet of chi.
  /// Both sums refuse data whose derived subgroup is not simply connected unless forced.
  SphericalElt sum_A(const HeckeCharacter& chi, const Vec& lam, bool force = false) const;
  /// Sum of the projections of tau_d over d in W_F cap D_F with d <=_F e^lam.
  SphericalElt sum_B(const HeckeCharacter& chi, const Vec& lam, bool force = false) const;
  SatakeMatrix satake_matrix(const HeckeCharacter& chi, const std::vector<Vec>& window) const;
  /// (-1)^l eps_1 iota(tau_w) = sum_{v <= w} eps_1 tau_v in the mod p ring.
  bool iota_expansion_check(const ExtWeylElt& w) const;

 private:
  struct Projected {
    ExtWeylElt d;
    TameElt u;
    Fq c;
  };
  const std::vector<Projected>& projected_bernstein(Facet F, const Vec& lam) const;

  const GenericHecke* Hgen_;
  const ModPHecke* Hp_;
  const FiniteField* F_;
  mutable std::map<std::uint32_t, std::unique_ptr<BernsteinMaps>> maps_;
  mutable std::map<std::pair<std::uint32_t, std::vector<Int>>, GenericElt> bplus_;
  mutable std::map<std::pair<std::uint32_t, std::vector<Int>>, ModPElt> bplus_p_;
  mutable std::map<std::pair<std::uint32_t, std::vector<Int>>, std::vector<Projected>> proj_;
};

/// Nullspace over F_q of the matrix (rows x cols), as a basis of column vectors.
std::vector<std::vector<Fq>> nullspace(const FiniteField& F, std::vector<std::vector<Fq>> rows, int cols);
/// Inverse by Gauss-Jordan; nullopt if singular.
std::optional<std::vector<std::vector<Fq>>> invert(const FiniteField& F, std::vector<std::vector<Fq>> M);

}  // namespace prohecke
