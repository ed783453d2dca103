#include "prohecke/satake.hpp"

#include <sstream>

namespace prohecke {

std::uint32_t character_support(const TameGroup& G, const TorusCharacter& xi) {
  return G.char_coroot_trivial(xi);
}

std::vector<HeckeCharacter> enumerate_characters(const TameGroup& G) {
  std::vector<HeckeCharacter> out;
  for (const TorusCharacter& xi : G.all_characters()) {
    std::uint32_t bar = character_support(G, xi);
    // All subsets of bar, in increasing order of the mask.
    for (std::uint32_t sub = 0;; sub = (sub - bar) & bar) {
      out.push_back({xi, bar, sub});
      if (sub == bar) break;
    }
  }
  return out;
}

Fq chi_generator(const FiniteField& F, const HeckeCharacter& chi, int i) {
  bool minus = ((chi.pi_xibar >> i) & 1u) && !((chi.pi_chi >> i) & 1u);
  return {&F, minus ? F.neg(1) : 0};
}

Fq chi_value(const TameGroup& G, const FiniteField& F, const HeckeCharacter& chi, const TameElt& u) {
  if (!(u.x.lam.array() == 0).all()) throw DomainError("character evaluated outside the finite part");
  Fq val = char_value(G, F, chi.xi, u.t);
  for (int i : G.weyl().word(u.x.w)) val *= chi_generator(F, chi, i);
  return val;
}

namespace {

Fq evaluate(const TameGroup& G, const FiniteField& F, const HeckeCharacter& chi, const ModPElt& a) {
  Fq out{&F, 0};
  for (const auto& [y, c] : a) out += c * chi_value(G, F, chi, y);
  return out;
}

std::vector<Vec> torus_generators(const TameGroup& G) {
  std::vector<Vec> out;
  if (G.modulus() == 1) return out;
  for (int j = 0; j < G.datum().rank(); ++j) {
    Vec e = G.torus_zero();
    e(j) = 1;
    out.push_back(e);
  }
  return out;
}

}  // namespace

bool validate_character(const ModPHecke& H, const FiniteField& F, const HeckeCharacter& chi, std::string* why) {
  const TameGroup& G = H.group();
  const WeylGroup& W = G.weyl();
  if ((chi.pi_chi & ~chi.pi_xibar) != 0) {
    if (why) *why = "pi_chi is not contained in pi_xibar";
    return false;
  }
  std::vector<std::pair<ModPElt, Fq>> gens;
  for (const Vec& t : torus_generators(G)) gens.emplace_back(H.tau(G.torus(t)), char_value(G, F, chi.xi, t));
  for (int i = 0; i < G.datum().num_simple(); ++i)
    gens.emplace_back(H.tau(H.simple_lift(i)), chi_generator(F, chi, i));
  for (int w = 0; w < W.size(); ++w) {
    TameElt u = G.lift(W.finite(static_cast<WeylId>(w)));
    Fq cu = chi_value(G, F, chi, u);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Fq lhs = evaluate(G, F, chi, H.mul(H.tau(u), gens[g].first));
      if (!(lhs == cu * gens[g].second)) {
        if (why) {
          std::ostringstream os;
          os << "chi(tau_u * g) != chi(tau_u) chi(g) for w=" << w << ", generator " << g;
          *why = os.str();
        }
        return false;
      }
    }
  }
  return true;
}

bool alpha_multiplicative(const TameGroup& G, const HeckeCharacter& chi) {
  const WeylGroup& W = G.weyl();
  const Int m = G.modulus();
  auto alpha = [&](const TameElt& u) { return floor_mod(-G.char_eval(chi.xi, u.t), m); };
  std::vector<TameElt> sample;
  for (WeylId w : W.parabolic(chi.facet())) {
    sample.push_back(G.lift(W.finite(w)));
    for (const Vec& t : torus_generators(G)) sample.push_back({t, W.finite(w)});
  }
  for (int j = 0; j < G.datum().rank(); ++j) {
    Vec e = Vec::Zero(G.datum().rank());
    e(j) = 1;
    sample.push_back(G.lift(W.translation(e)));
  }
  for (const auto& a : sample)
    for (const auto& b : sample)
      if (floor_mod(alpha(a) + alpha(b), m) != alpha(G.mul(a, b))) return false;
  return true;
}

SphericalModule::SphericalModule(const ModPHecke& H, const FiniteField& F, HeckeCharacter chi)
    : H_(&H), F_(&F), chi_(std::move(chi)) {}

SphericalElt SphericalModule::basis(const ExtWeylElt& d) const {
  SphericalElt out;
  out.add(d, {F_, 1});
  return out;
}

SphericalElt SphericalModule::project(const ModPElt& a) const {
  const TameGroup& G = H_->group();
  const WeylGroup& W = G.weyl();
  const Facet full = W.datum().full_facet();
  SphericalElt out;
  for (const auto& [y, c] : a) {
    auto [u, d] = coset_factor(W, y.x, full);
    TameElt ut = G.mul(y, G.inverse(G.lift(d)));
    out.add(d, c * chi_value(G, *F_, chi_, ut));
  }
  return out;
}

SphericalElt SphericalModule::right_act(const SphericalElt& m, const ModPElt& a) const {
  const TameGroup& G = H_->group();
  SphericalElt out;
  for (const auto& [d, c] : m.coef) out += project(H_->mul(H_->tau(G.lift(d)), a)).scaled(c);
  return out;
}

std::vector<std::pair<ModPElt, Fq>> SphericalModule::generators() const {
  const TameGroup& G = H_->group();
  std::vector<std::pair<ModPElt, Fq>> gens;
  for (const Vec& t : torus_generators(G)) gens.emplace_back(H_->tau(G.torus(t)), char_value(G, *F_, chi_.xi, t));
  for (int i = 0; i < G.datum().num_simple(); ++i)
    gens.emplace_back(H_->tau(H_->simple_lift(i)), chi_generator(*F_, chi_, i));
  return gens;
}

bool SphericalModule::is_eigenvector(const SphericalElt& m, std::string* why) const {
  auto gens = generators();
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (!(right_act(m, gens[g].first) == m.scaled(gens[g].second))) {
      if (why) *why = "eigenvector relation fails for generator " + std::to_string(g);
      return false;
    }
  return true;
}

SatakeEngine::SatakeEngine(const GenericHecke& Hgen, const ModPHecke& Hp, const FiniteField& F)
    : Hgen_(&Hgen), Hp_(&Hp), F_(&F) {}

const BernsteinMaps& SatakeEngine::maps(Facet F) const {
  auto& slot = maps_[F.mask];
  if (!slot) slot = std::make_unique<BernsteinMaps>(*Hgen_, F);
  return *slot;
}

const GenericElt& SatakeEngine::bernstein_plus(Facet F, const Vec& lam) const {
  auto key = std::make_pair(F.mask, to_std(lam));
  auto it = bplus_.find(key);
  if (it != bplus_.end()) return it->second;
  return bplus_.emplace(key, maps(F).bernstein(lam, Sign::Plus).value).first->second;
}

const ModPElt& SatakeEngine::bernstein_plus_modp(Facet F, const Vec& lam) const {
  auto key = std::make_pair(F.mask, to_std(lam));
  auto it = bplus_p_.find(key);
  if (it != bplus_p_.end()) return it->second;
  return bplus_p_.emplace(key, specialize(bernstein_plus(F, lam), *F_)).first->second;
}

const std::vector<SatakeEngine::Projected>& SatakeEngine::projected_bernstein(Facet F, const Vec& lam) const {
  auto key = std::make_pair(F.mask, to_std(lam));
  auto it = proj_.find(key);
  if (it != proj_.end()) return it->second;
  const TameGroup& G = Hp_->group();
  const WeylGroup& W = G.weyl();
  std::vector<Projected> out;
  for (const auto& [y, c] : bernstein_plus_modp(F, lam)) {
    auto [u, d] = coset_factor(W, y.x, W.datum().full_facet());
    out.push_back({d, G.mul(y, G.inverse(G.lift(d))), c});
  }
  return proj_.emplace(key, std::move(out)).first->second;
}

SphericalElt SatakeEngine::satake_T(const HeckeCharacter& chi, const Vec& lam) const {
  if (!Hp_->system().datum().is_dominant(lam)) throw DomainError("satake_T needs a dominant coweight");
  const TameGroup& G = Hp_->group();
  SphericalElt out;
  for (const auto& p : projected_bernstein(chi.facet(), lam)) out.add(p.d, p.c * chi_value(G, *F_, chi, p.u));
  return out;
}

std::optional<SphericalElt> SatakeEngine::f_basis(const HeckeCharacter& chi, const Vec& mu, int* dim) const {
  const WeylGroup& W = Hp_->group().weyl();
  SphericalModule mod(*Hp_, *F_, chi);
  auto layer = D_in_double_coset(W, W.datum().full_facet(), mu);
  std::unordered_map<ExtWeylElt, int, ExtWeylHash> col;
  for (std::size_t k = 0; k < layer.size(); ++k) col[layer[k]] = static_cast<int>(k);
  auto gens = mod.generators();

  // One block of rows per generator, indexed by the output coordinate.
  std::vector<std::vector<Fq>> rows;
  for (const auto& [g, val] : gens) {
    std::unordered_map<ExtWeylElt, int, ExtWeylHash> row;
    std::vector<std::vector<Fq>> block;
    for (std::size_t k = 0; k < layer.size(); ++k) {
      SphericalElt img = mod.right_act(mod.basis(layer[k]), g);
      img.add(layer[k], -val);
      for (const auto& [d, c] : img.coef) {
        auto [it, fresh] = row.emplace(d, static_cast<int>(block.size()));
        if (fresh) block.emplace_back(layer.size(), Fq{F_, 0});
        block[it->second][k] += c;
      }
    }
    rows.insert(rows.end(), block.begin(), block.end());
  }
  auto ns = nullspace(*F_, rows, static_cast<int>(layer.size()));
  if (dim) *dim = static_cast<int>(ns.size());
  if (ns.size() != 1) return std::nullopt;
  int pivot = col.at(W.translation(mu));
  if (ns[0][pivot].is_zero()) return std::nullopt;
  Fq scale = ns[0][pivot].inverse();
  SphericalElt out;
  for (std::size_t k = 0; k < layer.size(); ++k) out.add(layer[k], ns[0][k] * scale);
  return out;
}

namespace {

void require_simply_connected(const RootDatum& d) {
  if (!d.derived_simply_connected())
    throw DomainError("hypothesis not satisfied: derived subgroup not simply connected");
}

}  // namespace

SphericalElt SatakeEngine::sum_A(const HeckeCharacter& chi, const Vec& lam, bool force) const {
  const RootDatum& d = Hp_->system().datum();
  if (!force) require_simply_connected(d);
  SphericalElt out;
  for (const Vec& mu : d.dominant_below(lam, chi.facet())) {
    int dim = 0;
    auto f = f_basis(chi, mu, &dim);
    if (!f) throw DomainError("eigenspace on layer " + to_string(mu) + " has dimension " + std::to_string(dim));
    out += *f;
  }
  return out;
}

SphericalElt SatakeEngine::sum_B(const HeckeCharacter& chi, const Vec& lam, bool force) const {
  const TameGroup& G = Hp_->group();
  if (!force) require_simply_connected(G.datum());
  const WeylGroup& W = G.weyl();
  AffineSystem SF(W, chi.facet());
  SphericalModule mod(*Hp_, *F_, chi);
  SphericalElt out;
  for (const auto& d : SF.lower_interval(W.translation(lam)))
    if (in_D(W, d, chi.facet())) out += mod.project(Hp_->tau(G.lift(d)));
  return out;
}

SatakeMatrix SatakeEngine::satake_matrix(const HeckeCharacter& chi, const std::vector<Vec>& window) const {
  const RootDatum& d = Hp_->system().datum();
  const WeylGroup& W = Hp_->group().weyl();
  const Facet F = chi.facet();
  auto index_of = [&](const Vec& v) {
    for (std::size_t k = 0; k < window.size(); ++k)
      if (same(window[k], v)) return static_cast<int>(k);
    return -1;
  };
  for (const Vec& lam : window)
    for (const Vec& mu : d.dominant_below(lam, F))
      if (index_of(mu) < 0)
        throw DomainError("window is not closed downward: " + to_string(mu) + " below " + to_string(lam));
  SatakeMatrix out;
  out.window = window;
  const std::size_t n = window.size();
  Fq zero{F_, 0}, one{F_, 1};
  out.M.assign(n, std::vector<Fq>(n, zero));
  std::vector<SphericalElt> T(n), f(n);
  for (std::size_t i = 0; i < n; ++i) {
    T[i] = satake_T(chi, window[i]);
    int dim = 0;
    auto fi = f_basis(chi, window[i], &dim);
    if (!fi) throw DomainError("eigenspace on layer " + to_string(window[i]) + " has dimension " + std::to_string(dim));
    f[i] = *fi;
  }
  out.unitriangular = true;
  out.expansion_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    SphericalElt recon;
    for (std::size_t j = 0; j < n; ++j) {
      out.M[i][j] = T[i].at(W.translation(window[j]));
      if (i == j && !(out.M[i][j] == one)) out.unitriangular = false;
      if (i != j && !out.M[i][j].is_zero() && !d.preceq(window[j], window[i], F)) out.unitriangular = false;
      recon += f[j].scaled(out.M[i][j]);
    }
    if (!(recon == T[i])) out.expansion_ok = false;
  }
  auto inv = invert(*F_, out.M);
  if (inv) {
    out.Minv = *inv;
    out.inverse_ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Fq s = zero;
        for (std::size_t k = 0; k < n; ++k) s += out.M[i][k] * out.Minv[k][j];
        if (!(s == (i == j ? one : zero))) out.inverse_ok = false;
      }
  }
  return out;
}

bool SatakeEngine::iota_expansion_check(const ExtWeylElt& w) const {
  const TameGroup& G = Hp_->group();
  const AffineSystem& S = Hp_->system();
  ModPElt eps = epsilon(G, *F_, TorusCharacter{G.torus_zero()});
  GenericElt eps_w;
  const Int sign = G.datum().rank() % 2 ? -1 : 1;
  for (const Vec& t : G.all_torus_points()) eps_w.add(G.mul(G.torus(t), G.lift(w)), LaurentInt(sign));
  GenericElt io = Hgen_->iota(eps_w);
  if (S.length(w) % 2) io = -io;
  auto left_eps = [&](const ModPElt& x) {
    ModPElt out;
    for (const auto& [t, c1] : eps)
      for (const auto& [y, c2] : x) out.add(G.mul(t, y), c1 * c2);
    return out;
  };
  ModPElt lhs = specialize(io, *F_);
  ModPElt sum;
  for (const auto& v : S.lower_interval(w)) sum.add(G.lift(v), {F_, 1});
  return lhs == left_eps(sum);
}

std::vector<std::vector<Fq>> nullspace(const FiniteField& F, std::vector<std::vector<Fq>> rows, int cols) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Fq inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].is_zero()) continue;
      Fq factor = rows[k][c];
      for (int j = 0; j < cols; ++j) rows[k][j] -= factor * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Fq>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fq> v(cols, Fq{&F, 0});
    v[free] = {&F, 1};
    for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -rows[k][free];
    basis.push_back(v);
  }
  return basis;
}

std::optional<std::vector<std::vector<Fq>>> invert(const FiniteField& F, std::vector<std::vector<Fq>> M) {
  const std::size_t n = M.size();
  std::vector<std::vector<Fq>> I(n, std::vector<Fq>(n, Fq{&F, 0}));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = {&F, 1};
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && M[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(M[p], M[c]);
    std::swap(I[p], I[c]);
    Fq inv = M[c][c].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      M[c][j] *= inv;
      I[c][j] *= inv;
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (k == c || M[k][c].is_zero()) continue;
      Fq factor = M[k][c];
      for (std::size_t j = 0; j < n; ++j) {
        M[k][j] -= factor * M[c][j];
        I[k][j] -= factor * I[c][j];
      }
    }
  }
  return I;
}

}  // namespace prohecke
