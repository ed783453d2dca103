#pragma once

#include "prohecke/coeff.hpp"
#include "prohecke/tame.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace prohecke {

template <class Scalar>
class HeckeElt {
 public:
  using Map = std::unordered_map<TameElt, Scalar, TameHash>;

  HeckeElt() = default;
  HeckeElt(const TameElt& y, const Scalar& c) { add(y, c); }

  void add(const TameElt& y, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(y, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  Scalar coeff(const TameElt& y) const {
    auto it = terms_.find(y);
    return it == terms_.end() ? Scalar{} : it->second;
  }
  bool contains(const TameElt& y) const { return terms_.count(y) > 0; }
  std::size_t size() const { return terms_.size(); }
  void reserve(std::size_t n) { terms_.reserve(n); }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  HeckeElt& operator+=(const HeckeElt& o) {
    for (const auto& [y, c] : o.terms_) add(y, c);
    return *this;
  }
  HeckeElt& operator-=(const HeckeElt& o) {
    for (const auto& [y, c] : o.terms_) add(y, -c);
    return *this;
  }
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  HeckeElt operator-() const {
    HeckeElt out;
    for (const auto& [y, c] : terms_) out.terms_.emplace(y, -c);
    return out;
  }
  HeckeElt scaled(const Scalar& s) const {
    HeckeElt out;
    out.terms_.reserve(terms_.size());
    for (const auto& [y, c] : terms_) out.add(y, s * c);
    return out;
  }
  friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [y, c] : a.terms_) {
      auto it = b.terms_.find(y);
      if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }

 private:
  Map terms_;
};

using GenericElt = HeckeElt<LaurentInt>;
using ModPElt = HeckeElt<Fq>;

struct Factorization {
  TameElt omega;             // length zero part
  std::vector<int> letters;  // simple affine roots, left to right
};

/// Hecke ring attached to an affine system; the coefficient ring is a policy.
/// The same code serves the full ring and every Levi ring.
template <class Ring>
class HeckeAlgebra {
 public:
  using Scalar = typename Ring::Scalar;
  using Elt = HeckeElt<Scalar>;

  HeckeAlgebra(const TameGroup& G, const AffineSystem& S, Ring ring) : G_(&G), S_(&S), ring_(ring) {
    for (int A = 0; A < S.num_simple_affine(); ++A) {
      const AffineRoot& ar = S.simple_affine_roots()[A];
      const Vec& cor = S.datum().roots()[ar.root].coroot;
      TameElt n = G.root_lift(ar.root);
      if (ar.level != 0) n = G.mul(n, G.lift(G.weyl().translation(cor * ar.level)));
      if (!(n.x == S.simple_reflection(A))) throw DomainError("simple affine lift does not cover its reflection");
      lift_.push_back(n);
      coroot_.push_back(cor);
      torus_.push_back(G.coroot_torus(cor));
    }
    const Int m = G.modulus();
    std::size_t size = 1;
    for (int k = 0; k < G.datum().rank() && size <= kDenseMax; ++k) size *= static_cast<std::size_t>(m);
    if (size <= kDenseMax)
      for (std::size_t i = 0; i < size; ++i) {
        Vec p = G.torus_zero();
        for (int k = 0, r = static_cast<int>(i); k < p.size(); ++k, r /= static_cast<int>(m)) p[k] = r % m;
        point_.push_back(p);
      }
  }

  const TameGroup& group() const { return *G_; }
  const AffineSystem& system() const { return *S_; }
  const Ring& ring() const { return ring_; }
  /// Products, iota and inverses switch to arrays over the torus when it has at most n points; 0 disables.
  void set_dense_limit(std::size_t n) { dense_limit_ = n; }
  bool dense() const { return !point_.empty() && point_.size() <= dense_limit_; }

  int length(const TameElt& y) const { return S_->length(y.x); }
  const TameElt& simple_lift(int A) const { return lift_[A]; }
  const std::vector<Vec>& simple_torus(int A) const { return torus_[A]; }

  Elt one() const { return tau(G_->identity()); }
  Elt tau(const TameElt& y) const { return Elt(y, ring_.one()); }
  Elt nu(int A) const {
    Elt out;
    for (const Vec& t : torus_[A]) out.add(G_->torus(t), ring_.one());
    return out;
  }

  Factorization factor(const TameElt& y) const {
    ReducedWord rw = S_->reduced_word(y.x);
    TameElt prod = G_->identity();
    for (int A : rw.letters) prod = G_->mul(prod, lift_[A]);
    return {G_->mul(y, G_->inverse(prod)), rw.letters};
  }

  Elt right_mul_length_zero(const Elt& a, const TameElt& omega) const {
    Elt out;
    out.reserve(a.size());
    if (omega.x == G_->weyl().ext_identity())
      for (const auto& [z, c] : a) out.add(G_->mul_torus(z, omega.t), c);
    else
      for (const auto& [z, c] : a) out.add(G_->mul(z, omega), c);
    return out;
  }

  Elt right_mul_generator(const Elt& a, int A) const {
    Elt out;
    out.reserve(2 * a.size());
    const TameElt& n = lift_[A];
    const Scalar q = ring_.q();
    for (const auto& [z, c] : a) {
      TameElt zn = G_->mul(z, n);
      if (!S_->is_descent(z.x, A)) {
        out.add(zn, c);
        continue;
      }
      add_nu(out, z, A, c);
      if (!Ring::is_zero(q)) out.add(zn, q * c);
    }
    return out;
  }

  /// Left multiplication by a generator; only used to cross-check mul.
  Elt left_mul_generator(int A, const Elt& a) const {
    Elt out;
    const TameElt& n = lift_[A];
    const Scalar q = ring_.q();
    const WeylGroup& W = G_->weyl();
    const AffineRoot& root = S_->simple_affine_roots()[A];
    for (const auto& [z, c] : a) {
      TameElt nz = G_->mul(n, z);
      if (W.positive(W.act(W.inverse(z.x), root))) {
        out.add(nz, c);
        continue;
      }
      for (const Vec& t : torus_[A]) out.add(G_->mul(G_->torus(t), z), c);
      if (!Ring::is_zero(q)) out.add(nz, q * c);
    }
    return out;
  }

  Elt mul(const Elt& a, const Elt& b) const {
    if (a.is_zero()) return {};
    if (dense())
      return from_dense(along_words<Dense>(
          b, [&](const ExtWeylElt& omega) { return to_dense(right_mul_length_zero(a, G_->lift(omega))); },
          [&](const Dense& x, int A) { return dense_generator(x, A); }, spread_dense()));
    return along_words<Elt>(
        b, [&](const ExtWeylElt& omega) { return right_mul_length_zero(a, G_->lift(omega)); },
        [&](const Elt& x, int A) { return right_mul_generator(x, A); }, spread_sparse());
  }

  Elt pow(const Elt& a, int k) const {
    Elt out = one();
    for (int i = 0; i < k; ++i) out = mul(out, a);
    return out;
  }

  // The following need q to be invertible.
  Elt generator_inverse(int A) const {
    static_assert(Ring::generic, "inverses of basis elements need the generic ring");
    const TameElt& n = lift_[A];
    TameElt nsq_inv = G_->inverse(G_->mul(n, n));
    Elt out(G_->inverse(n), ring_.q_inverse());
    for (const Vec& t : torus_[A]) out.add(G_->mul(nsq_inv, G_->torus(t)), -ring_.q_inverse());
    return out;
  }

  /// a tau_{n_A}^{-1}, term by term.
  Elt right_mul_generator_inverse(const Elt& a, int A) const {
    static_assert(Ring::generic, "inverses of basis elements need the generic ring");
    Elt out;
    out.reserve(2 * a.size());
    const TameElt n_inv = G_->inverse(lift_[A]);
    const TameElt nsq_inv = G_->inverse(G_->mul(lift_[A], lift_[A]));
    for (const auto& [z, c] : a) {
      TameElt zn = G_->mul(z, n_inv);
      if (S_->is_descent(z.x, A)) {
        out.add(zn, c);
        continue;
      }
      Scalar cq = ring_.q_inverse() * c;
      out.add(zn, cq);
      add_nu(out, G_->mul_torus(z, nsq_inv.t), A, -cq);
    }
    return out;
  }
  /// a tau_y^{-1} without expanding the inverse.
  Elt right_mul_inverse(const Elt& a, const TameElt& y) const {
    Factorization f = factor(y);
    Elt x = a;
    if (dense() && !f.letters.empty()) {
      Dense d = to_dense(a);
      for (auto it = f.letters.rbegin(); it != f.letters.rend(); ++it) d = dense_generator_inverse(d, *it);
      x = from_dense(d);
    } else {
      for (auto it = f.letters.rbegin(); it != f.letters.rend(); ++it) x = right_mul_generator_inverse(x, *it);
    }
    return right_mul_length_zero(x, G_->inverse(f.omega));
  }
  Elt tau_inverse(const TameElt& y) const { return right_mul_inverse(one(), y); }

  Elt tau_star(const TameElt& y) const {
    Elt out = tau_inverse(y).scaled(Scalar::q(length(y)));
    for (const auto& [z, c] : out)
      if (!c.in_Zq())
        throw ArithmeticError("tau* has a non-integral coefficient " + c.str() + " at length " +
                              std::to_string(length(z)));
    return out;
  }

  /// tau_y -> (-1)^{l(y)} tau*_{y^{-1}}. For y = lift(omega) n_1 ... n_k t this is
  /// tau_omega (nu_1 - tau_{n_1}) ... (nu_k - tau_{n_k}) tau_t.
  Elt iota(const Elt& a) const {
    static_assert(Ring::generic, "iota needs the generic ring");
    if (dense())
      return from_dense(along_words<Dense>(
          a, [&](const ExtWeylElt& omega) { return to_dense(tau(G_->lift(omega))); },
          [&](const Dense& x, int A) { return dense_iota_generator(x, A); }, spread_dense()));
    return along_words<Elt>(
        a, [&](const ExtWeylElt& omega) { return tau(G_->lift(omega)); },
        [&](const Elt& x, int A) { return right_mul_iota_generator(x, A); }, spread_sparse());
  }

  /// a (nu_A - tau_{n_A}); on a descent the torus sums cancel.
  Elt right_mul_iota_generator(const Elt& a, int A) const {
    Elt out;
    out.reserve(2 * a.size());
    const TameElt& n = lift_[A];
    const Scalar mq = -ring_.q();
    for (const auto& [z, c] : a) {
      TameElt zn = G_->mul(z, n);
      if (S_->is_descent(z.x, A)) {
        out.add(zn, mq * c);
        continue;
      }
      add_nu(out, z, A, c);
      out.add(zn, -c);
    }
    return out;
  }

 private:
  static constexpr std::size_t kDenseMax = 4096;

  /// Coefficients of t lift(x) for every torus point t, indexed by point_.
  using Block = std::vector<Scalar>;
  using Dense = std::unordered_map<ExtWeylElt, Block, ExtWeylHash>;

  /// Index of p + s for reduced p = point_[i] and reduced s.
  std::size_t shifted(std::size_t i, const Vec& s) const {
    const Int m = G_->modulus();
    const Vec& p = point_[i];
    std::size_t j = 0;
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
      Int v = p[k] + s[k];
      if (v >= m) v -= m;
      j = j * static_cast<std::size_t>(m) + static_cast<std::size_t>(v);
    }
    return j;
  }
  std::size_t index(const Vec& t) const { return shifted(0, t); }

  Block& block(Dense& d, const ExtWeylElt& x) const {
    auto [it, fresh] = d.try_emplace(x);
    if (fresh) it->second.assign(point_.size(), ring_.zero());
    return it->second;
  }
  Dense to_dense(const Elt& a) const {
    Dense d;
    for (const auto& [z, c] : a) block(d, z.x)[index(z.t)] += c;
    return d;
  }
  Elt from_dense(const Dense& d) const {
    Elt out;
    for (const auto& [x, f] : d)
      for (std::size_t i = 0; i < f.size(); ++i)
        if (!Ring::is_zero(f[i])) out.add(TameElt{point_[i], x}, f[i]);
    return out;
  }

  /// dst(t + s) += scale f(t).
  void add_shifted(Block& dst, const Block& f, const Vec& s, const Scalar* scale) const {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (Ring::is_zero(f[i])) continue;
      if (scale)
        dst[shifted(i, s)] += *scale * f[i];
      else
        dst[shifted(i, s)] += f[i];
    }
  }
  /// dst(t) += scale sum_{a mod q-1} f(t - pre - a v). The sum is constant on the cosets of <v>,
  /// so each coset is summed once and the total is spread over it.
  void add_nu_sum(Block& dst, const Block& f, const Vec& v, const Vec& pre, const Scalar& scale) const {
    const Vec back = G_->reduce(-pre);
    const Int m = G_->modulus();
    std::vector<char> seen(f.size(), 0);
    std::vector<std::size_t> cycle;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (seen[i]) continue;
      cycle.clear();
      Scalar sum = ring_.zero();
      for (std::size_t j = i; !seen[j]; j = shifted(j, v)) {
        seen[j] = 1;
        cycle.push_back(j);
        const Scalar& c = f[shifted(j, back)];
        if (!Ring::is_zero(c)) sum += c;
      }
      if (Ring::is_zero(sum)) continue;
      sum = sum * (scale * ring_.from_int(m / static_cast<Int>(cycle.size())));
      for (std::size_t j : cycle) dst[j] += sum;
    }
  }

  Dense dense_generator(const Dense& d, int A) const {
    Dense out;
    const Scalar q = ring_.q(), one = ring_.one();
    const Vec zero = G_->torus_zero();
    for (const auto& [x, f] : d) {
      const TameElt step = G_->mul(TameElt{zero, x}, lift_[A]);
      if (!S_->is_descent(x, A)) {
        add_shifted(block(out, step.x), f, step.t, nullptr);
        continue;
      }
      add_nu_sum(block(out, x), f, G_->act_torus(x.w, coroot_[A]), zero, one);
      if (!Ring::is_zero(q)) add_shifted(block(out, step.x), f, step.t, &q);
    }
    return out;
  }
  Dense dense_generator_inverse(const Dense& d, int A) const {
    Dense out;
    const TameElt n_inv = G_->inverse(lift_[A]);
    const TameElt nsq_inv = G_->inverse(G_->mul(lift_[A], lift_[A]));
    const Scalar qi = ring_.q_inverse(), mqi = -qi;
    const Vec zero = G_->torus_zero();
    for (const auto& [x, f] : d) {
      const TameElt step = G_->mul(TameElt{zero, x}, n_inv);
      if (S_->is_descent(x, A)) {
        add_shifted(block(out, step.x), f, step.t, nullptr);
        continue;
      }
      add_shifted(block(out, step.x), f, step.t, &qi);
      add_nu_sum(block(out, x), f, G_->act_torus(x.w, coroot_[A]), G_->act_torus(x.w, nsq_inv.t), mqi);
    }
    return out;
  }
  Dense dense_iota_generator(const Dense& d, int A) const {
    Dense out;
    const Scalar mq = -ring_.q(), mone = -ring_.one(), one = ring_.one();
    const Vec zero = G_->torus_zero();
    for (const auto& [x, f] : d) {
      const TameElt step = G_->mul(TameElt{zero, x}, lift_[A]);
      if (S_->is_descent(x, A)) {
        add_shifted(block(out, step.x), f, step.t, &mq);
        continue;
      }
      add_nu_sum(block(out, x), f, G_->act_torus(x.w, coroot_[A]), zero, one);
      add_shifted(block(out, step.x), f, step.t, &mone);
    }
    return out;
  }

  /// out += X sum_s c tau_s; the shifts moved by each finite Weyl element are computed once.
  auto spread_sparse() const {
    return [this](Elt& out, const Elt& X, const Scalar& c, const std::vector<Vec>& shifts) {
      const WeylGroup& W = G_->weyl();
      const bool unit = c == ring_.one();
      std::vector<std::vector<Vec>> moved(W.size());
      for (const auto& [z, a] : X) {
        std::vector<Vec>& mv = moved[z.x.w];
        if (mv.empty())
          for (const Vec& s : shifts) mv.push_back(W.act_coweight(z.x.w, s));
        const Scalar ac = unit ? a : a * c;
        for (const Vec& m : mv) out.add(TameElt{G_->reduce(z.t + m), z.x}, ac);
      }
    };
  }
  auto spread_dense() const {
    return [this](Dense& out, const Dense& X, const Scalar& c, const std::vector<Vec>& shifts) {
      const bool unit = c == ring_.one();
      Block fc;
      for (const auto& [x, f] : X) {
        Block& dst = block(out, x);
        if (!unit) {
          fc.assign(f.size(), ring_.zero());
          for (std::size_t i = 0; i < f.size(); ++i)
            if (!Ring::is_zero(f[i])) fc[i] = c * f[i];
        }
        for (const Vec& s : shifts) add_shifted(dst, unit ? f : fc, G_->act_torus(x.w, s), nullptr);
      }
    };
  }

  /// Sum over the terms c_y of b of start(omega) step(.., A_1) ... step(.., A_k) tau_t,
  /// where y = lift(omega) n_{A_1} ... n_{A_k} t along the reduced word of y.
  /// Terms are visited in word order so that shared prefixes are computed once.
  template <class State, class Start, class Step, class Spread>
  State along_words(const Elt& b, Start start, Step step, Spread spread) const {
    struct Group {
      ReducedWord rw;
      std::vector<std::pair<TameElt, Scalar>> terms;
    };
    std::unordered_map<ExtWeylElt, std::size_t, ExtWeylHash> index;
    std::vector<Group> groups;
    for (const auto& [y, c] : b) {
      auto [it, fresh] = index.try_emplace(y.x, groups.size());
      if (fresh) groups.push_back({S_->reduced_word(y.x), {}});
      groups[it->second].terms.emplace_back(y, c);
    }
    std::sort(groups.begin(), groups.end(), [](const Group& g, const Group& h) {
      if (g.rw.omega.w != h.rw.omega.w) return g.rw.omega.w < h.rw.omega.w;
      if (!same(g.rw.omega.lam, h.rw.omega.lam)) return lex_less(g.rw.omega.lam, h.rw.omega.lam);
      return g.rw.letters < h.rw.letters;
    });
    State out;
    std::vector<State> stack;
    std::vector<int> cur;
    const ExtWeylElt* omega = nullptr;
    for (const Group& g : groups) {
      if (!omega || !(*omega == g.rw.omega)) {
        omega = &g.rw.omega;
        stack.assign(1, start(*omega));
        cur.clear();
      }
      std::size_t k = 0;
      while (k < cur.size() && k < g.rw.letters.size() && cur[k] == g.rw.letters[k]) ++k;
      stack.resize(k + 1);
      cur.resize(k);
      for (; k < g.rw.letters.size(); ++k) {
        stack.push_back(step(stack.back(), g.rw.letters[k]));
        cur.push_back(g.rw.letters[k]);
      }
      TameElt L = G_->lift(g.rw.omega);
      for (int A : g.rw.letters) L = G_->mul(L, lift_[A]);
      const TameElt L_inv = G_->inverse(L);
      // Terms sharing a coefficient share the scalar products.
      std::vector<std::pair<Scalar, std::vector<Vec>>> by_coef;
      for (const auto& [y, c] : g.terms) {
        auto it = std::find_if(by_coef.begin(), by_coef.end(), [&](const auto& e) { return e.first == c; });
        if (it == by_coef.end()) it = by_coef.insert(by_coef.end(), {c, {}});
        it->second.push_back(G_->mul(L_inv, y).t);
      }
      for (const auto& [c, shifts] : by_coef) spread(out, stack.back(), c, shifts);
    }
    return out;
  }

  /// out += z nu_A c, walking the coroot image one step at a time.
  void add_nu(Elt& out, const TameElt& z, int A, const Scalar& c) const {
    const Vec step = G_->act_torus(z.x.w, coroot_[A]);
    TameElt y = z;
    for (Int a = 0; a < G_->modulus(); ++a) {
      out.add(y, c);
      y.t = G_->reduce(y.t + step);
    }
  }

  const TameGroup* G_;
  const AffineSystem* S_;
  Ring ring_;
  std::vector<Vec> coroot_;
  std::vector<TameElt> lift_;
  std::vector<std::vector<Vec>> torus_;
  std::vector<Vec> point_;  // torus points by mixed radix index, when there are at most kDenseMax
  std::size_t dense_limit_ = 128;
};

using GenericHecke = HeckeAlgebra<LaurentRing>;
using ModPHecke = HeckeAlgebra<FqRing>;

// Free helpers.
ModPElt specialize(const GenericElt& a, const FiniteField& F);
bool is_integral(const GenericElt& a);
/// Minimum v-exponent over all coefficients (large if zero).
int min_exponent(const GenericElt& a);

/// Character value xi(t) as an element of F_q.
Fq char_value(const TameGroup& G, const FiniteField& F, const TorusCharacter& xi, const Vec& t);
/// The idempotent attached to a torus character, in the mod p ring.
ModPElt epsilon(const TameGroup& G, const FiniteField& F, const TorusCharacter& xi);

/// Writes a = sum_d h_d tau_d with d distinguished for F and h_d supported on the finite part of W_F.
std::vector<std::pair<ExtWeylElt, ModPElt>> finite_decompose(const ModPHecke& H, const ModPElt& a, Facet F);
std::vector<std::pair<ExtWeylElt, GenericElt>> finite_decompose(const GenericHecke& H, const GenericElt& a,
                                                                Facet F);

/// Relabels a Levi element into the full ring; every support element must be F-positive.
template <class Scalar>
HeckeElt<Scalar> j_F_plus(const WeylGroup& W, Facet F, const HeckeElt<Scalar>& a) {
  for (const auto& [y, c] : a)
    if (!f_positive(W, y.x, F))
      throw DomainError("j_F^+ precondition: support element (w=" + std::to_string(y.x.w) +
                        ", lam=" + to_string(y.x.lam) + ") is not F-positive");
  return a;
}

}  // namespace prohecke
