#include "prohecke/weyl.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace prohecke {

WeylGroup::WeylGroup(const RootDatum& datum) : datum_(&datum) {
  const int n = datum.num_simple();
  const int r = datum.rank();
  nroots_ = datum.num_roots();

  std::vector<std::vector<int>> sperm(n, std::vector<int>(nroots_));
  std::vector<Mat> scow(n), swt(n);
  for (int i = 0; i < n; ++i) {
    for (int b = 0; b < nroots_; ++b)
      sperm[i][b] = datum.root_index(datum.reflect_weight(datum.roots()[b].weight, i));
    scow[i] = Mat::Identity(r, r) - datum.simple_coroot(i) * datum.simple_root(i).transpose();
    swt[i] = Mat::Identity(r, r) - datum.simple_root(i) * datum.simple_coroot(i).transpose();
  }

  // Elements are keyed by the images of the simple roots.
  std::map<std::vector<int>, int> index;
  auto key = [&](const std::vector<int>& p) { return std::vector<int>(p.begin(), p.begin() + n); };
  std::vector<std::vector<int>> perms{std::vector<int>(nroots_)};
  for (int b = 0; b < nroots_; ++b) perms[0][b] = b;
  cow_.push_back(Mat::Identity(r, r));
  wt_.push_back(Mat::Identity(r, r));
  index[key(perms[0])] = 0;
  // Breadth-first on right multiplication by simple reflections.
  std::vector<std::vector<int>> right(1, std::vector<int>(n, -1));
  for (std::size_t k = 0; k < perms.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> p(nroots_);
      for (int b = 0; b < nroots_; ++b) p[b] = perms[k][sperm[i][b]];
      auto [it, fresh] = index.emplace(key(p), static_cast<int>(perms.size()));
      if (fresh) {
        if (static_cast<int>(perms.size()) >= kMaxOrder) throw DatumError("finite Weyl group too large");
        perms.push_back(p);
        cow_.push_back(cow_[k] * scow[i]);
        wt_.push_back(wt_[k] * swt[i]);
        right.emplace_back(n, -1);
      }
      right[k][i] = it->second;
    }
  }
  const int N = static_cast<int>(perms.size());
  perm_.resize(static_cast<std::size_t>(N) * nroots_);
  len_.assign(N, 0);
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < nroots_; ++b) perm_[a * nroots_ + b] = perms[a][b];
    for (int b = 0; b < datum.num_positive(); ++b)
      if (!root_positive(perms[a][b])) ++len_[a];
  }
  table_.resize(static_cast<std::size_t>(N) * N);
  inv_.resize(N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      std::vector<int> p(n);
      for (int i = 0; i < n; ++i) p[i] = perms[a][perms[b][i]];
      int c = index.at(p);
      table_[a * N + b] = static_cast<WeylId>(c);
      if (c == 0) inv_[a] = static_cast<WeylId>(b);
    }
  simple_.resize(n);
  for (int i = 0; i < n; ++i) simple_[i] = static_cast<WeylId>(right[0][i]);

  // Lex-least reduced words: peel off the smallest left descent.
  std::vector<int> order(N);
  for (int a = 0; a < N; ++a) order[a] = a;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return len_[a] < len_[b]; });
  word_.assign(N, {});
  for (int a : order) {
    if (len_[a] == 0) continue;
    for (int i = 0; i < n; ++i) {
      int rest = table_[simple_[i] * N + a];
      if (len_[rest] < len_[a]) {
        word_[a] = {i};
        word_[a].insert(word_[a].end(), word_[rest].begin(), word_[rest].end());
        break;
      }
    }
  }
  refl_.resize(nroots_);
  for (int b = 0; b < nroots_; ++b) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) {
      const Vec& chi = datum.simple_root(i);
      const Root& beta = datum.roots()[b];
      p[i] = datum.root_index(chi - beta.coroot.dot(chi) * beta.weight);
    }
    refl_[b] = static_cast<WeylId>(index.at(p));
  }
  longest_ = static_cast<WeylId>(std::max_element(len_.begin(), len_.end()) - len_.begin());
}

WeylId WeylGroup::from_word(const std::vector<int>& letters) const {
  WeylId w = 0;
  for (int i : letters) {
    if (i < 0 || i >= datum_->num_simple()) throw DomainError("simple reflection index out of range");
    w = mul(w, simple_[i]);
  }
  return w;
}

bool WeylGroup::in_parabolic(WeylId a, Facet F) const {
  for (int i : word_[a])
    if (!F.contains(i)) return false;
  return true;
}

std::vector<WeylId> WeylGroup::parabolic(Facet F) const {
  std::vector<WeylId> out;
  for (int a = 0; a < size(); ++a)
    if (in_parabolic(static_cast<WeylId>(a), F)) out.push_back(static_cast<WeylId>(a));
  return out;
}

WeylId WeylGroup::longest_in(Facet F) const {
  WeylId best = 0;
  for (WeylId a : parabolic(F))
    if (len_[a] > len_[best]) best = a;
  return best;
}

std::vector<std::vector<int>> WeylGroup::all_reduced_words(WeylId a) const {
  if (len_[a] == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 0; i < datum_->num_simple(); ++i) {
    WeylId rest = mul(a, simple_[i]);
    if (len_[rest] < len_[a])
      for (auto w : all_reduced_words(rest)) {
        w.push_back(i);
        out.push_back(std::move(w));
      }
  }
  return out;
}

ExtWeylElt WeylGroup::mul(const ExtWeylElt& a, const ExtWeylElt& b) const {
  return {mul(a.w, b.w), act_coweight(inv(b.w), a.lam) + b.lam};
}

ExtWeylElt WeylGroup::inverse(const ExtWeylElt& a) const { return {inv(a.w), -act_coweight(a.w, a.lam)}; }

AffineRoot WeylGroup::act(const ExtWeylElt& x, AffineRoot A) const {
  return {act_root(x.w, A.root), A.level - datum_->pair(x.lam, A.root)};
}

ExtWeylElt WeylGroup::affine_reflection(AffineRoot A) const {
  return {reflection(A.root), A.level * datum_->roots()[A.root].coroot};
}

int WeylGroup::length(const ExtWeylElt& x) const {
  int total = 0;
  for (int a = 0; a < nroots_; ++a) {
    Int m = datum_->pair(x.lam, a);
    Int rmin = root_positive(a) ? 0 : 1;
    if (m > rmin) total += static_cast<int>(m - rmin);
    if (m >= rmin && !root_positive(act_root(x.w, a))) ++total;
  }
  return total;
}

int WeylGroup::length_by_inversions(const ExtWeylElt& x) const {
  int total = 0;
  for (int a = 0; a < nroots_; ++a) {
    Int m = datum_->pair(x.lam, a);
    Int top = (m < 0 ? -m : m) + 1;
    for (Int r = 0; r <= top; ++r) {
      AffineRoot A{a, r};
      if (positive(A) && !positive(act(x, A))) ++total;
    }
  }
  return total;
}

AffineSystem::AffineSystem(const WeylGroup& W, Facet F) : W_(&W), F_(F) {
  const RootDatum& d = W.datum();
  roots_ = d.facet_roots(F);
  for (int i = 0; i < d.num_simple(); ++i)
    if (F.contains(i)) simple_.push_back({i, 0});
  for (int b : d.minimal_roots(F)) simple_.push_back({b, 1});
  for (const auto& A : simple_) refl_.push_back(W.affine_reflection(A));
  member_.resize(W.size());
  for (int a = 0; a < W.size(); ++a) member_[a] = W.in_parabolic(static_cast<WeylId>(a), F);
}

void AffineSystem::require(const ExtWeylElt& x) const {
  if (!contains(x)) throw DomainError("element lies outside W_F for this facet");
}

int AffineSystem::length(const ExtWeylElt& x) const {
  require(x);
  int total = 0;
  for (int a : roots_) {
    Int m = datum().pair(x.lam, a);
    Int rmin = W_->root_positive(a) ? 0 : 1;
    if (m > rmin) total += static_cast<int>(m - rmin);
    if (m >= rmin && !W_->root_positive(W_->act_root(x.w, a))) ++total;
  }
  return total;
}

bool AffineSystem::is_descent(const ExtWeylElt& x, int A) const {
  return !W_->positive(W_->act(x, simple_[A]));
}

int AffineSystem::first_descent(const ExtWeylElt& x) const {
  for (int A = 0; A < num_simple_affine(); ++A)
    if (is_descent(x, A)) return A;
  return -1;
}

ReducedWord AffineSystem::reduced_word(const ExtWeylElt& x) const {
  require(x);
  ReducedWord out;
  ExtWeylElt cur = x;
  for (int A = first_descent(cur); A >= 0; A = first_descent(cur)) {
    out.letters.push_back(A);
    cur = W_->mul(cur, refl_[A]);
  }
  std::reverse(out.letters.begin(), out.letters.end());
  out.omega = cur;
  return out;
}

bool AffineSystem::bruhat_leq(const ExtWeylElt& v, const ExtWeylElt& x) const {
  require(v);
  require(x);
  ExtWeylElt a = v, b = x;
  int la = length(a), lb = length(b);
  for (;;) {
    if (la > lb) return false;
    int A = first_descent(b);
    if (A < 0) return a == b;
    if (is_descent(a, A)) {
      a = W_->mul(a, refl_[A]);
      --la;
    }
    b = W_->mul(b, refl_[A]);
    --lb;
  }
}

std::vector<ExtWeylElt> AffineSystem::lower_interval(const ExtWeylElt& x) const {
  auto rw = reduced_word(x);
  std::vector<ExtWeylElt> out{rw.omega};
  std::unordered_set<ExtWeylElt, ExtWeylHash> seen{rw.omega};
  for (int A : rw.letters) {
    std::size_t n = out.size();
    for (std::size_t k = 0; k < n; ++k) {
      ExtWeylElt y = W_->mul(out[k], refl_[A]);
      if (seen.insert(y).second) out.push_back(y);
    }
  }
  return out;
}

bool in_D(const WeylGroup& W, const ExtWeylElt& x, Facet F) {
  ExtWeylElt xi = W.inverse(x);
  for (int b : W.datum().facet_positive_roots(F))
    if (!W.positive(W.act(xi, {b, 0}))) return false;
  return true;
}

std::pair<WeylId, ExtWeylElt> coset_factor(const WeylGroup& W, const ExtWeylElt& x, Facet F) {
  for (WeylId u : W.parabolic(F)) {
    ExtWeylElt d = W.mul(W.finite(W.inv(u)), x);
    if (in_D(W, d, F)) return {u, d};
  }
  throw DomainError("no distinguished factorization found");
}

std::vector<ExtWeylElt> double_coset(const WeylGroup& W, const Vec& mu) {
  std::vector<ExtWeylElt> out;
  for (const Vec& nu : W.datum().orbit(mu))
    for (int a = 0; a < W.size(); ++a) out.push_back({static_cast<WeylId>(a), nu});
  return out;
}

std::vector<ExtWeylElt> D_in_double_coset(const WeylGroup& W, Facet F, const Vec& mu) {
  std::vector<ExtWeylElt> out;
  for (const auto& x : double_coset(W, mu))
    if (in_D(W, x, F)) out.push_back(x);
  return out;
}

bool chamber_member(const RootDatum& d, const Vec& lam, Facet F, Sign sign) {
  for (int a = 0; a < d.num_roots(); ++a) {
    bool pos = a < d.num_positive();
    bool inF = d.in_facet(a, F);
    if (pos == inF) continue;  // only Phi^+ - Phi_F^+ and Phi_F^-
    Int m = d.pair(lam, a);
    if (sign == Sign::Plus ? m < 0 : m > 0) return false;
  }
  return true;
}

bool f_positive(const WeylGroup& W, const ExtWeylElt& x, Facet F) {
  if (!W.in_parabolic(x.w, F)) throw DomainError("F-positivity is only defined on W_F");
  ExtWeylElt xi = W.inverse(x);
  const RootDatum& d = W.datum();
  for (int a = 0; a < d.num_positive(); ++a)
    if (!d.in_facet(a, F) && !W.positive(W.act(xi, {a, 0}))) return false;
  return true;
}

Vec cartan_support(const WeylGroup& W, const ExtWeylElt& x) {
  return W.datum().dominant_representative(x.lam).first;
}

ExtWeylElt longest_in_double_coset(const WeylGroup& W, const Vec& mu) {
  ExtWeylElt best = W.translation(mu);
  int bl = W.length(best);
  for (const auto& x : double_coset(W, mu)) {
    int l = W.length(x);
    if (l > bl) {
      best = x;
      bl = l;
    }
  }
  return best;
}

}  // namespace prohecke
