#pragma once

#include "prohecke/root_datum.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace prohecke {

using WeylId = std::uint16_t;

/// w e^lam, finite part on the left.
struct ExtWeylElt {
  WeylId w = 0;
  Vec lam;
};

inline bool operator==(const ExtWeylElt& a, const ExtWeylElt& b) { return a.w == b.w && same(a.lam, b.lam); }

struct ExtWeylHash {
  std::size_t operator()(const ExtWeylElt& x) const { return hash_vec(x.lam, x.w * 0x51ed27ULL + 1); }
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Sign { Plus, Minus };

class WeylGroup {
 public:
  static constexpr int kMaxOrder = 4096;

  explicit WeylGroup(const RootDatum& datum);

  const RootDatum& datum() const { return *datum_; }
  int size() const { return static_cast<int>(len_.size()); }
  WeylId identity() const { return 0; }
  WeylId simple(int i) const { return simple_[i]; }
  WeylId mul(WeylId a, WeylId b) const { return table_[a * size() + b]; }
  WeylId inv(WeylId a) const { return inv_[a]; }
  int length(WeylId a) const { return len_[a]; }
  /// Lexicographically least reduced word in simple-reflection indices.
  const std::vector<int>& word(WeylId a) const { return word_[a]; }
  WeylId from_word(const std::vector<int>& letters) const;
  WeylId reflection(int root) const { return refl_[root]; }
  WeylId longest() const { return longest_; }
  WeylId longest_in(Facet F) const;
  bool in_parabolic(WeylId a, Facet F) const;
  std::vector<WeylId> parabolic(Facet F) const;
  std::vector<std::vector<int>> all_reduced_words(WeylId a) const;

  int act_root(WeylId a, int root) const { return perm_[a * nroots_ + root]; }
  Vec act_coweight(WeylId a, const Vec& lam) const { return cow_[a].lazyProduct(lam); }
  Vec act_weight(WeylId a, const Vec& chi) const { return wt_[a].lazyProduct(chi); }
  const Mat& coweight_matrix(WeylId a) const { return cow_[a]; }
  bool root_positive(int root) const { return root < datum_->num_positive(); }

  // Extended group W = finite Weyl group x| X_*.
  ExtWeylElt ext_identity() const { return {0, Vec::Zero(datum_->rank())}; }
  ExtWeylElt translation(const Vec& lam) const { return {0, lam}; }
  ExtWeylElt finite(WeylId w) const { return {w, Vec::Zero(datum_->rank())}; }
  ExtWeylElt mul(const ExtWeylElt& a, const ExtWeylElt& b) const;
  ExtWeylElt inverse(const ExtWeylElt& a) const;
  AffineRoot act(const ExtWeylElt& x, AffineRoot A) const;
  static bool positive(const RootDatum& d, AffineRoot A) {
    return A.level > 0 || (A.level == 0 && A.root < d.num_positive());
  }
  bool positive(AffineRoot A) const { return positive(*datum_, A); }
  /// The affine reflection s_A as an element w e^lam.
  ExtWeylElt affine_reflection(AffineRoot A) const;

  /// Closed-form length.
  int length(const ExtWeylElt& x) const;
  /// Inversion count over explicitly enumerated affine roots.
  int length_by_inversions(const ExtWeylElt& x) const;

 private:
  const RootDatum* datum_;
  int nroots_ = 0;
  std::vector<int> perm_;
  std::vector<Mat> cow_, wt_;
  std::vector<int> len_;
  std::vector<std::vector<int>> word_;
  std::vector<WeylId> table_, inv_, simple_, refl_;
  WeylId longest_ = 0;
};

struct ReducedWord {
  ExtWeylElt omega;          // length zero
  std::vector<int> letters;  // indices into the simple affine roots
};

/// Affine root system of the subsystem attached to a standard facet.
class AffineSystem {
 public:
  AffineSystem(const WeylGroup& W, Facet F);

  const WeylGroup& weyl() const { return *W_; }
  const RootDatum& datum() const { return W_->datum(); }
  Facet facet() const { return F_; }
  const std::vector<int>& roots() const { return roots_; }
  const std::vector<AffineRoot>& simple_affine_roots() const { return simple_; }
  int num_simple_affine() const { return static_cast<int>(simple_.size()); }
  const ExtWeylElt& simple_reflection(int A) const { return refl_[A]; }

  bool contains(const ExtWeylElt& x) const { return member_[x.w]; }
  int length(const ExtWeylElt& x) const;
  bool is_descent(const ExtWeylElt& x, int A) const;
  int first_descent(const ExtWeylElt& x) const;
  ReducedWord reduced_word(const ExtWeylElt& x) const;
  bool bruhat_leq(const ExtWeylElt& v, const ExtWeylElt& x) const;
  bool bruhat_less(const ExtWeylElt& v, const ExtWeylElt& x) const { return !(v == x) && bruhat_leq(v, x); }
  std::vector<ExtWeylElt> lower_interval(const ExtWeylElt& x) const;

 private:
  void require(const ExtWeylElt& x) const;

  const WeylGroup* W_;
  Facet F_;
  std::vector<int> roots_;
  std::vector<AffineRoot> simple_;
  std::vector<ExtWeylElt> refl_;
  std::vector<bool> member_;
};

// Distinguished representatives and related predicates.
bool in_D(const WeylGroup& W, const ExtWeylElt& x, Facet F);
/// x = u d with u in the finite parabolic group of F and d distinguished for F.
std::pair<WeylId, ExtWeylElt> coset_factor(const WeylGroup& W, const ExtWeylElt& x, Facet F);
std::vector<ExtWeylElt> double_coset(const WeylGroup& W, const Vec& mu);
std::vector<ExtWeylElt> D_in_double_coset(const WeylGroup& W, Facet F, const Vec& mu);
bool chamber_member(const RootDatum& d, const Vec& lam, Facet F, Sign sign);
bool f_positive(const WeylGroup& W, const ExtWeylElt& x, Facet F);
Vec cartan_support(const WeylGroup& W, const ExtWeylElt& x);
/// Longest element of W e^mu W for dominant mu.
ExtWeylElt longest_in_double_coset(const WeylGroup& W, const Vec& mu);

}  // namespace prohecke
