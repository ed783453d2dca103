#pragma once

#include "prohecke/lattice.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prohecke {

class DatumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Root {
  Vec weight;         // in X^*
  Vec coroot;         // in X_*
  Vec simple_coords;  // in the basis of simple roots
  bool positive = true;
  int height = 0;
};

/// Subset of simple-root indices; 0 is the chamber, all bits set is the special vertex.
struct Facet {
  std::uint32_t mask = 0;

  bool contains(int i) const { return (mask >> i) & 1u; }
  bool operator==(const Facet&) const = default;
  static Facet chamber() { return {0}; }
  static Facet vertex(int n) { return {n >= 32 ? ~0u : ((1u << n) - 1u)}; }
};

struct AffineRoot {
  int root = 0;  // index into RootDatum::roots()
  Int level = 0;
  bool operator==(const AffineRoot&) const = default;
};

class RootDatum {
 public:
  /// Validates everything and generates the root system; throws DatumError.
  static RootDatum create(int rank, std::vector<Vec> simple_roots, std::vector<Vec> simple_coroots,
                          int p, int f, bool derived_simply_connected, std::string name = "");

  int rank() const { return rank_; }
  int num_simple() const { return static_cast<int>(simple_roots_.size()); }
  int p() const { return p_; }
  int f() const { return f_; }
  Int q() const { return q_; }
  bool derived_simply_connected() const { return dsc_; }
  const std::string& name() const { return name_; }

  const Vec& simple_root(int i) const { return simple_roots_[i]; }
  const Vec& simple_coroot(int i) const { return simple_coroots_[i]; }
  /// C[i][j] = <simple coroot i, simple root j>.
  const Mat& cartan() const { return cartan_; }
  std::string cartan_type() const;

  // Positive roots occupy [0, N), their negatives [N, 2N) in the same order;
  // simple root i has index i.
  const std::vector<Root>& roots() const { return roots_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return static_cast<int>(roots_.size() / 2); }
  int negative_of(int idx) const;
  int root_index(const Vec& weight) const;
  bool in_facet(int idx, Facet F) const;
  std::vector<int> facet_roots(Facet F) const;
  std::vector<int> facet_positive_roots(Facet F) const;
  Facet full_facet() const { return Facet::vertex(num_simple()); }
  std::vector<Facet> facets() const;

  /// Roots of the subsystem spanned by Pi_F that are minimal for the simple-root order.
  std::vector<int> minimal_roots(Facet F) const;
  std::vector<int> minimal_roots() const { return minimal_roots(full_facet()); }

  Int pair(const Vec& coweight, int root) const { return coweight.dot(roots_[root].weight); }
  Vec reflect_coweight(const Vec& lam, int root) const;
  Vec reflect_weight(const Vec& chi, int root) const;

  bool is_dominant(const Vec& lam) const;
  /// Dominant element of the orbit plus the simple reflections applied, in order.
  std::pair<Vec, std::vector<int>> dominant_representative(const Vec& lam) const;
  std::vector<Vec> orbit(const Vec& lam) const;

  /// lam - mu is a nonnegative integral combination of the simple coroots in Pi_F.
  bool preceq(const Vec& mu, const Vec& lam, Facet F) const;
  std::optional<Vec> coroot_coordinates(const Vec& lam, Facet F) const;

  /// Dominant mu with mu <= lam in the full order.
  std::vector<Vec> dominant_below(const Vec& lam) const;
  std::vector<Vec> dominant_below(const Vec& lam, Facet F) const;

 private:
  int rank_ = 0;
  std::vector<Vec> simple_roots_, simple_coroots_;
  Mat cartan_;
  int p_ = 2, f_ = 1;
  Int q_ = 2;
  bool dsc_ = false;
  std::string name_;
  std::vector<Root> roots_;
};

/// Parses the JSON config format; errors carry line or field diagnostics.
/// "line L, column C" for a byte offset.
std::string line_col(const std::string& text, std::size_t byte);
RootDatum parse_datum(const std::string& text);
RootDatum load_datum(const std::string& path);

bool is_prime(Int n);

}  // namespace prohecke
