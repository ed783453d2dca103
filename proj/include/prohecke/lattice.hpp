#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace prohecke {

inline constexpr int kMaxRank = 8;

using Int = std::int64_t;
using Vec = Eigen::Matrix<Int, Eigen::Dynamic, 1, 0, kMaxRank, 1>;
using Mat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxRank, kMaxRank>;

inline Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline Vec vec(std::initializer_list<Int> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Int x : xs) v(i++) = x;
  return v;
}

inline Vec vec(const std::vector<Int>& xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Eigen::Index>(i)) = xs[i];
  return v;
}

inline std::vector<Int> to_std(const Vec& v) { return {v.data(), v.data() + v.size()}; }

/// Entrywise reduction into [0, m).
inline Vec reduce_mod(const Vec& v, Int m) {
  Vec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = floor_mod(v(i), m);
  return out;
}

inline bool same(const Vec& a, const Vec& b) {
  return a.size() == b.size() && (a.size() == 0 || (a.array() == b.array()).all());
}

inline bool lex_less(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::size_t hash_vec(const Vec& v, std::size_t seed = 0) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    seed = hash_combine(seed, static_cast<std::size_t>(v(i)) * 0x100000001b3ULL);
  return seed;
}

struct VecHash {
  std::size_t operator()(const Vec& v) const { return hash_vec(v); }
};
struct VecEq {
  bool operator()(const Vec& a, const Vec& b) const { return same(a, b); }
};

std::string to_string(const Vec& v);

}  // namespace prohecke
