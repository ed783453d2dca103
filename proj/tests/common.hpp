#pragma once

#include "prohecke/context.hpp"
#include "prohecke/suites.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <memory>
#include <set>
#include <vector>

namespace prohecke::fixtures {

inline RootDatum sl2(int p = 3, int f = 1) { return RootDatum::create(1, {vec({2})}, {vec({1})}, p, f, true, "SL2"); }
inline RootDatum pgl2(int p = 3, int f = 1) { return RootDatum::create(1, {vec({1})}, {vec({2})}, p, f, false, "PGL2"); }
inline RootDatum gl2(int p = 3, int f = 1) {
  return RootDatum::create(2, {vec({1, -1})}, {vec({1, -1})}, p, f, true, "GL2");
}
inline RootDatum sl3(int p = 2, int f = 1) {
  return RootDatum::create(2, {vec({2, -1}), vec({-1, 2})}, {vec({1, 0}), vec({0, 1})}, p, f, true, "SL3");
}
inline RootDatum gl3(int p = 2, int f = 1) {
  return RootDatum::create(3, {vec({1, -1, 0}), vec({0, 1, -1})}, {vec({1, -1, 0}), vec({0, 1, -1})}, p, f, true,
                           "GL3");
}
inline RootDatum sp4(int p = 3, int f = 1) {
  return RootDatum::create(2, {vec({1, -1}), vec({0, 2})}, {vec({1, -1}), vec({0, 1})}, p, f, true, "Sp4");
}
inline RootDatum a1xa1(int p = 3, int f = 1) {
  return RootDatum::create(2, {vec({2, 0}), vec({0, 2})}, {vec({1, 0}), vec({0, 1})}, p, f, true, "A1xA1");
}

inline std::unique_ptr<Context> make(RootDatum d) { return Context::make(std::move(d)); }

inline std::vector<Int> key(const Vec& v) { return to_std(v); }

inline std::set<std::vector<Int>> keys(const std::vector<Vec>& vs) {
  std::set<std::vector<Int>> out;
  for (const Vec& v : vs) out.insert(key(v));
  return out;
}

inline ExtWeylElt product(const WeylGroup& W, const ReducedWord& rw, const AffineSystem& S) {
  ExtWeylElt x = rw.omega;
  for (int A : rw.letters) x = W.mul(x, S.simple_reflection(A));
  return x;
}

}  // namespace prohecke::fixtures
