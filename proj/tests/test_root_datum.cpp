#include "common.hpp"

using namespace prohecke;
using namespace prohecke::fixtures;

namespace {

// Closure of the simple roots under the simple reflections, computed from scratch.
std::set<std::vector<Int>> closure_oracle(const RootDatum& d) {
  std::set<std::vector<Int>> seen;
  std::vector<Vec> todo;
  for (int i = 0; i < d.num_simple(); ++i) todo.push_back(d.simple_root(i));
  while (!todo.empty()) {
    Vec x = todo.back();
    todo.pop_back();
    if (!seen.insert(key(x)).second) continue;
    for (int i = 0; i < d.num_simple(); ++i) todo.push_back(Vec(x - d.simple_coroot(i).dot(x) * d.simple_root(i)));
  }
  return seen;
}

bool preceq_oracle(const RootDatum& d, const Vec& mu, const Vec& lam) {
  const int n = d.num_simple();
  std::vector<int> c(n, 0);
  for (;;) {
    Vec s = Vec::Zero(d.rank());
    for (int i = 0; i < n; ++i) s += c[i] * d.simple_coroot(i);
    if (same(Vec(lam - mu), s)) return true;
    int i = 0;
    for (; i < n; ++i) {
      if (++c[i] <= 10) break;
      c[i] = 0;
    }
    if (i == n) return false;
  }
}

std::set<std::vector<Int>> root_weights(const RootDatum& d, const std::vector<int>& idx) {
  std::set<std::vector<Int>> out;
  for (int a : idx) out.insert(key(d.roots()[a].weight));
  return out;
}

}  // namespace

TEST(RootDatum, ClosureMatchesReflectionOracle) {
  for (const RootDatum& d : {sl2(), pgl2(), gl2(), sl3(), gl3(), sp4(), a1xa1()}) {
    std::set<std::vector<Int>> got;
    for (const Root& r : d.roots()) got.insert(key(r.weight));
    EXPECT_EQ(got, closure_oracle(d)) << d.name();
    for (const Root& r : d.roots()) EXPECT_EQ(r.coroot.dot(r.weight), 2) << d.name();
  }
}

TEST(RootDatum, RootCounts) {
  EXPECT_EQ(gl2().num_roots(), 2);
  EXPECT_EQ(sl3().num_roots(), 6);
  EXPECT_EQ(gl3().num_roots(), 6);
  EXPECT_EQ(sp4().num_roots(), 8);
  EXPECT_EQ(a1xa1().num_roots(), 4);
  EXPECT_EQ(sp4().cartan_type(), "C2");
}

TEST(RootDatum, OrderingOfRoots) {
  RootDatum d = sp4();
  for (int i = 0; i < d.num_simple(); ++i) EXPECT_TRUE(same(d.roots()[i].weight, d.simple_root(i)));
  for (int a = 0; a < d.num_positive(); ++a) {
    EXPECT_TRUE(d.roots()[a].positive);
    EXPECT_TRUE(same(d.roots()[a + d.num_positive()].weight, Vec(-d.roots()[a].weight)));
    EXPECT_EQ(d.negative_of(a), a + d.num_positive());
  }
}

TEST(RootDatum, MinimalRoots) {
  RootDatum a1 = sl2();
  EXPECT_EQ(root_weights(a1, a1.minimal_roots()), (std::set<std::vector<Int>>{{-2}}));
  RootDatum a2 = sl3();
  EXPECT_EQ(root_weights(a2, a2.minimal_roots()), (std::set<std::vector<Int>>{{-1, -1}}));
  RootDatum aa = a1xa1();
  EXPECT_EQ(root_weights(aa, aa.minimal_roots()), (std::set<std::vector<Int>>{{-2, 0}, {0, -2}}));
  RootDatum c2 = sp4();
  // The highest root of C2 here is 2 alpha_1 + alpha_2.
  EXPECT_EQ(root_weights(c2, c2.minimal_roots()), (std::set<std::vector<Int>>{{-2, 0}}));
}

TEST(RootDatum, DominantRepresentative) {
  RootDatum d = sl3();
  auto [dom, steps] = d.dominant_representative(vec({-1, 0}));
  EXPECT_TRUE(same(dom, vec({1, 1})));
  Vec x = vec({-1, 0});
  for (int i : steps) x = d.reflect_coweight(x, i);
  EXPECT_TRUE(same(x, dom));
  // The orbit of a coroot is the set of all coroots.
  std::set<std::vector<Int>> coroots;
  for (const Root& r : d.roots()) coroots.insert(key(r.coroot));
  EXPECT_EQ(keys(d.orbit(vec({-1, 0}))), coroots);
  EXPECT_TRUE(same(gl2().dominant_representative(vec({-3, 5})).first, vec({5, -3})));
  EXPECT_TRUE(same(sl2().dominant_representative(vec({-2})).first, vec({2})));
}

TEST(RootDatum, PreceqAgainstIntegerProgram) {
  for (const RootDatum& d : {gl2(), sl3(), sp4()}) {
    auto box = coweight_box(d.rank(), 2);
    for (const Vec& mu : box)
      for (const Vec& lam : box)
        ASSERT_EQ(d.preceq(mu, lam, d.full_facet()), preceq_oracle(d, mu, lam))
            << d.name() << " mu=" << to_string(mu) << " lam=" << to_string(lam);
  }
}

TEST(RootDatum, PreceqOnChamberIsEquality) {
  RootDatum d = sl3();
  EXPECT_TRUE(d.preceq(vec({1, 0}), vec({1, 0}), Facet::chamber()));
  EXPECT_FALSE(d.preceq(vec({0, 0}), vec({1, 0}), Facet::chamber()));
  EXPECT_TRUE(d.preceq(vec({0, 0}), vec({1, 0}), d.full_facet()));
}

TEST(RootDatum, DominantBelow) {
  for (const RootDatum& d : {gl2(), sl3(), sp4()}) {
    for (const Vec& lam : dominant_box(d, 2)) {
      std::set<std::vector<Int>> want;
      for (const Vec& mu : coweight_box(d.rank(), 6))
        if (d.is_dominant(mu) && preceq_oracle(d, mu, lam)) want.insert(key(mu));
      EXPECT_EQ(keys(d.dominant_below(lam)), want) << d.name() << " lam=" << to_string(lam);
    }
  }
  // Coordinates of SL2 are in the coroot basis, so every smaller nonnegative integer is below.
  EXPECT_EQ(keys(sl2().dominant_below(vec({3}))), (std::set<std::vector<Int>>{{0}, {1}, {2}, {3}}));
  EXPECT_EQ(keys(pgl2().dominant_below(vec({3}))), (std::set<std::vector<Int>>{{1}, {3}}));
}

TEST(RootDatum, ParseValidConfig) {
  RootDatum d = parse_datum(R"({"rank": 2, "simple_roots": [[1, -1]], "simple_coroots": [[1, -1]],
                                "q": {"p": 3, "f": 2}, "derived_simply_connected": true, "name": "GL2"})");
  EXPECT_EQ(d.q(), 9);
  EXPECT_EQ(d.num_roots(), 2);
  EXPECT_TRUE(d.derived_simply_connected());
}

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_datum(text);
  } catch (const DatumError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(RootDatum, ParseErrors) {
  EXPECT_NE(parse_error(R"({"rank": 1, "simple_roots": [[2]], "q": {"p": 3, "f": 1},
                            "derived_simply_connected": true})")
                .find("simple_coroots"),
            std::string::npos);
  EXPECT_NE(parse_error("{\"rank\": 1,\n  \"simple_roots\": [[2]]\n  \"x\": 1}").find("line 3"), std::string::npos);
  EXPECT_NE(parse_error(R"({"rank": 1, "simple_roots": [[2]], "simple_coroots": [[1]], "q": {"p": 4, "f": 1},
                            "derived_simply_connected": true})")
                .find("not prime"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"rank": 1, "simple_roots": [[2]], "simple_coroots": [[1]], "q": {"p": 3, "f": 1},
                            "derived_simply_connected": true, "colour": 1})")
                .find("unknown key"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"rank": 1, "simple_roots": [[2]], "simple_coroots": [[1, 0]], "q": {"p": 3, "f": 1},
                            "derived_simply_connected": true})"),
            "");
}

TEST(RootDatum, RejectsNonFiniteCartan) {
  // Rank three with an affine rank two subdiagram.
  std::vector<Vec> roots{vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})};
  std::vector<Vec> coroots{vec({2, -1, 0}), vec({-1, 2, -2}), vec({0, -2, 2})};
  try {
    RootDatum::create(3, roots, coroots, 3, 1, true);
    FAIL() << "accepted a Cartan matrix of infinite type";
  } catch (const DatumError& e) {
    EXPECT_NE(std::string(e.what()).find("finite type"), std::string::npos) << e.what();
  }
}

TEST(RootDatum, RejectsBadPairing) {
  EXPECT_THROW(RootDatum::create(1, {vec({2})}, {vec({2})}, 3, 1, true), DatumError);
  EXPECT_THROW(RootDatum::create(1, {vec({2})}, {vec({1})}, 3, 0, true), DatumError);
}
