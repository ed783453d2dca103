#include "prohecke/io.hpp"

#include <algorithm>
#include <cstdint>

namespace prohecke {

json to_json(const Vec& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json to_json(const WeylGroup& W, const ExtWeylElt& x) { return {{"w", W.word(x.w)}, {"lam", to_json(x.lam)}}; }

json to_json(const WeylGroup& W, const TameElt& y) {
  return {{"t", to_json(y.t)}, {"w", W.word(y.x.w)}, {"lam", to_json(y.x.lam)}};
}

json to_json(const LaurentInt& c) {
  json out = json::array();
  for (auto [e, a] : c.terms()) {
    // Coefficients beyond 64 bits are written as decimal strings.
    json coef = a >= INT64_MIN && a <= INT64_MAX ? json(static_cast<Int>(a)) : json(to_string(a));
    out.push_back({{"exp", e}, {"coef", coef}});
  }
  return out;
}

json to_json(const Fq& c) {
  if (!c.field) return json::array({0});
  return c.field->coefficients(c.v);
}

std::vector<Int> sort_key(const AffineSystem& S, const TameElt& y) {
  const WeylGroup& W = S.weyl();
  ReducedWord rw = S.reduced_word(y.x);
  std::vector<Int> key{S.length(y.x)};
  for (int A : rw.letters) key.push_back(A);
  key.push_back(-1);
  for (int i : W.word(rw.omega.w)) key.push_back(i);
  key.push_back(-1);
  for (int i = 0; i < rw.omega.lam.size(); ++i) key.push_back(rw.omega.lam(i));
  for (int i = 0; i < y.t.size(); ++i) key.push_back(y.t(i));
  return key;
}

namespace {

template <class Elt>
json elt_json(const AffineSystem& S, const Elt& a) {
  std::vector<std::pair<std::vector<Int>, json>> rows;
  for (const auto& [y, c] : a) rows.emplace_back(sort_key(S, y), json{{"elt", to_json(S.weyl(), y)}, {"coef", to_json(c)}});
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& z) { return x.first < z.first; });
  json out = json::array();
  for (auto& r : rows) out.push_back(std::move(r.second));
  return out;
}

}  // namespace

json to_json(const AffineSystem& S, const GenericElt& a) { return elt_json(S, a); }
json to_json(const AffineSystem& S, const ModPElt& a) { return elt_json(S, a); }

json to_json(const AffineSystem& S, const SphericalElt& m) {
  const WeylGroup& W = S.weyl();
  std::vector<std::pair<std::vector<Int>, json>> rows;
  for (const auto& [d, c] : m.coef)
    rows.emplace_back(sort_key(S, TameElt{Vec::Zero(d.lam.size()), d}), json{{"d", to_json(W, d)}, {"coef", to_json(c)}});
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& z) { return x.first < z.first; });
  json out = json::array();
  for (auto& r : rows) out.push_back(std::move(r.second));
  return out;
}

json to_json(const FiniteField& F) {
  return {{"p", F.p()}, {"f", F.degree()}, {"modulus", F.modulus()}, {"generator", F.coefficients(F.generator())}};
}

json to_json(const TorusCharacter& xi) { return to_json(xi.exps); }

json to_json(const HeckeCharacter& chi) {
  auto bits = [](std::uint32_t m) {
    json out = json::array();
    for (int i = 0; i < 32; ++i)
      if ((m >> i) & 1u) out.push_back(i);
    return out;
  };
  return {{"xi", to_json(chi.xi)}, {"pi_xibar", bits(chi.pi_xibar)}, {"pi_chi", bits(chi.pi_chi)}};
}

Vec vec_from_json(const json& j, int rank, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank)
    throw ParseError(std::string(what) + ": expected an array of " + std::to_string(rank) + " integers");
  Vec out(rank);
  for (int i = 0; i < rank; ++i) {
    if (!j[i].is_number_integer()) throw ParseError(std::string(what) + "[" + std::to_string(i) + "]: expected an integer");
    out(i) = j[i].get<Int>();
  }
  return out;
}

ExtWeylElt ext_from_json(const WeylGroup& W, const json& j) {
  if (!j.is_object()) throw ParseError("element: expected an object with keys 'w' and 'lam'");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "w" && it.key() != "lam" && it.key() != "t") throw ParseError("element: unknown key '" + it.key() + "'");
  const int r = W.datum().rank();
  std::vector<int> word;
  if (j.contains("w")) {
    if (!j["w"].is_array()) throw ParseError("element.w: expected an array of simple reflection indices");
    for (const auto& a : j["w"]) {
      if (!a.is_number_integer() || a.get<int>() < 0 || a.get<int>() >= W.datum().num_simple())
        throw ParseError("element.w: index out of range");
      word.push_back(a.get<int>());
    }
  }
  Vec lam = j.contains("lam") ? vec_from_json(j["lam"], r, "element.lam") : Vec(Vec::Zero(r));
  return {W.from_word(word), lam};
}

TameElt tame_from_json(const TameGroup& G, const json& j) {
  ExtWeylElt x = ext_from_json(G.weyl(), j);
  Vec t = j.contains("t") ? vec_from_json(j["t"], G.datum().rank(), "element.t") : G.torus_zero();
  return {G.reduce(t), x};
}

json parse_argument(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": malformed JSON at " + line_col(text, e.byte > 0 ? e.byte - 1 : 0));
  }
}

}  // namespace prohecke
