#pragma once

#include "prohecke/satake.hpp"

#include <json.hpp>

namespace prohecke {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Vec& v);
json to_json(const WeylGroup& W, const ExtWeylElt& x);
json to_json(const WeylGroup& W, const TameElt& y);
json to_json(const LaurentInt& c);
json to_json(const Fq& c);
/// Terms ordered by length, then affine reduced word, then translation and torus coordinates.
json to_json(const AffineSystem& S, const GenericElt& a);
json to_json(const AffineSystem& S, const ModPElt& a);
json to_json(const AffineSystem& S, const SphericalElt& m);
json to_json(const FiniteField& F);
json to_json(const TorusCharacter& xi);
json to_json(const HeckeCharacter& chi);

Vec vec_from_json(const json& j, int rank, const char* what);
/// {"w": finite word, "lam": coweight}; both optional.
ExtWeylElt ext_from_json(const WeylGroup& W, const json& j);
/// As ext_from_json plus an optional "t".
TameElt tame_from_json(const TameGroup& G, const json& j);
/// Parses a JSON argument given on the command line, with position diagnostics.
json parse_argument(const std::string& text, const char* what);

/// Deterministic ordering key for a tame element.
std::vector<Int> sort_key(const AffineSystem& S, const TameElt& y);

}  // namespace prohecke
