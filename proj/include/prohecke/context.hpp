#pragma once

#include "prohecke/satake.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace prohecke {

/// Everything built from one root datum. Members refer to each other, so the
/// object is neither copyable nor movable; use make().
class Context {
 public:
  static std::unique_ptr<Context> make(RootDatum d) { return std::unique_ptr<Context>(new Context(std::move(d))); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  const RootDatum datum;
  const WeylGroup W;
  const TameGroup G;
  const AffineSystem S;
  const FiniteField F;
  const GenericHecke Hg;
  const ModPHecke Hp;
  const SatakeEngine satake;

  const AffineSystem& levi_system(Facet f) const;
  const GenericHecke& levi(Facet f) const;
  const BernsteinMaps& maps(Facet f) const { return satake.maps(f); }
  /// All characters of the finite Hecke algebra, enumerated once.
  const std::vector<HeckeCharacter>& characters() const {
    if (!characters_) characters_ = enumerate_characters(G);
    return *characters_;
  }

 private:
  explicit Context(RootDatum d)
      : datum(std::move(d)),
        W(datum),
        G(W),
        S(W, datum.full_facet()),
        F(datum.p(), datum.f()),
        Hg(G, S, LaurentRing{}),
        Hp(G, S, FqRing{&F}),
        satake(Hg, Hp, F) {}

  mutable std::map<std::uint32_t, std::unique_ptr<AffineSystem>> levi_systems_;
  mutable std::map<std::uint32_t, std::unique_ptr<GenericHecke>> levi_;
  mutable std::optional<std::vector<HeckeCharacter>> characters_;
};

inline const AffineSystem& Context::levi_system(Facet f) const {
  auto& slot = levi_systems_[f.mask];
  if (!slot) slot = std::make_unique<AffineSystem>(W, f);
  return *slot;
}

inline const GenericHecke& Context::levi(Facet f) const {
  auto& slot = levi_[f.mask];
  if (!slot) slot = std::make_unique<GenericHecke>(G, levi_system(f), LaurentRing{});
  return *slot;
}

}  // namespace prohecke
