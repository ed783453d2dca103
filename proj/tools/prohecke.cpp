#include "prohecke/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace prohecke;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

std::string now_utc() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// "9" or "3^2".
std::pair<int, int> parse_q(const std::string& s) {
  auto caret = s.find('^');
  int p = 0, f = 1;
  try {
    if (caret != std::string::npos) return {std::stoi(s.substr(0, caret)), std::stoi(s.substr(caret + 1))};
    int n = std::stoi(s);
    for (p = 2; p <= n && n % p; ++p) {
    }
    if (p > n) throw ParseError("");
    for (n /= p, f = 1; n % p == 0; n /= p) ++f;
    if (n != 1) throw ParseError("");
    return {p, f};
  } catch (const std::exception&) {
    throw ParseError("--q: expected a prime power or p^f, got '" + s + "'");
  }
}

RootDatum load(const std::string& path, const std::string& q) {
  RootDatum d = load_datum(path);
  if (q.empty()) return d;
  auto [p, f] = parse_q(q);
  std::vector<Vec> roots, coroots;
  for (int i = 0; i < d.num_simple(); ++i) {
    roots.push_back(d.simple_root(i));
    coroots.push_back(d.simple_coroot(i));
  }
  return RootDatum::create(d.rank(), roots, coroots, p, f, d.derived_simply_connected(), d.name());
}

// A Hecke element: a tame element object, {"simple": A} for the lift of a simple
// affine reflection, or an array of {"elt": ..., "coef": integer}.
GenericElt hecke_from_json(const Context& c, const json& j) {
  auto one = [&](const json& e) -> TameElt {
    if (e.is_object() && e.contains("simple")) {
      if (e.size() != 1 || !e["simple"].is_number_integer()) throw ParseError("element.simple: expected an integer");
      int A = e["simple"].get<int>();
      if (A < 0 || A >= c.S.num_simple_affine()) throw ParseError("element.simple: index out of range");
      return c.Hg.simple_lift(A);
    }
    return tame_from_json(c.G, e);
  };
  GenericElt out;
  if (j.is_array()) {
    for (const auto& term : j) {
      if (!term.is_object() || !term.contains("elt")) throw ParseError("term: expected {\"elt\": ..., \"coef\": n}");
      Int coef = 1;
      if (term.contains("coef")) {
        if (!term["coef"].is_number_integer()) throw ParseError("term.coef: expected an integer");
        coef = term["coef"].get<Int>();
      }
      out.add(one(term["elt"]), coef);
    }
    return out;
  }
  out.add(one(j), 1);
  return out;
}

Facet facet_from_json(const RootDatum& d, const json& j) {
  if (j.is_string() && j == "C") return Facet::chamber();
  if (j.is_string() && j == "x0") return d.full_facet();
  if (!j.is_array()) throw ParseError("facet: expected \"C\", \"x0\" or an array of simple root indices");
  Facet F;
  for (const auto& i : j) {
    if (!i.is_number_integer() || i.get<int>() < 0 || i.get<int>() >= d.num_simple())
      throw ParseError("facet: index out of range");
    F.mask |= 1u << i.get<int>();
  }
  return F;
}

json characters_json(const Context& c) {
  json out = json::array();
  for (const auto& chi : enumerate_characters(c.G)) out.push_back(to_json(chi));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in pro-p Iwahori-Hecke rings"};
  app.require_subcommand(1);
  std::string config, q;
  app.add_option("--config", config, "root datum JSON file")->required()->check(CLI::ExistingFile);
  app.add_option("--q", q, "override the residue field size (p or p^f)");

  Bounds b;
  std::vector<std::string> suites;
  std::string out_path;
  auto* run = app.add_subcommand("run", "run verification suites");
  run->add_option("--suite", suites, "suite to run (repeatable; default all)");
  run->add_option("--max-length", b.max_length, "L: maximal length")->check(CLI::NonNegativeNumber);
  run->add_option("--max-coord", b.max_coord, "B: maximal coweight coordinate")->check(CLI::NonNegativeNumber);
  run->add_option("--trials", b.trials, "N: random trials")->check(CLI::NonNegativeNumber);
  run->add_option("--seed", b.seed, "PRNG seed");
  run->add_option("--out", out_path, "report file (default stdout)");

  std::string elt, v_arg, x_arg, a_arg, b_arg, lam_arg, facet_arg = "\"x0\"", sign_arg = "+", xi_arg, pi_arg;
  std::string ring = "generic";
  auto* length = app.add_subcommand("length", "length and reduced word");
  length->add_option("--elt", elt, "{\"w\": word, \"lam\": coweight}")->required();
  auto* bruhat = app.add_subcommand("bruhat", "Bruhat comparison v <= x");
  bruhat->add_option("--v", v_arg)->required();
  bruhat->add_option("--x", x_arg)->required();
  auto* mul = app.add_subcommand("mul", "product in the Hecke ring");
  mul->add_option("--a", a_arg)->required();
  mul->add_option("--b", b_arg)->required();
  mul->add_option("--ring", ring, "generic or modp")->check(CLI::IsMember({"generic", "modp"}));
  auto* bern = app.add_subcommand("bernstein", "integral Bernstein element");
  bern->add_option("--lam", lam_arg)->required();
  bern->add_option("--facet", facet_arg, "\"C\", \"x0\" or simple root indices");
  bern->add_option("--sign", sign_arg)->check(CLI::IsMember({"+", "-"}));
  auto* sat = app.add_subcommand("satake", "Satake images for one dominant coweight");
  sat->add_option("--lam", lam_arg)->required();
  sat->add_option("--xi", xi_arg, "torus character exponents (default: all characters)");
  sat->add_option("--pi-chi", pi_arg, "simple roots whose generator acts by zero");
  app.add_subcommand("characters", "characters of the finite Hecke algebra");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  std::unique_ptr<Context> ctx;
  try {
    ctx = Context::make(load(config, q));
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  const Context& c = *ctx;

  try {
    if (*run) {
      if (suites.empty()) suites = suite_names();
      for (const auto& s : suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
          std::cerr << "unknown suite '" << s << "'\n";
          return kExitConfig;
        }
      std::string started = now_utc();
      std::vector<Check> checks;
      for (const auto& s : suites) {
        auto part = run_suite(c, s, b);
        for (const auto& ch : part)
          std::cerr << std::left << std::setw(11) << ch.suite << std::setw(36) << ch.name << std::setw(8) << ch.verdict
                    << ch.cases << " cases, " << std::fixed << std::setprecision(0) << ch.ms << " ms\n";
        checks.insert(checks.end(), part.begin(), part.end());
      }
      json report = make_report(c, b, std::move(checks), started);
      if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
      } else {
        std::ofstream os(out_path);
        if (!os) {
          std::cerr << "cannot write " << out_path << "\n";
          return kExitConfig;
        }
        os << report.dump(2) << "\n";
      }
      return report["failures"].get<int>() == 0 ? 0 : kExitFail;
    }

    json out;
    if (*length) {
      ExtWeylElt x = ext_from_json(c.W, parse_argument(elt, "--elt"));
      ReducedWord rw = c.S.reduced_word(x);
      out = {{"length", c.W.length(x)}, {"letters", rw.letters}, {"omega", to_json(c.W, rw.omega)}};
    } else if (*bruhat) {
      ExtWeylElt v = ext_from_json(c.W, parse_argument(v_arg, "--v"));
      ExtWeylElt x = ext_from_json(c.W, parse_argument(x_arg, "--x"));
      out = {{"leq", c.S.bruhat_leq(v, x)}};
    } else if (*mul) {
      GenericElt a = hecke_from_json(c, parse_argument(a_arg, "--a"));
      GenericElt bb = hecke_from_json(c, parse_argument(b_arg, "--b"));
      if (ring == "generic")
        out = to_json(c.S, c.Hg.mul(a, bb));
      else
        out = to_json(c.S, c.Hp.mul(specialize(a, c.F), specialize(bb, c.F)));
    } else if (*bern) {
      Vec lam = vec_from_json(parse_argument(lam_arg, "--lam"), c.datum.rank(), "--lam");
      Facet F = facet_from_json(c.datum, parse_argument(facet_arg, "--facet"));
      BernsteinElt be = c.maps(F).bernstein(lam, sign_arg == "+" ? Sign::Plus : Sign::Minus);
      out = {{"facet", F.mask}, {"sign", sign_arg}, {"lam", to_json(lam)}, {"value", to_json(c.S, be.value)}};
    } else if (*sat) {
      Vec lam = vec_from_json(parse_argument(lam_arg, "--lam"), c.datum.rank(), "--lam");
      if (!c.datum.is_dominant(lam)) throw ParseError("--lam: coweight is not dominant");
      std::vector<HeckeCharacter> chars = enumerate_characters(c.G);
      if (!xi_arg.empty()) {
        Vec xi = reduce_mod(vec_from_json(parse_argument(xi_arg, "--xi"), c.datum.rank(), "--xi"), c.G.modulus());
        std::uint32_t pi = 0;
        if (!pi_arg.empty()) pi = facet_from_json(c.datum, parse_argument(pi_arg, "--pi-chi")).mask;
        std::erase_if(chars, [&](const HeckeCharacter& chi) { return !same(chi.xi.exps, xi) || chi.pi_chi != pi; });
        if (chars.empty()) throw ParseError("--xi/--pi-chi: not a character of the finite Hecke algebra");
      }
      out = json::array();
      const bool dsc = c.datum.derived_simply_connected();
      for (const auto& chi : chars) {
        SphericalModule mod(c.Hp, c.F, chi);
        SphericalElt T = c.satake.satake_T(chi, lam);
        std::string why;
        json entry{{"chi", to_json(chi)}, {"lam", to_json(lam)}, {"T", to_json(c.S, T)}};
        entry["eigenvector"] = mod.is_eigenvector(T, &why);
        if (!why.empty()) entry["eigenvector_detail"] = why;
        if (dsc) {
          entry["support_layers"] = T == c.satake.sum_A(chi, lam);
          entry["support_levi_interval"] = T == c.satake.sum_B(chi, lam);
        } else {
          entry["support"] = "skipped: hypothesis not satisfied";
        }
        out.push_back(std::move(entry));
      }
    } else {
      out = characters_json(c);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DatumError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
