#pragma once

#include "prohecke/context.hpp"
#include "prohecke/io.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace prohecke {

struct Bounds {
  int max_length = 6;  // L
  int max_coord = 2;   // B
  int trials = 200;    // N
  std::uint64_t seed = 1;
};

/// One report entry. Wall time is kept apart so entries stay reproducible.
struct Check {
  std::string suite;
  std::string name;
  json params = json::object();
  std::string verdict = "pass";  // pass | fail | skipped
  std::string reason;
  json witness;
  json info;
  long cases = 0;
  double ms = 0;

  bool failed() const { return verdict == "fail"; }
};

/// Collects cases for one check; the first failure is kept as the witness.
class Probe {
 public:
  explicit Probe(Check& c) : c_(&c) {}
  bool expect(bool ok, const std::function<json()>& witness) {
    ++c_->cases;
    if (!ok && c_->verdict == "pass") {
      c_->verdict = "fail";
      c_->witness = witness();
    }
    return ok;
  }
  void info(const std::string& key, json v) { c_->info[key] = std::move(v); }
  void skip(std::string reason) {
    c_->verdict = "skipped";
    c_->reason = std::move(reason);
  }
  bool failed() const { return c_->failed(); }

 private:
  Check* c_;
};

const std::vector<std::string>& suite_names();
/// Runs one suite; unknown names throw std::invalid_argument.
std::vector<Check> run_suite(const Context& ctx, const std::string& suite, const Bounds& b);

/// Enumeration helpers shared with the tests.
std::vector<Vec> coweight_box(int rank, int bound);
std::vector<Vec> dominant_box(const RootDatum& d, int bound);
/// Elements of length zero with translation part in the box.
std::vector<ExtWeylElt> omega_box(const WeylGroup& W, int bound);
/// Elements of length at most L whose length zero part lies in omega_box(bound).
std::vector<ExtWeylElt> ball(const AffineSystem& S, int L, int bound);

json datum_summary(const Context& ctx);
/// Entries sorted by suite then check name then parameters; timings and the start
/// time go to the header.
json make_report(const Context& ctx, const Bounds& b, std::vector<Check> checks, const std::string& started);

}  // namespace prohecke
