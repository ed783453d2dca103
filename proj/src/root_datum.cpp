#include "prohecke/root_datum.hpp"

#include <Eigen/LU>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace prohecke {

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
  os << ')';
  return os.str();
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

constexpr int kRootCap = 1000;

struct RawRoot {
  Vec weight, coroot, coords;
};

// Closure of the simple roots under simple reflections, done in simple coordinates only.
// Returns nullopt if the closure exceeds the cap or a root of mixed sign shows up.
std::optional<std::vector<Vec>> closure_coords(const Mat& C, const std::vector<int>& idx) {
  const int n = static_cast<int>(idx.size());
  std::vector<Vec> out;
  std::set<std::vector<Int>> seen;
  std::vector<Vec> frontier;
  for (int i = 0; i < n; ++i) {
    Vec e = Vec::Zero(n);
    e(i) = 1;
    seen.insert(to_std(e));
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    Vec c = frontier.back();
    frontier.pop_back();
    out.push_back(c);
    if (static_cast<int>(seen.size()) > kRootCap) return std::nullopt;
    for (int i = 0; i < n; ++i) {
      Int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += c(j) * C(idx[i], idx[j]);
      Vec d = c;
      d(i) -= pairing;
      bool pos = (d.array() >= 0).all(), neg = (d.array() <= 0).all();
      if (!pos && !neg) return std::nullopt;
      if (neg) continue;
      if (seen.insert(to_std(d)).second) frontier.push_back(d);
    }
  }
  return out;
}

std::string submatrix_string(const Mat& C, const std::vector<int>& idx) {
  std::ostringstream os;
  os << "indices {";
  for (std::size_t a = 0; a < idx.size(); ++a) os << (a ? "," : "") << idx[a];
  os << "} submatrix [";
  for (std::size_t a = 0; a < idx.size(); ++a) {
    os << (a ? "; " : "");
    for (std::size_t b = 0; b < idx.size(); ++b) os << (b ? " " : "") << C(idx[a], idx[b]);
  }
  os << ']';
  return os.str();
}

int matrix_rank(const std::vector<Vec>& rows, int cols) {
  if (rows.empty()) return 0;
  Eigen::MatrixXd m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), j) = static_cast<double>(rows[i](j));
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  return static_cast<int>(lu.rank());
}

}  // namespace

RootDatum RootDatum::create(int rank, std::vector<Vec> simple_roots, std::vector<Vec> simple_coroots,
                            int p, int f, bool dsc, std::string name) {
  if (rank < 1 || rank > kMaxRank)
    throw DatumError("rank must lie in [1, " + std::to_string(kMaxRank) + "], got " + std::to_string(rank));
  if (simple_roots.size() != simple_coroots.size())
    throw DatumError("simple_roots and simple_coroots have different lengths");
  const int n = static_cast<int>(simple_roots.size());
  if (n > rank) throw DatumError("more simple roots than the rank");
  for (int i = 0; i < n; ++i) {
    if (simple_roots[i].size() != rank)
      throw DatumError("simple_roots[" + std::to_string(i) + "] has wrong length");
    if (simple_coroots[i].size() != rank)
      throw DatumError("simple_coroots[" + std::to_string(i) + "] has wrong length");
  }
  if (!is_prime(p)) throw DatumError("q.p = " + std::to_string(p) + " is not prime");
  if (f < 1) throw DatumError("q.f must be >= 1");
  Int q = 1;
  for (int i = 0; i < f; ++i) {
    q *= p;
    if (q > 4096) throw DatumError("q = p^f exceeds the supported bound 4096");
  }

  RootDatum d;
  d.rank_ = rank;
  d.simple_roots_ = std::move(simple_roots);
  d.simple_coroots_ = std::move(simple_coroots);
  d.p_ = p;
  d.f_ = f;
  d.q_ = q;
  d.dsc_ = dsc;
  d.name_ = std::move(name);

  d.cartan_ = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.cartan_(i, j) = d.simple_coroots_[i].dot(d.simple_roots_[j]);
  for (int i = 0; i < n; ++i)
    if (d.cartan_(i, i) != 2)
      throw DatumError("<coroot " + std::to_string(i) + ", root " + std::to_string(i) + "> = " +
                       std::to_string(d.cartan_(i, i)) + ", expected 2");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (d.cartan_(i, j) > 0 || ((d.cartan_(i, j) == 0) != (d.cartan_(j, i) == 0)))
        throw DatumError("not a Cartan matrix at " + submatrix_string(d.cartan_, {i, j}));
    }
  if (matrix_rank(d.simple_roots_, rank) != n) throw DatumError("simple roots are linearly dependent");
  if (matrix_rank(d.simple_coroots_, rank) != n) throw DatumError("simple coroots are linearly dependent");

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  if (!closure_coords(d.cartan_, all)) {
    // Report the smallest principal submatrix whose closure already fails.
    for (int size = 1; size <= n; ++size) {
      std::vector<bool> pick(n, false);
      std::fill(pick.begin(), pick.begin() + size, true);
      do {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
          if (pick[i]) idx.push_back(i);
        if (!closure_coords(d.cartan_, idx))
          throw DatumError("Cartan matrix is not of finite type; offending " +
                           submatrix_string(d.cartan_, idx));
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    throw DatumError("Cartan matrix is not of finite type");
  }

  // Generate (weight, coroot, coords) triples by reflecting.
  std::vector<RawRoot> pos;
  std::map<std::vector<Int>, int> seen;
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    Vec e = Vec::Zero(n);
    e(i) = 1;
    pos.push_back({d.simple_roots_[i], d.simple_coroots_[i], e});
    seen[to_std(e)] = i;
    stack.push_back(i);
  }
  while (!stack.empty()) {
    RawRoot r = pos[stack.back()];
    stack.pop_back();
    for (int i = 0; i < n; ++i) {
      Int m = d.simple_coroots_[i].dot(r.weight);
      Vec coords = r.coords;
      coords(i) -= m;
      if ((coords.array() <= 0).all()) continue;
      auto key = to_std(coords);
      if (seen.count(key)) continue;
      RawRoot s;
      s.weight = r.weight - m * d.simple_roots_[i];
      s.coroot = r.coroot - r.coroot.dot(d.simple_roots_[i]) * d.simple_coroots_[i];
      s.coords = coords;
      seen[key] = static_cast<int>(pos.size());
      pos.push_back(s);
      stack.push_back(static_cast<int>(pos.size()) - 1);
    }
  }
  std::sort(pos.begin(), pos.end(), [](const RawRoot& a, const RawRoot& b) {
    Int ha = a.coords.sum(), hb = b.coords.sum();
    if (ha != hb) return ha < hb;
    return lex_less(b.coords, a.coords);
  });
  for (const auto& r : pos)
    d.roots_.push_back({r.weight, r.coroot, r.coords, true, static_cast<int>(r.coords.sum())});
  for (const auto& r : pos)
    d.roots_.push_back({-r.weight, -r.coroot, -r.coords, false, -static_cast<int>(r.coords.sum())});
  for (const auto& r : d.roots_)
    if (r.coroot.dot(r.weight) != 2)
      throw DatumError("coroot map inconsistent at root " + to_string(r.weight));
  return d;
}

int RootDatum::negative_of(int idx) const {
  int N = num_positive();
  return idx < N ? idx + N : idx - N;
}

int RootDatum::root_index(const Vec& weight) const {
  for (int i = 0; i < num_roots(); ++i)
    if (same(roots_[i].weight, weight)) return i;
  return -1;
}

bool RootDatum::in_facet(int idx, Facet F) const {
  const Vec& c = roots_[idx].simple_coords;
  for (int i = 0; i < c.size(); ++i)
    if (c(i) != 0 && !F.contains(i)) return false;
  return true;
}

std::vector<int> RootDatum::facet_roots(Facet F) const {
  std::vector<int> out;
  for (int i = 0; i < num_roots(); ++i)
    if (in_facet(i, F)) out.push_back(i);
  return out;
}

std::vector<int> RootDatum::facet_positive_roots(Facet F) const {
  std::vector<int> out;
  for (int i = 0; i < num_positive(); ++i)
    if (in_facet(i, F)) out.push_back(i);
  return out;
}

std::vector<Facet> RootDatum::facets() const {
  std::vector<Facet> out;
  for (std::uint32_t m = 0; m < (1u << num_simple()); ++m) out.push_back({m});
  return out;
}

std::vector<int> RootDatum::minimal_roots(Facet F) const {
  auto rs = facet_roots(F);
  std::vector<int> out;
  for (int b : rs) {
    bool minimal = true;
    for (int g : rs) {
      if (g == b) continue;
      Vec diff = roots_[b].simple_coords - roots_[g].simple_coords;
      if ((diff.array() >= 0).all()) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(b);
  }
  return out;
}

Vec RootDatum::reflect_coweight(const Vec& lam, int root) const {
  return lam - lam.dot(roots_[root].weight) * roots_[root].coroot;
}

Vec RootDatum::reflect_weight(const Vec& chi, int root) const {
  return chi - roots_[root].coroot.dot(chi) * roots_[root].weight;
}

bool RootDatum::is_dominant(const Vec& lam) const {
  for (int i = 0; i < num_simple(); ++i)
    if (lam.dot(simple_roots_[i]) < 0) return false;
  return true;
}

std::pair<Vec, std::vector<int>> RootDatum::dominant_representative(const Vec& lam) const {
  Vec cur = lam;
  std::vector<int> applied;
  for (;;) {
    int bad = -1;
    for (int i = 0; i < num_simple(); ++i)
      if (cur.dot(simple_roots_[i]) < 0) {
        bad = i;
        break;
      }
    if (bad < 0) return {cur, applied};
    cur = reflect_coweight(cur, bad);
    applied.push_back(bad);
  }
}

std::vector<Vec> RootDatum::orbit(const Vec& lam) const {
  std::vector<Vec> out{lam};
  std::unordered_map<Vec, int, VecHash, VecEq> seen{{lam, 0}};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i = 0; i < num_simple(); ++i) {
      Vec m = reflect_coweight(out[k], i);
      if (seen.emplace(m, 0).second) out.push_back(m);
    }
  return out;
}

std::optional<Vec> RootDatum::coroot_coordinates(const Vec& lam, Facet F) const {
  std::vector<int> idx;
  for (int i = 0; i < num_simple(); ++i)
    if (F.contains(i)) idx.push_back(i);
  Vec c = Vec::Zero(num_simple());
  if (idx.empty()) {
    if ((lam.array() == 0).all()) return c;
    return std::nullopt;
  }
  // Pair against the simple roots of F; the restricted Cartan matrix is invertible.
  const int k = static_cast<int>(idx.size());
  Eigen::MatrixXd A(k, k);
  Eigen::VectorXd b(k);
  for (int a = 0; a < k; ++a) {
    b(a) = static_cast<double>(lam.dot(simple_roots_[idx[a]]));
    for (int j = 0; j < k; ++j) A(a, j) = static_cast<double>(cartan_(idx[j], idx[a]));
  }
  Eigen::VectorXd x = A.fullPivLu().solve(b);
  Vec recon = Vec::Zero(rank_);
  for (int a = 0; a < k; ++a) {
    Int r = static_cast<Int>(std::llround(x(a)));
    c(idx[a]) = r;
    recon += r * simple_coroots_[idx[a]];
  }
  if (!same(recon, lam)) return std::nullopt;
  return c;
}

bool RootDatum::preceq(const Vec& mu, const Vec& lam, Facet F) const {
  auto c = coroot_coordinates(lam - mu, F);
  return c && (c->array() >= 0).all();
}

std::vector<Vec> RootDatum::dominant_below(const Vec& lam) const { return dominant_below(lam, full_facet()); }

std::vector<Vec> RootDatum::dominant_below(const Vec& lam, Facet F) const {
  // Coefficients are bounded by those of lam - w0(lam).
  Vec lowest = -dominant_representative(-lam).first;
  auto bound = coroot_coordinates(lam - lowest, full_facet());
  std::vector<Vec> out;
  if (!bound) return out;
  const int n = num_simple();
  Vec c = Vec::Zero(n);
  for (;;) {
    Vec mu = lam;
    for (int i = 0; i < n; ++i) mu -= c(i) * simple_coroots_[i];
    if (is_dominant(mu)) out.push_back(mu);
    int i = 0;
    for (; i < n; ++i) {
      if (!F.contains(i)) continue;
      if (c(i) < (*bound)(i)) {
        ++c(i);
        break;
      }
      c(i) = 0;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::string RootDatum::cartan_type() const {
  const int n = num_simple();
  std::vector<bool> done(n, false);
  std::vector<std::string> parts;
  for (int s = 0; s < n; ++s) {
    if (done[s]) continue;
    std::vector<int> comp{s};
    done[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (!done[j] && cartan_(comp[k], j) != 0) {
          done[j] = true;
          comp.push_back(j);
        }
    const int m = static_cast<int>(comp.size());
    int maxbond = 1, branch = 0;
    for (int a : comp) {
      int deg = 0;
      for (int b : comp)
        if (a != b && cartan_(a, b) != 0) {
          ++deg;
          maxbond = std::max<int>(maxbond, static_cast<int>(cartan_(a, b) * cartan_(b, a)));
        }
      if (deg >= 3) branch = 1;
    }
    std::string t;
    if (maxbond == 3) {
      t = "G";
    } else if (maxbond == 2) {
      if (m == 4) {
        t = "F";
      } else if (m == 2) {
        t = "C";
      } else {
        // C_n: the double bond's long root is a leaf of the diagram.
        t = "B";
        for (int a : comp)
          for (int b : comp)
            if (a != b && cartan_(a, b) == -2) {
              int deg = 0;
              for (int c : comp)
                if (c != b && cartan_(b, c) != 0) ++deg;
              if (deg == 1) t = "C";
            }
      }
    } else if (branch) {
      t = m >= 6 && m <= 8 ? "E" : "D";
      if (m >= 6 && m <= 8) {
        // D_n has a branch node with two leaf neighbours.
        for (int a : comp) {
          int deg = 0, leaves = 0;
          for (int b : comp)
            if (a != b && cartan_(a, b) != 0) {
              ++deg;
              int db = 0;
              for (int c : comp)
                if (c != b && cartan_(b, c) != 0) ++db;
              if (db == 1) ++leaves;
            }
          if (deg == 3 && leaves >= 2) t = "D";
        }
      }
    } else {
      t = "A";
    }
    parts.push_back(t + std::to_string(m));
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "x" : "") + parts[i];
  int torus = rank_ - n;
  if (torus > 0) out += (out.empty() ? "" : "+") + std::string("T") + std::to_string(torus);
  return out.empty() ? "T0" : out;
}

namespace {

using nlohmann::json;


Vec int_array(const json& j, const std::string& field, int len) {
  if (!j.is_array()) throw DatumError("field '" + field + "': expected an array of integers");
  if (static_cast<int>(j.size()) != len)
    throw DatumError("field '" + field + "': expected " + std::to_string(len) + " entries, got " +
                     std::to_string(j.size()));
  Vec v(len);
  for (int i = 0; i < len; ++i) {
    if (!j[i].is_number_integer())
      throw DatumError("field '" + field + "[" + std::to_string(i) + "]': expected an integer");
    v(i) = j[i].get<Int>();
  }
  return v;
}

const json& require(const json& j, const std::string& key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw DatumError("field '" + path + key + "': missing");
  return *it;
}

}  // namespace

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

RootDatum parse_datum(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DatumError("malformed JSON at " + line_col(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + e.what());
  }
  if (!j.is_object()) throw DatumError("top level: expected an object");
  static const std::set<std::string> known{"rank", "simple_roots", "simple_coroots", "q",
                                           "derived_simply_connected", "name"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) throw DatumError("field '" + it.key() + "': unknown key");

  const json& jr = require(j, "rank", "");
  if (!jr.is_number_integer()) throw DatumError("field 'rank': expected an integer");
  int rank = jr.get<int>();
  if (rank < 1 || rank > kMaxRank) throw DatumError("field 'rank': must lie in [1, 8]");

  auto list = [&](const char* key) {
    const json& a = require(j, key, "");
    if (!a.is_array()) throw DatumError(std::string("field '") + key + "': expected an array");
    std::vector<Vec> out;
    for (std::size_t i = 0; i < a.size(); ++i)
      out.push_back(int_array(a[i], std::string(key) + "[" + std::to_string(i) + "]", rank));
    return out;
  };
  auto roots = list("simple_roots");
  auto coroots = list("simple_coroots");

  const json& jq = require(j, "q", "");
  if (!jq.is_object()) throw DatumError("field 'q': expected an object {\"p\": int, \"f\": int}");
  const json& jp = require(jq, "p", "q.");
  const json& jf = require(jq, "f", "q.");
  if (!jp.is_number_integer()) throw DatumError("field 'q.p': expected an integer");
  if (!jf.is_number_integer()) throw DatumError("field 'q.f': expected an integer");

  const json& jd = require(j, "derived_simply_connected", "");
  if (!jd.is_boolean()) throw DatumError("field 'derived_simply_connected': expected a boolean");

  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw DatumError("field 'name': expected a string");
    name = j["name"].get<std::string>();
  }
  return RootDatum::create(rank, roots, coroots, jp.get<int>(), jf.get<int>(), jd.get<bool>(), name);
}

RootDatum load_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatumError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_datum(ss.str());
}

}  // namespace prohecke
