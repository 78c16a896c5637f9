#include "hodge/root_datum.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "hodge/errors.hpp"

namespace hodge {

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw UsageError("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(text), 1);
    long long num = std::stoll(text.substr(0, slash));
    long long den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in '" + text + "'");
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed rational '" + text + "'");
  } catch (const std::out_of_range&) {
    throw UsageError("rational out of range '" + text + "'");
  }
}

bool is_admissible(const SimpleType& t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 3;
    case Family::D: return t.rank >= 4;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

SimpleType parse_simple_type(const std::string& text) {
  if (text.size() < 2) throw UsageError("malformed algebra '" + text + "' (expected letter+rank, e.g. C3)");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'G')
    throw UsageError("unknown family letter in '" + text + "'");
  int rank = 0;
  try {
    size_t pos = 0;
    rank = std::stoi(text.substr(1), &pos);
    if (pos + 1 != text.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw UsageError("malformed rank in '" + text + "'");
  }
  SimpleType t{static_cast<Family>(letter), rank};
  if (!is_admissible(t))
    throw DomainError("inadmissible type " + text +
                      " (canonical list: A r>=1, B r>=2, C r>=3, D r>=4, E 6..8, F4, G2)");
  return t;
}

std::string to_string(const SimpleType& t) {
  return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

long long algebra_dimension(const SimpleType& t) {
  long long r = t.rank;
  switch (t.family) {
    case Family::A: return r * (r + 2);
    case Family::B:
    case Family::C: return r * (2 * r + 1);
    case Family::D: return r * (2 * r - 1);
    case Family::E: return t.rank == 6 ? 78 : (t.rank == 7 ? 133 : 248);
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

bool Weight::is_zero() const {
  return std::all_of(fw.begin(), fw.end(), [](long long c) { return c == 0; });
}

bool Weight::is_dominant() const {
  return std::all_of(fw.begin(), fw.end(), [](long long c) { return c >= 0; });
}

Weight operator+(const Weight& a, const Weight& b) {
  assert(a.fw.size() == b.fw.size());
  Weight out = a;
  for (size_t i = 0; i < b.fw.size(); ++i) out.fw[i] += b.fw[i];
  return out;
}

bool GradingElement::is_zero() const {
  return std::all_of(bits.begin(), bits.end(), [](int b) { return b == 0; });
}

int GradingElement::node_count() const {
  return static_cast<int>(std::count(bits.begin(), bits.end(), 1));
}

Weight permute_weight(const Weight& w, const std::vector<int>& perm) {
  Weight out;
  out.fw.assign(w.fw.size(), 0);
  for (size_t i = 0; i < w.fw.size(); ++i) out.fw[perm[i]] = w.fw[i];
  return out;
}

GradingElement permute_grading(const GradingElement& e, const std::vector<int>& perm) {
  GradingElement out;
  out.bits.assign(e.bits.size(), 0);
  for (size_t i = 0; i < e.bits.size(); ++i) out.bits[perm[i]] = e.bits[i];
  return out;
}

namespace {

std::vector<std::vector<long long>> cartan_matrix(const SimpleType& t) {
  int r = t.rank;
  std::vector<std::vector<long long>> c(r, std::vector<long long>(r, 0));
  for (int i = 0; i < r; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      c[r - 2][r - 1] = -2;  // alpha_r is short
      break;
    case Family::C:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      c[r - 1][r - 2] = -2;  // alpha_r is long
      break;
    case Family::D:
      for (int i = 0; i + 1 < r - 1; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-..., node 2 attached to node 4.
      link(0, 2);
      for (int i = 2; i + 1 < r; ++i) link(i, i + 1);
      link(1, 3);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[1][2] = -2;  // alpha_3, alpha_4 short
      break;
    case Family::G:
      link(0, 1);
      c[1][0] = -3;  // alpha_2 is long
      break;
  }
  return c;
}

std::vector<std::vector<Rat>> invert_exact(const std::vector<std::vector<long long>>& m) {
  size_t n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n + i] = Rat(1);
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == Rat(0)) ++piv;
    assert(piv < n);
    std::swap(a[piv], a[col]);
    Rat inv = Rat(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == Rat(0)) continue;
      Rat f = a[row][col];
      for (size_t j = 0; j < 2 * n; ++j) a[row][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

std::vector<long long> symmetrizer_from_cartan(const std::vector<std::vector<long long>>& c) {
  size_t n = c.size();
  std::vector<Rat> s(n, Rat(0));
  s[0] = Rat(1);
  // Propagate s_i * c_ij = s_j * c_ji along edges; the diagram is connected.
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < n; ++i) {
      if (s[i] == Rat(0)) continue;
      for (size_t j = 0; j < n; ++j) {
        if (i == j || c[i][j] == 0 || s[j] != Rat(0)) continue;
        s[j] = s[i] * Rat(c[j][i]) / Rat(c[i][j]);
        changed = true;
      }
    }
  }
  Rat lo = s[0];
  for (const auto& x : s) lo = std::min(lo, x);
  std::vector<long long> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = to_integer(s[i] / lo);
  return out;
}

// Positive roots by closure along root strings, level by level in height.
std::vector<std::vector<long long>> positive_root_closure(const std::vector<std::vector<long long>>& c) {
  size_t n = c.size();
  std::vector<std::vector<long long>> roots;
  std::map<std::vector<long long>, size_t> index;
  for (size_t i = 0; i < n; ++i) {
    std::vector<long long> simple(n, 0);
    simple[i] = 1;
    index[simple] = roots.size();
    roots.push_back(simple);
  }
  // pairing <beta, alpha_i^vee> for beta in simple-root coordinates
  auto pair = [&](const std::vector<long long>& beta, size_t i) {
    long long v = 0;
    for (size_t j = 0; j < n; ++j) v += beta[j] * c[j][i];
    return v;
  };
  for (size_t k = 0; k < roots.size(); ++k) {
    std::vector<long long> beta = roots[k];
    for (size_t i = 0; i < n; ++i) {
      long long p = 0;
      std::vector<long long> down = beta;
      for (;;) {
        down[i] -= 1;
        bool zero = std::all_of(down.begin(), down.end(), [](long long x) { return x == 0; });
        if (zero || !index.count(down)) break;
        ++p;
      }
      long long q = p - pair(beta, i);
      if (q >= 1) {
        std::vector<long long> up = beta;
        up[i] += 1;
        if (!index.count(up)) {
          index[up] = roots.size();
          roots.push_back(up);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<int> duality_permutation_for(const SimpleType& t) {
  std::vector<int> p = identity_perm(t.rank);
  switch (t.family) {
    case Family::A:
      std::reverse(p.begin(), p.end());
      break;
    case Family::D:
      if (t.rank % 2 == 1) std::swap(p[t.rank - 2], p[t.rank - 1]);
      break;
    case Family::E:
      if (t.rank == 6) {
        std::swap(p[0], p[5]);
        std::swap(p[2], p[4]);
      }
      break;
    default:
      break;
  }
  return p;
}

std::vector<std::vector<int>> diagram_automorphisms_for(const SimpleType& t) {
  std::vector<std::vector<int>> auts;
  auts.push_back(identity_perm(t.rank));
  switch (t.family) {
    case Family::A:
      if (t.rank >= 2) {
        auto p = identity_perm(t.rank);
        std::reverse(p.begin(), p.end());
        auts.push_back(p);
      }
      break;
    case Family::D:
      if (t.rank == 4) {
        // Full triality: S3 on the outer nodes {1,3,4}, node 2 fixed.
        int outer[3] = {0, 2, 3};
        int perm3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        auts.clear();
        for (auto& sigma : perm3) {
          auto p = identity_perm(4);
          for (int k = 0; k < 3; ++k) p[outer[k]] = outer[sigma[k]];
          auts.push_back(p);
        }
      } else {
        auto p = identity_perm(t.rank);
        std::swap(p[t.rank - 2], p[t.rank - 1]);
        auts.push_back(p);
      }
      break;
    case Family::E:
      if (t.rank == 6) {
        auto p = identity_perm(6);
        std::swap(p[0], p[5]);
        std::swap(p[2], p[4]);
        auts.push_back(p);
      }
      break;
    default:
      break;
  }
  return auts;
}

std::unique_ptr<RootDatum> construct(const SimpleType& t) {
  auto d = std::make_unique<RootDatum>();
  d->type = t;
  d->cartan = cartan_matrix(t);
  d->inverse_cartan = invert_exact(d->cartan);
  d->symmetrizer = symmetrizer_from_cartan(d->cartan);
  d->positive_roots = positive_root_closure(d->cartan);
  d->rho.fw.assign(t.rank, 1);
  d->duality_perm_ = duality_permutation_for(t);
  d->diagram_auts_ = diagram_automorphisms_for(t);

  long long expected = (algebra_dimension(t) - t.rank) / 2;
  if (static_cast<long long>(d->positive_roots.size()) != expected)
    throw std::logic_error("root closure of " + to_string(t) + " produced " +
                           std::to_string(d->positive_roots.size()) + " roots, expected " +
                           std::to_string(expected));

  // Highest root: unique root of maximal height, maximal coordinate-wise.
  auto height = [](const std::vector<long long>& v) {
    return std::accumulate(v.begin(), v.end(), 0LL);
  };
  d->highest_root = d->positive_roots.front();
  for (const auto& beta : d->positive_roots)
    if (height(beta) > height(d->highest_root)) d->highest_root = beta;
  for (const auto& beta : d->positive_roots)
    for (int i = 0; i < t.rank; ++i)
      if (beta[i] > d->highest_root[i])
        throw std::logic_error("highest root of " + to_string(t) + " is not maximal");

  // Symmetrized Cartan matrix must be symmetric and positive definite.
  int r = t.rank;
  std::vector<std::vector<Rat>> b(r, std::vector<Rat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) b[i][j] = Rat(d->cartan[i][j] * d->symmetrizer[j]);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (b[i][j] != b[j][i]) throw std::logic_error("symmetrizer failed for " + to_string(t));
  for (int k = 1; k <= r; ++k) {
    // leading principal minor via Gaussian elimination
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m[i][j] = b[i][j];
    Rat det(1);
    for (int col = 0; col < k; ++col) {
      int piv = col;
      while (piv < k && m[piv][col] == Rat(0)) ++piv;
      if (piv == k) { det = Rat(0); break; }
      if (piv != col) { std::swap(m[piv], m[col]); det = -det; }
      det *= m[col][col];
      for (int row = col + 1; row < k; ++row) {
        Rat f = m[row][col] / m[col][col];
        for (int j = col; j < k; ++j) m[row][j] -= f * m[col][j];
      }
    }
    if (det <= Rat(0)) throw std::logic_error("symmetrized Cartan matrix of " + to_string(t) + " is not positive definite");
  }

  // Diagram automorphisms must preserve the Cartan matrix.
  for (const auto& p : d->diagram_auts_)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (d->cartan[p[i]][p[j]] != d->cartan[i][j])
          throw std::logic_error("diagram automorphism check failed for " + to_string(t));

  return d;
}

}  // namespace

const RootDatum& build_root_datum(const SimpleType& t) {
  if (!is_admissible(t))
    throw DomainError("inadmissible type " + std::string(1, static_cast<char>(t.family)) +
                      std::to_string(t.rank) +
                      " (canonical list: A r>=1, B r>=2, C r>=3, D r>=4, E 6..8, F4, G2)");
  static std::mutex mu;
  static std::map<SimpleType, std::unique_ptr<RootDatum>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, construct(t)).first;
  return *it->second;
}

std::vector<Rat> RootDatum::root_coords(const Weight& w) const {
  assert(static_cast<int>(w.fw.size()) == rank());
  std::vector<Rat> v(rank(), Rat(0));
  for (int j = 0; j < rank(); ++j)
    for (int i = 0; i < rank(); ++i) v[j] += Rat(w.fw[i]) * inverse_cartan[i][j];
  return v;
}

Rat RootDatum::eval_on_grading(const Weight& w, const GradingElement& e) const {
  assert(static_cast<int>(e.bits.size()) == rank());
  auto rc = root_coords(w);
  Rat out(0);
  for (int i = 0; i < rank(); ++i)
    if (e.bits[i]) out += rc[i];
  return out;
}

Rat RootDatum::parity_element_eval(const Weight& w, const GradingElement& e) const {
  auto rc = root_coords(w);
  Rat out(0);
  for (int i = 0; i < rank(); ++i)
    if (!e.bits[i]) out += rc[i];
  return Rat(2) * out;
}

long long RootDatum::highest_root_eval(const GradingElement& e) const {
  long long out = 0;
  for (int i = 0; i < rank(); ++i)
    if (e.bits[i]) out += highest_root[i];
  return out;
}

Weight RootDatum::dual_weight(const Weight& w) const { return permute_weight(w, duality_perm_); }

Rat RootDatum::pairing_fw_root(const std::vector<long long>& fw, const std::vector<Rat>& rc) const {
  Rat out(0);
  for (int j = 0; j < rank(); ++j) out += Rat(fw[j] * symmetrizer[j]) * rc[j];
  return out;
}

}  // namespace hodge
