#include "hodge/weights.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <cassert>
#include <limits>
#include <mutex>
#include <set>

#include "hodge/errors.hpp"

namespace hodge {

using boost::multiprecision::cpp_int;

long long WeightSystem::dimension() const {
  long long d = 0;
  for (const auto& [w, m] : entries) d += m;
  return d;
}

long long weyl_dimension(const RootDatum& datum, const Weight& mu) {
  if (static_cast<int>(mu.fw.size()) != datum.rank())
    throw DomainError("weight rank mismatch for " + to_string(datum.type));
  if (!mu.is_dominant())
    throw DomainError("weyl_dimension requires a dominant weight");
  // (mu+rho, alpha) = sum_j (mu+rho)^j s_j alpha_j with alpha in simple-root
  // coordinates; every factor is an integer, so the quotient is exact.
  cpp_int num = 1, den = 1;
  for (const auto& alpha : datum.positive_roots) {
    cpp_int a = 0, b = 0;
    for (int j = 0; j < datum.rank(); ++j) {
      long long s = datum.symmetrizer[j];
      a += cpp_int((mu.fw[j] + 1) * s) * alpha[j];
      b += cpp_int(s) * alpha[j];
    }
    num *= a;
    den *= b;
  }
  cpp_int dim = num / den;
  assert(dim * den == num);
  assert(dim > 0 && dim <= cpp_int(std::numeric_limits<long long>::max()));
  return dim.convert_to<long long>();
}

namespace {

// alpha_i in fundamental-weight coordinates is row i of the Cartan matrix.
std::vector<long long> simple_root_fw(const RootDatum& datum, int i) {
  return datum.cartan[i];
}

// All weights of U_mu, level by level in the height of mu - lambda.  One
// downward step per level suffices: the alpha-string through a weight
// continues downward exactly while q = p + <lam, alpha_i^vee> stays positive,
// and p is complete once all higher levels are built.
std::vector<std::vector<Weight>> weight_levels(const RootDatum& datum, const Weight& mu) {
  std::vector<std::vector<Weight>> levels;
  std::set<Weight> seen;
  levels.push_back({mu});
  seen.insert(mu);
  while (!levels.back().empty()) {
    const auto& cur = levels.back();
    std::set<Weight> next;
    for (const auto& lam : cur) {
      for (int i = 0; i < datum.rank(); ++i) {
        auto ai = simple_root_fw(datum, i);
        long long p = 0;
        Weight probe = lam;
        for (;;) {
          for (int j = 0; j < datum.rank(); ++j) probe.fw[j] += ai[j];
          if (!seen.count(probe)) break;
          ++p;
        }
        if (p + lam.fw[i] >= 1) {
          Weight down = lam;
          for (int j = 0; j < datum.rank(); ++j) down.fw[j] -= ai[j];
          next.insert(down);
        }
      }
    }
    levels.emplace_back(next.begin(), next.end());
    seen.insert(next.begin(), next.end());
  }
  levels.pop_back();
  return levels;
}

}  // namespace

WeightSystem weight_system(const RootDatum& datum, const Weight& mu, long long dim_cap) {
  long long dim = weyl_dimension(datum, mu);
  if (dim > dim_cap)
    throw ResourceError("weight system of " + to_string(datum.type) + " module has dimension " +
                        std::to_string(dim) + " exceeding cap " + std::to_string(dim_cap));

  auto levels = weight_levels(datum, mu);
  std::set<Weight> in_system;
  for (const auto& level : levels) in_system.insert(level.begin(), level.end());

  // Freudenthal recursion, top-down by level.
  const int r = datum.rank();
  std::vector<std::vector<long long>> alpha_fw;  // positive roots in fw coordinates
  std::vector<std::vector<Rat>> alpha_rc;
  for (const auto& alpha : datum.positive_roots) {
    std::vector<long long> fw(r, 0);
    for (int j = 0; j < r; ++j)
      for (int a = 0; a < r; ++a) fw[j] += alpha[a] * datum.cartan[a][j];
    alpha_fw.push_back(std::move(fw));
    std::vector<Rat> rc(r);
    for (int j = 0; j < r; ++j) rc[j] = Rat(alpha[j]);
    alpha_rc.push_back(std::move(rc));
  }
  auto norm_shift = [&](const Weight& lam) {
    Weight shifted = lam + datum.rho;
    return datum.pairing_fw_root(shifted.fw, datum.root_coords(shifted));
  };
  Rat top_norm = norm_shift(mu);

  std::map<Weight, long long> mult;
  mult[mu] = 1;
  for (size_t h = 1; h < levels.size(); ++h) {
    for (const auto& lam : levels[h]) {
      Rat acc(0);
      for (size_t a = 0; a < alpha_fw.size(); ++a) {
        Weight probe = lam;
        for (;;) {
          for (int j = 0; j < r; ++j) probe.fw[j] += alpha_fw[a][j];
          if (!in_system.count(probe)) break;
          acc += Rat(mult.at(probe)) * datum.pairing_fw_root(probe.fw, alpha_rc[a]);
        }
      }
      Rat denom = top_norm - norm_shift(lam);
      assert(denom != Rat(0));
      Rat m = Rat(2) * acc / denom;
      assert(is_integer(m) && m > Rat(0));
      mult[lam] = to_integer(m);
    }
  }

  WeightSystem out;
  out.highest = mu;
  out.entries = std::move(mult);
  long long total = out.dimension();
  if (total != dim)
    throw std::logic_error("weight system of " + to_string(datum.type) + " sums to " +
                           std::to_string(total) + ", Weyl dimension is " + std::to_string(dim));
  return out;
}

const WeightSystem& cached_weight_system(const RootDatum& datum, const Weight& mu,
                                         long long dim_cap) {
  static std::mutex cache_lock;
  static std::map<std::pair<SimpleType, Weight>, WeightSystem> cache;
  {
    std::lock_guard<std::mutex> lock(cache_lock);
    auto it = cache.find({datum.type, mu});
    if (it != cache.end()) return it->second;
  }
  WeightSystem ws = weight_system(datum, mu, dim_cap);
  std::lock_guard<std::mutex> lock(cache_lock);
  auto [it, inserted] = cache.emplace(std::make_pair(datum.type, mu), std::move(ws));
  return it->second;
}

long long GradedCharacter::dim_at(const Rat& eigenvalue) const {
  auto it = dims.find(eigenvalue);
  return it == dims.end() ? 0 : it->second;
}

long long GradedCharacter::dimension() const {
  long long d = 0;
  for (const auto& [ev, m] : dims) d += m;
  return d;
}

std::vector<long long> GradedCharacter::descending() const {
  std::vector<long long> out;
  for (auto it = dims.rbegin(); it != dims.rend(); ++it) out.push_back(it->second);
  return out;
}

GradedCharacter graded_character(const RootDatum& datum, const Weight& mu,
                                 const GradingElement& e, long long dim_cap) {
  const WeightSystem& ws = cached_weight_system(datum, mu, dim_cap);
  GradedCharacter gc;
  for (const auto& [w, m] : ws.entries) gc.dims[datum.eval_on_grading(w, e)] += m;
  gc.top = datum.eval_on_grading(mu, e);
  gc.bottom = -datum.eval_on_grading(datum.dual_weight(mu), e);
  assert(!gc.dims.empty());
  assert(gc.dims.rbegin()->first == gc.top && gc.dims.begin()->first == gc.bottom);
  Rat prev = gc.bottom;
  for (auto it = std::next(gc.dims.begin()); it != gc.dims.end(); ++it) {
    if (it->first - prev != Rat(1))
      throw std::logic_error("graded character of " + to_string(datum.type) +
                             " has an eigenvalue gap");
    prev = it->first;
  }
  return gc;
}

GradedCharacter convolve(const GradedCharacter& a, const GradedCharacter& b) {
  GradedCharacter out;
  for (const auto& [ea, ma] : a.dims)
    for (const auto& [eb, mb] : b.dims) out.dims[ea + eb] += ma * mb;
  out.top = a.top + b.top;
  out.bottom = a.bottom + b.bottom;
  return out;
}

}  // namespace hodge
