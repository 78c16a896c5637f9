#include "hodge/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "hodge/errors.hpp"

namespace hodge {

using boost::multiprecision::cpp_int;

namespace {

// Kostant partition function: number of ways to write a vector (simple-root
// coordinates) as a non-negative integer combination of positive roots.
class PartitionCounter {
 public:
  explicit PartitionCounter(const RootDatum& datum) : datum_(datum) {
    roots_ = datum.positive_roots;
    // larger roots first shrinks the recursion tree
    std::stable_sort(roots_.begin(), roots_.end(),
                     [](const std::vector<long long>& a, const std::vector<long long>& b) {
                       long long ha = 0, hb = 0;
                       for (auto x : a) ha += x;
                       for (auto x : b) hb += x;
                       return ha > hb;
                     });
  }

  cpp_int count(const std::vector<long long>& target) {
    for (auto x : target)
      if (x < 0) return 0;
    return count_rec(target, roots_.size());
  }

 private:
  cpp_int count_rec(const std::vector<long long>& target, size_t k) {
    bool zero = std::all_of(target.begin(), target.end(), [](long long x) { return x == 0; });
    if (zero) return 1;
    if (k == 0) return 0;
    bool packable = k < 256;
    uint64_t key = static_cast<uint64_t>(k);
    for (auto x : target) {
      if (x >= 127) { packable = false; break; }
      key = (key << 7) | static_cast<uint64_t>(x);
    }
    if (packable) {
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    } else {
      auto it = wide_memo_.find({k, target});
      if (it != wide_memo_.end()) return it->second;
    }
    cpp_int total = 0;
    const auto& root = roots_[k - 1];
    std::vector<long long> rest = target;
    for (;;) {
      total += count_rec(rest, k - 1);
      bool fits = true;
      for (size_t j = 0; j < rest.size(); ++j)
        if (rest[j] < root[j]) { fits = false; break; }
      if (!fits) break;
      for (size_t j = 0; j < rest.size(); ++j) rest[j] -= root[j];
    }
    if (packable)
      memo_.emplace(key, total);
    else
      wide_memo_.emplace(std::make_pair(k, target), total);
    return total;
  }

  const RootDatum& datum_;
  std::vector<std::vector<long long>> roots_;
  std::unordered_map<uint64_t, cpp_int> memo_;
  std::map<std::pair<size_t, std::vector<long long>>, cpp_int> wide_memo_;
};

struct SignedShift {
  std::vector<long long> shift;  // w(mu+rho) - (mu+rho) in simple-root coordinates
  int sign;
};

// Enumerates the Weyl group as the orbit of the regular weight mu+rho,
// tracking determinants through simple reflections.
std::vector<SignedShift> weyl_orbit_shifts(const RootDatum& datum, const Weight& mu) {
  const int r = datum.rank();
  Weight start = mu + datum.rho;
  std::map<Weight, int> sign_of;
  std::vector<Weight> queue{start};
  sign_of[start] = 1;
  for (size_t k = 0; k < queue.size(); ++k) {
    Weight w = queue[k];
    int s = sign_of[w];
    for (int i = 0; i < r; ++i) {
      Weight img = w;
      long long ci = w.fw[i];
      for (int j = 0; j < r; ++j) img.fw[j] -= ci * datum.cartan[i][j];
      auto [it, inserted] = sign_of.emplace(img, -s);
      if (inserted) queue.push_back(img);
    }
  }
  std::vector<SignedShift> out;
  out.reserve(queue.size());
  for (const auto& [w, s] : sign_of) {
    std::vector<long long> diff_fw(r);
    for (int j = 0; j < r; ++j) diff_fw[j] = w.fw[j] - start.fw[j];
    // convert to simple-root coordinates; the difference lies in the root lattice
    std::vector<long long> shift(r);
    for (int j = 0; j < r; ++j) {
      Rat c(0);
      for (int i = 0; i < r; ++i) c += Rat(diff_fw[i]) * datum.inverse_cartan[i][j];
      shift[j] = to_integer(c);
    }
    out.push_back({std::move(shift), s});
  }
  return out;
}

}  // namespace

WeightSystem oracle_weight_system(const RootDatum& datum, const Weight& mu, long long dim_cap,
                                  int rank_cap) {
  if (datum.rank() > rank_cap)
    throw ResourceError("oracle limited to rank <= " + std::to_string(rank_cap));
  if (!mu.is_dominant()) throw DomainError("oracle_weight_system requires a dominant weight");
  long long dim = weyl_dimension(datum, mu);
  if (dim > dim_cap)
    throw ResourceError("oracle cap " + std::to_string(dim_cap) + " exceeded by dimension " +
                        std::to_string(dim));

  const int r = datum.rank();
  auto shifts = weyl_orbit_shifts(datum, mu);
  PartitionCounter pc(datum);

  // Every weight of U_mu is mu - beta with 0 <= beta <= mu + mu* coordinatewise.
  Weight mu_dual = datum.dual_weight(mu);
  std::vector<long long> box(r);
  {
    Weight span = mu + mu_dual;
    auto rc = datum.root_coords(span);
    for (int j = 0; j < r; ++j) box[j] = to_integer(rc[j]);
  }

  WeightSystem out;
  out.highest = mu;
  std::vector<long long> beta(r, 0);
  for (;;) {
    cpp_int m = 0;
    for (const auto& [shift, sign] : shifts) {
      std::vector<long long> arg(r);
      bool neg = false;
      for (int j = 0; j < r; ++j) {
        arg[j] = shift[j] + beta[j];
        if (arg[j] < 0) { neg = true; break; }
      }
      if (neg) continue;
      if (sign > 0)
        m += pc.count(arg);
      else
        m -= pc.count(arg);
    }
    assert(m >= 0);
    if (m > 0) {
      Weight lam = mu;
      for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) lam.fw[i] -= beta[j] * datum.cartan[j][i];
      out.entries[lam] = m.convert_to<long long>();
    }
    int pos = 0;
    while (pos < r && beta[pos] == box[pos]) beta[pos++] = 0;
    if (pos == r) break;
    ++beta[pos];
  }
  return out;
}

}  // namespace hodge
