#include "hodge/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "hodge/errors.hpp"

namespace hodge {

std::vector<PatternEntry> parse_pattern(const std::string& text) {
  std::vector<PatternEntry> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    // trim blanks
    size_t a = token.find_first_not_of(" \t");
    size_t b = token.find_last_not_of(" \t");
    if (a == std::string::npos) throw UsageError("empty entry in pattern '" + text + "'");
    token = token.substr(a, b - a + 1);
    if (token == "*") {
      out.push_back({true, 0});
    } else {
      try {
        long long v = std::stoll(token);
        if (v < 0) throw UsageError("negative entry in pattern '" + text + "'");
        out.push_back({false, v});
      } catch (const std::invalid_argument&) {
        throw UsageError("malformed pattern entry '" + token + "'");
      }
    }
  }
  if (out.empty()) throw UsageError("empty pattern");
  return out;
}

std::string pattern_to_string(const std::vector<PatternEntry>& pattern) {
  std::string s;
  for (size_t i = 0; i < pattern.size(); ++i) {
    if (i) s += ",";
    s += pattern[i].wildcard ? "*" : std::to_string(pattern[i].value);
  }
  return s;
}

namespace {

bool factor_less(const AlgebraFactor& a, const AlgebraFactor& b) {
  if (a.type != b.type) return a.type < b.type;
  if (a.e != b.e) return a.e < b.e;
  return a.mu < b.mu;
}

bool tuple_less(const HodgeTuple& a, const HodgeTuple& b) {
  if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
  for (size_t i = 0; i < a.factors.size(); ++i) {
    if (!(a.factors[i] == b.factors[i])) return factor_less(a.factors[i], b.factors[i]);
  }
  return a.c < b.c;
}

// Minimal (e, mu) pair over the diagram automorphisms of the factor's type.
AlgebraFactor minimize_factor(const AlgebraFactor& f) {
  const RootDatum& d = build_root_datum(f.type);
  AlgebraFactor best = f;
  for (const auto& perm : d.diagram_automorphisms()) {
    AlgebraFactor cand{f.type, permute_grading(f.e, perm), permute_weight(f.mu, perm)};
    if (factor_less(cand, best)) best = cand;
  }
  return best;
}

}  // namespace

HodgeTuple canonicalize(const HodgeTuple& t) {
  HodgeTuple best;
  bool have = false;
  for (int dual = 0; dual < 2; ++dual) {
    HodgeTuple cand;
    cand.c = dual ? -t.c : t.c;
    for (const auto& f : t.factors) {
      AlgebraFactor g = f;
      if (dual) g.mu = build_root_datum(f.type).dual_weight(f.mu);
      cand.factors.push_back(minimize_factor(g));
    }
    std::sort(cand.factors.begin(), cand.factors.end(), factor_less);
    if (!have || tuple_less(cand, best)) {
      best = cand;
      have = true;
    }
  }
  return best;
}

namespace {

struct Candidate {
  AlgebraFactor factor;
  long long width;  // (mu + mu*)(e), a positive integer
  long long dim_u;
  Rat mu_eval;      // mu(e)
};

// All dominant nonzero mu on (type, e) with (mu+mu*)(e) <= width_budget.
// The width is linear in mu and every fundamental weight has positive width,
// so this is a bounded knapsack over the fundamental-weight coordinates.
std::vector<Candidate> factor_candidates(const SimpleType& type, const GradingElement& e,
                                         long long width_budget, long long dim_budget) {
  const RootDatum& d = build_root_datum(type);
  int r = d.rank();
  std::vector<long long> gen_width(r);
  for (int i = 0; i < r; ++i) {
    Weight omega;
    omega.fw.assign(r, 0);
    omega.fw[i] = 1;
    Rat w = d.eval_on_grading(omega, e) + d.eval_on_grading(d.dual_weight(omega), e);
    gen_width[i] = to_integer(w);  // integral: top minus bottom eigenvalue of U_omega
    assert(gen_width[i] >= 1);
  }
  std::vector<Candidate> out;
  Weight mu;
  mu.fw.assign(r, 0);
  auto rec = [&](auto&& self, int i, long long used) -> void {
    if (i == r) {
      if (used == 0) return;  // mu = 0 is not a candidate
      long long dim = weyl_dimension(d, mu);
      if (dim > dim_budget) return;
      out.push_back({{type, e, mu}, used, dim, d.eval_on_grading(mu, e)});
      return;
    }
    for (long long m = 0; used + m * gen_width[i] <= width_budget; ++m) {
      mu.fw[i] = m;
      self(self, i + 1, used + m * gen_width[i]);
    }
    mu.fw[i] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<SimpleType> admissible_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::B, r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({Family::D, r});
  for (int r = 6; r <= std::min(max_rank, 8); ++r) out.push_back({Family::E, r});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GradingElement> nonzero_gradings(int rank) {
  std::vector<GradingElement> out;
  for (unsigned mask = 1; mask < (1u << rank); ++mask) {
    GradingElement e;
    e.bits.assign(rank, 0);
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) e.bits[i] = 1;
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void validate(const SearchConstraints& c) {
  if (c.weight_n < 1) throw UsageError("weight must be a positive integer");
  if (!c.pattern.empty()) {
    if (static_cast<long long>(c.pattern.size()) != c.weight_n + 1)
      throw UsageError("pattern has " + std::to_string(c.pattern.size()) +
                       " entries, weight " + std::to_string(c.weight_n) + " needs " +
                       std::to_string(c.weight_n + 1));
    for (size_t i = 0; i < c.pattern.size(); ++i) {
      const auto& a = c.pattern[i];
      const auto& b = c.pattern[c.pattern.size() - 1 - i];
      if (a.wildcard != b.wildcard || (!a.wildcard && a.value != b.value))
        throw UsageError("pattern '" + pattern_to_string(c.pattern) + "' is not palindromic");
    }
  }
  bool fully_fixed = !c.pattern.empty() &&
                     std::all_of(c.pattern.begin(), c.pattern.end(),
                                 [](const PatternEntry& p) { return !p.wildcard; });
  if (!fully_fixed && c.max_dim_v <= 0)
    throw UsageError(
        "search is unbounded: give a fully fixed pattern or a dimension cap (--max-dim)");
  if (c.max_factors < 1) throw UsageError("max factors must be at least 1");
  if (c.min_factors < 1 || c.min_factors > c.max_factors)
    throw UsageError("min factors must lie in [1, max factors]");
  if (c.max_rank < 1 || c.max_rank > 8) throw UsageError("max rank must lie in [1, 8]");
}

bool matches(const SearchConstraints& c, const HodgeDescriptor& desc, size_t n_factors) {
  if (desc.level != c.weight_n) return false;
  if (!c.pattern.empty()) {
    if (desc.hodge_numbers.size() != c.pattern.size()) return false;
    for (size_t i = 0; i < c.pattern.size(); ++i)
      if (!c.pattern[i].wildcard && desc.hodge_numbers[i] != c.pattern[i].value) return false;
  }
  if (c.nonzero_middle)
    for (size_t i = 1; i + 1 < desc.hodge_numbers.size(); ++i)
      if (desc.hodge_numbers[i] == 0) return false;
  if (c.horizontal && !desc.horizontal) return false;
  if (c.non_horizontal && desc.horizontal) return false;
  if (c.contact && !desc.contact) return false;
  if (c.period_domain && !desc.period_domain) return false;
  if (c.cy && !desc.cy_type) return false;
  if (n_factors < static_cast<size_t>(c.min_factors)) return false;
  return true;
}

}  // namespace

std::vector<std::string> tuple_notes(const HodgeTuple& canonical, const HodgeDescriptor& desc) {
  std::vector<std::string> notes;
  std::set<std::string> seen;
  for (const auto& f : canonical.factors)
    for (const auto& alias : isomorphism_aliases(f.type))
      if (seen.insert(alias).second) notes.push_back("alias: " + alias);
  if (canonical.factors.size() > 1) {
    for (size_t k = 0; k < canonical.factors.size(); ++k) {
      const auto& f = canonical.factors[k];
      if (auto info = real_form_info(f.type, f.e))
        notes.push_back("factor " + std::to_string(k + 1) + " real form: " + info->real_form);
    }
  } else if (desc.real_form) {
    notes.push_back("real form: " + *desc.real_form);
  }
  if (canonical.c != Rat(0)) {
    bool self_dual = true;
    Rat parity(0);
    for (const auto& f : canonical.factors) {
      const RootDatum& d = build_root_datum(f.type);
      if (d.dual_weight(f.mu) != f.mu) self_dual = false;
      parity += d.parity_element_eval(f.mu, f.e);
    }
    if (self_dual && is_integer(parity) && to_integer(parity) % 2 != 0)
      notes.push_back("self-dual weight of quaternionic parity carried with nonzero center scalar");
  }
  return notes;
}

std::vector<ClassifiedTuple> enumerate_tuples(const SearchConstraints& constraints) {
  validate(constraints);
  bool fully_fixed = !constraints.pattern.empty() &&
                     std::all_of(constraints.pattern.begin(), constraints.pattern.end(),
                                 [](const PatternEntry& p) { return !p.wildcard; });
  long long dim_budget = constraints.max_dim_v;
  if (fully_fixed) {
    long long sum = 0;
    for (const auto& p : constraints.pattern) sum += p.value;
    dim_budget = dim_budget > 0 ? std::min(dim_budget, sum) : sum;
  }

  // Candidate factors grouped over all (type, grading) pairs.
  std::vector<Candidate> items;
  for (const auto& type : admissible_types(constraints.max_rank)) {
    for (const auto& e : nonzero_gradings(type.rank)) {
      auto cands = factor_candidates(type, e, constraints.weight_n, dim_budget);
      items.insert(items.end(), cands.begin(), cands.end());
    }
  }
  std::sort(items.begin(), items.end(),
            [](const Candidate& a, const Candidate& b) { return factor_less(a.factor, b.factor); });

  std::set<HodgeTuple> found;
  std::vector<size_t> chosen;
  auto rec = [&](auto&& self, size_t start, long long width_used, long long dim_prod) -> void {
    if (!chosen.empty()) {
      HodgeTuple t;
      Rat mu_eval(0);
      for (size_t idx : chosen) {
        t.factors.push_back(items[idx].factor);
        mu_eval += items[idx].mu_eval;
      }
      t.c = Rat(constraints.weight_n, 2) - mu_eval;
      HodgeDescriptor desc = describe(t);
      if (matches(constraints, desc, t.factors.size())) {
        if (desc.dim_v <= dim_budget) found.insert(canonicalize(t));
      }
    }
    if (chosen.size() == static_cast<size_t>(constraints.max_factors)) return;
    for (size_t i = start; i < items.size(); ++i) {
      if (width_used + items[i].width > constraints.weight_n) continue;
      if (dim_prod > dim_budget / items[i].dim_u) continue;  // product would exceed budget
      chosen.push_back(i);
      self(self, i, width_used + items[i].width, dim_prod * items[i].dim_u);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0, 1);

  std::vector<ClassifiedTuple> out;
  for (const auto& t : found) {
    ClassifiedTuple ct;
    ct.tuple = t;
    ct.descriptor = describe(t);
    ct.notes = tuple_notes(t, ct.descriptor);
    out.push_back(std::move(ct));
  }
  std::sort(out.begin(), out.end(), [](const ClassifiedTuple& a, const ClassifiedTuple& b) {
    return tuple_less(a.tuple, b.tuple);
  });
  return out;
}

std::vector<std::pair<SimpleType, GradingElement>> classify_gradings(GradingKind kind,
                                                                     int max_rank) {
  std::vector<std::pair<SimpleType, GradingElement>> out;
  for (const auto& type : admissible_types(max_rank)) {
    const RootDatum& d = build_root_datum(type);
    for (const auto& e : nonzero_gradings(type.rank)) {
      long long depth = d.highest_root_eval(e);
      if (kind == GradingKind::Hermitian) {
        if (depth == 1) out.emplace_back(type, e);
      } else {
        if (depth == 2 && adjoint_grading(d, e).front() == 1) out.emplace_back(type, e);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hodge
