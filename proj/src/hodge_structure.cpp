#include "hodge/hodge_structure.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "hodge/errors.hpp"

namespace hodge {

std::string to_string(Reality r) {
  switch (r) {
    case Reality::Real: return "real";
    case Reality::Complex: return "complex";
    case Reality::Quaternionic: return "quaternionic";
  }
  return "?";
}

std::string to_string(const HodgeTuple& t) {
  std::ostringstream os;
  for (size_t k = 0; k < t.factors.size(); ++k) {
    const auto& f = t.factors[k];
    if (k) os << "+";
    os << "(" << to_string(f.type) << ":";
    for (size_t i = 0; i < f.e.bits.size(); ++i) os << (i ? "," : "") << f.e.bits[i];
    os << ":";
    for (size_t i = 0; i < f.mu.fw.size(); ++i) os << (i ? "," : "") << f.mu.fw[i];
    os << ")";
  }
  os << " c=" << to_string(t.c);
  return os.str();
}

namespace {

void validate_factors(const HodgeTuple& t) {
  if (t.factors.empty()) throw DomainError("tuple has no factors");
  for (const auto& f : t.factors) {
    const RootDatum& d = build_root_datum(f.type);
    if (static_cast<int>(f.e.bits.size()) != d.rank() ||
        static_cast<int>(f.mu.fw.size()) != d.rank())
      throw DomainError("coordinate length mismatch for factor " + to_string(f.type));
    for (int b : f.e.bits)
      if (b != 0 && b != 1) throw DomainError("grading entries must be 0 or 1");
    if (f.e.is_zero())
      throw DomainError("factor " + to_string(f.type) + " carries the zero grading element");
    if (!f.mu.is_dominant())
      throw DomainError("highest weight of factor " + to_string(f.type) + " is not dominant");
    if (f.mu.is_zero())
      throw DomainError("factor " + to_string(f.type) +
                        " acts trivially (zero highest weight); the representation would not be faithful");
  }
}

Rat total_eval(const HodgeTuple& t) {
  Rat v(0);
  for (const auto& f : t.factors) v += build_root_datum(f.type).eval_on_grading(f.mu, f.e);
  return v;
}

Rat total_dual_eval(const HodgeTuple& t) {
  Rat v(0);
  for (const auto& f : t.factors) {
    const RootDatum& d = build_root_datum(f.type);
    v += d.eval_on_grading(d.dual_weight(f.mu), f.e);
  }
  return v;
}

bool totally_self_dual(const HodgeTuple& t) {
  for (const auto& f : t.factors)
    if (build_root_datum(f.type).dual_weight(f.mu) != f.mu) return false;
  return true;
}

}  // namespace

Reality reality_type(const HodgeTuple& t) {
  validate_factors(t);
  if (t.c != Rat(0)) return Reality::Complex;
  if (!totally_self_dual(t)) return Reality::Complex;
  Rat parity(0);
  for (const auto& f : t.factors)
    parity += build_root_datum(f.type).parity_element_eval(f.mu, f.e);
  if (!is_integer(parity))
    throw std::logic_error("parity value " + to_string(parity) + " of self-dual " + to_string(t) +
                           " is not an integer");
  return to_integer(parity) % 2 == 0 ? Reality::Real : Reality::Quaternionic;
}

std::vector<long long> adjoint_grading(const RootDatum& datum, const GradingElement& e) {
  long long depth = datum.highest_root_eval(e);
  std::map<long long, long long> pos_count;
  for (const auto& alpha : datum.positive_roots) {
    long long v = 0;
    for (int i = 0; i < datum.rank(); ++i)
      if (e.bits[i]) v += alpha[i];
    ++pos_count[v];
  }
  std::vector<long long> dims;
  for (long long l = depth; l >= -depth; --l) {
    long long d = 0;
    if (l == 0)
      d = datum.rank() + 2 * pos_count[0];
    else
      d = pos_count[std::llabs(l)];
    dims.push_back(d);
  }
  return dims;
}

bool is_horizontal(const HodgeTuple& t) {
  validate_factors(t);
  for (const auto& f : t.factors)
    if (build_root_datum(f.type).highest_root_eval(f.e) != 1) return false;
  return true;
}

bool is_contact(const HodgeTuple& t) {
  validate_factors(t);
  if (t.factors.size() != 1) return false;
  const auto& f = t.factors.front();
  const RootDatum& d = build_root_datum(f.type);
  if (d.highest_root_eval(f.e) != 2) return false;
  auto dims = adjoint_grading(d, f.e);
  return dims.front() == 1;
}

bool is_period_domain(const HodgeTuple& t) {
  validate_factors(t);
  if (t.factors.size() != 1 || t.c != Rat(0)) return false;
  const auto& f = t.factors.front();
  int r = f.type.rank;
  Weight omega1;
  omega1.fw.assign(r, 0);
  omega1.fw[0] = 1;
  switch (f.type.family) {
    case Family::A:
      // sl(2) = sp(2): the standard symplectic criterion at rank one.
      return r == 1 && f.mu == omega1 && f.e.bits[0] == 1;
    case Family::C:
      return f.mu == omega1 && f.e.bits[r - 1] == 1;
    case Family::B:
      return f.mu == omega1;
    case Family::D:
      return f.mu == omega1 && (f.e.bits[r - 2] + f.e.bits[r - 1]) != 1;
    default:
      return false;
  }
}

bool is_cy_type(const HodgeTuple& t) {
  validate_factors(t);
  // The top piece V_{n/2} is a highest-weight line iff the weight realizing
  // the top eigenvalue is supported on the grading.  (mu, c) and (mu*, -c)
  // describe the same representation, so the test is applied to whichever of
  // the two realizes the top.
  auto supported = [&](bool dual) {
    for (const auto& f : t.factors) {
      const RootDatum& d = build_root_datum(f.type);
      Weight mu = dual ? d.dual_weight(f.mu) : f.mu;
      for (int i = 0; i < f.type.rank; ++i)
        if (f.e.bits[i] == 0 && mu.fw[i] != 0) return false;
    }
    return true;
  };
  if (reality_type(t) == Reality::Real) return supported(false);
  Rat m = total_eval(t) + t.c;
  Rat m_star = total_dual_eval(t) - t.c;
  if (m > m_star) return supported(false);
  if (m_star > m) return supported(true);
  return false;
}

long long compact_dim(const HodgeTuple& t) {
  validate_factors(t);
  long long total = 0;
  for (const auto& f : t.factors) {
    const RootDatum& d = build_root_datum(f.type);
    total += d.rank();
    for (const auto& alpha : d.positive_roots) {
      long long v = 0;
      for (int i = 0; i < d.rank(); ++i)
        if (f.e.bits[i]) v += alpha[i];
      if (v % 2 == 0) total += 2;
    }
  }
  return total;
}

GradedCharacter tuple_character(const HodgeTuple& t, long long dim_cap) {
  validate_factors(t);
  GradedCharacter total;
  bool first = true;
  for (const auto& f : t.factors) {
    const RootDatum& d = build_root_datum(f.type);
    GradedCharacter gc = graded_character(d, f.mu, f.e, dim_cap);
    total = first ? gc : convolve(total, gc);
    first = false;
  }
  return total;
}

HodgeDescriptor describe(const HodgeTuple& t, long long dim_cap) {
  validate_factors(t);
  HodgeDescriptor out;
  out.reality = reality_type(t);
  if (out.reality == Reality::Real && t.c != Rat(0))
    throw DomainError("real tuple with nonzero center scalar: " + to_string(t));

  GradedCharacter u = tuple_character(t, dim_cap);
  Rat m = u.top + t.c;
  Rat m_star = -u.bottom - t.c;
  if (!is_half_integer(m))
    throw DomainError("m = mu(E) + c = " + to_string(m) + " is not a half-integer for " +
                      to_string(t));
  Rat half_level = std::max(m, m_star);
  Rat level2 = Rat(2) * half_level;
  assert(is_integer(level2));
  out.level = to_integer(level2);
  if (out.level <= 0)
    throw DomainError("tuple " + to_string(t) + " produces a level-" +
                      std::to_string(out.level) + " structure; the circle action is trivial");

  long long dim_u = u.dimension();
  out.dim_v = out.reality == Reality::Real ? dim_u : 2 * dim_u;

  out.hodge_numbers.clear();
  for (long long k = 0; k <= out.level; ++k) {
    // h^{p,q} with p = n-k, q = k sits at eigenvalue x = (p-q)/2
    Rat x = Rat(out.level - 2 * k, 2);
    long long h = 0;
    if (out.reality == Reality::Real) {
      h = u.dim_at(x);
    } else {
      h = u.dim_at(x - t.c) + u.dim_at(-x - t.c);
    }
    out.hodge_numbers.push_back(h);
  }
  long long hsum = 0;
  for (size_t k = 0; k < out.hodge_numbers.size(); ++k) {
    hsum += out.hodge_numbers[k];
    if (out.hodge_numbers[k] != out.hodge_numbers[out.hodge_numbers.size() - 1 - k])
      throw std::logic_error("Hodge numbers of " + to_string(t) + " are not palindromic");
  }
  if (hsum != out.dim_v)
    throw std::logic_error("Hodge numbers of " + to_string(t) + " sum to " +
                           std::to_string(hsum) + ", dim V = " + std::to_string(out.dim_v));
  if (out.hodge_numbers.front() < 1)
    throw std::logic_error("h^{n,0} = 0 for " + to_string(t));

  // combined adjoint grading
  out.depth = 0;
  for (const auto& f : t.factors)
    out.depth = std::max(out.depth, build_root_datum(f.type).highest_root_eval(f.e));
  out.adjoint_grading.assign(2 * out.depth + 1, 0);
  for (const auto& f : t.factors) {
    const RootDatum& d = build_root_datum(f.type);
    auto dims = adjoint_grading(d, f.e);
    long long fd = d.highest_root_eval(f.e);
    for (long long l = fd; l >= -fd; --l)
      out.adjoint_grading[out.depth - l] += dims[fd - l];
  }

  out.horizontal = is_horizontal(t);
  out.contact = is_contact(t);
  out.period_domain = is_period_domain(t);
  out.cy_type = is_cy_type(t);
  out.compact_dim = compact_dim(t);
  if (t.factors.size() == 1) {
    if (auto info = real_form_info(t.factors[0].type, t.factors[0].e)) out.real_form = info->real_form;
  }
  return out;
}

std::optional<RealFormInfo> real_form_info(const SimpleType& type, const GradingElement& e) {
  const RootDatum& d = build_root_datum(type);
  long long depth = d.highest_root_eval(e);
  int r = type.rank;
  auto node = [&](int i) { return e.bits[i - 1] == 1; };  // 1-indexed helper
  int count = e.node_count();
  auto str = [](long long v) { return std::to_string(v); };

  if (depth == 1 && count == 1) {
    int a = 0;
    for (int i = 1; i <= r; ++i)
      if (node(i)) a = i;
    switch (type.family) {
      case Family::A:
        return RealFormInfo{"su(" + str(a) + "," + str(r + 1 - a) + ")",
                            "s(u(" + str(a) + ")+u(" + str(r + 1 - a) + "))"};
      case Family::B:
        return RealFormInfo{"so(2," + str(2 * r - 1) + ")",
                            "s(o(2)+o(" + str(2 * r - 1) + "))"};
      case Family::C:
        return RealFormInfo{"sp(" + str(2 * r) + ",R)", "u(" + str(r) + ")"};
      case Family::D:
        if (a == 1)
          return RealFormInfo{"so(2," + str(2 * r - 2) + ")",
                              "s(o(2)+o(" + str(2 * r - 2) + "))"};
        return RealFormInfo{"so*(" + str(2 * r) + ")", "u(" + str(r) + ")"};
      case Family::E:
        if (r == 6) return RealFormInfo{"EIII", "so(10)+R"};
        if (r == 7) return RealFormInfo{"EVII", "e6+R"};
        return std::nullopt;
      default:
        return std::nullopt;
    }
  }

  if (depth == 2) {
    auto dims = adjoint_grading(d, e);
    if (dims.front() != 1) return std::nullopt;
    switch (type.family) {
      case Family::A:
        return RealFormInfo{"su(2," + str(r - 1) + ")",
                            "s(u(2)+u(" + str(r - 1) + "))"};
      case Family::B:
        return RealFormInfo{"so(4," + str(2 * r - 3) + ")",
                            "s(o(4)+o(" + str(2 * r - 3) + "))"};
      case Family::D:
        return RealFormInfo{"so(4," + str(2 * r - 4) + ")",
                            "s(o(4)+o(" + str(2 * r - 4) + "))"};
      case Family::C:
        return RealFormInfo{"sp(1," + str(r - 1) + ")", "sp(1)+sp(" + str(r - 1) + ")"};
      case Family::E:
        if (r == 6) return RealFormInfo{"EII", "su(6)+su(2)"};
        if (r == 7) return RealFormInfo{"EVI", "so(12)+su(2)"};
        return RealFormInfo{"EIX", "e7+su(2)"};
      case Family::F:
        return RealFormInfo{"FI", "sp(3)+su(2)"};
      case Family::G:
        return RealFormInfo{"G", "su(2)+su(2)"};
    }
  }
  return std::nullopt;
}

std::vector<std::string> isomorphism_aliases(const SimpleType& type) {
  if (type.family == Family::A && type.rank == 1) return {"sl(2,C) = so(3,C) = sp(2,C)"};
  if (type.family == Family::B && type.rank == 2) return {"so(5,C) = sp(4,C)"};
  if (type.family == Family::A && type.rank == 3) return {"sl(4,C) = so(6,C)"};
  return {};
}

}  // namespace hodge
