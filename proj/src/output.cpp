#include "hodge/output.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

Json vec_json(const std::vector<long long>& v) { return Json(v); }

std::vector<long long> vec_from(const Json& j) {
  std::vector<long long> out;
  for (const auto& x : j) out.push_back(x.get<long long>());
  return out;
}

}  // namespace

Json to_json(const HodgeTuple& t) {
  Json factors = Json::array();
  for (const auto& f : t.factors) {
    Json jf;
    jf["algebra"] = to_string(f.type);
    Json e = Json::array();
    for (int b : f.e.bits) e.push_back(b);
    jf["e"] = e;
    jf["mu"] = vec_json(f.mu.fw);
    factors.push_back(jf);
  }
  Json j;
  j["factors"] = factors;
  j["c"] = to_string(t.c);
  return j;
}

HodgeTuple tuple_from_json(const Json& j) {
  HodgeTuple t;
  for (const auto& jf : j.at("factors")) {
    AlgebraFactor f;
    f.type = parse_simple_type(jf.at("algebra").get<std::string>());
    for (const auto& b : jf.at("e")) f.e.bits.push_back(b.get<int>());
    f.mu.fw = vec_from(jf.at("mu"));
    t.factors.push_back(std::move(f));
  }
  t.c = parse_rational(j.at("c").get<std::string>());
  return t;
}

Json to_json(const HodgeDescriptor& d) {
  Json j;
  j["level"] = d.level;
  j["hodge_numbers"] = vec_json(d.hodge_numbers);
  j["reality"] = to_string(d.reality);
  j["dim_v"] = d.dim_v;
  j["horizontal"] = d.horizontal;
  j["contact"] = d.contact;
  j["period_domain"] = d.period_domain;
  j["cy"] = d.cy_type;
  j["adjoint_grading"] = vec_json(d.adjoint_grading);
  j["depth"] = d.depth;
  j["compact_dim"] = d.compact_dim;
  if (d.real_form) j["real_form"] = *d.real_form;
  return j;
}

HodgeDescriptor descriptor_from_json(const Json& j) {
  HodgeDescriptor d;
  d.level = j.at("level").get<long long>();
  d.hodge_numbers = vec_from(j.at("hodge_numbers"));
  std::string r = j.at("reality").get<std::string>();
  d.reality = r == "real" ? Reality::Real : (r == "complex" ? Reality::Complex : Reality::Quaternionic);
  d.dim_v = j.at("dim_v").get<long long>();
  d.horizontal = j.at("horizontal").get<bool>();
  d.contact = j.at("contact").get<bool>();
  d.period_domain = j.at("period_domain").get<bool>();
  d.cy_type = j.at("cy").get<bool>();
  d.adjoint_grading = vec_from(j.at("adjoint_grading"));
  d.depth = j.at("depth").get<long long>();
  d.compact_dim = j.at("compact_dim").get<long long>();
  if (j.contains("real_form")) d.real_form = j.at("real_form").get<std::string>();
  return d;
}

Json to_json(const ClassifiedTuple& ct) {
  Json j;
  j["tuple"] = to_json(ct.tuple);
  j["descriptor"] = to_json(ct.descriptor);
  j["notes"] = ct.notes;
  return j;
}

ClassifiedTuple classified_from_json(const Json& j) {
  ClassifiedTuple ct;
  ct.tuple = tuple_from_json(j.at("tuple"));
  ct.descriptor = descriptor_from_json(j.at("descriptor"));
  for (const auto& n : j.at("notes")) ct.notes.push_back(n.get<std::string>());
  return ct;
}

Json OutputRecord::to_json() const {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  j["notes"] = notes;
  return j;
}

namespace {

std::string hodge_vector_string(const std::vector<long long>& h) {
  std::string s = "(";
  for (size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + std::to_string(h[i]);
  return s + ")";
}

std::string flags_string(const Json& d) {
  std::string s;
  auto add = [&](const char* key, const char* label) {
    if (d.contains(key) && d.at(key).is_boolean() && d.at(key).get<bool>()) {
      if (!s.empty()) s += ",";
      s += label;
    }
  };
  add("horizontal", "horizontal");
  add("contact", "contact");
  add("period_domain", "period-domain");
  add("cy", "cy");
  return s.empty() ? "-" : s;
}

std::string tuple_display(const Json& jt) {
  std::string s;
  const auto& factors = jt.at("factors");
  for (size_t k = 0; k < factors.size(); ++k) {
    const auto& f = factors[k];
    if (k) s += "+";
    s += "(" + f.at("algebra").get<std::string>() + ":";
    const auto& e = f.at("e");
    for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i].get<int>());
    s += ":";
    const auto& mu = f.at("mu");
    for (size_t i = 0; i < mu.size(); ++i)
      s += (i ? "," : "") + std::to_string(mu[i].get<long long>());
    s += ")";
  }
  s += " c=" + jt.at("c").get<std::string>();
  return s;
}

}  // namespace

std::string OutputRecord::to_text() const {
  std::ostringstream os;
  os << "# " << command << "\n";
  if (!inputs.empty()) {
    os << "inputs:";
    for (auto it = inputs.begin(); it != inputs.end(); ++it) {
      os << " " << it.key() << "=";
      if (it.value().is_string())
        os << it.value().get<std::string>();
      else
        os << it.value().dump();
    }
    os << "\n";
  }
  // results: rows of classified tuples, or generic key/value objects
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
  bool tuple_rows = !results.empty() && results.front().is_object() &&
                    results.front().contains("tuple");
  if (tuple_rows) {
    header = {"tuple", "hodge", "reality", "dim", "flags", "real form"};
    for (const auto& r : results) {
      const auto& d = r.at("descriptor");
      rows.push_back({tuple_display(r.at("tuple")),
                      hodge_vector_string(vec_from(d.at("hodge_numbers"))),
                      d.at("reality").get<std::string>(), std::to_string(d.at("dim_v").get<long long>()),
                      flags_string(d),
                      d.contains("real_form") ? d.at("real_form").get<std::string>() : "-"});
    }
  } else {
    for (const auto& r : results) {
      if (r.is_object()) {
        std::vector<std::string> row;
        if (header.empty())
          for (auto it = r.begin(); it != r.end(); ++it) header.push_back(it.key());
        for (const auto& key : header) {
          if (!r.contains(key)) { row.push_back("-"); continue; }
          const auto& v = r.at(key);
          row.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        }
        rows.push_back(row);
      } else {
        rows.push_back({r.is_string() ? r.get<std::string>() : r.dump()});
      }
    }
  }
  if (!rows.empty()) {
    std::vector<size_t> width(header.empty() ? rows.front().size() : header.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
      for (size_t i = 0; i < row.size() && i < width.size(); ++i)
        width[i] = std::max(width[i], row[i].size());
    };
    if (!header.empty()) widen(header);
    for (const auto& row : rows) widen(row);
    auto emit = [&](const std::vector<std::string>& row) {
      for (size_t i = 0; i < row.size(); ++i)
        os << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << row[i];
      os << "\n";
    };
    if (!header.empty()) emit(header);
    for (const auto& row : rows) emit(row);
  }
  os << "count: " << results.size() << "\n";
  for (const auto& n : notes) os << "note: " << n << "\n";
  return os.str();
}

namespace {

// Rank-relative token for a node index (1-based): small indices from the
// left, indices near the rank from the right.
std::string node_token(int i, int r) {
  if (i <= r - i + 1) return std::to_string(i);
  if (i == r) return "r";
  return "r-" + std::to_string(r - i);
}

std::string factor_signature(const AlgebraFactor& f) {
  int r = f.type.rank;
  std::string s(1, static_cast<char>(f.type.family));
  s += "[e=";
  bool first = true;
  for (int i = 0; i < r; ++i)
    if (f.e.bits[i]) {
      if (!first) s += "+";
      s += node_token(i + 1, r);
      first = false;
    }
  s += ";mu=";
  first = true;
  for (int i = 0; i < r; ++i)
    if (f.mu.fw[i]) {
      if (!first) s += "+";
      if (f.mu.fw[i] != 1) s += std::to_string(f.mu.fw[i]) + "*";
      s += "w" + node_token(i + 1, r);
      first = false;
    }
  s += "]";
  return s;
}

}  // namespace

std::vector<std::string> family_report(const std::vector<ClassifiedTuple>& tuples) {
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& ct : tuples) {
    std::string sig;
    for (size_t k = 0; k < ct.tuple.factors.size(); ++k) {
      if (k) sig += " x ";
      sig += factor_signature(ct.tuple.factors[k]);
    }
    std::string inst;
    for (size_t k = 0; k < ct.tuple.factors.size(); ++k) {
      if (k) inst += "+";
      inst += to_string(ct.tuple.factors[k].type);
    }
    inst += " c=" + to_string(ct.tuple.c) + " h=" + hodge_vector_string(ct.descriptor.hodge_numbers);
    groups[sig].push_back(inst);
  }
  std::vector<std::string> out;
  for (const auto& [sig, instances] : groups) {
    std::string line = "family " + sig + ": ";
    for (size_t i = 0; i < instances.size(); ++i) line += (i ? "; " : "") + instances[i];
    out.push_back(line);
  }
  return out;
}

std::vector<AlgebraFactor> parse_factor_specs(const std::string& text) {
  std::vector<AlgebraFactor> out;
  std::string spec = text;
  spec.erase(std::remove_if(spec.begin(), spec.end(),
                            [](char ch) { return ch == ' ' || ch == '(' || ch == ')'; }),
             spec.end());
  std::istringstream is(spec);
  std::string part;
  while (std::getline(is, part, '+')) {
    std::vector<std::string> pieces;
    std::istringstream ps(part);
    std::string piece;
    while (std::getline(ps, piece, ':')) pieces.push_back(piece);
    if (pieces.size() != 3)
      throw UsageError("factor spec '" + part + "' must be ALGEBRA:e1,..,er:w1,..,wr");
    AlgebraFactor f;
    f.type = parse_simple_type(pieces[0]);
    auto parse_ints = [](const std::string& s) {
      std::vector<long long> v;
      std::istringstream vs(s);
      std::string tok;
      while (std::getline(vs, tok, ',')) {
        try {
          v.push_back(std::stoll(tok));
        } catch (const std::exception&) {
          throw UsageError("malformed coordinate '" + tok + "'");
        }
      }
      return v;
    };
    for (long long b : parse_ints(pieces[1])) f.e.bits.push_back(static_cast<int>(b));
    f.mu.fw = parse_ints(pieces[2]);
    if (static_cast<int>(f.e.bits.size()) != f.type.rank ||
        static_cast<int>(f.mu.fw.size()) != f.type.rank)
      throw UsageError("factor '" + part + "' needs " + std::to_string(f.type.rank) +
                       " grading and weight coordinates");
    out.push_back(std::move(f));
  }
  if (out.empty()) throw UsageError("empty tuple spec");
  return out;
}

}  // namespace hodge
