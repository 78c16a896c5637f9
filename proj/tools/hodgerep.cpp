// hodgerep: exact Lie-theory calculator and classifier for Hodge
// representations (g_C, E, mu, c).
#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "hodge/config.hpp"
#include "hodge/enumerate.hpp"
#include "hodge/errors.hpp"
#include "hodge/oracle.hpp"
#include "hodge/output.hpp"

namespace {

using namespace hodge;

struct GlobalOptions {
  bool json = false;
  std::string config_path;
};

void emit(const OutputRecord& record, bool json) {
  if (json)
    std::cout << record.to_json().dump(2) << "\n";
  else
    std::cout << record.to_text();
}

Json character_json(const GradedCharacter& gc) {
  Json rows = Json::array();
  for (auto it = gc.dims.rbegin(); it != gc.dims.rend(); ++it) {
    Json row;
    row["eigenvalue"] = to_string(it->first);
    row["dim"] = it->second;
    rows.push_back(row);
  }
  return rows;
}

int run_rep_info(const GlobalOptions& global, const std::string& algebra, const std::string& e_spec,
                 const std::string& w_spec, const std::string& tuple_spec, const std::string& c_spec,
                 const Caps& caps) {
  HodgeTuple t;
  if (!tuple_spec.empty()) {
    t.factors = parse_factor_specs(tuple_spec);
  } else {
    if (algebra.empty() || e_spec.empty() || w_spec.empty())
      throw UsageError("rep-info needs either --tuple or all of -a, -e, -w");
    t.factors = parse_factor_specs(algebra + ":" + e_spec + ":" + w_spec);
  }
  t.c = parse_rational(c_spec);

  HodgeDescriptor desc = describe(t, caps.max_dim);
  GradedCharacter gc = tuple_character(t, caps.max_dim);

  OutputRecord record;
  record.command = "rep-info";
  record.inputs["tuple"] = to_string(t);
  Json result;
  result["tuple"] = to_json(t);
  result["descriptor"] = to_json(desc);
  result["graded_character"] = character_json(gc);
  result["notes"] = tuple_notes(t, desc);
  record.results.push_back(result);

  std::ostringstream character;
  character << "graded character of U:";
  for (auto it = gc.dims.rbegin(); it != gc.dims.rend(); ++it)
    character << " " << to_string(it->first) << ":" << it->second;
  record.notes.push_back(character.str());
  std::ostringstream adjoint;
  adjoint << "adjoint grading (depth " << desc.depth << "):";
  for (auto v : desc.adjoint_grading) adjoint << " " << v;
  adjoint << "; compact dim " << desc.compact_dim;
  record.notes.push_back(adjoint.str());
  for (const auto& n : tuple_notes(t, desc)) record.notes.push_back(n);
  emit(record, global.json);
  return 0;
}

int run_classify(const GlobalOptions& global, const SearchConstraints& constraints,
                 const std::string& pattern_text) {
  SearchConstraints c = constraints;
  if (!pattern_text.empty()) c.pattern = parse_pattern(pattern_text);
  auto tuples = enumerate_tuples(c);

  OutputRecord record;
  record.command = "classify";
  record.inputs["weight"] = c.weight_n;
  record.inputs["pattern"] = c.pattern.empty() ? "*" : pattern_to_string(c.pattern);
  record.inputs["max_rank"] = c.max_rank;
  record.inputs["max_factors"] = c.max_factors;
  record.inputs["min_factors"] = c.min_factors;
  record.inputs["max_dim"] = c.max_dim_v;
  Json flags = Json::array();
  if (c.horizontal) flags.push_back("horizontal");
  if (c.non_horizontal) flags.push_back("non-horizontal");
  if (c.contact) flags.push_back("contact");
  if (c.period_domain) flags.push_back("period-domain");
  if (c.cy) flags.push_back("cy");
  if (c.nonzero_middle) flags.push_back("require-nonzero-middle");
  record.inputs["flags"] = flags;
  for (const auto& ct : tuples) record.results.push_back(to_json(ct));
  record.notes = family_report(tuples);
  emit(record, global.json);
  return 0;
}

int run_adjoint(const GlobalOptions& global, const std::string& algebra, const std::string& e_spec) {
  if (algebra.empty() || e_spec.empty()) throw UsageError("adjoint needs -a and -e");
  SimpleType type = parse_simple_type(algebra);
  GradingElement e;
  {
    std::istringstream is(e_spec);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        e.bits.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw UsageError("malformed grading coordinate '" + tok + "'");
      }
    }
  }
  const RootDatum& d = build_root_datum(type);
  if (static_cast<int>(e.bits.size()) != d.rank())
    throw UsageError("grading needs " + std::to_string(d.rank()) + " coordinates");
  if (e.is_zero()) throw DomainError("grading element is zero");
  auto dims = adjoint_grading(d, e);
  long long depth = d.highest_root_eval(e);

  OutputRecord record;
  record.command = "adjoint";
  record.inputs["algebra"] = to_string(type);
  record.inputs["e"] = e_spec;
  Json result;
  result["depth"] = depth;
  result["dims"] = Json(dims);
  result["horizontal"] = depth == 1;
  result["contact"] = depth == 2 && dims.front() == 1;
  long long even = 0;
  for (long long l = -depth; l <= depth; ++l)
    if (l % 2 == 0) even += dims[depth - l];
  result["compact_dim"] = even;
  if (auto info = real_form_info(type, e)) {
    result["real_form"] = info->real_form;
    result["compact"] = info->compact;
  }
  record.results.push_back(result);
  emit(record, global.json);
  return 0;
}

// Evaluation table: mu(E) and mu(T) for every fundamental weight on every
// classified grading, computed from the root data.
Json evaluation_rows(int max_rank) {
  Json rows = Json::array();
  for (auto kind : {GradingKind::Hermitian, GradingKind::Contact}) {
    for (const auto& [type, e] : classify_gradings(kind, max_rank)) {
      const RootDatum& d = build_root_datum(type);
      std::string e_str;
      for (int i = 0; i < d.rank(); ++i)
        if (e.bits[i]) e_str += (e_str.empty() ? "A" : "+A") + std::to_string(i + 1);
      for (int i = 0; i < d.rank(); ++i) {
        Weight omega;
        omega.fw.assign(d.rank(), 0);
        omega.fw[i] = 1;
        Json row;
        row["kind"] = kind == GradingKind::Hermitian ? "hermitian" : "contact";
        row["algebra"] = to_string(type);
        row["e"] = e_str;
        row["weight"] = "w" + std::to_string(i + 1);
        row["value"] = to_string(d.eval_on_grading(omega, e));
        row["parity"] = to_string(d.parity_element_eval(omega, e));
        row["dual_weight"] = "w" + std::to_string([&] {
                               Weight dual = d.dual_weight(omega);
                               for (int k = 0; k < d.rank(); ++k)
                                 if (dual.fw[k]) return k + 1;
                               return i + 1;
                             }());
        rows.push_back(row);
      }
    }
  }
  return rows;
}

Json grading_rows(GradingKind kind, int max_rank) {
  Json rows = Json::array();
  for (const auto& [type, e] : classify_gradings(kind, max_rank)) {
    const RootDatum& d = build_root_datum(type);
    std::string e_str;
    for (int i = 0; i < d.rank(); ++i)
      if (e.bits[i]) e_str += (e_str.empty() ? "A" : "+A") + std::to_string(i + 1);
    Json row;
    row["algebra"] = to_string(type);
    row["e"] = e_str;
    auto dims = adjoint_grading(d, e);
    row["dims"] = Json(dims);
    if (auto info = real_form_info(type, e)) {
      row["real_form"] = info->real_form;
      row["compact"] = info->compact;
    }
    rows.push_back(row);
  }
  return rows;
}

int run_tables(const GlobalOptions& global, const std::string& which, int max_rank) {
  OutputRecord record;
  record.command = "tables";
  record.inputs["table"] = which;
  record.inputs["max_rank"] = max_rank;
  if (which == "appendix")
    record.results = evaluation_rows(max_rank);
  else if (which == "hermitian")
    record.results = grading_rows(GradingKind::Hermitian, max_rank);
  else if (which == "contact")
    record.results = grading_rows(GradingKind::Contact, max_rank);
  else
    throw UsageError("unknown table '" + which + "' (expected appendix, hermitian or contact)");
  emit(record, global.json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classifier for Hodge representations of simple and semisimple Lie algebras"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_flag("--json", global.json, "emit machine-readable JSON");
  app.add_option("--config", global.config_path, "configuration file (key=value lines)");

  // rep-info
  auto* rep = app.add_subcommand("rep-info", "describe a single tuple (g, E, mu, c)");
  std::string algebra, e_spec, w_spec, tuple_spec, c_spec = "0";
  rep->add_option("-a,--algebra", algebra, "simple type, e.g. C3");
  rep->add_option("-e,--grading", e_spec, "grading element bits, e.g. 0,0,1");
  rep->add_option("-w,--highest-weight", w_spec, "highest weight coordinates, e.g. 0,0,1");
  rep->add_option("-t,--tuple", tuple_spec, "full tuple spec, e.g. (A1:1:1)+(B2:1,0:0,1)");
  rep->add_option("-c,--center", c_spec, "center scalar as exact fraction, e.g. -2/3");

  // classify
  auto* cls = app.add_subcommand("classify", "enumerate tuples matching constraints");
  SearchConstraints constraints;
  std::string pattern_text;
  cls->add_option("--weight", constraints.weight_n, "Hodge-structure weight n")->required();
  cls->add_option("--pattern", pattern_text, "Hodge numbers, e.g. \"2,*,2\" (palindromic)");
  cls->add_flag("--horizontal", constraints.horizontal, "keep only horizontal tuples");
  cls->add_flag("--non-horizontal", constraints.non_horizontal, "keep only non-horizontal tuples");
  cls->add_flag("--contact", constraints.contact, "keep only contact tuples");
  cls->add_flag("--period-domain", constraints.period_domain, "keep only period domains");
  cls->add_flag("--cy", constraints.cy, "keep only Calabi-Yau type tuples");
  cls->add_flag("--require-nonzero-middle", constraints.nonzero_middle,
                "require all interior Hodge numbers to be nonzero");
  int cls_max_rank = -1, cls_max_factors = -1;
  long long cls_max_dim = -1;
  cls->add_option("--max-rank", cls_max_rank, "largest simple-factor rank (default 8)");
  cls->add_option("--max-factors", cls_max_factors, "largest number of simple factors (default 3)");
  cls->add_option("--min-factors", constraints.min_factors, "smallest number of simple factors");
  cls->add_option("--max-dim", cls_max_dim, "cap on dim V (required with wildcard patterns)");

  // adjoint
  auto* adj = app.add_subcommand("adjoint", "grading of the adjoint representation");
  std::string adj_algebra, adj_e;
  adj->add_option("-a,--algebra", adj_algebra, "simple type");
  adj->add_option("-e,--grading", adj_e, "grading element bits");

  // tables
  auto* tab = app.add_subcommand("tables", "golden tables computed from scratch");
  std::string which;
  int tab_max_rank = 8;
  tab->add_option("table", which, "appendix | hermitian | contact")->required();
  tab->add_option("--max-rank", tab_max_rank, "largest rank to include");

  try {
    app.parse(argc, argv);
    Caps caps = load_caps(global.config_path);
    if (rep->parsed()) return run_rep_info(global, algebra, e_spec, w_spec, tuple_spec, c_spec, caps);
    if (cls->parsed()) {
      constraints.max_rank = cls_max_rank > 0 ? cls_max_rank : caps.max_rank;
      constraints.max_factors = cls_max_factors > 0 ? cls_max_factors : caps.max_factors;
      if (cls_max_dim > 0)
        constraints.max_dim_v = cls_max_dim;
      else if (caps.max_dim_explicit)
        constraints.max_dim_v = caps.max_dim;
      return run_classify(global, constraints, pattern_text);
    }
    if (adj->parsed()) return run_adjoint(global, adj_algebra, adj_e);
    if (tab->parsed()) return run_tables(global, which, tab_max_rank);
    throw UsageError("no subcommand given");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 4;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
