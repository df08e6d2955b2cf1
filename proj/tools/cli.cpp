#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "heaplie/search.hpp"
#include "heaplie/structure_io.hpp"
#include "heaplie/symbolic/falsify.hpp"
#include "heaplie/symbolic/normalize.hpp"
#include "heaplie/symbolic/parser.hpp"

namespace heaplie::cli {

using nlohmann::json;

namespace {

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::malformed:
      return kMalformed;
    case ErrorKind::invalid:
      return kViolation;
    case ErrorKind::budget:
      return kBudget;
    case ErrorKind::hypothesis:
      return kHypothesis;
  }
  return kMalformed;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::malformed, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

json violations_json(const ViolationReport& r) {
  json arr = json::array();
  for (const auto& v : r.violations)
    arr.push_back({{"axiom", v.axiom}, {"witness", v.witness}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  return arr;
}

json structure_json(const StructureFile& f) { return json::parse(serialize(f)); }

// --- check -----------------------------------------------------------------

struct CheckArgs {
  std::string file;
  bool strong = false;
  bool all = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const StructureFile f = parse_structure(read_input(a.file));
  const SweepOptions opt = a.all ? SweepOptions::all() : SweepOptions{};
  ReportBuilder rb(opt);
  json ran = json::array();

  if (f.heap_table) {
    rb.append(validate_heap(TernaryTable{carrier_size(f), *f.heap_table}, opt));
    ran.push_back("heap");
  }
  auto finish = [&] {
    ViolationReport r = rb.take();
    json j{{"kind", structure_kind_name(f.kind)}, {"ok", r.ok()}, {"checked", ran}, {"violations", violations_json(r)}};
    out << j.dump() << "\n";
    return r.ok() ? kOk : kViolation;
  };
  if (rb.done()) return finish();

  const bool affine_kind = f.field_p.has_value();
  if (affine_kind && f.kind != StructureKind::lie_ring) {
    rb.append(validate_affine(build_affine(f), opt));
    ran.push_back("affine");
    if (rb.done()) return finish();
  }
  switch (f.kind) {
    case StructureKind::heap:
    case StructureKind::affine:
      break;
    case StructureKind::group: {
      const FiniteHeap h = build_heap(f);
      rb.append(AbelianGroup::validate_table(h.size(), h.group().add_table(), h.group().zero()));
      ran.push_back("group");
      break;
    }
    case StructureKind::truss:
      rb.append(validate_truss(build_truss(f), opt));
      ran.push_back("truss");
      break;
    case StructureKind::lie_truss:
    case StructureKind::heap_lie_affebra: {
      const LieTernary l = build_lie_ternary(f);
      rb.append(validate_lie_truss(l, opt));
      ran.push_back("lie_truss");
      if (a.strong && !rb.done()) {
        rb.append(validate_strong_jacobi(l, opt));
        ran.push_back("strong_jacobi");
      }
      break;
    }
    case StructureKind::lie_affebra:
      rb.append(validate_lie_affebra(build_lie_affebra(f), opt));
      ran.push_back("lie_affebra");
      break;
    case StructureKind::lie_ring:
      rb.append(validate_lie_ring(build_lie_ring(f), opt));
      ran.push_back("lie_ring");
      break;
  }
  return finish();
}

// --- enumerate / classify --------------------------------------------------

struct EnumerateArgs {
  std::string group;
  std::string kind = "truss";
  bool up_to_iso = false;
  std::optional<std::size_t> limit;
  int jobs = 1;
  bool allow_large = false;
  bool weak_not_strong = false;
  std::string export_path;
};

std::optional<int> published_classes(const AbelianGroup& g, SearchKind k) {
  const auto& o = g.orders();
  if (o.size() != 2 || o[0] != o[1]) return std::nullopt;
  const int p = o[0];
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return std::nullopt;
  if (k == SearchKind::truss) return 23;
  if (k == SearchKind::ring) return 8;
  return std::nullopt;
}

void write_export(const std::string& path, const json& arr) {
  if (path.empty()) return;
  std::ofstream os(path);
  if (!os) throw Error(ErrorKind::malformed, "cannot write '" + path + "'");
  os << arr.dump() << "\n";
}

int cmd_enumerate(const EnumerateArgs& a, bool classify, std::ostream& out) {
  SearchSpec spec;
  spec.group = parse_group_spec(a.group);
  spec.kind = parse_search_kind(a.kind);
  spec.up_to_iso = a.up_to_iso || classify;
  spec.limit = a.limit;
  spec.workers = a.jobs;
  spec.allow_large = a.allow_large;
  require(a.jobs >= 1, ErrorKind::malformed, "--jobs must be at least 1");

  json summary{{"group", spec.group.describe()}, {"kind", search_kind_name(spec.kind)}, {"up_to_iso", spec.up_to_iso}};
  json listed = json::array();

  auto fill = [&](const auto& e) {
    summary["total"] = e.total;
    summary["classes"] = e.classes;
    summary["truncated"] = e.truncated;
    for (const auto& s : e.structures) listed.push_back(structure_json(to_file(s)));
  };

  switch (spec.kind) {
    case SearchKind::truss:
    case SearchKind::ring: {
      const bool rings = spec.kind == SearchKind::ring;
      const auto e = rings ? enumerate_rings(spec) : enumerate_trusses(spec);
      fill(e);
      if (classify && spec.group.order() <= 4) {
        const auto tables = truss_tables_by_propagation(spec.group, rings);
        const std::size_t classes = count_classes(spec.group, tables, 2);
        summary["propagation"] = {{"total", tables.size()}, {"classes", classes}};
        summary["strategies_agree"] = tables.size() == e.total && classes == e.classes;
      }
      if (const auto pub = published_classes(spec.group, spec.kind)) {
        summary["published_classes"] = *pub;
        summary["matches_published"] = static_cast<std::size_t>(*pub) == e.classes;
      }
      break;
    }
    case SearchKind::lie_truss: {
      if (a.weak_not_strong) {
        const auto found = search_weak_not_strong(spec);
        summary["weak_not_strong"] = found.size();
        json items = json::array();
        for (const auto& w : found) {
          if (a.limit && items.size() >= *a.limit) break;
          items.push_back({{"structure", structure_json(to_file(w.bracket))},
                           {"witness", w.witness.witness},
                           {"lhs", w.witness.lhs},
                           {"rhs", w.witness.rhs}});
        }
        summary["examples"] = items;
        out << summary.dump() << "\n";
        return kOk;
      }
      fill(enumerate_lie_brackets(spec));
      break;
    }
    case SearchKind::derivation:
      throw Error(ErrorKind::malformed, "derivations are enumerated per truss: use the 'derivations' command");
  }
  if (a.limit) summary["representatives"] = listed;
  write_export(a.export_path, listed);
  out << summary.dump() << "\n";
  return kOk;
}

// --- convert ---------------------------------------------------------------

struct ConvertArgs {
  std::string op;
  std::optional<Elem> at;
  bool force_char2 = false;
  std::string file;
};

Elem need_at(const ConvertArgs& a) {
  if (!a.at) throw Error(ErrorKind::malformed, "--op " + a.op + " needs --at");
  return *a.at;
}

int emit(std::ostream& out, std::ostream& err, const StructureFile& f, const ViolationReport& r) {
  out << serialize(f) << "\n";
  if (r.ok()) return kOk;
  err << json{{"ok", false}, {"violations", violations_json(r)}}.dump() << "\n";
  return kViolation;
}

int cmd_convert(const ConvertArgs& a, std::ostream& out, std::ostream& err) {
  const StructureFile f = parse_structure(read_input(a.file));
  auto refuse = [&](const ViolationReport& r) {
    throw InvalidStructure("converted structure fails its validator", r);
  };
  if (a.op == "bracket-from-truss") {
    const LieTernary l = bracket_from_truss(build_truss(f));
    const auto r = validate_lie_truss(l);
    if (!r.ok()) refuse(r);
    return emit(out, err, to_file(l), r);
  }
  if (a.op == "affebra-to-ternary") {
    const LieTernary l = affebra_to_ternary(build_lie_affebra(f), a.force_char2);
    // Forced characteristic-2 output is emitted even though it fails; the
    // report goes to the error stream and the exit code says so.
    return emit(out, err, to_file(l), validate_lie_truss(l));
  }
  if (a.op == "ternary-to-affebra") {
    const LieAffebra l = ternary_to_affebra(build_lie_ternary(f), need_at(a));
    const auto r = validate_lie_affebra(l);
    if (!r.ok()) refuse(r);
    return emit(out, err, to_file(l), r);
  }
  if (a.op == "retract-lie-ring") {
    const LieTernary l = build_lie_ternary(f);
    const Elem o = need_at(a);
    const LieRingView ring = retract_lie_ring(l, o);
    const auto r = validate_lie_ring(ring);
    if (!r.ok()) refuse(r);
    return emit(out, err, to_file(ring, l.heap, o), r);
  }
  if (a.op == "strengthen") {
    const LieTernary l = strengthen_bracket(build_lie_ternary(f), need_at(a));
    const auto r = validate_lie_truss(l);
    if (!r.ok()) refuse(r);
    return emit(out, err, to_file(l), r);
  }
  if (a.op == "derivations") {
    const TrussStructure t = build_truss(f);
    const auto d = derivations_lie_truss(t, enumerate_derivations(t));
    const auto r = validate_lie_truss(d.lie);
    if (!r.ok()) refuse(r);
    return emit(out, err, to_file(d.lie), r);
  }
  throw Error(ErrorKind::malformed, "unknown --op '" + a.op + "'");
}

// --- derivations -----------------------------------------------------------

int cmd_derivations(const std::string& file, std::optional<std::size_t> limit, std::ostream& out) {
  const TrussStructure t = build_truss(parse_structure(read_input(file)));
  const auto ds = enumerate_derivations(t);
  json j{{"count", ds.size()}};
  json listed = json::array();
  for (const auto& d : ds) {
    if (limit && listed.size() >= *limit) break;
    listed.push_back(d);
  }
  j["derivations"] = listed;
  const auto der = derivations_lie_truss(t, ds);
  const auto lie = validate_lie_truss(der.lie);
  j["lie_truss"] = {{"ok", lie.ok()}, {"violations", violations_json(lie)}};
  bool ok = lie.ok();
  if (der.lie.size() <= kMaxQuinticSweep) {
    const auto strong = validate_strong_jacobi(der.lie);
    j["strong_jacobi"] = {{"ok", strong.ok()}, {"violations", violations_json(strong)}};
    ok = ok && strong.ok();
  } else {
    j["strong_jacobi"] = "skipped: more than 32 derivations";
  }
  out << j.dump() << "\n";
  return ok ? kOk : kViolation;
}

// --- normalize / prove -----------------------------------------------------

struct SymbolicArgs {
  std::string theory = "free-truss";
  std::string vars;
  std::string text;
  std::size_t falsify = 0;
};

void check_vars(const SymbolicArgs& a, const std::vector<symbolic::Expr>& es) {
  if (a.vars.empty()) return;
  std::set<std::string> allowed;
  std::stringstream ss(a.vars);
  for (std::string v; std::getline(ss, v, ',');) {
    v.erase(std::remove_if(v.begin(), v.end(), ::isspace), v.end());
    if (!v.empty()) allowed.insert(v);
  }
  for (const auto& e : es)
    for (const auto& v : e.variables())
      if (!allowed.count(v)) throw Error(ErrorKind::malformed, "variable '" + v + "' is not declared in --vars");
}

int cmd_normalize(const SymbolicArgs& a, std::ostream& out) {
  const auto theory = symbolic::parse_theory(a.theory);
  const auto e = symbolic::parse(a.text);
  check_vars(a, {e});
  const auto expanded = theory == symbolic::Theory::free_truss ? symbolic::expand_lie_macro(e) : e;
  out << symbolic::normalize(expanded, theory).to_string() << "\n";
  return kOk;
}

int cmd_prove(const SymbolicArgs& a, std::ostream& out) {
  const auto theory = symbolic::parse_theory(a.theory);
  const auto [lhs, rhs] = symbolic::parse_identity(a.text);
  check_vars(a, {lhs, rhs});
  const auto v = symbolic::prove_identity(lhs, rhs, theory);
  if (v.equal) {
    out << "EQUAL\n" << "normal form: " << v.lhs_nf.to_string() << "\n";
  } else {
    out << "NOT-EQUAL\n"
        << "lhs: " << v.lhs_nf.to_string() << "\n"
        << "rhs: " << v.rhs_nf.to_string() << "\n"
        << "diff: " << symbolic::format_coefficients(v.diff) << "\n";
  }
  if (a.falsify > 0) {
    const auto ce = symbolic::random_falsify(lhs, rhs, a.falsify);
    if (ce) {
      out << "counterexample in " << ce->model << ":";
      for (const auto& [name, value] : ce->assignment) out << " " << name << "=" << value;
      out << " (lhs " << ce->lhs << ", rhs " << ce->rhs << ")\n";
    } else {
      out << "no counterexample in " << a.falsify << " samples\n";
    }
  }
  return v.equal ? kOk : kViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite heaps, trusses and Lie brackets: validation, search and identity proving", "heaplie"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Validate a structure file");
  c_check->add_option("file", check.file, "Structure file ('-' for standard input)")->required();
  c_check->add_flag("--strong", check.strong, "Also check the five-variable Jacobi identity");
  c_check->add_flag("--all", check.all, "Report up to 100 witnesses instead of the first");

  EnumerateArgs en;
  auto add_search = [&](CLI::App* sc) {
    sc->add_option("--group", en.group, "Group such as Z2, Z4, Z2xZ2")->required();
    sc->add_option("--kind", en.kind, "truss | ring | lie-truss");
    sc->add_option("--limit", en.limit, "List at most N structures");
    sc->add_option("--jobs", en.jobs, "Worker threads");
    sc->add_flag("--allow-large", en.allow_large, "Run searches above the default budget");
    sc->add_option("--export", en.export_path, "Write the listed structures as a JSON array");
  };
  auto* c_enum = app.add_subcommand("enumerate", "Enumerate structures on a small group");
  add_search(c_enum);
  c_enum->add_flag("--up-to-iso", en.up_to_iso, "One representative per isomorphism class");
  c_enum->add_flag("--weak-not-strong", en.weak_not_strong, "List Lie brackets failing only the strong identity");
  auto* c_classify = app.add_subcommand("classify", "Count isomorphism classes, cross-checking strategies");
  add_search(c_classify);

  ConvertArgs conv;
  auto* c_conv = app.add_subcommand("convert", "Convert between structure kinds");
  c_conv->add_option("--op", conv.op,
                     "affebra-to-ternary | ternary-to-affebra | retract-lie-ring | strengthen | "
                     "bracket-from-truss | derivations")
      ->required();
  c_conv->add_option("--at", conv.at, "Basepoint");
  c_conv->add_flag("--force-char2", conv.force_char2, "Convert over F_2 despite the characteristic");
  c_conv->add_option("file", conv.file, "Structure file ('-' for standard input)")->required();

  SymbolicArgs sym;
  auto add_symbolic = [&](CLI::App* sc, const char* what) {
    sc->add_option("--theory", sym.theory, "free-heap | free-truss");
    sc->add_option("--vars", sym.vars, "Comma-separated variables the input may use");
    sc->add_option("input", sym.text, what)->required();
  };
  auto* c_norm = app.add_subcommand("normalize", "Print the normal form of an expression");
  add_symbolic(c_norm, "Expression");
  auto* c_prove = app.add_subcommand("prove", "Decide an identity 'LHS == RHS'");
  add_symbolic(c_prove, "Identity");
  c_prove->add_option("--falsify", sym.falsify, "Also search N random finite models");

  std::string der_file;
  std::optional<std::size_t> der_limit;
  auto* c_der = app.add_subcommand("derivations", "List the derivations of a truss");
  c_der->add_option("file", der_file, "Truss structure file")->required();
  c_der->add_option("--limit", der_limit, "List at most N maps");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  }

  try {
    if (c_check->parsed()) return cmd_check(check, out);
    if (c_enum->parsed()) return cmd_enumerate(en, false, out);
    if (c_classify->parsed()) return cmd_enumerate(en, true, out);
    if (c_conv->parsed()) return cmd_convert(conv, out, err);
    if (c_norm->parsed()) return cmd_normalize(sym, out);
    if (c_prove->parsed()) return cmd_prove(sym, out);
    if (c_der->parsed()) return cmd_derivations(der_file, der_limit, out);
  } catch (const InvalidStructure& e) {
    out << json{{"ok", false}, {"error", e.what()}, {"violations", violations_json(e.report())}}.dump() << "\n";
    return kViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return kMalformed;
}

}  // namespace heaplie::cli
