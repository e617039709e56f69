#include "qcenter/shell.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "qcenter/battery.hpp"
#include "qcenter/center.hpp"
#include "qcenter/document.hpp"
#include "qcenter/normality.hpp"
#include "qcenter/twist.hpp"

namespace qcenter {

namespace {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  uint64_t seed = 1;
  size_t max_dim = 16;
  std::string format = "text";
  std::string path;
  std::vector<std::string> subgroup;
  size_t count = coideal_samples;
  bool structured() const { return format == "structured"; }
};

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

json checks_json(const std::vector<CrossCheck>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back({{"name", c.name}, {"ok", c.ok}});
  return a;
}

void checks_text(std::ostream& out, const std::vector<CrossCheck>& cs) {
  for (const auto& c : cs) out << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << "\n";
}

bool all_ok(const std::vector<CrossCheck>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const CrossCheck& c) { return c.ok; });
}

/// Hopf coordinates of a subspace of pi(A).
std::vector<Vec> hopf_basis(const QGRealization& r, const OperatorSubspace& n) {
  std::vector<Vec> out;
  for (const auto& x : n.elements()) out.push_back(*r.hopf_coords(x));
  return out;
}

json hopf_basis_json(const QGRealization& r, const OperatorSubspace& n) {
  json a = json::array();
  for (const auto& v : hopf_basis(r, n)) a.push_back(vec_json(v));
  return a;
}

json operator_basis_json(const OperatorSubspace& n) {
  json a = json::array();
  for (const auto& x : n.elements()) {
    Vec flat;
    for (size_t i = 0; i < x.rows(); ++i)
      for (size_t j = 0; j < x.cols(); ++j) flat.push_back(x(i, j));
    a.push_back(vec_json(flat));
  }
  return a;
}

QGDocument load(const Settings& s) { return load_document(s.path); }

void guard_dim(const Settings& s, size_t dim) {
  if (dim > s.max_dim)
    throw InputError(s.path + ": dimension " + std::to_string(dim) + " exceeds --max-dim " + std::to_string(s.max_dim));
}

/// Validated Hopf data of a quantum-group document.
HopfData checked_hopf(const Settings& s, const QGDocument& doc) {
  if (doc.kind == DocKind::fusion_presentation) throw InputError(s.path + ": expected a quantum group document");
  HopfData h = document_hopf(doc);
  guard_dim(s, h.dim);
  auto v = validate_hopf(h);
  if (!v.ok()) throw InputError(s.path + ": invalid document: axiom '" + v.first_failure() + "' fails");
  return h;
}

std::vector<size_t> subgroup_indices(const Settings& s, const GroupTable& g) {
  if (s.subgroup.empty()) throw InputError("--subgroup is required");
  std::vector<size_t> gens;
  for (const auto& label : s.subgroup) {
    auto it = std::find(g.labels.begin(), g.labels.end(), label);
    if (it == g.labels.end()) throw InputError("unknown group element '" + label + "'");
    gens.push_back(size_t(it - g.labels.begin()));
  }
  return generated_subgroup(g, gens);
}

const GroupTable& classical_function_group(const Settings& s, const QGDocument& doc) {
  if (doc.kind != DocKind::classical_group_table || doc.group_algebra)
    throw InputError(s.path + ": expected a classical_group_table document with 'algebra function'");
  return doc.group;
}

std::string labels_str(const GroupTable& g, const std::vector<size_t>& h) {
  std::string s = "{";
  for (size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + g.labels[h[i]];
  return s + "}";
}

// ---------------------------------------------------------------- commands

int cmd_validate(const Settings& s, std::ostream& out) {
  QGDocument doc = load(s);
  json j{{"command", "validate"}, {"name", doc.name}, {"kind", to_string(doc.kind)}};
  std::ostringstream text;
  text << doc.name << " (" << to_string(doc.kind) << ")\n";
  if (doc.kind == DocKind::fusion_presentation) {
    guard_dim(s, doc.fusion.size());
    j["labels"] = doc.fusion.size();
    j["closed"] = doc.fusion.closed();
    text << "  fusion presentation with " << doc.fusion.size() << " labels, "
         << (doc.fusion.closed() ? "closed" : "truncated") << "\n";
  } else {
    HopfData h = document_hopf(doc);
    guard_dim(s, h.dim);
    auto v = validate_hopf(h);
    json checks = json::array();
    for (const auto& c : v.checks) {
      checks.push_back({{"name", c.name}, {"ok", c.ok}});
      text << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    j["axioms"] = checks;
    if (!v.ok()) {
      out << (s.structured() ? j.dump(2) + "\n" : text.str());
      throw InputError(s.path + ": invalid document: axiom '" + v.first_failure() + "' fails");
    }
    auto r = realize(h);
    j["realization"] = {{"gns_dim", r.d}, {"pentagon", pentagon_holds(r.W, r.d)},
                        {"structurally_valid", realization_structurally_valid(r)}};
    text << "  realization on a " << r.d << "-dimensional GNS space: pentagon and Delta(x) = W(x (x) 1)W^* hold\n";
    if (doc.kind == DocKind::cocycle) {
      guard_dim(s, r.d);
      if (doc.omega.rows() != r.d * r.d || doc.omega.cols() != r.d * r.d)
        throw InputError(s.path + ": cocycle matrix must be " + std::to_string(r.d * r.d) + " x " +
                         std::to_string(r.d * r.d));
      bool ok = validate_cocycle(r, Cocycle{doc.name, doc.omega});
      j["cocycle"] = ok;
      if (!ok) throw InputError(s.path + ": invalid document: cocycle identity or unitarity fails");
      text << "  cocycle: unitary, legs in the dual, cocycle identity holds\n";
    }
  }
  out << (s.structured() ? j.dump(2) + "\n" : text.str());
  return exit_ok;
}

int cmd_center(const Settings& s, std::ostream& out) {
  QGDocument doc = load(s);
  auto r = realize(checked_hopf(s, doc));
  auto rep = compute_center_report(r);
  if (s.structured()) {
    json j{{"command", "center"},
           {"name", doc.name},
           {"dims", {{"A", rep.dim_A}, {"Lhat", rep.dim_Lhat}, {"inn", rep.dim_inn}, {"hatZ", rep.hatZ.dim()}}},
           {"dims_multiply", rep.dims_multiply},
           {"cross_checks", checks_json(rep.cross_checks)},
           {"inn_basis", hopf_basis_json(r, rep.inn)},
           {"Lhat_basis", operator_basis_json(rep.Lhat)}};
    out << j.dump(2) << "\n";
  } else {
    out << doc.name << "\n";
    out << "  (dim A, dim Lhat, dim inn) = (" << rep.dim_A << ", " << rep.dim_Lhat << ", " << rep.dim_inn << ")\n";
    out << "  dim hatZ = " << rep.hatZ.dim() << "\n";
    out << "  dim A = dim Lhat * dim inn: " << (rep.dims_multiply ? "yes" : "no") << "\n";
    checks_text(out, rep.cross_checks);
  }
  return rep.ok() ? exit_ok : exit_check_failed;
}

int cmd_inn(const Settings& s, std::ostream& out) {
  QGDocument doc = load(s);
  auto r = realize(checked_hopf(s, doc));
  auto inn = compute_inn(r);
  std::vector<CrossCheck> checks{{"conjugation slices agree", inn == compute_inn_alt(r)},
                                 {"corepresentation products agree", inn == compute_inn_from_coreps(r)},
                                 {"codual(inn) = Lhat", codual(r, inn, AlgebraSide::in_A) == compute_Lhat(r)}};
  auto basis = hopf_basis(r, inn);
  if (s.structured()) {
    json j{{"command", "inn"}, {"name", doc.name}, {"dim", inn.dim()}, {"checks", checks_json(checks)},
           {"basis", hopf_basis_json(r, inn)}};
    out << j.dump(2) << "\n";
  } else {
    out << doc.name << "\n  dim inn = " << inn.dim() << "\n";
    checks_text(out, checks);
    out << "  basis (Hopf coordinates):\n";
    for (const auto& v : basis) out << "    " << vec_str(v) << "\n";
  }
  return all_ok(checks) ? exit_ok : exit_check_failed;
}

int cmd_coideal(const Settings& s, std::ostream& out) {
  QGDocument doc = load(s);
  auto r = realize(checked_hopf(s, doc));
  auto cs = random_left_coideals(r, s.count, s.seed);
  json arr = json::array();
  bool ok = true;
  if (!s.structured()) out << doc.name << " (seed " << s.seed << ")\n";
  for (const auto& [side, n] : cs) {
    auto flags = classify_coideal(r, n, side);
    auto dual = codual(r, n, side);
    bool back = codual(r, dual, opposite(side)) == n;
    bool normal = is_normal_coideal(r, n, side);
    ok = ok && back;
    arr.push_back({{"side", to_string(side)},
                   {"dim", n.dim()},
                   {"left_coideal", flags.left_coideal},
                   {"right_coideal", flags.right_coideal},
                   {"invariant_subalgebra", flags.invariant_subalgebra},
                   {"baaj_vaes", flags.baaj_vaes},
                   {"normal", normal},
                   {"codual_dim", dual.dim()},
                   {"involution", back}});
    if (!s.structured())
      out << "  " << to_string(side) << " dim " << n.dim() << ": codual dim " << dual.dim()
          << (flags.invariant_subalgebra ? ", invariant" : "") << (flags.baaj_vaes ? ", Baaj-Vaes" : "")
          << (normal ? ", normal" : "") << ", codual(codual(N)) = N: " << (back ? "yes" : "NO") << "\n";
  }
  if (s.structured())
    out << json{{"command", "coideal"}, {"name", doc.name}, {"seed", s.seed}, {"coideals", arr}}.dump(2) << "\n";
  return ok ? exit_ok : exit_check_failed;
}

struct SubgroupCase {
  const GroupTable* g;
  std::vector<size_t> h;
  QGRealization k;
  HopfData l;
  QGRealization rl;
  HopfMorphism f;
};

SubgroupCase subgroup_case(const Settings& s, const QGDocument& doc) {
  const GroupTable& g = classical_function_group(s, doc);
  guard_dim(s, g.order());
  auto h = subgroup_indices(s, g);
  auto l = function_algebra(subgroup_table(g, h, "H"));
  auto rl = realize(l);
  return {&g, h, realize(function_algebra(g)), l, std::move(rl), restriction_morphism(g, h)};
}

int cmd_normal(const Settings& s, std::ostream& out) {
  QGDocument doc = load(s);
  auto c = subgroup_case(s, doc);
  bool normal = is_normal_subgroup(c.k, c.rl, c.f);
  bool classical = is_normal_subset(*c.g, c.h);
  bool central = is_central_morphism(c.k, c.rl, c.f);
  if (s.structured()) {
    out << json{{"command", "normal"},        {"name", doc.name},    {"subgroup", labels_str(*c.g, c.h)},
                {"normal", normal},           {"classical", classical}, {"central", central}}
                   .dump(2)
        << "\n";
  } else {
    out << doc.name << " subgroup " << labels_str(*c.g, c.h) << "\n  normal: " << (normal ? "yes" : "no")
        << "\n  central: " << (central ? "yes" : "no") << "\n  classical conjugation check: "
        << (classical ? "normal" : "not normal") << "\n";
  }
  return normal == classical ? exit_ok : exit_check_failed;
}

int cmd_wang(const Settings& s, std::ostream& out) {
  QGDocument doc = load(s);
  auto c = subgroup_case(s, doc);
  bool wang = wang_normal(c.k, c.l, c.f);
  bool normal = is_normal_subgroup(c.k, c.rl, c.f);
  auto pol = pol_quotients(*c.k.hopf, c.l, c.f);
  bool agree = wang == normal && wang == pol.equal;
  if (s.structured()) {
    out << json{{"command", "wang"},
                {"name", doc.name},
                {"subgroup", labels_str(*c.g, c.h)},
                {"wang_normal", wang},
                {"normal", normal},
                {"left_cosets_dim", pol.left_cosets.dim()},
                {"right_cosets_dim", pol.right_cosets.dim()},
                {"cosets_equal", pol.equal},
                {"swapped_by_antipode", pol.swapped_by_antipode}}
                   .dump(2)
        << "\n";
  } else {
    out << doc.name << " subgroup " << labels_str(*c.g, c.h) << "\n  Wang normal: " << (wang ? "yes" : "no")
        << "\n  normal: " << (normal ? "yes" : "no") << "\n  Pol(K/L) dim " << pol.left_cosets.dim()
        << ", Pol(L\\K) dim " << pol.right_cosets.dim() << ", equal: " << (pol.equal ? "yes" : "no")
        << "\n  antipode swaps them: " << (pol.swapped_by_antipode ? "yes" : "no") << "\n";
  }
  return agree ? exit_ok : exit_check_failed;
}

int cmd_chain_group(const Settings& s, std::ostream& out) {
  QGDocument doc = load(s);
  FusionRing f;
  std::optional<size_t> lhat;
  if (doc.kind == DocKind::fusion_presentation) {
    f = doc.fusion;
    guard_dim(s, f.size());
  } else {
    auto r = realize(checked_hopf(s, doc));
    f = fusion_from_realization(r);
    lhat = compute_Lhat(r).dim();
  }
  auto ch = chain_group(f);
  auto zero = degree_zero_subring(f, ch);
  auto ord = ch.order();
  bool ok = !lhat || (ord && *ord == *lhat);
  if (s.structured()) {
    json degrees = json::object();
    for (size_t i = 0; i < f.size(); ++i) degrees[f.labels[i]] = ch.degree_str(i);
    json j{{"command", "chain-group"}, {"name", doc.name}, {"group", ch.str()}};
    j["order"] = ord ? json(ord->get_str()) : json("infinite");
    j["degrees"] = degrees;
    j["degree_zero"] = zero.labels;
    if (lhat) j["dim_Lhat"] = *lhat;
    out << j.dump(2) << "\n";
  } else {
    out << doc.name << "\n  chain group: " << ch.str() << "\n  degrees:\n";
    for (size_t i = 0; i < f.size(); ++i) out << "    " << f.labels[i] << " -> " << ch.degree_str(i) << "\n";
    out << "  degree zero:";
    for (const auto& l : zero.labels) out << " " << l;
    out << "\n";
    if (lhat) out << "  dim Lhat = " << *lhat << "\n";
  }
  return ok ? exit_ok : exit_check_failed;
}

int cmd_twist(const Settings& s, std::ostream& out) {
  QGDocument doc = load(s);
  if (doc.kind != DocKind::cocycle) throw InputError(s.path + ": expected a cocycle document");
  auto r = realize(checked_hopf(s, *doc.base_document));
  if (doc.omega.rows() != r.d * r.d || doc.omega.cols() != r.d * r.d)
    throw InputError(s.path + ": cocycle matrix must be " + std::to_string(r.d * r.d) + " x " +
                     std::to_string(r.d * r.d));
  Cocycle c{doc.name, doc.omega};
  if (!validate_cocycle(r, c)) throw InputError(s.path + ": invalid document: cocycle identity or unitarity fails");
  auto rep = verify_center_invariance(r, c);
  if (s.structured()) {
    out << json{{"command", "twist"},
                {"name", doc.name},
                {"base", doc.base_document->name},
                {"dim_Lhat_before", rep.lhat_before.dim()},
                {"dim_Lhat_after", rep.lhat_after.dim()},
                {"Lhat_invariant", rep.lhat_before == rep.lhat_after},
                {"checks", checks_json(rep.checks)}}
                   .dump(2)
        << "\n";
  } else {
    out << doc.name << " on " << doc.base_document->name << "\n  dim Lhat before " << rep.lhat_before.dim()
        << ", after " << rep.lhat_after.dim() << "\n";
    checks_text(out, rep.checks);
  }
  return rep.ok() ? exit_ok : exit_check_failed;
}

int cmd_battery(const Settings& s, std::ostream& out) {
  BatteryOptions opts;
  opts.seed = s.seed;
  if (!s.structured()) opts.on_result = [&](const CriterionResult& c) { out << format_result(c) << std::endl; };
  auto results = run_battery(opts);
  size_t failed = 0;
  json arr = json::array();
  for (const auto& c : results) {
    failed += !c.pass;
    // Timings are left out of the structured tree so that it is byte-identical across runs.
    arr.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}});
  }
  if (s.structured())
    out << json{{"command", "battery"}, {"seed", s.seed}, {"criteria", arr}}.dump(2) << "\n";
  else
    out << results.size() - failed << "/" << results.size() << " criteria pass\n";
  return failed ? exit_check_failed : exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact centers, inner quotients and co-duals of finite quantum groups", "qcenter"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--seed", s.seed, "Seed for the random coideal generator");
  app.add_option("--max-dim", s.max_dim, "Refuse inputs of larger dimension")->check(CLI::PositiveNumber);
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "structured"}));

  using Command = int (*)(const Settings&, std::ostream&);
  std::vector<std::pair<CLI::App*, Command>> commands;
  auto doc_command = [&](const char* name, const char* help, Command f) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("document", s.path, "Input document")->required();
    commands.push_back({sub, f});
    return sub;
  };
  doc_command("validate", "Check every axiom of a document", cmd_validate);
  doc_command("center", "Report hatZ, Lhat and inn", cmd_center);
  doc_command("inn", "Inner quotient algebra by three routes", cmd_inn);
  doc_command("coideal", "Random left coideals and their co-duals", cmd_coideal)
      ->add_option("--count", s.count, "Number of coideals");
  doc_command("normal", "Normality of a subgroup", cmd_normal)
      ->add_option("--subgroup", s.subgroup, "Generators of the subgroup, by label")
      ->delimiter(',');
  doc_command("wang", "Wang normality and coset algebras", cmd_wang)
      ->add_option("--subgroup", s.subgroup, "Generators of the subgroup, by label")
      ->delimiter(',');
  doc_command("chain-group", "Chain group of a fusion ring or quantum group", cmd_chain_group);
  doc_command("twist", "Twist by a cocycle and compare Lhat", cmd_twist);
  commands.push_back({app.add_subcommand("battery", "Run the acceptance criteria"), cmd_battery});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "qcenter: " << e.what() << "\n";
    return exit_input_error;
  }

  for (const auto& [sub, f] : commands) {
    if (!sub->parsed()) continue;
    try {
      return f(s, out);
    } catch (const DocumentError& e) {
      err << e.what() << "\n";
      return exit_input_error;
    } catch (const InputError& e) {
      err << e.what() << "\n";
      return exit_input_error;
    } catch (const std::invalid_argument& e) {
      err << s.path << ": " << e.what() << "\n";
      return exit_input_error;
    } catch (const std::exception& e) {
      err << "check failed: " << e.what() << "\n";
      return exit_check_failed;
    }
  }
  return exit_input_error;
}

}  // namespace qcenter
