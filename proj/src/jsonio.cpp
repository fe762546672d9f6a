#include "edgeideal/jsonio.hpp"

#include "json.hpp"

#include "edgeideal/textio.hpp"

namespace edgeideal {

using ordered = nlohmann::ordered_json;

namespace {

std::string dump(const ordered& j) { return j.dump(2) + "\n"; }

ordered family_json(const FamilyTag& tag) {
  ordered j;
  j["name"] = family_name(tag.kind);
  j["rooted_forest"] = tag.rooted_forest;
  j["components"] = tag.components;
  j["notes"] = tag.notes;
  return j;
}

ordered node_json(const CertNode& node) {
  ordered j;
  j["kind"] = cert_kind_name(node.kind);
  j["ideal"] = to_string(node.ideal);
  j["pd"] = node.pd;
  j["reg"] = node.reg;
  if (node.split_generator) {
    j["generator"] = to_string(*node.split_generator, *node.ideal.ambient());
    j["witness"] = node.ideal.ambient()->name(node.witness_var);
  }
  if (node.coprime_factor) {
    j["factor"] = to_string(*node.coprime_factor, *node.ideal.ambient());
  }
  if (!node.children.empty()) {
    ordered kids = ordered::array();
    for (const auto& child : node.children) kids.push_back(node_json(*child));
    j["children"] = std::move(kids);
  }
  return j;
}

}  // namespace

std::string betti_json(const BettiTable& table) {
  ordered j;
  j["characteristic"] = table.field_char;
  j["nvars"] = table.nvars;
  ordered entries = ordered::array();
  for (const auto& [key, value] : table.entries) {
    entries.push_back(ordered::array({key.first, key.second, value}));
  }
  j["entries"] = std::move(entries);
  if (table.empty()) {
    j["pd"] = nullptr;
    j["reg"] = nullptr;
    j["depth"] = nullptr;
  } else {
    j["pd"] = table.pd();
    j["reg"] = table.reg();
    j["depth"] = table.depth();
  }
  return dump(j);
}

std::string invariants_json(const InvariantReport& report) {
  ordered j;
  j["pd"] = report.pd;
  j["reg"] = report.reg;
  j["depth"] = report.depth;
  j["family"] = family_json(report.family);
  j["hypothesis_ok"] = report.hypothesis_ok;
  j["formulas"] = report.formula_refs;
  return dump(j);
}

std::string polarize_json(const PolarizedIdeal& pol) {
  ordered j;
  j["ideal"] = to_string(pol.ideal);
  ordered vars = ordered::array();
  const VarSet& ambient = *pol.ideal.ambient();
  for (std::size_t i = 0; i < pol.slots.size(); ++i) {
    ordered v;
    v["name"] = ambient.name(static_cast<int>(i));
    v["source"] = pol.source_ambient->name(pol.slots[i].source);
    v["slot"] = pol.slots[i].slot;
    vars.push_back(std::move(v));
  }
  j["variables"] = std::move(vars);
  return dump(j);
}

std::string certificate_json(const SplittingCertificate& cert) {
  ordered j;
  j["nodes"] = cert.node_count;
  j["splits"] = cert.split_count;
  j["oracle_fallbacks"] = cert.oracle_fallbacks;
  j["height"] = cert.height;
  std::vector<const CertNode*> spine = certificate_spine(cert);
  if (!spine.empty()) j["spine_splits"] = spine.size();
  if (cert.nodes_verified > 0 || cert.splits_verified > 0) {
    ordered v;
    v["nodes_checked"] = cert.nodes_verified;
    v["splits_checked"] = cert.splits_verified;
    v["failures"] = cert.verification_failures;
    j["verification"] = std::move(v);
  }
  j["root"] = node_json(*cert.root);
  return dump(j);
}

std::string sweep_json(const SweepOptions& opts, const SweepResult& result) {
  ordered j;
  ordered o;
  switch (opts.family) {
    case SweepFamily::Forest:
      o["family"] = "forest";
      o["max_edges"] = opts.max_edges;
      break;
    case SweepFamily::Cycle:
      o["family"] = "cycle";
      o["n_min"] = opts.n_min;
      o["n_max"] = opts.n_max;
      break;
    case SweepFamily::Star:
      o["family"] = "star";
      o["n_min"] = opts.n_min;
      o["n_max"] = opts.n_max;
      break;
  }
  o["weights"] = opts.weights;
  o["certify"] = opts.certify;
  o["characteristic"] = opts.field_char;
  j["options"] = std::move(o);
  j["instances"] = result.instances;
  j["matches"] = result.matches;
  j["mismatches"] = result.mismatches;
  j["hypothesis_instances"] = result.hypothesis_instances;
  j["hypothesis_mismatches"] = result.hypothesis_mismatches;
  if (opts.certify) {
    j["certificates"] = result.certificates;
    j["certificate_failures"] = result.certificate_failures;
    j["split_nodes_checked"] = result.split_nodes_checked;
    j["split_failures"] = result.split_failures;
  }
  j["counterexamples"] = result.counterexamples;
  j["ok"] = result.ok(opts.allow_hypothesis_fail);
  return dump(j);
}

std::string invariants_match_json(const InvariantReport& formula,
                                  const Invariants& oracle, bool match) {
  ordered j;
  ordered f;
  f["pd"] = formula.pd;
  f["reg"] = formula.reg;
  f["depth"] = formula.depth;
  f["family"] = family_json(formula.family);
  f["hypothesis_ok"] = formula.hypothesis_ok;
  f["formulas"] = formula.formula_refs;
  j["formula"] = std::move(f);
  ordered o;
  o["pd"] = oracle.pd;
  o["reg"] = oracle.reg;
  o["depth"] = oracle.depth;
  j["oracle"] = std::move(o);
  j["match"] = match;
  return dump(j);
}

}  // namespace edgeideal
