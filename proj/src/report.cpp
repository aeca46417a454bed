#include "c4c8/report.hpp"

#include <ctime>
#include <fstream>

#include <json.hpp>

#include "c4c8/version.hpp"

namespace c4c8 {

std::string utc_timestamp_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool VerificationReport::overall_pass() const {
  if (!graph_valid) return false;
  for (const auto& [name, ok] : generator_checks)
    if (!ok) return false;
  if (!relations.all_hold()) return false;
  if (!structure.semidirect() || !structure.factorization_unique) return false;
  if (!transitive || !regular || !cayley_isomorphism) return false;
  if (connection_set_size != 3 || !connection_identity_free ||
      !connection_inverse_closed)
    return false;
  if (!aut_check_skipped &&
      !aut_contains_generated_group.value_or(false))
    return false;
  return true;
}

VerificationReport run_verification(std::uint32_t n,
                                    std::uint32_t aut_max_order,
                                    std::uint64_t budget) {
  if (n == 0) throw std::invalid_argument("run_verification requires n >= 1");
  const TorusParams params{n, n};
  const TorusGraph torus = build_torus(params);
  const GeneratorSet gens = make_generators(params);

  VerificationReport r;
  r.params = params;
  const ValidationReport valid = validate_torus(torus);
  r.graph_order = valid.order;
  r.graph_size = valid.size;
  r.graph_valid = valid.all_ok();

  r.generator_checks.emplace_back("g1", is_automorphism(torus, gens.g1));
  r.generator_checks.emplace_back("g2", is_automorphism(torus, gens.g2));
  r.generator_checks.emplace_back("g3", is_automorphism(torus, *gens.g3));
  r.generator_checks.emplace_back("g4", is_automorphism(torus, *gens.g4));

  r.relations = verify_relations(n);
  r.structure = verify_group_structure(n);

  const PermGroup group = closure(gens.all());
  const RegularityCheck reg = check_regular_action(group);
  r.transitive = reg.transitive;
  r.regular = reg.regular();

  const VertexId base{1, 1, 0};
  const ConnectionSet s = connection_set(torus, group, base);
  r.connection_set_size = s.elements.size();
  r.connection_identity_free = true;
  r.connection_inverse_closed = true;
  for (const auto& e : s.elements) {
    if (e.is_identity()) r.connection_identity_free = false;
    if (!std::binary_search(s.elements.begin(), s.elements.end(), inverse(e)))
      r.connection_inverse_closed = false;
    r.connection_set_cycles.push_back(e.cycle_string());
  }
  r.cayley_isomorphism = verify_cayley_isomorphism(torus, group, base);

  if (torus.order() > aut_max_order) {
    r.aut_check_skipped = true;
    r.aut_skip_reason = "graph order " + std::to_string(torus.order()) +
                        " exceeds the brute-force cap of " +
                        std::to_string(aut_max_order);
  } else {
    const PermGroup aut = brute_force_aut(torus, budget, aut_max_order);
    r.aut_order = aut.order();
    bool contains_all = true;
    for (const auto& e : group.elements)
      if (!aut.contains(e)) contains_all = false;
    r.aut_contains_generated_group = contains_all;
  }

  r.generated_at_utc = utc_timestamp_now();
  return r;
}

std::string report_to_json(const VerificationReport& r) {
  using json = nlohmann::ordered_json;
  json j;
  j["schema_version"] = {{"major", kReportSchemaMajor},
                         {"minor", kReportSchemaMinor}};
  j["tool"] = kToolName;
  j["tool_version"] = kToolVersion;
  j["generated_at_utc"] = r.generated_at_utc;
  j["params"] = {{"m", r.params.m}, {"n", r.params.n}};
  j["graph"] = {{"order", r.graph_order},
                {"size", r.graph_size},
                {"valid", r.graph_valid}};

  auto& lemma1 = j["lemma1"] = json::object();
  for (const auto& [name, ok] : r.generator_checks) lemma1[name] = ok;

  auto& lemma2 = j["lemma2"] = json::array();
  for (const auto& check : r.relations.checks)
    lemma2.push_back({{"relation", check.relation}, {"holds", check.holds}});

  j["lemma3"] = {{"H_order", r.structure.H_order},
                 {"K_order", r.structure.K_order},
                 {"G_order", r.structure.G_order},
                 {"H_normal", r.structure.H_normal},
                 {"intersection_order", r.structure.intersection_order},
                 {"order_product_matches", r.structure.order_product_matches},
                 {"K_type", r.structure.K_type},
                 {"K_abelian", r.structure.K_abelian},
                 {"K_all_involutions", r.structure.K_all_involutions},
                 {"factorization_unique", r.structure.factorization_unique}};

  j["theorem"] = {
      {"transitive", r.transitive},
      {"regular", r.regular},
      {"connection_set_size", r.connection_set_size},
      {"connection_identity_free", r.connection_identity_free},
      {"connection_inverse_closed", r.connection_inverse_closed},
      {"connection_set", r.connection_set_cycles},
      {"cayley_isomorphism_verified", r.cayley_isomorphism}};

  auto& aut = j["aut_check"] = json::object();
  aut["skipped"] = r.aut_check_skipped;
  if (r.aut_check_skipped) {
    aut["reason"] = r.aut_skip_reason;
  } else {
    aut["aut_order"] = *r.aut_order;
    aut["contains_generated_group"] = *r.aut_contains_generated_group;
  }

  j["overall_pass"] = r.overall_pass();
  return j.dump(2) + "\n";
}

void write_report(const VerificationReport& report,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open report file " + path.string());
  out << report_to_json(report);
  out.flush();
  if (!out)
    throw std::runtime_error("failed writing report file " + path.string());
}

}  // namespace c4c8
