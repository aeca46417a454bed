#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "c4c8/cayley.hpp"
#include "c4c8/generators.hpp"

namespace c4c8 {

// Everything `verify --n N` establishes about the [n, n] torus: the four
// generator checks, the nine relations, the subgroup structure, the regular
// action with its connection set, the canonical Cayley isomorphism, and an
// independent automorphism cross-check when the graph is small enough.
struct VerificationReport {
  TorusParams params;
  std::uint32_t graph_order = 0;
  std::uint32_t graph_size = 0;
  bool graph_valid = false;

  std::vector<std::pair<std::string, bool>> generator_checks;  // "g1".."g4"
  RelationReport relations;
  StructureReport structure;

  bool transitive = false;
  bool regular = false;
  std::size_t connection_set_size = 0;
  bool connection_identity_free = false;
  bool connection_inverse_closed = false;
  std::vector<std::string> connection_set_cycles;
  bool cayley_isomorphism = false;

  // Cross-check against the independent brute-force automorphism search;
  // skipped (with a reason) when 4n^2 exceeds the brute-force cap.
  bool aut_check_skipped = false;
  std::string aut_skip_reason;
  std::optional<std::size_t> aut_order;
  std::optional<bool> aut_contains_generated_group;

  std::string generated_at_utc;  // the only timestamp field, kept isolated

  bool overall_pass() const;
};

VerificationReport run_verification(
    std::uint32_t n, std::uint32_t aut_max_order = kDefaultAutMaxOrder,
    std::uint64_t budget = kDefaultSearchBudget);

// Stable-key-order JSON text; generated_at_utc is the only field that can
// differ between runs with equal inputs.
std::string report_to_json(const VerificationReport& report);

// Writes report_to_json to `path`; throws std::runtime_error on I/O failure.
void write_report(const VerificationReport& report,
                  const std::filesystem::path& path);

std::string utc_timestamp_now();

}  // namespace c4c8
