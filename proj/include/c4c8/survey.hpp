#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "c4c8/cayley.hpp"

namespace c4c8 {

struct SurveyRow {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::uint32_t order = 0;  // always 4mn
  std::uint32_t size = 0;   // always 6mn
  std::optional<bool> vertex_transitive;
  std::optional<std::size_t> aut_order;
  CayleyAnswer is_cayley = CayleyAnswer::kInconclusive;
  std::uint64_t wall_time_ms = 0;
};

struct SurveyOptions {
  std::uint64_t budget = kDefaultSearchBudget;
  std::uint32_t aut_max_order = kDefaultAutMaxOrder;
  // Per-pair verdicts are cached here, keyed by (m, n, tool version); reruns
  // reuse them. Empty path disables caching.
  std::filesystem::path cache_dir;
};

// C4C8_CACHE_DIR if set, else ".c4c8_cache" under the current directory.
std::filesystem::path default_cache_dir();

SurveyRow survey_pair(std::uint32_t m, std::uint32_t n,
                      const SurveyOptions& options);

// One row per (m, n) in [m_lo, m_hi] x [n_lo, n_hi], sorted by (m, n).
// Oversized or budget-starved pairs become inconclusive rows; the sweep
// itself never aborts.
std::vector<SurveyRow> run_survey(std::uint32_t m_lo, std::uint32_t m_hi,
                                  std::uint32_t n_lo, std::uint32_t n_hi,
                                  const SurveyOptions& options);

// CSV with the fixed header
// m,n,order,size,vertex_transitive,aut_order,is_cayley,wall_time_ms
std::string survey_csv(const std::vector<SurveyRow>& rows);

}  // namespace c4c8
