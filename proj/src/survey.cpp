#include "c4c8/survey.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "c4c8/errors.hpp"
#include "c4c8/version.hpp"

namespace c4c8 {

namespace {

const char* answer_text(CayleyAnswer a) { return to_string(a); }

std::optional<CayleyAnswer> parse_answer(const std::string& text) {
  if (text == "yes") return CayleyAnswer::kYes;
  if (text == "no") return CayleyAnswer::kNo;
  if (text == "inconclusive") return CayleyAnswer::kInconclusive;
  return std::nullopt;
}

std::filesystem::path cache_file(const std::filesystem::path& dir,
                                 std::uint32_t m, std::uint32_t n) {
  return dir / ("m" + std::to_string(m) + "_n" + std::to_string(n) + "_v" +
                kToolVersion + ".json");
}

std::optional<SurveyRow> load_cached(const std::filesystem::path& dir,
                                     std::uint32_t m, std::uint32_t n) {
  if (dir.empty()) return std::nullopt;
  std::ifstream in(cache_file(dir, m, n));
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    // Verdicts are trust artifacts: only an exact tool-version match counts.
    if (j.at("tool_version").get<std::string>() != kToolVersion)
      return std::nullopt;
    SurveyRow row;
    row.m = j.at("m").get<std::uint32_t>();
    row.n = j.at("n").get<std::uint32_t>();
    if (row.m != m || row.n != n) return std::nullopt;
    row.order = j.at("order").get<std::uint32_t>();
    row.size = j.at("size").get<std::uint32_t>();
    const auto& vt = j.at("vertex_transitive");
    if (vt.is_boolean()) row.vertex_transitive = vt.get<bool>();
    const auto& aut = j.at("aut_order");
    if (aut.is_number_unsigned()) row.aut_order = aut.get<std::size_t>();
    const auto answer = parse_answer(j.at("is_cayley").get<std::string>());
    if (!answer) return std::nullopt;
    row.is_cayley = *answer;
    row.wall_time_ms = j.at("wall_time_ms").get<std::uint64_t>();
    return row;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // stale or corrupt cache entry; recompute
  }
}

void store_cached(const std::filesystem::path& dir, const SurveyRow& row) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;  // cache is best-effort
  nlohmann::ordered_json j;
  j["tool_version"] = kToolVersion;
  j["m"] = row.m;
  j["n"] = row.n;
  j["order"] = row.order;
  j["size"] = row.size;
  if (row.vertex_transitive)
    j["vertex_transitive"] = *row.vertex_transitive;
  else
    j["vertex_transitive"] = nullptr;
  if (row.aut_order)
    j["aut_order"] = *row.aut_order;
  else
    j["aut_order"] = nullptr;
  j["is_cayley"] = answer_text(row.is_cayley);
  j["wall_time_ms"] = row.wall_time_ms;
  std::ofstream out(cache_file(dir, row.m, row.n), std::ios::binary);
  if (out) out << j.dump(2) << "\n";
}

}  // namespace

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("C4C8_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  return std::filesystem::path(".c4c8_cache");
}

SurveyRow survey_pair(std::uint32_t m, std::uint32_t n,
                      const SurveyOptions& options) {
  if (m == 0 || n == 0)
    throw std::invalid_argument("survey requires m, n >= 1");
  if (auto cached = load_cached(options.cache_dir, m, n)) return *cached;

  SurveyRow row;
  row.m = m;
  row.n = n;
  row.order = 4u * m * n;
  row.size = 6u * m * n;

  const auto start = std::chrono::steady_clock::now();
  if (m != n && row.order > options.aut_max_order) {
    // Outside the rectangular brute-force reach: honestly inconclusive.
    row.is_cayley = CayleyAnswer::kInconclusive;
  } else {
    try {
      const CayleyVerdict verdict =
          decide_cayley(TorusParams{m, n}, options.budget,
                        options.aut_max_order);
      row.vertex_transitive = verdict.vertex_transitive;
      row.aut_order = verdict.aut_order;
      row.is_cayley = verdict.is_cayley;
    } catch (const BudgetError&) {
      row.is_cayley = CayleyAnswer::kInconclusive;
    }
  }
  row.wall_time_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());

  store_cached(options.cache_dir, row);
  return row;
}

std::vector<SurveyRow> run_survey(std::uint32_t m_lo, std::uint32_t m_hi,
                                  std::uint32_t n_lo, std::uint32_t n_hi,
                                  const SurveyOptions& options) {
  if (m_lo == 0 || n_lo == 0 || m_lo > m_hi || n_lo > n_hi)
    throw std::invalid_argument("survey ranges must be nonempty and >= 1");
  std::vector<SurveyRow> rows;
  rows.reserve(static_cast<std::size_t>(m_hi - m_lo + 1) * (n_hi - n_lo + 1));
  for (std::uint32_t m = m_lo; m <= m_hi; ++m)
    for (std::uint32_t n = n_lo; n <= n_hi; ++n)
      rows.push_back(survey_pair(m, n, options));
  return rows;
}

std::string survey_csv(const std::vector<SurveyRow>& rows) {
  std::string out =
      "m,n,order,size,vertex_transitive,aut_order,is_cayley,wall_time_ms\n";
  for (const auto& row : rows) {
    out += std::to_string(row.m) + "," + std::to_string(row.n) + "," +
           std::to_string(row.order) + "," + std::to_string(row.size) + ",";
    out += row.vertex_transitive ? (*row.vertex_transitive ? "yes" : "no")
                                 : "unknown";
    out += ",";
    out += row.aut_order ? std::to_string(*row.aut_order) : "unknown";
    out += ",";
    out += answer_text(row.is_cayley);
    out += "," + std::to_string(row.wall_time_ms) + "\n";
  }
  return out;
}

}  // namespace c4c8
