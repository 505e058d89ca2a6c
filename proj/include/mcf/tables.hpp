#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mcf::tables {

using SizeCounts = std::map<int, std::int64_t>;

struct SpectrumRow {
  int q = 0;
  int smallest_size = 0;  // smallest (1,1)-saturating set
  std::int64_t smallest_count = 0;
  int trivial_lower = 0;  // ceil(2 sqrt q)
  int largest_size = 0;  // q + 3
  SizeCounts counts;  // minimal (1,2)-saturating sets
};

struct OptimalEntry {
  int q = 0;
  int n = 0;
  std::int64_t mu = 0;
  std::int64_t count = 0;
};

struct MinimalRow {
  int q = 0;
  std::int64_t mu = 0;
  SizeCounts counts;
};

struct ThreeWeightsRow {
  int q = 0;
  std::array<int, 3> w{};
  std::int64_t n = 0;
  std::int64_t mu = 0;
  std::string gamma;  // 4 decimals
  std::int64_t c = 0;
};

// names accepted by --which
std::vector<std::string> table_names();
// embedded data file text; throws std::invalid_argument for unknown names
std::string_view raw(const std::string& which);

std::vector<SpectrumRow> spectrum12();
std::vector<OptimalEntry> optimal();
std::vector<MinimalRow> minimal();
std::vector<ThreeWeightsRow> three_weights();

// q values that are recomputed by default
std::vector<int> default_qs(const std::string& which);
// q values present in the embedded table
std::vector<int> listed_qs(const std::string& which);

struct TableCheck {
  std::string which;
  std::vector<int> qs;
  std::string expected;
  std::string computed;
  std::string diff;  // empty when equal
  bool equal() const { return diff.empty(); }
};

// Recomputes the rows for qs and compares them with the embedded rows in a
// normalized one-line-per-row rendering. Weight vectors of the three-weights
// table are compared by their rotation/reflection class.
TableCheck check_table(const std::string& which, const std::vector<int>& qs);

std::string expected_text(const std::string& which, const std::vector<int>& qs);
std::string computed_text(const std::string& which, const std::vector<int>& qs);

// line diff with ' ', '-', '+' prefixes; empty when the texts are equal
std::string unified_diff(const std::string& a, const std::string& b, const std::string& label_a,
                         const std::string& label_b);

}  // namespace mcf::tables
