#pragma once

// Report rows and their JSON / CSV / text renderings. JSON objects keep the
// field order shown in each to_json; every rendering ends with a newline.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hyperqueens/board.hpp"
#include "hyperqueens/domination.hpp"
#include "hyperqueens/independence.hpp"

namespace hyperqueens {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, text };

Format parse_format(std::string_view name);

// Inclusive integer range, written "A..B" or a single "A".
struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};
Range parse_range(std::string_view text);

Json position_json(const Position& p);
Json placement_json(const Placement& p);

Json to_json(const DominationResult& r);
std::string render(const DominationResult& r, Format format);

enum class IndependenceMode { exists, count };

struct IndependenceReport {
  BoardSpec board;
  std::uint64_t m = 0;
  IndependenceMode mode = IndependenceMode::exists;
  std::optional<Placement> witness;
  // Set in count mode only.
  std::optional<BigCount> count;
};

IndependenceReport run_independence(const IndependenceQuery& q, IndependenceMode mode);
Json to_json(const IndependenceReport& r);
std::string render(const IndependenceReport& r, Format format);

struct LineRow {
  int d = 0;
  std::optional<std::uint64_t> vectors;
  std::optional<std::uint64_t> lines;
};
std::vector<LineRow> line_table(Range dims);
std::string render(const std::vector<LineRow>& rows, Format format);

// Overflowing values are left empty and the row is flagged.
struct BoundRow {
  std::uint64_t n = 0;
  int d = 0;
  std::optional<std::uint64_t> lb;
  std::optional<std::uint64_t> reported_ub;
  std::optional<std::uint64_t> lines;
  bool overflow() const { return !lb || !reported_ub || !lines; }
};
std::vector<BoundRow> bound_table(Range sizes, Range dims);
std::string render(const std::vector<BoundRow>& rows, Format format);

struct AuditRow {
  std::uint64_t n = 0;
  int d = 0;
  // "optimal", "bounds-only", or "skipped" when the board exceeds a cap.
  std::string status;
  std::optional<std::uint64_t> lb;
  std::optional<std::uint64_t> gamma;
  std::optional<std::uint64_t> reported_ub;
  std::optional<std::uint64_t> solver_lb;
  std::optional<std::uint64_t> solver_ub;
  std::uint64_t nodes = 0;

  std::optional<bool> lb_le_gamma() const;
  std::optional<bool> gamma_le_reported_ub() const;
};

struct AuditOptions {
  std::optional<std::uint64_t> node_budget;
  std::uint64_t max_cells = kDefaultMaxCells;
};

// Rows sorted by (d, n). The node budget applies to each instance separately.
std::vector<AuditRow> audit(Range sizes, Range dims, const AuditOptions& options = {});
std::string render(const std::vector<AuditRow>& rows, Format format);

}  // namespace hyperqueens
