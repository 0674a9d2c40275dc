#include "hyperqueens/cover_table.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hyperqueens/errors.hpp"

namespace hyperqueens {

CoverTable::CoverTable(const BoardSpec& board, std::uint64_t max_entries) : board_(board) {
  const std::uint64_t n = board.cell_count();
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw ResourceCapError("cover table supports at most 2^32 - 1 cells");
  }
  offsets_.reserve(n + 1);
  offsets_.push_back(0);
  for (CellIndex c = 0; c < n; ++c) {
    auto attacked = attacked_cells(board, c);
    if (cells_.size() + attacked.size() + 1 > max_entries) {
      throw ResourceCapError("cover table for this board exceeds " + std::to_string(max_entries) +
                             " entries");
    }
    auto at = std::lower_bound(attacked.begin(), attacked.end(), c);
    attacked.insert(at, c);
    for (CellIndex a : attacked) cells_.push_back(static_cast<std::uint32_t>(a));
    offsets_.push_back(cells_.size());
    max_cover_ = std::max(max_cover_, static_cast<std::uint32_t>(attacked.size()));
  }
}

}  // namespace hyperqueens
