#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperqueens/board.hpp"

namespace hyperqueens {

// For every cell c, the sorted list of cells a queen on c covers: c itself
// plus attacked_cells(c). The relation is symmetric, so the same list is
// also every cell that covers c. Stored flat (offsets + indices).
class CoverTable {
 public:
  static constexpr std::uint64_t kDefaultMaxEntries = std::uint64_t{1} << 26;

  // ResourceCapError if the flattened table would exceed max_entries.
  explicit CoverTable(const BoardSpec& board, std::uint64_t max_entries = kDefaultMaxEntries);

  const BoardSpec& board() const { return board_; }
  std::uint32_t cell_count() const { return static_cast<std::uint32_t>(offsets_.size() - 1); }
  std::span<const std::uint32_t> covers(std::uint32_t cell) const {
    return {cells_.data() + offsets_[cell], cells_.data() + offsets_[cell + 1]};
  }
  std::uint32_t max_cover_size() const { return max_cover_; }

 private:
  BoardSpec board_;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> cells_;
  std::uint32_t max_cover_ = 0;
};

}  // namespace hyperqueens
