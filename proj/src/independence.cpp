#include "hyperqueens/independence.hpp"

#include <limits>

#include "hyperqueens/cover_table.hpp"
#include "hyperqueens/errors.hpp"

namespace hyperqueens {

IndependenceQuery::IndependenceQuery(BoardSpec board_, std::uint64_t m_)
    : board(std::move(board_)), m(m_) {
  if (m > board.cell_count()) {
    throw InvalidArgument("cannot place " + std::to_string(m) + " queens on " +
                          std::to_string(board.cell_count()) + " cells");
  }
}

bool is_independent(const Placement& placement) {
  const auto& queens = placement.queens();
  for (std::size_t i = 0; i < queens.size(); ++i) {
    for (std::size_t j = i + 1; j < queens.size(); ++j) {
      if (attacks(placement.board(), queens[i], queens[j])) return false;
    }
  }
  return true;
}

namespace {

// Backtracking over ascending cell sequences. A cell is free while no placed
// queen covers it; placing a queen blocks its whole cover list.
class IndependenceSearch {
 public:
  explicit IndependenceSearch(const CoverTable& table)
      : table_(table), blocked_(table.cell_count(), 0) {}

  bool find(std::uint64_t m) {
    chosen_.clear();
    return m == 0 || find_from(0, m);
  }

  BigCount count(std::uint64_t m) {
    total_ = 0;
    pending_ = 0;
    if (m == 0) return 1;
    count_from(0, m);
    flush();
    return total_;
  }

  const std::vector<CellIndex>& chosen() const { return chosen_; }

 private:
  void place(std::uint32_t c) {
    for (std::uint32_t x : table_.covers(c)) ++blocked_[x];
  }
  void unplace(std::uint32_t c) {
    for (std::uint32_t x : table_.covers(c)) --blocked_[x];
  }

  bool find_from(std::uint32_t start, std::uint64_t remaining) {
    const std::uint32_t cells = table_.cell_count();
    for (std::uint32_t c = start; c < cells && cells - c >= remaining; ++c) {
      if (blocked_[c] != 0) continue;
      chosen_.push_back(c);
      if (remaining == 1) return true;
      place(c);
      const bool found = find_from(c + 1, remaining - 1);
      unplace(c);
      if (found) return true;
      chosen_.pop_back();
    }
    return false;
  }

  void count_from(std::uint32_t start, std::uint64_t remaining) {
    const std::uint32_t cells = table_.cell_count();
    if (remaining == 1) {
      std::uint64_t free = 0;
      for (std::uint32_t c = start; c < cells; ++c) free += blocked_[c] == 0 ? 1 : 0;
      add(free);
      return;
    }
    for (std::uint32_t c = start; c < cells && cells - c >= remaining; ++c) {
      if (blocked_[c] != 0) continue;
      place(c);
      count_from(c + 1, remaining - 1);
      unplace(c);
    }
  }

  void add(std::uint64_t v) {
    if (pending_ > std::numeric_limits<std::uint64_t>::max() - v) flush();
    pending_ += v;
  }
  void flush() {
    total_ += pending_;
    pending_ = 0;
  }

  const CoverTable& table_;
  std::vector<std::uint32_t> blocked_;
  std::vector<CellIndex> chosen_;
  BigCount total_;
  std::uint64_t pending_ = 0;
};

}  // namespace

std::optional<Placement> exists_independent(const IndependenceQuery& query) {
  const CoverTable table(query.board);
  IndependenceSearch search(table);
  if (!search.find(query.m)) return std::nullopt;
  return Placement::from_cells(query.board, search.chosen());
}

BigCount count_independent(const IndependenceQuery& query) {
  const CoverTable table(query.board);
  IndependenceSearch search(table);
  return search.count(query.m);
}

}  // namespace hyperqueens
