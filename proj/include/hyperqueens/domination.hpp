#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "hyperqueens/board.hpp"

namespace hyperqueens {

// A set of queens on a board, kept sorted by cell index without duplicates.
class Placement {
 public:
  explicit Placement(BoardSpec board) : board_(std::move(board)) {}
  // Throws InvalidArgument for off-board queens. Duplicates collapse.
  Placement(BoardSpec board, const std::vector<Position>& queens);

  static Placement from_cells(BoardSpec board, const std::vector<CellIndex>& cells);

  const BoardSpec& board() const { return board_; }
  const std::vector<Position>& queens() const { return queens_; }
  std::vector<CellIndex> cells() const;
  std::size_t size() const { return queens_.size(); }
  bool empty() const { return queens_.empty(); }

  Placement with(const Position& q) const;
  Placement without(const Position& q) const;

 private:
  BoardSpec board_;
  std::vector<Position> queens_;
};

// Bit i is set iff cell i is occupied or attacked by the generating placement.
class CoverageMask {
 public:
  explicit CoverageMask(const BoardSpec& board) : board_(board), bits_(board.cell_count()) {}

  const BoardSpec& board() const { return board_; }
  const boost::dynamic_bitset<>& bits() const { return bits_; }
  bool test(CellIndex i) const { return bits_.test(i); }
  std::uint64_t count() const { return bits_.count(); }
  bool all() const { return bits_.all(); }

  void set(CellIndex i) { bits_.set(i); }

 private:
  BoardSpec board_;
  boost::dynamic_bitset<> bits_;
};

CoverageMask coverage(const Placement& placement);
bool is_dominating(const Placement& placement);

// ceil(2 n^(d-1) / (3^d - 1)), at least 1. OverflowError if n^(d-1) or 3^d
// does not fit in 64 bits.
std::uint64_t domination_lower_bound(std::uint64_t n, int d);

// ceil(n^(d-1) / d). This is the value asserted in the literature as a
// trivial upper bound on the domination number. It is not proven here and is
// never used to prune; the audit command compares it with exact results.
std::uint64_t reported_upper_bound(std::uint64_t n, int d);

// n(3^d - 1)/2: the most cells one queen can cover, its own cell included,
// counting n cells on each of the (3^d - 1)/2 lines through it.
std::uint64_t queen_reach_cap(std::uint64_t n, int d);

struct InsufficiencyQuery {
  std::uint64_t n = 0;
  int d = 0;
  int k = 0;
};

// True iff 2 n^(d-k-1) > 3^d - 1, in which case n^k queens cannot dominate
// the board. InvalidArgument for k >= d or k < 0.
bool insufficiency_check(const InsufficiencyQuery& q);

// Smallest n for which insufficiency_check(n, d, k) holds. Requires
// 0 <= k <= d - 2.
std::uint64_t min_insufficient_n(int d, int k);

// Greedy cover: repeatedly place the queen that covers the most uncovered
// cells, lowest index on ties.
Placement greedy_dominating(const BoardSpec& board);

enum class SolveStatus { optimal, bounds_only };

struct DominationResult {
  BoardSpec board;
  // Set only when status is optimal.
  std::optional<std::uint64_t> gamma;
  // Optimal witness, or the best known dominating placement otherwise.
  Placement witness;
  SolveStatus status = SolveStatus::bounds_only;
  std::uint64_t lb = 0;
  std::uint64_t ub = 0;
  std::uint64_t nodes_explored = 0;
};

struct DominationOptions {
  // Branching-node expansions allowed across all depths; empty = unlimited.
  std::optional<std::uint64_t> node_budget;
  // Reject a node when uncovered > remaining * queen_reach_cap(n, d).
  bool reach_prune = true;
  // Reject a node when the `remaining` largest counts of still-uncovered
  // cells that single allowed queens would cover sum to less than the
  // uncovered total.
  bool gain_prune = true;
  // Start iterative deepening at domination_lower_bound rather than 1.
  bool start_at_lower_bound = true;
};

// Exact minimum dominating set of queens by iterative deepening on the queen
// count. Each depth is a depth-first search that picks the lowest-index
// uncovered cell and branches over every cell covering it, in ascending
// order. The first depth with a solution is optimal.
DominationResult min_dominating(const BoardSpec& board, const DominationOptions& options = {});

}  // namespace hyperqueens
