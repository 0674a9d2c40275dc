#include "hyperqueens/domination.hpp"

#include <algorithm>
#include <limits>

#include "hyperqueens/arith.hpp"
#include "hyperqueens/cover_table.hpp"
#include "hyperqueens/errors.hpp"

namespace hyperqueens {

Placement::Placement(BoardSpec board, const std::vector<Position>& queens) : board_(std::move(board)) {
  std::vector<CellIndex> cells;
  cells.reserve(queens.size());
  for (const auto& q : queens) cells.push_back(encode(board_, q));
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  for (CellIndex c : cells) queens_.push_back(decode(board_, c));
}

Placement Placement::from_cells(BoardSpec board, const std::vector<CellIndex>& cells) {
  std::vector<Position> queens;
  queens.reserve(cells.size());
  for (CellIndex c : cells) queens.push_back(decode(board, c));
  return Placement(std::move(board), queens);
}

std::vector<CellIndex> Placement::cells() const {
  std::vector<CellIndex> out;
  out.reserve(queens_.size());
  for (const auto& q : queens_) out.push_back(encode(board_, q));
  return out;
}

Placement Placement::with(const Position& q) const {
  auto queens = queens_;
  queens.push_back(q);
  return Placement(board_, queens);
}

Placement Placement::without(const Position& q) const {
  auto queens = queens_;
  std::erase(queens, q);
  return Placement(board_, queens);
}

CoverageMask coverage(const Placement& placement) {
  CoverageMask mask(placement.board());
  for (CellIndex q : placement.cells()) {
    mask.set(q);
    for (CellIndex a : attacked_cells(placement.board(), q)) mask.set(a);
  }
  return mask;
}

bool is_dominating(const Placement& placement) { return coverage(placement).all(); }

namespace {

void require_bound_args(std::uint64_t n, int d) {
  if (n < 1) throw InvalidArgument("board size must be at least 1");
  if (d < 1) throw InvalidArgument("dimension must be at least 1");
}

// 3^d - 1, the number of attack vectors.
std::uint64_t vector_count(int d) { return arith::pow(3, static_cast<unsigned>(d), "3^d") - 1; }

// 2 n^e > rhs, without overflow.
bool twice_power_exceeds(std::uint64_t n, int e, std::uint64_t rhs) {
  return arith::pow_saturating(n, static_cast<unsigned>(e), rhs) > rhs / 2;
}

}  // namespace

std::uint64_t domination_lower_bound(std::uint64_t n, int d) {
  require_bound_args(n, d);
  const std::uint64_t num =
      arith::mul(2, arith::pow(n, static_cast<unsigned>(d - 1), "n^(d-1)"), "2 n^(d-1)");
  return std::max<std::uint64_t>(1, arith::ceil_div(num, vector_count(d)));
}

std::uint64_t reported_upper_bound(std::uint64_t n, int d) {
  require_bound_args(n, d);
  return std::max<std::uint64_t>(
      1, arith::ceil_div(arith::pow(n, static_cast<unsigned>(d - 1), "n^(d-1)"),
                         static_cast<std::uint64_t>(d)));
}

std::uint64_t queen_reach_cap(std::uint64_t n, int d) {
  require_bound_args(n, d);
  return arith::mul(n, vector_count(d) / 2, "n (3^d - 1)/2");
}

bool insufficiency_check(const InsufficiencyQuery& q) {
  require_bound_args(q.n, q.d);
  if (q.k < 0 || q.k >= q.d) {
    throw InvalidArgument("exponent k must satisfy 0 <= k <= d - 1");
  }
  return twice_power_exceeds(q.n, q.d - q.k - 1, vector_count(q.d));
}

std::uint64_t min_insufficient_n(int d, int k) {
  if (d < 1) throw InvalidArgument("dimension must be at least 1");
  if (k < 0 || k > d - 2) {
    throw InvalidArgument("no finite size threshold unless 0 <= k <= d - 2");
  }
  const int e = d - k - 1;
  const std::uint64_t rhs = vector_count(d);
  // 2n > rhs already holds at n = rhs/2 + 1, and n^e >= n.
  std::uint64_t lo = 1, hi = rhs / 2 + 1;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (twice_power_exceeds(mid, e, rhs)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

namespace {

Placement greedy_from_table(const CoverTable& table) {
  const std::uint32_t cells = table.cell_count();
  std::vector<char> covered(cells, 0);
  std::vector<std::uint32_t> gain(cells);
  for (std::uint32_t c = 0; c < cells; ++c) gain[c] = static_cast<std::uint32_t>(table.covers(c).size());

  std::vector<CellIndex> chosen;
  std::uint64_t uncovered = cells;
  while (uncovered > 0) {
    std::uint32_t best = 0;
    for (std::uint32_t c = 1; c < cells; ++c) {
      if (gain[c] > gain[best]) best = c;
    }
    chosen.push_back(best);
    for (std::uint32_t x : table.covers(best)) {
      if (covered[x]) continue;
      covered[x] = 1;
      --uncovered;
      for (std::uint32_t c : table.covers(x)) --gain[c];
    }
  }
  return Placement::from_cells(table.board(), chosen);
}

}  // namespace

Placement greedy_dominating(const BoardSpec& board) { return greedy_from_table(CoverTable(board)); }

namespace {

class DominationSearch {
 public:
  DominationSearch(const CoverTable& table, std::uint64_t reach_cap, bool gain_prune,
                   std::optional<std::uint64_t> budget)
      : table_(table), hits_(table.cell_count(), 0),
        excluded_(table.cell_count(), 0), gain_prune_(gain_prune), gain_(table.cell_count()),
        uncovered_(table.cell_count()), reach_cap_(reach_cap), budget_(budget) {
    for (std::uint32_t c = 0; c < table.cell_count(); ++c) {
      gain_[c] = static_cast<std::uint32_t>(table.covers(c).size());
    }
  }

  enum class Outcome { found, exhausted, out_of_budget };

  // Searches for a dominating set of at most `queens` queens.
  Outcome run(int queens) {
    chosen_.clear();
    aborted_ = false;
    const bool found = descend(queens, 0);
    if (found) return Outcome::found;
    return aborted_ ? Outcome::out_of_budget : Outcome::exhausted;
  }

  const std::vector<CellIndex>& chosen() const { return chosen_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void place(std::uint32_t c) {
    for (std::uint32_t x : table_.covers(c)) {
      if (hits_[x]++ != 0) continue;
      --uncovered_;
      if (gain_prune_) {
        for (std::uint32_t y : table_.covers(x)) --gain_[y];
      }
    }
    chosen_.push_back(c);
  }

  void unplace(std::uint32_t c) {
    for (std::uint32_t x : table_.covers(c)) {
      if (--hits_[x] != 0) continue;
      ++uncovered_;
      if (gain_prune_) {
        for (std::uint32_t y : table_.covers(x)) ++gain_[y];
      }
    }
    chosen_.pop_back();
  }

  // The `remaining` largest gains among cells still allowed in this subtree
  // must add up to the uncovered count.
  bool gains_can_cover(int remaining) {
    scratch_.clear();
    for (std::uint32_t c = 0; c < gain_.size(); ++c) {
      if (!excluded_[c] && gain_[c] != 0) scratch_.push_back(gain_[c]);
    }
    const auto r = std::min(scratch_.size(), static_cast<std::size_t>(remaining));
    std::nth_element(scratch_.begin(), scratch_.begin() + static_cast<std::ptrdiff_t>(r), scratch_.end(),
                     std::greater<>());
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < r; ++i) sum += scratch_[i];
    return sum >= uncovered_;
  }

  // Every cell below scan_from is covered on entry.
  bool descend(int remaining, std::uint32_t scan_from) {
    if (uncovered_ == 0) return true;
    if (remaining == 0) return false;
    if (reach_cap_ != 0 && uncovered_ > static_cast<std::uint64_t>(remaining) * reach_cap_) {
      return false;
    }
    if (gain_prune_ && !gains_can_cover(remaining)) return false;
    if (budget_ && nodes_ >= *budget_) {
      aborted_ = true;
      return false;
    }
    ++nodes_;

    std::uint32_t target = scan_from;
    while (hits_[target] != 0) ++target;

    // A coverer that failed here is barred from the later siblings' subtrees:
    // any solution using it was already explored under its own branch.
    const auto candidates = table_.covers(target);
    std::size_t barred = 0;
    bool found = false;
    for (std::uint32_t c : candidates) {
      if (excluded_[c]) continue;
      place(c);
      found = descend(remaining - 1, target + 1);
      if (found) break;
      unplace(c);
      if (aborted_) break;
      excluded_[c] = 1;
      barred_.push_back(c);
      ++barred;
    }
    for (; barred > 0; --barred) {
      excluded_[barred_.back()] = 0;
      barred_.pop_back();
    }
    return found;
  }

  const CoverTable& table_;
  std::vector<std::uint32_t> hits_;
  std::vector<char> excluded_;
  std::vector<std::uint32_t> barred_;
  bool gain_prune_;
  // Uncovered cells each cell would newly cover.
  std::vector<std::uint32_t> gain_;
  std::vector<std::uint32_t> scratch_;
  std::uint64_t uncovered_;
  std::uint64_t reach_cap_;
  std::optional<std::uint64_t> budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<CellIndex> chosen_;
};

}  // namespace

DominationResult min_dominating(const BoardSpec& board, const DominationOptions& options) {
  const CoverTable table(board);
  const std::uint64_t n = static_cast<std::uint64_t>(board.size());
  const int d = board.dimension();

  // A bound that overflows 64 bits is replaced by its trivial value: start at
  // depth 1, no reach prune.
  std::uint64_t start = 1;
  std::uint64_t reach_cap = 0;
  if (options.start_at_lower_bound) {
    try {
      start = domination_lower_bound(n, d);
    } catch (const OverflowError&) {
    }
  }
  if (options.reach_prune) {
    try {
      reach_cap = queen_reach_cap(n, d);
    } catch (const OverflowError&) {
    }
  }

  Placement greedy = greedy_from_table(table);
  DominationResult result{board, std::nullopt, greedy, SolveStatus::bounds_only, start, greedy.size(), 0};

  DominationSearch search(table, reach_cap, options.gain_prune, options.node_budget);
  for (std::uint64_t m = start; m < greedy.size(); ++m) {
    const auto outcome = search.run(static_cast<int>(m));
    result.nodes_explored = search.nodes();
    if (outcome == DominationSearch::Outcome::found) {
      result.witness = Placement::from_cells(board, search.chosen());
      result.gamma = result.witness.size();
      result.status = SolveStatus::optimal;
      return result;
    }
    if (outcome == DominationSearch::Outcome::out_of_budget) {
      result.lb = m;
      return result;
    }
  }
  // Every depth below the greedy size is exhausted, so greedy is optimal.
  result.gamma = greedy.size();
  result.status = SolveStatus::optimal;
  return result;
}

}  // namespace hyperqueens
