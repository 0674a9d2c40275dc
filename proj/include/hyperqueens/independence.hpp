#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperqueens/board.hpp"
#include "hyperqueens/domination.hpp"

namespace hyperqueens {

using BigCount = boost::multiprecision::cpp_int;

struct IndependenceQuery {
  // InvalidArgument when m > n^d.
  IndependenceQuery(BoardSpec board, std::uint64_t m);

  BoardSpec board;
  std::uint64_t m;
};

bool is_independent(const Placement& placement);

// The lexicographically least (by ascending cell-index sequence) set of m
// pairwise non-attacking queens, or nullopt when none exists.
std::optional<Placement> exists_independent(const IndependenceQuery& query);

// Number of m-element cell sets with no two cells attacking each other.
// Sets, not ordered tuples: each set is generated once, in ascending order.
BigCount count_independent(const IndependenceQuery& query);

}  // namespace hyperqueens
