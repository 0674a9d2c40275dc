#pragma once

// Geometry of the d-dimensional chess space: positions, attack vectors,
// attack lines, rays and the queen attack predicate.
//
// A queen at q attacks every in-board cell q + s*delta with s >= 1 and
// delta in {-1,0,+1}^d \ {0}. Cells are numbered by a mixed-radix index with
// coordinate 1 as the least significant digit; every ordering and
// tie-break in the library refers to that index.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace hyperqueens {

using CellIndex = std::uint64_t;

inline constexpr std::uint64_t kDefaultMaxCells = std::uint64_t{1} << 24;

class Position {
 public:
  Position() = default;
  explicit Position(std::vector<int> coords) : coords_(std::move(coords)) {}
  Position(std::initializer_list<int> coords) : coords_(coords) {}

  int dimension() const { return static_cast<int>(coords_.size()); }
  int operator[](int k) const { return coords_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& coords() const { return coords_; }

  friend auto operator<=>(const Position&, const Position&) = default;

 private:
  std::vector<int> coords_;
};

// A direction in {-1,0,+1}^d other than the zero vector.
class AttackVector {
 public:
  explicit AttackVector(std::vector<int> deltas);
  AttackVector(std::initializer_list<int> deltas) : AttackVector(std::vector<int>(deltas)) {}

  int dimension() const { return static_cast<int>(deltas_.size()); }
  int operator[](int k) const { return deltas_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& deltas() const { return deltas_; }
  AttackVector operator-() const;

  friend auto operator<=>(const AttackVector&, const AttackVector&) = default;

 private:
  std::vector<int> deltas_;
};

// One of the ±v pairs, represented by the member whose lowest-index nonzero
// delta is +1.
class AttackLine {
 public:
  explicit AttackLine(const AttackVector& v);

  const AttackVector& canonical() const { return canonical_; }
  bool contains(const AttackVector& v) const { return v == canonical_ || -v == canonical_; }

  friend auto operator<=>(const AttackLine&, const AttackLine&) = default;

 private:
  AttackVector canonical_;
};

class BoardSpec {
 public:
  // Throws InvalidArgument for d < 1 or n < 1, OverflowError when n^d does
  // not fit in 64 bits, ResourceCapError when n^d > max_cells.
  BoardSpec(int dimension, int size, std::uint64_t max_cells = kDefaultMaxCells);

  int dimension() const { return dimension_; }
  int size() const { return size_; }
  std::uint64_t cell_count() const { return cell_count_; }

  bool contains(const Position& p) const;
  // Throws InvalidArgument unless p has this board's dimension and lies on it.
  void require(const Position& p) const;

  friend bool operator==(const BoardSpec& a, const BoardSpec& b) {
    return a.dimension_ == b.dimension_ && a.size_ == b.size_;
  }

 private:
  int dimension_;
  int size_;
  std::uint64_t cell_count_;
};

// The in-board cells origin + s*direction for s = 1..length.
struct Ray {
  Position origin;
  AttackVector direction;
  int length = 0;

  Position at(int s) const;
  std::vector<Position> cells() const;
};

// All 3^d - 1 attack vectors, lexicographic with -1 < 0 < +1.
std::vector<AttackVector> enumerate_attack_vectors(int dimension);

// The (3^d - 1)/2 canonical line representatives, in the same order as
// their canonical vectors appear in enumerate_attack_vectors.
std::vector<AttackLine> enumerate_attack_lines(int dimension);

// (3^d - 1)/2 in exact arithmetic; OverflowError past 64 bits.
std::uint64_t attack_line_count(int dimension);

Ray ray(const BoardSpec& board, const Position& origin, const AttackVector& direction);

bool attacks(const BoardSpec& board, const Position& p, const Position& q);

// Every cell attacked by a queen on q, excluding q, sorted by cell index.
std::vector<Position> attacked_set(const BoardSpec& board, const Position& q);
std::vector<CellIndex> attacked_cells(const BoardSpec& board, CellIndex q);

CellIndex encode(const BoardSpec& board, const Position& p);
Position decode(const BoardSpec& board, CellIndex index);

// "3,4,0" <-> Position. Whitespace around digits is ignored.
Position parse_position(std::string_view text);
std::string format_position(const Position& p);

}  // namespace hyperqueens
