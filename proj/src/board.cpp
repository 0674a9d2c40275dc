#include "hyperqueens/board.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>

#include "hyperqueens/arith.hpp"
#include "hyperqueens/errors.hpp"

namespace hyperqueens {

namespace {

void require_dimension(int dimension) {
  if (dimension < 1) {
    throw InvalidArgument("dimension must be at least 1, got " + std::to_string(dimension));
  }
}

// Walks every direction with room to move from `origin`, calling
// visit(offset, length) once per attack vector whose ray is non-empty.
// Directions that would leave the board immediately are never expanded, so
// corner cells on boards with n = 2 cost 2^d rather than 3^d.
template <typename Visit>
void for_each_open_direction(const BoardSpec& board, const Position& origin, Visit&& visit) {
  const int d = board.dimension();
  const int n = board.size();
  std::vector<std::int64_t> stride(static_cast<std::size_t>(d));
  std::int64_t s = 1;
  for (int k = 0; k < d; ++k) {
    stride[static_cast<std::size_t>(k)] = s;
    s *= n;
  }
  constexpr int kUnbounded = std::numeric_limits<int>::max();

  auto rec = [&](auto&& self, int k, std::int64_t offset, int room) -> void {
    if (k == d) {
      if (room != kUnbounded) visit(offset, room);
      return;
    }
    const std::int64_t st = stride[static_cast<std::size_t>(k)];
    const int q = origin[k];
    if (q > 0) self(self, k + 1, offset - st, std::min(room, q));
    self(self, k + 1, offset, room);
    if (q < n - 1) self(self, k + 1, offset + st, std::min(room, n - 1 - q));
  };
  rec(rec, 0, 0, kUnbounded);
}

}  // namespace

AttackVector::AttackVector(std::vector<int> deltas) : deltas_(std::move(deltas)) {
  require_dimension(static_cast<int>(deltas_.size()));
  bool nonzero = false;
  for (int v : deltas_) {
    if (v < -1 || v > 1) throw InvalidArgument("attack vector components must be -1, 0 or +1");
    nonzero = nonzero || v != 0;
  }
  if (!nonzero) throw InvalidArgument("the zero vector is not an attack vector");
}

AttackVector AttackVector::operator-() const {
  std::vector<int> neg(deltas_.size());
  std::transform(deltas_.begin(), deltas_.end(), neg.begin(), [](int v) { return -v; });
  return AttackVector(std::move(neg));
}

AttackLine::AttackLine(const AttackVector& v) : canonical_(v) {
  auto first = std::find_if(v.deltas().begin(), v.deltas().end(), [](int x) { return x != 0; });
  if (*first < 0) canonical_ = -v;
}

BoardSpec::BoardSpec(int dimension, int size, std::uint64_t max_cells)
    : dimension_(dimension), size_(size) {
  require_dimension(dimension);
  if (size < 1) throw InvalidArgument("board size must be at least 1, got " + std::to_string(size));
  cell_count_ = arith::pow(static_cast<std::uint64_t>(size), static_cast<unsigned>(dimension),
                           "cell count n^d");
  if (cell_count_ > max_cells) {
    throw ResourceCapError("board has " + std::to_string(cell_count_) + " cells, cap is " +
                           std::to_string(max_cells));
  }
}

bool BoardSpec::contains(const Position& p) const {
  if (p.dimension() != dimension_) return false;
  return std::all_of(p.coords().begin(), p.coords().end(),
                     [this](int c) { return c >= 0 && c < size_; });
}

void BoardSpec::require(const Position& p) const {
  if (p.dimension() != dimension_) {
    throw InvalidArgument("position has " + std::to_string(p.dimension()) +
                          " coordinates, board dimension is " + std::to_string(dimension_));
  }
  if (!contains(p)) {
    throw InvalidArgument("position " + format_position(p) + " is off a board of size " +
                          std::to_string(size_));
  }
}

Position Ray::at(int s) const {
  std::vector<int> c = origin.coords();
  for (int k = 0; k < origin.dimension(); ++k) c[static_cast<std::size_t>(k)] += s * direction[k];
  return Position(std::move(c));
}

std::vector<Position> Ray::cells() const {
  std::vector<Position> out;
  out.reserve(static_cast<std::size_t>(length));
  for (int s = 1; s <= length; ++s) out.push_back(at(s));
  return out;
}

std::vector<AttackVector> enumerate_attack_vectors(int dimension) {
  require_dimension(dimension);
  const std::uint64_t count = arith::pow(3, static_cast<unsigned>(dimension), "3^d") - 1;
  std::vector<AttackVector> out;
  out.reserve(count);
  // Odometer over {-1,0,+1}^d with the last coordinate varying fastest.
  std::vector<int> deltas(static_cast<std::size_t>(dimension), -1);
  for (;;) {
    if (std::any_of(deltas.begin(), deltas.end(), [](int v) { return v != 0; })) {
      out.emplace_back(deltas);
    }
    int k = dimension - 1;
    while (k >= 0 && deltas[static_cast<std::size_t>(k)] == 1) {
      deltas[static_cast<std::size_t>(k)] = -1;
      --k;
    }
    if (k < 0) break;
    ++deltas[static_cast<std::size_t>(k)];
  }
  return out;
}

std::vector<AttackLine> enumerate_attack_lines(int dimension) {
  std::vector<AttackLine> out;
  for (const auto& v : enumerate_attack_vectors(dimension)) {
    AttackLine line(v);
    if (line.canonical() == v) out.push_back(line);
  }
  return out;
}

std::uint64_t attack_line_count(int dimension) {
  require_dimension(dimension);
  return (arith::pow(3, static_cast<unsigned>(dimension), "3^d") - 1) / 2;
}

Ray ray(const BoardSpec& board, const Position& origin, const AttackVector& direction) {
  board.require(origin);
  if (direction.dimension() != board.dimension()) {
    throw InvalidArgument("attack vector dimension does not match the board");
  }
  const int n = board.size();
  int length = n - 1;
  for (int k = 0; k < board.dimension(); ++k) {
    if (direction[k] > 0) length = std::min(length, n - 1 - origin[k]);
    if (direction[k] < 0) length = std::min(length, origin[k]);
  }
  return Ray{origin, direction, length};
}

bool attacks(const BoardSpec& board, const Position& p, const Position& q) {
  board.require(p);
  board.require(q);
  int magnitude = 0;
  for (int k = 0; k < board.dimension(); ++k) {
    const int diff = std::abs(q[k] - p[k]);
    if (diff == 0) continue;
    if (magnitude != 0 && diff != magnitude) return false;
    magnitude = diff;
  }
  return magnitude != 0;
}

std::vector<CellIndex> attacked_cells(const BoardSpec& board, CellIndex q) {
  const Position origin = decode(board, q);
  std::vector<CellIndex> out;
  for_each_open_direction(board, origin, [&](std::int64_t offset, int length) {
    auto cell = static_cast<std::int64_t>(q);
    for (int s = 1; s <= length; ++s) {
      cell += offset;
      out.push_back(static_cast<CellIndex>(cell));
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Position> attacked_set(const BoardSpec& board, const Position& q) {
  std::vector<Position> out;
  for (CellIndex c : attacked_cells(board, encode(board, q))) out.push_back(decode(board, c));
  return out;
}

CellIndex encode(const BoardSpec& board, const Position& p) {
  board.require(p);
  CellIndex index = 0;
  for (int k = board.dimension() - 1; k >= 0; --k) {
    index = index * static_cast<CellIndex>(board.size()) + static_cast<CellIndex>(p[k]);
  }
  return index;
}

Position decode(const BoardSpec& board, CellIndex index) {
  if (index >= board.cell_count()) {
    throw InvalidArgument("cell index " + std::to_string(index) + " out of range [0, " +
                          std::to_string(board.cell_count()) + ")");
  }
  std::vector<int> coords(static_cast<std::size_t>(board.dimension()));
  const auto n = static_cast<CellIndex>(board.size());
  for (auto& c : coords) {
    c = static_cast<int>(index % n);
    index /= n;
  }
  return Position(std::move(coords));
}

Position parse_position(std::string_view text) {
  std::vector<int> coords;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string_view field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || value < 0) {
      throw InvalidArgument("bad position \"" + std::string(text) +
                            "\": expected comma-separated non-negative integers");
    }
    coords.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Position(std::move(coords));
}

std::string format_position(const Position& p) {
  std::string out;
  for (int k = 0; k < p.dimension(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(p[k]);
  }
  return out;
}

}  // namespace hyperqueens
