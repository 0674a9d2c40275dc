// Acceptance suite. Every criterion is exact-integer; each also has a
// wall-clock limit that counts toward pass/fail. Prints one line per
// criterion and exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hyperqueens/board.hpp"
#include "hyperqueens/domination.hpp"
#include "hyperqueens/independence.hpp"
#include "hyperqueens/report.hpp"
#include "oracles.hpp"

using namespace hyperqueens;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what;
    ok = ok && cond;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Check&)> body;
};

std::string ints(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

void attack_line_formula(Check& c) {
  std::uint64_t pow3 = 1;
  for (int d = 1; d <= 12; ++d) {
    pow3 *= 3;
    c.expect(attack_line_count(d) == (pow3 - 1) / 2, "attack_line_count(" + std::to_string(d) + ")");
  }
  c.expect(attack_line_count(2) == 4, "d=2 gives 4 lines");
  c.expect(enumerate_attack_lines(2).size() == 4, "d=2 enumerates 4 lines");
}

void vector_model(Check& c) {
  std::uint64_t pow3 = 1;
  for (int d = 1; d <= 6; ++d) {
    pow3 *= 3;
    const auto vs = enumerate_attack_vectors(d);
    c.expect(vs.size() == pow3 - 1, "3^d - 1 vectors for d=" + std::to_string(d));
    const std::set<AttackVector> all(vs.begin(), vs.end());
    c.expect(all.size() == vs.size(), "distinct vectors");
    for (const auto& v : vs) c.expect(all.count(-v) == 1, "negation closed");
  }
}

void ray_predicate_equivalence(Check& c) {
  for (auto [n, d] : {std::pair{5, 2}, std::pair{6, 2}, std::pair{4, 3}, std::pair{3, 4}}) {
    const BoardSpec board(d, n);
    for (CellIndex i = 0; i < board.cell_count(); ++i) {
      const auto walked = attacked_cells(board, i);
      c.expect(walked == oracle::scan_attacked(i, n, d),
               "cell " + std::to_string(i) + " of (" + std::to_string(n) + "," + std::to_string(d) + ")");
    }
  }
}

void reach_caps(Check& c) {
  for (auto [n, d] : {std::pair{8, 2}, std::pair{8, 3}, std::pair{4, 4}}) {
    const BoardSpec board(d, n);
    const auto lines = enumerate_attack_lines(d);
    const std::uint64_t total_cap = static_cast<std::uint64_t>(n) * (oracle::ipow(3, d) - 1) / 2;
    for (CellIndex i = 0; i < board.cell_count(); ++i) {
      const Position q = decode(board, i);
      for (const auto& line : lines) {
        const int occupied = ray(board, q, line.canonical()).length + ray(board, q, -line.canonical()).length + 1;
        c.expect(occupied <= n, "per-line occupancy");
      }
      c.expect(attacked_set(board, q).size() + 1 <= total_cap, "total reach");
    }
  }
}

void size_three_domination(Check& c) {
  for (int d = 1; d <= 4; ++d) {
    const BoardSpec board(d, 3);
    const auto r = min_dominating(board);
    c.expect(r.status == SolveStatus::optimal && r.gamma == 1u, "gamma = 1 for d=" + std::to_string(d));
    const Placement center(board, {Position(std::vector<int>(static_cast<std::size_t>(d), 1))});
    c.expect(is_dominating(center), "center dominates for d=" + std::to_string(d));
  }
}

void exact_gamma_vs_brute_force(Check& c) {
  std::vector<std::uint64_t> gammas;
  for (int n = 1; n <= 6; ++n) {
    const auto r = min_dominating(BoardSpec(2, n));
    const auto brute = static_cast<std::uint64_t>(oracle::brute_gamma(n, 2));
    c.expect(r.status == SolveStatus::optimal && r.gamma == brute, "gamma for n=" + std::to_string(n));
    c.expect(domination_lower_bound(static_cast<std::uint64_t>(n), 2) <= brute, "lb <= gamma");
    gammas.push_back(r.gamma.value_or(0));
  }
  c.note << (c.ok ? "gammas " + ints(gammas) : "");
}

void corollary_thresholds(Check& c) {
  c.expect(min_insufficient_n(3, 1) == 14, "min_insufficient_n(3,1) = 14");
  c.expect(min_insufficient_n(4, 1) == 7, "min_insufficient_n(4,1) = 7");
  c.expect(min_insufficient_n(4, 2) == 41, "min_insufficient_n(4,2) = 41");
  for (int d = 2; d <= 6; ++d) {
    for (int k = 0; k <= d - 1; ++k) {
      for (std::uint64_t n = 1; n <= 60; ++n) {
        if (insufficiency_check({n, d, k})) {
          c.expect(domination_lower_bound(n, d) > oracle::ipow(n, k), "lb > n^k on a flagged instance");
        }
      }
    }
  }
}

void independence_existence(Check& c) {
  std::vector<std::tuple<int, int, int>> cases;
  for (int n = 4; n <= 8; ++n) cases.emplace_back(n, 2, n);
  cases.emplace_back(4, 3, 4);
  cases.emplace_back(5, 3, 5);
  for (auto [n, d, m] : cases) {
    const auto w = exists_independent({BoardSpec(d, n), static_cast<std::uint64_t>(m)});
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(m) + ")";
    c.expect(w.has_value(), "witness for " + tag);
    if (w) c.expect(w->size() == static_cast<std::size_t>(m) && is_independent(*w), "valid witness for " + tag);
  }
}

void enumeration_oracle(Check& c) {
  const auto c4 = count_independent({BoardSpec(2, 4), 4});
  const auto c8 = count_independent({BoardSpec(2, 8), 8});
  c.expect(c4 == 2 && oracle::count_independent_sets(4, 2, 4) == 2, "4x4 count = 2");
  c.expect(c8 == 92 && oracle::nqueens_rows(8) == 92, "8x8 count = 92");
}

void upper_bound_audit(Check& c) {
  const auto rows = audit({1, 8}, {2, 2});
  c.expect(rows.size() == 8, "eight rows");
  std::vector<std::uint64_t> violations;
  for (const auto& r : rows) {
    c.expect(r.status == "optimal", "row n=" + std::to_string(r.n) + " solved");
    c.expect(r.lb_le_gamma() == true, "lb <= gamma at n=" + std::to_string(r.n));
    c.expect(r.gamma_le_reported_ub().has_value(), "verdict present at n=" + std::to_string(r.n));
    if (r.gamma_le_reported_ub() == false) violations.push_back(r.n);
  }
  const auto text = render(rows, Format::text);
  c.expect(text.find(std::to_string(violations.size()) + " instance(s) exceed") != std::string::npos,
           "report flags violations");
  if (c.ok) c.note << "reported bound exceeded at n=" << (violations.empty() ? "none" : ints(violations));
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "attack-line formula (3^d-1)/2, d=1..12", 1, attack_line_formula},
      {2, "attack vectors: 3^d-1, negation-closed, d=1..6", 1, vector_model},
      {3, "ray walk equals pairwise-scan oracle", 10, ray_predicate_equivalence},
      {4, "per-line and total reach caps", 30, reach_caps},
      {5, "n=3 boards dominated by one queen, d=1..4", 10, size_three_domination},
      {6, "exact gamma equals brute force, d=2, n=1..6", 60, exact_gamma_vs_brute_force},
      {7, "insufficiency thresholds 14, 7, 41 and lb > n^k", 1, corollary_thresholds},
      {8, "independent placements exist", 30, independence_existence},
      {9, "independent counts 2 and 92", 60, enumeration_oracle},
      {10, "audit of the reported upper bound, d=2, n=1..8", 600, upper_bound_audit},
  };

  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < crit.limit_seconds;
    const bool pass = check.ok && in_time;
    failed += pass ? 0 : 1;
    std::printf("[%s] %2d. %s (%.3fs, limit %.0fs)%s%s\n", pass ? "PASS" : "FAIL", crit.id, crit.name.c_str(),
                secs, crit.limit_seconds, check.note.str().empty() ? "" : " - ", check.note.str().c_str());
    if (!in_time) std::printf("       over the time limit\n");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
