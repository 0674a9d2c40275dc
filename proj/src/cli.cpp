#include "hyperqueens/cli.hpp"

#include <CLI11.hpp>

#include <limits>
#include <optional>
#include <ostream>

#include "hyperqueens/board.hpp"
#include "hyperqueens/domination.hpp"
#include "hyperqueens/errors.hpp"
#include "hyperqueens/independence.hpp"
#include "hyperqueens/report.hpp"

namespace hyperqueens::cli {

namespace {

struct GlobalFlags {
  std::string format = "text";
  std::uint64_t max_cells = kDefaultMaxCells;
  std::optional<std::uint64_t> node_budget;
};

// --size/--size-range or --dim/--dim-range; the range form wins when both are given.
struct AxisFlags {
  std::optional<std::uint64_t> single;
  std::optional<std::string> range;

  Range resolve(const char* name) const {
    if (range) return parse_range(*range);
    if (single) return Range{*single, *single};
    throw InvalidArgument(std::string("missing --") + name + " or --" + name + "-range");
  }
};

int to_int(std::uint64_t v, const char* what) {
  if (v > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
    throw InvalidArgument(std::string(what) + " is too large");
  }
  return static_cast<int>(v);
}

void add_axis(CLI::App* cmd, AxisFlags& flags, const std::string& name, const std::string& what) {
  cmd->add_option("--" + name, flags.single, what);
  cmd->add_option("--" + name + "-range", flags.range, what + " range A..B (inclusive)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Queens in d-dimensional chess spaces: attack geometry, domination, independence"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags global;
  app.add_option("--format", global.format, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--max-cells", global.max_cells, "Largest board (n^d cells) accepted");
  app.add_option("--node-budget", global.node_budget,
                 "Branching nodes allowed per domination solve (default unlimited)")
      ->check(CLI::PositiveNumber);

  AxisFlags size, dim;
  std::string pos, target;
  std::uint64_t queens = 0;
  bool count_mode = false;
  std::optional<std::uint64_t> k;

  auto* lines = app.add_subcommand("lines", "Attack vector and attack line counts per dimension");
  add_axis(lines, dim, "dim", "Dimension");

  auto* attack = app.add_subcommand("attack", "Cells attacked from a position, or a pairwise test");
  add_axis(attack, size, "size", "Board size");
  add_axis(attack, dim, "dim", "Dimension");
  attack->add_option("--pos", pos, "Queen position, e.g. 3,4,0")->required();
  attack->add_option("--target", target, "Report only whether this position is attacked");

  auto* bound = app.add_subcommand("bound", "Lower bound, reported upper bound and line count table");
  add_axis(bound, size, "size", "Board size");
  add_axis(bound, dim, "dim", "Dimension");

  auto* dominate = app.add_subcommand("dominate", "Exact minimum number of dominating queens");
  add_axis(dominate, size, "size", "Board size");
  add_axis(dominate, dim, "dim", "Dimension");

  auto* independent = app.add_subcommand("independent", "Find or count non-attacking placements");
  add_axis(independent, size, "size", "Board size");
  add_axis(independent, dim, "dim", "Dimension");
  independent->add_option("--queens", queens, "Number of queens m")->required();
  independent->add_flag("--count", count_mode, "Count all placements instead of finding one");

  auto* insufficiency = app.add_subcommand(
      "insufficiency", "Whether n^k queens provably cannot dominate, or the smallest such n");
  add_axis(insufficiency, size, "size", "Board size (omit for the threshold)");
  add_axis(insufficiency, dim, "dim", "Dimension");
  insufficiency->add_option("--k", k, "Exponent k")->required();

  auto* audit_cmd = app.add_subcommand("audit", "Compare exact domination numbers with both bounds");
  add_axis(audit_cmd, size, "size", "Board size");
  add_axis(audit_cmd, dim, "dim", "Dimension");

  std::vector<std::string> argv_storage{"hyperqueens"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArgument;
  }

  try {
    const Format format = parse_format(global.format);

    if (lines->parsed()) {
      out << render(line_table(dim.resolve("dim")), format);
      return kOk;
    }

    if (bound->parsed()) {
      out << render(bound_table(size.resolve("size"), dim.resolve("dim")), format);
      return kOk;
    }

    if (insufficiency->parsed()) {
      const Range d = dim.resolve("dim");
      if (d.lo != d.hi) throw InvalidArgument("insufficiency takes a single --dim");
      const int dd = to_int(d.lo, "dimension");
      const int kk = to_int(*k, "k");
      if (!size.single && !size.range) {
        const std::uint64_t n = min_insufficient_n(dd, kk);
        Json j;
        j["d"] = dd;
        j["k"] = kk;
        j["min_n"] = n;
        if (format == Format::json) out << j.dump() << '\n';
        if (format == Format::csv) out << "d,k,min_n\n" << dd << ',' << kk << ',' << n << '\n';
        if (format == Format::text) {
          out << "smallest n with 2 n^(d-k-1) > 3^d - 1 for d=" << dd << " k=" << kk << ": " << n << '\n';
        }
        return kOk;
      }
      const Range s = size.resolve("size");
      if (s.lo != s.hi) throw InvalidArgument("insufficiency takes a single --size");
      const bool insufficient = insufficiency_check({s.lo, dd, kk});
      Json j;
      j["n"] = s.lo;
      j["d"] = dd;
      j["k"] = kk;
      j["insufficient"] = insufficient;
      if (format == Format::json) out << j.dump() << '\n';
      if (format == Format::csv) {
        out << "n,d,k,insufficient\n" << s.lo << ',' << dd << ',' << kk << ',' << (insufficient ? 1 : 0) << '\n';
      }
      if (format == Format::text) {
        out << "n=" << s.lo << " d=" << dd << " k=" << kk << ": "
            << (insufficient ? "n^k queens cannot dominate" : "not ruled out by the counting bound") << '\n';
      }
      return insufficient ? kOk : kNegative;
    }

    if (audit_cmd->parsed()) {
      AuditOptions options{global.node_budget, global.max_cells};
      const auto rows = audit(size.resolve("size"), dim.resolve("dim"), options);
      out << render(rows, format);
      for (const auto& r : rows) {
        if (r.status != "optimal") {
          err << "n=" << r.n << " d=" << r.d << " not solved to optimality (" << r.status << ")\n";
        }
      }
      const bool all_optimal =
          std::all_of(rows.begin(), rows.end(), [](const AuditRow& r) { return r.status == "optimal"; });
      return all_optimal ? kOk : kResourceCap;
    }

    // The remaining commands act on a single board.
    const Range s = size.resolve("size");
    const Range d = dim.resolve("dim");
    if (s.lo != s.hi || d.lo != d.hi) throw InvalidArgument("this command takes a single board");
    const BoardSpec board(to_int(d.lo, "dimension"), to_int(s.lo, "size"), global.max_cells);

    if (attack->parsed()) {
      const Position p = parse_position(pos);
      board.require(p);
      if (!target.empty()) {
        const Position t = parse_position(target);
        const bool hit = attacks(board, p, t);
        Json j;
        j["n"] = board.size();
        j["d"] = board.dimension();
        j["pos"] = position_json(p);
        j["target"] = position_json(t);
        j["attacks"] = hit;
        if (format == Format::json) out << j.dump() << '\n';
        if (format == Format::csv) out << "attacks\n" << (hit ? 1 : 0) << '\n';
        if (format == Format::text) {
          out << format_position(p) << (hit ? " attacks " : " does not attack ") << format_position(t) << '\n';
        }
        return hit ? kOk : kNegative;
      }
      const auto cells = attacked_set(board, p);
      if (format == Format::json) {
        Json j;
        j["n"] = board.size();
        j["d"] = board.dimension();
        j["pos"] = position_json(p);
        Json list = Json::array();
        for (const auto& c : cells) list.push_back(position_json(c));
        j["attacked"] = list;
        j["count"] = cells.size();
        out << j.dump() << '\n';
      } else if (format == Format::csv) {
        out << "index";
        for (int i = 1; i <= board.dimension(); ++i) out << ",x" << i;
        out << '\n';
        for (const auto& c : cells) {
          out << encode(board, c);
          for (int v : c.coords()) out << ',' << v;
          out << '\n';
        }
      } else {
        out << cells.size() << " cells attacked from " << format_position(p) << '\n';
        for (const auto& c : cells) out << format_position(c) << '\n';
      }
      return kOk;
    }

    if (dominate->parsed()) {
      DominationOptions options;
      options.node_budget = global.node_budget;
      const auto result = min_dominating(board, options);
      out << render(result, format);
      if (result.status != SolveStatus::optimal) {
        err << "node budget exhausted before optimality was proven\n";
        return kResourceCap;
      }
      return kOk;
    }

    if (independent->parsed()) {
      const IndependenceQuery q(board, queens);
      const auto report = run_independence(q, count_mode ? IndependenceMode::count : IndependenceMode::exists);
      out << render(report, format);
      if (!count_mode && !report.witness) return kNegative;
      return kOk;
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArgument;
  } catch (const ResourceCapError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kResourceCap;
  }
  err << "error: no command\n";
  return kInvalidArgument;
}

}  // namespace hyperqueens::cli
