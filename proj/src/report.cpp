#include "hyperqueens/report.hpp"

#include <charconv>
#include <limits>
#include <sstream>

#include "hyperqueens/errors.hpp"

namespace hyperqueens {

namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidArgument("bad " + std::string(what) + " \"" + std::string(text) + "\"");
  }
  return value;
}

template <typename T>
Json opt_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string opt_csv(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : ""; }
std::string opt_csv(const std::optional<bool>& v) { return v ? (*v ? "1" : "0") : ""; }

std::string opt_text(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "-"; }
std::string opt_text(const std::optional<bool>& v) { return v ? (*v ? "yes" : "NO") : "-"; }

// Guards against accidental ranges like 1..18446744073709551615.
void require_span(Range r, const char* what) {
  if (r.hi - r.lo >= 100000) throw InvalidArgument(std::string(what) + " range is too wide");
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string status_name(SolveStatus s) { return s == SolveStatus::optimal ? "optimal" : "bounds-only"; }

template <typename F>
std::optional<std::uint64_t> checked(F&& f) {
  try {
    return f();
  } catch (const OverflowError&) {
    return std::nullopt;
  }
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw InvalidArgument("unknown format \"" + std::string(name) + "\"");
}

Range parse_range(std::string_view text) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_u64(text, "range");
  } else {
    r.lo = parse_u64(text.substr(0, dots), "range start");
    r.hi = parse_u64(text.substr(dots + 2), "range end");
  }
  if (r.lo > r.hi) throw InvalidArgument("empty range \"" + std::string(text) + "\"");
  return r;
}

Json position_json(const Position& p) { return Json(p.coords()); }

Json placement_json(const Placement& p) {
  Json out = Json::array();
  for (const auto& q : p.queens()) out.push_back(position_json(q));
  return out;
}

Json to_json(const DominationResult& r) {
  Json j;
  j["n"] = r.board.size();
  j["d"] = r.board.dimension();
  j["gamma"] = opt_json(r.gamma);
  j["status"] = status_name(r.status);
  j["lb"] = r.lb;
  j["ub"] = r.ub;
  j["witness"] = placement_json(r.witness);
  j["nodes"] = r.nodes_explored;
  return j;
}

std::string render(const DominationResult& r, Format format) {
  switch (format) {
    case Format::json:
      return dump(to_json(r));
    case Format::csv: {
      std::ostringstream os;
      os << "n,d,gamma,status,lb,ub,nodes\n"
         << r.board.size() << ',' << r.board.dimension() << ',' << opt_csv(r.gamma) << ','
         << status_name(r.status) << ',' << r.lb << ',' << r.ub << ',' << r.nodes_explored << '\n';
      return os.str();
    }
    case Format::text: {
      std::ostringstream os;
      os << "board n=" << r.board.size() << " d=" << r.board.dimension() << '\n'
         << "status " << status_name(r.status) << '\n'
         << "gamma " << opt_text(r.gamma) << '\n'
         << "bounds " << r.lb << ".." << r.ub << '\n'
         << "nodes " << r.nodes_explored << '\n';
      os << (r.status == SolveStatus::optimal ? "witness" : "best known");
      for (const auto& q : r.witness.queens()) os << " (" << format_position(q) << ')';
      os << '\n';
      return os.str();
    }
  }
  return {};
}

IndependenceReport run_independence(const IndependenceQuery& q, IndependenceMode mode) {
  IndependenceReport r{q.board, q.m, mode, std::nullopt, std::nullopt};
  if (mode == IndependenceMode::exists) {
    r.witness = exists_independent(q);
  } else {
    r.count = count_independent(q);
  }
  return r;
}

Json to_json(const IndependenceReport& r) {
  Json j;
  j["n"] = r.board.size();
  j["d"] = r.board.dimension();
  j["m"] = r.m;
  j["mode"] = r.mode == IndependenceMode::exists ? "exists" : "count";
  j["witness"] = r.witness ? placement_json(*r.witness) : Json(nullptr);
  j["count"] = r.count ? Json(r.count->str()) : Json(nullptr);
  return j;
}

std::string render(const IndependenceReport& r, Format format) {
  const bool exists = r.mode == IndependenceMode::exists;
  switch (format) {
    case Format::json:
      return dump(to_json(r));
    case Format::csv: {
      std::ostringstream os;
      os << "n,d,m," << (exists ? "found" : "count") << '\n'
         << r.board.size() << ',' << r.board.dimension() << ',' << r.m << ','
         << (exists ? (r.witness ? "1" : "0") : r.count->str()) << '\n';
      return os.str();
    }
    case Format::text: {
      std::ostringstream os;
      os << "board n=" << r.board.size() << " d=" << r.board.dimension() << " m=" << r.m << '\n';
      if (exists) {
        if (r.witness) {
          os << "witness";
          for (const auto& q : r.witness->queens()) os << " (" << format_position(q) << ')';
          os << '\n';
        } else {
          os << "no independent placement\n";
        }
      } else {
        os << "count " << r.count->str() << '\n';
      }
      return os.str();
    }
  }
  return {};
}

std::vector<LineRow> line_table(Range dims) {
  require_span(dims, "dimension");
  std::vector<LineRow> rows;
  for (std::uint64_t d = dims.lo; d <= dims.hi; ++d) {
    if (d < 1 || d > 10000) throw InvalidArgument("dimension out of range");
    const int dim = static_cast<int>(d);
    LineRow row{dim, std::nullopt, std::nullopt};
    row.lines = checked([&] { return attack_line_count(dim); });
    if (row.lines) row.vectors = 2 * *row.lines;
    rows.push_back(row);
  }
  return rows;
}

std::string render(const std::vector<LineRow>& rows, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      Json a = Json::array();
      for (const auto& r : rows) {
        Json j;
        j["d"] = r.d;
        j["vectors"] = opt_json(r.vectors);
        j["lines"] = opt_json(r.lines);
        j["overflow"] = !r.lines.has_value();
        a.push_back(j);
      }
      return dump(a);
    }
    case Format::csv:
      os << "d,vectors,lines\n";
      for (const auto& r : rows) os << r.d << ',' << opt_csv(r.vectors) << ',' << opt_csv(r.lines) << '\n';
      return os.str();
    case Format::text:
      for (const auto& r : rows) {
        os << "d=" << r.d << " attack vectors " << opt_text(r.vectors) << ", attack lines "
           << opt_text(r.lines) << (r.lines ? "" : " (overflow)") << '\n';
      }
      return os.str();
  }
  return {};
}

std::vector<BoundRow> bound_table(Range sizes, Range dims) {
  if (sizes.lo < 1) throw InvalidArgument("board size must be at least 1");
  require_span(sizes, "size");
  require_span(dims, "dimension");
  std::vector<BoundRow> rows;
  for (std::uint64_t d = dims.lo; d <= dims.hi; ++d) {
    if (d < 1 || d > 10000) throw InvalidArgument("dimension out of range");
    const int dim = static_cast<int>(d);
    for (std::uint64_t n = sizes.lo; n <= sizes.hi; ++n) {
      BoundRow row{n, dim, std::nullopt, std::nullopt, std::nullopt};
      row.lb = checked([&] { return domination_lower_bound(n, dim); });
      row.reported_ub = checked([&] { return reported_upper_bound(n, dim); });
      row.lines = checked([&] { return attack_line_count(dim); });
      rows.push_back(row);
    }
  }
  return rows;
}

std::string render(const std::vector<BoundRow>& rows, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      Json a = Json::array();
      for (const auto& r : rows) {
        Json j;
        j["n"] = r.n;
        j["d"] = r.d;
        j["lb"] = opt_json(r.lb);
        j["reported_ub"] = opt_json(r.reported_ub);
        j["lines"] = opt_json(r.lines);
        j["overflow"] = r.overflow();
        a.push_back(j);
      }
      return dump(a);
    }
    case Format::csv:
      os << "n,d,lb,reported_ub,lines\n";
      for (const auto& r : rows) {
        os << r.n << ',' << r.d << ',' << opt_csv(r.lb) << ',' << opt_csv(r.reported_ub) << ','
           << opt_csv(r.lines) << '\n';
      }
      return os.str();
    case Format::text:
      for (const auto& r : rows) {
        os << "n=" << r.n << " d=" << r.d << " lb=" << opt_text(r.lb)
           << " reported_ub=" << opt_text(r.reported_ub) << " lines=" << opt_text(r.lines)
           << (r.overflow() ? " (overflow)" : "") << '\n';
      }
      return os.str();
  }
  return {};
}

std::optional<bool> AuditRow::lb_le_gamma() const {
  if (!lb || !gamma) return std::nullopt;
  return *lb <= *gamma;
}

std::optional<bool> AuditRow::gamma_le_reported_ub() const {
  if (!gamma || !reported_ub) return std::nullopt;
  return *gamma <= *reported_ub;
}

std::vector<AuditRow> audit(Range sizes, Range dims, const AuditOptions& options) {
  if (sizes.lo < 1) throw InvalidArgument("board size must be at least 1");
  require_span(sizes, "size");
  require_span(dims, "dimension");
  std::vector<AuditRow> rows;
  for (std::uint64_t d = dims.lo; d <= dims.hi; ++d) {
    if (d < 1 || d > 10000) throw InvalidArgument("dimension out of range");
    const int dim = static_cast<int>(d);
    for (std::uint64_t n = sizes.lo; n <= sizes.hi; ++n) {
      AuditRow row;
      row.n = n;
      row.d = dim;
      row.lb = checked([&] { return domination_lower_bound(n, dim); });
      row.reported_ub = checked([&] { return reported_upper_bound(n, dim); });
      try {
        if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
          throw ResourceCapError("board size too large");
        }
        const BoardSpec board(dim, static_cast<int>(n), options.max_cells);
        DominationOptions solve;
        solve.node_budget = options.node_budget;
        const auto result = min_dominating(board, solve);
        row.status = result.status == SolveStatus::optimal ? "optimal" : "bounds-only";
        row.gamma = result.gamma;
        row.solver_lb = result.lb;
        row.solver_ub = result.ub;
        row.nodes = result.nodes_explored;
      } catch (const ResourceCapError&) {
        row.status = "skipped";
      } catch (const OverflowError&) {
        row.status = "skipped";
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::string render(const std::vector<AuditRow>& rows, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      Json a = Json::array();
      for (const auto& r : rows) {
        Json j;
        j["n"] = r.n;
        j["d"] = r.d;
        j["status"] = r.status;
        j["lb"] = opt_json(r.lb);
        j["gamma"] = opt_json(r.gamma);
        j["reported_ub"] = opt_json(r.reported_ub);
        j["lb_le_gamma"] = opt_json(r.lb_le_gamma());
        j["gamma_le_reported_ub"] = opt_json(r.gamma_le_reported_ub());
        j["solver_lb"] = opt_json(r.solver_lb);
        j["solver_ub"] = opt_json(r.solver_ub);
        j["nodes"] = r.nodes;
        a.push_back(j);
      }
      return dump(a);
    }
    case Format::csv:
      os << "n,d,status,lb,gamma,reported_ub,lb_le_gamma,gamma_le_reported_ub,solver_lb,solver_ub,nodes\n";
      for (const auto& r : rows) {
        os << r.n << ',' << r.d << ',' << r.status << ',' << opt_csv(r.lb) << ',' << opt_csv(r.gamma)
           << ',' << opt_csv(r.reported_ub) << ',' << opt_csv(r.lb_le_gamma()) << ','
           << opt_csv(r.gamma_le_reported_ub()) << ',' << opt_csv(r.solver_lb) << ','
           << opt_csv(r.solver_ub) << ',' << r.nodes << '\n';
      }
      return os.str();
    case Format::text: {
      std::size_t violations = 0;
      for (const auto& r : rows) {
        os << "n=" << r.n << " d=" << r.d << " " << r.status << " lb=" << opt_text(r.lb)
           << " gamma=" << opt_text(r.gamma) << " reported_ub=" << opt_text(r.reported_ub)
           << " lb<=gamma:" << opt_text(r.lb_le_gamma())
           << " gamma<=reported_ub:" << opt_text(r.gamma_le_reported_ub()) << '\n';
        if (r.gamma_le_reported_ub() == false) ++violations;
      }
      os << violations << " instance(s) exceed the reported upper bound\n";
      return os.str();
    }
  }
  return {};
}

}  // namespace hyperqueens
