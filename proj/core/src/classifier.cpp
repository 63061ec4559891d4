#include "regui/classifier.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "regui/error.hpp"

namespace regui {
namespace {

std::string format_number(double value) {
  if (value == std::numeric_limits<double>::infinity()) return "inf";
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return ec == std::errc() ? std::string(buffer, end) : std::to_string(value);
}

// One element of the sweep over (0, inf): either the single point `lo`
// (lo == hi) or the open segment (lo, hi) between two consecutive endpoints.
struct Cell {
  double lo;
  double hi;
  bool is_point;
};

bool covers(const ClassRule& rule, const Cell& cell) {
  if (cell.is_point) return rule.contains(cell.lo);
  // Cells never straddle an endpoint, so a rule covers all of the segment
  // or none of it.
  return rule.lo <= cell.lo && rule.hi >= cell.hi && rule.lo < rule.hi;
}

}  // namespace

ClassId classify(double ratio, std::span<const ClassRule> classes) {
  if (!(ratio > 0.0)) {
    throw NonPositiveRatio("aspect ratio must be positive, got " + format_number(ratio));
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].contains(ratio)) return {i, classes[i].name};
  }
  throw UnclassifiableRatio("no class covers aspect ratio " + format_number(ratio));
}

std::string PartitionIssue::describe() const {
  std::string where;
  if (lo == hi && lo_inclusive && hi_inclusive) {
    where = "at R = " + format_number(lo);
  } else {
    where = "over " + std::string(lo_inclusive ? "[" : "(") + format_number(lo) + ", " +
            format_number(hi) + (hi_inclusive ? "]" : ")");
  }
  if (kind == Kind::gap) return "gap " + where;
  std::string names;
  for (const auto& name : classes) {
    if (!names.empty()) names += ", ";
    names += name;
  }
  return "overlap " + where + " between " + names;
}

std::vector<PartitionIssue> validate_partition(std::span<const ClassRule> classes) {
  constexpr double inf = std::numeric_limits<double>::infinity();

  std::vector<double> points;
  for (const ClassRule& rule : classes) {
    for (double p : {rule.lo, rule.hi}) {
      if (p > 0.0 && p < inf) points.push_back(p);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<Cell> cells;
  double previous = 0.0;
  for (double p : points) {
    cells.push_back({previous, p, false});
    cells.push_back({p, p, true});
    previous = p;
  }
  cells.push_back({previous, inf, false});

  std::vector<PartitionIssue> issues;
  for (const Cell& cell : cells) {
    std::vector<std::string> owners;
    for (const ClassRule& rule : classes) {
      if (covers(rule, cell)) owners.push_back(rule.name);
    }
    if (owners.size() == 1) continue;

    PartitionIssue issue;
    issue.kind = owners.empty() ? PartitionIssue::Kind::gap : PartitionIssue::Kind::overlap;
    issue.lo = cell.lo;
    issue.hi = cell.hi;
    issue.lo_inclusive = cell.is_point;
    issue.hi_inclusive = cell.is_point;
    if (issue.kind == PartitionIssue::Kind::overlap) issue.classes = std::move(owners);

    // Adjacent cells with the same problem merge into one issue.
    if (!issues.empty()) {
      PartitionIssue& last = issues.back();
      if (last.kind == issue.kind && last.classes == issue.classes && last.hi == issue.lo &&
          (last.hi_inclusive != issue.lo_inclusive)) {
        last.hi = issue.hi;
        last.hi_inclusive = issue.hi_inclusive;
        continue;
      }
    }
    issues.push_back(std::move(issue));
  }
  return issues;
}

}  // namespace regui
