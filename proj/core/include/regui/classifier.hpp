#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "regui/layout_spec.hpp"

namespace regui {

struct ClassId {
  std::size_t index = 0;
  std::string name;

  friend bool operator==(const ClassId&, const ClassId&) = default;
};

// Returns the first rule containing `ratio` under exact endpoint comparison.
// On a validated partition the match is unique.
// Throws NonPositiveRatio for ratio <= 0 (or NaN) and UnclassifiableRatio
// when no rule matches.
ClassId classify(double ratio, std::span<const ClassRule> classes);

// A maximal stretch of (0, inf) claimed by zero rules (gap) or by more than
// one rule (overlap). Bounds use the same inclusivity flags as ClassRule.
struct PartitionIssue {
  enum class Kind { gap, overlap };

  Kind kind = Kind::gap;
  double lo = 0.0;
  bool lo_inclusive = false;
  double hi = 0.0;
  bool hi_inclusive = false;
  // Rules involved, for overlaps. Empty for gaps.
  std::vector<std::string> classes;

  std::string describe() const;

  friend bool operator==(const PartitionIssue&, const PartitionIssue&) = default;
};

// Empty result means the rules are pairwise disjoint and cover (0, inf).
std::vector<PartitionIssue> validate_partition(std::span<const ClassRule> classes);

}  // namespace regui
