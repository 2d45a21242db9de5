#pragma once

namespace pqa {

/// Explicit search budgets. Defaults are the documented desk-scale values;
/// every report echoes the budget actually used.
struct Budget {
  long long search_nodes = 500000;  // membership search node cap
  long long box_points = 4000000;   // lattice-point enumeration cap
  int combination_depth = 12;       // bounded combination search depth
  int box_extent = 24;              // bounding-box extent
  int scalar_bound = 64;            // caps for k / t / z scalar searches
  int window = 3;                   // windows are sums of <= window generators
};

}  // namespace pqa
