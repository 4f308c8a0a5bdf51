#pragma once

#include <cstdint>

namespace fitt {

struct Budget {
  // nominal count of t x t submatrices allowed in one minors() call
  std::int64_t max_minors = 200000;
  // distinct lcm multidegrees examined by betti_pd
  std::int64_t max_betti_degrees = 20000;
  // nodes in combinatorial searches (admissible covers, tree enumerations)
  std::int64_t max_search_nodes = 20000000;
};

// Process-wide default; the CLI seeds it from FITT_BUDGET.
Budget& default_budget();

}  // namespace fitt
