#pragma once

namespace mdyn {

// Resource limits shared by every module. Defaults match the documented
// configuration; callers override individual fields.
struct Budget {
  long precision_ceiling = 1L << 16;  // bits
  int degree_cap = 64;
  long subset_cap = 2000;
  long recombination_cap = 1L << 16;  // Zassenhaus subsets tried
};

}  // namespace mdyn
