#pragma once

#include <vector>

namespace symdes {

// v points, blocks as point-sets.  Kept deliberately dumb; all validation
// lives in verify_design.
struct IncidenceStructure {
  int v = 0;
  std::vector<std::vector<int>> blocks;
};

}  // namespace symdes
