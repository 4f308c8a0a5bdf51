#include "fitt/budget.hpp"

namespace fitt {

Budget& default_budget() {
  static Budget b;
  return b;
}

}  // namespace fitt
