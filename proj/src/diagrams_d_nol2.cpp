#include <stdexcept>

#include "brauer/diagrams_d.hpp"

namespace brauer {

bool l2_available() { return false; }

ScaledDiagramD compose_l2(const ScaledDiagramD&, const ScaledDiagramD&) {
  throw std::logic_error("decorated layer not built (configure with -DBRAUER_WITH_L2=ON)");
}

}  // namespace brauer
