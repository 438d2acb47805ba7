#include "deltaclique/interval.h"

#include <ostream>

namespace deltaclique {

std::string to_string(const Interval& interval) {
  return "[" + std::to_string(interval.start) + "," +
         std::to_string(interval.end) + "]";
}

std::ostream& operator<<(std::ostream& os, const Interval& interval) {
  return os << to_string(interval);
}

}  // namespace deltaclique
