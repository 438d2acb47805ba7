#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace deltaclique {

using Time = std::int64_t;
using VertexId = std::uint32_t;

// Closed integer interval [start, end]. The length is end - start, so a
// single time step has length 0.
struct Interval {
  Time start = 0;
  Time end = 0;

  constexpr Time length() const { return end - start; }
  constexpr bool contains(Time t) const { return start <= t && t <= end; }
  constexpr bool contains(const Interval& other) const {
    return start <= other.start && other.end <= end;
  }
  // Closed intervals sharing a single endpoint overlap.
  constexpr bool overlaps(const Interval& other) const {
    return start <= other.end && other.start <= end;
  }

  friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

constexpr std::optional<Interval> intersect(const Interval& x,
                                            const Interval& y) {
  Interval r{x.start > y.start ? x.start : y.start,
             x.end < y.end ? x.end : y.end};
  if (r.start > r.end) return std::nullopt;
  return r;
}

std::string to_string(const Interval& interval);
std::ostream& operator<<(std::ostream& os, const Interval& interval);

}  // namespace deltaclique
