#ifndef LEXIDEAL_POINT_HPP
#define LEXIDEAL_POINT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"

namespace lexideal {

template <class K>
using Point = std::vector<K>;

// Ordered list of points; the order is semantically meaningful throughout.
template <class K>
using PointList = std::vector<Point<K>>;

// Nonempty, consistent dimension >= 1, pairwise distinct. Reports the first
// duplicate pair with 1-based positions.
template <class K>
void validate_point_list(const PointList<K>& pts) {
    if (pts.empty())
        throw ValidationError("point list is empty");
    const std::size_t n = pts[0].size();
    if (n == 0)
        throw ValidationError("points need at least one coordinate");
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (pts[i].size() != n)
            throw ValidationError("point " + std::to_string(i + 1) + " has " +
                                  std::to_string(pts[i].size()) +
                                  " coordinates, expected " + std::to_string(n));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j])
                throw ValidationError("duplicate points at positions " +
                                      std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1));
}

template <class K>
Point<K> project_point(const Point<K>& p, std::size_t m) {
    return Point<K>(p.begin(), p.begin() + static_cast<long>(m));
}

template <class K>
PointList<K> project_points(const PointList<K>& pts, std::size_t m) {
    PointList<K> out;
    out.reserve(pts.size());
    for (const auto& p : pts)
        out.push_back(project_point(p, m));
    return out;
}

// Remove later repeats, keeping first occurrences in order.
template <class K>
PointList<K> dedup_points(const PointList<K>& pts) {
    PointList<K> out;
    for (const auto& p : pts) {
        bool seen = false;
        for (const auto& q : out)
            if (q == p) {
                seen = true;
                break;
            }
        if (!seen)
            out.push_back(p);
    }
    return out;
}

} // namespace lexideal

#endif // LEXIDEAL_POINT_HPP
