// pg3.hpp — points, lines, and planes of PG(3,q) with precomputed incidence.
//
// Points are normalized homogeneous 4-tuples (first nonzero coordinate 1),
// enumerated lexicographically under the field element order; planes use the
// identical enumeration on dual coordinates, so point i and plane i carry the
// same tuple. Lines are identified by their two smallest point indices and
// appear in ascending key order. Everything is built once in the constructor
// and immutable afterwards; all queries are read-only.
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hq/bitvec.hpp"
#include "hq/gf.hpp"

namespace hq::pg3 {

using Coords = std::array<gf::Element, 4>;

struct Point {
    Coords coords;
    std::int32_t index;
};

struct Plane {
    Coords dual;  // the plane is the zero set of the corresponding linear form
    std::int32_t index;
};

struct Line {
    std::vector<std::int32_t> points;  // sorted point indices, q+1 of them
    std::vector<std::int32_t> planes;  // sorted plane indices, q+1 of them
    std::int32_t index;

    std::pair<std::int32_t, std::int32_t> key() const { return {points[0], points[1]}; }
};

class Geometry {
public:
    explicit Geometry(gf::Field field);

    const gf::Field& field() const { return field_; }
    int q() const { return field_.q(); }

    std::int32_t num_points() const { return static_cast<std::int32_t>(points_.size()); }
    std::int32_t num_planes() const { return static_cast<std::int32_t>(planes_.size()); }
    std::int32_t num_lines() const { return static_cast<std::int32_t>(lines_.size()); }

    std::span<const Point> points() const { return points_; }
    std::span<const Plane> planes() const { return planes_; }
    std::span<const Line> lines() const { return lines_; }

    const Point& point(std::int32_t i) const { return points_[i]; }
    const Plane& plane(std::int32_t i) const { return planes_[i]; }
    const Line& line(std::int32_t i) const { return lines_[i]; }

    bool incident(std::int32_t point, std::int32_t plane) const {
        return plane_points_[plane].test(point);
    }
    const BitVec& plane_point_set(std::int32_t plane) const { return plane_points_[plane]; }
    const BitVec& point_plane_set(std::int32_t point) const { return point_planes_[point]; }

    // The unique line through two distinct points. Throws on equal points.
    std::int32_t line_through(std::int32_t p1, std::int32_t p2) const;

    // The q+1 planes of the pencil on a line, ascending.
    const std::vector<std::int32_t>& planes_through_line(std::int32_t l) const {
        return lines_[l].planes;
    }

    // The unique plane containing the line and an off-line point. Throws if
    // the point lies on the line.
    std::int32_t plane_span(std::int32_t l, std::int32_t point) const;

    std::vector<std::int32_t> points_on_plane(std::int32_t plane) const {
        return plane_points_[plane].to_indices();
    }
    const std::vector<std::int32_t>& lines_on_plane(std::int32_t plane) const {
        return plane_lines_[plane];
    }

    // The common line of two distinct planes, by eliminating the 2x4 system.
    std::int32_t meet_planes(std::int32_t a, std::int32_t b) const;

    // Scales a nonzero tuple so its first nonzero entry is 1. Throws on zero.
    Coords normalize(const Coords& c) const;

    // Index of the (normalized) point / plane with the given coordinates.
    std::int32_t point_index(const Coords& c) const;
    std::int32_t plane_index(const Coords& c) const;

    // a0 x0 + a1 x1 + a2 x2 + a3 x3
    gf::Element dot(const Coords& a, const Coords& b) const;

    std::string point_text(std::int32_t i) const { return coords_text(points_[i].coords); }
    std::string plane_text(std::int32_t i) const { return coords_text(planes_[i].dual); }
    // Lines serialize by their two key point indices.
    std::string line_text(std::int32_t i) const {
        auto [a, b] = lines_[i].key();
        return std::to_string(a) + "," + std::to_string(b);
    }
    std::string coords_text(const Coords& c) const;

private:
    std::int32_t coords_code(const Coords& c) const;

    gf::Field field_;
    std::vector<Point> points_;
    std::vector<Plane> planes_;
    std::vector<Line> lines_;
    std::vector<std::int32_t> lookup_;      // coords code -> point/plane index
    std::vector<BitVec> plane_points_;      // per plane: bitset over points
    std::vector<BitVec> point_planes_;      // per point: bitset over planes
    std::vector<std::vector<std::int32_t>> plane_lines_;
    std::vector<std::int32_t> line_table_;  // point pair -> line index
};

}  // namespace hq::pg3
