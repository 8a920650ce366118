#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>

namespace tilepump {

using Coord = std::int64_t;

struct Vector {
    Coord x = 0;
    Coord y = 0;

    friend constexpr bool operator==(const Vector&, const Vector&) = default;
    friend constexpr auto operator<=>(const Vector&, const Vector&) = default;

    constexpr bool is_zero() const { return x == 0 && y == 0; }
    constexpr Vector operator-() const { return {-x, -y}; }
    constexpr Vector& operator+=(Vector o) { x += o.x; y += o.y; return *this; }
};

constexpr Vector operator+(Vector a, Vector b) { return {a.x + b.x, a.y + b.y}; }
constexpr Vector operator-(Vector a, Vector b) { return {a.x - b.x, a.y - b.y}; }
constexpr Vector operator*(Coord k, Vector v) { return {k * v.x, k * v.y}; }

// Cells of the grid. Ordering via <=> is (x, y); use row_major_less for (y, x).
struct Point {
    Coord x = 0;
    Coord y = 0;

    friend constexpr bool operator==(const Point&, const Point&) = default;
    friend constexpr auto operator<=>(const Point&, const Point&) = default;

    constexpr Point& operator+=(Vector v) { x += v.x; y += v.y; return *this; }
};

constexpr Point operator+(Point p, Vector v) { return {p.x + v.x, p.y + v.y}; }
constexpr Point operator-(Point p, Vector v) { return {p.x - v.x, p.y - v.y}; }
constexpr Vector operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

constexpr bool row_major_less(Point a, Point b)
{
    return a.y != b.y ? a.y < b.y : a.x < b.x;
}

struct RowMajorLess {
    constexpr bool operator()(Point a, Point b) const { return row_major_less(a, b); }
};

struct PointHash {
    std::size_t operator()(Point p) const noexcept
    {
        auto h = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ull;
        h ^= static_cast<std::uint64_t>(p.y) + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

enum class Dir : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

inline constexpr std::array<Dir, 4> kDirs{Dir::North, Dir::East, Dir::South, Dir::West};

constexpr Vector unit(Dir d)
{
    switch (d) {
    case Dir::North: return {0, 1};
    case Dir::East: return {1, 0};
    case Dir::South: return {0, -1};
    case Dir::West: return {-1, 0};
    }
    return {};
}

constexpr Dir opposite(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 2) % 4); }
constexpr Dir mirror(Dir d) { return d == Dir::East ? Dir::West : d == Dir::West ? Dir::East : d; }
std::string_view to_string(Dir d);

// Direction of a unit step from `from` to `to`, absent when not 4-adjacent.
std::optional<Dir> step_dir(Point from, Point to);
inline bool adjacent(Point a, Point b) { return step_dir(a, b).has_value(); }

constexpr Coord abs_coord(Coord c) { return c < 0 ? -c : c; }
constexpr Coord norm1(Vector v) { return abs_coord(v.x) + abs_coord(v.y); }
constexpr Coord norm_inf(Vector v) { return abs_coord(v.x) > abs_coord(v.y) ? abs_coord(v.x) : abs_coord(v.y); }
constexpr Coord det(Vector a, Vector b) { return a.x * b.y - a.y * b.x; }

enum class LineSide { NonNegative, Negative };

LineSide line_side(Point a, Vector v, Point x);

// Reflection across the vertical axis x = 0.
constexpr Point mirror(Point p) { return {-p.x, p.y}; }
constexpr Vector mirror(Vector v) { return {-v.x, v.y}; }

struct Box {
    Coord min_x = 0;
    Coord min_y = 0;
    Coord max_x = -1;
    Coord max_y = -1;

    friend constexpr bool operator==(const Box&, const Box&) = default;

    constexpr bool empty() const { return min_x > max_x || min_y > max_y; }
    constexpr bool contains(Point p) const
    {
        return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
    }
    constexpr bool contains(const Box& o) const
    {
        return o.empty() || (o.min_x >= min_x && o.max_x <= max_x && o.min_y >= min_y && o.max_y <= max_y);
    }
    constexpr Coord width() const { return empty() ? 0 : max_x - min_x + 1; }
    constexpr Coord height() const { return empty() ? 0 : max_y - min_y + 1; }

    Box expanded(Coord margin) const;
    Box including(Point p) const;
    Box united(const Box& o) const;
    static Box around(std::span<const Point> points);
};

// Largest Manhattan distance between two points of the set, 0 when empty.
Coord manhattan_diameter(std::span<const Point> points);

}  // namespace tilepump
