#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

namespace atam {

/// A lattice point. 2D points keep z == 0; the owning structure carries the
/// dimension.
struct Point {
  int x = 0;
  int y = 0;
  int z = 0;

  friend auto operator<=>(const Point&, const Point&) = default;

  Point operator+(const Point& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Point operator-() const { return {-x, -y, -z}; }
};

inline int manhattan(const Point& a, const Point& b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z);
}

struct PointHash {
  std::size_t operator()(const Point& p) const {
    std::size_t h = static_cast<std::size_t>(p.x) * 0x9e3779b97f4a7c15ull;
    h ^= static_cast<std::size_t>(p.y) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(p.z) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

/// Canonical side order: N,E,S,W in 2D, plus U,D in 3D. Serialization and
/// direction tie-breaks use this order.
enum class Dir : int { N = 0, E = 1, S = 2, W = 3, U = 4, D = 5 };

constexpr std::array<Dir, 6> kCanonicalDirs = {Dir::N, Dir::E, Dir::S,
                                               Dir::W, Dir::U, Dir::D};

inline int dir_count(int dimension) { return 2 * dimension; }

inline Point unit(Dir d) {
  switch (d) {
    case Dir::N: return {0, 1, 0};
    case Dir::E: return {1, 0, 0};
    case Dir::S: return {0, -1, 0};
    case Dir::W: return {-1, 0, 0};
    case Dir::U: return {0, 0, 1};
    case Dir::D: return {0, 0, -1};
  }
  throw std::logic_error("bad direction");
}

inline Dir opposite(Dir d) {
  switch (d) {
    case Dir::N: return Dir::S;
    case Dir::E: return Dir::W;
    case Dir::S: return Dir::N;
    case Dir::W: return Dir::E;
    case Dir::U: return Dir::D;
    case Dir::D: return Dir::U;
  }
  throw std::logic_error("bad direction");
}

inline const char* dir_name(Dir d) {
  switch (d) {
    case Dir::N: return "N";
    case Dir::E: return "E";
    case Dir::S: return "S";
    case Dir::W: return "W";
    case Dir::U: return "U";
    case Dir::D: return "D";
  }
  return "?";
}

/// Directions sorted by lexicographic order of their unit vectors
/// ((x,y,z) componentwise). Multi-glue window-movie steps use this order.
constexpr std::array<Dir, 6> kUnitLexDirs = {Dir::W, Dir::S, Dir::D,
                                             Dir::U, Dir::N, Dir::E};

/// Same order restricted to the first `dimension` axes.
inline std::array<Dir, 6> unit_lex_dirs(int dimension, int* count) {
  std::array<Dir, 6> out{};
  int n = 0;
  for (Dir d : kUnitLexDirs) {
    if (dimension == 2 && (d == Dir::U || d == Dir::D)) continue;
    out[n++] = d;
  }
  *count = n;
  return out;
}

/// Domain-rule violations (occupied position, non-separating window, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input files / strings; carries an offset when known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::ptrdiff_t offset = -1)
      : std::runtime_error(offset >= 0 ? what + " (offset " + std::to_string(offset) + ")"
                                       : what),
        offset_(offset) {}
  std::ptrdiff_t offset() const { return offset_; }

 private:
  std::ptrdiff_t offset_;
};

}  // namespace atam
