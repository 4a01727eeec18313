#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "atam/geometry.hpp"
#include "atam/tile.hpp"

namespace atam {

struct Placement {
  Point pos;
  TileRef tile;
};

/// A configuration: a finite partial map from lattice points to tile types,
/// kept sorted by position. Assemblies proper are the connected non-empty
/// configurations; cut pieces and represented images may be empty or
/// disconnected, so connectivity is checked where a context requires it.
class Assembly {
 public:
  Assembly() = default;
  explicit Assembly(int dimension) : dim_(dimension) {}
  Assembly(int dimension, std::vector<Placement> cells) : dim_(dimension) {
    for (auto& c : cells) set(c.pos, std::move(c.tile));
  }

  int dimension() const { return dim_; }
  bool empty() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }
  const std::vector<Placement>& placements() const { return cells_; }

  const TileRef* at(const Point& p) const {
    auto it = lower_bound(p);
    if (it != cells_.end() && it->pos == p) return &it->tile;
    return nullptr;
  }
  bool contains(const Point& p) const { return at(p) != nullptr; }

  /// Inserts or replaces the tile at p.
  void set(const Point& p, TileRef tile) {
    if (dim_ == 2 && p.z != 0) throw DomainError("2D placement with nonzero z");
    auto it = lower_bound(p);
    if (it != cells_.end() && it->pos == p)
      it->tile = std::move(tile);
    else
      cells_.insert(it, Placement{p, std::move(tile)});
  }

  Assembly with(const Point& p, TileRef tile) const {
    Assembly out = *this;
    out.set(p, std::move(tile));
    return out;
  }

  Assembly translated(const Point& offset) const {
    Assembly out(dim_);
    out.cells_.reserve(cells_.size());
    for (const auto& c : cells_) out.cells_.push_back({c.pos + offset, c.tile});
    std::sort(out.cells_.begin(), out.cells_.end(),
              [](const Placement& a, const Placement& b) { return a.pos < b.pos; });
    return out;
  }

  std::vector<Point> domain() const {
    std::vector<Point> out;
    out.reserve(cells_.size());
    for (const auto& c : cells_) out.push_back(c.pos);
    return out;
  }

  /// Connectivity in the full grid graph of the domain.
  bool connected() const {
    if (cells_.empty()) return true;
    std::unordered_set<Point, PointHash> seen;
    std::vector<Point> stack{cells_.front().pos};
    seen.insert(cells_.front().pos);
    while (!stack.empty()) {
      Point p = stack.back();
      stack.pop_back();
      for (int di = 0; di < dir_count(dim_); ++di) {
        Point q = p + unit(kCanonicalDirs[di]);
        if (contains(q) && seen.insert(q).second) stack.push_back(q);
      }
    }
    return seen.size() == cells_.size();
  }

  /// Subassembly relation: domain inclusion with pointwise tile equality.
  bool subassembly_of(const Assembly& other) const {
    if (cells_.size() > other.cells_.size()) return false;
    for (const auto& c : cells_) {
      const TileRef* t = other.at(c.pos);
      if (!t || !same_tile(*t, c.tile)) return false;
    }
    return true;
  }

  /// Bounding box inflated by `margin` cells on every axis of the dimension.
  void bounds(Point* lo, Point* hi, int margin = 0) const {
    if (cells_.empty()) throw DomainError("bounds of empty configuration");
    *lo = *hi = cells_.front().pos;
    for (const auto& c : cells_) {
      lo->x = std::min(lo->x, c.pos.x);
      lo->y = std::min(lo->y, c.pos.y);
      lo->z = std::min(lo->z, c.pos.z);
      hi->x = std::max(hi->x, c.pos.x);
      hi->y = std::max(hi->y, c.pos.y);
      hi->z = std::max(hi->z, c.pos.z);
    }
    lo->x -= margin; lo->y -= margin;
    hi->x += margin; hi->y += margin;
    if (dim_ == 3) { lo->z -= margin; hi->z += margin; }
  }

  /// Exact placement equality (position and full tile type). No symmetry
  /// quotienting: the model has no tile rotation.
  friend bool operator==(const Assembly& a, const Assembly& b) {
    if (a.dim_ != b.dim_ || a.cells_.size() != b.cells_.size()) return false;
    for (std::size_t i = 0; i < a.cells_.size(); ++i) {
      if (a.cells_[i].pos != b.cells_[i].pos) return false;
      if (!same_tile(a.cells_[i].tile, b.cells_[i].tile)) return false;
    }
    return true;
  }

  /// Stable text key for hashing/dedup: positions with tile names.
  std::string canonical_key() const {
    std::string out;
    for (const auto& c : cells_) {
      out += std::to_string(c.pos.x) + "," + std::to_string(c.pos.y) + "," +
             std::to_string(c.pos.z) + ":" + c.tile->name() + ";";
    }
    return out;
  }

 private:
  std::vector<Placement>::const_iterator lower_bound(const Point& p) const {
    return std::lower_bound(cells_.begin(), cells_.end(), p,
                            [](const Placement& c, const Point& q) { return c.pos < q; });
  }
  std::vector<Placement>::iterator lower_bound(const Point& p) {
    return std::lower_bound(cells_.begin(), cells_.end(), p,
                            [](const Placement& c, const Point& q) { return c.pos < q; });
  }

  int dim_ = 2;
  std::vector<Placement> cells_;
};

/// Union of two disjoint configurations; overlapping positions must agree.
inline Assembly config_union(const Assembly& a, const Assembly& b) {
  Assembly out = a;
  for (const auto& c : b.placements()) {
    const TileRef* t = out.at(c.pos);
    if (t) {
      if (!same_tile(*t, c.tile))
        throw DomainError("configuration union conflict at (" + std::to_string(c.pos.x) +
                          "," + std::to_string(c.pos.y) + "," + std::to_string(c.pos.z) + ")");
      continue;
    }
    out.set(c.pos, c.tile);
  }
  return out;
}

}  // namespace atam
