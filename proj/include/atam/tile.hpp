#pragma once

#include <array>
#include <memory>
#include <string>

#include "atam/geometry.hpp"

namespace atam {

/// A glue: label plus nonnegative integer strength. Two abutting glues
/// interact only if label AND strength both match. The null glue has an
/// empty label and strength 0.
struct Glue {
  std::string label;
  int strength = 0;

  bool is_null() const { return label.empty() && strength == 0; }

  friend bool operator==(const Glue&, const Glue&) = default;
  friend auto operator<=>(const Glue&, const Glue&) = default;
};

inline const Glue kNullGlue{};

/// A unit square (2D) or cube (3D) with one glue per side, indexed in the
/// canonical N,E,S,W[,U,D] order. Unused sides carry the null glue.
class TileType {
 public:
  TileType() = default;
  TileType(std::string name, int dimension) : name_(std::move(name)), dimension_(dimension) {
    if (dimension != 2 && dimension != 3)
      throw DomainError("tile dimension must be 2 or 3: " + name_);
  }

  const std::string& name() const { return name_; }
  int dimension() const { return dimension_; }

  const Glue& glue(Dir d) const {
    if (static_cast<int>(d) >= dir_count(dimension_))
      throw DomainError("side " + std::string(dir_name(d)) + " not present on a " +
                        std::to_string(dimension_) + "D tile");
    return glues_[static_cast<int>(d)];
  }

  TileType& set_glue(Dir d, Glue g) {
    if (static_cast<int>(d) >= dir_count(dimension_))
      throw DomainError("side " + std::string(dir_name(d)) + " not present on a " +
                        std::to_string(dimension_) + "D tile");
    glues_[static_cast<int>(d)] = std::move(g);
    return *this;
  }

  friend bool operator==(const TileType& a, const TileType& b) {
    return a.name_ == b.name_ && a.dimension_ == b.dimension_ && a.glues_ == b.glues_;
  }

 private:
  std::string name_;
  int dimension_ = 2;
  std::array<Glue, 6> glues_{};
};

using TileRef = std::shared_ptr<const TileType>;

inline TileRef make_tile(TileType t) { return std::make_shared<const TileType>(std::move(t)); }

inline bool same_tile(const TileRef& a, const TileRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace atam
