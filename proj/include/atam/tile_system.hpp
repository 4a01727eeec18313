#pragma once

#include <map>
#include <string>
#include <vector>

#include "atam/assembly.hpp"
#include "atam/geometry.hpp"
#include "atam/tile.hpp"

namespace atam {

/// Weighted edges of the binding graph: pairs of adjacent occupied positions
/// whose facing glues are equal with positive strength.
struct BindingEdge {
  Point a, b;
  int strength = 0;
};

std::vector<BindingEdge> binding_edges(const Assembly& assembly);

/// Exact tau-stability: every cut of the binding graph has weight >= tau.
/// Enumerates bipartitions, so it is limited to small assemblies (<= 24
/// tiles); callers needing more should restructure the check.
bool is_tau_stable(const Assembly& assembly, int temperature);

/// A tile assembly system: tile set, seed assembly, temperature.
/// Construction normalizes glue strengths (clipped to tau), checks that one
/// label always carries one strength, and that the seed is tau-stable and
/// connected.
class TileSystem {
 public:
  TileSystem(int dimension, std::vector<TileType> tiles, Assembly seed, int temperature);

  int dimension() const { return dim_; }
  int temperature() const { return temperature_; }
  const Assembly& seed() const { return seed_; }
  const std::vector<TileRef>& tiles() const { return tiles_; }

  const TileRef& tile(const std::string& name) const;
  int tile_index(const std::string& name) const;

 private:
  int dim_;
  int temperature_;
  std::vector<TileRef> tiles_;
  Assembly seed_;
  std::map<std::string, int> by_name_;
};

}  // namespace atam
