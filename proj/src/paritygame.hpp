#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bits.hpp"

namespace mucheck {

enum class Owner : uint8_t { exists = 0, forall = 1 };

inline Owner opponent(Owner o) {
  return o == Owner::exists ? Owner::forall : Owner::exists;
}

// Finite parity game. A position with no moves is a deadlock losing for its
// owner. `entry` is construction metadata (the designated initial position)
// and not part of the exchange format.
struct ParityGame {
  struct Position {
    Owner owner = Owner::exists;
    uint32_t priority = 0;
    std::vector<uint32_t> moves;
    std::string label;
  };

  std::vector<Position> positions;
  uint32_t entry = 0;

  uint32_t size() const { return uint32_t(positions.size()); }
  uint32_t max_priority() const {
    uint32_t p = 0;
    for (const auto& v : positions) p = std::max(p, v.priority);
    return p;
  }
  uint32_t add(Owner owner, uint32_t priority, std::string label) {
    positions.push_back({owner, priority, {}, std::move(label)});
    return uint32_t(positions.size() - 1);
  }

  bool operator==(const ParityGame& o) const;
  void validate() const;
};

// PGSolver text format: a header `parity <maxindex>;` followed by one line
// `<id> <priority> <owner> <succ,succ,...> "<label>";` per position, with
// owner 0 for the existential and 1 for the universal player. Positions
// without moves omit the successor field.
std::string export_pgsolver(const ParityGame& g);
ParityGame import_pgsolver(const std::string& text);

}  // namespace mucheck
