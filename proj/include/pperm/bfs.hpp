#pragma once

// Breadth-first search over Cayley graphs of the symmetric group (and the
// hyperoctahedral group for reversals). These are the exact oracles that
// the closed-form distances and lower bounds are checked against.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "pperm/permutation.hpp"

namespace pperm {

enum class Generators { Transpositions, BlockInterchanges, Reversals };

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultStateCap = 10'000'000;
inline constexpr std::size_t kMaxPackedLength = 12;

/// Packs a sequence over +-[n] (n <= 12) into one word: 4 bits of magnitude
/// per entry plus a sign bitmask in bits 48..59.
std::uint64_t pack_state(std::span<const Label> seq);
std::vector<Label> unpack_state(std::uint64_t key, std::size_t n);

/// All sequences one generator away from seq (1-based positions).
std::vector<std::vector<Label>> neighbors(std::span<const Label> seq, Generators g);

/// Exact distance between two states. Unsigned generators expect sequences
/// on [n]; reversals expect signed sequences. Throws CapExceeded once more
/// than `cap` states have been discovered.
int bfs_distance(std::span<const Label> start, std::span<const Label> goal, Generators g,
                 std::size_t cap = kDefaultStateCap);

/// Distance from the identity to every reachable state. All three generator
/// sets are closed under inversion, so this is also the distance of every
/// state to the identity.
class DistanceTable {
 public:
  DistanceTable(std::size_t n, Generators g, std::size_t cap = kDefaultStateCap);

  std::size_t n() const { return n_; }
  std::size_t size() const { return dist_.size(); }
  int distance(std::span<const Label> seq) const;
  /// histogram()[d] = number of states at distance d.
  std::vector<std::uint64_t> histogram() const;

 private:
  std::size_t n_;
  Generators gens_;
  std::unordered_map<std::uint64_t, std::uint8_t> dist_;
};

}  // namespace pperm
