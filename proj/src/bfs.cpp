#include "pperm/bfs.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace pperm {

namespace {

constexpr int kSignShift = 48;

void check_length(std::size_t n) {
  if (n > kMaxPackedLength) {
    throw DomainError("BFS state packing supports n <= " + std::to_string(kMaxPackedLength));
  }
}

// Calls fn(buffer) for each neighbor; buffer is reused between calls.
template <class Fn>
void for_each_neighbor(std::span<const Label> seq, Generators g, std::vector<Label>& buf, Fn&& fn) {
  const std::size_t n = seq.size();
  buf.resize(n);
  auto emit_swap = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    // 1-based blocks [i..j], [k..l]
    std::size_t w = 0;
    for (std::size_t t = 1; t < i; ++t) buf[w++] = seq[t - 1];
    for (std::size_t t = k; t <= l; ++t) buf[w++] = seq[t - 1];
    for (std::size_t t = j + 1; t < k; ++t) buf[w++] = seq[t - 1];
    for (std::size_t t = i; t <= j; ++t) buf[w++] = seq[t - 1];
    for (std::size_t t = l + 1; t <= n; ++t) buf[w++] = seq[t - 1];
    fn(std::span<const Label>(buf));
  };
  switch (g) {
    case Generators::Transpositions:
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
          for (std::size_t k = j + 1; k <= n; ++k) emit_swap(i, j, j + 1, k);
      break;
    case Generators::BlockInterchanges:
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
          for (std::size_t k = j + 1; k <= n; ++k)
            for (std::size_t l = k; l <= n; ++l) emit_swap(i, j, k, l);
      break;
    case Generators::Reversals:
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) {
          std::copy(seq.begin(), seq.end(), buf.begin());
          for (std::size_t t = 0; t <= j - i; ++t) buf[i - 1 + t] = -seq[j - 1 - t];
          fn(std::span<const Label>(buf));
        }
      break;
  }
}

}  // namespace

std::uint64_t pack_state(std::span<const Label> seq) {
  check_length(seq.size());
  std::uint64_t key = 0;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    const Label v = seq[t];
    const std::uint64_t mag = static_cast<std::uint64_t>(std::llabs(v));
    if (mag == 0 || mag > 15) throw DomainError("BFS state entries must be nonzero with magnitude <= 15");
    key |= (mag & 0xF) << (4 * t);
    if (v < 0) key |= std::uint64_t{1} << (kSignShift + t);
  }
  return key;
}

std::vector<Label> unpack_state(std::uint64_t key, std::size_t n) {
  std::vector<Label> seq(n);
  for (std::size_t t = 0; t < n; ++t) {
    Label mag = static_cast<Label>((key >> (4 * t)) & 0xF);
    seq[t] = ((key >> (kSignShift + t)) & 1) ? -mag : mag;
  }
  return seq;
}

std::vector<std::vector<Label>> neighbors(std::span<const Label> seq, Generators g) {
  std::vector<std::vector<Label>> out;
  std::vector<Label> buf;
  for_each_neighbor(seq, g, buf, [&](std::span<const Label> nb) { out.emplace_back(nb.begin(), nb.end()); });
  return out;
}

int bfs_distance(std::span<const Label> start, std::span<const Label> goal, Generators g, std::size_t cap) {
  if (start.size() != goal.size()) throw DomainError("bfs_distance: length mismatch");
  const std::size_t n = start.size();
  const std::uint64_t target = pack_state(goal);
  std::uint64_t origin = pack_state(start);
  if (origin == target) return 0;
  std::unordered_map<std::uint64_t, std::uint8_t> seen{{origin, 0}};
  std::vector<std::uint64_t> frontier{origin}, next;
  std::vector<Label> buf;
  for (int d = 1; !frontier.empty(); ++d) {
    next.clear();
    for (std::uint64_t key : frontier) {
      auto cur = unpack_state(key, n);
      bool found = false;
      for_each_neighbor(cur, g, buf, [&](std::span<const Label> nb) {
        if (found) return;
        std::uint64_t k = pack_state(nb);
        if (k == target) {
          found = true;
          return;
        }
        if (seen.emplace(k, static_cast<std::uint8_t>(d)).second) {
          if (seen.size() > cap) throw CapExceeded("BFS state cap exceeded (" + std::to_string(cap) + ")");
          next.push_back(k);
        }
      });
      if (found) return d;
    }
    frontier.swap(next);
  }
  throw DomainError("bfs_distance: goal unreachable (are start and goal on the same labels?)");
}

DistanceTable::DistanceTable(std::size_t n, Generators g, std::size_t cap) : n_(n), gens_(g) {
  check_length(n);
  std::vector<Label> id(n);
  for (std::size_t t = 0; t < n; ++t) id[t] = static_cast<Label>(t + 1);
  std::uint64_t origin = pack_state(id);
  dist_.emplace(origin, 0);
  std::vector<std::uint64_t> frontier{origin}, next;
  std::vector<Label> buf;
  for (int d = 1; !frontier.empty(); ++d) {
    next.clear();
    for (std::uint64_t key : frontier) {
      auto cur = unpack_state(key, n);
      for_each_neighbor(cur, g, buf, [&](std::span<const Label> nb) {
        std::uint64_t k = pack_state(nb);
        if (dist_.emplace(k, static_cast<std::uint8_t>(d)).second) {
          if (dist_.size() > cap) throw CapExceeded("BFS state cap exceeded (" + std::to_string(cap) + ")");
          next.push_back(k);
        }
      });
    }
    frontier.swap(next);
  }
}

int DistanceTable::distance(std::span<const Label> seq) const {
  if (seq.size() != n_) throw DomainError("DistanceTable: length mismatch");
  auto it = dist_.find(pack_state(seq));
  if (it == dist_.end()) throw DomainError("DistanceTable: state not reachable");
  return it->second;
}

std::vector<std::uint64_t> DistanceTable::histogram() const {
  std::vector<std::uint64_t> h;
  for (const auto& [key, d] : dist_) {
    if (h.size() <= d) h.resize(d + 1u, 0);
    ++h[d];
  }
  return h;
}

}  // namespace pperm
