#pragma once

// Plane permutations: a pair (s, pi) where s is an n-cycle written as a
// sequence s_0 ... s_{n-1} (s_0 anchors the linear order <_s) and pi is an
// arbitrary permutation of the same labels. The diagonal is
// D = s pi^{-1}, i.e. D(pi(s_{i-1})) = s_i cyclically.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pperm/permutation.hpp"

namespace pperm {

/// Positions into s (0-based) selecting the blocks [s_i..s_j] and
/// [s_k..s_l]; requires 1 <= i <= j < k <= l <= n-1. j+1 == k is a
/// transpose.
struct BlockInterchange {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t l = 0;

  bool is_transpose() const { return j + 1 == k; }
  friend bool operator==(const BlockInterchange&, const BlockInterchange&) = default;
};

/// Throws DomainError unless h is valid for a sequence of length n.
void validate(const BlockInterchange& h, std::size_t n);
std::string to_string(const BlockInterchange& h);

/// Swap the two blocks of a sequence.
std::vector<Label> swap_blocks(std::span<const Label> seq, const BlockInterchange& h);

enum class TransposeCase {
  Case1, Case2, Case3, Case4, Case5, Case6,
  CaseA, CaseB, CaseC, CaseD, CaseE,
  NonIncreasing,
};

std::string_view to_string(TransposeCase c);
/// Cycle-count change implied by the case; nullopt for NonIncreasing
/// (where it is -2 or 0).
std::optional<int> expected_cycle_delta(TransposeCase c);

class PlanePermutation {
 public:
  PlanePermutation(std::vector<Label> s, Permutation pi);
  /// The unique plane permutation with top row s and the given diagonal:
  /// pi = D^{-1} s.
  static PlanePermutation with_diagonal(std::vector<Label> s, const Permutation& diagonal);

  const std::vector<Label>& s() const { return s_; }
  const Permutation& pi() const { return pi_; }
  std::size_t n() const { return s_.size(); }

  std::size_t position(Label x) const { return pos_[pi_.slot_of(x)]; }
  /// a <_s b
  bool s_less(Label a, Label b) const { return position(a) < position(b); }

  Permutation s_cycle() const { return Permutation::cycle(s_); }
  Permutation diagonal() const;
  /// pi(s_0) ... pi(s_{n-1})
  std::vector<Label> bottom_row() const;
  /// Same pi, top row rotated left by r.
  PlanePermutation rotated(std::size_t r) const;

  friend bool operator==(const PlanePermutation& a, const PlanePermutation& b) {
    return a.s_ == b.s_ && a.pi_ == b.pi_;
  }

 private:
  std::vector<Label> s_;
  Permutation pi_;
  std::vector<std::uint32_t> pos_;  // indexed by slot
};

/// Elements s_i with s_i <_s pi(s_i), listed in s order.
std::vector<Label> exceedances(const PlanePermutation& p);
std::vector<Label> anti_exceedances(const PlanePermutation& p);
/// Anti-exceedances other than pi^{-1}(min_s C) for each pi-cycle C.
std::vector<Label> ntaes(const PlanePermutation& p);
std::size_t exc_count(const PlanePermutation& p);
/// Anti-exceedances of an arbitrary permutation f with respect to <_s.
std::size_t anti_exceedance_count(const Permutation& f, const PlanePermutation& p);
/// <_s-minimum of every pi-cycle, in s order.
std::vector<Label> cycle_minima(const PlanePermutation& p);
/// <_s-minimum of the pi-cycle containing x.
Label cycle_minimum(const PlanePermutation& p, Label x);

/// True iff Exc is the same under all n rotations of s.
bool exc_count_invariance_check(const PlanePermutation& p);

/// chi_h: swap the blocks of s, pi^h = D^{-1} s^h (diagonal preserved).
PlanePermutation apply(const PlanePermutation& p, const BlockInterchange& h);
/// The block interchange undoing h on s^h.
BlockInterchange inverse_of(const BlockInterchange& h);

TransposeCase classify(const PlanePermutation& p, const BlockInterchange& h);

struct SliceResult {
  PlanePermutation result;
  BlockInterchange transpose;
  /// Minima of the three labeled cycles, increasing in the new <_s.
  std::array<Label, 3> labeled_minima;
  /// Present when the NTAE survives the transpose (it then lies in the
  /// labeled cycle with the largest minimum).
  std::optional<Label> distinguished;
};

struct GlueResult {
  PlanePermutation result;
  Label ntae;
};

/// Case-2 transpose singled out by the NTAE eps. Throws DomainError if eps
/// is not an NTAE.
SliceResult slice(const PlanePermutation& p, Label eps);
/// Inverse of slice: Case-1 transpose on three labeled cycles given by their
/// minima (which must be increasing in <_s), with the optional distinguished
/// NTAE in the third cycle.
GlueResult glue(const PlanePermutation& p, Label c1, Label c2, Label c3,
                std::optional<Label> distinguished = std::nullopt);

/// (alpha s alpha^{-1}, alpha pi alpha^{-1}); the top row becomes alpha(s_i).
PlanePermutation conjugate(const PlanePermutation& p, const Permutation& alpha);

/// Two-row rendering: top row s, bottom row pi(s_i), columns right-aligned.
std::string to_two_row_string(const PlanePermutation& p);
nlohmann::json to_json(const PlanePermutation& p);
PlanePermutation plane_from_json(const nlohmann::json& j);

}  // namespace pperm
