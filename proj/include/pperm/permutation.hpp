#pragma once

// Permutations over finite sets of signed integer labels.
//
// Composition convention, used throughout the library:
//   compose(f, g)(x) == f(g(x))   (right factor applied first)

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pperm {

using Label = std::int64_t;
using Slot = std::uint32_t;

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bijection on a finite, sorted set of labels. Images are stored densely
/// as slot indices into the sorted domain.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::vector<Label> domain);
  /// Identity on the integer range [lo, hi].
  static Permutation identity_range(Label lo, Label hi);
  /// x -> images[i] for x = domain[i]; domain need not be sorted.
  static Permutation from_map(std::vector<Label> domain, std::vector<Label> images);
  /// One-line form over the sorted set of the given labels.
  static Permutation from_one_line(std::span<const Label> seq);
  /// The cycle (seq[0] seq[1] ... seq[m-1]) on exactly the labels of seq.
  static Permutation cycle(std::span<const Label> seq);
  /// Product of disjoint cycles; domain is the union of the listed labels
  /// and of `extra_fixed`.
  static Permutation from_cycles(const std::vector<std::vector<Label>>& cycles,
                                 std::span<const Label> extra_fixed = {});
  /// Build directly from slot images over a sorted, duplicate-free domain.
  static Permutation from_slots(std::vector<Label> sorted_domain, std::vector<Slot> images);

  std::size_t size() const { return domain_.size(); }
  const std::vector<Label>& domain() const { return domain_; }
  const std::vector<Slot>& slots() const { return img_; }

  bool contains(Label x) const;
  /// Slot of a label; throws DomainError if absent.
  Slot slot_of(Label x) const;
  Label label(Slot s) const { return domain_[s]; }
  Label operator()(Label x) const { return domain_[img_[slot_of(x)]]; }

  bool is_identity() const;
  bool same_domain(const Permutation& other) const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.domain_ == b.domain_ && a.img_ == b.img_;
  }

 private:
  std::vector<Label> domain_;
  std::vector<Slot> img_;
  bool contiguous_ = true;

  void index_domain();
};

/// compose(f, g)(x) = f(g(x)). Throws DomainError on domain mismatch.
Permutation compose(const Permutation& f, const Permutation& g);
Permutation inverse(const Permutation& f);
/// alpha f alpha^{-1}
Permutation conjugate(const Permutation& f, const Permutation& alpha);

struct CycleDecomposition {
  /// Each cycle starts at its numerically smallest label; cycles sorted by
  /// that label.
  std::vector<std::vector<Label>> cycles;

  std::size_t count() const { return cycles.size(); }
  std::size_t odd_count() const;
  std::size_t even_count() const;
};

CycleDecomposition cycles(const Permutation& f);

struct CycleCounts {
  std::size_t total = 0;
  std::size_t odd = 0;
  std::size_t even = 0;
};

/// C, C_odd and C_ev without materializing the cycles.
CycleCounts cycle_counts(const Permutation& f);
std::size_t cycle_count(const Permutation& f);
/// Cycle count of a slot-image array.
std::size_t cycle_count(std::span<const Slot> images);

/// Cycle form including fixed points, e.g. "(0)(1)(2 3 4)".
std::string to_cycle_string(const Permutation& f);
/// Images of the sorted domain, space separated: "3 2 1".
std::string to_one_line_string(const Permutation& f);

std::vector<Label> parse_labels(std::string_view text);
Permutation parse_one_line(std::string_view text);
/// "(0 2)(1 3)"; the domain is the set of labels mentioned.
Permutation parse_cycles(std::string_view text);

}  // namespace pperm
