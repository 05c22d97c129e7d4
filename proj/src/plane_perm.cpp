#include "pperm/plane_perm.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "pperm/exact.hpp"

namespace pperm {

void validate(const BlockInterchange& h, std::size_t n) {
  if (!(1 <= h.i && h.i <= h.j && h.j < h.k && h.k <= h.l && h.l + 1 <= n)) {
    throw DomainError("invalid block interchange " + to_string(h) + " for length " + std::to_string(n));
  }
}

std::string to_string(const BlockInterchange& h) {
  std::ostringstream os;
  os << '(' << h.i << ',' << h.j << ',' << h.k << ',' << h.l << ')';
  return os.str();
}

std::vector<Label> swap_blocks(std::span<const Label> seq, const BlockInterchange& h) {
  validate(h, seq.size());
  std::vector<Label> out;
  out.reserve(seq.size());
  auto put = [&](std::size_t a, std::size_t b) {  // inclusive [a, b]
    for (std::size_t t = a; t <= b && t < seq.size(); ++t) out.push_back(seq[t]);
  };
  put(0, h.i - 1);
  put(h.k, h.l);
  if (h.j + 1 <= h.k - 1) put(h.j + 1, h.k - 1);
  put(h.i, h.j);
  if (h.l + 1 < seq.size()) put(h.l + 1, seq.size() - 1);
  return out;
}

std::string_view to_string(TransposeCase c) {
  switch (c) {
    case TransposeCase::Case1: return "Case1";
    case TransposeCase::Case2: return "Case2";
    case TransposeCase::Case3: return "Case3";
    case TransposeCase::Case4: return "Case4";
    case TransposeCase::Case5: return "Case5";
    case TransposeCase::Case6: return "Case6";
    case TransposeCase::CaseA: return "CaseA";
    case TransposeCase::CaseB: return "CaseB";
    case TransposeCase::CaseC: return "CaseC";
    case TransposeCase::CaseD: return "CaseD";
    case TransposeCase::CaseE: return "CaseE";
    case TransposeCase::NonIncreasing: return "NonIncreasing";
  }
  return "?";
}

std::optional<int> expected_cycle_delta(TransposeCase c) {
  switch (c) {
    case TransposeCase::Case1: return -2;
    case TransposeCase::Case2: return 2;
    case TransposeCase::Case3:
    case TransposeCase::Case4:
    case TransposeCase::Case5:
    case TransposeCase::Case6: return 0;
    case TransposeCase::NonIncreasing: return std::nullopt;
    default: return 2;
  }
}

PlanePermutation::PlanePermutation(std::vector<Label> s, Permutation pi)
    : s_(std::move(s)), pi_(std::move(pi)), pos_(pi_.size()) {
  if (s_.size() != pi_.size()) throw DomainError("top row length differs from permutation size");
  std::vector<char> seen(pi_.size(), 0);
  for (std::size_t i = 0; i < s_.size(); ++i) {
    Slot sl = pi_.slot_of(s_[i]);
    if (seen[sl]) throw DomainError("top row repeats a label");
    seen[sl] = 1;
    pos_[sl] = static_cast<std::uint32_t>(i);
  }
}

PlanePermutation PlanePermutation::with_diagonal(std::vector<Label> s, const Permutation& diagonal) {
  Permutation sc = Permutation::cycle(s);
  if (!sc.same_domain(diagonal)) throw DomainError("diagonal and top row have different labels");
  Permutation pi = compose(inverse(diagonal), sc);
  return PlanePermutation(std::move(s), std::move(pi));
}

Permutation PlanePermutation::diagonal() const { return compose(s_cycle(), inverse(pi_)); }

std::vector<Label> PlanePermutation::bottom_row() const {
  std::vector<Label> b(s_.size());
  for (std::size_t i = 0; i < s_.size(); ++i) b[i] = pi_(s_[i]);
  return b;
}

PlanePermutation PlanePermutation::rotated(std::size_t r) const {
  std::vector<Label> s2(s_.size());
  for (std::size_t i = 0; i < s_.size(); ++i) s2[i] = s_[(i + r) % s_.size()];
  return PlanePermutation(std::move(s2), pi_);
}

std::vector<Label> exceedances(const PlanePermutation& p) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < p.n(); ++i) {
    if (p.position(p.pi()(p.s()[i])) > i) out.push_back(p.s()[i]);
  }
  return out;
}

std::vector<Label> anti_exceedances(const PlanePermutation& p) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < p.n(); ++i) {
    if (p.position(p.pi()(p.s()[i])) <= i) out.push_back(p.s()[i]);
  }
  return out;
}

std::size_t exc_count(const PlanePermutation& p) { return exceedances(p).size(); }

std::size_t anti_exceedance_count(const Permutation& f, const PlanePermutation& p) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < p.n(); ++i) {
    if (p.position(f(p.s()[i])) <= i) ++c;
  }
  return c;
}

std::vector<Label> cycle_minima(const PlanePermutation& p) {
  std::vector<char> seen(p.n(), 0);
  std::vector<Label> out;
  // Walking s left to right, the first unseen element of a cycle is its minimum.
  for (Label x : p.s()) {
    if (seen[p.pi().slot_of(x)]) continue;
    out.push_back(x);
    Label y = x;
    do {
      seen[p.pi().slot_of(y)] = 1;
      y = p.pi()(y);
    } while (y != x);
  }
  return out;
}

Label cycle_minimum(const PlanePermutation& p, Label x) {
  Label best = x;
  for (Label y = p.pi()(x); y != x; y = p.pi()(y)) {
    if (p.s_less(y, best)) best = y;
  }
  return best;
}

std::vector<Label> ntaes(const PlanePermutation& p) {
  Permutation inv = inverse(p.pi());
  std::vector<Label> trivial;
  for (Label m : cycle_minima(p)) trivial.push_back(inv(m));
  std::vector<Label> out;
  for (Label x : anti_exceedances(p)) {
    if (std::find(trivial.begin(), trivial.end(), x) == trivial.end()) out.push_back(x);
  }
  return out;
}

bool exc_count_invariance_check(const PlanePermutation& p) {
  const std::size_t base = exc_count(p);
  for (std::size_t r = 1; r < p.n(); ++r) {
    if (exc_count(p.rotated(r)) != base) return false;
  }
  return true;
}

PlanePermutation apply(const PlanePermutation& p, const BlockInterchange& h) {
  validate(h, p.n());
  std::vector<Label> sh = swap_blocks(p.s(), h);
  // pi^h = D^{-1} s^h with D^{-1} = pi s^{-1}, so pi^h(x) = pi(s^{-1}(s^h(x))).
  const auto& dom = p.pi().domain();
  std::vector<Label> images(p.n());
  const std::size_t n = p.n();
  std::vector<Label> next_h(n);  // s^h successor, by slot
  for (std::size_t t = 0; t < n; ++t) next_h[p.pi().slot_of(sh[t])] = sh[(t + 1) % n];
  for (std::size_t slot = 0; slot < n; ++slot) {
    Label succ = next_h[slot];
    std::size_t ps = p.position(succ);
    Label pred = p.s()[(ps + n - 1) % n];
    images[slot] = p.pi()(pred);
  }
  return PlanePermutation(std::move(sh), Permutation::from_map(dom, std::move(images)));
}

BlockInterchange inverse_of(const BlockInterchange& h) {
  const std::size_t b = h.l - h.k + 1;
  const std::size_t m = h.k - h.j - 1;
  return BlockInterchange{h.i, h.i + b - 1, h.i + b + m, h.l};
}

TransposeCase classify(const PlanePermutation& p, const BlockInterchange& h) {
  validate(h, p.n());
  const auto& s = p.s();
  const auto& pi = p.pi();
  // order[slot] = step index along the pi-cycle of s_{i-1}, or -1.
  std::vector<long> order(p.n(), -1);
  const Label start = s[h.i - 1];
  long step = 0;
  Label y = start;
  do {
    order[pi.slot_of(y)] = step++;
    y = pi(y);
  } while (y != start);
  auto at = [&](Label x) { return order[pi.slot_of(x)]; };
  auto same_cycle = [&](Label a, Label b) {
    for (Label z = pi(a); ; z = pi(z)) {
      if (z == b) return true;
      if (z == a) return false;
    }
  };

  if (h.is_transpose()) {
    const Label xj = s[h.j], xl = s[h.l];
    const bool j_in = at(xj) >= 0, l_in = at(xl) >= 0;
    if (j_in && l_in) return at(xl) < at(xj) ? TransposeCase::Case2 : TransposeCase::Case3;
    if (j_in) return TransposeCase::Case4;
    if (l_in) return TransposeCase::Case6;
    return same_cycle(xj, xl) ? TransposeCase::Case5 : TransposeCase::Case1;
  }

  const Label xj = s[h.j], xk = s[h.k - 1], xl = s[h.l];
  const long oj = at(xj), ok = at(xk), ol = at(xl);
  if (oj >= 0 && ok >= 0 && ol >= 0) {
    if (oj < ol && ol < ok) return TransposeCase::CaseA;
    if (ok < oj && oj < ol) return TransposeCase::CaseB;
    if (ok < ol && ol < oj) return TransposeCase::CaseC;
    if (ol < oj && oj < ok) return TransposeCase::CaseD;
    return TransposeCase::NonIncreasing;
  }
  if (ok >= 0 && oj < 0 && ol < 0 && same_cycle(xj, xl)) return TransposeCase::CaseE;
  return TransposeCase::NonIncreasing;
}

namespace {

bool increasing_in_s(const PlanePermutation& p, Label a, Label b, Label c) {
  return p.position(a) < p.position(b) && p.position(b) < p.position(c);
}

}  // namespace

SliceResult slice(const PlanePermutation& p, Label eps) {
  auto nt = ntaes(p);
  if (std::find(nt.begin(), nt.end(), eps) == nt.end()) {
    throw DomainError("slice: " + std::to_string(eps) + " is not an NTAE");
  }
  const Label first = cycle_minimum(p, eps);  // s_{i-1}
  const Label sj = p.pi()(eps);               // s_j
  // s_l: the <_s-smallest element of the cycle segment pi(first) .. eps
  // that lies after s_j.
  std::optional<Label> sl;
  for (Label y = p.pi()(first);; y = p.pi()(y)) {
    if (p.s_less(sj, y) && (!sl || p.s_less(y, *sl))) sl = y;
    if (y == eps) break;
  }
  if (!sl) throw InvariantBreach("slice: no element after s_j in the segment");
  const std::size_t i = p.position(first) + 1;
  const std::size_t j = p.position(sj);
  const std::size_t l = p.position(*sl);
  BlockInterchange h{i, j, j + 1, l};
  PlanePermutation q = apply(p, h);

  const Label sj_min = cycle_minimum(q, sj);
  std::array<Label, 3> minima{first, *sl, sj_min};
  std::optional<Label> dist;
  if (sj_min != sj) dist = eps;
  return SliceResult{std::move(q), h, minima, dist};
}

GlueResult glue(const PlanePermutation& p, Label c1, Label c2, Label c3, std::optional<Label> distinguished) {
  for (Label c : {c1, c2, c3}) {
    if (cycle_minimum(p, c) != c) throw DomainError("glue: " + std::to_string(c) + " is not a cycle minimum");
  }
  if (!increasing_in_s(p, c1, c2, c3)) {
    throw DomainError("glue: labeled minima are not strictly increasing in <_s");
  }
  Label third = c3;
  if (distinguished) {
    const Label e = *distinguished;
    if (cycle_minimum(p, e) != c3) throw DomainError("glue: distinguished NTAE not in the third labeled cycle");
    auto nt = ntaes(p);
    if (std::find(nt.begin(), nt.end(), e) == nt.end()) throw DomainError("glue: distinguished element is not an NTAE");
    third = p.pi()(e);
  }
  const std::size_t a = p.position(c1), b = p.position(c2), c = p.position(third);
  BlockInterchange h{a + 1, b, b + 1, c};
  PlanePermutation q = apply(p, h);
  Label eps = inverse(q.pi())(third);
  return GlueResult{std::move(q), eps};
}

PlanePermutation conjugate(const PlanePermutation& p, const Permutation& alpha) {
  if (!alpha.same_domain(p.pi())) throw DomainError("conjugate: domain mismatch");
  std::vector<Label> s2(p.n());
  for (std::size_t i = 0; i < p.n(); ++i) s2[i] = alpha(p.s()[i]);
  return PlanePermutation(std::move(s2), conjugate(p.pi(), alpha));
}

std::string to_two_row_string(const PlanePermutation& p) {
  auto bottom = p.bottom_row();
  std::size_t w = 1;
  for (std::size_t i = 0; i < p.n(); ++i) {
    w = std::max({w, std::to_string(p.s()[i]).size(), std::to_string(bottom[i]).size()});
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < p.n(); ++i) os << (i ? " " : "") << std::setw(static_cast<int>(w)) << p.s()[i];
  os << '\n';
  for (std::size_t i = 0; i < p.n(); ++i) os << (i ? " " : "") << std::setw(static_cast<int>(w)) << bottom[i];
  return os.str();
}

nlohmann::json to_json(const PlanePermutation& p) {
  return nlohmann::json{{"s", p.s()}, {"pi_bottom", p.bottom_row()}};
}

PlanePermutation plane_from_json(const nlohmann::json& j) {
  auto s = j.at("s").get<std::vector<Label>>();
  auto bottom = j.at("pi_bottom").get<std::vector<Label>>();
  return PlanePermutation(s, Permutation::from_map(s, bottom));
}

}  // namespace pperm
