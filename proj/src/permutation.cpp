#include "pperm/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace pperm {

void Permutation::index_domain() {
  contiguous_ = domain_.empty() || domain_.back() - domain_.front() + 1 ==
                                       static_cast<Label>(domain_.size());
}

Permutation Permutation::identity(std::vector<Label> domain) {
  std::sort(domain.begin(), domain.end());
  if (std::adjacent_find(domain.begin(), domain.end()) != domain.end()) {
    throw DomainError("duplicate label in domain");
  }
  std::vector<Slot> img(domain.size());
  std::iota(img.begin(), img.end(), Slot{0});
  return from_slots(std::move(domain), std::move(img));
}

Permutation Permutation::identity_range(Label lo, Label hi) {
  std::vector<Label> d;
  for (Label x = lo; x <= hi; ++x) d.push_back(x);
  return identity(std::move(d));
}

Permutation Permutation::from_slots(std::vector<Label> sorted_domain, std::vector<Slot> images) {
  if (sorted_domain.size() != images.size()) throw DomainError("image count differs from domain size");
  std::vector<char> seen(images.size(), 0);
  for (Slot s : images) {
    if (s >= images.size() || seen[s]) throw DomainError("images do not form a bijection");
    seen[s] = 1;
  }
  Permutation p;
  p.domain_ = std::move(sorted_domain);
  p.img_ = std::move(images);
  p.index_domain();
  return p;
}

Permutation Permutation::from_map(std::vector<Label> domain, std::vector<Label> images) {
  if (domain.size() != images.size()) throw DomainError("image count differs from domain size");
  std::vector<std::size_t> order(domain.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return domain[a] < domain[b]; });
  Permutation base = identity(domain);
  std::vector<Slot> img(domain.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    Label y = images[order[r]];
    if (!base.contains(y)) throw DomainError("image outside domain: " + std::to_string(y));
    img[r] = base.slot_of(y);
  }
  return from_slots(base.domain_, std::move(img));
}

Permutation Permutation::from_one_line(std::span<const Label> seq) {
  std::vector<Label> d(seq.begin(), seq.end());
  std::sort(d.begin(), d.end());
  return from_map(d, std::vector<Label>(seq.begin(), seq.end()));
}

Permutation Permutation::cycle(std::span<const Label> seq) {
  std::vector<Label> d(seq.begin(), seq.end());
  std::vector<Label> im(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) im[i] = seq[(i + 1) % seq.size()];
  return from_map(std::move(d), std::move(im));
}

Permutation Permutation::from_cycles(const std::vector<std::vector<Label>>& cyc,
                                     std::span<const Label> extra_fixed) {
  std::vector<Label> d, im;
  for (const auto& c : cyc) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      d.push_back(c[i]);
      im.push_back(c[(i + 1) % c.size()]);
    }
  }
  for (Label x : extra_fixed) {
    if (std::find(d.begin(), d.end(), x) == d.end()) {
      d.push_back(x);
      im.push_back(x);
    }
  }
  return from_map(std::move(d), std::move(im));
}

bool Permutation::contains(Label x) const {
  if (domain_.empty()) return false;
  if (contiguous_) return x >= domain_.front() && x <= domain_.back();
  return std::binary_search(domain_.begin(), domain_.end(), x);
}

Slot Permutation::slot_of(Label x) const {
  if (!contains(x)) throw DomainError("label not in domain: " + std::to_string(x));
  if (contiguous_) return static_cast<Slot>(x - domain_.front());
  return static_cast<Slot>(std::lower_bound(domain_.begin(), domain_.end(), x) - domain_.begin());
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

bool Permutation::same_domain(const Permutation& other) const { return domain_ == other.domain_; }

Permutation compose(const Permutation& f, const Permutation& g) {
  if (!f.same_domain(g)) throw DomainError("compose: domain mismatch");
  const auto& fi = f.slots();
  const auto& gi = g.slots();
  std::vector<Slot> img(gi.size());
  for (std::size_t x = 0; x < gi.size(); ++x) img[x] = fi[gi[x]];
  return Permutation::from_slots(f.domain(), std::move(img));
}

Permutation inverse(const Permutation& f) {
  const auto& fi = f.slots();
  std::vector<Slot> img(fi.size());
  for (std::size_t x = 0; x < fi.size(); ++x) img[fi[x]] = static_cast<Slot>(x);
  return Permutation::from_slots(f.domain(), std::move(img));
}

Permutation conjugate(const Permutation& f, const Permutation& alpha) {
  return compose(compose(alpha, f), inverse(alpha));
}

std::size_t CycleDecomposition::odd_count() const {
  return static_cast<std::size_t>(
      std::count_if(cycles.begin(), cycles.end(), [](const auto& c) { return c.size() % 2 == 1; }));
}

std::size_t CycleDecomposition::even_count() const { return count() - odd_count(); }

CycleDecomposition cycles(const Permutation& f) {
  // Slots are in label order, so scanning slots upward visits each cycle
  // first at its smallest label.
  CycleDecomposition out;
  std::vector<char> seen(f.size(), 0);
  for (Slot s = 0; s < f.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Label> c;
    for (Slot t = s; !seen[t]; t = f.slots()[t]) {
      seen[t] = 1;
      c.push_back(f.label(t));
    }
    out.cycles.push_back(std::move(c));
  }
  return out;
}

CycleCounts cycle_counts(const Permutation& f) {
  CycleCounts cc;
  const auto& img = f.slots();
  std::vector<char> seen(img.size(), 0);
  for (std::size_t s = 0; s < img.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t t = s; !seen[t]; t = img[t]) {
      seen[t] = 1;
      ++len;
    }
    ++cc.total;
    (len % 2 ? cc.odd : cc.even) += 1;
  }
  return cc;
}

std::size_t cycle_count(std::span<const Slot> img) {
  std::size_t c = 0;
  std::vector<char> seen(img.size(), 0);
  for (std::size_t s = 0; s < img.size(); ++s) {
    if (seen[s]) continue;
    ++c;
    for (std::size_t t = s; !seen[t]; t = img[t]) seen[t] = 1;
  }
  return c;
}

std::size_t cycle_count(const Permutation& f) { return cycle_count(std::span<const Slot>(f.slots())); }

std::string to_cycle_string(const Permutation& f) {
  std::ostringstream os;
  for (const auto& c : cycles(f).cycles) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

std::string to_one_line_string(const Permutation& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f.label(f.slots()[i]);
  return os.str();
}

namespace {

bool is_sep(char c) { return c == ' ' || c == '\t' || c == ',' || c == '\n' || c == '\r'; }

Label parse_label(std::string_view tok) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  Label v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
    throw ParseError("not an integer label: '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

std::vector<Label> parse_labels(std::string_view text) {
  std::vector<Label> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    if (j > i) out.push_back(parse_label(text.substr(i, j - i)));
    i = j;
  }
  return out;
}

Permutation parse_one_line(std::string_view text) {
  auto seq = parse_labels(text);
  if (seq.empty()) throw ParseError("empty permutation");
  try {
    return Permutation::from_one_line(seq);
  } catch (const DomainError& e) {
    throw ParseError(std::string("not a permutation: ") + e.what());
  }
}

Permutation parse_cycles(std::string_view text) {
  std::vector<std::vector<Label>> cyc;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    std::size_t j = text.find(')', i);
    if (j == std::string_view::npos) throw ParseError("unterminated cycle");
    auto c = parse_labels(text.substr(i + 1, j - i - 1));
    if (c.empty()) throw ParseError("empty cycle");
    cyc.push_back(std::move(c));
    i = j + 1;
  }
  if (cyc.empty()) throw ParseError("no cycles given");
  try {
    return Permutation::from_cycles(cyc);
  } catch (const DomainError& e) {
    throw ParseError(std::string("cycles are not disjoint: ") + e.what());
  }
}

}  // namespace pperm
