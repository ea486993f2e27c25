#include "flagdom/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "flagdom/error.hpp"

namespace flagdom {

// ---------------------------------------------------------------------------
// WeylElement

namespace {

void check_same_dimension(int a, int b, const char* what) {
  if (a != b) {
    throw ParameterError(std::string(what) + ": dimension mismatch " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

WeylElement WeylElement::identity(int n) {
  if (n < 0) throw ParameterError("negative dimension");
  WeylElement w;
  w.images_.resize(static_cast<std::size_t>(n));
  std::iota(w.images_.begin(), w.images_.end(), 0);
  w.signs_.assign(static_cast<std::size_t>(n), 1);
  return w;
}

WeylElement WeylElement::from_one_line(const std::vector<int>& images, const std::vector<int>& signs) {
  const std::size_t n = images.size();
  if (!signs.empty() && signs.size() != n) {
    throw ParameterError("one-line notation: " + std::to_string(images.size()) + " images but " +
                         std::to_string(signs.size()) + " signs");
  }
  WeylElement w;
  w.images_.resize(n);
  w.signs_.assign(n, 1);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const int img = images[i];
    if (img < 1 || static_cast<std::size_t>(img) > n || seen[static_cast<std::size_t>(img - 1)]) {
      throw ParameterError("one-line notation is not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(img - 1)] = true;
    w.images_[i] = img - 1;
    if (!signs.empty()) {
      if (signs[i] != 1 && signs[i] != -1) throw ParameterError("signs must be +1 or -1");
      w.signs_[i] = signs[i];
    }
  }
  return w;
}

WeylElement WeylElement::sign_change(int n, const std::vector<int>& flipped) {
  WeylElement w = identity(n);
  for (int i : flipped) {
    if (i < 1 || i > n) throw ParameterError("sign change index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    w.signs_[static_cast<std::size_t>(i - 1)] = -1;
  }
  return w;
}

WeylElement WeylElement::transposition(int n, int i, int j, bool negate) {
  if (i < 1 || i > n || j < 1 || j > n || i == j) {
    throw ParameterError("invalid transposition (" + std::to_string(i) + " " + std::to_string(j) + ") in dimension " +
                         std::to_string(n));
  }
  WeylElement w = identity(n);
  std::swap(w.images_[static_cast<std::size_t>(i - 1)], w.images_[static_cast<std::size_t>(j - 1)]);
  if (negate) {
    w.signs_[static_cast<std::size_t>(i - 1)] = -1;
    w.signs_[static_cast<std::size_t>(j - 1)] = -1;
  }
  return w;
}

bool WeylElement::is_unsigned() const {
  return std::all_of(signs_.begin(), signs_.end(), [](int s) { return s == 1; });
}

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) || signs_[i] != 1) return false;
  }
  return true;
}

Root WeylElement::apply(const Root& r) const {
  check_same_dimension(dimension(), r.dimension(), "apply");
  std::vector<int> out(images_.size(), 0);
  const auto in = r.coords();
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out[static_cast<std::size_t>(images_[i])] = signs_[i] * in[i];
  }
  return Root(std::move(out));
}

RootSet WeylElement::apply(const RootSet& roots) const {
  RootSet out;
  for (const Root& r : roots) out.insert(apply(r));
  return out;
}

WeylElement WeylElement::after(const WeylElement& other) const {
  check_same_dimension(dimension(), other.dimension(), "compose");
  WeylElement w;
  w.images_.resize(images_.size());
  w.signs_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto mid = static_cast<std::size_t>(other.images_[i]);
    w.images_[i] = images_[mid];
    w.signs_[i] = other.signs_[i] * signs_[mid];
  }
  return w;
}

WeylElement WeylElement::inverse() const {
  WeylElement w;
  w.images_.resize(images_.size());
  w.signs_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto img = static_cast<std::size_t>(images_[i]);
    w.images_[img] = static_cast<int>(i);
    w.signs_[img] = signs_[i];
  }
  return w;
}

std::string WeylElement::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ' ';
    os << signs_[i] * (images_[i] + 1);
  }
  os << ']';
  return os.str();
}

std::size_t WeylElement::hash() const noexcept {
  std::size_t h = images_.size();
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const std::size_t v = static_cast<std::size_t>(signs_[i] * (images_[i] + 1) + 64);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Reflections and distinguished elements

WeylElement reflection(const Root& r) {
  std::vector<int> support;
  for (int i = 1; i <= r.dimension(); ++i) {
    if (r.at(i) != 0) support.push_back(i);
  }
  const int n = r.dimension();
  if (support.size() == 1 && std::abs(r.at(support[0])) == 2) {
    return WeylElement::sign_change(n, {support[0]});
  }
  if (support.size() == 2 && std::abs(r.at(support[0])) == 1 && std::abs(r.at(support[1])) == 1) {
    const bool same_sign = r.at(support[0]) == r.at(support[1]);
    return WeylElement::transposition(n, support[0], support[1], same_sign);
  }
  throw ParameterError("no reflection for " + r.to_string() + ": not of the form +-e_i+-e_j or +-2e_i");
}

Root strongly_orthogonal_root(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.real_rank()) {
    throw ParameterError("strongly orthogonal index " + std::to_string(i) + " outside 1.." +
                         std::to_string(rs.real_rank()));
  }
  const int n = rs.dimension();
  if (rs.kind() == RootKind::TypeC) return 2 * Root::basis(n, i);
  return Root::pair(n, i, 1, n + 1 - i, -1);
}

WeylElement cayley_involution(const RootSystem& rs, CayleySet delta) {
  if (delta.a < 0 || delta.a > rs.real_rank()) {
    throw ParameterError("Cayley set size a=" + std::to_string(delta.a) + " outside 0.." +
                         std::to_string(rs.real_rank()));
  }
  const int n = rs.dimension();
  if (rs.kind() == RootKind::TypeC) {
    std::vector<int> flipped(static_cast<std::size_t>(delta.a));
    std::iota(flipped.begin(), flipped.end(), 1);
    return WeylElement::sign_change(n, flipped);
  }
  std::vector<int> one_line(static_cast<std::size_t>(n));
  std::iota(one_line.begin(), one_line.end(), 1);
  for (int i = 1; i <= delta.a; ++i) {
    std::swap(one_line[static_cast<std::size_t>(i - 1)], one_line[static_cast<std::size_t>(n - i)]);
  }
  return WeylElement::from_one_line(one_line);
}

WeylElement longest_element_K(const RootSystem& rs) {
  const int n = rs.dimension();
  std::vector<int> one_line(static_cast<std::size_t>(n));
  if (rs.kind() == RootKind::TypeC) {
    for (int i = 1; i <= n; ++i) one_line[static_cast<std::size_t>(i - 1)] = n + 1 - i;
  } else {
    const int p = rs.p();
    const int q = rs.q();
    for (int i = 1; i <= p; ++i) one_line[static_cast<std::size_t>(i - 1)] = p + 1 - i;
    for (int j = 1; j <= q; ++j) one_line[static_cast<std::size_t>(p + j - 1)] = p + q + 1 - j;
  }
  return WeylElement::from_one_line(one_line);
}

WeylElement longest_element(const RootSystem& rs) {
  const int n = rs.dimension();
  if (rs.kind() == RootKind::TypeC) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    return WeylElement::sign_change(n, all);
  }
  std::vector<int> one_line(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) one_line[static_cast<std::size_t>(i - 1)] = n + 1 - i;
  return WeylElement::from_one_line(one_line);
}

WeylElement longest_element(const SimpleSystem& ss) {
  const WeylElement& frame = ss.frame();
  return frame.after(longest_element(ss.root_system())).after(frame.inverse());
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f = saturating_mul(f, static_cast<std::uint64_t>(i));
  return f;
}

std::vector<int> compact_blocks(const RootSystem& rs) {
  if (rs.kind() == RootKind::TypeC) return {rs.dimension()};
  return {rs.p(), rs.q()};
}

}  // namespace

std::uint64_t compact_weyl_order(const RootSystem& rs) {
  std::uint64_t order = 1;
  for (int b : compact_blocks(rs)) order = saturating_mul(order, factorial(b));
  return order;
}

std::uint64_t weyl_group_order(const RootSystem& rs) {
  const int n = rs.dimension();
  if (rs.kind() == RootKind::TypeA) return factorial(n);
  std::uint64_t order = factorial(n);
  for (int i = 0; i < n; ++i) order = saturating_mul(order, 2);
  return order;
}

// ---------------------------------------------------------------------------
// CompactWeylGroup

CompactWeylGroup::CompactWeylGroup(const RootSystem& rs, std::uint64_t cap)
    : blocks_(compact_blocks(rs)), dimension_(rs.dimension()), size_(compact_weyl_order(rs)) {
  if (size_ > cap) {
    throw CapacityError("|W_K| = " + std::to_string(size_) + " for " + rs.to_string() + " exceeds the enumeration cap",
                        cap);
  }
}

CompactWeylGroup::iterator CompactWeylGroup::begin() const { return iterator(blocks_, dimension_); }

CompactWeylGroup::iterator::iterator(std::vector<int> blocks, int dimension) : done_(false) {
  int start = 0;
  for (int b : blocks) {
    block_starts_.push_back(start);
    start += b;
  }
  block_starts_.push_back(dimension);
  one_line_.resize(static_cast<std::size_t>(dimension));
  std::iota(one_line_.begin(), one_line_.end(), 0);
  current_ = WeylElement::identity(dimension);
}

CompactWeylGroup::iterator& CompactWeylGroup::iterator::operator++() {
  if (done_) return *this;
  // Odometer over blocks, the last block varying fastest.
  for (std::size_t b = block_starts_.size() - 1; b-- > 0;) {
    auto first = one_line_.begin() + block_starts_[b];
    auto last = one_line_.begin() + block_starts_[b + 1];
    if (std::next_permutation(first, last)) {
      std::vector<int> images(one_line_.size());
      for (std::size_t i = 0; i < images.size(); ++i) images[i] = one_line_[i] + 1;
      current_ = WeylElement::from_one_line(images);
      return *this;
    }
  }
  done_ = true;
  return *this;
}

std::vector<WeylElement> generate_group(int dimension, std::span<const WeylElement> generators, std::uint64_t cap) {
  const WeylElement id = WeylElement::identity(dimension);
  std::unordered_set<WeylElement, WeylElementHash> seen{id};
  std::vector<WeylElement> elements{id};
  std::deque<WeylElement> frontier{id};
  while (!frontier.empty()) {
    const WeylElement w = std::move(frontier.front());
    frontier.pop_front();
    for (const WeylElement& g : generators) {
      WeylElement next = g.after(w);
      if (seen.insert(next).second) {
        if (elements.size() >= cap) throw CapacityError("generated group exceeds the element cap", cap);
        elements.push_back(next);
        frontier.push_back(std::move(next));
      }
    }
  }
  return elements;
}

}  // namespace flagdom
