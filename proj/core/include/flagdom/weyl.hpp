#pragma once

// Weyl group operations for the Hermitian types: reflections, the
// involutions s_Delta attached to the strongly orthogonal roots, longest
// elements, and enumeration of the compact Weyl group W_K.

#include <cstdint>
#include <span>
#include <vector>

#include "flagdom/root.hpp"
#include "flagdom/root_system.hpp"
#include "flagdom/weyl_element.hpp"

namespace flagdom {

inline constexpr std::uint64_t kDefaultEnumerationCap = 3628800;  // 10!

/// Number of roots in the first `a` members of the strongly orthogonal set.
struct CayleySet {
  int a = 0;
};

/// The reflection s_r with s_r(r) = -r. ParameterError unless r has the
/// shape +-e_i +- e_j (i != j) or +-2e_i.
WeylElement reflection(const Root& r);

/// The i-th strongly orthogonal noncompact root: 2e_i (type C) or
/// e_i - e_{p+q+1-i} (type A), 1 <= i <= real rank.
Root strongly_orthogonal_root(const RootSystem& rs, int i);

/// s_Delta for Delta = {xi_1..xi_a}. Type C negates e_1..e_a; type A swaps
/// i <-> p+q+1-i for i <= a. ParameterError if a is outside [0, real rank].
WeylElement cayley_involution(const RootSystem& rs, CayleySet delta);

/// Block reversal: i -> n+1-i in type C; i -> p+1-i and p+j -> p+q+1-j in type A.
WeylElement longest_element_K(const RootSystem& rs);

/// Longest element of W for the standard simple system: -1 in type C, the
/// full reversal in type A.
WeylElement longest_element(const RootSystem& rs);

/// Longest element for a transported simple system: frame * w0 * frame^-1.
WeylElement longest_element(const SimpleSystem& ss);

/// |W_K| = n! or p! q!, saturating at UINT64_MAX.
std::uint64_t compact_weyl_order(const RootSystem& rs);
/// |W| = 2^n n! or (p+q)!, saturating.
std::uint64_t weyl_group_order(const RootSystem& rs);

/// W_K in lexicographic one-line order. Iteration yields each element of
/// S_n (type C) or S_p x S_q (type A) once.
class CompactWeylGroup {
 public:
  /// CapacityError if |W_K| exceeds cap.
  explicit CompactWeylGroup(const RootSystem& rs, std::uint64_t cap = kDefaultEnumerationCap);

  std::uint64_t size() const { return size_; }

  class iterator {
   public:
    using value_type = WeylElement;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    const WeylElement& operator*() const { return current_; }
    const WeylElement* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class CompactWeylGroup;
    iterator(std::vector<int> blocks, int dimension);

    std::vector<int> block_starts_;  // 0-based start of each block; last entry = dimension
    std::vector<int> one_line_;      // 0-based images
    WeylElement current_;
    bool done_ = true;
  };

  iterator begin() const;
  iterator end() const { return {}; }

 private:
  std::vector<int> blocks_;
  int dimension_;
  std::uint64_t size_;
};

inline CompactWeylGroup enumerate_WK(const RootSystem& rs, std::uint64_t cap = kDefaultEnumerationCap) {
  return CompactWeylGroup(rs, cap);
}

/// Closure of `generators` under composition, breadth-first from the
/// identity. CapacityError if more than cap elements appear.
std::vector<WeylElement> generate_group(int dimension, std::span<const WeylElement> generators,
                                        std::uint64_t cap);

}  // namespace flagdom
