#pragma once

// Exact integer roots in the standard basis e_1..e_N. Basis indices in this
// API are 1-based, matching the usual notation e_i.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace flagdom {

enum class RootKind { TypeA, TypeC };

const char* to_string(RootKind kind);

/// An integer coordinate vector over e_1..e_N. Ordered lexicographically.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coords) : coords_(std::move(coords)) {}
  Root(std::initializer_list<int> coords) : coords_(coords) {}

  /// Unit vector e_i in dimension n.
  static Root basis(int n, int i);
  /// sign_i e_i + sign_j e_j. With i == j and equal signs this is +-2 e_i.
  static Root pair(int n, int i, int sign_i, int j, int sign_j);

  int dimension() const { return static_cast<int>(coords_.size()); }
  std::span<const int> coords() const { return coords_; }
  /// Coefficient of e_i.
  int at(int i) const { return coords_.at(static_cast<std::size_t>(i - 1)); }
  bool is_zero() const;

  Root operator-() const;
  friend Root operator+(const Root& lhs, const Root& rhs);
  friend Root operator-(const Root& lhs, const Root& rhs) { return lhs + (-rhs); }
  friend Root operator*(int k, const Root& r);

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

  /// e.g. "e1-e3", "2e2", "-e1-e2".
  std::string to_string() const;

 private:
  std::vector<int> coords_;
};

using RootSet = std::set<Root>;

/// True iff r is a root of the given kind in dimension r.dimension():
/// e_i - e_j (i != j) for type A; +-e_i +- e_j (i < j) or +-2e_i for type C.
bool is_root(RootKind kind, const Root& r);

RootSet negated(const RootSet& roots);
RootSet intersection(const RootSet& a, const RootSet& b);

std::string to_string(const RootSet& roots);

}  // namespace flagdom
