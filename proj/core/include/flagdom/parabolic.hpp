#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "flagdom/root.hpp"
#include "flagdom/root_system.hpp"
#include "flagdom/weyl_element.hpp"

namespace flagdom {

/// A subset Phi of a simple system, by 1-based simple index.
class ParabolicSubset {
 public:
  ParabolicSubset() = default;
  explicit ParabolicSubset(std::vector<bool> member_flags) : flags_(std::move(member_flags)) {}

  static ParabolicSubset all(int rank);
  static ParabolicSubset none(int rank);
  /// Every simple root except the listed indices.
  static ParabolicSubset omitting(int rank, const std::vector<int>& omitted);

  int size() const { return static_cast<int>(flags_.size()); }
  bool contains(int i) const { return flags_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<bool>& flags() const { return flags_; }
  std::vector<int> members() const;
  std::vector<int> omitted() const;
  /// Componentwise inclusion; sizes must match.
  bool is_subset_of(const ParabolicSubset& other) const;

  friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;

 private:
  std::vector<bool> flags_;
};

/// Sigma = phi_r (reductive) + phi_n_plus (nilradical) + phi_n_minus (its opposite).
struct RootPartition {
  RootSet phi_r;
  RootSet phi_n_plus;
  RootSet phi_n_minus;
};

/// Positivity is taken relative to `ss` itself, not the standard system.
/// ParameterError if phi.size() != ss.rank().
RootPartition partition(const SimpleSystem& ss, const ParabolicSubset& phi);

/// Sigma(q) = phi_r + phi_n_plus.
RootSet sigma_q(const SimpleSystem& ss, const ParabolicSubset& phi);

/// phi_n_minus intersected with w(phi_n_minus). Empty iff the orbit through
/// w(z) under the isotropy parabolic is open.
RootSet defect_roots(const WeylElement& w, const RootPartition& rp);

/// |phi_n_minus intersect w(phi_n_minus)|.
std::size_t orbit_dimension_defect(const WeylElement& w, const RootPartition& rp);

/// Reflections in the simple roots of Phi; these generate W_Phi.
std::vector<WeylElement> parabolic_generators(const SimpleSystem& ss, const ParabolicSubset& phi);

}  // namespace flagdom
