#pragma once

// Flag-domain configurations in the Hermitian symmetric spaces of types CI
// (Sp(2n,R)) and AIII (SU(p,q)), and the generic 1-connectivity decision.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "flagdom/parabolic.hpp"
#include "flagdom/root.hpp"
#include "flagdom/root_system.hpp"
#include "flagdom/weyl.hpp"

namespace flagdom {

/// A nonempty subset of {1..a+1}, stored as a bitmask (bit i-1 for index i).
/// Indexes the dimension sequences s and t; index a+1 is the base Grassmannian
/// factor, which is always present in the flag.
class KeepSet {
 public:
  KeepSet() = default;
  explicit KeepSet(std::uint32_t mask) : mask_(mask) {}
  static KeepSet from_indices(const std::vector<int>& indices);
  /// {1..a+1}.
  static KeepSet full(int a);

  std::uint32_t mask() const { return mask_; }
  bool contains(int i) const { return i >= 1 && i <= 32 && ((mask_ >> (i - 1)) & 1u) != 0; }
  bool empty() const { return mask_ == 0; }
  std::vector<int> indices() const;
  bool is_subset_of(const KeepSet& other) const { return (mask_ & ~other.mask_) == 0; }

  /// "1;2;3"
  std::string to_string() const;

  friend bool operator==(const KeepSet&, const KeepSet&) = default;
  friend auto operator<=>(const KeepSet&, const KeepSet&) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// D_a in the Lagrangian Grassmannian, 0 <= a <= n.
struct CIHermitian {
  int n = 0;
  int a = 0;
  friend bool operator==(const CIHermitian&, const CIHermitian&) = default;
};

/// D_{m,a} of isotropic flags V_1 (dim m) in V_2 (dim n), 0 < m <= a < n.
struct CIFibered {
  int n = 0;
  int a = 0;
  int m = 0;
  friend bool operator==(const CIFibered&, const CIFibered&) = default;
};

/// D_a in Gr_p(C^{p+q}), 1 <= p <= q, 0 <= a <= p.
struct AIIIHermitian {
  int p = 0;
  int q = 0;
  int a = 0;
  friend bool operator==(const AIIIHermitian&, const AIIIHermitian&) = default;
};

/// D_{s'} for the subsequence s' of s_i = i (i <= a), s_{a+1} = p.
struct AIIIFiberedS {
  int p = 0;
  int q = 0;
  int a = 0;
  KeepSet keep;
  friend bool operator==(const AIIIFiberedS&, const AIIIFiberedS&) = default;
};

/// D_{t'} for the subsequence t' of t_i = p+q-i (i <= a), t_{a+1} = p.
struct AIIIFiberedT {
  int p = 0;
  int q = 0;
  int a = 0;
  KeepSet keep;
  friend bool operator==(const AIIIFiberedT&, const AIIIFiberedT&) = default;
};

using DomainSpec = std::variant<CIHermitian, CIFibered, AIIIHermitian, AIIIFiberedS, AIIIFiberedT>;

enum class Family { CI, CIFibered, AIII, AIIIFiberedS, AIIIFiberedT };

Family family_of(const DomainSpec& spec);
/// "ci", "ci-fibered", "aiii", "aiii-fibered-s", "aiii-fibered-t".
const char* family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

bool is_hermitian(const DomainSpec& spec);

/// Throws ParameterError naming the violated bound.
void validate(const DomainSpec& spec);

/// e.g. "ci(n=4,a=2)", "aiii-fibered-s(p=2,q=3,a=1,keep=1;2)".
std::string to_string(const DomainSpec& spec);

/// Family, then (n | p,q), a, m, keep bitmask.
bool spec_less(const DomainSpec& lhs, const DomainSpec& rhs);

/// Ambient root system and Cayley index a.
RootSystem root_system_for(const DomainSpec& spec);
int cayley_index(const DomainSpec& spec);

/// Everything the criterion needs for one configuration.
struct DomainData {
  DomainSpec spec;
  RootSystem root_system;
  SimpleSystem standard_simples;
  WeylElement cayley;                 // s_Delta
  SimpleSystem transported_simples;   // Psi = s_Delta(standard)
  ParabolicSubset phi;
  RootPartition partition;
  WeylElement w0K;
  RootSet noncompact_negatives;       // phi_n_minus, noncompact w.r.t. the standard split
  RootSet compact_negatives;          // phi_n_minus, compact w.r.t. the standard split
};

/// ParameterError if the spec is invalid.
DomainData build_domain(const DomainSpec& spec);

/// |phi_n_minus intersect w0K(phi_n_minus)|.
std::size_t connectivity_defect(const DomainData& dd);
/// The roots in that intersection, ascending.
RootSet connectivity_witnesses(const DomainData& dd);

/// w0K(phi_n_minus) and phi_n_minus are disjoint.
bool is_generically_one_connected(const DomainData& dd);

/// Disjointness tested on the noncompact part of phi_n_minus only. Defined
/// for CI and AIII Hermitian specs; PreconditionError otherwise.
bool hermitian_shortcut_check(const DomainData& dd);

enum class Prediction { True, False, NotCovered };

const char* to_string(Prediction p);
std::optional<Prediction> parse_prediction(const std::string& s);

/// The closed-form answer: 2a = n for CI, p <= 2a <= q for AIII, false for
/// fibered CI, true for fibered AIII when p <= 2a <= q and not covered
/// otherwise.
Prediction closed_form_prediction(const DomainSpec& spec);

}  // namespace flagdom
