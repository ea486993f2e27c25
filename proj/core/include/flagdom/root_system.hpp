#pragma once

// Root systems A_{p+q-1} and C_n with their Hermitian simple systems and the
// compact/noncompact split.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "flagdom/root.hpp"
#include "flagdom/weyl_element.hpp"

namespace flagdom {

/// Size parameters for build_root_system: n for type C, (p, q) for type A.
struct SizeParams {
  int n = 0;
  int p = 0;
  int q = 0;
};

/// The full root set. Immutable; copies share the root storage.
class RootSystem {
 public:
  /// Type C_n; throws ParameterError for n < 1.
  static RootSystem type_c(int n);
  /// Type A_{p+q-1} split at p; requires 1 <= p <= q.
  static RootSystem type_a(int p, int q);

  RootKind kind() const { return kind_; }
  /// N: n for type C, p+q for type A.
  int dimension() const { return dimension_; }
  /// Number of simple roots.
  int rank() const { return kind_ == RootKind::TypeC ? dimension_ : dimension_ - 1; }
  /// Split point: p for type A, n for type C.
  int p() const { return p_; }
  int q() const { return q_; }
  /// Size of the strongly orthogonal noncompact set: n for Sp(2n,R), p for SU(p,q).
  int real_rank() const { return kind_ == RootKind::TypeC ? dimension_ : p_; }

  /// Roots in ascending lexicographic order.
  std::span<const Root> roots() const& { return *roots_; }
  std::span<const Root> roots() const&& = delete;
  std::size_t size() const { return roots_->size(); }
  bool contains(const Root& r) const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.kind_ == b.kind_ && a.dimension_ == b.dimension_ && a.p_ == b.p_;
  }

  std::string to_string() const;

 private:
  RootSystem(RootKind kind, int dimension, int p, int q);

  RootKind kind_ = RootKind::TypeC;
  int dimension_ = 0;
  int p_ = 0;
  int q_ = 0;
  std::shared_ptr<const std::vector<Root>> roots_;
};

RootSystem build_root_system(RootKind kind, SizeParams size);

enum class RootClass { Compact, NoncompactPlus, NoncompactMinus };

const char* to_string(RootClass c);

/// An ordered simple system with exactly one noncompact simple root.
///
/// Each system is the image of the standard one under a frame element w
/// (simple_i = w(psi_i)). Expansion pulls a root back through w and
/// forward-substitutes against the standard simple-root matrix, which is
/// lower bidiagonal in both types.
class SimpleSystem {
 public:
  /// psi_i = e_i - e_{i+1}, plus psi_n = 2e_n in type C. The noncompact index
  /// is n (type C) or p (type A).
  static SimpleSystem standard(const RootSystem& rs);

  /// {w(s) : s in this}, same noncompact index.
  SimpleSystem transported(const WeylElement& w) const;

  const RootSystem& root_system() const { return system_; }
  std::span<const Root> simples() const { return simples_; }
  const Root& simple(int i) const { return simples_.at(static_cast<std::size_t>(i - 1)); }
  int rank() const { return static_cast<int>(simples_.size()); }
  /// 1-based.
  int noncompact_index() const { return noncompact_index_; }
  const WeylElement& frame() const { return frame_; }

  /// Unique c with sum_i c_i simple_i = r; all c_i >= 0 or all c_i <= 0.
  /// DomainError if r is not a root of the system.
  std::vector<int> coefficients(const Root& r) const;
  bool is_positive(const Root& r) const;
  Root combine(std::span<const int> coefficients) const;

 private:
  SimpleSystem(RootSystem system, std::vector<Root> simples, int noncompact_index, WeylElement frame);

  RootSystem system_;
  std::vector<Root> simples_;
  int noncompact_index_ = 0;
  WeylElement frame_;
  WeylElement frame_inverse_;
};

inline SimpleSystem default_simple_system(const RootSystem& rs) { return SimpleSystem::standard(rs); }

inline std::vector<int> simple_coefficients(const Root& r, const SimpleSystem& ss) {
  return ss.coefficients(r);
}

/// Compact iff the noncompact coefficient is 0, otherwise by its sign.
/// ConsistencyError if that coefficient exceeds 1 in absolute value.
RootClass classify_root(const Root& r, const SimpleSystem& ss);

RootSet roots_of_class(const SimpleSystem& ss, RootClass c);
RootSet positive_roots(const SimpleSystem& ss);
RootSet negative_roots(const SimpleSystem& ss);

}  // namespace flagdom
