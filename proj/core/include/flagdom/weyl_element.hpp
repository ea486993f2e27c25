#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "flagdom/root.hpp"

namespace flagdom {

/// A signed permutation acting linearly by e_i -> sign_i e_{image_i}.
///
/// Covers the hyperoctahedral group W(C_n) and, with all signs +1, the
/// symmetric group W(A_{N-1}). Indices are 1-based.
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(int n);
  /// One-line notation: images[i-1] is the image of i. Signs default to +1.
  static WeylElement from_one_line(const std::vector<int>& images, const std::vector<int>& signs = {});
  /// The pure sign change negating every index in `flipped`.
  static WeylElement sign_change(int n, const std::vector<int>& flipped);
  /// The transposition (i j), optionally negating both images.
  static WeylElement transposition(int n, int i, int j, bool negate = false);

  int dimension() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)) + 1; }
  int sign(int i) const { return signs_.at(static_cast<std::size_t>(i - 1)); }
  bool is_unsigned() const;
  bool is_identity() const;
  /// Unsigned, so valid in W(A_{N-1}).
  bool belongs_to(RootKind kind) const { return kind == RootKind::TypeC || is_unsigned(); }

  Root apply(const Root& r) const;
  RootSet apply(const RootSet& roots) const;
  /// (*this)(other(x)).
  WeylElement after(const WeylElement& other) const;
  WeylElement inverse() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

  /// e.g. "[3 2 1]" or "[-1 2]"; negative entries mark flipped signs.
  std::string to_string() const;

  std::size_t hash() const noexcept;

 private:
  std::vector<int> images_;  // 0-based
  std::vector<int> signs_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept { return w.hash(); }
};

inline Root apply(const WeylElement& w, const Root& r) { return w.apply(r); }
inline RootSet apply(const WeylElement& w, const RootSet& roots) { return w.apply(roots); }
/// x -> w1(w2(x)). Throws ParameterError on dimension mismatch.
inline WeylElement compose(const WeylElement& w1, const WeylElement& w2) { return w1.after(w2); }
inline WeylElement inverse(const WeylElement& w) { return w.inverse(); }

}  // namespace flagdom
