#include "flagdom/root.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "flagdom/error.hpp"
#include "flagdom/root_system.hpp"

namespace flagdom {

const char* to_string(RootKind kind) {
  return kind == RootKind::TypeA ? "A" : "C";
}

const char* to_string(RootClass c) {
  switch (c) {
    case RootClass::Compact:
      return "compact";
    case RootClass::NoncompactPlus:
      return "noncompact+";
    case RootClass::NoncompactMinus:
      return "noncompact-";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Root

Root Root::basis(int n, int i) {
  if (i < 1 || i > n) throw ParameterError("basis index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  c[static_cast<std::size_t>(i - 1)] = 1;
  return Root(std::move(c));
}

Root Root::pair(int n, int i, int sign_i, int j, int sign_j) {
  return sign_i * basis(n, i) + sign_j * basis(n, j);
}

bool Root::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int x) { return x == 0; });
}

Root Root::operator-() const {
  std::vector<int> c(coords_);
  for (int& x : c) x = -x;
  return Root(std::move(c));
}

Root operator+(const Root& lhs, const Root& rhs) {
  if (lhs.dimension() != rhs.dimension()) {
    throw ParameterError("root dimension mismatch: " + std::to_string(lhs.dimension()) + " vs " +
                         std::to_string(rhs.dimension()));
  }
  std::vector<int> c(lhs.coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += rhs.coords_[i];
  return Root(std::move(c));
}

Root operator*(int k, const Root& r) {
  std::vector<int> c(r.coords_);
  for (int& x : c) x *= k;
  return Root(std::move(c));
}

std::string Root::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const int c = coords_[i];
    if (c == 0) continue;
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (std::abs(c) != 1) os << std::abs(c);
    os << 'e' << (i + 1);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

bool is_root(RootKind kind, const Root& r) {
  int plus_one = 0, minus_one = 0, plus_two = 0, minus_two = 0, other = 0;
  for (int c : r.coords()) {
    switch (c) {
      case 0: break;
      case 1: ++plus_one; break;
      case -1: ++minus_one; break;
      case 2: ++plus_two; break;
      case -2: ++minus_two; break;
      default: ++other; break;
    }
  }
  if (other != 0) return false;
  if (kind == RootKind::TypeA) return plus_one == 1 && minus_one == 1 && plus_two + minus_two == 0;
  const int ones = plus_one + minus_one;
  const int twos = plus_two + minus_two;
  return (ones == 2 && twos == 0) || (ones == 0 && twos == 1);
}

RootSet negated(const RootSet& roots) {
  RootSet out;
  for (const Root& r : roots) out.insert(-r);
  return out;
}

RootSet intersection(const RootSet& a, const RootSet& b) {
  RootSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::string to_string(const RootSet& roots) {
  std::string s = "{";
  bool first = true;
  for (const Root& r : roots) {
    if (!first) s += ", ";
    s += r.to_string();
    first = false;
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// RootSystem

RootSystem::RootSystem(RootKind kind, int dimension, int p, int q)
    : kind_(kind), dimension_(dimension), p_(p), q_(q) {
  std::vector<Root> roots;
  const int n = dimension;
  if (kind == RootKind::TypeC) {
    roots.reserve(static_cast<std::size_t>(2 * n * n));
    for (int i = 1; i <= n; ++i) {
      roots.push_back(2 * Root::basis(n, i));
      roots.push_back(-2 * Root::basis(n, i));
      for (int j = i + 1; j <= n; ++j) {
        for (int si : {1, -1}) {
          for (int sj : {1, -1}) roots.push_back(Root::pair(n, i, si, j, sj));
        }
      }
    }
  } else {
    roots.reserve(static_cast<std::size_t>(n * (n - 1)));
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i != j) roots.push_back(Root::pair(n, i, 1, j, -1));
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots_ = std::make_shared<const std::vector<Root>>(std::move(roots));
}

RootSystem RootSystem::type_c(int n) {
  if (n < 1) throw ParameterError("type C requires n >= 1, got n=" + std::to_string(n));
  return RootSystem(RootKind::TypeC, n, n, 0);
}

RootSystem RootSystem::type_a(int p, int q) {
  if (p < 1 || q < 1) {
    throw ParameterError("type A requires p, q >= 1, got p=" + std::to_string(p) + " q=" + std::to_string(q));
  }
  if (p > q) throw ParameterError("type A requires p <= q, got p=" + std::to_string(p) + " q=" + std::to_string(q));
  return RootSystem(RootKind::TypeA, p + q, p, q);
}

RootSystem build_root_system(RootKind kind, SizeParams size) {
  return kind == RootKind::TypeC ? RootSystem::type_c(size.n) : RootSystem::type_a(size.p, size.q);
}

bool RootSystem::contains(const Root& r) const {
  return r.dimension() == dimension_ && is_root(kind_, r);
}

std::string RootSystem::to_string() const {
  if (kind_ == RootKind::TypeC) return "C" + std::to_string(dimension_);
  return "A" + std::to_string(dimension_ - 1) + "(p=" + std::to_string(p_) + ",q=" + std::to_string(q_) + ")";
}

// ---------------------------------------------------------------------------
// SimpleSystem

namespace {

std::vector<Root> standard_simples(RootKind kind, int n) {
  std::vector<Root> simples;
  for (int i = 1; i < n; ++i) simples.push_back(Root::pair(n, i, 1, i + 1, -1));
  if (kind == RootKind::TypeC) simples.push_back(2 * Root::basis(n, n));
  return simples;
}

}  // namespace

SimpleSystem::SimpleSystem(RootSystem system, std::vector<Root> simples, int noncompact_index,
                           WeylElement frame)
    : system_(std::move(system)),
      simples_(std::move(simples)),
      noncompact_index_(noncompact_index),
      frame_(std::move(frame)),
      frame_inverse_(frame_.inverse()) {}

SimpleSystem SimpleSystem::standard(const RootSystem& rs) {
  return SimpleSystem(rs, standard_simples(rs.kind(), rs.dimension()), rs.p(),
                      WeylElement::identity(rs.dimension()));
}

SimpleSystem SimpleSystem::transported(const WeylElement& w) const {
  if (w.dimension() != system_.dimension()) {
    throw ParameterError("transport by an element of dimension " + std::to_string(w.dimension()) +
                         " on a system of dimension " + std::to_string(system_.dimension()));
  }
  if (!w.belongs_to(system_.kind())) throw ParameterError("signed element " + w.to_string() + " is not in W(A)");
  std::vector<Root> simples;
  simples.reserve(simples_.size());
  for (const Root& s : simples_) simples.push_back(w.apply(s));
  return SimpleSystem(system_, std::move(simples), noncompact_index_, w.after(frame_));
}

std::vector<int> SimpleSystem::coefficients(const Root& r) const {
  if (!system_.contains(r)) {
    throw DomainError(r.to_string() + " is not a root of " + system_.to_string());
  }
  const Root pulled = frame_inverse_.apply(r);
  const int n = system_.dimension();
  const std::vector<Root> basis = standard_simples(system_.kind(), n);
  const int rank = static_cast<int>(basis.size());

  // Column k of the standard matrix is psi_k, supported on rows k and k+1,
  // so row i reads x_i = psi_i[i] c_i + psi_{i-1}[i] c_{i-1}.
  std::vector<int> c(static_cast<std::size_t>(rank), 0);
  for (int i = 1; i <= rank; ++i) {
    int rhs = pulled.at(i);
    if (i > 1) rhs -= basis[static_cast<std::size_t>(i - 2)].at(i) * c[static_cast<std::size_t>(i - 2)];
    const int diag = basis[static_cast<std::size_t>(i - 1)].at(i);
    if (rhs % diag != 0) {
      throw ConsistencyError("non-integral expansion of " + r.to_string() + " over " + system_.to_string());
    }
    c[static_cast<std::size_t>(i - 1)] = rhs / diag;
  }

  Root recombined(std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int k = 0; k < rank; ++k) recombined = recombined + c[static_cast<std::size_t>(k)] * basis[static_cast<std::size_t>(k)];
  if (recombined != pulled) {
    throw ConsistencyError("inconsistent expansion of " + r.to_string() + " over " + system_.to_string());
  }
  const bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
  const bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
  if (!nonneg && !nonpos) {
    throw ConsistencyError("mixed-sign expansion of " + r.to_string() + " over " + system_.to_string());
  }
  return c;
}

bool SimpleSystem::is_positive(const Root& r) const {
  const std::vector<int> c = coefficients(r);
  return std::any_of(c.begin(), c.end(), [](int x) { return x > 0; });
}

Root SimpleSystem::combine(std::span<const int> coefficients) const {
  if (coefficients.size() != simples_.size()) {
    throw ParameterError("expected " + std::to_string(simples_.size()) + " coefficients, got " +
                         std::to_string(coefficients.size()));
  }
  Root sum(std::vector<int>(static_cast<std::size_t>(system_.dimension()), 0));
  for (std::size_t k = 0; k < simples_.size(); ++k) sum = sum + coefficients[k] * simples_[k];
  return sum;
}

RootClass classify_root(const Root& r, const SimpleSystem& ss) {
  const int c = ss.coefficients(r).at(static_cast<std::size_t>(ss.noncompact_index() - 1));
  switch (c) {
    case 0:
      return RootClass::Compact;
    case 1:
      return RootClass::NoncompactPlus;
    case -1:
      return RootClass::NoncompactMinus;
    default:
      throw ConsistencyError("noncompact coefficient " + std::to_string(c) + " of " + r.to_string() +
                             " exceeds 1; the simple system is not Hermitian");
  }
}

RootSet roots_of_class(const SimpleSystem& ss, RootClass c) {
  RootSet out;
  for (const Root& r : ss.root_system().roots()) {
    if (classify_root(r, ss) == c) out.insert(r);
  }
  return out;
}

RootSet positive_roots(const SimpleSystem& ss) {
  RootSet out;
  for (const Root& r : ss.root_system().roots()) {
    if (ss.is_positive(r)) out.insert(r);
  }
  return out;
}

RootSet negative_roots(const SimpleSystem& ss) {
  RootSet out;
  for (const Root& r : ss.root_system().roots()) {
    if (!ss.is_positive(r)) out.insert(r);
  }
  return out;
}

}  // namespace flagdom
