#include "flagdom/parabolic.hpp"

#include <algorithm>

#include "flagdom/error.hpp"
#include "flagdom/weyl.hpp"

namespace flagdom {

ParabolicSubset ParabolicSubset::all(int rank) { return ParabolicSubset(std::vector<bool>(static_cast<std::size_t>(rank), true)); }

ParabolicSubset ParabolicSubset::none(int rank) { return ParabolicSubset(std::vector<bool>(static_cast<std::size_t>(rank), false)); }

ParabolicSubset ParabolicSubset::omitting(int rank, const std::vector<int>& omitted) {
  std::vector<bool> flags(static_cast<std::size_t>(rank), true);
  for (int i : omitted) {
    if (i < 1 || i > rank) throw ParameterError("simple index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
    flags[static_cast<std::size_t>(i - 1)] = false;
  }
  return ParabolicSubset(std::move(flags));
}

std::vector<int> ParabolicSubset::members() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < flags_.size(); ++i) {
    if (flags_[i]) out.push_back(static_cast<int>(i + 1));
  }
  return out;
}

std::vector<int> ParabolicSubset::omitted() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < flags_.size(); ++i) {
    if (!flags_[i]) out.push_back(static_cast<int>(i + 1));
  }
  return out;
}

bool ParabolicSubset::is_subset_of(const ParabolicSubset& other) const {
  if (size() != other.size()) throw ParameterError("parabolic subsets of different simple systems");
  for (std::size_t i = 0; i < flags_.size(); ++i) {
    if (flags_[i] && !other.flags_[i]) return false;
  }
  return true;
}

RootPartition partition(const SimpleSystem& ss, const ParabolicSubset& phi) {
  if (phi.size() != ss.rank()) {
    throw ParameterError("parabolic subset has " + std::to_string(phi.size()) + " flags for a simple system of rank " +
                         std::to_string(ss.rank()));
  }
  RootPartition rp;
  for (const Root& r : ss.root_system().roots()) {
    const std::vector<int> c = ss.coefficients(r);
    bool supported = true;
    bool positive = false;
    for (int i = 1; i <= ss.rank(); ++i) {
      const int ci = c[static_cast<std::size_t>(i - 1)];
      if (ci != 0 && !phi.contains(i)) supported = false;
      if (ci > 0) positive = true;
    }
    if (supported) {
      rp.phi_r.insert(r);
    } else if (positive) {
      rp.phi_n_plus.insert(r);
    } else {
      rp.phi_n_minus.insert(r);
    }
  }
  return rp;
}

RootSet sigma_q(const SimpleSystem& ss, const ParabolicSubset& phi) {
  RootPartition rp = partition(ss, phi);
  RootSet out = std::move(rp.phi_r);
  out.insert(rp.phi_n_plus.begin(), rp.phi_n_plus.end());
  return out;
}

RootSet defect_roots(const WeylElement& w, const RootPartition& rp) {
  return intersection(rp.phi_n_minus, w.apply(rp.phi_n_minus));
}

std::size_t orbit_dimension_defect(const WeylElement& w, const RootPartition& rp) {
  std::size_t count = 0;
  for (const Root& r : rp.phi_n_minus) {
    if (rp.phi_n_minus.contains(w.apply(r))) ++count;
  }
  return count;
}

std::vector<WeylElement> parabolic_generators(const SimpleSystem& ss, const ParabolicSubset& phi) {
  if (phi.size() != ss.rank()) throw ParameterError("parabolic subset does not match the simple system");
  std::vector<WeylElement> gens;
  for (int i : phi.members()) gens.push_back(reflection(ss.simple(i)));
  return gens;
}

}  // namespace flagdom
