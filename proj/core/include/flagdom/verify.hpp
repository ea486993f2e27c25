#pragma once

// Grid verification of the closed-form connectivity results, cross-checked by
// two independent oracles: a scan over all of W_K, and the double coset
// W_Phi w0 W_Phi.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagdom/domain.hpp"

namespace flagdom {

enum class OracleMode { Off, Auto, Required };

const char* to_string(OracleMode mode);
std::optional<OracleMode> parse_oracle_mode(const std::string& s);

struct VerifyOptions {
  OracleMode oracles = OracleMode::Off;
  std::uint64_t wk_cap = 40320;
  std::uint64_t w_cap = 40320;
  /// Largest rank at which the double-coset oracle runs.
  int dc_rank_cap = 6;
};

/// True iff some w in W_K has zero orbit-dimension defect.
/// CapacityError if |W_K| > cap.
bool oracle_wk_scan(const DomainData& dd, std::uint64_t cap = 40320);

/// True iff w1 w0K w2 = w0 for some w1, w2 in W_Phi. W_Phi is generated from
/// the reflections in Phi. CapacityError if |W| > w_cap.
bool oracle_double_coset(const DomainData& dd, std::uint64_t w_cap = 40320);

struct GridEntry {
  DomainSpec spec;
  Prediction predicted = Prediction::NotCovered;
  bool computed = false;
  std::size_t defect = 0;
  std::optional<bool> oracle_wk;
  std::optional<bool> oracle_dc;
  RootSet witnesses;
  bool agrees = true;
};

struct GridSummary {
  std::size_t entries = 0;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t oracle_wk_runs = 0;
  std::size_t oracle_dc_runs = 0;
};

struct GridReport {
  std::string grid;
  std::vector<std::pair<std::string, int>> parameters;
  OracleMode oracles = OracleMode::Off;
  std::vector<GridEntry> entries;
  GridSummary summary;
  std::chrono::duration<double> elapsed{};
};

/// Runs the criterion, the closed form and (per options) the oracles on one
/// spec. Under OracleMode::Required a skipped oracle raises CapacityError.
GridEntry evaluate(const DomainSpec& spec, const VerifyOptions& options = {});

/// Entries follow the given order; the spec lists below are canonical.
GridReport verify_grid(std::string name, const std::vector<DomainSpec>& specs,
                       const VerifyOptions& options = {});

/// 1 <= n <= n_max, 0 <= a <= n.
std::vector<DomainSpec> ci_hermitian_grid(int n_max);
/// 1 <= p <= q, p+q <= sum_max, 0 <= a <= p.
std::vector<DomainSpec> aiii_hermitian_grid(int sum_max);
/// 0 < m <= a < n <= n_max.
std::vector<DomainSpec> ci_fibered_grid(int n_max);
/// p+q <= sum_max, p <= 2a <= q, every nonempty keep subset, both s and t.
std::vector<DomainSpec> aiii_fibered_grid(int sum_max);

/// ParameterError if n_max < 1.
GridReport verify_theorem_CI(int n_max, const VerifyOptions& options = {});
/// ParameterError if sum_max < 2.
GridReport verify_theorem_AIII(int sum_max, const VerifyOptions& options = {});
/// ParameterError if either bound is < 1.
GridReport verify_fibered(int n_max, int sum_max, const VerifyOptions& options = {});

}  // namespace flagdom
