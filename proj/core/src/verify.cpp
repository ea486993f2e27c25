#include "flagdom/verify.hpp"

#include <algorithm>
#include <unordered_set>

#include "flagdom/error.hpp"
#include "flagdom/weyl.hpp"

namespace flagdom {

const char* to_string(OracleMode mode) {
  switch (mode) {
    case OracleMode::Off:
      return "off";
    case OracleMode::Auto:
      return "auto";
    case OracleMode::Required:
      return "required";
  }
  return "?";
}

std::optional<OracleMode> parse_oracle_mode(const std::string& s) {
  for (OracleMode m : {OracleMode::Off, OracleMode::Auto, OracleMode::Required}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

bool oracle_wk_scan(const DomainData& dd, std::uint64_t cap) {
  for (const WeylElement& w : CompactWeylGroup(dd.root_system, cap)) {
    if (orbit_dimension_defect(w, dd.partition) == 0) return true;
  }
  return false;
}

bool oracle_double_coset(const DomainData& dd, std::uint64_t w_cap) {
  const std::uint64_t order = weyl_group_order(dd.root_system);
  if (order > w_cap) {
    throw CapacityError("|W| = " + std::to_string(order) + " for " + dd.root_system.to_string() +
                            " exceeds the double-coset cap",
                        w_cap);
  }
  const std::vector<WeylElement> gens = parabolic_generators(dd.transported_simples, dd.phi);
  const std::vector<WeylElement> w_phi = generate_group(dd.root_system.dimension(), gens, w_cap);
  const std::unordered_set<WeylElement, WeylElementHash> members(w_phi.begin(), w_phi.end());

  // w1 w0K w2 = w0  <=>  w1 = w0 w2^-1 w0K^-1.
  const WeylElement w0 = longest_element(dd.transported_simples);
  const WeylElement w0K_inv = dd.w0K.inverse();
  return std::any_of(w_phi.begin(), w_phi.end(), [&](const WeylElement& w2) {
    return members.contains(w0.after(w2.inverse()).after(w0K_inv));
  });
}

namespace {

bool want_wk(const DomainData& dd, const VerifyOptions& opt) {
  return compact_weyl_order(dd.root_system) <= opt.wk_cap;
}

bool want_dc(const DomainData& dd, const VerifyOptions& opt) {
  return dd.root_system.rank() <= opt.dc_rank_cap && weyl_group_order(dd.root_system) <= opt.w_cap;
}

}  // namespace

GridEntry evaluate(const DomainSpec& spec, const VerifyOptions& options) {
  const DomainData dd = build_domain(spec);
  GridEntry e;
  e.spec = spec;
  e.predicted = closed_form_prediction(spec);
  e.witnesses = connectivity_witnesses(dd);
  e.defect = e.witnesses.size();
  e.computed = e.defect == 0;

  if (options.oracles != OracleMode::Off) {
    const bool required = options.oracles == OracleMode::Required;
    if (want_wk(dd, options)) {
      e.oracle_wk = oracle_wk_scan(dd, options.wk_cap);
    } else if (required) {
      throw CapacityError("W_K oracle skipped for " + to_string(spec), options.wk_cap);
    }
    if (want_dc(dd, options)) {
      e.oracle_dc = oracle_double_coset(dd, options.w_cap);
    } else if (required) {
      throw CapacityError("double-coset oracle skipped for " + to_string(spec) + " (rank " +
                              std::to_string(dd.root_system.rank()) + ", rank cap " +
                              std::to_string(options.dc_rank_cap) + ")",
                          options.w_cap);
    }
  }

  e.agrees = true;
  if (e.predicted != Prediction::NotCovered) e.agrees = e.computed == (e.predicted == Prediction::True);
  if (e.oracle_wk && *e.oracle_wk != e.computed) e.agrees = false;
  if (e.oracle_dc && *e.oracle_dc != e.computed) e.agrees = false;
  return e;
}

GridReport verify_grid(std::string name, const std::vector<DomainSpec>& specs, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  GridReport report;
  report.grid = std::move(name);
  report.oracles = options.oracles;
  report.entries.reserve(specs.size());
  for (const DomainSpec& spec : specs) {
    GridEntry e = evaluate(spec, options);
    ++report.summary.entries;
    ++(e.agrees ? report.summary.agreements : report.summary.disagreements);
    if (e.oracle_wk) ++report.summary.oracle_wk_runs;
    if (e.oracle_dc) ++report.summary.oracle_dc_runs;
    report.entries.push_back(std::move(e));
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<DomainSpec> ci_hermitian_grid(int n_max) {
  std::vector<DomainSpec> specs;
  for (int n = 1; n <= n_max; ++n) {
    for (int a = 0; a <= n; ++a) specs.emplace_back(CIHermitian{n, a});
  }
  return specs;
}

std::vector<DomainSpec> aiii_hermitian_grid(int sum_max) {
  std::vector<DomainSpec> specs;
  for (int p = 1; 2 * p <= sum_max; ++p) {
    for (int q = p; p + q <= sum_max; ++q) {
      for (int a = 0; a <= p; ++a) specs.emplace_back(AIIIHermitian{p, q, a});
    }
  }
  return specs;
}

std::vector<DomainSpec> ci_fibered_grid(int n_max) {
  std::vector<DomainSpec> specs;
  for (int n = 2; n <= n_max; ++n) {
    for (int a = 1; a < n; ++a) {
      for (int m = 1; m <= a; ++m) specs.emplace_back(CIFibered{n, a, m});
    }
  }
  return specs;
}

std::vector<DomainSpec> aiii_fibered_grid(int sum_max) {
  std::vector<DomainSpec> s_specs, t_specs;
  for (int p = 1; 2 * p <= sum_max; ++p) {
    for (int q = p; p + q <= sum_max; ++q) {
      for (int a = 0; a <= p; ++a) {
        if (!(p <= 2 * a && 2 * a <= q)) continue;
        const std::uint32_t full = KeepSet::full(a).mask();
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
          s_specs.emplace_back(AIIIFiberedS{p, q, a, KeepSet(mask)});
          t_specs.emplace_back(AIIIFiberedT{p, q, a, KeepSet(mask)});
        }
      }
    }
  }
  s_specs.insert(s_specs.end(), t_specs.begin(), t_specs.end());
  return s_specs;
}

GridReport verify_theorem_CI(int n_max, const VerifyOptions& options) {
  if (n_max < 1) throw ParameterError("n_max must be >= 1");
  GridReport r = verify_grid("ci", ci_hermitian_grid(n_max), options);
  r.parameters = {{"n_max", n_max}};
  return r;
}

GridReport verify_theorem_AIII(int sum_max, const VerifyOptions& options) {
  if (sum_max < 2) throw ParameterError("sum_max must be >= 2");
  GridReport r = verify_grid("aiii", aiii_hermitian_grid(sum_max), options);
  r.parameters = {{"sum_max", sum_max}};
  return r;
}

GridReport verify_fibered(int n_max, int sum_max, const VerifyOptions& options) {
  if (n_max < 1 || sum_max < 1) throw ParameterError("fibered bounds must be >= 1");
  std::vector<DomainSpec> specs = ci_fibered_grid(n_max);
  std::vector<DomainSpec> aiii = aiii_fibered_grid(sum_max);
  specs.insert(specs.end(), aiii.begin(), aiii.end());
  std::stable_sort(specs.begin(), specs.end(), spec_less);
  GridReport r = verify_grid("fibered", specs, options);
  r.parameters = {{"n_max", n_max}, {"sum_max", sum_max}};
  return r;
}

}  // namespace flagdom
