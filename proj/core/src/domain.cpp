#include "flagdom/domain.hpp"

#include <array>
#include <sstream>
#include <tuple>

#include "flagdom/error.hpp"
#include "overloaded.hpp"

namespace flagdom {

using detail::Overloaded;

// ---------------------------------------------------------------------------
// KeepSet

KeepSet KeepSet::from_indices(const std::vector<int>& indices) {
  std::uint32_t mask = 0;
  for (int i : indices) {
    if (i < 1 || i > 32) throw ParameterError("keep index " + std::to_string(i) + " outside 1..32");
    mask |= 1u << (i - 1);
  }
  return KeepSet(mask);
}

KeepSet KeepSet::full(int a) {
  if (a < 0 || a > 31) throw ParameterError("keep set for a=" + std::to_string(a) + " is not representable");
  return KeepSet(a == 31 ? 0xffffffffu : (1u << (a + 1)) - 1u);
}

std::vector<int> KeepSet::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 32; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string KeepSet::to_string() const {
  std::string s;
  for (int i : indices()) {
    if (!s.empty()) s += ';';
    s += std::to_string(i);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Specs

Family family_of(const DomainSpec& spec) {
  return std::visit(Overloaded{
                        [](const CIHermitian&) { return Family::CI; },
                        [](const CIFibered&) { return Family::CIFibered; },
                        [](const AIIIHermitian&) { return Family::AIII; },
                        [](const AIIIFiberedS&) { return Family::AIIIFiberedS; },
                        [](const AIIIFiberedT&) { return Family::AIIIFiberedT; },
                    },
                    spec);
}

namespace {

constexpr std::array<std::pair<Family, const char*>, 5> kFamilyNames{{
    {Family::CI, "ci"},
    {Family::CIFibered, "ci-fibered"},
    {Family::AIII, "aiii"},
    {Family::AIIIFiberedS, "aiii-fibered-s"},
    {Family::AIIIFiberedT, "aiii-fibered-t"},
}};

[[noreturn]] void bad_spec(const DomainSpec& spec, const std::string& why) {
  throw ParameterError(to_string(spec) + ": " + why);
}

void validate_aiii(const DomainSpec& spec, int p, int q, int a) {
  if (p < 1) bad_spec(spec, "requires p >= 1");
  if (p > q) bad_spec(spec, "requires p <= q");
  if (a < 0 || a > p) bad_spec(spec, "requires 0 <= a <= p");
}

void validate_keep(const DomainSpec& spec, int a, const KeepSet& keep) {
  if (keep.empty()) bad_spec(spec, "keep must be nonempty");
  if (a > 31 || !keep.is_subset_of(KeepSet::full(a))) bad_spec(spec, "keep must be a subset of {1..a+1}");
}

}  // namespace

const char* family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  for (const auto& [fam, n] : kFamilyNames) {
    if (name == n) return fam;
  }
  return std::nullopt;
}

bool is_hermitian(const DomainSpec& spec) {
  const Family f = family_of(spec);
  return f == Family::CI || f == Family::AIII;
}

void validate(const DomainSpec& spec) {
  std::visit(Overloaded{
                 [&](const CIHermitian& s) {
                   if (s.n < 1) bad_spec(spec, "requires n >= 1");
                   if (s.a < 0 || s.a > s.n) bad_spec(spec, "requires 0 <= a <= n");
                 },
                 [&](const CIFibered& s) {
                   if (!(0 < s.m && s.m <= s.a && s.a < s.n)) bad_spec(spec, "requires 0 < m <= a < n");
                 },
                 [&](const AIIIHermitian& s) { validate_aiii(spec, s.p, s.q, s.a); },
                 [&](const AIIIFiberedS& s) {
                   validate_aiii(spec, s.p, s.q, s.a);
                   validate_keep(spec, s.a, s.keep);
                 },
                 [&](const AIIIFiberedT& s) {
                   validate_aiii(spec, s.p, s.q, s.a);
                   validate_keep(spec, s.a, s.keep);
                 },
             },
             spec);
}

std::string to_string(const DomainSpec& spec) {
  std::ostringstream os;
  os << family_name(family_of(spec)) << '(';
  std::visit(Overloaded{
                 [&](const CIHermitian& s) { os << "n=" << s.n << ",a=" << s.a; },
                 [&](const CIFibered& s) { os << "n=" << s.n << ",a=" << s.a << ",m=" << s.m; },
                 [&](const AIIIHermitian& s) { os << "p=" << s.p << ",q=" << s.q << ",a=" << s.a; },
                 [&](const AIIIFiberedS& s) {
                   os << "p=" << s.p << ",q=" << s.q << ",a=" << s.a << ",keep=" << s.keep.to_string();
                 },
                 [&](const AIIIFiberedT& s) {
                   os << "p=" << s.p << ",q=" << s.q << ",a=" << s.a << ",keep=" << s.keep.to_string();
                 },
             },
             spec);
  os << ')';
  return os.str();
}

namespace {

using SortKey = std::tuple<int, int, int, int, int, std::uint32_t>;

SortKey sort_key(const DomainSpec& spec) {
  const int fam = static_cast<int>(family_of(spec));
  return std::visit(Overloaded{
                        [&](const CIHermitian& s) { return SortKey{fam, s.n, 0, s.a, 0, 0u}; },
                        [&](const CIFibered& s) { return SortKey{fam, s.n, 0, s.a, s.m, 0u}; },
                        [&](const AIIIHermitian& s) { return SortKey{fam, s.p, s.q, s.a, 0, 0u}; },
                        [&](const AIIIFiberedS& s) { return SortKey{fam, s.p, s.q, s.a, 0, s.keep.mask()}; },
                        [&](const AIIIFiberedT& s) { return SortKey{fam, s.p, s.q, s.a, 0, s.keep.mask()}; },
                    },
                    spec);
}

}  // namespace

bool spec_less(const DomainSpec& lhs, const DomainSpec& rhs) { return sort_key(lhs) < sort_key(rhs); }

RootSystem root_system_for(const DomainSpec& spec) {
  return std::visit(Overloaded{
                        [](const CIHermitian& s) { return RootSystem::type_c(s.n); },
                        [](const CIFibered& s) { return RootSystem::type_c(s.n); },
                        [](const AIIIHermitian& s) { return RootSystem::type_a(s.p, s.q); },
                        [](const AIIIFiberedS& s) { return RootSystem::type_a(s.p, s.q); },
                        [](const AIIIFiberedT& s) { return RootSystem::type_a(s.p, s.q); },
                    },
                    spec);
}

int cayley_index(const DomainSpec& spec) {
  return std::visit([](const auto& s) { return s.a; }, spec);
}

// ---------------------------------------------------------------------------
// Construction and the criterion

namespace {

// Indices i of the standard simples psi_i whose images s_Delta(psi_i) are
// left out of Phi.
std::vector<int> omitted_simples(const DomainSpec& spec) {
  return std::visit(Overloaded{
                        [](const CIHermitian& s) { return std::vector<int>{s.n}; },
                        [](const CIFibered& s) { return std::vector<int>{s.m, s.n}; },
                        [](const AIIIHermitian& s) { return std::vector<int>{s.p}; },
                        [](const AIIIFiberedS& s) {
                          std::vector<int> out{s.p};
                          for (int i : s.keep.indices()) {
                            if (i <= s.a) out.push_back(i);  // s_i = i
                          }
                          return out;
                        },
                        [](const AIIIFiberedT& s) {
                          std::vector<int> out{s.p};
                          for (int i : s.keep.indices()) {
                            if (i <= s.a) out.push_back(s.p + s.q - i);  // t_i = p+q-i
                          }
                          return out;
                        },
                    },
                    spec);
}

}  // namespace

DomainData build_domain(const DomainSpec& spec) {
  validate(spec);
  RootSystem rs = root_system_for(spec);
  SimpleSystem standard = SimpleSystem::standard(rs);
  WeylElement cayley = cayley_involution(rs, CayleySet{cayley_index(spec)});
  SimpleSystem psi = standard.transported(cayley);
  ParabolicSubset phi = ParabolicSubset::omitting(psi.rank(), omitted_simples(spec));
  RootPartition rp = partition(psi, phi);

  RootSet noncompact, compact;
  for (const Root& r : rp.phi_n_minus) {
    (classify_root(r, standard) == RootClass::Compact ? compact : noncompact).insert(r);
  }
  WeylElement w0K = longest_element_K(rs);

  return DomainData{
      .spec = spec,
      .root_system = std::move(rs),
      .standard_simples = std::move(standard),
      .cayley = std::move(cayley),
      .transported_simples = std::move(psi),
      .phi = std::move(phi),
      .partition = std::move(rp),
      .w0K = std::move(w0K),
      .noncompact_negatives = std::move(noncompact),
      .compact_negatives = std::move(compact),
  };
}

std::size_t connectivity_defect(const DomainData& dd) { return orbit_dimension_defect(dd.w0K, dd.partition); }

RootSet connectivity_witnesses(const DomainData& dd) { return defect_roots(dd.w0K, dd.partition); }

bool is_generically_one_connected(const DomainData& dd) { return connectivity_defect(dd) == 0; }

bool hermitian_shortcut_check(const DomainData& dd) {
  if (!is_hermitian(dd.spec)) {
    throw PreconditionError("the noncompact shortcut applies to Hermitian specs only, not " + to_string(dd.spec));
  }
  for (const Root& r : dd.noncompact_negatives) {
    if (dd.noncompact_negatives.contains(dd.w0K.apply(r))) return false;
  }
  return true;
}

const char* to_string(Prediction p) {
  switch (p) {
    case Prediction::True:
      return "true";
    case Prediction::False:
      return "false";
    case Prediction::NotCovered:
      return "not_covered";
  }
  return "?";
}

std::optional<Prediction> parse_prediction(const std::string& s) {
  for (Prediction p : {Prediction::True, Prediction::False, Prediction::NotCovered}) {
    if (s == to_string(p)) return p;
  }
  return std::nullopt;
}

namespace {

Prediction from_bool(bool b) { return b ? Prediction::True : Prediction::False; }

Prediction fibered_aiii(int p, int q, int a) {
  return (p <= 2 * a && 2 * a <= q) ? Prediction::True : Prediction::NotCovered;
}

}  // namespace

Prediction closed_form_prediction(const DomainSpec& spec) {
  return std::visit(Overloaded{
                        [](const CIHermitian& s) { return from_bool(2 * s.a == s.n); },
                        [](const CIFibered&) { return Prediction::False; },
                        [](const AIIIHermitian& s) { return from_bool(s.p <= 2 * s.a && 2 * s.a <= s.q); },
                        [](const AIIIFiberedS& s) { return fibered_aiii(s.p, s.q, s.a); },
                        [](const AIIIFiberedT& s) { return fibered_aiii(s.p, s.q, s.a); },
                    },
                    spec);
}

}  // namespace flagdom
