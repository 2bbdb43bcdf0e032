#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "modlat/bol.hpp"
#include "modlat/lattice.hpp"
#include "modlat/pls.hpp"

namespace modlat {

/// Outcome of one checked statement. `applicable` is false when a hypothesis
/// does not hold; such verdicts count as passed.
struct Verdict {
  std::string name;
  bool applicable = true;
  bool pass = true;
  std::string detail;
};

bool all_pass(const std::vector<Verdict>& verdicts) noexcept;

struct ParamsReport {
  std::size_t j = 0;
  std::size_t delta = 0;
  std::size_t s = 0;
  std::size_t i = 0;
  std::size_t o = 1;
  std::size_t mu = 0;
  std::size_t rstar_canonical = 0;
  bool acyclic = true;
  std::optional<bool> locally_acyclic;
  std::vector<Verdict> verdicts;
};

/// s is the component count of the canonical base of lines; a verdict records
/// whether it matches the number of projectivity classes of prime quotients.
/// Throws Error{NotModular}.
ParamsReport params(const Lattice& lattice);

/// j <= mu - i + s, equality iff the canonical base is acyclic, and every
/// base of lines (up to `cap`) agrees with it on acyclicity.
std::vector<Verdict> check_thm92(const Lattice& lattice, std::size_t cap = 1000);

/// Whether L is acyclic and locally acyclic; unknown when more than the cap
/// of bases exist and none of them settles the question.
struct CycleProfile {
  std::optional<bool> acyclic;
  std::optional<bool> locally_acyclic;
};

CycleProfile cycle_profile(const Lattice& lattice, std::size_t cap = 1000);

/// Every clause whose hypotheses hold for `lattice`, evaluated against `bol`,
/// plus the lower and upper bound on r*. Clauses with an unknown hypothesis are
/// reported as not applicable.
std::vector<Verdict> check_thm94(const Lattice& lattice, const BaseOfLines& bol,
                                 const CycleProfile& profile);
std::vector<Verdict> check_thm94(const Lattice& lattice, const BaseOfLines& bol);

enum class BolMode { Canonical, AllCapped };

/// True iff B(u, v) is acyclic for every covering u < v and every selected
/// base. Throws Error{CapExceeded} in AllCapped mode when more than `cap`
/// bases exist.
bool is_locally_acyclic(const Lattice& lattice, BolMode mode = BolMode::Canonical,
                        std::size_t cap = 1000);

/// Lines l1 < l2 and l3 pairwise meeting in distinct points s = l1^l2,
/// p1 = l1^l3, p2 = l2^l3, and a fourth line l4 meeting them in q, r, p3
/// respectively, none of those in {s, p1, p2}. Fields are line indices and
/// points of the base.
struct TriangleConfig {
  std::size_t l1 = 0, l2 = 0, l3 = 0, l4 = 0;
  PointId s = 0, p1 = 0, p2 = 0;
  PointId q = 0, r = 0, p3 = 0;
};

std::vector<TriangleConfig> triangle_configurations(const BaseOfLines& bol);

/// u = q + r, a = u + s_*, b = u + s. Asserts s not below u, a < b a
/// covering, s, p1, p2 in J(a, b) and a cycle in B(a, b).
/// Throws Error{ClaimViolated} naming the failed assertion.
Quotient cyclic_localization_witness(const Lattice& lattice, const BaseOfLines& bol,
                                     const TriangleConfig& config);

/// x <* y: x < y but x not below y's interval bottom.
/// Throws Error{NotAnMnElement} if x or y is not a line-top.
bool ssmaller(const Lattice& lattice, Elem x, Elem y);

/// Distinct line-tops tops[0..k-1], consecutive ones ccomparable including
/// the wrap-around. up[t] says tops[t] <* tops[t+1].
struct MnCycle {
  std::vector<Elem> tops;
  std::vector<bool> up;
};

struct MnCycleList {
  std::vector<MnCycle> cycles;
  bool truncated = false;
};

/// Cycles of length 3..maxlen up to rotation and reflection: the first top is
/// the smallest and the second is smaller than the last.
MnCycleList mn_cycles(const Lattice& lattice, std::size_t maxlen = 8, std::size_t cap = 10000);

/// No repeated tops, and no v <* u >* z or v >* u <* z with v, u, z mutually
/// comparable or with both neighbours transposing through the same covering
/// of u.
bool is_clean_cycle(const Lattice& lattice, const MnCycle& cycle);

/// Statement-by-statement checks on one lattice. Each returns one verdict.
Verdict check_line_claims(const Lattice& lattice, const BaseOfLines& bol);
Verdict check_perspective_lines(const Lattice& lattice, const BaseOfLines& bol);
Verdict check_perspective_pairs(const Lattice& lattice);
Verdict check_components(const Lattice& lattice, const BaseOfLines& bol);
Verdict check_localizations_connected(const Lattice& lattice, const BaseOfLines& bol);
Verdict check_coatom_counts(const Lattice& lattice, const BaseOfLines& bol);
Verdict check_exchange(const Lattice& lattice);
Verdict check_three_line_cycles(const Lattice& lattice, const BaseOfLines& bol);
Verdict check_short_mn_cycles(const Lattice& lattice);
Verdict check_clean_cycles(const Lattice& lattice, std::size_t maxlen = 8);
Verdict check_triangle_witnesses(const Lattice& lattice, const BaseOfLines& bol);

struct SuiteOptions {
  std::size_t bol_cap = 1000;     // bases for the agreement checks
  std::size_t sample_bols = 64;   // bases run through the per-base checks
  std::size_t cycle_maxlen = 8;
};

struct SuiteReport {
  ParamsReport params;
  std::vector<Verdict> verdicts;
  std::vector<std::size_t> rstar_observed;  // sorted distinct r* over sampled bases
  bool bols_truncated = false;
};

/// params, both theorem checks on every sampled base, and all single checks.
SuiteReport run_suite(const Lattice& lattice, const SuiteOptions& options = {});

}  // namespace modlat
