#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "derivation.hpp"
#include "descriptor.hpp"

namespace deltader {

/// The sl(2) families with nonzero delta-derivations into V(n).
enum class CaseTag { DeltaOne, MinusTwoOverN, TwoOverNPlusTwo, OneHalf };

std::string case_name(CaseTag tag);

struct ExpectedFamily {
  CaseTag tag;
  int n = 0;
  Rational delta;
  std::size_t expected_dim = 0;
  std::vector<Matrix> basis;  // 3 x (n+1) maps, rows (e-, h, e+)
  /// Weight of each map in the convention where e-, h, e+ weigh 1, 0, -1
  /// and v_i weighs i; a map of weight w sends weight b into weight b - w.
  std::vector<int> weights;
};

/// Closed-form basis of Der_delta(sl2, V(n)) for the given family. Throws
/// InvalidArgument for n < 1, for TwoOverNPlusTwo with n < 2 and for OneHalf
/// unless n = 2 (where the identity map is read through V(2) = adjoint).
ExpectedFamily expected_family(int n, CaseTag tag);
std::vector<Matrix> expected_sl2_basis(int n, CaseTag tag);

/// Converts a weight in the convention above to the raw h-eigenvalue weight
/// used by weight_decomposition: raw = -2 * weight - n.
Rational raw_weight(int weight, int n);

/// The V(2) -> sl(2) identification e- -> v2, h -> v1, e+ -> -v0 as a map
/// from sl(2) to V(2).
Matrix sl2_adjoint_identification();

struct SimpleSummand {
  int sl_rank = 2;  // sl(N)
};

/// One irreducible summand of the module: nontrivial over exactly one simple
/// summand (or trivial over all of them when `summand` is empty).
struct ModulePart {
  std::optional<std::size_t> summand;
  ModuleAtom module;
  std::size_t multiplicity = 1;
};

/// Dimension of Der_delta(g, V) predicted by the classification for
/// semisimple g. Throws InvalidArgument outside the implemented families.
std::size_t theorem_dimension(const std::vector<SimpleSummand>& g_parts, const std::vector<ModulePart>& v_parts,
                              const Rational& delta);

/// Splits descriptors into theorem inputs. Throws InvalidArgument for terms
/// that are nontrivial over more than one summand.
std::pair<std::vector<SimpleSummand>, std::vector<ModulePart>> theorem_parts(const AlgebraDescriptor& algebra,
                                                                             const ModuleDescriptor& module);

/// Equality of the spans of two lists of equally shaped maps.
bool span_equal(const std::vector<Matrix>& a, const std::vector<Matrix>& b);

struct CheckEntry {
  enum class Status { Pass, Fail, Skip };
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

struct VerifyReport {
  int max_n = 0;
  std::vector<CheckEntry> entries;

  std::size_t failures() const;
};

/// Runs the sl(2) families for 1 <= n <= max_n, the sl(3) cases and a
/// semisimple assembly, comparing solver output with the closed forms.
VerifyReport verify_all(int max_n);

}  // namespace deltader
