#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lie.hpp"

namespace deltader {

/// A direct sum of sl(N) summands, e.g. "sl2 o+ sl3".
struct AlgebraDescriptor {
  std::vector<int> sl_ranks;

  std::string canonical() const;
  AlgebraPtr build() const;
  /// The algebra of summand s alone.
  AlgebraPtr summand(std::size_t s) const;
};

struct ModuleAtom {
  enum class Kind { Irreducible, Natural, Adjoint, Trivial };
  Kind kind = Kind::Trivial;
  int param = 0;  // n for V(n), d for trivial(d)

  std::string canonical() const;
};

/// A direct sum of terms; each term is a single atom over the whole algebra
/// or a tensor chain with exactly one factor per summand.
struct ModuleDescriptor {
  std::vector<std::vector<ModuleAtom>> terms;

  std::string canonical() const;
  Representation build(const AlgebraDescriptor& algebra) const;
};

/// Grammar: atom := "slN"; expr := atom ("o+" atom)*. "⊕" and "oplus" are
/// accepted for "o+".
AlgebraDescriptor parse_algebra_descriptor(std::string_view text);

/// Grammar: atom := "V(n)" | "adjoint" | "natural" | "trivial(d)";
/// term := atom ("(x)" atom)*; expr := term ("o+" term)*. "⊗"/"otimes" and
/// "⊕"/"oplus" are accepted on input.
ModuleDescriptor parse_module_descriptor(std::string_view text);

/// Re-seats a module on an equal algebra object; throws AlgebraMismatch.
Representation rebase(const Representation& module, const AlgebraPtr& algebra);

}  // namespace deltader
