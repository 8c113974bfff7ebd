#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nilorbit/canonical.hpp"
#include "nilorbit/mat.hpp"
#include "nilorbit/reduced_poly.hpp"

namespace nilorbit {

// Conjugation-invariant functions of a nilpotent tuple. Indices are
// 1-based, matching the Y_1, ..., Y_m naming used in reports.
struct TrPair {
  int i, j;  // i < j
  bool operator==(const TrPair&) const = default;
};
struct TrTriple {
  int i, j, k;  // i < j < k
  bool operator==(const TrTriple&) const = default;
};
struct ZetaFn {  // 1 iff the entry is the zero matrix
  int i;
  bool operator==(const ZetaFn&) const = default;
};
struct EtaFn {  // 1 iff alpha * entry_i == entry_j
  Fe alpha;
  int i, j;  // i < j
  bool operator==(const EtaFn&) const = default;
};

using InvariantFn = std::variant<TrPair, TrTriple, ZetaFn, EtaFn>;

/// eta with i > j is stored as eta_{alpha^{-1}}(j, i); the two evaluate
/// identically.
InvariantFn make_eta(const Field& F, const Fe& alpha, int i, int j);

enum class SetKind { S2, S, H2, H, custom };

struct InvariantSet {
  SetKind kind = SetKind::custom;
  std::vector<InvariantFn> fns;

  size_t size() const { return fns.size(); }
};

SetKind set_kind_from_string(const std::string& s);
std::string set_kind_name(SetKind k);

Fe eval_invariant(const Field& F, const InvariantFn& fn, const NilTuple& T);

/// zeta as the explicit polynomial a11^{q-1} - a12^{q-1} - a21^{q-1} + 1
/// evaluated on a nilpotent matrix; agrees with the indicator definition.
Fe zeta_poly(const Field& F, const Mat2& A);
/// eta as the product of ((alpha a_uv - b_uv)^{q-1} - 1) over all entries.
Fe eta_poly(const Field& F, const Fe& alpha, const Mat2& A, const Mat2& B);

/// S2: pair traces. S: pair + triple traces. H2: S2 + zetas + etas over
/// alpha not in {0,1}. H: H2 + triple traces. H-sets need a finite field.
InvariantSet build_set(SetKind kind, const Field& F, int m);

std::string invariant_name(const Field& F, const InvariantFn& fn);

/// Indices of the set elements taking different values on A and B.
std::vector<size_t> separating_indices(const Field& F, const InvariantSet& set,
                                       const NilTuple& A, const NilTuple& B);

struct SeparationCheck {
  bool separating = false;
  /// First (lexicographic) pair of orbit-representative indices with
  /// identical value vectors, when not separating.
  std::optional<std::pair<int, int>> witness;
  std::vector<CanonicalForm> reps;
};

/// Evaluates the set on all orbit representatives; separating iff the
/// value vectors are pairwise distinct.
SeparationCheck check_separating(const InvariantSet& set, const Field& F, int m);

struct MinimalityEntry {
  size_t fn_index = 0;
  bool found = false;
  std::pair<int, int> witness{-1, -1};  // representative indices
};

struct MinimalityCheck {
  bool minimal = false;
  std::vector<MinimalityEntry> entries;
  std::vector<CanonicalForm> reps;
};

/// For each set element, searches for an orbit pair distinguished by that
/// element alone. Minimal iff every element gets a witness.
MinimalityCheck check_minimality(const InvariantSet& set, const Field& F, int m);

/// Symbolic reduced-polynomial form in the 4m matrix-entry coordinates
/// (row-major per matrix, tuple order). Finite fields only.
ReducedPoly invariant_poly(const Field& F, const InvariantFn& fn, int m);

}  // namespace nilorbit
