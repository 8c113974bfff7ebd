#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nilorbit/mat.hpp"

namespace nilorbit {

enum class FormTag { zero, line, split };

/// Orbit representative of a nilpotent 2x2 tuple under simultaneous
/// GL2-conjugation. Exactly one per orbit:
///  - zero:  (0, ..., 0)
///  - line:  (a_1 E12, ..., a_m E12), first nonzero coefficient 1
///  - split: (a_1 E12, ..., a_r E12, pivot E21, D_1, ..., D_s) with
///    pivot != 0, first nonzero prefix coefficient 1 (zeros allowed in
///    the prefix), tail matrices nilpotent and unconstrained otherwise.
struct CanonicalForm {
  FormTag tag = FormTag::zero;
  int m = 0;
  std::vector<Fe> alphas;   // line: size m; split: prefix of size r >= 1
  std::optional<Fe> pivot;  // split only
  std::vector<Mat2> tail;   // split only, size m - r - 1

  int r() const { return static_cast<int>(alphas.size()); }
  bool operator==(const CanonicalForm&) const = default;
};

/// Conjugator certificate: g is invertible and g T g^{-1} equals the
/// materialized canonical form, entrywise.
struct Witness {
  Mat2 g;
};

struct CanonicalizeResult {
  CanonicalForm form;
  Witness witness;
};

/// For nonzero nilpotent A returns invertible g with g A g^{-1} = E12.
/// Basis choice: the first of e1, e2 not annihilated by A.
std::pair<Mat2, Mat2> standardize_nilpotent(const Field& F, const Mat2& A);

CanonicalizeResult canonicalize(const Field& F, const NilTuple& T);

/// The tuple a canonical form stands for.
NilTuple materialize(const Field& F, const CanonicalForm& c);

/// Same-orbit test via canonical forms. Works over any supported field.
bool are_similar(const Field& F, const NilTuple& A, const NilTuple& B);

/// All orbit representatives over a finite field, generated directly
/// (no tuple enumeration): zero, then line forms by leading index and
/// coefficient code, then split forms by prefix length r, prefix,
/// pivot and tail codes. 1 <= m <= 6.
std::vector<CanonicalForm> orbit_representatives(const Field& F, int m);

/// Stable integer key of a form (finite fields), usable for hashing and
/// deterministic ordering.
std::vector<long> form_key(const Field& F, const CanonicalForm& c);

}  // namespace nilorbit
