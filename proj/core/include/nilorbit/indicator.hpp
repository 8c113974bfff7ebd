#pragma once

#include <optional>
#include <vector>

#include "nilorbit/canonical.hpp"
#include "nilorbit/reduced_poly.hpp"

namespace nilorbit {

/// Flattened coordinates of a tuple in F^{4m}: matrix entries row-major,
/// tuple order.
std::vector<Fe> tuple_to_point(const Field& F, const NilTuple& T);

/// f_w = (-1)^n prod_i prod_{a != w_i} (y_i - a): the reduced polynomial
/// with f_w(w) = 1 and f_w = 0 elsewhere; total degree exactly n(q-1).
ReducedPoly point_indicator(const Field& F, std::span<const Fe> w);

/// Sum of point indicators over an orbit: 1 on the orbit, 0 on the rest
/// of the ambient space.
ReducedPoly orbit_indicator(const Field& F, int nvars,
                            const std::vector<std::vector<Fe>>& orbit_points);

/// gamma x kappa matrix over the field with pairwise distinct columns.
class AlphaMatrix {
public:
  AlphaMatrix(const Field& F, int rows, long cols, std::vector<Fe> entries);

  /// Columns are the first kappa vectors of F^gamma, counting in base q
  /// with the last coordinate least significant.
  static AlphaMatrix lex_default(const Field& F, int rows, long cols);

  int rows() const { return rows_; }
  long cols() const { return cols_; }
  const Fe& at(int i, long j) const { return entries_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }

private:
  int rows_;
  long cols_;
  std::vector<Fe> entries_;
};

/// The combination set h_i = sum_j alpha_ij f_j, carried as value tables
/// over orbit indices plus (optionally) expanded reduced polynomials.
struct HSet {
  int m = 0;
  std::vector<CanonicalForm> orbits;        // column order
  std::optional<AlphaMatrix> alpha;
  std::vector<std::vector<Fe>> tables;      // h_i value on orbit j
  std::vector<ReducedPoly> polys;           // empty when not expanded
};

/// Builds the h-set over all GL2-orbits of nilpotent m-tuples. gamma is
/// the least g with q^g >= kappa; the default alpha matrix is the
/// lexicographic one. Enumerates the q^{2m} tuples to collect orbits.
HSet build_h_set(const Field& F, int m,
                 const std::optional<AlphaMatrix>& alpha = std::nullopt,
                 bool with_polys = true, uint64_t budget = 1'000'000'000);

struct HVerdict {
  bool separating = false;     // orbit value-vectors pairwise distinct
  bool lower_bound_ok = false; // every (gamma-1)-subset fails to separate
};

HVerdict verify_h_separating(const HSet& H, const Field& F);

/// ceil(log_q k): least g with q^g >= k.
int ceil_log_q(long q, const BigInt& k);

}  // namespace nilorbit
