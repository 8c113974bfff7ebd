#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilorbit/canonical.hpp"
#include "nilorbit/mat.hpp"

namespace nilorbit {

/// S_k(q) = q^k + ... + 1 for k >= 0, and 0 for k < 0.
BigInt s_geom(const BigInt& q, long k);

bool is_prime_power(long q);

/// Number of GL2-orbits on m-tuples of nilpotent 2x2 matrices over F_q:
/// 1 + (q^m - 1)(q^{m-1} + q) / (q^2 - 1). The division is checked exact.
BigInt kappa(long q, int m);

/// Integer polynomial in q, ascending coefficients.
struct IntPoly {
  std::vector<BigInt> coeffs;

  BigInt eval(const BigInt& q) const;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const IntPoly&) const = default;
};

/// kappa as a polynomial in q with non-negative integer coefficients.
IntPoly kappa_poly(int m);

/// Least size of a separating set: 1 for m=1, 3 for m=q=2, else 2m-2.
/// Also computed independently as ceil(log_q kappa); a mismatch throws.
long gamma_size(long q, int m);

enum class OrbitMethod {
  canonical_hash,       // n = 2 only: hash tuples by canonical form
  unionfind_generators, // union-find under transvections + one diagonal
  full_group,           // union-find under every invertible matrix
};

/// Deterministic orbit labels for all |N_n|^m tuples. Tuples are indexed
/// by their entries' positions in enumerate_nilpotent order, first entry
/// most significant; orbit ids are assigned by first appearance.
struct OrbitPartition {
  uint64_t tuple_count = 0;
  std::vector<uint32_t> orbit_of;
  std::vector<uint64_t> sizes;  // by orbit id

  uint32_t orbit_count() const { return static_cast<uint32_t>(sizes.size()); }
};

OrbitPartition orbit_partition(const Field& F, int n, int m, OrbitMethod method,
                               uint64_t budget = 1'000'000'000);

struct OrbitCensus {
  std::string field_spec;
  int n = 2;
  int m = 1;
  BigInt count;
  std::string method;     // formula | representatives | brute-force
  std::string algorithm;  // brute-force detail, empty otherwise
  std::vector<uint64_t> orbit_sizes;  // empty for formula/representatives
};

OrbitCensus census_formula(const Field& F, int m);
OrbitCensus census_representatives(const Field& F, int m);

/// Exhaustive orbit count by the group action. Default method follows the
/// field/size: canonical-form hashing for n=2, generator union-find for
/// n=3 with the full group at q=2.
OrbitCensus brute_force_orbit_count(const Field& F, int n, int m,
                                    uint64_t budget = 1'000'000'000);
OrbitCensus brute_force_orbit_count(const Field& F, int n, int m,
                                    OrbitMethod method, uint64_t budget);

struct ScanRow {
  long q = 0;
  BigInt count;
};

struct ScanResult {
  int n = 3;
  int m = 1;
  std::vector<ScanRow> rows;
  std::string note;
};

/// Orbit-count census over several fields (data collection only).
ScanResult conjecture_scan(int n, int m, const std::vector<Field>& fields,
                           uint64_t budget = 1'000'000'000);

}  // namespace nilorbit
