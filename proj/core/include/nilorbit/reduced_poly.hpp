#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "nilorbit/field.hpp"

namespace nilorbit {

/// Sparse polynomial over a finite field GF(q) with every exponent < q,
/// the canonical representative modulo the relations x^q = x. Exponents
/// are reduced on construction; terms are kept in lexicographic exponent
/// order.
class ReducedPoly {
public:
  ReducedPoly(const Field& F, int nvars);

  static ReducedPoly constant(const Field& F, int nvars, const Fe& c);
  static ReducedPoly variable(const Field& F, int nvars, int v);

  const Field& field() const { return F_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<std::vector<uint8_t>, Fe>& terms() const { return terms_; }

  /// Max total degree over nonzero terms; 0 for nonzero constants, -1 for
  /// the zero polynomial.
  int degree() const;

  /// Adds c * prod y_i^{exps[i]}, reducing exponents via x^q = x.
  void add_term(std::vector<uint8_t> exps, const Fe& c);

  ReducedPoly operator+(const ReducedPoly& o) const;
  ReducedPoly operator-(const ReducedPoly& o) const;
  ReducedPoly operator*(const ReducedPoly& o) const;
  ReducedPoly& operator+=(const ReducedPoly& o);
  ReducedPoly scaled(const Fe& c) const;
  ReducedPoly pow(unsigned e) const;

  Fe eval(std::span<const Fe> point) const;

  bool operator==(const ReducedPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

private:
  Field F_;
  int nvars_;
  std::map<std::vector<uint8_t>, Fe> terms_;
};

inline int poly_degree(const ReducedPoly& p) { return p.degree(); }

}  // namespace nilorbit
