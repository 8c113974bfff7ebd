#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nilorbit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { finite, rational };

class Field;

/// Element of a Field. Plain value; all arithmetic goes through the owning
/// Field instance. Mixing elements of distinct Field instances throws.
class Fe {
public:
  Fe() = default;

  bool operator==(const Fe& o) const = default;

  uint32_t field_id() const { return fid_; }

private:
  friend class Field;
  int32_t idx_ = 0;   // finite: element code in [0, q); rational: -1
  uint32_t fid_ = 0;  // owning field instance id (0 = detached)
  Rational rat_ = 0;  // rational-mode value (kept at 0 for finite fields)
};

/// A prime field GF(p), a small extension field GF(p^k) given by a monic
/// irreducible modulus, or the exact rationals. Immutable; cheap to copy
/// (shared internal tables); safe to share across threads.
///
/// Finite elements are canonically encoded as integers 0..q-1: an element
/// with coefficient vector (c_0,...,c_{k-1}) over GF(p) has code
/// sum c_i p^i. Enumeration order is code order, so it starts 0, 1 and then
/// runs through the remaining coefficient vectors lexicographically.
class Field {
public:
  Field() = default;

  /// Parses a field-spec string: "q=<p>", "q=<p>^<k>",
  /// "q=<p>^<k>;poly=<c0,c1,...,ck>" (ascending, monic) or "rational".
  static Field make(std::string_view spec);

  /// GF(p^k) with the built-in modulus for k > 1.
  static Field gf(long p, int k = 1);
  /// GF(p^k) with an explicit monic modulus, ascending coefficients,
  /// size k+1. Irreducibility is checked exhaustively.
  static Field gf(long p, int k, const std::vector<long>& modulus);
  static Field rationals();

  FieldKind kind() const;
  bool finite() const { return kind() == FieldKind::finite; }
  long p() const;  ///< characteristic (0 in rational mode)
  int k() const;   ///< extension degree (1 in rational mode)
  long q() const;  ///< cardinality p^k (0 in rational mode)
  /// Modulus coefficients, ascending, size k+1; empty for k == 1 and
  /// rational mode.
  const std::vector<long>& modulus() const;
  /// Canonical spec string; Field::make round-trips it.
  std::string spec() const;
  uint32_t id() const;

  Fe zero() const;
  Fe one() const;
  /// Image of the integer n (prime-subfield embedding for finite fields,
  /// exact value in rational mode).
  Fe from_int(long n) const;
  /// num/den as an exact rational (rational mode only).
  Fe from_ratio(long num, long den) const;
  /// Element with canonical code c, 0 <= c < q (finite only).
  Fe decode(long code) const;
  /// Canonical integer code of x (finite only).
  long encode(const Fe& x) const;

  Fe add(const Fe& a, const Fe& b) const;
  Fe sub(const Fe& a, const Fe& b) const;
  Fe mul(const Fe& a, const Fe& b) const;
  Fe div(const Fe& a, const Fe& b) const;
  Fe neg(const Fe& a) const;
  Fe inv(const Fe& a) const;
  /// a^e for e >= 0, with 0^0 = 1.
  Fe pow(const Fe& a, uint64_t e) const;

  bool is_zero(const Fe& a) const;
  bool is_one(const Fe& a) const;

  /// All q elements (or the q-1 nonzero ones) in canonical order.
  /// Throws in rational mode.
  std::vector<Fe> elements(bool nonzero = false) const;

  /// "3", "x+1"-free printing: finite elements print as their integer
  /// code, rationals as num or num/den.
  std::string str(const Fe& a) const;

private:
  struct Rep;
  explicit Field(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  const Rep& rep() const;
  void check_owned(const Fe& a) const;

  std::shared_ptr<const Rep> rep_;
};

}  // namespace nilorbit
