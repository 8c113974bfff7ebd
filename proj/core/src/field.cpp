#include "nilorbit/field.hpp"

#include <atomic>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nilorbit {

namespace {

constexpr long kMaxQ = 128;
constexpr int kMaxK = 7;

std::atomic<uint32_t> next_field_id{1};

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// --- dense univariate polynomials over GF(p), ascending coefficients ---

using Poly = std::vector<long>;

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// remainder of a mod b (b monic), coefficients mod p
Poly poly_rem(Poly a, const Poly& b, long p) {
  a = poly_trim(std::move(a));
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    const long lead = a.back();
    const int shift = static_cast<int>(a.size()) - 1 - db;
    for (int i = 0; i <= db; ++i) {
      long& c = a[static_cast<size_t>(i + shift)];
      c = ((c - lead * b[static_cast<size_t>(i)]) % p + p) % p;
    }
    a = poly_trim(std::move(a));
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_trim(std::move(c));
}

// Exhaustive check: no monic divisor of degree 1..deg/2. Feasible for the
// supported sizes (p^k <= 128).
bool poly_irreducible(const Poly& f, long p) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      Poly g(static_cast<size_t>(d) + 1, 0);
      long c = code;
      for (int i = 0; i < d; ++i) {
        g[static_cast<size_t>(i)] = c % p;
        c /= p;
      }
      g[static_cast<size_t>(d)] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Built-in monic irreducible moduli, ascending coefficients c0..ck.
// Re-verified irreducible at construction time.
const std::map<std::pair<long, int>, Poly>& builtin_moduli() {
  static const std::map<std::pair<long, int>, Poly> table = {
      {{2, 2}, {1, 1, 1}},              // x^2+x+1
      {{2, 3}, {1, 1, 0, 1}},           // x^3+x+1
      {{2, 4}, {1, 1, 0, 0, 1}},        // x^4+x+1
      {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},  // x^6+x+1
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},  // x^7+x+1
      {{3, 2}, {1, 0, 1}},              // x^2+1
      {{3, 3}, {1, 2, 0, 1}},           // x^3+2x+1
      {{3, 4}, {2, 1, 0, 0, 1}},        // x^4+x+2
      {{5, 2}, {1, 1, 1}},              // x^2+x+1
      {{7, 2}, {3, 1, 1}},              // x^2+x+3
      {{11, 2}, {7, 1, 1}},             // x^2+x+7
  };
  return table;
}

}  // namespace

struct Field::Rep {
  FieldKind kind = FieldKind::finite;
  long p = 0;
  int k = 1;
  long q = 0;
  std::vector<long> modulus;  // ascending, size k+1; empty for k==1/rational
  uint32_t id = 0;
  // dense op tables, q*q and q entries
  std::vector<int32_t> add_tab, mul_tab;
  std::vector<int32_t> neg_tab, inv_tab;  // inv_tab[0] = -1
};

const Field::Rep& Field::rep() const {
  if (!rep_) throw std::invalid_argument("use of default-constructed Field");
  return *rep_;
}

Field Field::rationals() {
  auto rep = std::make_shared<Rep>();
  rep->kind = FieldKind::rational;
  rep->id = next_field_id.fetch_add(1);
  return Field(std::move(rep));
}

Field Field::gf(long p, int k) {
  if (k > 1) {
    auto it = builtin_moduli().find({p, k});
    if (it == builtin_moduli().end()) {
      std::ostringstream os;
      os << "no built-in modulus for GF(" << p << "^" << k
         << "); pass poly=... explicitly";
      throw std::invalid_argument(os.str());
    }
    return gf(p, k, it->second);
  }
  return gf(p, 1, {});
}

Field Field::gf(long p, int k, const std::vector<long>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (k < 1 || k > kMaxK) throw std::invalid_argument("unsupported extension degree");
  long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxQ) throw std::invalid_argument("unsupported field size (q > 128)");
  }

  auto rep = std::make_shared<Rep>();
  rep->kind = FieldKind::finite;
  rep->p = p;
  rep->k = k;
  rep->q = q;

  if (k == 1) {
    if (!modulus.empty())
      throw std::invalid_argument("modulus not allowed for a prime field");
  } else {
    if (static_cast<int>(modulus.size()) != k + 1)
      throw std::invalid_argument("modulus must have k+1 coefficients");
    Poly f;
    f.reserve(modulus.size());
    for (long c : modulus) f.push_back(((c % p) + p) % p);
    if (f.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!poly_irreducible(f, p))
      throw std::invalid_argument("modulus is reducible over GF(p)");
    rep->modulus.assign(f.begin(), f.end());
  }

  // element code <-> coefficient vector, base p, c0 least significant
  auto digits = [&](long code) {
    Poly c(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
      c[static_cast<size_t>(i)] = code % p;
      code /= p;
    }
    return c;
  };
  auto code_of = [&](const Poly& c) {
    long v = 0;
    for (int i = k - 1; i >= 0; --i)
      v = v * p + (i < static_cast<int>(c.size()) ? c[static_cast<size_t>(i)] : 0);
    return v;
  };

  rep->add_tab.resize(static_cast<size_t>(q) * q);
  rep->mul_tab.resize(static_cast<size_t>(q) * q);
  rep->neg_tab.resize(static_cast<size_t>(q));
  rep->inv_tab.assign(static_cast<size_t>(q), -1);
  Poly mod(rep->modulus.begin(), rep->modulus.end());
  for (long a = 0; a < q; ++a) {
    const Poly da = digits(a);
    Poly na(da.size());
    for (size_t i = 0; i < da.size(); ++i) na[i] = (p - da[i]) % p;
    rep->neg_tab[static_cast<size_t>(a)] = static_cast<int32_t>(code_of(na));
    for (long b = 0; b < q; ++b) {
      const Poly db = digits(b);
      Poly s(da.size());
      for (size_t i = 0; i < da.size(); ++i) s[i] = (da[i] + db[i]) % p;
      rep->add_tab[static_cast<size_t>(a) * q + b] = static_cast<int32_t>(code_of(s));
      Poly m = poly_mul(poly_trim(da), poly_trim(db), p);
      if (k > 1) m = poly_rem(std::move(m), mod, p);
      rep->mul_tab[static_cast<size_t>(a) * q + b] = static_cast<int32_t>(code_of(m));
    }
  }
  for (long a = 1; a < q; ++a)
    for (long b = 1; b < q; ++b)
      if (rep->mul_tab[static_cast<size_t>(a) * q + b] == 1) {
        rep->inv_tab[static_cast<size_t>(a)] = static_cast<int32_t>(b);
        break;
      }

  rep->id = next_field_id.fetch_add(1);
  return Field(std::move(rep));
}

Field Field::make(std::string_view spec) {
  if (spec == "rational") return rationals();
  if (!spec.starts_with("q="))
    throw std::invalid_argument("field spec must be q=... or rational");
  std::string body(spec.substr(2));
  std::string poly_part;
  if (auto semi = body.find(';'); semi != std::string::npos) {
    poly_part = body.substr(semi + 1);
    body = body.substr(0, semi);
    if (!poly_part.starts_with("poly="))
      throw std::invalid_argument("expected poly=... after ';'");
    poly_part = poly_part.substr(5);
  }
  long p = 0;
  int k = 1;
  if (auto caret = body.find('^'); caret != std::string::npos) {
    auto r1 = std::from_chars(body.data(), body.data() + caret, p);
    auto r2 = std::from_chars(body.data() + caret + 1, body.data() + body.size(), k);
    if (r1.ec != std::errc{} || r1.ptr != body.data() + caret ||
        r2.ec != std::errc{} || r2.ptr != body.data() + body.size())
      throw std::invalid_argument("bad field spec: " + std::string(spec));
  } else {
    auto r = std::from_chars(body.data(), body.data() + body.size(), p);
    if (r.ec != std::errc{} || r.ptr != body.data() + body.size())
      throw std::invalid_argument("bad field spec: " + std::string(spec));
  }
  if (poly_part.empty()) return gf(p, k);
  std::vector<long> coeffs;
  size_t pos = 0;
  while (pos <= poly_part.size()) {
    auto comma = poly_part.find(',', pos);
    auto end = (comma == std::string::npos) ? poly_part.size() : comma;
    long c = 0;
    auto r = std::from_chars(poly_part.data() + pos, poly_part.data() + end, c);
    if (r.ec != std::errc{} || r.ptr != poly_part.data() + end)
      throw std::invalid_argument("bad modulus coefficients");
    coeffs.push_back(c);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return gf(p, k, coeffs);
}

FieldKind Field::kind() const { return rep().kind; }
long Field::p() const { return rep().p; }
int Field::k() const { return rep().kind == FieldKind::rational ? 1 : rep().k; }
long Field::q() const { return rep().q; }
const std::vector<long>& Field::modulus() const { return rep().modulus; }
uint32_t Field::id() const { return rep().id; }

std::string Field::spec() const {
  const Rep& r = rep();
  if (r.kind == FieldKind::rational) return "rational";
  std::ostringstream os;
  os << "q=" << r.p;
  if (r.k > 1) {
    os << "^" << r.k << ";poly=";
    for (size_t i = 0; i < r.modulus.size(); ++i) {
      if (i) os << ",";
      os << r.modulus[i];
    }
  }
  return os.str();
}

void Field::check_owned(const Fe& a) const {
  if (a.fid_ != rep().id)
    throw std::invalid_argument("field mismatch: element belongs to another field");
}

Fe Field::zero() const { return from_int(0); }
Fe Field::one() const { return from_int(1); }

Fe Field::from_int(long n) const {
  const Rep& r = rep();
  Fe x;
  x.fid_ = r.id;
  if (r.kind == FieldKind::rational) {
    x.idx_ = -1;
    x.rat_ = n;
  } else {
    x.idx_ = static_cast<int32_t>(((n % r.p) + r.p) % r.p);
  }
  return x;
}

Fe Field::from_ratio(long num, long den) const {
  const Rep& r = rep();
  if (r.kind != FieldKind::rational)
    throw std::domain_error("from_ratio requires the rational field");
  if (den == 0) throw std::domain_error("zero denominator");
  Fe x;
  x.fid_ = r.id;
  x.idx_ = -1;
  x.rat_ = Rational(num, den);
  return x;
}

Fe Field::decode(long code) const {
  const Rep& r = rep();
  if (r.kind == FieldKind::rational)
    throw std::domain_error("decode requires a finite field");
  if (code < 0 || code >= r.q) throw std::invalid_argument("element code out of range");
  Fe x;
  x.fid_ = r.id;
  x.idx_ = static_cast<int32_t>(code);
  return x;
}

long Field::encode(const Fe& x) const {
  check_owned(x);
  if (rep().kind == FieldKind::rational)
    throw std::domain_error("encode requires a finite field");
  return x.idx_;
}

Fe Field::add(const Fe& a, const Fe& b) const {
  const Rep& r = rep();
  check_owned(a);
  check_owned(b);
  Fe x;
  x.fid_ = r.id;
  if (r.kind == FieldKind::rational) {
    x.idx_ = -1;
    x.rat_ = a.rat_ + b.rat_;
  } else {
    x.idx_ = r.add_tab[static_cast<size_t>(a.idx_) * r.q + b.idx_];
  }
  return x;
}

Fe Field::sub(const Fe& a, const Fe& b) const { return add(a, neg(b)); }

Fe Field::mul(const Fe& a, const Fe& b) const {
  const Rep& r = rep();
  check_owned(a);
  check_owned(b);
  Fe x;
  x.fid_ = r.id;
  if (r.kind == FieldKind::rational) {
    x.idx_ = -1;
    x.rat_ = a.rat_ * b.rat_;
  } else {
    x.idx_ = r.mul_tab[static_cast<size_t>(a.idx_) * r.q + b.idx_];
  }
  return x;
}

Fe Field::div(const Fe& a, const Fe& b) const { return mul(a, inv(b)); }

Fe Field::neg(const Fe& a) const {
  const Rep& r = rep();
  check_owned(a);
  Fe x;
  x.fid_ = r.id;
  if (r.kind == FieldKind::rational) {
    x.idx_ = -1;
    x.rat_ = -a.rat_;
  } else {
    x.idx_ = r.neg_tab[static_cast<size_t>(a.idx_)];
  }
  return x;
}

Fe Field::inv(const Fe& a) const {
  const Rep& r = rep();
  check_owned(a);
  if (is_zero(a)) throw std::domain_error("division by zero");
  Fe x;
  x.fid_ = r.id;
  if (r.kind == FieldKind::rational) {
    x.idx_ = -1;
    x.rat_ = 1 / a.rat_;
  } else {
    x.idx_ = r.inv_tab[static_cast<size_t>(a.idx_)];
  }
  return x;
}

Fe Field::pow(const Fe& a, uint64_t e) const {
  check_owned(a);
  Fe acc = one();
  Fe base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

bool Field::is_zero(const Fe& a) const {
  check_owned(a);
  return rep().kind == FieldKind::rational ? a.rat_ == 0 : a.idx_ == 0;
}

bool Field::is_one(const Fe& a) const {
  check_owned(a);
  return rep().kind == FieldKind::rational ? a.rat_ == 1 : a.idx_ == 1;
}

std::vector<Fe> Field::elements(bool nonzero) const {
  const Rep& r = rep();
  if (r.kind == FieldKind::rational)
    throw std::domain_error("cannot enumerate an infinite field");
  std::vector<Fe> out;
  out.reserve(static_cast<size_t>(r.q) - (nonzero ? 1 : 0));
  for (long c = nonzero ? 1 : 0; c < r.q; ++c) out.push_back(decode(c));
  return out;
}

std::string Field::str(const Fe& a) const {
  check_owned(a);
  if (rep().kind == FieldKind::rational) {
    std::ostringstream os;
    os << a.rat_;
    return os.str();
  }
  return std::to_string(a.idx_);
}

}  // namespace nilorbit
