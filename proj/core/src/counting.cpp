#include "nilorbit/counting.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nilorbit {

namespace {

BigInt bpow(const BigInt& q, long e) {
  BigInt v = 1;
  for (long i = 0; i < e; ++i) v *= q;
  return v;
}

// union-find with path halving
struct Dsu {
  std::vector<uint32_t> parent;

  explicit Dsu(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }

  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;  // smaller root wins
  }
};

// Transvections I + t E_ij plus one diagonal diag(z, 1, ...) with z of
// multiplicative order q-1. Together they generate GL_n.
std::vector<MatN> gl_generators(const Field& F, int n) {
  std::vector<MatN> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (const Fe& t : F.elements(true)) {
        MatN g = matn_identity(F, n);
        g(i, j) = t;
        gens.push_back(std::move(g));
      }
    }
  if (F.q() > 2) {
    Fe z = F.zero();
    for (const Fe& cand : F.elements(true)) {
      bool primitive = true;
      for (long e = 1; e < F.q() - 1; ++e)
        if (F.is_one(F.pow(cand, static_cast<uint64_t>(e)))) {
          primitive = false;
          break;
        }
      if (primitive) {
        z = cand;
        break;
      }
    }
    MatN d = matn_identity(F, n);
    d(0, 0) = z;
    gens.push_back(std::move(d));
  }
  return gens;
}

}  // namespace

BigInt s_geom(const BigInt& q, long k) {
  if (k < 0) return 0;
  BigInt s = 0;
  for (long i = 0; i <= k; ++i) s += bpow(q, i);
  return s;
}

bool is_prime_power(long q) {
  if (q < 2) return false;
  long p = 0;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return true;  // prime
  while (q % p == 0) q /= p;
  return q == 1;
}

BigInt kappa(long q, int m) {
  if (m < 1) throw std::invalid_argument("tuple length m must be >= 1");
  if (!is_prime_power(q)) throw std::invalid_argument("q must be a prime power >= 2");
  const BigInt Q = q;
  BigInt num = (bpow(Q, m) - 1) * (bpow(Q, m - 1) + Q);
  BigInt den = Q * Q - 1;
  BigInt quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) throw std::logic_error("kappa division is not exact");
  return 1 + quot;
}

BigInt IntPoly::eval(const BigInt& q) const {
  BigInt v = 0;
  for (size_t i = coeffs.size(); i-- > 0;) v = v * q + coeffs[i];
  return v;
}

namespace {

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly c;
  c.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (size_t i = 0; i < a.coeffs.size(); ++i) c.coeffs[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) c.coeffs[i] += b.coeffs[i];
  while (!c.coeffs.empty() && c.coeffs.back() == 0) c.coeffs.pop_back();
  return c;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  IntPoly c;
  c.coeffs.resize(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j)
      c.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return c;
}

// S_k evaluated at q^step as a polynomial in q
IntPoly s_geom_poly(long k, int step) {
  IntPoly s;
  if (k < 0) return s;
  s.coeffs.resize(static_cast<size_t>(k * step) + 1, 0);
  for (long i = 0; i <= k; ++i) s.coeffs[static_cast<size_t>(i * step)] = 1;
  return s;
}

IntPoly monomial(long c, int e) {
  IntPoly p;
  p.coeffs.resize(static_cast<size_t>(e) + 1, 0);
  p.coeffs[static_cast<size_t>(e)] = c;
  return p;
}

}  // namespace

IntPoly kappa_poly(int m) {
  if (m < 1) throw std::invalid_argument("tuple length m must be >= 1");
  // 1 + S_{m-1}(q) + (q^{m-1} - 1) S_{(m-2)/2}(q^2)   (m even)
  // 1 + S_{m-1}(q) + (q^m - 1) S_{(m-3)/2}(q^2)       (m odd)
  IntPoly acc = poly_add(monomial(1, 0), s_geom_poly(m - 1, 1));
  IntPoly factor, series;
  if (m % 2 == 0) {
    factor = poly_add(monomial(1, m - 1), monomial(-1, 0));
    series = s_geom_poly((m - 2) / 2, 2);
  } else {
    factor = poly_add(monomial(1, m), monomial(-1, 0));
    series = s_geom_poly((m - 3) / 2, 2);
  }
  acc = poly_add(acc, poly_mul(factor, series));
  for (const BigInt& c : acc.coeffs)
    if (c < 0) throw std::logic_error("kappa_poly produced a negative coefficient");
  return acc;
}

long gamma_size(long q, int m) {
  const BigInt k = kappa(q, m);
  long by_log = 0;
  BigInt power = 1;
  while (power < k) {
    power *= q;
    ++by_log;
  }
  long by_case;
  if (m == 1)
    by_case = 1;
  else if (m == 2 && q == 2)
    by_case = 3;
  else
    by_case = 2L * m - 2;
  if (by_case != by_log) {
    std::ostringstream os;
    os << "gamma mismatch at q=" << q << " m=" << m << ": case formula " << by_case
       << " vs ceil(log_q kappa) " << by_log;
    throw std::logic_error(os.str());
  }
  return by_case;
}

OrbitPartition orbit_partition(const Field& F, int n, int m, OrbitMethod method,
                               uint64_t budget) {
  if (!F.finite()) throw std::domain_error("orbit partition requires a finite field");
  if (n < 2 || n > 3) throw std::invalid_argument("matrix size must be 2 or 3");
  if (m < 1) throw std::invalid_argument("tuple length m must be >= 1");
  if (method == OrbitMethod::canonical_hash && n != 2)
    throw std::invalid_argument("canonical-form hashing is only available for n=2");

  constexpr uint64_t kMaxTuples = uint64_t{1} << 26;
  uint64_t scan = 1;  // matrix-entry scan for the nilpotent enumeration
  for (int i = 0; i < n * n; ++i) {
    scan *= static_cast<uint64_t>(F.q());
    if (scan > budget) throw std::runtime_error("budget exceeded");
  }
  uint64_t nil_count = 1;  // q^{n(n-1)}
  for (int i = 0; i < n * (n - 1); ++i) nil_count *= static_cast<uint64_t>(F.q());
  uint64_t tuple_count = 1;
  for (int i = 0; i < m; ++i) {
    if (tuple_count > kMaxTuples / nil_count)
      throw std::runtime_error("budget exceeded: tuple space too large");
    tuple_count *= nil_count;
  }

  const std::vector<MatN> nil = enumerate_nilpotent(F, n);
  const uint64_t nn = nil.size();

  OrbitPartition part;
  part.tuple_count = tuple_count;
  part.orbit_of.assign(tuple_count, 0);

  if (method == OrbitMethod::canonical_hash) {
    if (tuple_count > budget) throw std::runtime_error("budget exceeded");
    std::map<std::vector<long>, uint32_t> ids;
    std::vector<Mat2> nil2(nil.size());
    for (size_t i = 0; i < nil.size(); ++i) nil2[i] = matn_to_mat2(nil[i]);
    for (uint64_t t = 0; t < tuple_count; ++t) {
      NilTuple T;
      T.mats.resize(static_cast<size_t>(m));
      uint64_t rest = t;
      for (int i = m - 1; i >= 0; --i) {
        T.mats[static_cast<size_t>(i)] = nil2[rest % nn];
        rest /= nn;
      }
      std::vector<long> key = form_key(F, canonicalize(F, T).form);
      auto [it, fresh] = ids.emplace(std::move(key), 0u);
      if (fresh) {
        it->second = static_cast<uint32_t>(part.sizes.size());
        part.sizes.push_back(0);
      }
      part.orbit_of[t] = it->second;
      ++part.sizes[it->second];
    }
    return part;
  }

  std::vector<MatN> group = (method == OrbitMethod::full_group)
                                ? enumerate_gl(F, n)
                                : gl_generators(F, n);
  if (tuple_count * group.size() > budget) throw std::runtime_error("budget exceeded");

  // one permutation of the nilpotent list per group element
  std::vector<long> code_to_nil(static_cast<size_t>(bpow(BigInt(F.q()), n * n).convert_to<long>()), -1);
  for (size_t i = 0; i < nil.size(); ++i)
    code_to_nil[static_cast<size_t>(mat_code(F, nil[i]))] = static_cast<long>(i);
  std::vector<std::vector<uint32_t>> perms;
  perms.reserve(group.size());
  for (const MatN& g : group) {
    std::vector<uint32_t> perm(nil.size());
    for (size_t i = 0; i < nil.size(); ++i) {
      long code = mat_code(F, conjugate(F, g, nil[i]));
      long idx = code_to_nil[static_cast<size_t>(code)];
      if (idx < 0) throw std::logic_error("conjugation left the nilpotent set");
      perm[i] = static_cast<uint32_t>(idx);
    }
    perms.push_back(std::move(perm));
  }

  Dsu dsu(tuple_count);
  std::vector<uint32_t> digits(static_cast<size_t>(m));
  for (uint64_t t = 0; t < tuple_count; ++t) {
    uint64_t rest = t;
    for (int i = m - 1; i >= 0; --i) {
      digits[static_cast<size_t>(i)] = static_cast<uint32_t>(rest % nn);
      rest /= nn;
    }
    for (const auto& perm : perms) {
      uint64_t img = 0;
      for (int i = 0; i < m; ++i) img = img * nn + perm[digits[static_cast<size_t>(i)]];
      dsu.unite(static_cast<uint32_t>(t), static_cast<uint32_t>(img));
    }
  }

  std::map<uint32_t, uint32_t> root_ids;
  for (uint64_t t = 0; t < tuple_count; ++t) {
    uint32_t root = dsu.find(static_cast<uint32_t>(t));
    auto [it, fresh] = root_ids.emplace(root, 0u);
    if (fresh) {
      it->second = static_cast<uint32_t>(part.sizes.size());
      part.sizes.push_back(0);
    }
    part.orbit_of[t] = it->second;
    ++part.sizes[it->second];
  }
  return part;
}

OrbitCensus census_formula(const Field& F, int m) {
  if (!F.finite()) throw std::domain_error("census requires a finite field");
  OrbitCensus c;
  c.field_spec = F.spec();
  c.n = 2;
  c.m = m;
  c.count = kappa(F.q(), m);
  c.method = "formula";
  return c;
}

OrbitCensus census_representatives(const Field& F, int m) {
  OrbitCensus c;
  c.field_spec = F.spec();
  c.n = 2;
  c.m = m;
  c.count = static_cast<long>(orbit_representatives(F, m).size());
  c.method = "representatives";
  return c;
}

OrbitCensus brute_force_orbit_count(const Field& F, int n, int m, uint64_t budget) {
  OrbitMethod method;
  std::string algorithm;
  if (n == 2) {
    method = OrbitMethod::canonical_hash;
  } else {
    method = (F.q() == 2) ? OrbitMethod::full_group : OrbitMethod::unionfind_generators;
  }
  return brute_force_orbit_count(F, n, m, method, budget);
}

OrbitCensus brute_force_orbit_count(const Field& F, int n, int m, OrbitMethod method,
                                    uint64_t budget) {
  OrbitPartition part = orbit_partition(F, n, m, method, budget);
  OrbitCensus c;
  c.field_spec = F.spec();
  c.n = n;
  c.m = m;
  c.count = part.orbit_count();
  c.method = "brute-force";
  switch (method) {
    case OrbitMethod::canonical_hash: c.algorithm = "canonical-hash"; break;
    case OrbitMethod::unionfind_generators: c.algorithm = "union-find"; break;
    case OrbitMethod::full_group: c.algorithm = "full-group"; break;
  }
  c.orbit_sizes = std::move(part.sizes);
  return c;
}

ScanResult conjecture_scan(int n, int m, const std::vector<Field>& fields,
                           uint64_t budget) {
  ScanResult res;
  res.n = n;
  res.m = m;
  for (const Field& F : fields) {
    OrbitCensus c = brute_force_orbit_count(F, n, m, budget);
    res.rows.push_back(ScanRow{F.q(), c.count});
  }
  if (res.rows.size() >= 2) {
    std::ostringstream os;
    os << "data collection only: " << res.rows.size()
       << " data points underdetermine a polynomial in q; no fit attempted";
    res.note = os.str();
  }
  return res;
}

}  // namespace nilorbit
