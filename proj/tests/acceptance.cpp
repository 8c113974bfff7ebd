// Acceptance suite: one pass/fail line per criterion. All arithmetic is
// exact, so every comparison is exact equality; each criterion also has a
// wall-clock ceiling. Exits with the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nilorbit/counting.hpp"
#include "nilorbit/indicator.hpp"
#include "nilorbit/invariants.hpp"

using namespace nilorbit;

namespace {

int failures = 0;

void run(int id, const std::string& what, double limit_s, const std::function<void()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string error;
  try {
    body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (error.empty() && dt > limit_s) error = "runtime limit exceeded";
  if (error.empty()) {
    std::printf("[PASS] criterion %2d: %s (%.2fs)\n", id, what.c_str(), dt);
  } else {
    std::printf("[FAIL] criterion %2d: %s (%.2fs): %s\n", id, what.c_str(), dt, error.c_str());
    ++failures;
  }
}

struct check_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw check_error(msg);
}

std::vector<Fe> flat(const Field& F, const NilTuple& T) { return tuple_to_point(F, T); }

uint64_t tuples_total(const Field& F, int m) {
  uint64_t nn = static_cast<uint64_t>(F.q()) * static_cast<uint64_t>(F.q());
  uint64_t t = 1;
  for (int i = 0; i < m; ++i) t *= nn;
  return t;
}

NilTuple tuple_at(const Field& F, const std::vector<Mat2>& nil, uint64_t idx, int m) {
  NilTuple T;
  T.mats.resize(static_cast<size_t>(m));
  for (int i = m - 1; i >= 0; --i) {
    T.mats[static_cast<size_t>(i)] = nil[idx % nil.size()];
    idx /= nil.size();
  }
  return T;
}

void criterion1() {
  const std::vector<std::pair<std::string, int>> cases = {
      {"q=2", 1}, {"q=2", 2}, {"q=2", 3}, {"q=3", 1},
      {"q=3", 2}, {"q=3", 3}, {"q=2^2", 2}, {"q=5", 2}};
  for (const auto& [spec, m] : cases) {
    Field F = Field::make(spec);
    BigInt k = kappa(F.q(), m);
    BigInt reps = static_cast<long>(orbit_representatives(F, m).size());
    BigInt brute = brute_force_orbit_count(F, 2, m, OrbitMethod::full_group,
                                           1'000'000'000).count;
    require(k == reps, spec + " m=" + std::to_string(m) + ": kappa != representatives");
    require(k == brute, spec + " m=" + std::to_string(m) + ": kappa != brute force");
  }
  require(kappa(2, 2) == 5, "kappa(2,2) != 5");
  require(kappa(2, 3) == 15, "kappa(2,3) != 15");
  require(kappa(3, 3) == 40, "kappa(3,3) != 40");
}

void criterion2() {
  for (int m = 1; m <= 8; ++m) {
    IntPoly p = kappa_poly(m);
    for (const BigInt& c : p.coeffs) require(c >= 0, "negative coefficient");
    for (long q : {2, 3, 4, 5, 7, 8, 9})
      require(p.eval(q) == kappa(q, m), "kappa_poly mismatch at q=" + std::to_string(q));
  }
  require(kappa_poly(4).coeffs == std::vector<BigInt>{1, 1, 0, 2, 0, 1},
          "kappa_poly(4) != q^5 + 2q^3 + q + 1");
  require(kappa_poly(5).coeffs == std::vector<BigInt>{1, 1, 0, 1, 1, 1, 0, 1},
          "kappa_poly(5) != q^7 + q^5 + q^4 + q^3 + q + 1");
}

void criterion3() {
  for (long q : {2, 3, 4, 5, 7, 8, 9})
    for (int m = 1; m <= 8; ++m) gamma_size(q, m);  // throws on mismatch
  require(gamma_size(2, 2) == 3, "gamma(2,2) != 3");
  require(gamma_size(2, 3) == 4, "gamma(2,3) != 4");
  require(gamma_size(3, 2) == 2, "gamma(3,2) != 2");
}

void criterion4() {
  for (const auto& [spec, m] : std::vector<std::pair<std::string, int>>{
           {"q=2", 2}, {"q=3", 2}, {"q=2", 3}}) {
    Field F = Field::make(spec);
    OrbitPartition by_action = orbit_partition(F, 2, m, OrbitMethod::full_group);
    OrbitPartition by_form = orbit_partition(F, 2, m, OrbitMethod::canonical_hash);
    require(by_action.orbit_of == by_form.orbit_of,
            spec + " m=" + std::to_string(m) + ": partitions differ");

    auto nil = enumerate_nilpotent2(F);
    const uint64_t total = tuples_total(F, m);
    for (uint64_t t = 0; t < total; ++t) {
      NilTuple T = tuple_at(F, nil, t, m);
      auto [form, w] = canonicalize(F, T);
      require(is_invertible(F, w.g), "witness not invertible");
      require(conjugate_tuple(F, w.g, T) == materialize(F, form),
              "witness does not map to the canonical form");
    }
    for (const CanonicalForm& c : orbit_representatives(F, m))
      require(canonicalize(F, materialize(F, c)).form == c, "canonicalize not idempotent");
  }
}

void criterion5() {
  for (const auto& [spec, kind] : std::vector<std::pair<std::string, SetKind>>{
           {"q=2", SetKind::H2}, {"q=2^2", SetKind::H2}, {"q=3", SetKind::H},
           {"q=5", SetKind::H}}) {
    Field F = Field::make(spec);
    for (int m = 1; m <= 3; ++m) {
      InvariantSet set = build_set(kind, F, m);
      require(check_separating(set, F, m).separating,
              spec + " m=" + std::to_string(m) + ": set not separating");
      require(check_minimality(set, F, m).minimal,
              spec + " m=" + std::to_string(m) + ": set not minimal");
    }
  }

  // claim witnesses, replayed literally
  {
    Field F = Field::gf(2);  // claim 1
    InvariantSet H = build_set(SetKind::H2, F, 1);
    NilTuple A = make_nil_tuple(F, {mat2_zero(F)});
    NilTuple B = make_nil_tuple(F, {e12(F)});
    auto idx = separating_indices(F, H, A, B);
    require(idx.size() == 1 && std::holds_alternative<ZetaFn>(H.fns[idx[0]]),
            "claim 1 witness not reproduced");
  }
  for (const char* spec : {"q=3", "q=2^2", "q=5"}) {  // claim 2
    Field F = Field::make(spec);
    InvariantSet H = build_set(F.p() == 2 ? SetKind::H2 : SetKind::H, F, 2);
    for (const Fe& b : F.elements(true)) {
      if (F.is_one(b)) continue;
      NilTuple A = make_nil_tuple(F, {e12(F), e12(F)});
      NilTuple B = make_nil_tuple(F, {e12(F), smul(F, b, e12(F))});
      auto idx = separating_indices(F, H, A, B);
      require(idx.size() == 1, "claim 2: not separated by exactly one element");
      const auto* eta = std::get_if<EtaFn>(&H.fns[idx[0]]);
      require(eta && eta->alpha == b, "claim 2: wrong separator");
    }
  }
  for (const char* spec : {"q=2", "q=3", "q=2^2", "q=5"}) {  // claim 3
    Field F = Field::make(spec);
    InvariantSet H = build_set(F.p() == 2 ? SetKind::H2 : SetKind::H, F, 2);
    NilTuple A = make_nil_tuple(F, {e12(F), e12(F)});
    NilTuple B = make_nil_tuple(F, {e12(F), e21(F)});
    auto idx = separating_indices(F, H, A, B);
    require(idx.size() == 1 && std::holds_alternative<TrPair>(H.fns[idx[0]]),
            "claim 3 witness not reproduced");
  }
  for (const char* spec : {"q=3", "q=5"}) {  // claim 4: triple traces 1 vs -1
    Field F = Field::make(spec);
    InvariantSet H = build_set(SetKind::H, F, 3);
    NilTuple A = make_nil_tuple(
        F, {e12(F), e21(F), mat2_d(F, F.one(), F.one(), F.from_int(-1))});
    NilTuple B = make_nil_tuple(
        F, {e12(F), e21(F), mat2_d(F, F.from_int(-1), F.one(), F.from_int(-1))});
    require(eval_invariant(F, TrTriple{1, 2, 3}, A) == F.one(), "claim 4: tr(A1A2A3) != 1");
    require(eval_invariant(F, TrTriple{1, 2, 3}, B) == F.from_int(-1),
            "claim 4: tr(B1B2B3) != -1");
    auto idx = separating_indices(F, H, A, B);
    require(idx.size() == 1 && std::holds_alternative<TrTriple>(H.fns[idx[0]]),
            "claim 4 witness not reproduced");
  }

  // claims 3-4 over the exact rationals: same values as over F_q
  {
    Field Q = Field::rationals();
    NilTuple A = make_nil_tuple(
        Q, {e12(Q), e21(Q), mat2_d(Q, Q.one(), Q.one(), Q.from_int(-1))});
    NilTuple B = make_nil_tuple(
        Q, {e12(Q), e21(Q), mat2_d(Q, Q.from_int(-1), Q.one(), Q.from_int(-1))});
    require(eval_invariant(Q, TrTriple{1, 2, 3}, A) == Q.one(), "rational claim 4: A");
    require(eval_invariant(Q, TrTriple{1, 2, 3}, B) == Q.from_int(-1), "rational claim 4: B");
    for (const InvariantFn& fn :
         {InvariantFn{TrPair{1, 2}}, InvariantFn{TrPair{1, 3}}, InvariantFn{TrPair{2, 3}}})
      require(eval_invariant(Q, fn, A) == eval_invariant(Q, fn, B),
              "rational claim 4: pair traces differ");
    require(!are_similar(Q, A, B), "rational claim 4: tuples similar");
    NilTuple C = make_nil_tuple(Q, {e12(Q), e12(Q)});
    NilTuple D = make_nil_tuple(Q, {e12(Q), e21(Q)});
    require(eval_invariant(Q, TrPair{1, 2}, C) == Q.zero() &&
            eval_invariant(Q, TrPair{1, 2}, D) == Q.one(),
            "rational claim 3: pair trace values");
  }
}

void criterion6() {
  for (const char* spec : {"q=2", "q=3", "q=2^2", "q=5"}) {
    Field F = Field::make(spec);
    auto nil = enumerate_nilpotent2(F);
    for (const Mat2& A : nil) {
      require(zeta_poly(F, A) == (is_zero(F, A) ? F.one() : F.zero()),
              "zeta polynomial disagrees with the indicator");
      for (const Mat2& B : nil)
        for (const Fe& alpha : F.elements(true))
          require(eta_poly(F, alpha, A, B) ==
                      (smul(F, alpha, A) == B ? F.one() : F.zero()),
                  "eta polynomial disagrees with the indicator");
    }
  }

  for (const char* spec : {"q=2", "q=3", "q=5"}) {  // eta_1 case identity
    Field F = Field::make(spec);
    auto nil = enumerate_nilpotent2(F);
    for (const Mat2& A : nil)
      for (const Mat2& B : nil) {
        NilTuple T = make_nil_tuple(F, {A, B});
        Fe got = eval_invariant(F, EtaFn{F.one(), 1, 2}, T);
        Fe want;
        if (is_zero(F, A) && is_zero(F, B)) want = F.one();
        else if (is_zero(F, A) != is_zero(F, B)) want = F.zero();
        else if (!F.is_zero(trace(F, mul(F, A, B)))) want = F.zero();
        else {
          want = F.one();
          for (const Fe& alpha : F.elements(true))
            if (!F.is_one(alpha)) want = F.sub(want, eval_invariant(F, EtaFn{alpha, 1, 2}, T));
        }
        require(got == want, "eta_1 case identity fails");
      }
  }

  for (const char* spec : {"q=2", "q=2^2"}) {  // char 2: pair traces pin the triple trace
    Field F = Field::make(spec);
    auto nil = enumerate_nilpotent2(F);
    std::map<std::vector<long>, Fe> cls;
    for (const Mat2& A : nil)
      for (const Mat2& B : nil)
        for (const Mat2& C : nil) {
          std::vector<long> key = {F.encode(trace(F, mul(F, A, B))),
                                   F.encode(trace(F, mul(F, A, C))),
                                   F.encode(trace(F, mul(F, B, C)))};
          Fe t = trace(F, mul(F, mul(F, A, B), C));
          auto [it, fresh] = cls.emplace(std::move(key), t);
          if (!fresh)
            require(it->second == t, "equal pair traces but different triple traces");
        }
  }

  for (const char* spec : {"q=2", "q=3"}) {  // antisymmetry of the triple trace
    Field F = Field::make(spec);
    auto nil = enumerate_nilpotent2(F);
    for (const Mat2& A : nil)
      for (const Mat2& B : nil)
        for (const Mat2& C : nil)
          require(trace(F, mul(F, mul(F, A, B), C)) ==
                      F.neg(trace(F, mul(F, mul(F, A, C), B))),
                  "triple trace not antisymmetric");
  }
}

void criterion7() {
  for (const auto& [spec, m] : std::vector<std::pair<std::string, int>>{
           {"q=2", 1}, {"q=2", 2}, {"q=3", 2}}) {
    Field F = Field::make(spec);
    HSet H = build_h_set(F, m);
    const long kap = static_cast<long>(H.orbits.size());
    const int gamma = ceil_log_q(F.q(), kap);
    require(static_cast<int>(H.tables.size()) == gamma, "wrong number of h functions");
    HVerdict v = verify_h_separating(H, F);
    require(v.separating, spec + ": orbit value-vectors collide");
    require(v.lower_bound_ok, spec + ": some gamma-1 subset separates");
    for (const ReducedPoly& p : H.polys)
      require(p.degree() <= 4 * m * (static_cast<int>(F.q()) - 1), "degree bound violated");
    BigInt pw = 1;
    for (int i = 0; i < gamma - 1; ++i) pw *= F.q();
    require(BigInt(kap) > pw, "kappa <= q^{gamma-1}");
  }
}

void criterion8() {
  // char 2: every element of H2 has reduced degree <= 2
  {
    Field F = Field::gf(2);
    for (int m : {2, 3}) {
      int maxdeg = -1;
      for (const InvariantFn& fn : build_set(SetKind::H2, F, m).fns)
        maxdeg = std::max(maxdeg, invariant_poly(F, fn, m).degree());
      require(maxdeg <= 2, "H2 degree over GF(2) exceeds 2");
    }
  }
  for (long q : {3L, 5L}) {
    Field F = Field::gf(q);
    for (int m : {2, 3}) {
      int maxdeg = -1;
      int eta_max = -1;
      for (const InvariantFn& fn : build_set(SetKind::H, F, m).fns) {
        int d = invariant_poly(F, fn, m).degree();
        maxdeg = std::max(maxdeg, d);
        if (std::holds_alternative<EtaFn>(fn)) eta_max = std::max(eta_max, d);
      }
      require(maxdeg <= 4 * (static_cast<int>(q) - 1), "H degree bound violated");
      require(eta_max == 4 * (static_cast<int>(q) - 1), "eta does not attain the bound");
    }
  }
}

void criterion9() {
  for (long q : {2L, 3L, 4L, 5L}) {
    Field F = q == 4 ? Field::gf(2, 2) : Field::gf(q);
    require(static_cast<long>(enumerate_nilpotent2(F).size()) == q * q,
            "|N_2| != q^2 at q=" + std::to_string(q));
  }
  Field F2 = Field::gf(2);
  require(enumerate_nilpotent(F2, 3).size() == 64, "|N_3(F_2)| != 64");
  require(enumerate_gl2(F2).size() == 6, "|GL_2(F_2)| != 6");
  require(enumerate_gl(F2, 3).size() == 168, "|GL_3(F_2)| != 168");
}

void criterion10() {
  for (long q : {2L, 3L}) {
    Field F = Field::gf(q);
    require(brute_force_orbit_count(F, 3, 1).count == 3,
            "n=3 m=1 census is not 3 at q=" + std::to_string(q));
  }
  Field F2 = Field::gf(2);
  OrbitCensus first = brute_force_orbit_count(F2, 3, 2);
  OrbitCensus second = brute_force_orbit_count(F2, 3, 2);
  require(first.count == second.count, "census not stable across runs");
  OrbitCensus gens = brute_force_orbit_count(F2, 3, 2, OrbitMethod::unionfind_generators,
                                             1'000'000'000);
  require(first.count == gens.count, "census differs between methods");
  std::printf("       criterion 10 recorded census: n=3 m=2 q=2 -> %s orbits\n",
              first.count.str().c_str());
}

}  // namespace

int main() {
  run(1, "orbit-count cross-validation (formula, representatives, brute force)", 60,
      criterion1);
  run(2, "kappa polynomial presentation, m <= 8", 1, criterion2);
  run(3, "gamma case formula vs ceil(log_q kappa)", 1, criterion3);
  run(4, "canonicalization soundness and completeness", 120, criterion4);
  run(5, "separating sets: H2 / H separating and minimal, claim witnesses", 60, criterion5);
  run(6, "polynomial identities for zeta, eta and trace words", 60, criterion6);
  run(7, "indicator combination sets of gamma functions", 60, criterion7);
  run(8, "reduced-degree bounds over H2 / H", 30, criterion8);
  run(9, "counting primitives (nilpotent and invertible matrices)", 10, criterion9);
  run(10, "n=3 census: Jordan types and stable pair count", 600, criterion10);

  if (failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures;
}
