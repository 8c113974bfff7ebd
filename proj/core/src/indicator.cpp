#include "nilorbit/indicator.hpp"

#include <map>
#include <stdexcept>

namespace nilorbit {

std::vector<Fe> tuple_to_point(const Field& F, const NilTuple& T) {
  (void)F;
  std::vector<Fe> out;
  out.reserve(T.mats.size() * 4);
  for (const Mat2& A : T.mats)
    for (const Fe& x : A.a) out.push_back(x);
  return out;
}

ReducedPoly point_indicator(const Field& F, std::span<const Fe> w) {
  if (!F.finite()) throw std::domain_error("point indicators require a finite field");
  const int n = static_cast<int>(w.size());
  if (n == 0) throw std::invalid_argument("empty point");

  Fe sign = F.one();
  for (int i = 0; i < n; ++i) sign = F.neg(sign);  // (-1)^n

  ReducedPoly acc = ReducedPoly::constant(F, n, sign);
  for (int i = 0; i < n; ++i) {
    ReducedPoly factor = ReducedPoly::constant(F, n, F.one());
    const ReducedPoly yi = ReducedPoly::variable(F, n, i);
    for (const Fe& a : F.elements()) {
      if (a == w[static_cast<size_t>(i)]) continue;
      factor = factor * (yi - ReducedPoly::constant(F, n, a));
    }
    acc = acc * factor;
  }
  return acc;
}

ReducedPoly orbit_indicator(const Field& F, int nvars,
                            const std::vector<std::vector<Fe>>& orbit_points) {
  ReducedPoly acc(F, nvars);
  for (const std::vector<Fe>& u : orbit_points) {
    if (static_cast<int>(u.size()) != nvars)
      throw std::invalid_argument("orbit point has wrong dimension");
    acc += point_indicator(F, u);
  }
  return acc;
}

AlphaMatrix::AlphaMatrix(const Field& F, int rows, long cols, std::vector<Fe> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("alpha matrix must be nonempty");
  if (entries_.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
    throw std::invalid_argument("alpha matrix entry count mismatch");
  for (const Fe& x : entries_) F.encode(x);  // ownership check
  for (long a = 0; a < cols; ++a)
    for (long b = a + 1; b < cols; ++b) {
      bool same = true;
      for (int i = 0; i < rows && same; ++i) same = at(i, a) == at(i, b);
      if (same) throw std::invalid_argument("alpha matrix has duplicate columns");
    }
}

AlphaMatrix AlphaMatrix::lex_default(const Field& F, int rows, long cols) {
  std::vector<Fe> entries(static_cast<size_t>(rows) * static_cast<size_t>(cols));
  for (long j = 0; j < cols; ++j) {
    long code = j;
    for (int i = rows - 1; i >= 0; --i) {
      entries[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)] =
          F.decode(code % F.q());
      code /= F.q();
    }
    if (code != 0) throw std::invalid_argument("more columns than q^rows vectors");
  }
  return AlphaMatrix(F, rows, cols, std::move(entries));
}

int ceil_log_q(long q, const BigInt& k) {
  if (q < 2 || k < 1) throw std::invalid_argument("ceil_log_q needs q >= 2, k >= 1");
  int g = 0;
  BigInt power = 1;
  while (power < k) {
    power *= q;
    ++g;
  }
  return g;
}

HSet build_h_set(const Field& F, int m, const std::optional<AlphaMatrix>& alpha,
                 bool with_polys, uint64_t budget) {
  if (!F.finite()) throw std::domain_error("h-sets require a finite field");
  HSet H;
  H.m = m;
  H.orbits = orbit_representatives(F, m);
  const long kap = static_cast<long>(H.orbits.size());
  const int gamma = alpha ? alpha->rows() : ceil_log_q(F.q(), kap);

  if (alpha) {
    if (alpha->cols() != kap)
      throw std::invalid_argument("alpha matrix must have one column per orbit");
    H.alpha = *alpha;
  } else {
    H.alpha = AlphaMatrix::lex_default(F, gamma, kap);
  }

  H.tables.assign(static_cast<size_t>(gamma), std::vector<Fe>());
  for (int i = 0; i < gamma; ++i) {
    auto& row = H.tables[static_cast<size_t>(i)];
    row.reserve(static_cast<size_t>(kap));
    for (long j = 0; j < kap; ++j) row.push_back(H.alpha->at(i, j));
  }

  if (!with_polys) return H;

  // group the whole tuple space by orbit, then expand f_j = sum f_u
  std::map<std::vector<long>, long> orbit_index;
  for (long j = 0; j < kap; ++j)
    orbit_index.emplace(form_key(F, H.orbits[static_cast<size_t>(j)]), j);

  const std::vector<Mat2> nil = enumerate_nilpotent2(F);
  const uint64_t nn = nil.size();
  uint64_t tuple_count = 1;
  for (int i = 0; i < m; ++i) {
    tuple_count *= nn;
    if (tuple_count > budget || tuple_count > 1'000'000)
      throw std::runtime_error("budget exceeded: tuple space too large to expand");
  }

  std::vector<std::vector<std::vector<Fe>>> orbit_points(static_cast<size_t>(kap));
  for (uint64_t t = 0; t < tuple_count; ++t) {
    NilTuple T;
    T.mats.resize(static_cast<size_t>(m));
    uint64_t rest = t;
    for (int i = m - 1; i >= 0; --i) {
      T.mats[static_cast<size_t>(i)] = nil[rest % nn];
      rest /= nn;
    }
    auto it = orbit_index.find(form_key(F, canonicalize(F, T).form));
    if (it == orbit_index.end()) throw std::logic_error("tuple outside the generated orbits");
    orbit_points[static_cast<size_t>(it->second)].push_back(tuple_to_point(F, T));
  }

  const int n = 4 * m;
  std::vector<ReducedPoly> fj;
  fj.reserve(static_cast<size_t>(kap));
  for (long j = 0; j < kap; ++j)
    fj.push_back(orbit_indicator(F, n, orbit_points[static_cast<size_t>(j)]));

  for (int i = 0; i < gamma; ++i) {
    ReducedPoly h(F, n);
    for (long j = 0; j < kap; ++j) h += fj[static_cast<size_t>(j)].scaled(H.alpha->at(i, j));
    H.polys.push_back(std::move(h));
  }
  return H;
}

HVerdict verify_h_separating(const HSet& H, const Field& F) {
  HVerdict v;
  const size_t gamma = H.tables.size();
  const size_t kap = H.orbits.size();
  auto distinct_columns = [&](const std::vector<size_t>& rows) {
    for (size_t a = 0; a < kap; ++a)
      for (size_t b = a + 1; b < kap; ++b) {
        bool same = true;
        for (size_t i : rows)
          if (!(H.tables[i][a] == H.tables[i][b])) {
            same = false;
            break;
          }
        if (same) return false;
      }
    return true;
  };
  (void)F;
  std::vector<size_t> all(gamma);
  for (size_t i = 0; i < gamma; ++i) all[i] = i;
  v.separating = distinct_columns(all);

  v.lower_bound_ok = true;
  for (size_t drop = 0; drop < gamma; ++drop) {
    std::vector<size_t> rows;
    for (size_t i = 0; i < gamma; ++i)
      if (i != drop) rows.push_back(i);
    if (distinct_columns(rows)) {
      v.lower_bound_ok = false;  // gamma-1 functions should never suffice
      break;
    }
  }
  return v;
}

}  // namespace nilorbit
