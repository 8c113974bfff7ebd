#include "nilorbit/invariants.hpp"

#include <sstream>
#include <stdexcept>

namespace nilorbit {

namespace {

void check_index(int i, int m) {
  if (i < 1 || i > m) throw std::invalid_argument("invariant index out of range");
}

const Mat2& entry(const NilTuple& T, int i) {
  return T.mats[static_cast<size_t>(i - 1)];
}

// coordinate of y_uv(t) in the flattened 4m-variable layout
int coord(int t, int u, int v) { return 4 * (t - 1) + 2 * (u - 1) + (v - 1); }

}  // namespace

InvariantFn make_eta(const Field& F, const Fe& alpha, int i, int j) {
  if (F.is_zero(alpha)) throw std::invalid_argument("eta needs a nonzero alpha");
  if (i == j) throw std::invalid_argument("eta needs two distinct indices");
  if (i > j) return EtaFn{F.inv(alpha), j, i};
  return EtaFn{alpha, i, j};
}

SetKind set_kind_from_string(const std::string& s) {
  if (s == "S2") return SetKind::S2;
  if (s == "S") return SetKind::S;
  if (s == "H2") return SetKind::H2;
  if (s == "H") return SetKind::H;
  throw std::invalid_argument("unknown invariant set: " + s);
}

std::string set_kind_name(SetKind k) {
  switch (k) {
    case SetKind::S2: return "S2";
    case SetKind::S: return "S";
    case SetKind::H2: return "H2";
    case SetKind::H: return "H";
    case SetKind::custom: return "custom";
  }
  return "custom";
}

Fe eval_invariant(const Field& F, const InvariantFn& fn, const NilTuple& T) {
  const int m = T.m();
  if (const auto* p = std::get_if<TrPair>(&fn)) {
    check_index(p->i, m);
    check_index(p->j, m);
    return trace(F, mul(F, entry(T, p->i), entry(T, p->j)));
  }
  if (const auto* p = std::get_if<TrTriple>(&fn)) {
    check_index(p->i, m);
    check_index(p->j, m);
    check_index(p->k, m);
    return trace(F, mul(F, mul(F, entry(T, p->i), entry(T, p->j)), entry(T, p->k)));
  }
  if (const auto* p = std::get_if<ZetaFn>(&fn)) {
    check_index(p->i, m);
    return is_zero(F, entry(T, p->i)) ? F.one() : F.zero();
  }
  const auto& e = std::get<EtaFn>(fn);
  check_index(e.i, m);
  check_index(e.j, m);
  return smul(F, e.alpha, entry(T, e.i)) == entry(T, e.j) ? F.one() : F.zero();
}

Fe zeta_poly(const Field& F, const Mat2& A) {
  if (!F.finite()) throw std::domain_error("zeta polynomial requires a finite field");
  const uint64_t e = static_cast<uint64_t>(F.q() - 1);
  Fe v = F.pow(A(0, 0), e);
  v = F.sub(v, F.pow(A(0, 1), e));
  v = F.sub(v, F.pow(A(1, 0), e));
  return F.add(v, F.one());
}

Fe eta_poly(const Field& F, const Fe& alpha, const Mat2& A, const Mat2& B) {
  if (!F.finite()) throw std::domain_error("eta polynomial requires a finite field");
  const uint64_t e = static_cast<uint64_t>(F.q() - 1);
  Fe prod = F.one();
  for (int i = 0; i < 4; ++i) {
    Fe d = F.sub(F.mul(alpha, A.a[static_cast<size_t>(i)]), B.a[static_cast<size_t>(i)]);
    prod = F.mul(prod, F.sub(F.pow(d, e), F.one()));
  }
  return prod;
}

InvariantSet build_set(SetKind kind, const Field& F, int m) {
  if (m < 1) throw std::invalid_argument("tuple length m must be >= 1");
  if ((kind == SetKind::H2 || kind == SetKind::H) && !F.finite())
    throw std::domain_error("H-sets are only defined over finite fields");
  if (kind == SetKind::custom) throw std::invalid_argument("cannot build a custom set");

  InvariantSet set;
  set.kind = kind;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) set.fns.push_back(TrPair{i, j});
  if (kind == SetKind::S || kind == SetKind::H) {
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        for (int k = j + 1; k <= m; ++k) set.fns.push_back(TrTriple{i, j, k});
  }
  if (kind == SetKind::H2 || kind == SetKind::H) {
    for (int i = 1; i <= m; ++i) set.fns.push_back(ZetaFn{i});
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        for (const Fe& a : F.elements(true))
          if (!F.is_one(a)) set.fns.push_back(EtaFn{a, i, j});
  }
  return set;
}

std::string invariant_name(const Field& F, const InvariantFn& fn) {
  std::ostringstream os;
  if (const auto* p = std::get_if<TrPair>(&fn)) {
    os << "tr(Y" << p->i << "Y" << p->j << ")";
  } else if (const auto* p = std::get_if<TrTriple>(&fn)) {
    os << "tr(Y" << p->i << "Y" << p->j << "Y" << p->k << ")";
  } else if (const auto* p = std::get_if<ZetaFn>(&fn)) {
    os << "zeta(Y" << p->i << ")";
  } else {
    const auto& e = std::get<EtaFn>(fn);
    os << "eta_" << F.str(e.alpha) << "(Y" << e.i << ",Y" << e.j << ")";
  }
  return os.str();
}

std::vector<size_t> separating_indices(const Field& F, const InvariantSet& set,
                                       const NilTuple& A, const NilTuple& B) {
  std::vector<size_t> out;
  for (size_t t = 0; t < set.fns.size(); ++t)
    if (!(eval_invariant(F, set.fns[t], A) == eval_invariant(F, set.fns[t], B)))
      out.push_back(t);
  return out;
}

namespace {

std::vector<std::vector<Fe>> value_table(const InvariantSet& set, const Field& F,
                                         const std::vector<CanonicalForm>& reps) {
  std::vector<std::vector<Fe>> values;
  values.reserve(reps.size());
  for (const CanonicalForm& c : reps) {
    NilTuple T = materialize(F, c);
    std::vector<Fe> row;
    row.reserve(set.fns.size());
    for (const InvariantFn& fn : set.fns) row.push_back(eval_invariant(F, fn, T));
    values.push_back(std::move(row));
  }
  return values;
}

}  // namespace

SeparationCheck check_separating(const InvariantSet& set, const Field& F, int m) {
  SeparationCheck res;
  res.reps = orbit_representatives(F, m);
  const auto values = value_table(set, F, res.reps);
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j]) {
        res.separating = false;
        res.witness = {static_cast<int>(i), static_cast<int>(j)};
        return res;
      }
  res.separating = true;
  return res;
}

MinimalityCheck check_minimality(const InvariantSet& set, const Field& F, int m) {
  MinimalityCheck res;
  res.reps = orbit_representatives(F, m);
  const auto values = value_table(set, F, res.reps);
  res.entries.resize(set.fns.size());
  for (size_t t = 0; t < set.fns.size(); ++t) res.entries[t].fn_index = t;

  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i + 1; j < values.size(); ++j) {
      size_t differing = 0, last = 0;
      for (size_t t = 0; t < set.fns.size(); ++t)
        if (!(values[i][t] == values[j][t])) {
          ++differing;
          last = t;
          if (differing > 1) break;
        }
      if (differing == 1 && !res.entries[last].found) {
        res.entries[last].found = true;
        res.entries[last].witness = {static_cast<int>(i), static_cast<int>(j)};
      }
    }

  res.minimal = true;
  for (const MinimalityEntry& e : res.entries)
    if (!e.found) res.minimal = false;
  return res;
}

ReducedPoly invariant_poly(const Field& F, const InvariantFn& fn, int m) {
  if (m < 1) throw std::invalid_argument("tuple length m must be >= 1");
  const int n = 4 * m;
  auto var = [&](int t, int u, int v) { return ReducedPoly::variable(F, n, coord(t, u, v)); };

  if (const auto* p = std::get_if<TrPair>(&fn)) {
    check_index(p->i, m);
    check_index(p->j, m);
    ReducedPoly acc(F, n);
    for (int u = 1; u <= 2; ++u)
      for (int v = 1; v <= 2; ++v) acc += var(p->i, u, v) * var(p->j, v, u);
    return acc;
  }
  if (const auto* p = std::get_if<TrTriple>(&fn)) {
    check_index(p->i, m);
    check_index(p->j, m);
    check_index(p->k, m);
    ReducedPoly acc(F, n);
    for (int u = 1; u <= 2; ++u)
      for (int v = 1; v <= 2; ++v)
        for (int w = 1; w <= 2; ++w)
          acc += var(p->i, u, v) * var(p->j, v, w) * var(p->k, w, u);
    return acc;
  }
  const unsigned e = static_cast<unsigned>(F.q() - 1);
  if (const auto* p = std::get_if<ZetaFn>(&fn)) {
    check_index(p->i, m);
    ReducedPoly acc = var(p->i, 1, 1).pow(e);
    acc = acc - var(p->i, 1, 2).pow(e);
    acc = acc - var(p->i, 2, 1).pow(e);
    return acc + ReducedPoly::constant(F, n, F.one());
  }
  const auto& et = std::get<EtaFn>(fn);
  check_index(et.i, m);
  check_index(et.j, m);
  ReducedPoly prod = ReducedPoly::constant(F, n, F.one());
  const ReducedPoly one = ReducedPoly::constant(F, n, F.one());
  for (int u = 1; u <= 2; ++u)
    for (int v = 1; v <= 2; ++v) {
      ReducedPoly d = var(et.i, u, v).scaled(et.alpha) - var(et.j, u, v);
      prod = prod * (d.pow(e) - one);
    }
  return prod;
}

}  // namespace nilorbit
