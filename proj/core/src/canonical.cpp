#include "nilorbit/canonical.hpp"

#include <stdexcept>

namespace nilorbit {

std::pair<Mat2, Mat2> standardize_nilpotent(const Field& F, const Mat2& A) {
  if (!is_nilpotent(F, A)) throw std::invalid_argument("matrix is not nilpotent");
  if (is_zero(F, A)) throw std::invalid_argument("matrix is zero");
  // v = e1 if A e1 != 0, else e2; P maps (e1, e2) -> (A v, v), g = P^{-1}.
  // Then g A g^{-1} = E12: it kills A v (A^2 = 0) and sends v to A v.
  Fe av0, av1, v0, v1;
  if (!F.is_zero(A(0, 0)) || !F.is_zero(A(1, 0))) {
    av0 = A(0, 0);
    av1 = A(1, 0);
    v0 = F.one();
    v1 = F.zero();
  } else {
    av0 = A(0, 1);
    av1 = A(1, 1);
    v0 = F.zero();
    v1 = F.one();
  }
  Mat2 P = mat2(av0, v0, av1, v1);
  Mat2 g = inverse(F, P);
  return {g, conjugate(F, g, A)};
}

CanonicalizeResult canonicalize(const Field& F, const NilTuple& T) {
  const int m = T.m();
  if (m < 1) throw std::invalid_argument("tuple length m must be >= 1");
  for (const Mat2& A : T.mats)
    if (!is_nilpotent(F, A)) throw std::invalid_argument("tuple entry is not nilpotent");

  int v = 0;
  while (v < m && is_zero(F, T.mats[static_cast<size_t>(v)])) ++v;
  if (v == m) {
    CanonicalForm c;
    c.tag = FormTag::zero;
    c.m = m;
    return {c, Witness{mat2_identity(F)}};
  }

  auto [g0, std_v] = standardize_nilpotent(F, T.mats[static_cast<size_t>(v)]);
  NilTuple cur = conjugate_tuple(F, g0, T);
  Mat2 g = g0;

  // With entry v now exactly E12, a later nilpotent entry is a multiple of
  // E12 iff its (2,1) entry vanishes: a21 = 0 forces a11 = 0 via det = 0.
  int j = v + 1;
  while (j < m && F.is_zero(cur.mats[static_cast<size_t>(j)](1, 0))) ++j;

  if (j == m) {
    CanonicalForm c;
    c.tag = FormTag::line;
    c.m = m;
    c.alphas.reserve(static_cast<size_t>(m));
    for (const Mat2& A : cur.mats) c.alphas.push_back(A(0, 1));
    return {c, Witness{g}};
  }

  // Unipotent u = [[1, -a11/a21], [0, 1]] fixes E12 (and its multiples)
  // and sends entry j to a21 E21.
  const Mat2& Aj = cur.mats[static_cast<size_t>(j)];
  Fe t = F.neg(F.div(Aj(0, 0), Aj(1, 0)));
  Mat2 u = mat2(F.one(), t, F.zero(), F.one());
  cur = conjugate_tuple(F, u, cur);
  g = mul(F, u, g);

  CanonicalForm c;
  c.tag = FormTag::split;
  c.m = m;
  c.alphas.reserve(static_cast<size_t>(j));
  for (int i = 0; i < j; ++i) c.alphas.push_back(cur.mats[static_cast<size_t>(i)](0, 1));
  c.pivot = cur.mats[static_cast<size_t>(j)](1, 0);
  c.tail.assign(cur.mats.begin() + j + 1, cur.mats.end());
  return {c, Witness{g}};
}

NilTuple materialize(const Field& F, const CanonicalForm& c) {
  NilTuple T;
  T.mats.reserve(static_cast<size_t>(c.m));
  switch (c.tag) {
    case FormTag::zero:
      for (int i = 0; i < c.m; ++i) T.mats.push_back(mat2_zero(F));
      break;
    case FormTag::line:
      if (static_cast<int>(c.alphas.size()) != c.m)
        throw std::invalid_argument("line form needs m coefficients");
      for (const Fe& a : c.alphas) T.mats.push_back(smul(F, a, e12(F)));
      break;
    case FormTag::split: {
      if (!c.pivot || F.is_zero(*c.pivot))
        throw std::invalid_argument("split form needs a nonzero pivot");
      if (c.r() + 1 + static_cast<int>(c.tail.size()) != c.m)
        throw std::invalid_argument("split form sizes do not add up to m");
      for (const Fe& a : c.alphas) T.mats.push_back(smul(F, a, e12(F)));
      T.mats.push_back(smul(F, *c.pivot, e21(F)));
      for (const Mat2& D : c.tail) T.mats.push_back(D);
      break;
    }
  }
  return T;
}

bool are_similar(const Field& F, const NilTuple& A, const NilTuple& B) {
  if (A.m() != B.m()) throw std::invalid_argument("tuple length mismatch");
  return canonicalize(F, A).form == canonicalize(F, B).form;
}

std::vector<long> form_key(const Field& F, const CanonicalForm& c) {
  std::vector<long> key;
  key.push_back(static_cast<long>(c.tag));
  key.push_back(c.m);
  switch (c.tag) {
    case FormTag::zero:
      break;
    case FormTag::line:
      for (const Fe& a : c.alphas) key.push_back(F.encode(a));
      break;
    case FormTag::split:
      key.push_back(c.r());
      for (const Fe& a : c.alphas) key.push_back(F.encode(a));
      key.push_back(F.encode(*c.pivot));
      for (const Mat2& D : c.tail) key.push_back(mat_code(F, D));
      break;
  }
  return key;
}

std::vector<CanonicalForm> orbit_representatives(const Field& F, int m) {
  if (!F.finite()) throw std::domain_error("orbit representatives require a finite field");
  if (m < 1) throw std::invalid_argument("tuple length m must be >= 1");
  if (m > 6) throw std::invalid_argument("tuple length m capped at 6 for generation");

  const long q = F.q();
  std::vector<CanonicalForm> out;
  out.reserve(16);

  CanonicalForm z;
  z.tag = FormTag::zero;
  z.m = m;
  out.push_back(z);

  // coefficient vectors of given length with first nonzero at position v,
  // normalized to 1 there; free coefficients run in code order
  auto emit_prefixes = [&](int len, auto&& sink) {
    for (int v = 0; v < len; ++v) {
      const int free = len - v - 1;
      long count = 1;
      for (int i = 0; i < free; ++i) count *= q;
      for (long code = 0; code < count; ++code) {
        std::vector<Fe> alphas(static_cast<size_t>(len), F.zero());
        alphas[static_cast<size_t>(v)] = F.one();
        long c = code;
        for (int i = free - 1; i >= 0; --i) {
          alphas[static_cast<size_t>(v + 1 + i)] = F.decode(c % q);
          c /= q;
        }
        sink(std::move(alphas));
      }
    }
  };

  emit_prefixes(m, [&](std::vector<Fe> alphas) {
    CanonicalForm& c = out.emplace_back();
    c.tag = FormTag::line;
    c.m = m;
    c.alphas = std::move(alphas);
  });

  std::vector<Mat2> nil = enumerate_nilpotent2(F);
  const long nn = static_cast<long>(nil.size());
  for (int r = 1; r <= m - 1; ++r) {
    const int s = m - r - 1;
    emit_prefixes(r, [&](std::vector<Fe> alphas) {
      for (long pc = 1; pc < q; ++pc) {
        long tails = 1;
        for (int i = 0; i < s; ++i) tails *= nn;
        for (long tcode = 0; tcode < tails; ++tcode) {
          CanonicalForm& c = out.emplace_back();
          c.tag = FormTag::split;
          c.m = m;
          c.alphas = alphas;
          c.pivot = F.decode(pc);
          c.tail.resize(static_cast<size_t>(s));
          long t = tcode;
          for (int i = s - 1; i >= 0; --i) {
            c.tail[static_cast<size_t>(i)] = nil[static_cast<size_t>(t % nn)];
            t /= nn;
          }
        }
      }
    });
  }
  return out;
}

}  // namespace nilorbit
