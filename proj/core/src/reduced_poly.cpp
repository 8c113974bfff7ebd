#include "nilorbit/reduced_poly.hpp"

#include <stdexcept>

namespace nilorbit {

ReducedPoly::ReducedPoly(const Field& F, int nvars) : F_(F), nvars_(nvars) {
  if (!F.finite()) throw std::domain_error("reduced polynomials require a finite field");
  if (nvars < 0) throw std::invalid_argument("negative variable count");
  if (F.q() > 128) throw std::invalid_argument("unsupported field size");
}

ReducedPoly ReducedPoly::constant(const Field& F, int nvars, const Fe& c) {
  ReducedPoly p(F, nvars);
  p.add_term(std::vector<uint8_t>(static_cast<size_t>(nvars), 0), c);
  return p;
}

ReducedPoly ReducedPoly::variable(const Field& F, int nvars, int v) {
  if (v < 0 || v >= nvars) throw std::invalid_argument("variable index out of range");
  ReducedPoly p(F, nvars);
  std::vector<uint8_t> e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(v)] = 1;
  p.add_term(std::move(e), F.one());
  return p;
}

int ReducedPoly::degree() const {
  int deg = -1;
  for (const auto& [exps, c] : terms_) {
    int d = 0;
    for (uint8_t e : exps) d += e;
    if (d > deg) deg = d;
  }
  return deg;
}

void ReducedPoly::add_term(std::vector<uint8_t> exps, const Fe& c) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::invalid_argument("exponent vector length mismatch");
  if (F_.is_zero(c)) return;
  const long q = F_.q();
  for (uint8_t& e : exps)
    while (e >= q) e = static_cast<uint8_t>(e - (q - 1));  // x^q = x
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exps), c);
  } else {
    it->second = F_.add(it->second, c);
    if (F_.is_zero(it->second)) terms_.erase(it);
  }
}

ReducedPoly ReducedPoly::operator+(const ReducedPoly& o) const {
  ReducedPoly r = *this;
  r += o;
  return r;
}

ReducedPoly& ReducedPoly::operator+=(const ReducedPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [exps, c] : o.terms_) add_term(exps, c);
  return *this;
}

ReducedPoly ReducedPoly::operator-(const ReducedPoly& o) const {
  ReducedPoly r = *this;
  for (const auto& [exps, c] : o.terms_) r.add_term(exps, F_.neg(c));
  return r;
}

ReducedPoly ReducedPoly::operator*(const ReducedPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  ReducedPoly r(F_, nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<uint8_t> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = static_cast<uint8_t>(ea[i] + eb[i]);
      r.add_term(std::move(e), F_.mul(ca, cb));
    }
  return r;
}

ReducedPoly ReducedPoly::scaled(const Fe& c) const {
  ReducedPoly r(F_, nvars_);
  for (const auto& [exps, coeff] : terms_) r.add_term(exps, F_.mul(c, coeff));
  return r;
}

ReducedPoly ReducedPoly::pow(unsigned e) const {
  ReducedPoly acc = constant(F_, nvars_, F_.one());
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

Fe ReducedPoly::eval(std::span<const Fe> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluation point length mismatch");
  Fe acc = F_.zero();
  for (const auto& [exps, c] : terms_) {
    Fe t = c;
    for (size_t i = 0; i < exps.size(); ++i)
      if (exps[i]) t = F_.mul(t, F_.pow(point[i], exps[i]));
    acc = F_.add(acc, t);
  }
  return acc;
}

}  // namespace nilorbit
