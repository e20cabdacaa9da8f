#include "pimcert/affine.hpp"

#include <algorithm>
#include <cmath>

namespace pimcert {
namespace {

// Termwise merge of two sorted term lists; zero results are dropped so the
// representation stays canonical.
std::vector<AffineTerm> merge_terms(const std::vector<AffineTerm>& a, double fa,
                                    const std::vector<AffineTerm>& b, double fb) {
  std::vector<AffineTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].symbol < b[j].symbol)) {
      const double c = fa * a[i].coeff;
      if (c != 0.0) out.push_back({a[i].symbol, c});
      ++i;
    } else if (i == a.size() || b[j].symbol < a[i].symbol) {
      const double c = fb * b[j].coeff;
      if (c != 0.0) out.push_back({b[j].symbol, c});
      ++j;
    } else {
      const double c = fa * a[i].coeff + fb * b[j].coeff;
      if (c != 0.0) out.push_back({a[i].symbol, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

AffineForm::AffineForm(double center, std::vector<AffineTerm> terms)
    : center_(center), terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(),
            [](const AffineTerm& x, const AffineTerm& y) { return x.symbol < y.symbol; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < terms_.size(); ++r) {
    if (w > 0 && terms_[w - 1].symbol == terms_[r].symbol) {
      terms_[w - 1].coeff += terms_[r].coeff;
      if (terms_[w - 1].coeff == 0.0) --w;
    } else if (terms_[r].coeff != 0.0) {
      terms_[w++] = terms_[r];
    }
  }
  terms_.resize(w);
}

AffineForm AffineForm::from_interval(const Interval& iv, std::uint32_t symbol) {
  AffineForm f(iv.mid());
  const double r = iv.rad();
  if (r != 0.0) f.terms_.push_back({symbol, r});
  return f;
}

double AffineForm::coeff(std::uint32_t symbol) const {
  for (const auto& t : terms_) {
    if (t.symbol == symbol) return t.coeff;
    if (t.symbol > symbol) break;
  }
  return 0.0;
}

double AffineForm::deviation() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coeff);
  return s;
}

Interval AffineForm::range() const {
  const double d = deviation();
  double lo = center_ - d;
  double hi = center_ + d;
  if (d != 0.0) {  // outward-round only inexact endpoints
    lo -= 1e-15 * std::abs(lo);
    hi += 1e-15 * std::abs(hi);
  }
  return Interval::make(lo, hi);
}

AffineForm af_add(const AffineForm& a, const AffineForm& b) {
  AffineForm r(a.center() + b.center(), merge_terms(a.terms(), 1.0, b.terms(), 1.0));
  return r;
}

AffineForm af_sub(const AffineForm& a, const AffineForm& b) {
  return AffineForm(a.center() - b.center(), merge_terms(a.terms(), 1.0, b.terms(), -1.0));
}

AffineForm af_neg(const AffineForm& a) { return af_scale(a, -1.0); }

AffineForm af_scale(const AffineForm& a, double s) {
  if (s == 0.0) return AffineForm(0.0);
  std::vector<AffineTerm> terms = a.terms();
  for (auto& t : terms) t.coeff *= s;
  return AffineForm(a.center() * s, std::move(terms));
}

AffineForm af_translate(const AffineForm& a, double t) {
  return AffineForm(a.center() + t, a.terms());
}

AffineForm af_square(const AffineForm& a, SymbolAllocator& alloc) {
  const double c = a.center();
  const double s = a.deviation();
  if (s == 0.0) return AffineForm(c * c);
  const double q = s * s;

  std::vector<AffineTerm> terms;
  terms.reserve(a.terms().size() + 1);
  if (c != 0.0) {
    for (const auto& t : a.terms()) terms.push_back({t.symbol, 2.0 * c * t.coeff});
  }
  const std::uint32_t fresh = alloc.fresh();
  terms.push_back({fresh, 0.5 * q});
  return AffineForm(c * c + 0.5 * q, std::move(terms));
}

AffineForm af_mul(const AffineForm& a, const AffineForm& b, SymbolAllocator& alloc) {
  if (a == b) return af_square(a, alloc);
  const double da = a.deviation();
  const double db = b.deviation();
  if (da == 0.0) return af_scale(b, a.center());
  if (db == 0.0) return af_scale(a, b.center());

  std::vector<AffineTerm> terms = merge_terms(a.terms(), b.center(), b.terms(), a.center());
  const double err = da * db;  // > 0 here
  terms.push_back({alloc.fresh(), err});
  return AffineForm(a.center() * b.center(), std::move(terms));
}

AffineForm af_reciprocal(const AffineForm& a, SymbolAllocator& alloc) {
  const Interval r = a.range();
  if (r.lo() <= 0.0 && 0.0 <= r.hi()) {
    throw DomainError("reciprocal of an affine form whose range contains zero");
  }
  if (a.deviation() == 0.0) return AffineForm(1.0 / a.center());

  // Min-range linearization: slope at the endpoint of larger magnitude.
  const double lo = r.lo();
  const double hi = r.hi();
  const double p = (lo > 0.0) ? -1.0 / (hi * hi) : -1.0 / (lo * lo);
  const double e_lo = 1.0 / lo - p * lo;
  const double e_hi = 1.0 / hi - p * hi;
  const double zeta = 0.5 * (e_lo + e_hi);
  const double delta = 0.5 * std::abs(e_lo - e_hi);

  AffineForm out = af_translate(af_scale(a, p), zeta);
  if (delta > 0.0) {
    std::vector<AffineTerm> terms = out.terms();
    terms.push_back({alloc.fresh(), delta});
    return AffineForm(out.center(), std::move(terms));
  }
  return out;
}

AffineForm af_div(const AffineForm& a, const AffineForm& b, SymbolAllocator& alloc) {
  AffineForm inv = af_reciprocal(b, alloc);
  return af_mul(a, inv, alloc);
}

AffineForm af_pow(const AffineForm& a, unsigned e, SymbolAllocator& alloc) {
  if (e == 0) return AffineForm(1.0);
  if (e == 1) return a;
  AffineForm half = af_pow(a, e / 2, alloc);
  AffineForm sq = af_square(half, alloc);
  return (e % 2 == 0) ? sq : af_mul(sq, a, alloc);
}

}  // namespace pimcert
