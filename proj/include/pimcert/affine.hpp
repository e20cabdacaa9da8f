#pragma once

#include <cstdint>
#include <vector>

#include "pimcert/errors.hpp"
#include "pimcert/interval.hpp"

namespace pimcert {

// One noise-symbol contribution of an affine form.
struct AffineTerm {
  std::uint32_t symbol;  // 0-based symbol index
  double coeff;
  friend bool operator==(const AffineTerm&, const AffineTerm&) = default;
};

// Hands out fresh noise-symbol indices.  Symbols 0..P-1 belong to the P box
// parameters; everything at or above P is a truncation symbol introduced by
// a nonlinear operation.  Allocation order is part of the contract: given the
// same evaluation order, two runs produce identical symbol indices.
class SymbolAllocator {
 public:
  explicit SymbolAllocator(std::uint32_t reserved = 0) : next_(reserved) {}
  std::uint32_t fresh() { return next_++; }
  std::uint32_t next_index() const { return next_; }

 private:
  std::uint32_t next_;
};

// Affine form  c + sum_i d_i * e_i  with e_i in [-1, 1].
//
// Terms are kept sorted by symbol index with no zero coefficients and no
// duplicates, so structural equality of two forms is vector equality.
class AffineForm {
 public:
  AffineForm() : center_(0.0) {}
  explicit AffineForm(double center) : center_(center) {}
  AffineForm(double center, std::vector<AffineTerm> terms);

  // Affine view of an interval: mid + rad * e_symbol (no term if rad == 0).
  static AffineForm from_interval(const Interval& iv, std::uint32_t symbol);

  double center() const { return center_; }
  const std::vector<AffineTerm>& terms() const { return terms_; }
  double coeff(std::uint32_t symbol) const;

  // Sum of |d_i| (the total deviation).
  double deviation() const;
  // [center - deviation, center + deviation], outward-rounded.
  Interval range() const;

  friend bool operator==(const AffineForm&, const AffineForm&) = default;

 private:
  double center_;
  std::vector<AffineTerm> terms_;
};

// Exact-in-structure linear operations (no fresh symbols; coefficients
// combine termwise in symbol order).
AffineForm af_add(const AffineForm& a, const AffineForm& b);
AffineForm af_sub(const AffineForm& a, const AffineForm& b);
AffineForm af_neg(const AffineForm& a);
AffineForm af_scale(const AffineForm& a, double s);
AffineForm af_translate(const AffineForm& a, double t);

// Nonlinear operations.  Each one allocates at most one fresh symbol from
// `alloc` to carry its truncation error; a zero-error result allocates none.
//
// af_square re-centers the quadratic term: for x = c + sum d_i e_i with
// S = sum |d_i|, the result is  c^2 + S^2/2  +  sum (2 c d_i) e_i  +  (S^2/2) e_new.
// The range of the result always contains {x^2 : x in range}, the upper
// endpoint is tight for a single-symbol form, and the form is exact when
// c == 0 or S == 0.
AffineForm af_square(const AffineForm& a, SymbolAllocator& alloc);

// af_mul(a, b) with a and b structurally identical dispatches to af_square,
// so x*x == x^2 form-for-form.  Otherwise the generic product is used:
// center a0*b0, linear terms a0*b_i + b0*a_i, fresh coefficient
// dev(a)*dev(b).  A constant factor makes the product exact (no fresh symbol).
AffineForm af_mul(const AffineForm& a, const AffineForm& b, SymbolAllocator& alloc);

// Min-range reciprocal.  Throws DomainError when 0 is in the form's range.
// For a range [lo, hi] on one side of zero the slope is -1/hi^2 (positive
// side) or -1/lo^2 (negative side); the truncation term vanishes for a
// constant form, which is inverted exactly.
AffineForm af_reciprocal(const AffineForm& a, SymbolAllocator& alloc);

AffineForm af_div(const AffineForm& a, const AffineForm& b, SymbolAllocator& alloc);

// Non-negative integer power by binary exponentiation (e == 0 gives the
// constant 1, also for a zero base).
AffineForm af_pow(const AffineForm& a, unsigned e, SymbolAllocator& alloc);

}  // namespace pimcert
