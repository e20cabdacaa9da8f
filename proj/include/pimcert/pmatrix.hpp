#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pimcert/expr.hpp"
#include "pimcert/interval.hpp"
#include "pimcert/linalg.hpp"

namespace pimcert {

// Sign assignment for the noise symbols: each entry is -1 or +1.
//
// Vertices are ordered lexicographically with -1 before +1, so index 0 is
// all -1 and index 2^K - 1 is all +1; symbol k maps to bit K-1-k of the
// index (symbol 0 is the most significant bit).
struct VertexAssignment {
  std::vector<signed char> signs;

  static VertexAssignment from_index(std::uint64_t index, std::size_t num_symbols);
  std::uint64_t to_index() const;
  std::vector<double> as_doubles() const;

  friend bool operator==(const VertexAssignment&, const VertexAssignment&) = default;
};

// Affine-linear parametric family  A(e) = A0 + sum_k Ak * e_k,  e in [-1,1]^K.
//
// Built from an expression matrix over interval parameters: each parameter
// becomes one leading noise symbol, nonlinear subexpressions append
// truncation symbols, and the family encloses the original nonlinear one.
class ParametricMatrix {
 public:
  struct Parameter {
    std::string name;
    Interval box;
  };

  // Evaluates `entries` (square, row-major order) over the parameter box.
  // Parameter names must be distinct and nonempty.
  static ParametricMatrix build(const std::vector<std::vector<Expr>>& entries,
                                const std::vector<Parameter>& parameters);

  // Assembles a family directly from coefficient matrices (all same
  // dimension).  Empty `symbols` autogenerates e1..eK.
  static ParametricMatrix from_coefficients(DenseMatrix a0,
                                            std::vector<DenseMatrix> coeffs,
                                            std::vector<std::string> symbols = {});

  int dim() const { return a0_.dim(); }
  std::size_t num_symbols() const { return coeffs_.size(); }
  const DenseMatrix& midpoint() const { return a0_; }
  const DenseMatrix& coefficient(std::size_t k) const { return coeffs_[k]; }
  const std::vector<std::string>& symbols() const { return symbols_; }

  // A0 + sum_k eps_k Ak.  Throws OutOfBox when some |eps_k| > 1 + 1e-12 or
  // the size is wrong.
  DenseMatrix instantiate(const std::vector<double>& eps) const;

  // Allocation-free vertex instantiation into `out` (must be dim() x dim()).
  void instantiate_vertex(std::uint64_t index, DenseMatrix& out) const;

  // Entrywise envelope  B = sum_k |Ak|.
  DenseMatrix envelope() const;

  // Family with the box shrunk/grown to radius r: A0 + sum (r Ak) e_k.
  // Throws NegativeRadius for r < 0.
  ParametricMatrix scaled(double r) const;
  // -A(e) with the same symbols (negates every coefficient matrix).
  ParametricMatrix negated() const;
  // A(e) + t*I (shifts the midpoint only).
  ParametricMatrix shifted(double t) const;

  // True when A0 and every Ak are symmetric within `tol` entrywise; the
  // default tol is 1e-12 * (1 + largest |entry| over all matrices).
  bool is_symmetric(double tol = -1.0) const;

  // Calls fn(index, assignment, vertex matrix) for all 2^K vertices in lex
  // order.  Throws VertexBudgetExceeded when K > max_symbols.  K == 0 visits
  // the single matrix A0.
  void for_each_vertex(
      int max_symbols,
      const std::function<void(std::uint64_t, const VertexAssignment&, const DenseMatrix&)>& fn)
      const;

 private:
  ParametricMatrix() = default;
  DenseMatrix a0_;
  std::vector<DenseMatrix> coeffs_;
  std::vector<std::string> symbols_;
};

}  // namespace pimcert
