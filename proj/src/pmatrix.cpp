#include "pimcert/pmatrix.hpp"

#include <cmath>
#include <set>

namespace pimcert {

VertexAssignment VertexAssignment::from_index(std::uint64_t index, std::size_t num_symbols) {
  VertexAssignment v;
  v.signs.resize(num_symbols);
  for (std::size_t k = 0; k < num_symbols; ++k) {
    v.signs[k] = ((index >> (num_symbols - 1 - k)) & 1u) ? +1 : -1;
  }
  return v;
}

std::uint64_t VertexAssignment::to_index() const {
  std::uint64_t idx = 0;
  for (const signed char s : signs) idx = (idx << 1) | (s > 0 ? 1u : 0u);
  return idx;
}

std::vector<double> VertexAssignment::as_doubles() const {
  std::vector<double> v(signs.size());
  for (std::size_t k = 0; k < signs.size(); ++k) v[k] = static_cast<double>(signs[k]);
  return v;
}

ParametricMatrix ParametricMatrix::build(const std::vector<std::vector<Expr>>& entries,
                                         const std::vector<Parameter>& parameters) {
  const int n = static_cast<int>(entries.size());
  if (n == 0) throw InvalidDocument("matrix must be nonempty");
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != n) throw InvalidDocument("matrix must be square");
  }

  std::map<std::string, AffineForm> env;
  std::set<std::string> seen;
  for (std::size_t k = 0; k < parameters.size(); ++k) {
    const auto& p = parameters[k];
    if (p.name.empty()) throw InvalidDocument("parameter name must be nonempty");
    if (!seen.insert(p.name).second) {
      throw InvalidDocument("duplicate parameter name '" + p.name + "'");
    }
    env.emplace(p.name, AffineForm::from_interval(p.box, static_cast<std::uint32_t>(k)));
  }

  SymbolAllocator alloc(static_cast<std::uint32_t>(parameters.size()));
  std::vector<std::vector<AffineForm>> forms(n);
  for (int i = 0; i < n; ++i) {
    forms[i].reserve(n);
    for (int j = 0; j < n; ++j) forms[i].push_back(eval_affine(entries[i][j], env, alloc));
  }

  const std::uint32_t num_symbols = alloc.next_index();
  ParametricMatrix m;
  m.a0_ = DenseMatrix(n);
  m.coeffs_.assign(num_symbols, DenseMatrix(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m.a0_(i, j) = forms[i][j].center();
      for (const auto& t : forms[i][j].terms()) m.coeffs_[t.symbol](i, j) = t.coeff;
    }
  }

  m.symbols_.reserve(num_symbols);
  for (const auto& p : parameters) m.symbols_.push_back(p.name);
  for (std::uint32_t k = static_cast<std::uint32_t>(parameters.size()); k < num_symbols; ++k) {
    m.symbols_.push_back("e" + std::to_string(k + 1));
  }
  return m;
}

ParametricMatrix ParametricMatrix::from_coefficients(DenseMatrix a0,
                                                     std::vector<DenseMatrix> coeffs,
                                                     std::vector<std::string> symbols) {
  const int n = a0.dim();
  if (n == 0) throw InvalidDocument("matrix must be nonempty");
  for (const auto& c : coeffs) {
    if (c.dim() != n) throw InvalidDocument("coefficient matrix dimension mismatch");
  }
  if (symbols.empty()) {
    for (std::size_t k = 0; k < coeffs.size(); ++k) symbols.push_back("e" + std::to_string(k + 1));
  } else if (symbols.size() != coeffs.size()) {
    throw InvalidDocument("symbol count does not match coefficient count");
  }
  ParametricMatrix m;
  m.a0_ = std::move(a0);
  m.coeffs_ = std::move(coeffs);
  m.symbols_ = std::move(symbols);
  return m;
}

DenseMatrix ParametricMatrix::instantiate(const std::vector<double>& eps) const {
  if (eps.size() != coeffs_.size()) {
    throw OutOfBox("expected " + std::to_string(coeffs_.size()) + " coordinates, got " +
                   std::to_string(eps.size()));
  }
  for (std::size_t k = 0; k < eps.size(); ++k) {
    if (!(std::abs(eps[k]) <= 1.0 + 1e-12)) {
      throw OutOfBox("coordinate " + std::to_string(k) + " = " + std::to_string(eps[k]) +
                     " is outside [-1, 1]");
    }
  }
  DenseMatrix out = a0_;
  const std::size_t nn = static_cast<std::size_t>(dim()) * dim();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double e = eps[k];
    if (e == 0.0) continue;
    for (std::size_t i = 0; i < nn; ++i) out.data()[i] += e * coeffs_[k].data()[i];
  }
  return out;
}

void ParametricMatrix::instantiate_vertex(std::uint64_t index, DenseMatrix& out) const {
  out = a0_;
  const std::size_t nn = static_cast<std::size_t>(dim()) * dim();
  const std::size_t K = coeffs_.size();
  for (std::size_t k = 0; k < K; ++k) {
    if ((index >> (K - 1 - k)) & 1u) {
      for (std::size_t i = 0; i < nn; ++i) out.data()[i] += coeffs_[k].data()[i];
    } else {
      for (std::size_t i = 0; i < nn; ++i) out.data()[i] -= coeffs_[k].data()[i];
    }
  }
}

DenseMatrix ParametricMatrix::envelope() const {
  DenseMatrix b(dim());
  const std::size_t nn = static_cast<std::size_t>(dim()) * dim();
  for (const auto& c : coeffs_) {
    for (std::size_t i = 0; i < nn; ++i) b.data()[i] += std::abs(c.data()[i]);
  }
  return b;
}

ParametricMatrix ParametricMatrix::scaled(double r) const {
  if (r < 0.0) throw NegativeRadius("radius must be nonnegative, got " + std::to_string(r));
  ParametricMatrix m = *this;
  for (auto& c : m.coeffs_) c = r * c;
  return m;
}

ParametricMatrix ParametricMatrix::negated() const {
  ParametricMatrix m = *this;
  m.a0_ = -1.0 * m.a0_;
  for (auto& c : m.coeffs_) c = -1.0 * c;
  return m;
}

ParametricMatrix ParametricMatrix::shifted(double t) const {
  ParametricMatrix m = *this;
  for (int i = 0; i < dim(); ++i) m.a0_(i, i) += t;
  return m;
}

bool ParametricMatrix::is_symmetric(double tol) const {
  if (tol < 0.0) {
    double big = max_abs(a0_);
    for (const auto& c : coeffs_) big = std::max(big, max_abs(c));
    tol = 1e-12 * (1.0 + big);
  }
  if (!pimcert::is_symmetric(a0_, tol)) return false;
  for (const auto& c : coeffs_) {
    if (!pimcert::is_symmetric(c, tol)) return false;
  }
  return true;
}

void ParametricMatrix::for_each_vertex(
    int max_symbols,
    const std::function<void(std::uint64_t, const VertexAssignment&, const DenseMatrix&)>& fn)
    const {
  const std::size_t K = coeffs_.size();
  if (K > static_cast<std::size_t>(max_symbols)) {
    throw VertexBudgetExceeded("family has " + std::to_string(K) +
                               " symbols, budget allows " + std::to_string(max_symbols));
  }
  const std::uint64_t count = std::uint64_t{1} << K;
  DenseMatrix scratch(dim());
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    instantiate_vertex(idx, scratch);
    fn(idx, VertexAssignment::from_index(idx, K), scratch);
  }
}

}  // namespace pimcert
