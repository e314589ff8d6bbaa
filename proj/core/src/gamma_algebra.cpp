#include "ptdirac/gamma_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "eigen_bridge.hpp"

namespace ptdirac {

namespace {

void require_supported_dim(int dim) {
  if (dim != 2 && dim != 4) {
    throw std::invalid_argument("unsupported operator dimension " + std::to_string(dim) +
                                " (expected 2 or 4)");
  }
}

void require_same_dim(const OperatorMatrix& a, const OperatorMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

template <typename F>
OperatorMatrix elementwise(const OperatorMatrix& a, const OperatorMatrix& b, F f) {
  std::array<Complex, 16> out{};
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) out[i] = f(ea[i], eb[i]);
  return OperatorMatrix(a.dim(), std::span<const Complex>(out.data(), ea.size()));
}

}  // namespace

OperatorMatrix::OperatorMatrix(int dim, std::span<const Complex> entries) {
  require_supported_dim(dim);
  if (entries.size() != static_cast<std::size_t>(dim * dim)) {
    throw std::invalid_argument("operator entries: expected " + std::to_string(dim * dim) +
                                " values, got " + std::to_string(entries.size()));
  }
  dim_ = dim;
  std::copy(entries.begin(), entries.end(), entries_.begin());
}

OperatorMatrix::OperatorMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  const int dim = static_cast<int>(rows.size());
  require_supported_dim(dim);
  std::size_t k = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim) {
      throw std::invalid_argument("operator rows must form a square matrix");
    }
    for (const auto& v : row) entries_[k++] = v;
  }
  dim_ = dim;
}

OperatorMatrix OperatorMatrix::zero(int dim) {
  require_supported_dim(dim);
  OperatorMatrix m;
  m.dim_ = dim;
  return m;
}

OperatorMatrix OperatorMatrix::identity(int dim) {
  OperatorMatrix m = zero(dim);
  for (int i = 0; i < dim; ++i) m.entries_[static_cast<std::size_t>(i * dim + i)] = 1.0;
  return m;
}

OperatorMatrix OperatorMatrix::diagonal(std::span<const Complex> diag) {
  OperatorMatrix m = zero(static_cast<int>(diag.size()));
  for (int i = 0; i < m.dim_; ++i) {
    m.entries_[static_cast<std::size_t>(i * m.dim_ + i)] = diag[static_cast<std::size_t>(i)];
  }
  return m;
}

bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim_ != b.dim_) return false;
  const auto ea = a.entries();
  const auto eb = b.entries();
  return std::equal(ea.begin(), ea.end(), eb.begin());
}

OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b, "multiply");
  const int n = a.dim();
  std::array<Complex, 16> out{};
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i * n + j)] += aik * b(k, j);
    }
  }
  return OperatorMatrix(n, std::span<const Complex>(out.data(), static_cast<std::size_t>(n * n)));
}

OperatorMatrix add(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b, "add");
  return elementwise(a, b, [](Complex x, Complex y) { return x + y; });
}

OperatorMatrix subtract(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b, "subtract");
  return elementwise(a, b, [](Complex x, Complex y) { return x - y; });
}

OperatorMatrix scale(const OperatorMatrix& a, Complex factor) {
  return elementwise(a, a, [factor](Complex x, Complex) { return factor * x; });
}

OperatorMatrix adjoint(const OperatorMatrix& a) {
  const int n = a.dim();
  std::array<Complex, 16> out{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j * n + i)] = std::conj(a(i, j));
  }
  return OperatorMatrix(n, std::span<const Complex>(out.data(), static_cast<std::size_t>(n * n)));
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return subtract(multiply(a, b), multiply(b, a));
}

OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return add(multiply(a, b), multiply(b, a));
}

double frobenius_norm(const OperatorMatrix& a) {
  double sum = 0.0;
  for (const auto& v : a.entries()) sum += std::norm(v);
  return std::sqrt(sum);
}

Complex trace(const OperatorMatrix& a) {
  Complex t{};
  for (int i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

OperatorMatrix inverse(const OperatorMatrix& a) {
  const auto lu = detail::to_eigen(a).fullPivLu();
  if (!lu.isInvertible()) throw std::domain_error("inverse: matrix is singular");
  return detail::from_eigen(lu.inverse());
}

double hermiticity_residual(const OperatorMatrix& a) { return frobenius_norm(a - adjoint(a)); }

GammaBasis build_basis(int dim) {
  using namespace std::complex_literals;
  if (dim == 2) {
    OperatorMatrix g0{{0.0, 1.0}, {1.0, 0.0}};
    OperatorMatrix g1{{0.0, 1.0}, {-1.0, 0.0}};
    OperatorMatrix g5{{1.0, 0.0}, {0.0, -1.0}};
    OperatorMatrix a1 = g0 * g1;
    return GammaBasis{2, g0, {g1}, g5, {a1}};
  }
  if (dim == 4) {
    const Complex I = 1i;
    OperatorMatrix g0{{1.0, 0.0, 0.0, 0.0},
                      {0.0, 1.0, 0.0, 0.0},
                      {0.0, 0.0, -1.0, 0.0},
                      {0.0, 0.0, 0.0, -1.0}};
    // gamma^k = [[0, sigma_k], [-sigma_k, 0]]
    OperatorMatrix g1{{0.0, 0.0, 0.0, 1.0},
                      {0.0, 0.0, 1.0, 0.0},
                      {0.0, -1.0, 0.0, 0.0},
                      {-1.0, 0.0, 0.0, 0.0}};
    OperatorMatrix g2{{0.0, 0.0, 0.0, -I},
                      {0.0, 0.0, I, 0.0},
                      {0.0, I, 0.0, 0.0},
                      {-I, 0.0, 0.0, 0.0}};
    OperatorMatrix g3{{0.0, 0.0, 1.0, 0.0},
                      {0.0, 0.0, 0.0, -1.0},
                      {-1.0, 0.0, 0.0, 0.0},
                      {0.0, 1.0, 0.0, 0.0}};
    OperatorMatrix g5{{0.0, 0.0, 1.0, 0.0},
                      {0.0, 0.0, 0.0, 1.0},
                      {1.0, 0.0, 0.0, 0.0},
                      {0.0, 1.0, 0.0, 0.0}};
    std::vector<OperatorMatrix> spatial{g1, g2, g3};
    std::vector<OperatorMatrix> alpha;
    alpha.reserve(3);
    for (const auto& g : spatial) alpha.push_back(g0 * g);
    return GammaBasis{4, g0, std::move(spatial), g5, std::move(alpha)};
  }
  throw std::invalid_argument("build_basis: unsupported dimension " + std::to_string(dim) +
                              " (expected 2 or 4)");
}

OperatorMatrix gamma5_exponential(const GammaBasis& basis, double a) {
  if (!std::isfinite(a)) throw std::invalid_argument("gamma5_exponential: exponent is not finite");
  return scale(OperatorMatrix::identity(basis.dim), std::cosh(a)) +
         scale(basis.gamma5, std::sinh(a));
}

}  // namespace ptdirac
