#include "ptdirac/dirac_hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "eigen_bridge.hpp"

namespace ptdirac {

namespace {

constexpr double kClusterRelTol = 1e-6;
constexpr double kRankRelTol = 1e-8;

void require_finite_masses(double m1, double m2) {
  if (!std::isfinite(m1) || !std::isfinite(m2)) {
    throw std::invalid_argument("mass parameters must be finite");
  }
}

OperatorMatrix assemble(const GammaBasis& basis, const Momentum& p, double m1, double m2) {
  if (static_cast<int>(p.size()) != basis.spatial_dim()) {
    throw std::invalid_argument("momentum has " + std::to_string(p.size()) +
                                " components, basis expects " +
                                std::to_string(basis.spatial_dim()));
  }
  require_finite_masses(m1, m2);
  OperatorMatrix h = scale(basis.beta(), m1) + scale(basis.beta() * basis.gamma5, m2);
  for (std::size_t i = 0; i < p.size(); ++i) {
    h = h + scale(basis.alpha[i], p.components()[i]);
  }
  return h;
}

// Number of singular values of (h - lambda) above the threshold.
int numerical_rank(const OperatorMatrix& h, Complex lambda, double threshold) {
  detail::EigenMatrix shifted = detail::to_eigen(h);
  for (int i = 0; i < h.dim(); ++i) shifted(i, i) -= lambda;
  Eigen::JacobiSVD<detail::EigenMatrix> svd(shifted);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) ++rank;
  }
  return rank;
}

bool diagonalizable(const OperatorMatrix& h, const std::vector<Complex>& eigenvalues) {
  const double norm = frobenius_norm(h);
  if (norm == 0.0) return true;
  const double cluster_tol = kClusterRelTol * norm;
  const double rank_tol = kRankRelTol * norm;

  std::vector<bool> assigned(eigenvalues.size(), false);
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    if (assigned[i]) continue;
    Complex sum{};
    int multiplicity = 0;
    for (std::size_t j = i; j < eigenvalues.size(); ++j) {
      if (!assigned[j] && std::abs(eigenvalues[j] - eigenvalues[i]) <= cluster_tol) {
        assigned[j] = true;
        sum += eigenvalues[j];
        ++multiplicity;
      }
    }
    if (multiplicity == 1) continue;
    const Complex center = sum / static_cast<double>(multiplicity);
    const int geometric = h.dim() - numerical_rank(h, center, rank_tol);
    if (geometric < multiplicity) return false;
  }
  return true;
}

void fill_pairing(SpectralResult& result) {
  const auto& ev = result.eigenvalues;
  std::vector<bool> matched(ev.size(), false);
  double residual = 0.0;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (matched[i]) continue;
    const Complex target = std::conj(ev[i]);
    std::size_t best = i;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = i; j < ev.size(); ++j) {
      if (matched[j]) continue;
      const double d = std::abs(ev[j] - target);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    matched[i] = matched[best] = true;
    result.pairing.emplace_back(i, best);
    residual = std::max(residual, best_dist);
  }
  result.conjugation_residual = residual;
}

}  // namespace

Momentum::Momentum(std::vector<double> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("momentum needs at least one component");
  for (double c : components_) {
    if (!std::isfinite(c)) throw std::invalid_argument("momentum components must be finite");
  }
}

Momentum Momentum::along_x(double p, int spatial_dim) {
  if (spatial_dim < 1) throw std::invalid_argument("spatial dimension must be positive");
  std::vector<double> c(static_cast<std::size_t>(spatial_dim), 0.0);
  c[0] = p;
  return Momentum(std::move(c));
}

double Momentum::magnitude() const noexcept {
  double sum = 0.0;
  for (double c : components_) sum += c * c;
  return std::sqrt(sum);
}

Complex DiracHamiltonian::closed_form_energy() const {
  return dispersion(p_magnitude, m1, m2).second;
}

DiracHamiltonian build_hamiltonian(const GammaBasis& basis, const Momentum& p, double m1,
                                   double m2) {
  return DiracHamiltonian{assemble(basis, p, m1, m2), p.magnitude(), m1, m2};
}

DiracHamiltonian build_adjoint_hamiltonian(const GammaBasis& basis, const Momentum& p, double m1,
                                           double m2) {
  return DiracHamiltonian{assemble(basis, p, m1, -m2), p.magnitude(), m1, -m2};
}

std::vector<Complex> sort_eigenvalues(std::vector<Complex> values) {
  std::sort(values.begin(), values.end(),
            [](Complex a, Complex b) { return a.real() < b.real(); });
  double scale = 0.0;
  for (const auto& v : values) scale = std::max(scale, std::abs(v));
  const double tie = 1e-12 * scale;
  // Runs of (near-)equal real parts are ordered by imaginary part.
  std::size_t start = 0;
  while (start < values.size()) {
    std::size_t end = start + 1;
    while (end < values.size() && values[end].real() - values[end - 1].real() <= tie) ++end;
    std::sort(values.begin() + static_cast<std::ptrdiff_t>(start),
              values.begin() + static_cast<std::ptrdiff_t>(end),
              [](Complex a, Complex b) { return a.imag() < b.imag(); });
    start = end;
  }
  return values;
}

SpectralResult spectrum(const OperatorMatrix& h, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("spectrum: tolerance must be positive");
  Eigen::ComplexEigenSolver<detail::EigenMatrix> solver(detail::to_eigen(h),
                                                        /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw CrossCheckError("spectrum: eigenvalue iteration did not converge");
  }
  std::vector<Complex> values(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + solver.eigenvalues().size());

  SpectralResult result;
  result.eigenvalues = sort_eigenvalues(std::move(values));
  result.is_real = std::all_of(result.eigenvalues.begin(), result.eigenvalues.end(),
                               [tol](Complex z) { return std::abs(z.imag()) <= tol; });
  result.is_diagonalizable = diagonalizable(h, result.eigenvalues);
  fill_pairing(result);
  return result;
}

SpectralResult spectrum(const DiracHamiltonian& h, SpectrumOptions options) {
  SpectralResult result = spectrum(h.matrix, options.tol);
  if (!options.cross_check) return result;

  const auto expected = closed_form_spectrum(h.matrix.dim(), h.p_magnitude, h.m1, h.m2);
  const double allowed = kCrossCheckTol * std::max(1.0, std::abs(expected.back()));
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const double diff = std::abs(result.eigenvalues[i] - expected[i]);
    if (!(diff <= allowed)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "spectrum cross-check failed at (p=" << h.p_magnitude << ", m1=" << h.m1
          << ", m2=" << h.m2 << "): eigenvalue " << i << " numeric " << result.eigenvalues[i]
          << " closed form " << expected[i];
      throw CrossCheckError(msg.str());
    }
  }
  return result;
}

std::vector<Complex> closed_form_spectrum(int dim, double p_magnitude, double m1, double m2) {
  const auto [minus, plus] = dispersion(p_magnitude, m1, m2);
  std::vector<Complex> out;
  for (int i = 0; i < dim / 2; ++i) out.push_back(minus);
  for (int i = 0; i < dim / 2; ++i) out.push_back(plus);
  return sort_eigenvalues(std::move(out));
}

std::pair<Complex, Complex> dispersion(double p_magnitude, double m1, double m2) {
  const double disc = p_magnitude * p_magnitude + (m1 - m2) * (m1 + m2);
  const Complex e = std::sqrt(Complex(disc, 0.0));
  return {-e, e};
}

Complex physical_mass(double m1, double m2) {
  return std::sqrt(Complex((m1 - m2) * (m1 + m2), 0.0));
}

bool spectrum_real_over(const GammaBasis& basis, std::span<const Momentum> momenta, double m1,
                        double m2, double tol) {
  return std::all_of(momenta.begin(), momenta.end(), [&](const Momentum& p) {
    return spectrum(build_hamiltonian(basis, p, m1, m2), SpectrumOptions{tol, true}).is_real;
  });
}

}  // namespace ptdirac
