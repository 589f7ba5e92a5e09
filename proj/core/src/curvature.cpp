#include <algorithm>
#include <cmath>

#include "configeo/error.hpp"
#include "configeo/fourier.hpp"

namespace configeo::fourier {

std::vector<double> level_set_curvatures(const ScalarField& field, double t,
                                         std::span<const double> x0, double h) {
  const std::size_t n = x0.size();
  require(n >= 2, "level set curvatures need an ambient dimension >= 2");
  require(h > 0.0, "finite-difference step must be positive");
  std::vector<double> x(x0.begin(), x0.end());
  const double f0 = field(x);
  require(std::abs(f0 - t) <= 1e-9, "x0 does not lie on the level set {F = t}");

  auto eval = [&](std::size_t i, double di, std::size_t j, double dj) {
    x[i] += di;
    x[j] += dj;
    const double v = field(x);
    x[i] -= di;
    x[j] -= dj;
    return v;
  };

  Eigen::VectorXd grad(n);
  Eigen::MatrixXd hess(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double fp = eval(i, h, i, 0.0), fm = eval(i, -h, i, 0.0);
    grad(i) = (fp - fm) / (2.0 * h);
    hess(i, i) = (fp - 2.0 * f0 + fm) / (h * h);
    for (std::size_t j = 0; j < i; ++j) {
      const double v = (eval(i, h, j, h) - eval(i, h, j, -h) - eval(i, -h, j, h) +
                        eval(i, -h, j, -h)) /
                       (4.0 * h * h);
      hess(i, j) = hess(j, i) = v;
    }
  }
  const double gnorm = grad.norm();
  if (gnorm < 1e-6) {
    fail(ErrorCode::infeasible, "gradient vanishes at x0: not a regular point of the level set");
  }

  // Columns 1..n-1 of Q span the orthogonal complement of the gradient.
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(grad);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd tangent = q.rightCols(n - 1);
  const Eigen::MatrixXd form = tangent.transpose() * hess * tangent / gnorm;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(form, Eigen::EigenvaluesOnly);

  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  std::stable_sort(out.begin(), out.end(),
                   [](double a, double b) { return std::abs(a) > std::abs(b); });
  return out;
}

LevelSetExample level_set_example(const std::string& name, std::size_t d) {
  require(d >= 1, "level set examples need d >= 1");
  LevelSetExample ex;
  ex.name = name;
  if (name == "sphere") {
    require(d >= 2, "sphere example needs d >= 2");
    ex.field = [](std::span<const double> x) {
      double acc = 0.0;
      for (double v : x) acc += v * v;
      return acc;
    };
    ex.t = 1.0;
    ex.x0.assign(d, 0.0);
    ex.x0[0] = 1.0;
  } else if (name == "determinant") {
    require(d >= 2 && d <= 6, "determinant example supports 2 <= d <= 6");
    ex.field = [d](std::span<const double> x) {
      const auto m = static_cast<Eigen::Index>(d);
      // Column j is the block u^{j+1}.
      return Eigen::Map<const Eigen::MatrixXd>(x.data(), m, m).determinant();
    };
    ex.t = 1.0;
    ex.x0.assign(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) ex.x0[i * d + i] = 1.0;
  } else if (name == "paired") {
    require(d >= 2 && d % 2 == 0, "paired example needs even d >= 2");
    // Coordinates (x_1..x_d, y_1..y_d).
    ex.field = [d](std::span<const double> z) {
      double acc = 0.0;
      for (std::size_t i = 0; i + 1 < d; i += 2) {
        acc += z[i] * z[d + i + 1] - z[i + 1] * z[d + i];
      }
      return acc;
    };
    ex.t = 1.0;
    ex.x0.assign(2 * d, 0.0);
    ex.x0[0] = 1.0;
    ex.x0[d + 1] = 1.0;
  } else if (name == "rotated") {
    require(d >= 1, "rotated example needs d >= 1");
    // Coordinates (u_1..u_d, v_1..v_d).
    ex.field = [d](std::span<const double> z) {
      double acc = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        const double sq = z[i] * z[i] + z[d + i] * z[d + i];
        acc += i % 2 == 0 ? sq : -sq;
      }
      return acc;
    };
    ex.t = 1.0;
    ex.x0.assign(2 * d, 0.0);
    ex.x0[0] = 1.0;
  } else if (name == "affine") {
    ex.field = [](std::span<const double> x) {
      double acc = 0.0;
      for (double v : x) acc += v;
      return acc;
    };
    ex.t = 0.0;
    ex.x0.assign(std::max<std::size_t>(d, 2), 0.0);
  } else {
    fail(ErrorCode::invalid_argument, "unknown level set example '" + name + "'");
  }
  return ex;
}

std::size_t count_nonzero(std::span<const double> eigenvalues, double relative_tol) {
  double largest = 0.0;
  for (double v : eigenvalues) largest = std::max(largest, std::abs(v));
  if (largest == 0.0) return 0;
  return static_cast<std::size_t>(std::count_if(
      eigenvalues.begin(), eigenvalues.end(),
      [&](double v) { return std::abs(v) > relative_tol * largest; }));
}

double circulant_check(std::size_t d) {
  require(d >= 2, "circulant_check needs d >= 2");
  const auto m = static_cast<Eigen::Index>(d - 1);
  Eigen::MatrixXd a = Eigen::MatrixXd::Constant(m, m, 0.5);
  a.diagonal().setOnes();
  return a.determinant();
}

PhaseHessian phase_hessian(std::size_t d, std::span<const double> xi,
                           std::span<const double> eta) {
  require(d >= 3, "phase_hessian needs d >= 3");
  require(xi.size() == d && eta.size() == d, "xi and eta must be d-vectors");
  const double s3 = std::sqrt(3.0);
  const double e1 = eta[0], ed = eta[d - 1], xd = xi[d - 1];

  PhaseHessian out;
  out.p = -xd - 13.0 * s3 / 18.0 * e1 + 7.0 / 3.0 * ed;
  const double q11 = -(xd + s3 / 6.0 * e1 - 0.5 * ed);
  const double q12 = e1 / s3 - ed;
  const double q22 = -2.0 * e1 / s3;
  out.q_det = q11 * q22 - q12 * q12;

  const auto size = static_cast<Eigen::Index>(2 * d - 3);
  out.matrix = Eigen::MatrixXd::Zero(size, size);
  out.matrix(0, 0) = out.p;
  for (Eigen::Index b = 1; b < size; b += 2) {
    out.matrix(b, b) = q11;
    out.matrix(b, b + 1) = out.matrix(b + 1, b) = q12;
    out.matrix(b + 1, b + 1) = q22;
  }

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(out.matrix);
  const auto& sv = svd.singularValues();
  const double largest = sv.size() > 0 ? sv.maxCoeff() : 0.0;
  if (largest > 0.0) {
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) > 1e-10 * largest) ++out.rank;
    }
  }
  return out;
}

double plane_xi_d(double eta_1, double eta_d) {
  return -13.0 * std::sqrt(3.0) / 18.0 * eta_1 + 7.0 / 3.0 * eta_d;
}

QuadraticForm plane_block_form() {
  return {-13.0 / 9.0, 17.0 * std::sqrt(3.0) / 9.0, -1.0};
}

}  // namespace configeo::fourier
