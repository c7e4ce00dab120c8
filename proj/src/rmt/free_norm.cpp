#include "geodlab/rmt/free_norm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "geodlab/error.hpp"
#include "geodlab/rmt/parallel.hpp"

namespace geodlab::rmt {

namespace {

// State (m, b): sign pattern of a reduced word of length m, bit i of b set
// iff letter i is an inverse generator. Flattened index 2^m - 1 + b.
struct SignTree {
  int k;
  int radius;

  static std::size_t index(int m, std::uint64_t b) { return (std::size_t{1} << m) - 1 + b; }
  static bool ends_inverse(int m, std::uint64_t b) { return m > 0 && ((b >> (m - 1)) & 1U); }

  // Children of a vertex of type (m, b) that end with a generator / inverse.
  double positive_children(int m, std::uint64_t b) const {
    return (m == 0 || !ends_inverse(m, b)) ? k : k - 1;
  }
  double inverse_children(int m, std::uint64_t b) const {
    return (m == 0 || ends_inverse(m, b)) ? k : k - 1;
  }

  // y = T x: e_s -> sqrt(c+(s)) e_{s+} + [s ends inverse] sqrt(c-(parent)) e_parent.
  void apply(const std::vector<double>& x, std::vector<double>& y) const {
    std::fill(y.begin(), y.end(), 0.0);
    for (int m = 0; m <= radius; ++m) {
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
        const double v = x[index(m, b)];
        if (v == 0.0) continue;
        if (m < radius) y[index(m + 1, b)] += std::sqrt(positive_children(m, b)) * v;
        if (ends_inverse(m, b)) {
          const std::uint64_t pb = b & ((std::uint64_t{1} << (m - 1)) - 1);
          y[index(m - 1, pb)] += std::sqrt(inverse_children(m - 1, pb)) * v;
        }
      }
    }
  }

  // y = T^* x, i.e. y_t = sum_u <e_u, T e_t> x_u.
  void apply_adjoint(const std::vector<double>& x, std::vector<double>& y) const {
    for (int m = 0; m <= radius; ++m) {
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
        double acc = 0.0;
        if (m < radius) acc += std::sqrt(positive_children(m, b)) * x[index(m + 1, b)];
        if (ends_inverse(m, b)) {
          const std::uint64_t pb = b & ((std::uint64_t{1} << (m - 1)) - 1);
          acc += std::sqrt(inverse_children(m - 1, pb)) * x[index(m - 1, pb)];
        }
        y[index(m, b)] = acc;
      }
    }
  }
};

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

double free_norm_ball_oracle(int k, int radius) {
  if (k < 2) throw ArgumentError("free_norm_ball_oracle: k must be >= 2");
  if (radius < 1) throw ArgumentError("free_norm_ball_oracle: radius must be >= 1");
  if (radius > kMaxOracleRadius) {
    throw CapacityError("free_norm_ball_oracle: radius " + std::to_string(radius) +
                        " exceeds the supported maximum " + std::to_string(kMaxOracleRadius));
  }
  const SignTree tree{k, radius};
  const std::size_t size = (std::size_t{1} << (radius + 1)) - 1;

  // Lanczos on T^* T from the all-ones vector; the largest Ritz value
  // converges to ||T||^2.
  std::vector<double> v(size, 1.0 / std::sqrt(static_cast<double>(size)));
  std::vector<double> v_prev(size, 0.0), tv(size), w(size);
  std::vector<double> alpha, beta;
  double previous = 0.0;
  int stable = 0;
  const int max_steps = static_cast<int>(std::min<std::size_t>(size, 4000));
  for (int j = 0; j < max_steps; ++j) {
    tree.apply(v, tv);
    tree.apply_adjoint(tv, w);
    double a = 0.0;
    for (std::size_t i = 0; i < size; ++i) a += w[i] * v[i];
    const double b_prev = beta.empty() ? 0.0 : beta.back();
    for (std::size_t i = 0; i < size; ++i) w[i] -= a * v[i] + b_prev * v_prev[i];
    alpha.push_back(a);

    const double b = norm2(w);
    if (j % 10 == 9 || j + 1 == max_steps || b <= 1e-14 * a) {
      Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), j + 1);
      Eigen::VectorXd sub = Eigen::Map<Eigen::VectorXd>(beta.data(), j);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
      tri.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
      const double top = tri.eigenvalues()(j);
      stable = std::abs(top - previous) <= 1e-14 * top ? stable + 1 : 0;
      previous = top;
      if (stable >= 2 || b <= 1e-14 * top) break;
    }
    beta.push_back(b);
    v_prev.swap(v);
    for (std::size_t i = 0; i < size; ++i) v[i] = w[i] / b;
  }
  return std::sqrt(previous);
}

std::vector<int> default_limit_radii() { return {10, 12, 14, 16, 18, 20}; }

double free_norm_limit(int k, const std::vector<int>& radii) {
  if (radii.size() < 4) throw ArgumentError("free_norm_limit: need at least 4 radii");
  const auto m = static_cast<Eigen::Index>(radii.size());
  Eigen::MatrixXd design(m, 4);
  Eigen::VectorXd values(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double h = 1.0 / (radii[i] + 1.0);
    design(i, 0) = 1.0;
    design(i, 1) = -h * h;
    design(i, 2) = -h * h * h;
    design(i, 3) = -h * h * h * h;
    values(i) = free_norm_ball_oracle(k, radii[i]);
  }
  Eigen::VectorXd coef = design.colPivHouseholderQr().solve(values);
  return coef(0);
}

double sum_norm(const UnitaryTuple& tuple) {
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(tuple.n(), tuple.n());
  for (const auto& u : tuple.matrices()) s += u.matrix();
  return op_norm(s);
}

FreenessResult strong_freeness_experiment(int k, int n, int trials, double eps, double limit,
                                          std::uint64_t master_seed, unsigned workers) {
  if (k < 2) throw ArgumentError("strong_freeness_experiment: k must be >= 2");
  if (trials < 1) throw ArgumentError("strong_freeness_experiment: trials must be >= 1");
  const std::string tag = "freenorm/k=" + std::to_string(k) + "/n=" + std::to_string(n);
  FreenessResult out;
  out.limit = limit;
  out.norms.resize(trials);
  parallel_for(static_cast<std::size_t>(trials), workers, [&](std::size_t t) {
    out.norms[t] = sum_norm(sample_rep(k, n, RngStream::for_trial(master_seed, tag, t)));
  });
  int within = 0;
  for (double v : out.norms) within += v <= limit + eps ? 1 : 0;
  out.fraction = static_cast<double>(within) / trials;
  return out;
}

}  // namespace geodlab::rmt
