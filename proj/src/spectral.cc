#include "signlab/spectral.h"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace signlab {

SignedLaplacian signed_laplacian(const SignedGraph& g) {
  const int n = g.node_count();
  SignedLaplacian l{Eigen::MatrixXd::Zero(n, n)};
  for (const Edge& e : g.edges()) {
    l.matrix(e.u, e.u) += 1.0;
    l.matrix(e.v, e.v) += 1.0;
    l.matrix(e.u, e.v) -= e.sign;
    l.matrix(e.v, e.u) -= e.sign;
  }
  return l;
}

SignedLaplacian signed_laplacian(const SignedGraph& g,
                                 std::span<const int> edge_ids,
                                 std::span<const int> labels) {
  if (edge_ids.size() != labels.size()) {
    throw Error(ErrorCategory::kValidation,
                "training ids and labels differ in length");
  }
  const int n = g.node_count();
  SignedLaplacian l{Eigen::MatrixXd::Zero(n, n)};
  for (std::size_t k = 0; k < edge_ids.size(); ++k) {
    const Edge& e = g.edge(edge_ids[k]);
    const int y = labels[k];
    if (y != kPositive && y != kNegative) {
      throw Error(ErrorCategory::kValidation, "training label must be +1 or -1");
    }
    l.matrix(e.u, e.u) += 1.0;
    l.matrix(e.v, e.v) += 1.0;
    l.matrix(e.u, e.v) -= y;
    l.matrix(e.v, e.u) -= y;
  }
  return l;
}

double quadratic_form(const SignedLaplacian& l, const Eigen::VectorXd& x) {
  return x.dot(l.matrix * x);
}

EigenResult min_eigenpair(const SignedLaplacian& l, double tol, int max_iter) {
  if (!(tol > 0.0)) throw ConfigError("eigen tolerance must be positive");
  const int n = l.size();
  EigenResult result;
  if (n == 0) return result;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l.matrix);
  if (solver.info() == Eigen::Success) {
    result.value = solver.eigenvalues()(0);
    result.vector = solver.eigenvectors().col(0).normalized();
  } else {
    result.value = l.matrix.diagonal().minCoeff();
    result.vector = Eigen::VectorXd::Unit(n, 0);
  }
  auto residual_of = [&l](const Eigen::VectorXd& v, double lambda) {
    return (l.matrix * v - lambda * v).norm();
  };
  result.residual = residual_of(result.vector, result.value);

  // Inverse iteration around a slightly lowered shift keeps the system
  // nonsingular while converging to the smallest eigenvalue.
  const double scale = std::max(1.0, l.matrix.diagonal().cwiseAbs().maxCoeff());
  while (result.residual > tol && result.refinement_steps < max_iter) {
    const double shift = result.value - 1e-6 * scale;
    Eigen::MatrixXd shifted =
        l.matrix - shift * Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd next = shifted.ldlt().solve(result.vector);
    if (!next.allFinite() || next.norm() == 0.0) break;
    next.normalize();
    const double lambda = next.dot(l.matrix * next);
    result.vector = next;
    result.value = lambda;
    result.residual = residual_of(next, lambda);
    ++result.refinement_steps;
  }
  if (result.residual > tol) {
    throw NonConvergenceError("smallest eigenpair residual " +
                                  std::to_string(result.residual) +
                                  " above tolerance after " +
                                  std::to_string(max_iter) + " refinements",
                              result);
  }
  return result;
}

BooleanMinimum boolean_min_quadratic(const SignedGraph& g, int max_nodes) {
  const int n = g.node_count();
  if (n > max_nodes) {
    throw LimitError("boolean_min_quadratic: " + std::to_string(n) +
                     " nodes exceeds the limit of " + std::to_string(max_nodes));
  }
  BooleanMinimum best;
  if (n == 0) return best;
  // Integer copy of L_s; the form is evaluated through the matrix, not by
  // counting violated edges.
  const SignedLaplacian l = signed_laplacian(g);
  std::vector<long long> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i * n + j] = std::llround(l.matrix(i, j));
  }
  std::vector<int> x(n, 1);
  // field[k] = sum_{j != k} L_kj x_j
  std::vector<long long> field(n, 0);
  long long value = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      value += m[i * n + j];
      if (j != i) field[i] += m[i * n + j];
    }
  }
  best.value = value;
  best.argmin.side = x;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t step = 1; step < total; ++step) {
    const int k = std::countr_zero(step) + 1;
    // Flipping x_k changes x^T L x by -4 x_k field[k].
    value -= 4LL * x[k] * field[k];
    for (int j = 0; j < n; ++j) {
      if (j != k) field[j] -= 2LL * m[j * n + k] * x[k];
    }
    x[k] = -x[k];
    if (value < best.value) {
      best.value = value;
      best.argmin.side = x;
    }
  }
  return best;
}

SpectralPrediction least_eigen_classifier(const SignedGraph& g,
                                          std::span<const int> training_edge_ids,
                                          std::span<const int> training_labels,
                                          double tol) {
  const int n = g.node_count();
  SpectralPrediction out;
  std::vector<char> is_training(g.edge_count(), 0);
  for (int id : training_edge_ids) {
    if (id < 0 || id >= g.edge_count()) {
      throw Error(ErrorCategory::kValidation, "training edge id out of range");
    }
    is_training[id] = 1;
  }
  for (int id = 0; id < g.edge_count(); ++id) {
    if (!is_training[id]) out.test_edges.push_back(id);
  }

  std::vector<Edge> train_edges;
  for (int id : training_edge_ids) train_edges.push_back(g.edge(id));
  const SignedGraph train(n, std::move(train_edges));
  out.sides.side.assign(n, kPositive);
  if (training_edge_ids.empty() || !is_connected(train)) {
    out.degenerate = true;
    out.predictions.assign(out.test_edges.size(), kPositive);
    return out;
  }

  const SignedLaplacian l =
      signed_laplacian(g, training_edge_ids, training_labels);
  const EigenResult eig = min_eigenpair(l, std::max(tol, 1e-12), 200);
  out.eigenvalue = eig.value;
  for (int i = 0; i < n; ++i) {
    out.sides.side[i] = eig.vector(i) < -tol ? kNegative : kPositive;
  }
  out.predictions.reserve(out.test_edges.size());
  for (int id : out.test_edges) {
    const Edge& e = g.edge(id);
    out.predictions.push_back(out.sides.side[e.u] * out.sides.side[e.v]);
  }
  return out;
}

}  // namespace signlab
