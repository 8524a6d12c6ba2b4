#ifndef SIGNLAB_SPECTRAL_H_
#define SIGNLAB_SPECTRAL_H_

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "signlab/error.h"
#include "signlab/graph.h"

namespace signlab {

// L_s = D - Y, dense. Entry (i,i) is the degree, entry (i,j) is -Y_ij.
struct SignedLaplacian {
  Eigen::MatrixXd matrix;

  int size() const { return static_cast<int>(matrix.rows()); }
};

struct EigenResult {
  double value = 0.0;
  Eigen::VectorXd vector;
  double residual = 0.0;  // ||L v - value v||
  int refinement_steps = 0;
};

class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, EigenResult best)
      : Error(ErrorCategory::kNumerical, what), best_(std::move(best)) {}
  const EigenResult& best_iterate() const { return best_; }

 private:
  EigenResult best_;
};

SignedLaplacian signed_laplacian(const SignedGraph& g);

// Laplacian of the subgraph made of the given edges with the given labels
// (degrees count those edges only).
SignedLaplacian signed_laplacian(const SignedGraph& g,
                                 std::span<const int> edge_ids,
                                 std::span<const int> labels);

double quadratic_form(const SignedLaplacian& l, const Eigen::VectorXd& x);

// Smallest eigenpair with residual <= tol. The dense symmetric solve is
// followed by shifted inverse iteration (at most max_iter steps) whenever
// the residual is still above tol.
EigenResult min_eigenpair(const SignedLaplacian& l, double tol = 1e-10,
                          int max_iter = 100);

struct BooleanMinimum {
  long long value = 0;  // min over x in {-1,+1}^n of x^T L_s x
  TwoClustering argmin;
};

inline constexpr int kBooleanQuadraticMaxNodes = 20;

BooleanMinimum boolean_min_quadratic(const SignedGraph& g,
                                     int max_nodes = kBooleanQuadraticMaxNodes);

struct SpectralPrediction {
  TwoClustering sides;
  std::vector<int> test_edges;   // every edge id not in the training set
  std::vector<int> predictions;  // parallel to test_edges
  double eigenvalue = 0.0;
  bool degenerate = false;       // training graph empty or disconnected
};

// Least-eigenvalue heuristic: two-clustering from the signs of the minimal
// eigenvector of the training Laplacian; test edges are +1 iff both ends
// fall on the same side. Components with |v_i| < tol count as +1.
SpectralPrediction least_eigen_classifier(const SignedGraph& g,
                                          std::span<const int> training_edge_ids,
                                          std::span<const int> training_labels,
                                          double tol = 1e-9);

}  // namespace signlab

#endif  // SIGNLAB_SPECTRAL_H_
