#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qtree/classical.hpp"
#include "qtree/report.hpp"
#include "qtree/tensor.hpp"

namespace qtree {

/// Matrix value of a representation: dense for the projection models,
/// diagonal for the function-algebra embeddings (group can be large).
struct Mat {
  bool diagonal = false;
  Eigen::MatrixXcd dense;
  Eigen::VectorXcd diag;

  static Mat identity_dense(Eigen::Index n);
  static Mat identity_diag(Eigen::Index n);
  static Mat zero_like(const Mat& m);

  Eigen::Index dim() const;
  Mat operator*(const Mat& rhs) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  Mat scaled(const std::complex<double>& c) const;
  Mat adjoint() const;
  Mat kron(const Mat& rhs) const;
  /// Operator norm: largest singular value (max |entry| when diagonal).
  double norm() const;
};

struct NumericReport {
  std::string rep;
  double tolerance = 1e-10;
  std::vector<std::pair<std::string, double>> residuals;
  double max_residual = 0;

  bool pass() const { return max_residual <= tolerance; }
  json to_json() const;
};

/// Finite-dimensional representation: an assignment of each generator of
/// depth <= depth_cap to a matrix, checked against the relations to
/// tolerance before use.
class MatrixRep {
 public:
  int k = 2;
  int depth_cap = 3;
  double tol = 1e-10;
  std::string provenance;

  /// Image of a generator, or nullopt beyond the cap.
  std::optional<Mat> image(const Generator& g) const;

  /// Two-projection model (k = 2): depth-1 images are 1,0,0,1; the depth-2
  /// block is built from p = diag(1,0) and the theta-rotated projection q;
  /// deeper generators extend by b[uw,vw'] = [w==w'] b[u,v].
  /// theta in {0, pi/2} is the commuting degenerate case and is rejected
  /// unless allow_degenerate.
  static MatrixRep two_projection(double theta, int depth_cap,
                                  bool allow_degenerate = false);

  /// Block magic unitary on four points built from the same two-projection
  /// blocks; depth cap 1. Witnesses depth-1 noncommutativity for k = 4.
  static MatrixRep magic4(double theta);

  /// Diagonal representation indexed by a finite portrait group:
  /// a[u,v] -> diag_g [g.v == u]. The portrait list must be a group.
  static MatrixRep classical(int k, std::vector<Portrait> group,
                             int depth_cap);

  /// Residuals of all defining relations at depth <= max_depth.
  NumericReport check_relations(int max_depth) const;

  Eigen::Index dim() const { return dim_; }

 private:
  std::function<std::optional<Mat>(const Generator&)> assign_;
  Eigen::Index dim_ = 0;
  bool diagonal_ = false;

  friend Mat numeric_eval(const Element&, const MatrixRep&);
  friend Mat numeric_eval(const TensorElement&, const MatrixRep&);
};

/// Linear-multiplicative evaluation; throws on unassigned generators.
Mat numeric_eval(const Element& e, const MatrixRep& rep);

/// Tensor legs evaluate by Kronecker product; function legs p_w map to the
/// canonical diagonal basis of C(X^n).
Mat numeric_eval(const TensorElement& t, const MatrixRep& rep);

enum class RefuteResult { Refuted, Inconclusive };

/// Refuted iff some representation evaluates lhs - rhs with norm
/// > 100 * tol; guards the engine against unsound rule extensions.
RefuteResult refute(const Element& lhs, const Element& rhs,
                    const std::vector<const MatrixRep*>& reps);

}  // namespace qtree
