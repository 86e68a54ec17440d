#include "qtree/reps.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

namespace qtree {

Mat Mat::identity_dense(Eigen::Index n) {
  Mat m;
  m.dense = Eigen::MatrixXcd::Identity(n, n);
  return m;
}

Mat Mat::identity_diag(Eigen::Index n) {
  Mat m;
  m.diagonal = true;
  m.diag = Eigen::VectorXcd::Ones(n);
  return m;
}

Mat Mat::zero_like(const Mat& m) {
  Mat z;
  z.diagonal = m.diagonal;
  if (m.diagonal) {
    z.diag = Eigen::VectorXcd::Zero(m.diag.size());
  } else {
    z.dense = Eigen::MatrixXcd::Zero(m.dense.rows(), m.dense.cols());
  }
  return z;
}

Eigen::Index Mat::dim() const { return diagonal ? diag.size() : dense.rows(); }

Mat Mat::operator*(const Mat& rhs) const {
  Mat out;
  out.diagonal = diagonal && rhs.diagonal;
  if (out.diagonal) {
    out.diag = diag.cwiseProduct(rhs.diag);
  } else if (!diagonal && !rhs.diagonal) {
    out.dense = dense * rhs.dense;
  } else {
    throw std::invalid_argument("mixed diagonal/dense product");
  }
  return out;
}

Mat Mat::operator+(const Mat& rhs) const {
  Mat out;
  out.diagonal = diagonal;
  if (diagonal != rhs.diagonal) {
    throw std::invalid_argument("mixed diagonal/dense sum");
  }
  if (diagonal) {
    out.diag = diag + rhs.diag;
  } else {
    out.dense = dense + rhs.dense;
  }
  return out;
}

Mat Mat::operator-(const Mat& rhs) const {
  return *this + rhs.scaled(-1.0);
}

Mat Mat::scaled(const std::complex<double>& c) const {
  Mat out = *this;
  if (diagonal) {
    out.diag *= c;
  } else {
    out.dense *= c;
  }
  return out;
}

Mat Mat::adjoint() const {
  Mat out = *this;
  if (diagonal) {
    out.diag = diag.conjugate();
  } else {
    out.dense = dense.adjoint();
  }
  return out;
}

Mat Mat::kron(const Mat& rhs) const {
  Mat out;
  out.diagonal = diagonal && rhs.diagonal;
  if (out.diagonal) {
    out.diag.resize(diag.size() * rhs.diag.size());
    for (Eigen::Index i = 0; i < diag.size(); ++i) {
      out.diag.segment(i * rhs.diag.size(), rhs.diag.size()) =
          diag(i) * rhs.diag;
    }
    return out;
  }
  auto densify = [](const Mat& m) -> Eigen::MatrixXcd {
    if (!m.diagonal) return m.dense;
    return m.diag.asDiagonal();
  };
  Eigen::MatrixXcd a = densify(*this);
  Eigen::MatrixXcd b = densify(rhs);
  out.dense.resize(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.dense.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          a(i, j) * b;
    }
  }
  return out;
}

double Mat::norm() const {
  if (diagonal) {
    return diag.size() == 0 ? 0.0 : diag.cwiseAbs().maxCoeff();
  }
  if (dense.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dense);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

json NumericReport::to_json() const {
  json j;
  j["rep"] = rep;
  j["tolerance"] = tolerance;
  json rs = json::array();
  for (const auto& [name, r] : residuals) {
    rs.push_back(json{{"relation", name}, {"residual", r}});
  }
  j["residuals"] = std::move(rs);
  j["max_residual"] = max_residual;
  j["pass"] = pass();
  return j;
}

// ---------------------------------------------------------------------------
// representation families

std::optional<Mat> MatrixRep::image(const Generator& g) const {
  if (g.depth() > depth_cap) return std::nullopt;
  return assign_(g);
}

MatrixRep MatrixRep::two_projection(double theta, int depth_cap,
                                    bool allow_degenerate) {
  const double eps = 1e-12;
  if (!allow_degenerate &&
      (std::abs(theta) < eps || std::abs(theta - M_PI / 2) < eps)) {
    throw std::invalid_argument(
        "two_projection: theta in {0, pi/2} gives commuting projections");
  }
  MatrixRep rep;
  rep.k = 2;
  rep.depth_cap = depth_cap;
  rep.provenance = "two-projection(theta=" + std::to_string(theta) + ")";
  rep.dim_ = 2;
  rep.diagonal_ = false;

  Eigen::MatrixXcd p(2, 2), q(2, 2), one(2, 2), zero(2, 2);
  const double c = std::cos(theta), s = std::sin(theta);
  p << 1, 0, 0, 0;
  q << c * c, c * s, c * s, s * s;
  one = Eigen::MatrixXcd::Identity(2, 2);
  zero = Eigen::MatrixXcd::Zero(2, 2);

  // depth-2 block, rows and columns in the order 00, 01, 10, 11
  auto block = std::make_shared<std::map<std::pair<std::string, std::string>,
                                         Eigen::MatrixXcd>>();
  auto put = [&](const char* u, const char* v, const Eigen::MatrixXcd& m) {
    (*block)[{u, v}] = m;
  };
  put("00", "00", p);
  put("00", "01", one - p);
  put("00", "10", zero);
  put("00", "11", zero);
  put("01", "00", one - p);
  put("01", "01", p);
  put("01", "10", zero);
  put("01", "11", zero);
  put("10", "00", zero);
  put("10", "01", zero);
  put("10", "10", q);
  put("10", "11", one - q);
  put("11", "00", zero);
  put("11", "01", zero);
  put("11", "10", one - q);
  put("11", "11", q);

  rep.assign_ = [block, one, zero](const Generator& g) -> std::optional<Mat> {
    Mat m;
    if (g.depth() == 0) {
      m.dense = one;
      return m;
    }
    if (g.depth() == 1) {
      m.dense = (g.row == g.col) ? one : zero;
      return m;
    }
    // b[uw, vw'] = [w == w'] b[u,v] with |u| = |v| = 2
    Word u = g.row.prefix(2), v = g.col.prefix(2);
    if (g.row.suffix_from(2) != g.col.suffix_from(2)) {
      m.dense = zero;
      return m;
    }
    m.dense = block->at({u.str(), v.str()});
    return m;
  };
  return rep;
}

MatrixRep MatrixRep::magic4(double theta) {
  MatrixRep rep;
  rep.k = 4;
  rep.depth_cap = 1;
  rep.provenance = "magic4(theta=" + std::to_string(theta) + ")";
  rep.dim_ = 2;
  rep.diagonal_ = false;

  Eigen::MatrixXcd p(2, 2), q(2, 2), one(2, 2), zero(2, 2);
  const double c = std::cos(theta), s = std::sin(theta);
  p << 1, 0, 0, 0;
  q << c * c, c * s, c * s, s * s;
  one = Eigen::MatrixXcd::Identity(2, 2);
  zero = Eigen::MatrixXcd::Zero(2, 2);

  // the 4x4 block magic unitary [[p,1-p,0,0],[1-p,p,0,0],[0,0,q,1-q],[0,0,1-q,q]]
  auto entry = [p, q, one, zero](int i, int j) -> Eigen::MatrixXcd {
    if (i < 2 && j < 2) return (i == j) ? p : one - p;
    if (i >= 2 && j >= 2) return (i == j) ? q : one - q;
    return zero;
  };
  rep.assign_ = [entry, one](const Generator& g) -> std::optional<Mat> {
    Mat m;
    if (g.depth() == 0) {
      m.dense = one;
      return m;
    }
    m.dense = entry(g.row.at(0), g.col.at(0));
    return m;
  };
  return rep;
}

MatrixRep MatrixRep::classical(int k, std::vector<Portrait> group,
                               int depth_cap) {
  // must be a group: identity, inverses, closure
  {
    std::set<Portrait> set(group.begin(), group.end());
    if (set.size() != group.size()) {
      throw std::invalid_argument("classical rep: duplicate portraits");
    }
    if (!set.count(Portrait(k, group.empty() ? 0 : group[0].depth()))) {
      throw std::invalid_argument("classical rep: missing identity");
    }
    for (const Portrait& g : group) {
      if (!set.count(g.inverse())) {
        throw std::invalid_argument("classical rep: not closed under inverse");
      }
    }
    for (const Portrait& g : group) {
      for (const Portrait& h : group) {
        if (!set.count(g.compose(h))) {
          throw std::invalid_argument(
              "classical rep: not closed under composition");
        }
      }
    }
  }
  MatrixRep rep;
  rep.k = k;
  rep.depth_cap = depth_cap;
  rep.provenance =
      "classical(order=" + std::to_string(group.size()) + ")";
  rep.dim_ = static_cast<Eigen::Index>(group.size());
  rep.diagonal_ = true;
  auto shared = std::make_shared<std::vector<Portrait>>(std::move(group));
  rep.assign_ = [shared](const Generator& g) -> std::optional<Mat> {
    Mat m;
    m.diagonal = true;
    m.diag.resize(static_cast<Eigen::Index>(shared->size()));
    for (std::size_t i = 0; i < shared->size(); ++i) {
      if (static_cast<int>(g.row.size()) > (*shared)[i].depth()) {
        return std::nullopt;
      }
      m.diag(static_cast<Eigen::Index>(i)) =
          indicator_eval(g, (*shared)[i]) ? 1.0 : 0.0;
    }
    return m;
  };
  return rep;
}

NumericReport MatrixRep::check_relations(int max_depth) const {
  NumericReport report;
  report.rep = provenance;
  report.tolerance = tol;
  Alphabet alphabet(k);
  auto push = [&](const std::string& name, double r) {
    report.residuals.emplace_back(name, r);
    report.max_residual = std::max(report.max_residual, r);
  };
  Mat unit = diagonal_ ? Mat::identity_diag(dim_) : Mat::identity_dense(dim_);

  for (int n = 1; n <= max_depth; ++n) {
    double proj_res = 0, sa_res = 0, sum_row_res = 0, sum_col_res = 0;
    double level_row = 0, level_col = 0;
    for (const Word& u : enumerate_words(alphabet, n)) {
      Mat row_total = Mat::zero_like(unit);
      Mat col_total = Mat::zero_like(unit);
      for (const Word& v : enumerate_words(alphabet, n)) {
        Mat m = *image(Generator(u, v));
        proj_res = std::max(proj_res, (m * m - m).norm());
        sa_res = std::max(sa_res, (m.adjoint() - m).norm());
        row_total = row_total + m;
        col_total = col_total + *image(Generator(v, u));
        if (n < max_depth) {
          // a[u,v] = sum_y a[ux,vy] = sum_z a[uz,vx] for each x
          for (int x = 0; x < k; ++x) {
            Mat sy = Mat::zero_like(unit);
            Mat sz = Mat::zero_like(unit);
            for (int y = 0; y < k; ++y) {
              sy = sy + *image(Generator(u.append(x), v.append(y)));
              sz = sz + *image(Generator(u.append(y), v.append(x)));
            }
            sum_row_res = std::max(sum_row_res, (sy - m).norm());
            sum_col_res = std::max(sum_col_res, (sz - m).norm());
          }
        }
      }
      level_row = std::max(level_row, (row_total - unit).norm());
      level_col = std::max(level_col, (col_total - unit).norm());
    }
    std::string lvl = "depth-" + std::to_string(n);
    push(lvl + "/projections", proj_res);
    push(lvl + "/self-adjoint", sa_res);
    push(lvl + "/row-sums-to-unit", level_row);
    push(lvl + "/col-sums-to-unit", level_col);
    if (n < max_depth) {
      push(lvl + "/square-row", sum_row_res);
      push(lvl + "/square-col", sum_col_res);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// evaluation

Mat numeric_eval(const Element& e, const MatrixRep& rep) {
  auto& reg = Registry::instance();
  Mat unit = rep.diagonal_ ? Mat::identity_diag(rep.dim_)
                           : Mat::identity_dense(rep.dim_);
  Mat acc = Mat::zero_like(unit);
  for (const auto& [mon, c] : e.terms()) {
    Mat prod = unit;
    for (GenId g : reg.factors(mon)) {
      auto m = rep.image(reg.generator(g));
      if (!m) {
        throw std::out_of_range("numeric_eval: generator beyond depth cap");
      }
      prod = prod * *m;
    }
    acc = acc +
          prod.scaled(std::complex<double>(c.convert_to<double>(), 0.0));
  }
  return acc;
}

Mat numeric_eval(const TensorElement& t, const MatrixRep& rep) {
  auto& reg = Registry::instance();
  // leg dimensions
  std::vector<Eigen::Index> dims;
  for (const Leg& leg : t.signature()) {
    if (leg.kind == LegKind::Algebra) {
      dims.push_back(rep.dim_);
    } else if (leg.kind == LegKind::Function) {
      Eigen::Index n = 1;
      for (int i = 0; i < leg.n; ++i) n *= t.alphabet_size();
      dims.push_back(n);
    } else {
      throw std::invalid_argument("numeric_eval: wreath legs unsupported");
    }
  }
  Eigen::Index total = 1;
  for (auto d : dims) total *= d;
  Mat acc = rep.diagonal_ ? Mat::identity_diag(total).scaled(0.0)
                          : Mat::identity_dense(total).scaled(0.0);
  for (const auto& [tuple, c] : t.terms()) {
    Mat prod;
    bool first = true;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      Mat legm;
      if (t.signature()[i].kind == LegKind::Algebra) {
        Element mono = Element::monomial(
            t.alphabet_size(),
            std::vector<GenId>(reg.factors(tuple[i]).begin(),
                               reg.factors(tuple[i]).end()));
        legm = numeric_eval(mono, rep);
      } else {
        // basis projection p_w as a diagonal unit vector
        const Word w = reg.word(tuple[i]);
        Eigen::Index n = dims[i];
        Eigen::Index rank = 0;
        for (std::size_t j = 0; j < w.size(); ++j) {
          rank = rank * t.alphabet_size() + w.at(j);
        }
        if (rep.diagonal_) {
          legm.diagonal = true;
          legm.diag = Eigen::VectorXcd::Zero(n);
          legm.diag(rank) = 1.0;
        } else {
          legm.dense = Eigen::MatrixXcd::Zero(n, n);
          legm.dense(rank, rank) = 1.0;
        }
      }
      prod = first ? legm : prod.kron(legm);
      first = false;
    }
    acc = acc + prod.scaled(std::complex<double>(c.convert_to<double>(), 0.0));
  }
  return acc;
}

RefuteResult refute(const Element& lhs, const Element& rhs,
                    const std::vector<const MatrixRep*>& reps) {
  Element diff = lhs - rhs;
  for (const MatrixRep* rep : reps) {
    if (diff.max_depth() > rep->depth_cap) continue;
    double n = numeric_eval(diff, *rep).norm();
    if (n > 100.0 * rep->tol) return RefuteResult::Refuted;
  }
  return RefuteResult::Inconclusive;
}

}  // namespace qtree
