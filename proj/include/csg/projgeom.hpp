#pragma once

// Points, lines and projective transformations of the projective plane over
// an exact field. Points and lines are both homogeneous triples (the plane
// is self-dual), stored in canonical form: divided by the last nonzero
// coordinate, so equality up to scalar is plain coordinate equality.

#include <string>

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <Eigen/LU>

#include "csg/cyclofield.hpp"
#include "csg/eigen_support.hpp"
#include "csg/errors.hpp"

namespace csg {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

template <typename Scalar>
bool is_zero(const Scalar& s) {
  return s == Scalar(0);
}
inline bool is_zero(const CycloElement& s) { return s.is_zero(); }

struct PointTag {};
struct LineTag {};

template <typename Scalar, typename Tag>
class Homogeneous {
 public:
  using Coords = Vector3<Scalar>;

  Homogeneous(const Scalar& a, const Scalar& b, const Scalar& c) : Homogeneous(Coords(a, b, c)) {}

  explicit Homogeneous(const Coords& coords) : coords_(coords) {
    int last = 2;
    while (last >= 0 && is_zero(coords_[last])) --last;
    if (last < 0) {
      throw PreconditionError(std::is_same_v<Tag, PointTag> ? "zero point" : "zero line");
    }
    const Scalar pivot = coords_[last];
    for (int i = 0; i < last; ++i) coords_[i] = coords_[i] / pivot;
    coords_[last] = Scalar(1);
  }

  const Coords& coords() const { return coords_; }
  const Scalar& operator[](int i) const { return coords_[i]; }

  friend bool operator==(const Homogeneous& lhs, const Homogeneous& rhs) {
    return lhs.coords_[0] == rhs.coords_[0] && lhs.coords_[1] == rhs.coords_[1] && lhs.coords_[2] == rhs.coords_[2];
  }
  friend bool operator!=(const Homogeneous& lhs, const Homogeneous& rhs) { return !(lhs == rhs); }

 private:
  Coords coords_;
};

template <typename Scalar>
using BasicProjPoint = Homogeneous<Scalar, PointTag>;
template <typename Scalar>
using BasicProjLine = Homogeneous<Scalar, LineTag>;

using ProjPoint = BasicProjPoint<CycloElement>;
using ProjLine = BasicProjLine<CycloElement>;

/// The affine point (x, y) = [x : y : 1].
template <typename Scalar>
BasicProjPoint<Scalar> affine_point(const Scalar& x, const Scalar& y) {
  return BasicProjPoint<Scalar>(x, y, Scalar(1));
}

/// The line x + k y = d, i.e. coefficients (1, k, -d).
template <typename Scalar>
BasicProjLine<Scalar> slope_intercept_line(const Scalar& k, const Scalar& d) {
  return BasicProjLine<Scalar>(Scalar(1), k, -d);
}

template <typename Scalar>
bool incident(const BasicProjPoint<Scalar>& p, const BasicProjLine<Scalar>& l) {
  return is_zero(l.coords().dot(p.coords()));
}

template <typename Scalar>
Scalar determinant(const Vector3<Scalar>& a, const Vector3<Scalar>& b, const Vector3<Scalar>& c) {
  Matrix3<Scalar> m;
  m << a, b, c;
  return m.determinant();
}

template <typename Scalar>
bool collinear(const BasicProjPoint<Scalar>& p, const BasicProjPoint<Scalar>& q, const BasicProjPoint<Scalar>& r) {
  return is_zero(determinant<Scalar>(p.coords(), q.coords(), r.coords()));
}

/// Line through two distinct points.
template <typename Scalar>
BasicProjLine<Scalar> join(const BasicProjPoint<Scalar>& p, const BasicProjPoint<Scalar>& q) {
  if (p == q) throw PreconditionError("join: identical points");
  return BasicProjLine<Scalar>(Vector3<Scalar>(p.coords().cross(q.coords())));
}

/// Intersection of two distinct lines.
template <typename Scalar>
BasicProjPoint<Scalar> meet(const BasicProjLine<Scalar>& l, const BasicProjLine<Scalar>& m) {
  if (l == m) throw PreconditionError("meet: identical lines");
  return BasicProjPoint<Scalar>(Vector3<Scalar>(l.coords().cross(m.coords())));
}

/// An invertible 3x3 matrix acting on points by p -> M p and on lines by
/// l -> M^-T l, which preserves incidence.
template <typename Scalar>
class BasicTransform {
 public:
  using Matrix = Matrix3<Scalar>;

  explicit BasicTransform(const Matrix& matrix) : matrix_(matrix) {
    const Scalar det = matrix_.determinant();
    if (is_zero(det)) throw PreconditionError("singular transform");
    // adjugate / det
    Matrix adj;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        const int r1 = (c + 1) % 3, r2 = (c + 2) % 3, c1 = (r + 1) % 3, c2 = (r + 2) % 3;
        adj(r, c) = matrix_(r1, c1) * matrix_(r2, c2) - matrix_(r1, c2) * matrix_(r2, c1);
      }
    }
    const Scalar inv_det = Scalar(1) / det;
    inverse_ = adj * inv_det;
  }

  static BasicTransform identity() { return BasicTransform(Matrix::Identity()); }

  /// [x : y : z] -> [c x : c y : z].
  static BasicTransform scaling(const Scalar& c) {
    Matrix m = Matrix::Identity();
    m(0, 0) = c;
    m(1, 1) = c;
    return BasicTransform(m);
  }

  const Matrix& matrix() const { return matrix_; }
  const Matrix& inverse_matrix() const { return inverse_; }

  BasicTransform inverse() const { return BasicTransform(inverse_, matrix_); }

  BasicProjPoint<Scalar> operator()(const BasicProjPoint<Scalar>& p) const {
    return BasicProjPoint<Scalar>(Vector3<Scalar>(matrix_ * p.coords()));
  }
  BasicProjLine<Scalar> operator()(const BasicProjLine<Scalar>& l) const {
    return BasicProjLine<Scalar>(Vector3<Scalar>(inverse_.transpose() * l.coords()));
  }

  /// (a * b)(p) = a(b(p)).
  friend BasicTransform operator*(const BasicTransform& a, const BasicTransform& b) {
    return BasicTransform(Matrix(a.matrix_ * b.matrix_), Matrix(b.inverse_ * a.inverse_));
  }

 private:
  BasicTransform(const Matrix& matrix, const Matrix& inverse) : matrix_(matrix), inverse_(inverse) {}

  Matrix matrix_;
  Matrix inverse_;
};

using Transform = BasicTransform<CycloElement>;

template <typename Scalar>
BasicProjPoint<Scalar> apply(const BasicTransform<Scalar>& t, const BasicProjPoint<Scalar>& p) {
  return t(p);
}
template <typename Scalar>
BasicProjLine<Scalar> apply(const BasicTransform<Scalar>& t, const BasicProjLine<Scalar>& l) {
  return t(l);
}

/// A transform sending p to [1:0:0] and the line l through p to {z = 0}.
/// Deterministic: the preimages of [1:0:0], [0:1:0], [0:0:1] are p, the
/// first canonical point of l among l x e_k not equal to p, and the first
/// coordinate point e_k off l.
template <typename Scalar>
BasicTransform<Scalar> normalization_transform(const BasicProjPoint<Scalar>& p, const BasicProjLine<Scalar>& l) {
  if (!incident(p, l)) throw PreconditionError("normalization_transform: point not on line");
  const Matrix3<Scalar> id = Matrix3<Scalar>::Identity();
  Vector3<Scalar> second;
  bool found = false;
  for (int k = 0; k < 3 && !found; ++k) {
    const Vector3<Scalar> v = l.coords().cross(Vector3<Scalar>(id.col(k)));
    if (is_zero(v[0]) && is_zero(v[1]) && is_zero(v[2])) continue;
    const BasicProjPoint<Scalar> q(v);
    if (q == p) continue;
    second = q.coords();
    found = true;
  }
  int off = 0;
  while (is_zero(l[off])) ++off;
  Matrix3<Scalar> basis;
  basis << p.coords(), second, Vector3<Scalar>(id.col(off));
  return BasicTransform<Scalar>(basis).inverse();
}

/// "x ; y ; z" with each coordinate in the coordinate grammar of Q(zeta_order).
template <typename Tag>
std::string to_string(const Homogeneous<CycloElement, Tag>& h, int order = 0) {
  return to_string(h[0], order) + " ; " + to_string(h[1], order) + " ; " + to_string(h[2], order);
}

}  // namespace csg
