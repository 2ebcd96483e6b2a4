#pragma once

// so(1,7) realized as 8x8 matrices preserving diag(-1,1,...,1), split as
// g2 + p1 + p2 with p1 inside so(7) and p2 the boosts. The 14 basis
// matrices of p are hard-coded; everything else is computed from them.

#include "prc/qsqrt3.hpp"

#include <Eigen/Core>
#include <Eigen/LU>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prc {

template <class S> using Mat8 = Eigen::Matrix<S, 8, 8>;
template <class S> using Vec14 = Eigen::Matrix<S, 14, 1>;
template <class S> using Mat14 = Eigen::Matrix<S, 14, 14>;
template <class S> using Mat2 = Eigen::Matrix<S, 2, 2>;

inline constexpr int kSummandDim = 7;
inline constexpr int kPDim = 14;

// Zero test used by the double path; exact scalars compare against 0.
inline constexpr double kZeroTol = 1e-10;

namespace detail {

struct BasisEntry {
  int row, col, sign;
};

// Nonzero entries of the p1 basis, each scaled by 1/6.
inline constexpr std::array<std::array<BasisEntry, 6>, 7> kP1Entries{{
    {{{2, 3, 1}, {3, 2, -1}, {4, 5, 1}, {5, 4, -1}, {6, 7, -1}, {7, 6, 1}}},
    {{{1, 3, -1}, {3, 1, 1}, {4, 6, 1}, {5, 7, 1}, {6, 4, -1}, {7, 5, -1}}},
    {{{1, 2, 1}, {2, 1, -1}, {4, 7, 1}, {5, 6, -1}, {6, 5, 1}, {7, 4, -1}}},
    {{{1, 5, -1}, {2, 6, -1}, {3, 7, -1}, {5, 1, 1}, {6, 2, 1}, {7, 3, 1}}},
    {{{1, 4, 1}, {2, 7, -1}, {3, 6, 1}, {4, 1, -1}, {6, 3, -1}, {7, 2, 1}}},
    {{{1, 7, 1}, {2, 4, 1}, {3, 5, -1}, {4, 2, -1}, {5, 3, 1}, {7, 1, -1}}},
    {{{1, 6, -1}, {2, 5, 1}, {3, 4, 1}, {4, 3, -1}, {5, 2, -1}, {6, 1, 1}}},
}};

template <class S>
bool near_zero(const S& x, double tol) {
  return ScalarOps<S>::is_zero(x, tol);
}

}  // namespace detail

template <class S>
Mat8<S> minkowski_form() {
  Mat8<S> J = Mat8<S>::Identity();
  J(0, 0) = S(-1);
  return J;
}

template <class S>
Mat8<S> bracket(const Mat8<S>& X, const Mat8<S>& Y) {
  return X * Y - Y * X;
}

// X J + J X^T = 0
template <class S>
bool in_so17(const Mat8<S>& X, double tol = kZeroTol) {
  const Mat8<S> J = minkowski_form<S>();
  const Mat8<S> R = X * J + J * X.transpose();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!detail::near_zero(R(i, j), tol)) return false;
  return true;
}

template <class S>
struct PBasis {
  std::array<Mat8<S>, kPDim> x;

  const Mat8<S>& operator[](int i) const { return x[i]; }
  static bool in_p1(int i) { return i < kSummandDim; }
};

// Items 1..7 (p1) then 8..14 (p2), entries in {0, +-1/6, sqrt(3)/6}.
template <class S>
PBasis<S> build_p_basis() {
  PBasis<S> B;
  const S sixth = ScalarOps<S>::ratio(1, 6);
  const S boost = ScalarOps<S>::sqrt3() * sixth;
  for (int i = 0; i < kSummandDim; ++i) {
    B.x[i] = Mat8<S>::Zero();
    for (const auto& e : detail::kP1Entries[i])
      B.x[i](e.row, e.col) = e.sign > 0 ? sixth : S(-sixth);
  }
  for (int k = 1; k <= kSummandDim; ++k) {
    Mat8<S>& X = B.x[kSummandDim + k - 1];
    X = Mat8<S>::Zero();
    X(0, k) = boost;
    X(k, 0) = boost;
  }
  return B;
}

// B(X, Y) = 6 tr(XY) on so(1,7).
template <class S>
S killing_form(const Mat8<S>& X, const Mat8<S>& Y) {
  return S(6) * X.cwiseProduct(Y.transpose()).sum();
}

// Rotations E_ij - E_ji (1 <= i < j <= 7) followed by boosts E_0k + E_k0.
template <class S>
std::vector<Mat8<S>> so17_full_basis() {
  std::vector<Mat8<S>> out;
  for (int i = 1; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      Mat8<S> X = Mat8<S>::Zero();
      X(i, j) = S(1);
      X(j, i) = S(-1);
      out.push_back(X);
    }
  for (int k = 1; k < 8; ++k) {
    Mat8<S> X = Mat8<S>::Zero();
    X(0, k) = S(1);
    X(k, 0) = S(1);
    out.push_back(X);
  }
  return out;
}

// Coordinates of an so(1,7) matrix in so17_full_basis order.
template <class S>
Eigen::Matrix<S, 28, 1> so17_coordinates(const Mat8<S>& M) {
  Eigen::Matrix<S, 28, 1> c;
  int n = 0;
  for (int i = 1; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) c(n++) = M(i, j);
  for (int k = 1; k < 8; ++k) c(n++) = M(0, k);
  return c;
}

// tr(ad X o ad Y) computed on the 28-dimensional algebra.
template <class S>
S adjoint_trace_form(const Mat8<S>& X, const Mat8<S>& Y) {
  const auto basis = so17_full_basis<S>();
  S tr(0);
  for (std::size_t k = 0; k < basis.size(); ++k)
    tr += so17_coordinates<S>(bracket<S>(X, bracket<S>(Y, basis[k])))(static_cast<int>(k));
  return tr;
}

template <class S>
Vec14<S> project_p(const PBasis<S>& B, const Mat8<S>& W) {
  Vec14<S> c;
  for (int i = 0; i < kPDim; ++i) {
    const S b = killing_form<S>(W, B[i]);
    c(i) = PBasis<S>::in_p1(i) ? S(-b) : b;
  }
  return c;
}

template <class S>
Mat8<S> from_p_coordinates(const PBasis<S>& B, const Vec14<S>& c) {
  Mat8<S> W = Mat8<S>::Zero();
  for (int i = 0; i < kPDim; ++i)
    if (!detail::near_zero(c(i), 0.0)) W += c(i) * B[i];
  return W;
}

// The part of W outside p, i.e. its g2 component.
template <class S>
Mat8<S> off_p_residual(const PBasis<S>& B, const Mat8<S>& W) {
  return W - from_p_coordinates<S>(B, project_p<S>(B, W));
}

template <class S>
S fixed_inner(const PBasis<S>& B, const Mat8<S>& X, const Mat8<S>& Y, double tol = kZeroTol) {
  for (const Mat8<S>* M : {&X, &Y}) {
    const Mat8<S> R = off_p_residual<S>(B, *M);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        if (!detail::near_zero(R(i, j), tol))
          throw std::domain_error("fixed_inner: argument has a component outside p");
  }
  const Vec14<S> cx = project_p<S>(B, X), cy = project_p<S>(B, Y);
  Vec14<S> x1 = cx, x2 = cx, y1 = cy, y2 = cy;
  x1.template tail<kSummandDim>().setZero();
  x2.template head<kSummandDim>().setZero();
  y1.template tail<kSummandDim>().setZero();
  y2.template head<kSummandDim>().setZero();
  return killing_form<S>(from_p_coordinates<S>(B, x2), from_p_coordinates<S>(B, y2)) -
         killing_form<S>(from_p_coordinates<S>(B, x1), from_p_coordinates<S>(B, y1));
}

// Projected brackets [x_i, x_j]_p in p-coordinates, plus the Killing Gram
// matrix of the basis. Nonzero coefficients are kept as sparse lists.
template <class S>
struct StructureTensor {
  struct Term {
    int k;
    S value;
  };
  std::array<std::vector<Term>, kPDim * kPDim> brackets;
  Mat14<S> killing;

  const std::vector<Term>& at(int i, int j) const { return brackets[i * kPDim + j]; }

  S coefficient(int i, int j, int k) const {
    for (const auto& t : at(i, j))
      if (t.k == k) return t.value;
    return S(0);
  }
};

template <class S>
StructureTensor<S> build_structure_tensor(const PBasis<S>& B) {
  StructureTensor<S> T;
  for (int i = 0; i < kPDim; ++i)
    for (int j = 0; j < kPDim; ++j) {
      T.killing(i, j) = killing_form<S>(B[i], B[j]);
      const Vec14<S> c = project_p<S>(B, bracket<S>(B[i], B[j]));
      for (int k = 0; k < kPDim; ++k)
        if (!detail::near_zero(c(k), kZeroTol)) T.brackets[i * kPDim + j].push_back({k, c(k)});
    }
  return T;
}

// Built once per scalar type.
template <class S>
const StructureTensor<S>& so17_structure() {
  static const StructureTensor<S> T = build_structure_tensor<S>(build_p_basis<S>());
  return T;
}

template <class S>
struct StructureSums {
  int d1 = kSummandDim;
  int d2 = kSummandDim;
  S p1_sum;                // sum <[e1a, e1b], e1c>^2
  S p2_sum;                // sum <[e2a, e1b], e2c>^2
  S p2_sum_from_p2p2;      // sum <[e2a, e2b], e1c>^2
  S p2_sum_from_p1p2;      // sum <[e1a, e2b], e2c>^2
};

// The basis is orthonormal for the fixed inner product, so <[x_a,x_b], x_c>
// is the c-th projected coefficient.
template <class S>
StructureSums<S> structure_sums(const StructureTensor<S>& T) {
  StructureSums<S> s;
  s.p1_sum = s.p2_sum = s.p2_sum_from_p2p2 = s.p2_sum_from_p1p2 = S(0);
  auto p1 = [](int i) { return i < kSummandDim; };
  for (int a = 0; a < kPDim; ++a)
    for (int b = 0; b < kPDim; ++b)
      for (const auto& t : T.at(a, b)) {
        const S sq = t.value * t.value;
        if (p1(a) && p1(b) && p1(t.k)) s.p1_sum += sq;
        if (!p1(a) && p1(b) && !p1(t.k)) s.p2_sum += sq;
        if (!p1(a) && !p1(b) && p1(t.k)) s.p2_sum_from_p2p2 += sq;
        if (p1(a) && !p1(b) && !p1(t.k)) s.p2_sum_from_p1p2 += sq;
      }
  return s;
}

template <class S>
struct RicTriple {
  S r1, r2, r3;
};

// How the equivariant map enters the metric. InverseRoot uses the metric
// <Phi^{-1} ., .> with orthonormal frame e_i = phi x_i; Root uses <Phi ., .>
// with e_i = phi^{-1} x_i.
enum class MetricConvention { InverseRoot, Root };

template <class S>
struct OracleResult {
  RicTriple<S> ric;
  Mat14<S> full;
  double max_deviation = 0.0;  // largest violation of the block structure
  std::vector<std::string> diagnostics;
};

namespace detail {

template <class S>
using Sparse14 = std::vector<std::pair<int, S>>;

template <class S>
Vec14<S> bracket_p(const StructureTensor<S>& T, const Sparse14<S>& u, const Sparse14<S>& v) {
  Vec14<S> out = Vec14<S>::Zero();
  for (const auto& [p, up] : u)
    for (const auto& [q, vq] : v) {
      const S w = up * vq;
      for (const auto& t : T.at(p, q)) out(t.k) += w * t.value;
    }
  return out;
}

// (M (x) I7) v for a 2x2 block matrix M.
template <class S>
Vec14<S> apply_block(const Mat2<S>& M, const Vec14<S>& v) {
  Vec14<S> out;
  for (int t = 0; t < 2; ++t)
    for (int r = 0; r < kSummandDim; ++r)
      out(t * kSummandDim + r) = M(t, 0) * v(r) + M(t, 1) * v(kSummandDim + r);
  return out;
}

template <class S>
double to_d(const S& x) {
  return ScalarOps<S>::to_double(x);
}

}  // namespace detail

// Ricci tensor in the fixed basis for the metric determined by phi, by
// direct summation over an orthonormal frame:
//   ric(x,y) = -1/2 sum g([x,e_i]_p,[y,e_i]_p) - 1/2 B(x,y)
//              + 1/4 sum g([e_i,e_j]_p, x) g([e_i,e_j]_p, y)
template <class S>
Mat14<S> ricci_matrix(const StructureTensor<S>& T, const Mat2<S>& phi,
                      MetricConvention conv = MetricConvention::InverseRoot) {
  const Mat2<S> phi_inv = phi.inverse();
  const Mat2<S> frame = conv == MetricConvention::InverseRoot ? phi : phi_inv;
  const Mat2<S> frame_inv = conv == MetricConvention::InverseRoot ? phi_inv : phi;
  const Mat2<S> G = frame_inv.transpose() * frame_inv;

  std::array<detail::Sparse14<S>, kPDim> e;
  for (int s = 0; s < 2; ++s)
    for (int r = 0; r < kSummandDim; ++r)
      for (int t = 0; t < 2; ++t)
        if (!detail::near_zero(frame(t, s), 0.0))
          e[s * kSummandDim + r].push_back({t * kSummandDim + r, frame(t, s)});

  // U[a][i] = [x_a, e_i]_p and G U[a][i]
  std::vector<std::array<Vec14<S>, kPDim>> U(kPDim), GU(kPDim);
  for (int a = 0; a < kPDim; ++a) {
    const detail::Sparse14<S> xa{{a, S(1)}};
    for (int i = 0; i < kPDim; ++i) {
      U[a][i] = detail::bracket_p<S>(T, xa, e[i]);
      GU[a][i] = detail::apply_block<S>(G, U[a][i]);
    }
  }
  // W[i,j] = G [e_i, e_j]_p, so g([e_i,e_j]_p, x_a) = W[i,j](a)
  std::vector<Vec14<S>> W;
  W.reserve(kPDim * kPDim);
  for (int i = 0; i < kPDim; ++i)
    for (int j = 0; j < kPDim; ++j) W.push_back(detail::apply_block<S>(G, detail::bracket_p<S>(T, e[i], e[j])));

  Mat14<S> ric;
  for (int a = 0; a < kPDim; ++a)
    for (int b = a; b < kPDim; ++b) {
      S t1(0), t3(0);
      for (int i = 0; i < kPDim; ++i) t1 += U[a][i].dot(GU[b][i]);
      for (const auto& w : W)
        if (!detail::near_zero(w(a), 0.0) && !detail::near_zero(w(b), 0.0)) t3 += w(a) * w(b);
      const S half = ScalarOps<S>::ratio(1, 2), quarter = ScalarOps<S>::ratio(1, 4);
      ric(a, b) = -(half * t1) - half * T.killing(a, b) + quarter * t3;
      ric(b, a) = ric(a, b);
    }
  return ric;
}

// Checks that ric is constant on the two diagonal blocks, constant on the
// pairing x_i <-> x_{i+7}, and zero elsewhere. Returns the largest deviation.
template <class S>
double ricci_block_deviation(const Mat14<S>& ric) {
  const int n = kSummandDim;
  double dev = 0.0;
  auto track = [&dev](const S& diff) {
    if (detail::near_zero(diff, 0.0)) return;
    const double d = std::abs(detail::to_d(diff));
    dev = std::max(dev, d > 0.0 ? d : std::numeric_limits<double>::denorm_min());
  };
  for (int a = 0; a < kPDim; ++a)
    for (int b = 0; b < kPDim; ++b) {
      S expect(0);
      if (a == b) expect = a < n ? ric(0, 0) : ric(n, n);
      else if (b == a + n || a == b + n) expect = ric(0, n);
      track(ric(a, b) - expect);
      track(ric(a, b) - ric(b, a));
    }
  return dev;
}

template <class S>
Mat2<S> phi_matrix(const S& a, const S& b, const S& c) {
  Mat2<S> m;
  m << a, c, c, b;
  return m;
}

// Ricci values (ric(x1,x1), ric(x8,x8), ric(x1,x8)) for the equivariant map
// phi = [[a I, c I], [c I, b I]].
template <class S>
OracleResult<S> ric_oracle(const S& a, const S& b, const S& c,
                           MetricConvention conv = MetricConvention::InverseRoot,
                           double tol = kZeroTol) {
  const S det = a * b - c * c;
  double scale = 1.0;
  if constexpr (!ScalarOps<S>::exact)
    scale = std::max({1.0, std::abs(detail::to_d(a * a)), std::abs(detail::to_d(b * b)),
                      std::abs(detail::to_d(c * c))});
  if (detail::near_zero(det, 1e-12 * scale))
    throw std::domain_error("ric_oracle: singular equivariant map (ab - c^2 = 0)");

  OracleResult<S> out;
  out.full = ricci_matrix<S>(so17_structure<S>(), phi_matrix<S>(a, b, c), conv);
  out.ric = {out.full(0, 0), out.full(kSummandDim, kSummandDim), out.full(0, kSummandDim)};
  out.max_deviation = ricci_block_deviation<S>(out.full);
  double mag = 1.0;
  if constexpr (!ScalarOps<S>::exact) mag = std::max(1.0, out.full.cwiseAbs().maxCoeff());
  if (out.max_deviation > tol * mag)
    out.diagnostics.push_back("ricci block structure violated: deviation " +
                              std::to_string(out.max_deviation));
  return out;
}

}  // namespace prc
