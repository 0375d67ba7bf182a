#include "cstar/develop.hpp"

#include <Eigen/Cholesky>

#include <cmath>

namespace cstar {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

double frac(double x) {
  double f = x - std::floor(x);
  return (f >= 1.0) ? 0.0 : f;  // guard against floor rounding at the seam
}

double torusDist(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  double s = 0;
  for (Eigen::Index j = 0; j < a.size(); ++j) {
    double d = frac(a(j) - b(j));
    d = std::min(d, 1.0 - d);
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

Cplx Poly::eval(const std::vector<Cplx>& z) const {
  Cplx acc = 0;
  for (const Monomial& t : terms) {
    Cplx v = t.coeff;
    for (std::size_t j = 0; j < t.exps.size(); ++j)
      for (int e = 0; e < t.exps[j]; ++e) v *= z[j];
    acc += v;
  }
  return acc;
}

Cplx Poly::partial(Index var, const std::vector<Cplx>& z) const {
  Cplx acc = 0;
  for (const Monomial& t : terms) {
    std::size_t v = static_cast<std::size_t>(var);
    if (v >= t.exps.size() || t.exps[v] == 0) continue;
    Cplx w = t.coeff * static_cast<double>(t.exps[v]);
    for (std::size_t j = 0; j < t.exps.size(); ++j) {
      int e = t.exps[j] - (j == v ? 1 : 0);
      for (int k = 0; k < e; ++k) w *= z[j];
    }
    acc += w;
  }
  return acc;
}

NumericChart chartFrom(const std::vector<QuadComplex>& residues) {
  NumericChart c;
  c.ell = static_cast<Index>(residues.size());
  for (const QuadComplex& a : residues) c.alpha.push_back(embed(a));
  c.h.nvars = c.ell;
  return c;
}

namespace {

std::vector<Cplx> toZ(const std::vector<double>& r, const std::vector<double>& theta) {
  std::vector<Cplx> z(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) z[i] = std::polar(r[i], theta[i]);
  return z;
}

void checkPoint(const NumericChart& c, const std::vector<double>& r,
                const std::vector<double>& theta) {
  if (static_cast<Index>(r.size()) != c.ell || static_cast<Index>(theta.size()) != c.ell)
    fail(Err::DimensionMismatch, "chart point dimension");
  for (double ri : r)
    if (!(ri > 0)) fail(Err::DomainError, "radial coordinate must be positive");
}

Cplx logZlog(const NumericChart& c, const std::vector<double>& r,
             const std::vector<double>& theta) {
  std::vector<Cplx> z = toZ(r, theta);
  Cplx acc = c.h.eval(z);
  for (Index i = 0; i < c.ell; ++i) {
    std::size_t k = static_cast<std::size_t>(i);
    acc += c.alpha[k] * Cplx(std::log(r[k]), theta[k]);
  }
  return acc;
}

}  // namespace

Cplx evalZlog(const NumericChart& c, const std::vector<double>& r,
              const std::vector<double>& theta) {
  checkPoint(c, r, theta);
  return std::exp(logZlog(c, r, theta));
}

double logderivResidual(const NumericChart& c, const std::vector<double>& r,
                        const std::vector<double>& theta, double step) {
  checkPoint(c, r, theta);
  if (!(step > 0)) fail(Err::DomainError, "finite-difference step must be positive");
  std::vector<Cplx> z = toZ(r, theta);
  double worst = 0;
  for (Index i = 0; i < c.ell; ++i) {
    std::size_t k = static_cast<std::size_t>(i);
    Cplx hi = c.h.partial(i, z);
    Cplx phase = std::polar(1.0, theta[k]);

    // radial direction: d(log z)/dr_i = alpha_i / r_i + h_i e^{i theta_i}
    {
      std::vector<double> rp = r, rm = r;
      rp[k] += step;
      rm[k] -= step;
      if (!(rm[k] > 0)) fail(Err::DomainError, "step too large for the base point");
      // difference of logs via the principal log of the ratio: branch-safe
      // because the ratio is close to 1
      Cplx fd = std::log(evalZlog(c, rp, theta) / evalZlog(c, rm, theta)) / (2 * step);
      Cplx expect = c.alpha[k] / r[k] + hi * phase;
      worst = std::max(worst, std::abs(fd - expect));
    }
    // angular direction: d(log z)/dtheta_i = i alpha_i + h_i * i r_i e^{i theta_i}
    {
      std::vector<double> tp = theta, tm = theta;
      tp[k] += step;
      tm[k] -= step;
      Cplx fd = std::log(evalZlog(c, r, tp) / evalZlog(c, r, tm)) / (2 * step);
      Cplx expect = Cplx(0, 1) * (c.alpha[k] + hi * r[k] * phase);
      worst = std::max(worst, std::abs(fd - expect));
    }
  }
  return worst;
}

double radialSlopeProbe(const NumericChart& c, Index i, int samples) {
  if (i < 0 || i >= c.ell) fail(Err::DimensionMismatch, "radial direction index");
  if (samples < 2) fail(Err::EmptySample, "need at least two radial samples");
  std::vector<double> r(static_cast<std::size_t>(c.ell), 1.0);
  std::vector<double> theta(static_cast<std::size_t>(c.ell), 0.0);
  // sample log r on [-1.2, -0.2]; least squares for the slope of log|z|
  double su = 0, sy = 0, suu = 0, suy = 0;
  for (int k = 0; k < samples; ++k) {
    double u = -1.2 + k * (1.0 / (samples - 1));
    r[static_cast<std::size_t>(i)] = std::exp(u);
    double y = std::log(std::abs(evalZlog(c, r, theta)));
    su += u;
    sy += y;
    suu += u * u;
    suy += u * y;
  }
  double n = samples;
  return (n * suy - su * sy) / (n * suu - su * su);
}

Cplx meridianMultiplierProbe(const NumericChart& c, Index i, int steps) {
  if (i < 0 || i >= c.ell) fail(Err::DimensionMismatch, "meridian index");
  if (steps < 1) fail(Err::EmptySample, "need at least one continuation step");
  std::vector<double> r(static_cast<std::size_t>(c.ell), 1.0);
  std::vector<double> theta(static_cast<std::size_t>(c.ell), 0.0);
  Cplx total = 0;
  Cplx prev = evalZlog(c, r, theta);
  for (int k = 1; k <= steps; ++k) {
    theta[static_cast<std::size_t>(i)] = kTau * k / steps;
    Cplx cur = evalZlog(c, r, theta);
    total += std::log(cur / prev);  // principal branch per small step
    prev = cur;
  }
  return std::exp(total);
}

OrbitSample sampleTorusOrbit(const Eigen::VectorXd& w, int points, int subdiv) {
  if (w.size() == 0 || w.norm() == 0) fail(Err::ZeroDirection, "torus orbit direction");
  if (points < 1) fail(Err::EmptySample, "need at least one orbit point");
  if (subdiv < 1) fail(Err::DomainError, "subdivision must be positive");
  OrbitSample s;
  s.raw.resize(points, w.size());
  Eigen::VectorXd stepv = w / static_cast<double>(subdiv);
  for (int k = 0; k < points; ++k) s.raw.row(k) = static_cast<double>(k) * stepv.transpose();
  return s;
}

double orbitMinReturn(const OrbitSample& s) {
  if (s.raw.rows() < 2) fail(Err::EmptySample, "orbit too short for a return distance");
  Eigen::VectorXd p0 = s.raw.row(0);
  double best = -1;
  for (Eigen::Index k = 1; k < s.raw.rows(); ++k) {
    double d = torusDist(s.raw.row(k), p0);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

double orbitCoverage(const OrbitSample& s, const IntMatrix& basis, int binsPerDim) {
  if (s.raw.rows() == 0) fail(Err::EmptySample, "empty orbit");
  if (binsPerDim < 1) fail(Err::DomainError, "need at least one bin");
  const Eigen::Index l = s.raw.cols();
  if (basis.cols() != l || basis.rows() == 0)
    fail(Err::DimensionMismatch, "subtorus basis vs orbit dimension");
  const Eigen::Index cdim = basis.rows();
  Eigen::MatrixXd B(cdim, l);
  for (Eigen::Index i = 0; i < cdim; ++i)
    for (Eigen::Index j = 0; j < l; ++j) B(i, j) = toDouble(basis(i, j));
  // subtorus coordinates via the pseudoinverse; well-defined on unwrapped
  // points whenever the orbit direction lies in the span of the basis
  Eigen::MatrixXd G = B * B.transpose();
  Eigen::MatrixXd proj = G.ldlt().solve(B);  // (B B^T)^{-1} B, cdim x l

  std::vector<char> hit(static_cast<std::size_t>(std::pow(binsPerDim, cdim)), 0);
  for (Eigen::Index k = 0; k < s.raw.rows(); ++k) {
    Eigen::VectorXd t = proj * s.raw.row(k).transpose();
    std::size_t idx = 0;
    for (Eigen::Index j = 0; j < cdim; ++j) {
      int b = static_cast<int>(frac(t(j)) * binsPerDim);
      if (b >= binsPerDim) b = binsPerDim - 1;
      idx = idx * static_cast<std::size_t>(binsPerDim) + static_cast<std::size_t>(b);
    }
    hit[idx] = 1;
  }
  std::size_t occupied = 0;
  for (char h : hit) occupied += static_cast<std::size_t>(h);
  return static_cast<double>(occupied) / static_cast<double>(hit.size());
}

IntMatrix orbitClosureBasis(const QuadVector& v) {
  const Index l = v.size();
  if (l == 0) fail(Err::ZeroDirection, "closure of an empty direction");
  // rational covectors annihilating v: two rational conditions from the
  // {1, sqrt(d)} coordinates of f . v = 0
  RatMatrix cond(2, l);
  for (Index j = 0; j < l; ++j) {
    auto [p, q] = qCoords(v(j));
    cond(0, j) = p;
    cond(1, j) = q;
  }
  RatMatrix forms = nullspaceField<Rational>(cond);
  Lattice closure = integerKernel(forms, l);
  if (closure.rank() == 0) fail(Err::ZeroDirection, "direction is zero");
  return closure.basis;
}

GammaOrbitStats gammaOrbitProbe(const std::vector<Cplx>& gens, int radius) {
  if (radius < 1) fail(Err::DomainError, "word radius must be >= 1");
  const std::size_t n = gens.size();
  GammaOrbitStats st;
  if (n == 0) return st;
  double count = std::pow(2.0 * radius + 1.0, static_cast<double>(n));
  if (count > 6e6) fail(Err::DomainError, "word ball too large; lower the radius");

  std::vector<Cplx> logs(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (gens[j] == Cplx(0, 0)) fail(Err::DomainError, "generator must be nonzero");
    logs[j] = std::log(gens[j]);
  }
  std::vector<int> v(n, -radius);
  for (;;) {
    bool zero = true;
    for (int c : v)
      if (c != 0) zero = false;
    if (!zero) {
      Cplx w = 0;
      for (std::size_t j = 0; j < n; ++j) w += static_cast<double>(v[j]) * logs[j];
      ++st.wordsVisited;
      double logAbs = w.real();
      if (std::abs(logAbs) > kCircleTolerance) {
        st.offCircleWord = true;
        if (st.minLogAbs < 0 || std::abs(logAbs) < st.minLogAbs) st.minLogAbs = std::abs(logAbs);
      }
      double dist = std::abs(std::exp(w) - 1.0);
      if (dist > kCircleTolerance && (st.minDistToOne < 0 || dist < st.minDistToOne))
        st.minDistToOne = dist;
    }
    // odometer
    std::size_t j = 0;
    while (j < n && v[j] == radius) v[j++] = -radius;
    if (j == n) break;
    ++v[j];
  }
  st.accumulationFlag = st.offCircleWord ||
                        (st.minDistToOne >= 0 && st.minDistToOne < kAccumulationDistance);
  return st;
}

}  // namespace cstar
