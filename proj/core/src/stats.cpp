#include "monodir/stats.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "monodir/fft.hpp"

namespace monodir {

using cplx = std::complex<double>;

namespace {

double mean_product(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s / static_cast<double>(a.size());
}

std::size_t wrap(long v, std::size_t n) {
  const long ni = static_cast<long>(n);
  return static_cast<std::size_t>(((v % ni) + ni) % ni);
}

struct SpectralWeights {
  double g, h, gh;
};

SpectralWeights weights_at(long l1, long l2, std::size_t n) {
  const double k1 = wavenumber(l1, n), k2 = wavenumber(l2, n);
  const double m2 = k1 * k1 + k2 * k2;
  if (m2 == 0.0) return {0.0, 0.0, 0.0};
  return {k1 * k1 / m2, k2 * k2 / m2, k1 * k2 / m2};
}

long negate_bin(long l, std::size_t n) {
  const long half = static_cast<long>(n / 2);
  return l == -half ? l : -l;
}

}  // namespace

CovZero cov_zero(const MonogenicGrid& m) {
  CovZero c;
  c.rff = mean_product(m.f.data(), m.f.data());
  c.rgg = mean_product(m.g.data(), m.g.data()) + mean_product(m.g_im.data(), m.g_im.data());
  c.rhh = mean_product(m.h.data(), m.h.data()) + mean_product(m.h_im.data(), m.h_im.data());
  c.rgh = mean_product(m.g.data(), m.h.data()) + mean_product(m.g_im.data(), m.h_im.data());
  return c;
}

CovZero spectral_cov_zero(const RealGrid& field) {
  const std::size_t n = field.n();
  const std::size_t nc = n / 2 + 1;
  const RealGrid f = remove_mean(field);
  std::vector<cplx> spec(n * nc);
  fft::forward_r2c_2d(f.data(), spec, n);

  double sff = 0.0, sgg = 0.0, shh = 0.0, sgh = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    const long l2 = bin_index(r, n);
    for (std::size_t c = 0; c < nc; ++c) {
      const long l1 = bin_index(c, n);
      const double p = std::norm(spec[r * nc + c]);
      SpectralWeights w = weights_at(l1, l2, n);
      double mult = 1.0;
      if (c != 0 && c != n / 2) {
        // The Hermitian partner (-l1, -l2) is not stored; add its own weights.
        const SpectralWeights wp = weights_at(negate_bin(l1, n), negate_bin(l2, n), n);
        w = {w.g + wp.g, w.h + wp.h, w.gh + wp.gh};
        mult = 2.0;
      }
      sff += mult * p;
      sgg += w.g * p;
      shh += w.h * p;
      sgh += w.gh * p;
    }
  }
  const double n4 = std::pow(static_cast<double>(n), 4);
  return {sff / n4, sgg / n4, shh / n4, sgh / n4};
}

std::pair<double, double> RMatrix::eigenvalues() const {
  const double mid = 0.5 * (a + d);
  const double disc = std::hypot(0.5 * (a - d), b);
  return {mid + disc, mid - disc};
}

double RMatrix::dominant_angle() const {
  double th = 0.5 * std::atan2(2.0 * b, a - d);
  if (th < 0.0) th += std::numbers::pi;
  if (th >= std::numbers::pi) th -= std::numbers::pi;
  return th;
}

RMatrix r_matrix(const CovZero& c) {
  return {c.rff + c.rgg - c.rhh, 2.0 * c.rgh, c.rff - c.rgg + c.rhh};
}

QuatCov quat_cov_zero(const MonogenicGrid& m) {
  const CovZero c = cov_zero(m);
  const double rfg = mean_product(m.f.data(), m.g.data());
  const double rfh = mean_product(m.f.data(), m.h.data());
  QuatCov q;
  q.rmm = Quaternion(c.rff + c.rgg + c.rhh, 0.0, 0.0, 0.0);
  // m m^(i)* = (f^2 + g^2 - h^2) + 2 f h j + 2 g h k
  q.rmmi = Quaternion(c.rff + c.rgg - c.rhh, 0.0, 2.0 * rfh, 2.0 * c.rgh);
  // m m^(j)* = (f^2 - g^2 + h^2) + 2 f g i - 2 g h k
  q.rmmj = Quaternion(c.rff - c.rgg + c.rhh, 2.0 * rfg, 0.0, -2.0 * c.rgh);
  return q;
}

double cross_cov_direct(const RealGrid& a, const RealGrid& b, Lag xi) {
  const std::size_t n = a.n();
  if (b.n() != n) throw GridError("cross_cov_direct: grid sizes differ");
  double s = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t rb = wrap(static_cast<long>(r) - xi.d2, n);
    for (std::size_t c = 0; c < n; ++c) {
      s += a(r, c) * b(rb, wrap(static_cast<long>(c) - xi.d1, n));
    }
  }
  return s / static_cast<double>(n * n);
}

namespace {

std::vector<cplx> spectrum(std::span<const double> x, std::size_t n) {
  std::vector<cplx> s(x.begin(), x.end());
  fft::forward_2d(s, n);
  return s;
}

// (1/n^2) sum_x a(x) b(x - xi) for every xi, from precomputed spectra.
std::vector<double> correlate(const std::vector<cplx>& A, const std::vector<cplx>& B, std::size_t n) {
  std::vector<cplx> p(n * n);
  for (std::size_t i = 0; i < n * n; ++i) p[i] = A[i] * std::conj(B[i]);
  fft::inverse_2d(p, n);
  std::vector<double> out(n * n);
  const double s = 1.0 / static_cast<double>(n * n);
  for (std::size_t i = 0; i < n * n; ++i) out[i] = p[i].real() * s;
  return out;
}

std::array<std::vector<double>, 4> components(const std::vector<Quaternion>& q) {
  std::array<std::vector<double>, 4> out;
  for (auto& v : out) v.resize(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    out[0][i] = q[i].w;
    out[1][i] = q[i].x;
    out[2][i] = q[i].y;
    out[3][i] = q[i].z;
  }
  return out;
}

std::vector<Quaternion> conj_all(const std::vector<Quaternion>& q) {
  std::vector<Quaternion> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = conj(q[i]);
  return out;
}

}  // namespace

RealGrid cross_cov_fft(const RealGrid& a, const RealGrid& b) {
  const std::size_t n = a.n();
  if (b.n() != n) throw GridError("cross_cov_fft: grid sizes differ");
  return RealGrid(n, correlate(spectrum(a.data(), n), spectrum(b.data(), n), n));
}

std::vector<Quaternion> quaternion_signal(const MonogenicGrid& m) {
  const std::size_t len = m.f.size();
  std::vector<Quaternion> q(len);
  for (std::size_t i = 0; i < len; ++i) q[i] = Quaternion(m.f.data()[i], m.g.data()[i], m.h.data()[i], 0.0);
  return q;
}

Quaternion quat_cross_cov(const std::vector<Quaternion>& m, const std::vector<Quaternion>& q, std::size_t n,
                          Lag xi) {
  Quaternion s;
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t rq = wrap(static_cast<long>(r) - xi.d2, n);
    for (std::size_t c = 0; c < n; ++c) {
      s += m[r * n + c] * conj(q[rq * n + wrap(static_cast<long>(c) - xi.d1, n)]);
    }
  }
  return s / static_cast<double>(n * n);
}

std::vector<Quaternion> quat_cross_cov_all(const std::vector<Quaternion>& m, const std::vector<Quaternion>& q,
                                           std::size_t n) {
  const auto a = components(m);
  const auto b = components(conj_all(q));
  std::array<std::vector<cplx>, 4> A, B;
  for (int p = 0; p < 4; ++p) {
    A[p] = spectrum(a[p], n);
    B[p] = spectrum(b[p], n);
  }
  // Hamilton product table: out[c] += sign * a_p b_q.
  struct Term { int p, q, c; double sign; };
  static constexpr Term table[16] = {
      {0, 0, 0, 1},  {1, 1, 0, -1}, {2, 2, 0, -1}, {3, 3, 0, -1},
      {0, 1, 1, 1},  {1, 0, 1, 1},  {2, 3, 1, 1},  {3, 2, 1, -1},
      {0, 2, 2, 1},  {1, 3, 2, -1}, {2, 0, 2, 1},  {3, 1, 2, 1},
      {0, 3, 3, 1},  {1, 2, 3, 1},  {2, 1, 3, -1}, {3, 0, 3, 1},
  };
  std::array<std::vector<double>, 4> out;
  for (auto& v : out) v.assign(n * n, 0.0);
  for (const Term& t : table) {
    const auto corr = correlate(A[t.p], B[t.q], n);
    for (std::size_t i = 0; i < n * n; ++i) out[t.c][i] += t.sign * corr[i];
  }
  std::vector<Quaternion> r(n * n);
  for (std::size_t i = 0; i < n * n; ++i) r[i] = Quaternion(out[0][i], out[1][i], out[2][i], out[3][i]);
  return r;
}

namespace {

std::vector<Quaternion> involuted(const std::vector<Quaternion>& m, const PureUnitQuaternion& eta) {
  std::vector<Quaternion> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = involution(m[i], eta);
  return out;
}

double rmm0(const std::vector<Quaternion>& m) {
  double s = 0.0;
  for (const auto& q : m) s += norm_sq(q);
  return s / static_cast<double>(m.size());
}

}  // namespace

double propriety_defect(const MonogenicGrid& m, double nu) {
  const std::size_t n = m.n();
  const auto q = quaternion_signal(m);
  const double r0 = rmm0(q);
  if (r0 == 0.0) throw std::domain_error("propriety_defect: zero field");
  const auto qi = involuted(q, make_plane_basis(nu).eta_prime);
  double acc = 0.0;
  for (const Lag& xi : kProprietyLags) acc += norm_sq(quat_cross_cov(q, qi, n, xi));
  return std::sqrt(acc / static_cast<double>(kProprietyLags.size())) / r0;
}

double propriety_defect_all_lags(const MonogenicGrid& m, double nu) {
  const std::size_t n = m.n();
  const auto q = quaternion_signal(m);
  const double r0 = rmm0(q);
  if (r0 == 0.0) throw std::domain_error("propriety_defect: zero field");
  const auto r = quat_cross_cov_all(q, involuted(q, make_plane_basis(nu).eta_prime), n);
  double acc = 0.0;
  for (const auto& v : r) acc += norm_sq(v);
  return std::sqrt(acc / static_cast<double>(r.size())) / r0;
}

}  // namespace monodir
