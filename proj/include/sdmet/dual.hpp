#ifndef SDMET_DUAL_HPP
#define SDMET_DUAL_HPP

#include <array>
#include <cmath>

namespace sdmet {

/// Forward-mode dual number carrying value, gradient and Hessian over N
/// independent variables. Arithmetic propagates first and second derivatives
/// exactly (no truncation error), so derived quantities are accurate to
/// rounding. The Hessian is stored as a packed upper triangle.
template <int N>
struct Dual2 {
  static constexpr int n_vars = N;
  static constexpr int n_hess = N * (N + 1) / 2;

  double val = 0.0;
  std::array<double, N> d{};
  std::array<double, n_hess> h{};

  Dual2() = default;
  Dual2(double c) : val(c) {}  // constants promote implicitly

  /// Packed index of Hessian entry (i,j).
  static constexpr int hidx(int i, int j) {
    if (i > j) {
      const int t = i;
      i = j;
      j = t;
    }
    return i * N - i * (i - 1) / 2 + (j - i);
  }

  /// Seed the i-th independent variable at value x.
  static Dual2 variable(double x, int i) {
    Dual2 v(x);
    v.d[i] = 1.0;
    return v;
  }

  double grad(int i) const { return d[i]; }
  double hess(int i, int j) const { return h[hidx(i, j)]; }
};

inline double value_of(double x) { return x; }
template <int N>
double value_of(const Dual2<N>& x) {
  return x.val;
}

template <int N>
Dual2<N> operator+(const Dual2<N>& a, const Dual2<N>& b) {
  Dual2<N> r(a.val + b.val);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] + b.d[i];
  for (int k = 0; k < Dual2<N>::n_hess; ++k) r.h[k] = a.h[k] + b.h[k];
  return r;
}

template <int N>
Dual2<N> operator-(const Dual2<N>& a, const Dual2<N>& b) {
  Dual2<N> r(a.val - b.val);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] - b.d[i];
  for (int k = 0; k < Dual2<N>::n_hess; ++k) r.h[k] = a.h[k] - b.h[k];
  return r;
}

template <int N>
Dual2<N> operator-(const Dual2<N>& a) {
  Dual2<N> r(-a.val);
  for (int i = 0; i < N; ++i) r.d[i] = -a.d[i];
  for (int k = 0; k < Dual2<N>::n_hess; ++k) r.h[k] = -a.h[k];
  return r;
}

template <int N>
Dual2<N> operator*(const Dual2<N>& a, const Dual2<N>& b) {
  Dual2<N> r(a.val * b.val);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b.val + a.val * b.d[i];
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      const int k = Dual2<N>::hidx(i, j);
      r.h[k] = a.h[k] * b.val + a.d[i] * b.d[j] + a.d[j] * b.d[i] + a.val * b.h[k];
    }
  return r;
}

/// Apply a scalar function given its value and first two derivatives at f.val.
template <int N>
Dual2<N> chain(const Dual2<N>& f, double p0, double p1, double p2) {
  Dual2<N> r(p0);
  for (int i = 0; i < N; ++i) r.d[i] = p1 * f.d[i];
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      const int k = Dual2<N>::hidx(i, j);
      r.h[k] = p2 * f.d[i] * f.d[j] + p1 * f.h[k];
    }
  return r;
}

template <int N>
Dual2<N> inverse(const Dual2<N>& a) {
  const double v = a.val;
  return chain(a, 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

template <int N>
Dual2<N> operator/(const Dual2<N>& a, const Dual2<N>& b) {
  return a * inverse(b);
}

template <int N>
Dual2<N> operator+(const Dual2<N>& a, double c) {
  Dual2<N> r = a;
  r.val += c;
  return r;
}
template <int N>
Dual2<N> operator+(double c, const Dual2<N>& a) {
  return a + c;
}
template <int N>
Dual2<N> operator-(const Dual2<N>& a, double c) {
  return a + (-c);
}
template <int N>
Dual2<N> operator-(double c, const Dual2<N>& a) {
  return (-a) + c;
}

template <int N>
Dual2<N> operator*(const Dual2<N>& a, double c) {
  Dual2<N> r(a.val * c);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * c;
  for (int k = 0; k < Dual2<N>::n_hess; ++k) r.h[k] = a.h[k] * c;
  return r;
}
template <int N>
Dual2<N> operator*(double c, const Dual2<N>& a) {
  return a * c;
}
template <int N>
Dual2<N> operator/(const Dual2<N>& a, double c) {
  return a * (1.0 / c);
}
template <int N>
Dual2<N> operator/(double c, const Dual2<N>& a) {
  return inverse(a) * c;
}

template <int N>
Dual2<N> sqrt(const Dual2<N>& a) {
  const double s = std::sqrt(a.val);
  return chain(a, s, 0.5 / s, -0.25 / (s * a.val));
}

template <int N>
Dual2<N> exp(const Dual2<N>& a) {
  const double e = std::exp(a.val);
  return chain(a, e, e, e);
}

template <int N>
Dual2<N> log(const Dual2<N>& a) {
  const double v = a.val;
  return chain(a, std::log(v), 1.0 / v, -1.0 / (v * v));
}

template <int N>
Dual2<N> sin(const Dual2<N>& a) {
  const double s = std::sin(a.val), c = std::cos(a.val);
  return chain(a, s, c, -s);
}

template <int N>
Dual2<N> cos(const Dual2<N>& a) {
  const double s = std::sin(a.val), c = std::cos(a.val);
  return chain(a, c, -s, -c);
}

template <int N>
Dual2<N> sqr(const Dual2<N>& a) {
  return a * a;
}
inline double sqr(double a) { return a * a; }

using std::cos;
using std::exp;
using std::log;
using std::sin;
using std::sqrt;

}  // namespace sdmet

#endif  // SDMET_DUAL_HPP
