#pragma once

// Closed-form coordinates of the G2^(1) geometric crystal on W(varpi_1),
// written term by term so that every body stays subtraction-free.
// Each template works over any field type T with +, *, / and pow(T, int)
// (BigRational for point evaluation, RationalFunction for symbolic work).

#include <array>
#include <stdexcept>

#include "g2crystal/module.hpp"

namespace g2crystal::formulas {

template <class T>
using Six = std::array<T, 6>;

/// Coefficient of basis b in v1(x) = Y0(x0)Y1(x1)Y2(x2)Y1(x3)Y2(x4)Y1(x5)(1).
template <class T>
T X(Basis b, const Six<T>& x) {
  const T &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4], &x5 = x[5];
  switch (b) {
    case Basis::b1:
      return 1 + x3 / x0 + x1 * pow(x3, 2) / (x0 * pow(x2, 3)) + 3 * x1 * x3 * x4 / (x0 * pow(x2, 2)) +
             3 * x1 * pow(x4, 2) / (x0 * x2) + x1 * pow(x4, 3) / (x0 * x3) + (x1 / x0 + x1 * x3 / pow(x0, 2)) * x5;
    case Basis::b2:
      return pow(x2, 3) / pow(x1, 2) + pow(x3, 2) / pow(x2, 3) + 3 * x3 * x4 / pow(x2, 2) + 3 * pow(x4, 2) / x2 +
             pow(x4, 3) / x3 + x5 + x3 * x5 / x0 +
             (x0 * x3 * (2 * x3 + 3 * x2 * x4) + pow(x2, 3) * (pow(x4, 3) + x3 * x5)) / (x0 * x1 * x3);
    case Basis::b3:
      return pow(x2, 2) / x1 + x3 / x2 + x4 + x2 * pow(x4, 2) / x0 + pow(x2, 2) * pow(x4, 3) / (x0 * x3) +
             pow(x2, 2) * x5 / x0;
    case Basis::b4:
      return x2 + x1 * x3 * x4 / (x0 * x2) + 2 * x1 * pow(x4, 2) / x0 + x1 * x2 * pow(x4, 3) / (x0 * x3) +
             x1 * x2 * x5 / x0;
    case Basis::b5:
      return (pow(x2, 2) / x1 + x3 / x2) * x4 + 2 * pow(x4, 2) + x2 * pow(x4, 3) / x3 + x2 * x5;
    case Basis::b6:
      return x1 + pow(x1, 2) * pow(x3, 2) / (x0 * pow(x2, 3)) + 3 * pow(x1, 2) * x3 * x4 / (x0 * pow(x2, 2)) +
             3 * pow(x1, 2) * pow(x4, 2) / (x0 * x2) + pow(x1, 2) * pow(x4, 3) / (x0 * x3) +
             pow(x1, 2) * x5 / x0;
    case Basis::zero1:
      return x2 * x4;
    case Basis::zero2:
      return x3 + x1 * pow(x3, 2) / pow(x2, 3) + 3 * x1 * x3 * x4 / pow(x2, 2) + 3 * x1 * pow(x4, 2) / x2 +
             x1 * pow(x4, 3) / x3 + x1 * x5;
    case Basis::b6bar:
      return x0 * (pow(x2, 3) / pow(x1, 2) + pow(x3, 2) / pow(x2, 3) + 3 * x3 * x4 / pow(x2, 2) +
                   3 * pow(x4, 2) / x2 + pow(x4, 3) / x3 + (2 * x3 + 3 * x2 * x4) / x1 + x5);
    case Basis::b5bar:
      return x1 * (x3 / x2 + x4);
    case Basis::b4bar:
      return x0 * (pow(x2, 2) / x1 + x3 / x2 + x4);
    case Basis::b3bar:
      return x0 * x2;
    case Basis::b2bar:
      return x0 * x1;
    case Basis::b1bar:
      return pow(x0, 2);
    case Basis::empty:
      return x0;
  }
  throw std::logic_error("X: unknown basis vector");
}

/// Coefficient of basis b in v2(y) = Y2(y2)Y1(y1)Y2(y4)Y1(y3)Y0(y0)Y1(y5)(2bar);
/// y is indexed y0..y5.
template <class T>
T Y(Basis b, const Six<T>& y) {
  const T &y0 = y[0], &y1 = y[1], &y2 = y[2], &y3 = y[3], &y4 = y[4], &y5 = y[5];
  switch (b) {
    case Basis::b1:
      return y1 * y3;
    case Basis::b2:
      return pow(y2, 3) * (y1 * y3 + pow(y4, 3)) / y1;
    case Basis::b3:
      return pow(y2, 2) * y3 + y2 * pow(y4, 2) + pow(y2, 2) * pow(y4, 3) / y1;
    case Basis::b4:
      return y2 * y3 + y1 * y4 / y2 + 2 * pow(y4, 2) + y2 * pow(y4, 3) / y1;
    case Basis::b5:
      return pow(y2, 2) * y4;
    case Basis::b6:
      return y3 + 3 * y1 * y4 / pow(y2, 2) + 3 * pow(y4, 2) / y2 + pow(y4, 3) / y1 +
             pow(y1, 2) * (pow(y4, 3) + pow(y3, 2) * y5) / (pow(y2, 3) * pow(y4, 3));
    case Basis::zero1:
      return y2 * y4;
    case Basis::zero2:
      return y1 + (y3 + y1 * pow(y3, 2) / pow(y4, 3)) * y5;
    case Basis::b6bar:
      return pow(y2, 3) + y0 * (pow(y2, 3) / y1 + pow(y2, 3) * pow(y4, 3) / (pow(y1, 2) * y3)) +
             (2 * pow(y2, 3) * y3 / y1 + pow(y2, 3) * pow(y3, 2) / pow(y4, 3) + pow(y2, 3) * pow(y4, 3) / pow(y1, 2)) *
                 y5;
    case Basis::b5bar:
      return y1 / y2 + y4 +
             (y3 * (1 / y2 + y1 / (pow(y2, 2) * y4)) + y1 * pow(y3, 2) / (y2 * pow(y4, 3))) * y5;
    case Basis::b4bar:
      return pow(y2, 2) +
             y0 * (pow(y2, 2) / y1 + y2 * pow(y4, 2) / (y1 * y3) + pow(y2, 2) * pow(y4, 3) / (pow(y1, 2) * y3)) +
             (y3 * (2 * pow(y2, 2) / y1 + y2 / y4) + pow(y2, 2) * pow(y3, 2) / pow(y4, 3) +
              y2 * pow(y4, 2) / y1 + pow(y2, 2) * pow(y4, 3) / pow(y1, 2)) *
                 y5;
    case Basis::b3bar:
      return y2 +
             y0 * (y2 / y1 + y4 / (y2 * y3) + 2 * pow(y4, 2) / (y1 * y3) + y2 * pow(y4, 3) / (pow(y1, 2) * y3)) +
             (y3 * (2 * y2 / y1 + 2 / y4) + y2 * pow(y3, 2) / pow(y4, 3) + y4 / y2 + 2 * pow(y4, 2) / y1 +
              y2 * pow(y4, 3) / pow(y1, 2)) *
                 y5;
    case Basis::b2bar:
      return 1 +
             y0 * (1 / y1 + y1 / (pow(y2, 3) * y3) + 3 * y4 / (pow(y2, 2) * y3) + 3 * pow(y4, 2) / (y1 * y2 * y3) +
                   pow(y4, 3) / (pow(y1, 2) * y3)) +
             (y1 / pow(y2, 3) + y3 * (2 / y1 + 3 / (y2 * y4)) + y0 * y1 * y3 / (pow(y2, 3) * pow(y4, 3)) +
              pow(y3, 2) / pow(y4, 3) + 3 * y4 / pow(y2, 2) + 3 * pow(y4, 2) / (y1 * y2) + pow(y4, 3) / pow(y1, 2)) *
                 y5;
    case Basis::b1bar:
      return pow(y0, 2) / (y1 * y3) + y5 + y0 * (1 / y3 + y5 / y1 + y3 * y5 / pow(y4, 3));
    case Basis::empty:
      return y0;
  }
  throw std::logic_error("Y: unknown basis vector");
}

template <class T>
T M(const Six<T>& x) {
  const T &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4], &x5 = x[5];
  return x3 * pow(x4, 2) / (x0 * x2) + 3 * pow(x4, 3) / x0 + x3 * x5 / (x2 * x4) +
         x2 * (3 * pow(x4, 4) / (x0 * x3) + 3 * x4 * x5 / x0) +
         pow(x2, 2) * (pow(x4, 2) / (x0 * x1) + pow(x4, 2) / (x1 * x3) + pow(x4, 5) / (x0 * pow(x3, 2)) +
                       x5 / (x1 * x4) + 2 * pow(x4, 2) * x5 / (x0 * x3) + pow(x5, 2) / (x0 * x4));
}

template <class T>
T N(const Six<T>& x) {
  const T &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4], &x5 = x[5];
  return 3 * x1 * x3 / pow(x2, 3) + x2 * x3 / (x1 * pow(x4, 2)) + 2 * pow(x3, 2) / (pow(x2, 2) * pow(x4, 2)) +
         x1 * pow(x3, 3) / (pow(x2, 5) * pow(x4, 2)) + 3 * x3 / (x2 * x4) + 3 * x1 * pow(x3, 2) / (pow(x2, 4) * x4) +
         x1 * x4 / pow(x2, 2) + x2 * x4 / x0 + x1 * x3 * x5 / (pow(x2, 2) * pow(x4, 2)) +
         x2 * x3 * x5 / (x0 * pow(x4, 2)) + x1 * pow(x3, 2) * x5 / (x0 * pow(x2, 2) * pow(x4, 2));
}

template <class T>
T a(const Six<T>& x) {
  return M(x) / pow(x[2] * x[4], 2);
}

template <class T>
T P(const Six<T>& y) {
  const T &y0 = y[0], &y1 = y[1], &y2 = y[2], &y3 = y[3], &y4 = y[4], &y5 = y[5];
  return y0 + y1 + y0 * y1 * y5 / pow(y2, 3) + 2 * y3 * y5 + 2 * y0 * y3 * y5 / y1 + y0 * pow(y3, 2) * y5 / pow(y4, 3) +
         2 * y1 * pow(y3, 2) * y5 / pow(y4, 3) + 3 * y0 * y3 * y5 / (y2 * y4) + 3 * y1 * y3 * y5 / (y2 * y4) +
         3 * y0 * y4 * y5 / pow(y2, 2) + 3 * y0 * pow(y4, 2) * y5 / (y1 * y2) + y0 * pow(y4, 3) * y5 / pow(y1, 2) +
         y1 * y3 * pow(y5, 2) / pow(y2, 3) + 3 * pow(y3, 2) * pow(y5, 2) / y1 +
         y1 * pow(y3, 4) * pow(y5, 2) / pow(y4, 6) + 3 * y1 * pow(y3, 3) * pow(y5, 2) / (y2 * pow(y4, 4)) +
         3 * pow(y3, 3) * pow(y5, 2) / pow(y4, 3) + 3 * y1 * pow(y3, 2) * pow(y5, 2) / (pow(y2, 2) * pow(y4, 2)) +
         6 * pow(y3, 2) * pow(y5, 2) / (y2 * y4) + 3 * y3 * y4 * pow(y5, 2) / pow(y2, 2) +
         3 * y3 * pow(y4, 2) * pow(y5, 2) / (y1 * y2) + y3 * pow(y4, 3) * pow(y5, 2) / pow(y1, 2);
}

/// The first five coordinates of the x -> y map; they do not involve y5.
template <class T>
struct SigmaHead {
  T a, M, N;
  T y0, y1, y2, y3, y4;
};

template <class T>
SigmaHead<T> sigma_head(const Six<T>& x) {
  const T &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4], &x5 = x[5];
  const T m = M(x);
  const T n = N(x);
  const T av = m / pow(x2 * x4, 2);
  const T X1 = X(Basis::b1, x);
  const T X2 = X(Basis::b2, x);
  const T y2 = x2 / x1 + x3 / pow(x2, 2) + 2 * x4 / x2 + pow(x4, 2) / x3 + x5 / x4;
  const T y4 = m / (y2 * x2 * x4);
  const T y0 = av * x0;
  const T y1 = pow(y2, 3) * (av * X1 + pow(y4, 3)) / (av * X2);
  const T y3 = av * X1 / y1;
  return {av, m, n, y0, y1, y2, y3, y4};
}

/// y5 exactly as printed for the x -> y map.
template <class T>
T y5_printed(const Six<T>& x, const SigmaHead<T>& h) {
  const T &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4], &x5 = x[5];
  return (x5 * h.M * h.N / (x1 * x2 * x3 * x4)) /
         (h.a * X(Basis::b2, x) * (h.y3 + h.y1 * pow(h.y3, 2) / pow(h.y4, 3)));
}

/// Subtraction-free y5 solving the 0_2 component of v2(y) = a(x) v1(x):
/// the printed value times N.
template <class T>
T y5_corrected(const Six<T>& x, const SigmaHead<T>& h) {
  const T &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4], &x5 = x[5];
  return x5 * h.M * pow(h.N, 2) /
         (x1 * x2 * x3 * x4 * h.a * X(Basis::b2, x) * (h.y3 + h.y1 * pow(h.y3, 2) / pow(h.y4, 3)));
}

/// y5 from the linear 0_2 component equation y1 + (y3 + y1 y3^2/y4^3) y5 = a X_{0_2}.
template <class T>
T y5_solved(const Six<T>& x, const SigmaHead<T>& h) {
  return (h.a * X(Basis::zero2, x) - h.y1) / (h.y3 + h.y1 * pow(h.y3, 2) / pow(h.y4, 3));
}

template <class T>
Six<T> assemble_y(const SigmaHead<T>& h, T y5) {
  return {h.y0, h.y1, h.y2, h.y3, h.y4, std::move(y5)};
}

/// Printed inverse map y -> x.
template <class T>
Six<T> sigma_inv(const Six<T>& y) {
  const T &y0 = y[0], &y1 = y[1], &y2 = y[2], &y3 = y[3], &y4 = y[4], &y5 = y[5];
  const T Y1b = Y(Basis::b1bar, y);
  const T Y2b = Y(Basis::b2bar, y);
  const T Y3b = Y(Basis::b3bar, y);
  T x0 = Y1b / y0;
  T x1 = Y2b / y0;
  T x2 = Y3b / y0;
  T x4 = y2 * y4 * Y1b / (y0 * Y3b);
  T x3 = P(y) * Y1b / (pow(y0, 2) * Y2b);
  T x5 = y5 * Y1b *
         (1 + y1 / y0 + y3 * y5 / y0 + y1 * y3 * y5 / pow(y0, 2) + y1 * pow(y3, 2) * y5 / (y0 * pow(y4, 3))) /
         (pow(y0, 2) * x1 * x3);
  return {std::move(x0), std::move(x1), std::move(x2), std::move(x3), std::move(x4), std::move(x5)};
}

// e1 / e2 multipliers on the x chart.

template <class T>
T eps1(const Six<T>& x) {
  const T &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4], &x5 = x[5];
  return x0 / x1 + x0 * pow(x2, 3) / (pow(x1, 2) * x3) + x0 * pow(x2, 3) * pow(x4, 3) / (pow(x1, 2) * pow(x3, 2) * x5);
}

template <class T>
T eps2(const Six<T>& x) {
  const T &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4];
  return x1 / x2 + x1 * x3 / (pow(x2, 2) * x4);
}

template <class T>
T C1(const T& c, const Six<T>& x) {
  const T &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4], &x5 = x[5];
  return (c * x0 / x1 + x0 * pow(x2, 3) / (pow(x1, 2) * x3) +
          x0 * pow(x2, 3) * pow(x4, 3) / (pow(x1, 2) * pow(x3, 2) * x5)) /
         (x0 / x1 + x0 * pow(x2, 3) / (pow(x1, 2) * x3) +
          x0 * pow(x2, 3) * pow(x4, 3) / (pow(x1, 2) * pow(x3, 2) * x5));
}

template <class T>
T C3(const T& c, const Six<T>& x) {
  const T &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4], &x5 = x[5];
  return (c * x0 / x1 + c * x0 * pow(x2, 3) / (pow(x1, 2) * x3) +
          x0 * pow(x2, 3) * pow(x4, 3) / (pow(x1, 2) * pow(x3, 2) * x5)) /
         (c * x0 / x1 + x0 * pow(x2, 3) / (pow(x1, 2) * x3) +
          x0 * pow(x2, 3) * pow(x4, 3) / (pow(x1, 2) * pow(x3, 2) * x5));
}

template <class T>
T C5(const T& c, const Six<T>& x) {
  const T &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4], &x5 = x[5];
  return c *
         (x0 / x1 + x0 * pow(x2, 3) / (pow(x1, 2) * x3) +
          x0 * pow(x2, 3) * pow(x4, 3) / (pow(x1, 2) * pow(x3, 2) * x5)) /
         (c * x0 / x1 + c * x0 * pow(x2, 3) / (pow(x1, 2) * x3) +
          x0 * pow(x2, 3) * pow(x4, 3) / (pow(x1, 2) * pow(x3, 2) * x5));
}

template <class T>
T C2(const T& c, const Six<T>& x) {
  const T &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4];
  return (c * x1 / x2 + x1 * x3 / (pow(x2, 2) * x4)) / (x1 / x2 + x1 * x3 / (pow(x2, 2) * x4));
}

template <class T>
T C4(const T& c, const Six<T>& x) {
  const T &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4];
  return c * (x1 / x2 + x1 * x3 / (pow(x2, 2) * x4)) / (c * x1 / x2 + x1 * x3 / (pow(x2, 2) * x4));
}

// e0 building blocks.

template <class T>
T D(const T& c, const Six<T>& x) {
  const T &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4], &x5 = x[5];
  return pow(c, 2) * pow(x0, 2) * pow(x2, 3) * x3 + x1 * pow(x2, 3) * pow(x3, 2) * x5 +
         c * x0 *
             (x1 * pow(x3, 3) + 3 * x1 * x2 * pow(x3, 2) * x4 + 3 * x1 * pow(x2, 2) * x3 * pow(x4, 2) +
              pow(x2, 3) * (pow(x3, 2) + x1 * pow(x4, 3) + x1 * x3 * x5));
}

template <class T>
T E(const Six<T>& x) {
  const T &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4], &x5 = x[5];
  return pow(x0, 2) * pow(x2, 3) * x3 + x1 * pow(x2, 3) * pow(x3, 2) * x5 +
         x0 * (x1 * pow(x3, 3) + 3 * x1 * x2 * pow(x3, 2) * x4 + 3 * x1 * pow(x2, 2) * x3 * pow(x4, 2) +
               pow(x2, 3) * (pow(x3, 2) + x1 * pow(x4, 3) + x1 * x3 * x5));
}

template <class T>
T F(const T& c, const Six<T>& x) {
  const T &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4], &x5 = x[5];
  return c * pow(x0, 2) * pow(x2, 3) * x3 + x1 * pow(x2, 3) * pow(x3, 2) * x5 +
         x0 * (c * x1 * pow(x3, 3) + 3 * c * x1 * x2 * pow(x3, 2) * x4 + 3 * c * x1 * pow(x2, 2) * x3 * pow(x4, 2) +
               pow(x2, 3) * (pow(x3, 2) + c * x1 * pow(x4, 3) + c * x1 * x3 * x5));
}

template <class T>
T G(const T& c, const Six<T>& x) {
  const T &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4], &x5 = x[5];
  return c * pow(x0, 2) * pow(x2, 3) * x3 + x1 * pow(x2, 3) * pow(x3, 2) * x5 +
         x0 * (x1 * pow(x3, 3) + (2 + c) * x1 * x2 * pow(x3, 2) * x4 +
               (1 + 2 * c) * x1 * pow(x2, 2) * x3 * pow(x4, 2) +
               pow(x2, 3) * (pow(x3, 2) + c * x1 * pow(x4, 3) + c * x1 * x3 * x5));
}

template <class T>
T H(const T& c, const Six<T>& x) {
  const T &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4], &x5 = x[5];
  return c * pow(x0, 2) * pow(x2, 3) * x3 + x1 * pow(x2, 3) * pow(x3, 2) * x5 +
         x0 * (x1 * pow(x3, 3) + 3 * x1 * x2 * pow(x3, 2) * x4 + 3 * x1 * pow(x2, 2) * x3 * pow(x4, 2) +
               pow(x2, 3) * (pow(x3, 2) + x1 * pow(x4, 3) + c * x1 * x3 * x5));
}

template <class T>
T eps0(const Six<T>& x) {
  return E(x) / (pow(x[0], 3) * pow(x[2], 3) * x[3]);
}

template <class T>
T gamma0(const Six<T>& x) {
  return pow(x[0], 2) / (x[1] * x[3] * x[5]);
}

template <class T>
T gamma1(const Six<T>& x) {
  return pow(x[1], 2) * pow(x[3], 2) * pow(x[5], 2) / (x[0] * pow(x[2], 3) * pow(x[4], 3));
}

template <class T>
T gamma2(const Six<T>& x) {
  return pow(x[2], 2) * pow(x[4], 2) / (x[1] * x[3] * x[5]);
}

template <class T>
T eps(std::size_t i, const Six<T>& x) {
  switch (i) {
    case 0: return eps0(x);
    case 1: return eps1(x);
    case 2: return eps2(x);
    default: throw std::out_of_range("eps: index must be 0, 1 or 2");
  }
}

template <class T>
T gamma(std::size_t i, const Six<T>& x) {
  switch (i) {
    case 0: return gamma0(x);
    case 1: return gamma1(x);
    case 2: return gamma2(x);
    default: throw std::out_of_range("gamma: index must be 0, 1 or 2");
  }
}

/// e_i^c on the x chart via the closed forms.
template <class T>
Six<T> e(std::size_t i, const T& c, const Six<T>& x) {
  const T &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4], &x5 = x[5];
  switch (i) {
    case 0: {
      const T d = D(c, x), ev = E(x), f = F(c, x), g = G(c, x), h = H(c, x);
      return {d / (c * ev) * x0, f / (c * ev) * x1, g / (c * ev) * x2, d * h / (pow(c, 2) * ev * f) * x3,
              d / (c * g) * x4, d / (c * h) * x5};
    }
    case 1:
      return {x0, C1(c, x) * x1, x2, C3(c, x) * x3, x4, C5(c, x) * x5};
    case 2:
      return {x0, x1, C2(c, x) * x2, x3, C4(c, x) * x4, x5};
    default:
      throw std::out_of_range("e: index must be 0, 1 or 2");
  }
}

}  // namespace g2crystal::formulas
