#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "g2crystal/verification.hpp"

namespace g2crystal {

/// Basis of W(varpi_1), in matrix order.
enum class Basis : int {
  b1, b2, b3, b4, b5, b6,
  b1bar, b2bar, b3bar, b4bar, b5bar, b6bar,
  empty, zero1, zero2
};

inline constexpr std::size_t kDim = 15;
inline constexpr std::size_t kRank = 3;

inline constexpr std::array<Basis, kDim> kBasis = {
    Basis::b1,    Basis::b2,    Basis::b3,    Basis::b4,    Basis::b5,    Basis::b6,    Basis::b1bar, Basis::b2bar,
    Basis::b3bar, Basis::b4bar, Basis::b5bar, Basis::b6bar, Basis::empty, Basis::zero1, Basis::zero2};

constexpr std::size_t index_of(Basis b) noexcept { return static_cast<std::size_t>(b); }

inline std::string_view label(Basis b) {
  static constexpr std::array<std::string_view, kDim> names = {
      "1", "2", "3", "4", "5", "6", "1bar", "2bar", "3bar", "4bar", "5bar", "6bar", "empty", "0_1", "0_2"};
  return names[index_of(b)];
}

inline std::optional<Basis> basis_from_label(std::string_view s) {
  for (Basis b : kBasis) {
    if (label(b) == s) return b;
  }
  return std::nullopt;
}

using CartanMatrix = std::array<std::array<int, kRank>, kRank>;

inline constexpr CartanMatrix kCartan = {{{2, -1, 0}, {-1, 2, -1}, {0, -3, 2}}};

/// Classical weight lambda[0] Lambda_0 + lambda[1] Lambda_1 + lambda[2] Lambda_2.
struct Weight {
  std::array<int, kRank> lambda{};

  friend Weight operator+(Weight a, const Weight& b) {
    for (std::size_t i = 0; i < kRank; ++i) a.lambda[i] += b.lambda[i];
    return a;
  }
  friend Weight operator-(Weight a, const Weight& b) {
    for (std::size_t i = 0; i < kRank; ++i) a.lambda[i] -= b.lambda[i];
    return a;
  }
  Weight operator-() const { return Weight{} - *this; }
  friend bool operator==(const Weight&, const Weight&) = default;

  std::string str() const {
    return "(" + std::to_string(lambda[0]) + "," + std::to_string(lambda[1]) + "," + std::to_string(lambda[2]) + ")";
  }
};

inline Weight weight_of(Basis b) {
  static constexpr std::array<std::array<int, kRank>, 6> base = {
      {{-2, 1, 0}, {-1, -1, 3}, {-1, 0, 1}, {-1, 1, -1}, {0, -1, 2}, {-1, 2, -3}}};
  const std::size_t k = index_of(b);
  if (k < 6) return Weight{base[k]};
  if (k < 12) return -Weight{base[k - 6]};
  return Weight{};
}

/// <alpha_i^vee, w>.
inline int coroot_pairing(std::size_t i, const Weight& w) { return w.lambda.at(i); }

/// Image of alpha_i in the classical weight lattice.
inline Weight simple_root_cl(std::size_t i) {
  Weight w;
  for (std::size_t j = 0; j < kRank; ++j) w.lambda[j] = kCartan[j].at(i);
  return w;
}

enum class Generator { e, f };

struct Action {
  Basis target;
  int coef;
  friend bool operator==(const Action&, const Action&) = default;
};

namespace detail {

struct ActionEntry {
  Basis source;
  Basis target;
  int coef;
};

using B = Basis;

inline constexpr ActionEntry kF0[] = {{B::zero2, B::b1, 1}, {B::b6bar, B::b2, 1}, {B::b4bar, B::b3, 1},
                                      {B::b3bar, B::b4, 1}, {B::b2bar, B::b6, 1}, {B::b1bar, B::empty, 1},
                                      {B::empty, B::b1, 2}};
inline constexpr ActionEntry kE0[] = {{B::b1, B::empty, 1},   {B::b2, B::b6bar, 1}, {B::b3, B::b4bar, 1},
                                      {B::b4, B::b3bar, 1},   {B::b6, B::b2bar, 1}, {B::zero2, B::b1bar, 1},
                                      {B::empty, B::b1bar, 2}};
inline constexpr ActionEntry kF1[] = {{B::b1, B::b2, 1},      {B::b4, B::b5, 1},      {B::b6, B::zero2, 1},
                                      {B::zero1, B::b6bar, 3}, {B::zero2, B::b6bar, 2}, {B::b5bar, B::b4bar, 1},
                                      {B::b2bar, B::b1bar, 1}, {B::empty, B::b6bar, 1}};
inline constexpr ActionEntry kE1[] = {{B::b2, B::b1, 1},     {B::b5, B::b4, 1},       {B::zero1, B::b6, 3},
                                      {B::zero2, B::b6, 2},  {B::b6bar, B::zero2, 1}, {B::b4bar, B::b5bar, 1},
                                      {B::b1bar, B::b2bar, 1}, {B::empty, B::b6, 1}};
inline constexpr ActionEntry kF2[] = {{B::b2, B::b3, 1},       {B::b3, B::b4, 2},      {B::b4, B::b6, 3},
                                      {B::b5, B::zero1, 1},    {B::zero1, B::b5bar, 2}, {B::zero2, B::b5bar, 1},
                                      {B::b6bar, B::b4bar, 1}, {B::b4bar, B::b3bar, 2}, {B::b3bar, B::b2bar, 3}};
inline constexpr ActionEntry kE2[] = {{B::b3, B::b2, 3},     {B::b4, B::b3, 2},       {B::b6, B::b4, 1},
                                      {B::zero1, B::b5, 2},  {B::zero2, B::b5, 1},    {B::b5bar, B::zero1, 1},
                                      {B::b4bar, B::b6bar, 3}, {B::b3bar, B::b4bar, 2}, {B::b2bar, B::b3bar, 1}};

inline std::span<const ActionEntry> table(Generator g, std::size_t i) {
  switch (i) {
    case 0: return g == Generator::e ? std::span<const ActionEntry>(kE0) : std::span<const ActionEntry>(kF0);
    case 1: return g == Generator::e ? std::span<const ActionEntry>(kE1) : std::span<const ActionEntry>(kF1);
    case 2: return g == Generator::e ? std::span<const ActionEntry>(kE2) : std::span<const ActionEntry>(kF2);
    default: throw std::out_of_range("Chevalley generator index must be 0, 1 or 2");
  }
}

}  // namespace detail

/// g_i(b) as a list of (target, coefficient); empty means zero.
inline std::vector<Action> apply_chevalley(Generator g, std::size_t i, Basis b) {
  std::vector<Action> out;
  for (const auto& entry : detail::table(g, i)) {
    if (entry.source == b) out.push_back({entry.target, entry.coef});
  }
  return out;
}

/// Integer 15x15 matrix, m[r][c] = coefficient of basis r in the image of basis c.
using IntMatrix = std::array<std::array<long, kDim>, kDim>;

inline IntMatrix zero_matrix() { return IntMatrix{}; }

inline IntMatrix identity_matrix() {
  IntMatrix m{};
  for (std::size_t i = 0; i < kDim; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix chevalley_matrix(Generator g, std::size_t i) {
  IntMatrix m{};
  for (const auto& entry : detail::table(g, i)) m[index_of(entry.target)][index_of(entry.source)] += entry.coef;
  return m;
}

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m{};
  for (std::size_t r = 0; r < kDim; ++r) {
    for (std::size_t k = 0; k < kDim; ++k) {
      if (a[r][k] == 0) continue;
      for (std::size_t c = 0; c < kDim; ++c) m[r][c] += a[r][k] * b[k][c];
    }
  }
  return m;
}

inline IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m{};
  for (std::size_t r = 0; r < kDim; ++r) {
    for (std::size_t c = 0; c < kDim; ++c) m[r][c] = a[r][c] - b[r][c];
  }
  return m;
}

inline IntMatrix matrix_power(const IntMatrix& a, unsigned e) {
  IntMatrix m = identity_matrix();
  for (unsigned k = 0; k < e; ++k) m = m * a;
  return m;
}

inline bool is_zero(const IntMatrix& m) {
  for (const auto& row : m) {
    for (long v : row) {
      if (v != 0) return false;
    }
  }
  return true;
}

inline Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) rows.push_back(Json(row));
  return rows;
}

inline std::string generator_name(Generator g, std::size_t i) {
  return std::string(g == Generator::e ? "e" : "f") + std::to_string(i);
}

/// {"basis":[...], "e0":[[...]], ..., "f2":[[...]]}
inline Json dump_module() {
  Json j;
  Json basis = Json::array();
  for (Basis b : kBasis) basis.push_back(std::string(label(b)));
  j["basis"] = std::move(basis);
  for (Generator g : {Generator::e, Generator::f}) {
    for (std::size_t i = 0; i < kRank; ++i) j[generator_name(g, i)] = matrix_json(chevalley_matrix(g, i));
  }
  return j;
}

/// Nilpotency, commutators and weight shifts of the Chevalley tables.
inline VerificationReport verify_representation() {
  VerificationReport report("module", Mode::symbolic, 0, 0);
  std::size_t checks = 0;
  auto fail = [&](std::string what, std::string lhs, std::string rhs) {
    report.fail({Json(std::move(what)), std::move(lhs), std::move(rhs)});
  };

  for (std::size_t i = 0; i < kRank; ++i) {
    const unsigned order = i == 2 ? 4 : 3;
    for (Generator g : {Generator::e, Generator::f}) {
      const IntMatrix m = chevalley_matrix(g, i);
      ++checks;
      if (!is_zero(matrix_power(m, order))) {
        fail(generator_name(g, i) + "^" + std::to_string(order), "nonzero", "0");
      }
      // Nilpotency order is sharp.
      ++checks;
      if (is_zero(matrix_power(m, order - 1))) {
        fail(generator_name(g, i) + "^" + std::to_string(order - 1), "0", "nonzero");
      }
    }
  }

  for (std::size_t i = 0; i < kRank; ++i) {
    for (std::size_t j = 0; j < kRank; ++j) {
      const IntMatrix comm = chevalley_matrix(Generator::e, i) * chevalley_matrix(Generator::f, j) -
                             chevalley_matrix(Generator::f, j) * chevalley_matrix(Generator::e, i);
      for (Basis b : kBasis) {
        const std::size_t c = index_of(b);
        const long diag = i == j ? coroot_pairing(i, weight_of(b)) : 0;
        for (std::size_t r = 0; r < kDim; ++r) {
          ++checks;
          const long expected = r == c ? diag : 0;
          if (comm[r][c] != expected) {
            fail("[e" + std::to_string(i) + ",f" + std::to_string(j) + "](" + std::string(label(b)) + ") at " +
                     std::string(label(kBasis[r])),
                 std::to_string(comm[r][c]), std::to_string(expected));
          }
        }
      }
    }
  }

  for (std::size_t i = 0; i < kRank; ++i) {
    for (Generator g : {Generator::e, Generator::f}) {
      for (Basis b : kBasis) {
        const Weight expected =
            g == Generator::e ? weight_of(b) + simple_root_cl(i) : weight_of(b) - simple_root_cl(i);
        for (const auto& a : apply_chevalley(g, i, b)) {
          ++checks;
          if (weight_of(a.target) != expected) {
            fail("wt(" + generator_name(g, i) + "(" + std::string(label(b)) + "))", weight_of(a.target).str(),
                 expected.str());
          }
          ++checks;
          if (a.coef < 1 || a.coef > 3) {
            fail(generator_name(g, i) + "(" + std::string(label(b)) + ") coefficient", std::to_string(a.coef),
                 "1..3");
          }
        }
      }
    }
  }
  report.details()["checks"] = checks;
  return report;
}

}  // namespace g2crystal
