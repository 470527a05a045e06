#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2crystal/chart.hpp"

namespace g2crystal {

namespace detail {

inline void require_occurs(const ReducedWord& word, std::size_t i) {
  if (i >= kRank) throw std::out_of_range("schubert: index must be 0, 1 or 2");
  for (std::size_t m : word) {
    if (m == i) return;
  }
  throw DomainError("schubert: index " + std::to_string(i) + " does not occur in the word");
}

// w_m = 1 / (prod_{l<m} c_l^{a_{i_l,i}} * c_m) at positions m with i_m = i.
template <class T>
std::vector<std::optional<T>> schubert_weights(const ReducedWord& word, std::size_t i, const std::array<T, 6>& c) {
  std::vector<std::optional<T>> w(word.size());
  for (std::size_t m = 0; m < word.size(); ++m) {
    if (word[m] != i) continue;
    T d = c[m];
    for (std::size_t l = 0; l < m; ++l) {
      const int e = kCartan[word[l]][i];
      if (e != 0) d = d * pow(c[l], e);
    }
    w[m] = 1 / d;
  }
  return w;
}

}  // namespace detail

/// e_i^c on positional coordinates c_1..c_6 of the word.
template <class T>
std::array<T, 6> schubert_action(const ReducedWord& word, std::size_t i, const T& c, const std::array<T, 6>& coords) {
  detail::require_occurs(word, i);
  const auto w = detail::schubert_weights(word, i, coords);
  std::array<T, 6> out = coords;
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (word[j] != i) continue;
    std::optional<T> num, den;
    auto add = [](std::optional<T>& acc, const T& v) { acc = acc ? *acc + v : v; };
    for (std::size_t m = 0; m < word.size(); ++m) {
      if (!w[m]) continue;
      add(num, m <= j ? c * *w[m] : *w[m]);
      add(den, m < j ? c * *w[m] : *w[m]);
    }
    out[j] = coords[j] * *num / *den;
  }
  return out;
}

template <class T>
T schubert_eps(const ReducedWord& word, std::size_t i, const std::array<T, 6>& coords) {
  detail::require_occurs(word, i);
  const auto w = detail::schubert_weights(word, i, coords);
  std::optional<T> sum;
  for (const auto& v : w) {
    if (v) sum = sum ? *sum + *v : *v;
  }
  return *sum;
}

template <class T>
T schubert_gamma(const ReducedWord& word, std::size_t i, const std::array<T, 6>& coords) {
  if (i >= kRank) throw std::out_of_range("schubert: index must be 0, 1 or 2");
  std::optional<T> g;
  for (std::size_t l = 0; l < word.size(); ++l) {
    const int e = kCartan[word[l]][i];
    if (e == 0) continue;
    const T f = pow(coords[l], e);
    g = g ? *g * f : f;
  }
  if (!g) return coords[0] / coords[0];
  return *g;
}

// Chart-level wrappers on natural-order coordinates.

template <class T>
std::array<T, 6> schubert_action(const CrystalChart& chart, std::size_t i, const T& c, const std::array<T, 6>& natural) {
  return from_positions(chart, schubert_action(chart.word, i, c, to_positions(chart, natural)));
}

template <class T>
T schubert_eps(const CrystalChart& chart, std::size_t i, const std::array<T, 6>& natural) {
  return schubert_eps(chart.word, i, to_positions(chart, natural));
}

template <class T>
T schubert_gamma(const CrystalChart& chart, std::size_t i, const std::array<T, 6>& natural) {
  return schubert_gamma(chart.word, i, to_positions(chart, natural));
}

}  // namespace g2crystal
