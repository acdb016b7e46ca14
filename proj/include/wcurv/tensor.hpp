#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace wcurv {

inline constexpr int kDim = 4;

// A real number together with the accumulated magnitude of the terms that
// produced it. Sums add magnitudes, products multiply them, so `magnitude`
// bounds |value| and sets the scale against which cancellation to zero is
// judged: a residual is "vanishing" when |value| is small relative to it.
struct Quantity {
  double value = 0.0;
  double magnitude = 0.0;

  constexpr Quantity() = default;
  constexpr Quantity(double v) : value(v), magnitude(v < 0 ? -v : v) {}  // NOLINT
  constexpr Quantity(double v, double m) : value(v), magnitude(m) {}

  Quantity& operator+=(Quantity o) {
    value += o.value;
    magnitude += o.magnitude;
    return *this;
  }
  Quantity& operator-=(Quantity o) {
    value -= o.value;
    magnitude += o.magnitude;
    return *this;
  }
};

inline Quantity operator+(Quantity a, Quantity b) { return a += b; }
inline Quantity operator-(Quantity a, Quantity b) { return a -= b; }
inline Quantity operator-(Quantity a) { return {-a.value, a.magnitude}; }
inline Quantity operator*(Quantity a, Quantity b) {
  return {a.value * b.value, a.magnitude * b.magnitude};
}
inline Quantity operator*(double c, Quantity a) { return {c * a.value, std::abs(c) * a.magnitude}; }
inline Quantity operator*(Quantity a, double c) { return c * a; }

namespace detail {
constexpr std::size_t pow4(int rank) {
  std::size_t n = 1;
  for (int i = 0; i < rank; ++i) n *= kDim;
  return n;
}
}  // namespace detail

// Dense rank-R array over a 4-dimensional index space, row-major.
template <typename T, int Rank>
class BasicTensor {
 public:
  static constexpr int rank = Rank;
  static constexpr std::size_t size = detail::pow4(Rank);

  BasicTensor() { data_.fill(T{}); }

  template <typename... I>
  T& operator()(I... idx) {
    static_assert(sizeof...(I) == Rank);
    return data_[flat(idx...)];
  }
  template <typename... I>
  const T& operator()(I... idx) const {
    static_assert(sizeof...(I) == Rank);
    return data_[flat(idx...)];
  }

  T& at_flat(std::size_t i) { return data_[i]; }
  const T& at_flat(std::size_t i) const { return data_[i]; }

  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  // Applies f to every multi-index, passed as a std::array<int, Rank>.
  template <typename F>
  static void for_each_index(F&& f) {
    std::array<int, Rank> idx{};
    for (std::size_t n = 0; n < size; ++n) {
      std::size_t r = n;
      for (int k = Rank - 1; k >= 0; --k) {
        idx[k] = static_cast<int>(r % kDim);
        r /= kDim;
      }
      f(idx);
    }
  }

 private:
  template <typename... I>
  static std::size_t flat(I... idx) {
    std::size_t n = 0;
    ((n = n * kDim + static_cast<std::size_t>(idx)), ...);
    return n;
  }

  std::array<T, size> data_;
};

template <int Rank>
using Tensor = BasicTensor<Quantity, Rank>;
template <int Rank>
using RealTensor = BasicTensor<double, Rank>;

using Vector = Tensor<1>;
using Matrix = Tensor<2>;

template <int Rank>
double max_abs(const Tensor<Rank>& t) {
  double m = 0.0;
  for (const auto& q : t) m = std::max(m, std::abs(q.value));
  return m;
}

template <int Rank>
double max_abs(const RealTensor<Rank>& t) {
  double m = 0.0;
  for (double q : t) m = std::max(m, std::abs(q));
  return m;
}

template <int Rank>
double max_magnitude(const Tensor<Rank>& t) {
  double m = 0.0;
  for (const auto& q : t) m = std::max(m, q.magnitude);
  return m;
}

inline constexpr double kScaleFloor = 1e-30;

// max |value| / max magnitude, with an absolute floor on the denominator.
// Exactly zero when every component is exactly zero.
template <int Rank>
double relative_residual(const Tensor<Rank>& t) {
  return max_abs(t) / std::max(max_magnitude(t), kScaleFloor);
}

inline double relative_residual(Quantity q) {
  return std::abs(q.value) / std::max(q.magnitude, kScaleFloor);
}

template <int Rank>
Tensor<Rank> to_quantities(const RealTensor<Rank>& t) {
  Tensor<Rank> out;
  for (std::size_t i = 0; i < t.size; ++i) out.at_flat(i) = Quantity(t.at_flat(i));
  return out;
}

template <int Rank>
RealTensor<Rank> values(const Tensor<Rank>& t) {
  RealTensor<Rank> out;
  for (std::size_t i = 0; i < t.size; ++i) out.at_flat(i) = t.at_flat(i).value;
  return out;
}

inline constexpr double delta(int a, int b) { return a == b ? 1.0 : 0.0; }

}  // namespace wcurv
