#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>

namespace planarharm {

/// Largest number of variables a polynomial may carry.
inline constexpr std::size_t kMaxVars = 12;

/// Exponent vector x_1^{e_1}...x_N^{e_N}. Slots are addressed 0-based here;
/// the operator-level API (dunkl_T, reflections) uses 1-based variable numbers.
class Monomial {
 public:
  using Exponent = std::uint8_t;

  Monomial() = default;

  explicit Monomial(std::size_t nvars) : nvars_(check_nvars(nvars)) {}

  Monomial(std::initializer_list<int> exps) : nvars_(check_nvars(exps.size())) {
    std::size_t i = 0;
    for (int e : exps) set(i++, e);
  }

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }

  unsigned operator[](std::size_t slot) const { return exps_[slot]; }

  void set(std::size_t slot, int e) {
    if (slot >= nvars_) throw std::out_of_range("monomial slot out of range");
    if (e < 0 || e > 255) throw std::overflow_error("monomial exponent out of range");
    degree_ = static_cast<std::uint16_t>(degree_ - exps_[slot] + e);
    exps_[slot] = static_cast<Exponent>(e);
  }

  Monomial with(std::size_t slot, int e) const {
    Monomial m = *this;
    m.set(slot, e);
    return m;
  }

  Monomial swapped(std::size_t a, std::size_t b) const {
    Monomial m = *this;
    std::swap(m.exps_[a], m.exps_[b]);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) m.set(i, a.exps_[i] + b.exps_[i]);
    return m;
  }

  /// True when every exponent of `d` is at most the matching one here.
  bool divisible_by(const Monomial& d) const {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] < d.exps_[i]) return false;
    return true;
  }

  friend Monomial operator/(const Monomial& a, const Monomial& d) {
    if (!a.divisible_by(d)) throw std::domain_error("monomial not divisible");
    Monomial m(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) m.set(i, a.exps_[i] - d.exps_[i]);
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  const std::array<Exponent, kMaxVars>& exponents() const { return exps_; }

 private:
  static std::uint8_t check_nvars(std::size_t n) {
    if (n > kMaxVars) throw std::invalid_argument("too many variables");
    return static_cast<std::uint8_t>(n);
  }

  std::array<Exponent, kMaxVars> exps_{};
  std::uint16_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

/// Graded lexicographic order with the leading term first: higher total
/// degree first, ties broken by comparing exponents of x_1, x_2, ... descending.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.exponents() > b.exponents();
  }
};

}  // namespace planarharm
