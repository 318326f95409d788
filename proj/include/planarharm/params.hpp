#pragma once

#include <stdexcept>

#include "planarharm/rational.hpp"

namespace planarharm {

/// Multiplicity parameters of the type-B weight: N variables, k on the
/// x_i +/- x_j hyperplanes, k1 on the coordinate hyperplanes.
class Params {
 public:
  Params(int n, Rational k, Rational k1) : n_(n), k_(std::move(k)), k1_(std::move(k1)) {
    if (n_ < 2) throw std::invalid_argument("Params: N must be at least 2");
    k2_ = (n_ - 1) * k_ + k1_ + Rational(1, 2);
  }

  int N() const { return n_; }
  const Rational& k() const { return k_; }
  const Rational& k1() const { return k1_; }
  /// (N-1)k + k1 + 1/2
  const Rational& k2() const { return k2_; }

  /// Same N and k with k1 (hence k2) shifted by `delta`.
  Params shift_k1(const Rational& delta) const { return Params(n_, k_, k1_ + delta); }

  friend bool operator==(const Params& a, const Params& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.k1_ == b.k1_;
  }

 private:
  int n_;
  Rational k_;
  Rational k1_;
  Rational k2_;
};

}  // namespace planarharm
