#pragma once

/// @file antiderivative.hpp
/// @brief Exact antiderivatives F_k(x) = integral_{-1}^x f_k, certified F and the
/// normalized odd-signed G, plus an enumeration-based enclosure integrator that
/// serves as an independent check of the closed forms.

#include "nowhere/construction.hpp"
#include "nowhere/rat.hpp"

namespace nowhere {

/// Two-sided rigorous bound [lower, upper] of an integral.
struct Enclosure {
  Rat lower;
  Rat upper;

  Rat width() const { return upper - lower; }
  bool contains(const Rat& v) const { return lower <= v && v <= upper; }

  friend bool operator==(const Enclosure&, const Enclosure&) = default;
};

/// (x^2 - 1) / 2, the integral of the identity from -1.
Rat eval_F0(const Rat& x);

/// Exact F_k(x) via F_k(x) = F_{k-1}(f_1(x)) / sigma, sigma the slope of f_1 on
/// the level-1 cell holding x; F_k(+-1) = 0.
Rat eval_Fk(const Rat& x, int k);

/// Enclosure of integral_{-1}^{upto} f_k from the level-k cells admitted by a
/// per-coordinate index budget: affine pieces are integrated exactly and every
/// uncovered stretch is charged +-(its length), since |f_k| <= 1. Does not use
/// eval_Fk or any vanishing-block identity.
Enclosure enclose_integral(int k, const Rat& upto, long index_budget);

/// Same enclosure over an arbitrary subinterval [from, to] of [-1, 1].
Enclosure enclose_integral(int k, const Rat& from, const Rat& to, long index_budget);

/// Center sum_{k<=K} F_k(x) / 2^k, radius 2^{1-K}.
Certified eval_F(const Rat& x, int terms = kDefaultTerms);

/// Exact K-term center of F at 0: -(1/6)(1 - 4^{-K}).
Rat normalization_constant(int terms);

/// (F(x) - F(0)) sign(x), with radius doubled; G(0) = 0 exactly.
Certified eval_G(const Rat& x, int terms = kDefaultTerms);

/// Enclosure of integral_{-1}^{1} f: every term integrated over its admitted
/// cells with uncovered stretches charged +-(length), plus the tail +-2 * 2^{-K}.
Enclosure darboux_gap(int terms, long cells_budget);

}  // namespace nowhere
