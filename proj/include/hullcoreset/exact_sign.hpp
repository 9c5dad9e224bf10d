#pragma once

#include <span>

namespace hullcoreset::exact {

/// A product term lhs * rhs of two input doubles.
struct Product {
  double lhs;
  double rhs;
};

/// Sign (-1, 0, +1) of sum_k terms[k].lhs * terms[k].rhs, evaluated exactly.
///
/// Every product is split into a nonoverlapping pair with Dekker's algorithm
/// and the pairs are summed as a floating-point expansion, so the result is
/// exact for all finite inputs whose products neither overflow nor underflow.
int sign_of_sum(std::span<const Product> terms);

}  // namespace hullcoreset::exact
