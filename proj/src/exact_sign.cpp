#include "hullcoreset/exact_sign.hpp"

#include <cmath>
#include <vector>

namespace hullcoreset::exact {
namespace {

constexpr double kSplitter = 134217729.0;  // 2^27 + 1

inline void two_sum(double a, double b, double& sum, double& err) {
  sum = a + b;
  const double bv = sum - a;
  const double av = sum - bv;
  err = (a - av) + (b - bv);
}

inline void split(double a, double& hi, double& lo) {
  const double c = kSplitter * a;
  const double big = c - a;
  hi = c - big;
  lo = a - hi;
}

inline void two_product(double a, double b, double& prod, double& err) {
  prod = a * b;
  double ahi, alo, bhi, blo;
  split(a, ahi, alo);
  split(b, bhi, blo);
  err = alo * blo - (((prod - ahi * bhi) - alo * bhi) - ahi * blo);
}

// Shewchuk's GROW-EXPANSION with zero elimination: adds b to the
// nonoverlapping expansion e (increasing magnitude), in place.
void grow(std::vector<double>& e, double b) {
  std::vector<double> out;
  out.reserve(e.size() + 1);
  double q = b;
  for (double comp : e) {
    double sum, err;
    two_sum(q, comp, sum, err);
    if (err != 0.0) out.push_back(err);
    q = sum;
  }
  if (q != 0.0) out.push_back(q);
  e.swap(out);
}

}  // namespace

int sign_of_sum(std::span<const Product> terms) {
  std::vector<double> expansion;
  expansion.reserve(2 * terms.size());
  for (const Product& t : terms) {
    double p, err;
    two_product(t.lhs, t.rhs, p, err);
    if (err != 0.0) grow(expansion, err);
    if (p != 0.0) grow(expansion, p);
  }
  if (expansion.empty()) return 0;
  const double top = expansion.back();
  return (top > 0.0) - (top < 0.0);
}

}  // namespace hullcoreset::exact
