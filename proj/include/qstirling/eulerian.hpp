#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qstirling/core.hpp"
#include "qstirling/multiset.hpp"
#include "qstirling/polynomial.hpp"

namespace qstirling {

// How a polynomial family is produced. Enumeration walks the objects and is
// subject to the size guard; the recurrence is the independent cross-check.
enum class Route { enumeration, recurrence };

// Variable lists used throughout.
const std::vector<std::string>& vars_t();
const std::vector<std::string>& vars_xy();
const std::vector<std::string>& vars_xyz();

// A_n(t), final descent counted.
Polynomial eulerian_t(int n, Route route = Route::recurrence, int max_total = kDefaultMaxTotal);
// A_{n,k} by A_{n,k} = k A_{n-1,k} + (n-k+1) A_{n-1,k-1}.
BigInt eulerian_number(int n, int k);

// A_n(x,y) = sum x^des y^asc over S_n.
Polynomial eulerian_xy(int n, Route route = Route::recurrence, int max_total = kDefaultMaxTotal);
// A_n^(c)(x,y) = sum x^cdes y^casc over S_n, by enumeration (n >= 1).
Polynomial cyclic_eulerian_xy(int n, int max_total = kDefaultMaxTotal);

// Q_n(t) over Stirling permutations of {1^2,...,n^2}.
Polynomial stirling_poly(int n, int max_total = kDefaultMaxTotal);
// S(a, b) by S(a,b) = b S(a-1,b) + S(a-1,b-1).
BigInt stirling2(int a, int b);

BigInt binomial(int n, int k);
BigInt factorial(int n);

// Q̄_M(x,y,z) by enumeration.
Polynomial qstirling_poly(const MultisetSpec& m, EnumerationOptions opts = {});
// Q̄_M(t) = Q̄_M(t,1,1).
Polynomial qstirling_t(const MultisetSpec& m, EnumerationOptions opts = {});

// Sum over a in N^k, |a| = n, of multinomial(n; a) z^{#zeros} prod A_{a_i}(x,y).
Polynomial rhs_multiset_eulerian(const MultisetSpec& m);
// n! [u^n] (A(x,y,u) - 1 + z)^k computed with truncated series.
Polynomial rhs_multiset_eulerian_series(const MultisetSpec& m);
// n! [u^n] A(t,u)^k with A(t,u) the Eulerian EGF (closed form, rationals).
Polynomial eulerian_egf_power(int n, int k);

// n! [u^n] (1-t)/(1 - t e^{(1-t)u}), expanded with exact rationals.
Polynomial eulerian_egf_coefficient(int n);

// Coefficients 0..order of (numerator)/(1-t)^power as an exact series.
std::vector<BigInt> series_over_one_minus_t(const Polynomial& numerator, int power, int order);

// Homogeneous gamma expansion f = sum_j gamma_j (xy)^j (x+y)^{d-2j}.
struct GammaResult {
  int degree = 0;
  std::vector<BigInt> gamma;  // index j = 0..floor(d/2)
  bool exact = false;         // expansion reproduces f
  bool nonnegative = false;
  std::string failure;        // first mismatch when !exact
};

// Throws InvalidInput when f is not homogeneous of degree d in (x, y).
GammaResult gamma_extract(const Polynomial& f, int degree);
Polynomial gamma_expand(const std::vector<BigInt>& gamma, int degree);

using GammaTable = std::map<std::pair<int, int>, BigInt>;  // (i, j) -> value

struct PartialGammaReport {
  GammaTable slices;         // slice extraction of Q̄_M
  GammaTable words;          // #{plat = i, sd = j, dsd = 0}
  GammaTable partitions;     // Γ_{n,k,i,j} / (M-n+1)
  bool extraction_ok = true;  // every slice homogeneous and exactly expanded
  bool nonnegative = true;
  bool agree = false;
  std::string failure;
};

PartialGammaReport partial_gamma(const MultisetSpec& m, EnumerationOptions opts = {});

// Γ_{n,k,i,j} for every (i, j) in one pass over B_{n,k}.
GammaTable gamma_count_table(int n, int k, int max_total = kDefaultMaxTotal);

// #{π in Q̄_M : plat = i, sd = j, dsd = 0} tabulated over (i, j).
GammaTable sibling_gamma_table(const MultisetSpec& m, EnumerationOptions opts = {});

}  // namespace qstirling
