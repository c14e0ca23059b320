#include "qstirling/eulerian.hpp"

#include <algorithm>
#include <numeric>

#include "qstirling/errors.hpp"
#include "qstirling/partitions.hpp"

namespace qstirling {

const std::vector<std::string>& vars_t() {
  static const std::vector<std::string> v{"t"};
  return v;
}
const std::vector<std::string>& vars_xy() {
  static const std::vector<std::string> v{"x", "y"};
  return v;
}
const std::vector<std::string>& vars_xyz() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}

namespace {

void check_n_guard(int n, int max_total) {
  if (n < 0) throw InvalidInput("n must be nonnegative");
  if (n > max_total) {
    throw GuardExceeded("n = " + std::to_string(n) + " exceeds the guard " + std::to_string(max_total));
  }
}

void for_each_permutation(int n, const std::function<void(const Word&)>& visit) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

Polynomial rename(const Polynomial& p, const std::vector<std::string>& vars) {
  Polynomial out(vars);
  for (const auto& [e, c] : p.terms()) out.add_term(e, c);
  return out;
}

// Embeds a polynomial in (x, y) into (x, y, z).
Polynomial lift_xy(const Polynomial& p) {
  Polynomial out(vars_xyz());
  for (const auto& [e, c] : p.terms()) out.add_term({e[0], e[1], 0}, c);
  return out;
}

template <class C>
Polynomial to_integer(const SparsePolynomial<C>& p, const char* what) {
  Polynomial out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (denominator(c) != 1) throw InvariantViolation(std::string(what) + ": non-integral coefficient");
    out.add_term(e, numerator(c));
  }
  return out;
}

}  // namespace

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt eulerian_number(int n, int k) {
  if (n < 0) throw InvalidInput("n must be nonnegative");
  std::vector<BigInt> row{1};  // n = 0
  for (int r = 1; r <= n; ++r) {
    std::vector<BigInt> next(static_cast<std::size_t>(r + 1), 0);
    for (int j = 1; j <= r; ++j) {
      BigInt v = 0;
      if (j < static_cast<int>(row.size())) v += j * row[static_cast<std::size_t>(j)];
      v += (r - j + 1) * row[static_cast<std::size_t>(j - 1)];
      next[static_cast<std::size_t>(j)] = v;
    }
    row = std::move(next);
  }
  return k >= 0 && k < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(k)] : BigInt(0);
}

Polynomial eulerian_t(int n, Route route, int max_total) {
  Polynomial out(vars_t());
  if (route == Route::recurrence) {
    if (n < 0) throw InvalidInput("n must be nonnegative");
    for (int k = 0; k <= n; ++k) out.add_term({k}, eulerian_number(n, k));
    return out;
  }
  check_n_guard(n, max_total);
  std::vector<BigInt> counts(static_cast<std::size_t>(n + 1), 0);
  for_each_permutation(n, [&](const Word& w) { ++counts[static_cast<std::size_t>(word_stats(w).des)]; });
  for (int k = 0; k <= n; ++k) out.add_term({k}, counts[static_cast<std::size_t>(k)]);
  return out;
}

Polynomial eulerian_xy(int n, Route route, int max_total) {
  Polynomial out(vars_xy());
  if (route == Route::recurrence) {
    if (n < 0) throw InvalidInput("n must be nonnegative");
    if (n == 0) return Polynomial::constant(vars_xy(), 1);
    for (int k = 1; k <= n; ++k) out.add_term({k, n + 1 - k}, eulerian_number(n, k));
    return out;
  }
  check_n_guard(n, max_total);
  for_each_permutation(n, [&](const Word& w) {
    const auto s = word_stats(w);
    out.add_term({s.des, s.asc}, 1);
  });
  return out;
}

Polynomial cyclic_eulerian_xy(int n, int max_total) {
  if (n < 1) throw InvalidInput("cyclic Eulerian polynomials need n >= 1");
  check_n_guard(n, max_total);
  Polynomial out(vars_xy());
  for_each_permutation(n, [&](const Word& w) {
    const auto s = cyclic_stats(w);
    out.add_term({s.cdes, s.casc}, 1);
  });
  return out;
}

Polynomial stirling_poly(int n, int max_total) {
  if (n < 0) throw InvalidInput("n must be nonnegative");
  if (n == 0) return Polynomial::constant(vars_t(), 1);
  const MultisetSpec m(std::vector<int>(static_cast<std::size_t>(n), 2));
  Polynomial out(vars_t());
  for_each_multiset_permutation(
      m,
      [&](const Word& w) {
        if (is_stirling(w)) out.add_term({word_stats(w).des}, 1);
      },
      max_total);
  return out;
}

BigInt stirling2(int a, int b) {
  if (a < 0 || b < 0) throw InvalidInput("Stirling numbers need nonnegative arguments");
  std::vector<BigInt> row(static_cast<std::size_t>(b + 1), 0);
  row[0] = 1;  // S(0, 0)
  for (int i = 1; i <= a; ++i) {
    for (int j = std::min(i, b); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] = j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(b)];
}

Polynomial qstirling_poly(const MultisetSpec& m, EnumerationOptions opts) {
  const int M = m.total();
  // Dense accumulation; des, asc, plat are each at most M + 1.
  const std::size_t side = static_cast<std::size_t>(M + 2);
  std::vector<std::uint64_t> counts(side * side * side, 0);
  for_each_quasi_stirling(
      m,
      [&](const Word& w) {
        const auto s = word_stats(w);
        ++counts[(static_cast<std::size_t>(s.des) * side + static_cast<std::size_t>(s.asc)) * side +
                 static_cast<std::size_t>(s.plat)];
      },
      opts.max_total);
  Polynomial out(vars_xyz());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    const int plat = static_cast<int>(i % side);
    const int asc = static_cast<int>((i / side) % side);
    const int des = static_cast<int>(i / side / side);
    out.add_term({des, asc, plat}, BigInt(counts[i]));
  }
  return out;
}

Polynomial qstirling_t(const MultisetSpec& m, EnumerationOptions opts) {
  return rename(qstirling_poly(m, opts).specialize(2, 1).specialize(1, 1), vars_t());
}

Polynomial rhs_multiset_eulerian(const MultisetSpec& m) {
  const int n = m.n();
  const int k = m.block_count();
  std::vector<Polynomial> eulerian;
  for (int j = 0; j <= n; ++j) eulerian.push_back(lift_xy(eulerian_xy(j)));
  const Polynomial z = Polynomial::variable(vars_xyz(), 2);
  const BigInt n_fact = factorial(n);

  Polynomial total(vars_xyz());
  // Walk compositions a_1 + ... + a_k = n, carrying the running product and
  // the product of a_i! for the multinomial.
  std::function<void(int, int, const Polynomial&, const BigInt&)> rec =
      [&](int slot, int left, const Polynomial& product, const BigInt& denom) {
        if (slot == k) {
          if (left == 0) total += product * (n_fact / denom);
          return;
        }
        const int lo = slot == k - 1 ? left : 0;
        for (int a = lo; a <= left; ++a) {
          const Polynomial factor = a == 0 ? z : eulerian[static_cast<std::size_t>(a)];
          rec(slot + 1, left - a, product * factor, denom * factorial(a));
        }
      };
  rec(0, n, Polynomial::constant(vars_xyz(), 1), BigInt(1));
  return total;
}

Polynomial rhs_multiset_eulerian_series(const MultisetSpec& m) {
  const int n = m.n();
  const int k = m.block_count();
  const RationalPolynomial zero(vars_xyz());
  TruncatedSeries<RationalPolynomial> a(n, zero);
  a[0] = RationalPolynomial::variable(vars_xyz(), 2);  // A_0 - 1 + z = z
  for (int j = 1; j <= n; ++j) {
    a[static_cast<std::size_t>(j)] =
        lift_xy(eulerian_xy(j)).cast<BigRational>() * BigRational(BigInt(1), factorial(j));
  }
  const auto power = a.pow(static_cast<unsigned>(k));
  return to_integer(power[static_cast<std::size_t>(n)] * BigRational(factorial(n)), "series route");
}

namespace {

// A(t,u) = 1 / (1 - t sum_{j>=1} (1-t)^{j-1} u^j / j!) to order n.
TruncatedSeries<RationalPolynomial> eulerian_egf_series(int n) {
  const RationalPolynomial zero(vars_t());
  const RationalPolynomial one = RationalPolynomial::constant(vars_t(), 1);
  const RationalPolynomial t = RationalPolynomial::variable(vars_t(), 0);
  const RationalPolynomial one_minus_t = one - t;
  TruncatedSeries<RationalPolynomial> d(n, zero);
  d[0] = one;
  RationalPolynomial p = one;  // (1-t)^{j-1}
  for (int j = 1; j <= n; ++j) {
    d[static_cast<std::size_t>(j)] = -(t * p) * BigRational(BigInt(1), factorial(j));
    p *= one_minus_t;
  }
  return d.inverse();
}

}  // namespace

Polynomial eulerian_egf_coefficient(int n) {
  if (n < 0) throw InvalidInput("n must be nonnegative");
  const auto a = eulerian_egf_series(n);
  return to_integer(a[static_cast<std::size_t>(n)] * BigRational(factorial(n)), "Eulerian EGF");
}

Polynomial eulerian_egf_power(int n, int k) {
  if (n < 0 || k < 0) throw InvalidInput("n and k must be nonnegative");
  const auto a = eulerian_egf_series(n).pow(static_cast<unsigned>(k));
  return to_integer(a[static_cast<std::size_t>(n)] * BigRational(factorial(n)), "Eulerian EGF power");
}

std::vector<BigInt> series_over_one_minus_t(const Polynomial& numerator, int power, int order) {
  if (order < 0 || power < 0) throw InvalidInput("order and power must be nonnegative");
  const auto num = numerator.univariate();
  std::vector<BigInt> out(static_cast<std::size_t>(order + 1), 0);
  for (int m = 0; m <= order; ++m) {
    for (int i = 0; i <= m && i < static_cast<int>(num.size()); ++i) {
      // [t^j] (1-t)^{-p} = C(p-1+j, j)
      const int j = m - i;
      out[static_cast<std::size_t>(m)] +=
          num[static_cast<std::size_t>(i)] * (power == 0 ? BigInt(j == 0 ? 1 : 0) : binomial(power - 1 + j, j));
    }
  }
  return out;
}

Polynomial gamma_expand(const std::vector<BigInt>& gamma, int degree) {
  const Polynomial x = Polynomial::variable(vars_xy(), 0);
  const Polynomial y = Polynomial::variable(vars_xy(), 1);
  Polynomial out(vars_xy());
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    if (gamma[j] == 0) continue;
    const int rest = degree - 2 * static_cast<int>(j);
    if (rest < 0) throw InvalidInput("gamma index exceeds half the degree");
    out += (x * y).pow(static_cast<unsigned>(j)) * (x + y).pow(static_cast<unsigned>(rest)) * gamma[j];
  }
  return out;
}

GammaResult gamma_extract(const Polynomial& f, int degree) {
  if (f.vars().size() != 2) throw InvalidInput("gamma extraction needs a polynomial in two variables");
  if (!f.is_zero()) {
    const auto d = f.homogeneous_degree();
    if (!d || *d != degree) {
      throw InvalidInput("polynomial is not homogeneous of degree " + std::to_string(degree));
    }
  }
  GammaResult r;
  r.degree = degree;
  r.gamma.assign(static_cast<std::size_t>(degree / 2 + 1), 0);
  const Polynomial input = rename(f, vars_xy());
  for (const auto& [e, c] : input.terms()) {
    const BigInt mirror = input.coefficient({e[1], e[0]});
    if (mirror != c) {
      r.failure = "asymmetric coefficient at x^" + std::to_string(e[0]) + " y^" + std::to_string(e[1]);
      return r;
    }
  }
  Polynomial rem = input;
  for (int j = 0; j <= degree / 2; ++j) {
    const BigInt g = rem.coefficient({degree - j, j});
    r.gamma[static_cast<std::size_t>(j)] = g;
    if (g != 0) {
      std::vector<BigInt> unit(static_cast<std::size_t>(j + 1), 0);
      unit[static_cast<std::size_t>(j)] = g;
      rem -= gamma_expand(unit, degree);
    }
  }
  if (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().begin();
    r.failure = "nonzero remainder at x^" + std::to_string(e[0]) + " y^" + std::to_string(e[1]);
    return r;
  }
  r.exact = true;
  r.nonnegative = std::all_of(r.gamma.begin(), r.gamma.end(), [](const BigInt& g) { return g >= 0; });
  return r;
}

GammaTable gamma_count_table(int n, int k, int max_total) {
  GammaTable table;
  for_each_partition(
      n, k,
      [&](const OrderedBlockPartition& p) {
        const auto s = partition_stats(p);
        if (s.dd == 0) ++table[{s.emp, s.des}];
      },
      max_total);
  return table;
}

GammaTable sibling_gamma_table(const MultisetSpec& m, EnumerationOptions opts) {
  GammaTable table;
  for_each_quasi_stirling(
      m,
      [&](const Word& w) {
        const auto sib = sibling_stats(w, DsdRule::value_anchored);
        if (sib.dsd == 0) ++table[{word_stats(w).plat, sib.sd}];
      },
      opts.max_total);
  return table;
}

namespace {

std::string table_to_string(const GammaTable& t) {
  std::string out;
  for (const auto& [ij, v] : t) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")=" + v.str();
  }
  return out.empty() ? "{}" : out;
}

}  // namespace

PartialGammaReport partial_gamma(const MultisetSpec& m, EnumerationOptions opts) {
  PartialGammaReport report;
  const Polynomial q = qstirling_poly(m, opts);
  const int M = m.total();
  for (int i = 0; i <= m.excess(); ++i) {
    const Polynomial slice = q.slice(2, i);
    if (slice.is_zero()) continue;
    const auto g = gamma_extract(slice, M + 1 - i);
    if (!g.exact) {
      report.extraction_ok = false;
      if (report.failure.empty()) report.failure = "slice z^" + std::to_string(i) + ": " + g.failure;
      continue;
    }
    for (std::size_t j = 0; j < g.gamma.size(); ++j) {
      if (g.gamma[j] == 0) continue;
      report.slices[{i, static_cast<int>(j)}] = g.gamma[j];
      if (g.gamma[j] < 0) report.nonnegative = false;
    }
  }

  report.words = sibling_gamma_table(m, opts);

  const int k = m.block_count();
  for (const auto& [ij, count] : gamma_count_table(m.n(), k, opts.max_total)) {
    if (count % k != 0) {
      report.agree = false;
      if (report.failure.empty()) {
        report.failure = "Gamma count at (" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
                         ") is not divisible by " + std::to_string(k);
      }
      return report;
    }
    report.partitions[ij] = count / k;
  }

  report.agree = report.extraction_ok && report.slices == report.words && report.words == report.partitions;
  if (!report.agree && report.failure.empty()) {
    report.failure = "slices " + table_to_string(report.slices) + " | words " + table_to_string(report.words) +
                     " | partitions " + table_to_string(report.partitions);
  }
  return report;
}

}  // namespace qstirling
