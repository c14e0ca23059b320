#include "qstirling/verifier.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "qstirling/bijections.hpp"
#include "qstirling/errors.hpp"
#include "qstirling/eulerian.hpp"
#include "qstirling/json_io.hpp"
#include "qstirling/parallel.hpp"
#include "qstirling/partitions.hpp"
#include "qstirling/trees.hpp"

namespace qstirling {

using nlohmann::json;

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::skipped:
      return "skipped";
  }
  return "unknown";
}

namespace {

IdentityResult start(const char* id, const IdentityParams& p) {
  IdentityResult r;
  r.id = id;
  r.multiset = p.multiset;
  r.outcome = Outcome::pass;
  r.detail = json::object();
  return r;
}

IdentityResult& fail(IdentityResult& r, std::string reason, json counterexample) {
  if (r.outcome != Outcome::fail) {
    r.outcome = Outcome::fail;
    r.reason = std::move(reason);
    r.counterexample = std::move(counterexample);
  }
  return r;
}

json series_json(const std::vector<BigInt>& c) {
  json out = json::array();
  for (const auto& x : c) out.push_back(io::integer_to_json(x));
  return out;
}

// Compares two coefficient lists; records the first differing index.
void compare_series(IdentityResult& r, const std::vector<BigInt>& lhs, const std::vector<BigInt>& rhs) {
  r.detail["lhs"] = series_json(lhs);
  r.detail["rhs"] = series_json(rhs);
  for (std::size_t m = 0; m < std::min(lhs.size(), rhs.size()); ++m) {
    if (lhs[m] != rhs[m]) {
      fail(r, "coefficients of t^" + std::to_string(m) + " differ",
           {{"m", m}, {"lhs", io::integer_to_json(lhs[m])}, {"rhs", io::integer_to_json(rhs[m])}});
      return;
    }
  }
  if (lhs.size() != rhs.size()) fail(r, "series lengths differ", {{"lhs", lhs.size()}, {"rhs", rhs.size()}});
}

void compare_polys(IdentityResult& r, const Polynomial& lhs, const Polynomial& rhs) {
  r.detail["lhs"] = io::to_json(lhs);
  r.detail["rhs"] = io::to_json(rhs);
  if (!(lhs == rhs)) fail(r, "polynomials differ", {{"lhs", io::to_json(lhs)}, {"rhs", io::to_json(rhs)}});
}

BigInt power(int base, int exp) { return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp)); }

void tally(Polynomial& p, int a, int b, int c) { p.add_term({a, b, c}, BigInt(1)); }

EnumerationOptions options(const IdentityParams& p) { return {p.max_total, 1}; }

// ---------------------------------------------------------------- checks

IdentityResult carlitz_classic(const IdentityParams& p) {
  auto r = start("carlitz-classic", p);
  const int n = p.multiset.n();
  const Polynomial a = eulerian_t(n, Route::enumeration, p.max_total);
  const Polynomial rec = eulerian_t(n, Route::recurrence);
  if (!(a == rec)) return fail(r, "enumerated and recurrence Eulerian polynomials differ", io::to_json(a));
  std::vector<BigInt> lhs;
  for (int m = 0; m <= p.order; ++m) lhs.push_back(power(m, n));
  r.detail["numerator"] = io::to_json(a);
  compare_series(r, lhs, series_over_one_minus_t(a, n + 1, p.order));
  return r;
}

IdentityResult eulerian_egf(const IdentityParams& p) {
  auto r = start("eulerian-egf", p);
  const int n = p.multiset.n();
  compare_polys(r, eulerian_egf_coefficient(n), eulerian_t(n, Route::enumeration, p.max_total));
  return r;
}

IdentityResult stirling_carlitz(const IdentityParams& p) {
  auto r = start("stirling-carlitz", p);
  const int n = p.multiset.n();
  const Polynomial q = stirling_poly(n, p.max_total);
  std::vector<BigInt> lhs;
  for (int m = 0; m <= p.order; ++m) lhs.push_back(stirling2(m + n, m));
  r.detail["numerator"] = io::to_json(q);
  compare_series(r, lhs, series_over_one_minus_t(q, 2 * n + 1, p.order));
  return r;
}

IdentityResult qstirling_eulerian_k2(const IdentityParams& p) {
  auto r = start("qstirling-eulerian-k2", p);
  const int n = p.multiset.n();
  const Polynomial lhs = qstirling_t(p.multiset, options(p)) * BigInt(n + 1);
  compare_polys(r, lhs, eulerian_egf_power(n, n + 1));
  return r;
}

IdentityResult qstirling_carlitz_k2(const IdentityParams& p) {
  auto r = start("qstirling-carlitz-k2", p);
  const int n = p.multiset.n();
  std::vector<BigInt> lhs;
  for (int m = 0; m <= p.order; ++m) lhs.push_back(power(m, n) * binomial(m + n, m));
  const Polynomial num = qstirling_t(p.multiset, options(p)) * BigInt(n + 1);
  compare_series(r, lhs, series_over_one_minus_t(num, 2 * n + 1, p.order));
  return r;
}

IdentityResult multiset_eulerian(const IdentityParams& p) {
  auto r = start("multiset-eulerian", p);
  const Polynomial lhs = qstirling_poly(p.multiset, options(p)) * BigInt(p.multiset.block_count());
  const Polynomial series = rhs_multiset_eulerian_series(p.multiset);
  compare_polys(r, lhs, series);
  const Polynomial sum = rhs_multiset_eulerian(p.multiset);
  if (!(sum == series)) {
    fail(r, "series and composition-sum right-hand sides differ",
         {{"series", io::to_json(series)}, {"compositions", io::to_json(sum)}});
  }
  return r;
}

IdentityResult multiset_carlitz(const IdentityParams& p) {
  auto r = start("multiset-carlitz", p);
  const MultisetSpec& m = p.multiset;
  std::vector<BigInt> lhs;
  for (int j = 0; j <= p.order; ++j) lhs.push_back(binomial(m.excess() + j, j) * power(j, m.n()));
  const Polynomial num = qstirling_t(m, options(p)) * BigInt(m.block_count());
  compare_series(r, lhs, series_over_one_minus_t(num, m.total() + 1, p.order));
  return r;
}

IdentityResult rooted_count(const IdentityParams& p) {
  auto r = start("rooted-count", p);
  const MultisetSpec& m = p.multiset;
  const auto rooted = enumerate_rooted(m, options(p));
  const auto words = enumerate_quasi_stirling(m, options(p));
  const auto trees = enumerate_trees(m, p.max_total);
  const BigInt expected = BigInt(m.block_count()) * BigInt(words.size());
  r.detail["rooted"] = rooted.size();
  r.detail["words"] = words.size();
  r.detail["trees"] = trees.size();
  if (BigInt(rooted.size()) != expected) {
    return fail(r, "|R_M| != (M-n+1)|Q_M|", {{"rooted", rooted.size()}, {"expected", io::integer_to_json(expected)}});
  }
  if (trees.size() != rooted.size()) {
    return fail(r, "tree count differs from rooted word count", {{"trees", trees.size()}, {"rooted", rooted.size()}});
  }
  return r;
}

IdentityResult phi_statistics(const IdentityParams& p) {
  auto r = start("phi-statistics", p);
  const MultisetSpec& m = p.multiset;
  const auto trees = enumerate_trees(m, p.max_total);
  const auto rooted = enumerate_rooted(m, options(p));
  std::set<RootedWord> images;
  for (const auto& t : trees) {
    const RootedWord rw = phi(t);
    const TreeStats ts = tree_stats(t);
    const StatTriple ws = word_stats(rw.word);
    if (ts.cdes != ws.des || ts.casc != ws.asc || ts.leaf_star != ws.plat) {
      return fail(r, "statistics not transferred",
                  {{"tree", io::to_json(t)}, {"tree_stats", io::to_json(ts)}, {"word", io::to_json(rw)},
                   {"word_stats", io::to_json(ws)}});
    }
    if (!(phi_inverse(rw) == t)) return fail(r, "phi_inverse(phi(T)) != T", {{"tree", io::to_json(t)}});
    images.insert(rw);
  }
  const std::set<RootedWord> all(rooted.begin(), rooted.end());
  r.detail["trees"] = trees.size();
  if (images != all) {
    return fail(r, "phi is not onto the rooted words", {{"images", images.size()}, {"rooted", all.size()}});
  }
  return r;
}

IdentityResult bnk_gf(const IdentityParams& p) {
  auto r = start("bnk-gf", p);
  const MultisetSpec& m = p.multiset;
  Polynomial lhs(vars_xyz());
  for_each_partition(
      m.n(), m.block_count(),
      [&](const OrderedBlockPartition& b) {
        const auto s = partition_stats(b);
        tally(lhs, s.des, s.asc, s.emp);
      },
      p.max_total);
  compare_polys(r, lhs, rhs_multiset_eulerian(m));
  return r;
}

IdentityResult class_gf(const IdentityParams& p) {
  auto r = start("class-gf", p);
  const MultisetSpec& m = p.multiset;
  std::map<UnorderedVETree, std::vector<const VETree*>> classes;
  const auto trees = enumerate_trees(m, p.max_total);
  for (const auto& t : trees) classes[forget_order(t)].push_back(&t);
  std::set<OrderedBlockPartition> images;
  for (const auto& [u, members] : classes) {
    Polynomial lhs(vars_xyz());
    std::set<OrderedBlockPartition> mapped;
    for (const VETree* t : members) {
      const auto s = tree_stats(*t);
      tally(lhs, s.cdes, s.casc, s.leaf_star);
      const auto pi = Psi(*t);
      if (!(Psi_inverse(pi, m) == *t)) return fail(r, "Psi_inverse(Psi(T)) != T", {{"tree", io::to_json(*t)}});
      mapped.insert(pi);
    }
    const auto target = partition_class(Psi(*members.front()));
    Polynomial rhs(vars_xyz());
    for (const auto& pi : target) {
      const auto s = partition_stats(pi);
      tally(rhs, s.des, s.asc, s.emp);
    }
    if (mapped != std::set<OrderedBlockPartition>(target.begin(), target.end())) {
      return fail(r, "Psi does not map the class onto a class", {{"tree", io::to_json(*members.front())}});
    }
    if (!(lhs == rhs)) {
      return fail(r, "class generating functions differ",
                  {{"tree", io::to_json(*members.front())}, {"trees", io::to_json(lhs)}, {"partitions", io::to_json(rhs)}});
    }
    images.insert(mapped.begin(), mapped.end());
  }
  r.detail["classes"] = classes.size();
  r.detail["trees"] = trees.size();
  if (images.size() != trees.size()) {
    return fail(r, "Psi is not injective", {{"images", images.size()}, {"trees", trees.size()}});
  }
  return r;
}

IdentityResult three_way(const IdentityParams& p) {
  auto r = start("three-way", p);
  const MultisetSpec& m = p.multiset;
  const auto trees = enumerate_unordered_trees(m, p.max_total);
  const auto graphs = enumerate_regular_graphs(m, p.max_total);
  std::set<RegularGraph> graph_images;
  std::set<OrderedBlockPartition> partition_images;
  std::size_t repaired = 0;
  for (const auto& u : trees) {
    Psi1Trace trace;
    const RegularGraph g = psi1(u, &trace);
    if (trace.repaired) ++repaired;
    const OrderedBlockPartition pi = psi2(g);
    const auto tree_counts = distinct_label_counts(u);
    const auto graph_counts = distinct_label_counts(g);
    std::vector<int> block_sizes;
    for (const auto& b : pi.blocks()) block_sizes.push_back(static_cast<int>(b.size()));
    if (tree_counts != graph_counts || graph_counts != block_sizes) {
      return fail(r, "distinct-label counts differ",
                  {{"tree", io::to_json(u)}, {"tree_counts", tree_counts}, {"graph_counts", graph_counts},
                   {"block_sizes", block_sizes}});
    }
    if (!(psi1_inverse(g) == u)) return fail(r, "psi1_inverse(psi1(T)) != T", {{"tree", io::to_json(u)}});
    if (!(psi2_inverse(pi, m) == g)) return fail(r, "psi2_inverse(psi2(G)) != G", {{"graph", io::to_json(g)}});
    graph_images.insert(g);
    partition_images.insert(pi);
  }
  r.detail["trees"] = trees.size();
  r.detail["graphs"] = graphs.size();
  r.detail["repaired"] = repaired;
  if (graph_images.size() != graphs.size() || trees.size() != graphs.size()) {
    return fail(r, "psi1 is not a bijection onto regular graphs",
                {{"trees", trees.size()}, {"images", graph_images.size()}, {"graphs", graphs.size()}});
  }
  if (partition_images.size() != graphs.size()) {
    return fail(r, "psi2 is not injective", {{"images", partition_images.size()}, {"graphs", graphs.size()}});
  }
  return r;
}

IdentityResult cyclic_eulerian(const IdentityParams& p) {
  auto r = start("cyclic-eulerian", p);
  const int n = p.multiset.n();
  compare_polys(r, cyclic_eulerian_xy(n, p.max_total), eulerian_xy(n - 1) * BigInt(n));
  return r;
}

IdentityResult barred_count(const IdentityParams& p) {
  auto r = start("barred-count", p);
  const MultisetSpec& m = p.multiset;
  const int n = m.n();
  const int k = m.block_count();
  Polynomial des(vars_t());
  for_each_partition(
      n, k, [&](const OrderedBlockPartition& b) { des.add_term({partition_stats(b).des}, BigInt(1)); }, p.max_total);
  const auto series = series_over_one_minus_t(des, m.total() + 1, p.order);
  std::vector<BigInt> counted;
  std::vector<BigInt> closed;
  for (int j = 0; j <= p.order; ++j) {
    counted.push_back(count_barred(n, k, j, p.max_total));
    closed.push_back(count_barred_closed(n, k, j));
  }
  compare_series(r, counted, series);
  if (r.outcome == Outcome::fail) return r;
  if (counted != closed) {
    return fail(r, "barred count differs from C(M-n+m, m) m^n", {{"counted", series_json(counted)}, {"closed", series_json(closed)}});
  }
  // Direct listing for small bar counts.
  const int listed_up_to = std::min(p.order, 4);
  for (int j = 0; j <= listed_up_to; ++j) {
    const auto listed = enumerate_barred(n, k, j, p.max_total);
    for (const auto& b : listed) {
      if (!is_valid_barred(b) || b.bar_count() != j) return fail(r, "invalid barred partition listed", io::to_json(b));
    }
    if (BigInt(listed.size()) != counted[static_cast<std::size_t>(j)]) {
      return fail(r, "listing size differs from count",
                  {{"m", j}, {"listed", listed.size()}, {"counted", io::integer_to_json(counted[static_cast<std::size_t>(j)])}});
    }
  }
  r.detail["listed_up_to"] = listed_up_to;
  return r;
}

IdentityResult bivariate_gamma(const IdentityParams& p) {
  auto r = start("bivariate-gamma", p);
  const int n = p.multiset.n();
  const Polynomial a = eulerian_xy(n, Route::enumeration, p.max_total);
  const GammaResult g = gamma_extract(a, n + 1);
  r.detail["gamma"] = io::to_json(g);
  if (!g.exact) return fail(r, "gamma extraction failed: " + g.failure, io::to_json(a));
  if (!g.nonnegative) return fail(r, "negative gamma coefficient", io::to_json(g));
  std::vector<BigInt> counted(g.gamma.size(), BigInt(0));
  for_each_multiset_permutation(
      p.multiset,
      [&](const Word& w) {
        if (double_descents(w) != 0) return;
        const auto j = static_cast<std::size_t>(word_stats(w).des);
        if (j >= counted.size()) counted.resize(j + 1, BigInt(0));
        ++counted[j];
      },
      p.max_total);
  if (counted != g.gamma) {
    return fail(r, "gamma differs from #{des = j, dd = 0}", {{"gamma", series_json(g.gamma)}, {"counted", series_json(counted)}});
  }
  return r;
}

IdentityResult partial_gamma_check(const IdentityParams& p) {
  auto r = start("partial-gamma", p);
  const auto report = partial_gamma(p.multiset, options(p));
  r.detail = io::to_json(report);
  if (!report.extraction_ok) return fail(r, "slice extraction failed: " + report.failure, r.detail);
  if (!report.nonnegative) return fail(r, "negative gamma coefficient", r.detail);
  if (!report.agree) return fail(r, "gamma tables disagree: " + report.failure, r.detail);
  return r;
}

IdentityResult transfer_fact(const IdentityParams& p) {
  auto r = start("transfer-fact", p);
  const MultisetSpec& m = p.multiset;
  using Triple = std::array<int, 3>;
  std::map<Triple, long long> partitions;
  for_each_partition(
      m.n(), m.block_count(),
      [&](const OrderedBlockPartition& b) {
        const auto s = partition_stats(b);
        ++partitions[{s.emp, s.des, s.dd}];
      },
      p.max_total);
  std::map<Triple, long long> words;
  for (const auto& rw : enumerate_rooted(m, options(p))) {
    const auto sib = sibling_stats(rw.word);
    ++words[{word_stats(rw.word).plat, sib.sd, sib.dsd}];
  }
  auto table = [](const std::map<Triple, long long>& t) {
    json out = json::array();
    for (const auto& [k, v] : t) out.push_back({{"triple", k}, {"count", v}});
    return out;
  };
  r.detail["partitions"] = table(partitions);
  r.detail["rooted_words"] = table(words);
  if (partitions != words) {
    for (const auto& [k, v] : partitions) {
      const auto it = words.find(k);
      const long long w = it == words.end() ? 0 : it->second;
      if (w != v) return fail(r, "triple multisets differ", {{"triple", k}, {"partitions", v}, {"rooted_words", w}});
    }
    return fail(r, "triple multisets differ", {{"partitions", table(partitions)}, {"rooted_words", table(words)}});
  }
  return r;
}

std::vector<IdentityInfo> build_registry() {
  return {
      {"carlitz-classic", "sum_m m^n t^m = A_n(t) / (1-t)^(n+1)", Domain::permutations, 9, carlitz_classic},
      {"eulerian-egf", "sum_n A_n(t) u^n/n! = (1-t) / (1 - t e^((1-t)u))", Domain::permutations, 9, eulerian_egf},
      {"stirling-carlitz", "sum_m S(m+n, m) t^m = Q_n(t) / (1-t)^(2n+1)", Domain::stirling, 12, stirling_carlitz},
      {"qstirling-eulerian-k2", "(n+1) Qbar_n(t) = n! [u^n] A(t,u)^(n+1)", Domain::stirling, 12, qstirling_eulerian_k2},
      {"qstirling-carlitz-k2", "sum_m m^n C(m+n, m) t^m = (n+1) Qbar_n(t) / (1-t)^(2n+1)", Domain::stirling, 12,
       qstirling_carlitz_k2},
      {"multiset-eulerian", "(M-n+1) Qbar_M(x,y,z) = n! [u^n] (A(x,y,u) - 1 + z)^(M-n+1)", Domain::any, 10,
       multiset_eulerian},
      {"multiset-carlitz", "sum_m C(M-n+m, m) m^n t^m = (M-n+1) Qbar_M(t) / (1-t)^(M+1)", Domain::any, 10,
       multiset_carlitz},
      {"rooted-count", "|R_M| = (M-n+1) |Qbar_M| = |T_M|", Domain::any, 9, rooted_count},
      {"phi-statistics", "phi: T_M -> R_M bijective with (cdes, casc, leaf*)(T) = (des, asc, plat)(phi(T))",
       Domain::any, 8, phi_statistics},
      {"bnk-gf", "n! [u^n] (A(x,y,u) - 1 + z)^k = sum_{B_{n,k}} x^des y^asc z^emp", Domain::any, 9, bnk_gf},
      {"class-gf", "sum_{[T]} x^cdes y^casc z^leaf* = sum_{[Psi(T)]} x^des y^asc z^emp", Domain::any, 7, class_gf},
      {"three-way", "#distinct labels into i in T = in psi1(T) = |block i of psi2(psi1(T))|", Domain::any, 8,
       three_way},
      {"cyclic-eulerian", "A_n^(c)(x,y) = n A_(n-1)(x,y)", Domain::permutations, 9, cyclic_eulerian},
      {"barred-count", "sum_{Bbar_{n,k}} t^bar = sum_{B_{n,k}} t^des / (1-t)^(M+1), [t^m] = C(M-n+m, m) m^n",
       Domain::any, 7, barred_count},
      {"bivariate-gamma", "A_n(x,y) = sum_j #{des = j, dd = 0} (xy)^j (x+y)^(n+1-2j)", Domain::permutations, 9,
       bivariate_gamma},
      {"partial-gamma",
       "Qbar_M = sum_i z^i sum_j gamma_{M,i,j} (xy)^j (x+y)^(M+1-i-2j), gamma = #{plat = i, sd = j, dsd = 0}",
       Domain::any, 9, partial_gamma_check},
      {"transfer-fact", "(emp, des, dd) on B_{n,k} equidistributed with (plat, sd, dsd) on R_M", Domain::any, 8,
       transfer_fact},
  };
}

}  // namespace

const std::vector<IdentityInfo>& registry() {
  static const std::vector<IdentityInfo> r = build_registry();
  return r;
}

const IdentityInfo& find_identity(const std::string& id) {
  for (const auto& info : registry()) {
    if (info.id == id) return info;
  }
  throw InvalidInput("unknown identity id \"" + id + "\"");
}

MultisetSpec domain_multiset(Domain d, int n) {
  if (n < 1) throw InvalidInput("n must be positive");
  return MultisetSpec(std::vector<int>(static_cast<std::size_t>(n), d == Domain::stirling ? 2 : 1));
}

bool applies_to(const IdentityInfo& info, const MultisetSpec& m) {
  if (m.empty()) return false;
  switch (info.domain) {
    case Domain::any:
      return true;
    case Domain::permutations:
      return m.total() == m.n();
    case Domain::stirling:
      return m == domain_multiset(Domain::stirling, m.n());
  }
  return false;
}

IdentityResult run_identity(const std::string& id, const IdentityParams& params) {
  const auto& info = find_identity(id);
  if (params.order < 0) throw InvalidInput("order must be nonnegative");
  if (!applies_to(info, params.multiset)) {
    throw InvalidInput("identity " + id + " is not stated for multiset " + params.multiset.to_string());
  }
  check_guard(params.multiset, params.max_total);
  return info.check(params);
}

SweepReport sweep(int max_M, int order, int max_total, int jobs) {
  if (max_M < 1) throw InvalidInput("max_M must be positive");
  if (max_M > max_total) {
    throw GuardExceeded("max_M = " + std::to_string(max_M) + " exceeds the guard " + std::to_string(max_total));
  }
  const auto multisets = multisets_up_to(max_M);
  struct Task {
    const IdentityInfo* info;
    const MultisetSpec* m;
  };
  std::vector<Task> tasks;
  for (const auto& m : multisets) {
    for (const auto& info : registry()) {
      if (applies_to(info, m)) tasks.push_back({&info, &m});
    }
  }
  SweepReport report;
  report.max_M = max_M;
  report.multisets = multisets.size();
  report.results.resize(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    const Task& t = tasks[i];
    IdentityResult& out = report.results[i];
    if (t.m->total() > t.info->budget) {
      out.id = t.info->id;
      out.multiset = *t.m;
      out.outcome = Outcome::skipped;
      out.reason = "M = " + std::to_string(t.m->total()) + " above the sweep budget " + std::to_string(t.info->budget);
      return;
    }
    try {
      out = t.info->check(IdentityParams{*t.m, order, max_total, 1});
    } catch (const GuardExceeded& e) {
      out.id = t.info->id;
      out.multiset = *t.m;
      out.outcome = Outcome::skipped;
      out.reason = e.what();
    } catch (const std::exception& e) {
      out.id = t.info->id;
      out.multiset = *t.m;
      out.outcome = Outcome::fail;
      out.reason = std::string("exception: ") + e.what();
    }
  });
  for (const auto& r : report.results) {
    if (r.outcome == Outcome::pass) ++report.passed;
    if (r.outcome == Outcome::fail) ++report.failed;
    if (r.outcome == Outcome::skipped) ++report.skipped;
  }
  return report;
}

json to_json(const IdentityResult& r, bool with_detail) {
  json j{{"id", r.id}, {"multiset", r.multiset.multiplicities()}, {"outcome", to_string(r.outcome)}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (with_detail && !r.detail.is_null()) j["detail"] = r.detail;
  if (r.outcome == Outcome::fail) j["counterexample"] = r.counterexample;
  return j;
}

json to_json(const SweepReport& r) {
  json results = json::array();
  for (const auto& x : r.results) results.push_back(to_json(x, false));
  return {{"max_M", r.max_M},   {"multisets", r.multisets}, {"passed", r.passed},
          {"failed", r.failed}, {"skipped", r.skipped},     {"results", results}};
}

}  // namespace qstirling
