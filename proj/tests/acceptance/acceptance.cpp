// Acceptance suite: one PASS/FAIL line per criterion with its runtime and
// budget. Exit status is nonzero if any criterion fails or overruns.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qstirling/bijections.hpp"
#include "qstirling/core.hpp"
#include "qstirling/eulerian.hpp"
#include "qstirling/json_io.hpp"
#include "qstirling/partitions.hpp"
#include "qstirling/trees.hpp"
#include "qstirling/verifier.hpp"
#include "support.hpp"

namespace qs = qstirling;
namespace qt = qstirling::testing;
using qs::BigInt;
using qs::MultisetSpec;

namespace {

// Collects exact comparisons; keeps the first few mismatches.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++compared_;
    if (ok) return;
    ++failed_;
    if (failures_.size() < 3) failures_.push_back(what);
  }
  // Builds the message only on a mismatch.
  template <class Describe>
  void expect_lazy(bool ok, Describe&& describe) {
    if (ok) {
      ++compared_;
      return;
    }
    expect(false, describe());
  }
  void identity(const std::string& id, const MultisetSpec& m, int order = 10) {
    const auto r = qs::run_identity(id, {m, order});
    expect(r.outcome == qs::Outcome::pass, id + " on " + m.to_string() + ": " + r.reason);
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }

  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << compared_ - failed_ << "/" << compared_ << " exact comparisons equal";
    if (!notes_.empty()) os << "; " << notes_;
    for (const auto& f : failures_) os << "\n      mismatch: " << f;
    return os.str();
  }

 private:
  long long compared_ = 0;
  long long failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

std::vector<MultisetSpec> multisets(int max_total) { return qs::multisets_up_to(max_total); }

MultisetSpec perms(int n) { return qs::domain_multiset(qs::Domain::permutations, n); }
MultisetSpec stirling(int n) { return qs::domain_multiset(qs::Domain::stirling, n); }

// ------------------------------------------------------------- criteria

void example_tree(Check& c) {
  const auto m = qt::example_tree_multiset();
  const auto violations = qs::validate_tree(qt::example_tree(), m);
  c.expect(violations.empty(), "example tree fails the labeling conditions");
  const qs::VETree t(m, qt::example_tree());
  const auto rw = qs::phi(t);
  c.expect(rw.word == qt::example_word(), "phi(T) = " + qs::word_to_string(rw.word));
  c.expect(!rw.root.has_value(), "phi(T) carries a root");
  const auto ts = qs::tree_stats(t);
  const auto ws = qs::word_stats(rw.word);
  c.expect(ts == qs::TreeStats{8, 9, 4}, "tree statistics");
  c.expect(ws == qs::StatTriple{8, 9, 4}, "word statistics");
  c.expect(qs::phi_inverse(rw) == t, "phi_inverse(phi(T)) != T");
  c.note("phi(T) = " + qs::word_to_string(rw.word) + ", root none, (cdes,casc,leaf*) = (des,asc,plat) = (" +
         std::to_string(ws.des) + "," + std::to_string(ws.asc) + "," + std::to_string(ws.plat) + ")");
}

void example_graphs(Check& c) {
  const qs::RegularGraph small(qt::small_graph_multiset(), qt::small_graph_parents());
  const auto p_small = qs::psi2(small);
  c.expect(p_small == qs::OrderedBlockPartition({{1}, {}, {}, {2, 3}}), "psi2 small = " + p_small.to_string());
  c.expect(qs::psi2_inverse(p_small, small.multiset()) == small, "psi2 inverse on the small graph");

  const auto m = qt::rooted_example_multiset();
  c.expect(qs::Coding(m, 5).code({5, 3}) == qs::VertexLabel::integer(6), "shifted coding of 5_3");
  c.expect(qs::Coding(m, 5).code({1, 2}) == qs::VertexLabel::integer(0), "shifted coding of 1_2");
  const qs::UnorderedVETree t(m, 5, qt::rooted_example_tree());
  qs::Psi1Trace trace;
  const auto g = qs::psi1(t, &trace);
  using V = qs::VertexLabel;
  const std::vector<V> anchors{V::integer(0), V::integer(1), V::integer(3), V::integer(4), V::integer(5),
                               V::integer(7), V::integer(8), V::singleton(4), V::singleton(8)};
  c.expect(trace.anchors == anchors, "anchor set");
  c.expect(trace.intermediate == qt::rooted_example_intermediate(), "intermediate graph");
  c.expect(trace.sinks == std::vector<int>{5, 6}, "sinks of the intermediate graph");
  c.expect(!trace.repaired, "two-step map not used");
  c.expect(g == qs::RegularGraph(m, qt::rooted_example_graph()), "psi1(T)");
  const auto p = qs::psi2(g);
  c.expect(p == qs::OrderedBlockPartition({{}, {}, {}, {}, {8}, {6, 7}, {2, 4}, {1}, {3}, {}, {5}}),
           "psi2(psi1(T)) = " + p.to_string());
  c.expect(qs::psi2_inverse(p, m) == g, "psi2 inverse");
  c.expect(qs::psi1_inverse(g) == t, "psi1 inverse");
  c.note("psi2(G_small) = " + p_small.to_string() + ", psi2(psi1(T)) = " + p.to_string());
}

void exhaustive_bijections(Check& c) {
  std::size_t trees_seen = 0;
  for (const auto& m : multisets(7)) {
    // Count oracle: quasi-Stirling words by filtering every arrangement.
    const auto words = qt::naive_quasi_stirling_words(m);
    const auto rooted = qs::enumerate_rooted(m);
    c.expect(rooted.size() == words.size() * static_cast<std::size_t>(m.block_count()),
             "|R_M| = (M-n+1)|Q_M| on " + m.to_string());

    const auto trees = qs::enumerate_trees(m);
    trees_seen += trees.size();
    std::set<qs::RootedWord> phi_images;
    std::set<qs::OrderedBlockPartition> psi_images;
    for (const auto& t : trees) {
      const auto rw = qs::phi(t);
      const auto ts = qs::tree_stats(t);
      const auto ws = qt::naive_stats(rw.word);
      c.expect_lazy(ts.cdes == ws[0] && ts.casc == ws[1] && ts.leaf_star == ws[2],
                    [&] { return "statistics on " + qs::to_string(t.root()); });
      c.expect_lazy(qs::phi_inverse(rw) == t, [&] { return "phi roundtrip on " + qs::to_string(t.root()); });
      const auto p = qs::Psi(t);
      c.expect_lazy(qs::Psi_inverse(p, m) == t, [&] { return "Psi roundtrip on " + qs::to_string(t.root()); });
      phi_images.insert(rw);
      psi_images.insert(p);
    }
    c.expect(phi_images == std::set<qs::RootedWord>(rooted.begin(), rooted.end()), "phi onto R_M for " + m.to_string());
    c.expect(psi_images.size() == trees.size(), "Psi injective on " + m.to_string());
    c.expect(BigInt(psi_images.size()) == qs::rising_factorial(m.block_count(), m.n()), "Psi onto B_{n,k} for " + m.to_string());

    const auto unordered = qs::enumerate_unordered_trees(m);
    const auto graphs = qs::enumerate_regular_graphs(m);
    std::set<qs::RegularGraph> graph_images;
    std::set<qs::OrderedBlockPartition> partition_images;
    for (const auto& u : unordered) {
      const auto g = qs::psi1(u);
      const auto p = qs::psi2(g);
      std::vector<int> sizes;
      for (const auto& b : p.blocks()) sizes.push_back(static_cast<int>(b.size()));
      const auto counts = qs::distinct_label_counts(g);
      c.expect_lazy(qs::distinct_label_counts(u) == counts && counts == sizes,
                    [&] { return "per-vertex counts on " + qs::to_string(u.to_node()); });
      c.expect_lazy(qs::psi1_inverse(g) == u, [&] { return "psi1 roundtrip on " + qs::to_string(u.to_node()); });
      c.expect_lazy(qs::psi2_inverse(p, m) == g, [&] { return "psi2 roundtrip on " + m.to_string(); });
      graph_images.insert(g);
      partition_images.insert(p);
    }
    c.expect(graph_images == std::set<qs::RegularGraph>(graphs.begin(), graphs.end()), "psi1 onto graphs for " + m.to_string());
    c.expect(partition_images.size() == graphs.size(), "psi2 injective on " + m.to_string());
  }
  c.note(std::to_string(multisets(7).size()) + " multisets, " + std::to_string(trees_seen) + " plane trees");
}

void multiset_eulerian(Check& c) {
  for (const auto& m : multisets(7)) {
    c.identity("multiset-eulerian", m);
    // Left side recomputed from the filtered arrangements.
    qs::Polynomial brute(qs::vars_xyz());
    for (const auto& w : qt::naive_quasi_stirling_words(m)) {
      const auto s = qt::naive_stats(w);
      brute.add_term({s[0], s[1], s[2]}, BigInt(m.block_count()));
    }
    c.expect(brute == qs::rhs_multiset_eulerian(m), "(M-n+1) Q(x,y,z) brute force on " + m.to_string());
  }
  for (int n = 1; n <= 3; ++n) c.identity("qstirling-eulerian-k2", stirling(n));
}

void multiset_carlitz(Check& c) {
  const std::vector<MultisetSpec> listed{MultisetSpec({2, 2}), MultisetSpec({1, 2, 1}), MultisetSpec({3, 1}),
                                         MultisetSpec({2, 2, 2})};
  for (const auto& m : listed) {
    const int n = m.n();
    const int k = m.block_count();
    const auto num = qs::qstirling_t(m) * BigInt(k);
    const auto series = qs::series_over_one_minus_t(num, m.total() + 1, 8);
    for (int j = 0; j <= 8; ++j) {
      const BigInt closed = qs::binomial(m.excess() + j, j) * boost::multiprecision::pow(BigInt(j), static_cast<unsigned>(n));
      c.expect(series[static_cast<std::size_t>(j)] == closed, "t^" + std::to_string(j) + " on " + m.to_string());
      if (j <= 4) {
        const auto barred = qs::enumerate_barred(n, k, j);
        c.expect(BigInt(barred.size()) == closed, "barred listing, " + std::to_string(j) + " bars, " + m.to_string());
      }
    }
    c.identity("multiset-carlitz", m, 8);
  }
  for (int n = 1; n <= 3; ++n) c.identity("qstirling-carlitz-k2", stirling(n));
}

void cyclic_eulerian(Check& c) {
  for (int n = 1; n <= 8; ++n) {
    c.expect(qs::cyclic_eulerian_xy(n) == qs::eulerian_xy(n - 1) * BigInt(n), "n = " + std::to_string(n));
  }
}

void classical(Check& c) {
  for (int n = 1; n <= 6; ++n) c.identity("carlitz-classic", perms(n), 12);
  for (int n = 1; n <= 6; ++n) c.identity("eulerian-egf", perms(n));
  for (int n = 1; n <= 5; ++n) c.identity("stirling-carlitz", stirling(n), 10);
}

void partial_gamma(Check& c) {
  for (const auto& m : multisets(7)) c.identity("partial-gamma", m);
  for (int n = 1; n <= 7; ++n) {
    c.identity("bivariate-gamma", perms(n));
    // The z^0 slice of the permutation case is the bivariate gamma vector.
    const auto report = qs::partial_gamma(perms(n));
    const auto g = qs::gamma_extract(qs::eulerian_xy(n), n + 1);
    for (std::size_t j = 0; j < g.gamma.size(); ++j) {
      const auto it = report.slices.find({0, static_cast<int>(j)});
      const BigInt v = it == report.slices.end() ? BigInt(0) : it->second;
      c.expect(v == g.gamma[j], "S_" + std::to_string(n) + " gamma_" + std::to_string(j));
    }
    for (const auto& [ij, v] : report.slices) {
      if (ij.first != 0) c.expect(v == 0, "S_" + std::to_string(n) + " has a z term");
    }
  }
}

void class_gf(Check& c) {
  for (const auto& m : multisets(6)) c.identity("class-gf", m);
}

void transfer_fact(Check& c) {
  for (const auto& m : multisets(6)) {
    c.identity("transfer-fact", m);
    // Partition side from separator arrangements, word side from filtered arrangements.
    std::multiset<std::array<int, 3>> parts;
    for (const auto& blocks : qt::naive_partitions(m.n(), m.block_count())) {
      const auto s = qs::partition_stats(qs::OrderedBlockPartition(blocks));
      parts.insert({s.emp, s.des, s.dd});
    }
    std::multiset<std::array<int, 3>> words;
    for (const auto& w : qt::naive_quasi_stirling_words(m)) {
      const auto sib = qs::sibling_stats(w);
      for (int r = 0; r < m.block_count(); ++r) words.insert({qt::naive_stats(w)[2], sib.sd, sib.dsd});
    }
    c.expect(parts == words, "triples on " + m.to_string());
  }
}

void catalan_count(Check& c) {
  for (int n = 1; n <= 5; ++n) {
    const auto count = qs::enumerate_quasi_stirling(stirling(n)).size();
    const auto brute = qt::naive_quasi_stirling_words(stirling(n)).size();
    // n! * C(2n, n) / (n + 1)
    long long catalan = 1;
    for (int i = 0; i < n; ++i) catalan = catalan * 2 * (2 * i + 1) / (i + 2);
    const long long expected = qt::naive_factorial(n) * catalan;
    c.expect(static_cast<long long>(count) == expected, "n = " + std::to_string(n));
    c.expect(static_cast<long long>(brute) == expected, "brute n = " + std::to_string(n));
  }
}

void sibling_table(Check& c) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : multisets(7)) {
    const auto table = qs::sibling_gamma_table(m);
    const auto report = qs::partial_gamma(m);
    c.expect(table == report.slices, "table vs gamma on " + m.to_string());
    out.push_back({{"multiset", m.multiplicities()}, {"table", qs::io::to_json(table)}});
  }
  std::ofstream("sibling_gamma_tables.json") << out.dump() << '\n';
  c.note(std::to_string(out.size()) + " tables written to sibling_gamma_tables.json");
}

struct Criterion {
  int number;
  const char* title;
  double budget_s;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "example tree: phi, statistics, roundtrip", 1, example_tree},
      {2, "example graphs: psi2, psi1 then psi2, inverses", 1, example_graphs},
      {3, "exhaustive bijections, M <= 7", 300, exhaustive_bijections},
      {4, "multiset Eulerian identity, M <= 7; k = 2 for n <= 3", 300, multiset_eulerian},
      {5, "multiset Carlitz identity and barred counts", 60, multiset_carlitz},
      {6, "cyclic Eulerian identity, n <= 8", 60, cyclic_eulerian},
      {7, "classical Carlitz, Eulerian EGF, Stirling baselines", 60, classical},
      {8, "partial gamma, M <= 7; S_n degeneration, n <= 7", 300, partial_gamma},
      {9, "class generating functions, M <= 6", 300, class_gf},
      {10, "(emp,des,dd) vs (plat,sd,dsd), M <= 6", 120, transfer_fact},
      {11, "|Q| for {1^2..n^2} = n! Catalan(n), n <= 5", 60, catalan_count},
      {12, "(plat, sd, dsd=0) table equals gamma table, M <= 7", 300, sibling_table},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < cr.budget_s;
    const bool pass = error.empty() && c.ok() && in_time;
    if (!pass) ++failures;
    std::printf("%s  [%2d] %-55s %9.3f s (budget %g s)  %s%s%s\n", pass ? "PASS" : "FAIL", cr.number, cr.title, s,
                cr.budget_s, c.summary().c_str(), error.empty() ? "" : "; exception: ", error.c_str());
    if (!in_time) std::printf("      over budget\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
