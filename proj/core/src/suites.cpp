#include "fitt/suites.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "fitt/betti.hpp"
#include "fitt/errors.hpp"
#include "fitt/graph.hpp"
#include "fitt/matrix.hpp"
#include "fitt/relative_ideal.hpp"
#include "fitt/sampling.hpp"
#include "fitt/semigroup.hpp"
#include "fitt/series.hpp"

namespace fitt {

void SuiteReport::absorb(const FittingReport& r) {
  checks += static_cast<long>(r.checks.size());
  for (const auto& c : r.checks)
    if (!c.pass) failing.push_back(c);
}

namespace {

void add_check(SuiteReport& r, const std::string& statement, const std::string& instance,
               bool ok, const std::string& witness) {
  ++r.checks;
  if (!ok) r.failing.push_back({statement, instance, false, witness});
}

std::string describe(const MonomialIdeal& ideal) {
  return std::to_string(ideal.ring().var_count()) + " vars, I = " + ideal.str();
}

std::string graph_str(const Graph& g) {
  std::string out = "n=" + std::to_string(g.n) + " edges=";
  for (size_t k = 0; k < g.edges.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(g.edges[k].first + 1) + "-" + std::to_string(g.edges[k].second + 1);
  }
  return out;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// every numerical semigroup with multiplicity <= 4 and conductor <= 20; both
// bounds only grow along the genus tree, so pruning below is exhaustive
std::vector<NumericalSemigroup> small_semigroups() {
  std::vector<NumericalSemigroup> out;
  enumerate_semigroups(19, [&](const NumericalSemigroup& s) {
    if (s.multiplicity() > 4 || s.conductor() > 20) return false;
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace

std::vector<MonomialIdeal> sample_ideals(const SuiteConfig& cfg) {
  Sampler sampler(cfg.seed);
  std::vector<MonomialIdeal> out;
  out.reserve(cfg.count);
  for (int k = 0; k < cfg.count; ++k) {
    const int vars = sampler.between(1, cfg.max_vars);
    PolynomialRing ring = PolynomialRing::with_indexed_vars(vars);
    out.push_back(sampler.ideal(ring, cfg.max_gens, cfg.max_degree));
  }
  return out;
}

SuiteReport run_containment_suite(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "containment";
  long fixed_points = 0;
  for (const auto& ideal : sample_ideals(cfg)) {
    ++r.instances;
    r.absorb(verify_containment(ideal, cfg.max_minors));
    auto [height, grade] = ideal.height_and_grade();
    if (grade < 2) continue;
    MonomialIdeal f1 = fitting_ideal(ideal, 1, cfg.max_minors);
    if (f1 != ideal) continue;
    ++fixed_points;
    const int pd = betti_pd(ideal).pd;
    add_check(r, "grade >= 2 with Fitt_1(I) = I forces height 2 and pd(S/I) = 2",
              describe(ideal), height == 2 && pd == 2,
              "height " + std::to_string(height) + ", pd " + std::to_string(pd));
  }
  r.note("Fitt_1 fixed points with grade >= 2 in the sample: " + std::to_string(fixed_points));
  return r;
}

SuiteReport run_radical_suite(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "radical";
  for (const auto& ideal : sample_ideals(cfg)) {
    ++r.instances;
    r.absorb(verify_radical(ideal, cfg.max_minors));

    if (ideal.is_unit()) continue;
    // Fitting ideals commute with inverting variables outside a prime
    std::uint32_t prime_mask = 0;
    const std::vector<std::vector<int>> primes = ideal.minimal_primes();
    for (int v : primes.front()) prime_mask |= (1u << v);
    std::uint32_t alternating = 0;
    for (int v = 0; v < ideal.ring().var_count(); v += 2) alternating |= (1u << v);
    for (std::uint32_t mask : {prime_mask, alternating}) {
      for (int j = 0; j <= ideal.mu(); ++j) {
        MonomialIdeal local_first =
            fitting_ideal(ideal.monomial_localization(mask), j, cfg.max_minors);
        MonomialIdeal fitting_first =
            fitting_ideal(ideal, j, cfg.max_minors).monomial_localization(mask);
        add_check(r, "Fitt_" + std::to_string(j) + " commutes with localization",
                  describe(ideal) + " mask " + std::to_string(mask),
                  local_first == fitting_first,
                  "localize-then-Fitt " + local_first.str() + ", Fitt-then-localize " +
                      fitting_first.str());
      }
    }
  }
  return r;
}

SuiteReport run_presentation_invariance_suite(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "presentation";
  Sampler sampler(cfg.seed);
  for (int k = 0; k < cfg.count; ++k) {
    const int vars = sampler.between(1, cfg.max_vars);
    PolynomialRing ring = PolynomialRing::with_indexed_vars(vars);
    MonomialIdeal ideal = sampler.ideal(ring, cfg.max_gens, cfg.max_degree);
    const int m = ideal.mu();

    std::vector<Monomial> extended = ideal.gens();
    extended.push_back(extended[sampler.below(m)] * sampler.monomial(vars, 2));

    ++r.instances;
    const std::string inst =
        describe(ideal) + " plus redundant " + extended.back().str(ring);
    for (int j = 0; j <= m + 1; ++j) {
      MonomialIdeal minimal_route = fitting_ideal(ideal, j, cfg.max_minors);
      MonomialIdeal redundant_route =
          fitting_ideal_of_generators(ring, extended, j, cfg.max_minors);
      add_check(r, "Fitt_" + std::to_string(j) + " survives a redundant generator", inst,
                minimal_route == redundant_route,
                "minimal route " + minimal_route.str() + ", redundant route " +
                    redundant_route.str());
    }
  }
  return r;
}

SuiteReport run_tri_equivalence_suite(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "tri-equivalence";
  PolynomialRing ring = PolynomialRing::with_indexed_vars(5);
  long below_grade = 0;

  auto process = [&](const std::vector<std::uint32_t>& masks) {
    std::vector<Monomial> gens;
    gens.reserve(masks.size());
    for (auto mask : masks) {
      std::vector<std::pair<int, int>> pairs;
      for (int v = 0; v < 5; ++v)
        if (mask & (1u << v)) pairs.push_back({v, 1});
      gens.push_back(Monomial::from_pairs(pairs));
    }
    MonomialIdeal ideal(ring, gens);
    const int grade = ideal.height_and_grade().second;
    for (int j = 2; j <= 3; ++j) {
      if (grade < j) {
        ++below_grade;
        continue;
      }
      ++r.instances;
      TriEquivalence t = fitting_equality_classification(ideal, j, cfg.max_minors);
      add_check(r, "the three conditions at j = " + std::to_string(j) + " agree",
                describe(ideal), t.consistent(),
                "Fitt = I: " + yesno(t.fitting_equals_ideal) +
                    ", squarefree: " + yesno(t.fitting_squarefree) +
                    ", structural: " + yesno(t.structural));
    }

    // unmixed height-two ideals are cover ideals of the graph formed by their
    // minimal primes; perfection then matches complement chordality
    if (grade == 2 && ideal.is_unmixed()) {
      auto primes = ideal.minimal_primes();
      std::vector<int> vertices;
      for (const auto& p : primes)
        for (int v : p) vertices.push_back(v);
      std::sort(vertices.begin(), vertices.end());
      vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
      auto position = [&](int v) {
        return static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), v) -
                                vertices.begin());
      };
      std::set<std::pair<int, int>> prime_edges;
      for (const auto& p : primes)
        prime_edges.insert({position(p[0]), position(p[1])});
      std::vector<std::pair<int, int>> complement;
      const int nv = static_cast<int>(vertices.size());
      for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b)
          if (!prime_edges.count({a, b})) complement.push_back({a, b});
      const bool chordal = is_chordal(Graph::from_edges(nv, complement));
      const bool perfect = is_perfect_grade2(ideal);
      add_check(r, "perfection matches chordality of the prime-graph complement",
                describe(ideal), chordal == perfect,
                "complement chordal " + yesno(chordal) + ", perfect " + yesno(perfect));
      ++r.instances;
    }
  };

  // exhaustive antichains of nonempty subsets of five variables, at most six
  // members; each squarefree ideal on <= 5 variables appears exactly once
  std::vector<std::uint32_t> chosen;
  auto rec = [&](auto&& self, std::uint32_t from) -> void {
    for (std::uint32_t mask = from; mask < 32; ++mask) {
      bool comparable = false;
      for (auto c : chosen)
        if ((c & mask) == c || (c & mask) == mask) {
          comparable = true;
          break;
        }
      if (comparable) continue;
      chosen.push_back(mask);
      process(chosen);
      if (chosen.size() < 6) self(self, mask + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 1);

  r.note("classification calls skipped below the grade threshold: " +
         std::to_string(below_grade));
  return r;
}

SuiteReport run_structure_suite(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "structure";
  long triggered = 0;
  for (const auto& sampled : sample_ideals(cfg)) {
    MonomialIdeal ideal = sampled.radical();
    const int grade = ideal.height_and_grade().second;
    for (int j = 2; j <= 3; ++j) {
      if (grade < j) continue;
      ++r.instances;
      ++triggered;
      r.absorb(structure_check(ideal, j, cfg.max_minors));
    }
  }
  r.note("radical instances reaching the grade threshold: " + std::to_string(triggered));
  return r;
}

SuiteReport run_edge_formula_suite(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "edge-formula";
  long tier_brute = 0, tier_certificate = 0;
  std::map<std::pair<int, int>, long> substituted;  // (m, j) -> graph count

  for (int n = 2; n <= cfg.graph_vertex_bound; ++n) {
    for (const Graph& g : graphs_up_to_iso(n)) {
      const int m = g.m();
      if (m == 0) continue;
      MonomialIdeal ideal = edge_ideal(g);
      const std::string base = graph_str(g);

      for (int j = 0; j < m; ++j) {
        const std::string inst = base + " j=" + std::to_string(j);
        MonomialIdeal formula = radical_fitting_formula(g, j, cfg.max_nodes);
        MonomialIdeal support = radical_fitting_support(ideal, j);
        add_check(r, "cover formula matches the localization radical", inst,
                  formula == support,
                  "formula " + formula.str() + ", localization " + support.str());
        ++r.instances;

        const int t = m - j;
        const std::int64_t nominal = binomial(m, t) * binomial(m * (m - 1) / 2, t);
        if (nominal <= cfg.oracle_minor_budget) {
          ++tier_brute;
          MonomialIdeal brute =
              fitting_ideal(ideal, j, cfg.oracle_minor_budget).radical();
          add_check(r, "cover formula matches the brute-force radical", inst,
                    formula == brute,
                    "formula " + formula.str() + ", brute force " + brute.str());
        } else {
          ++tier_certificate;
          ++substituted[{m, j}];
          Presentation p = taylor_presentation(ideal);
          if (j == 0) {
            add_check(r, "generator row relation certifies vanishing top minors", inst,
                      row_relation_holds(p) && formula.is_zero(),
                      "formula " + formula.str());
          } else {
            add_check(r, "diagonal products certify the minor terms stay inside", inst,
                      diagonal_products_within(p, t, formula, cfg.max_nodes),
                      "some diagonal product escapes " + formula.str());
          }
        }

        // single-variable membership against the edge-neighbourhood count
        std::vector<int> expected_vertices = radical_support_vertices(g, j);
        bool vertices_ok = true;
        std::string vertex_witness;
        for (int v = 0; v < n; ++v) {
          const bool in_formula = formula.contains(Monomial::var(v));
          const bool predicted =
              std::binary_search(expected_vertices.begin(), expected_vertices.end(), v);
          if (in_formula != predicted) {
            vertices_ok = false;
            vertex_witness = "vertex " + std::to_string(v + 1) + ": formula " +
                             yesno(in_formula) + ", count " + yesno(predicted);
            break;
          }
        }
        add_check(r, "variable membership matches the avoided-edge count", inst,
                  vertices_ok, vertex_witness);

        if (j >= 1) {
          std::vector<Monomial> vars;
          for (int v = 0; v < n; ++v) vars.push_back(Monomial::var(v));
          const bool full = formula == MonomialIdeal(ideal.ring(), vars);
          const bool above = j >= full_support_threshold(g);
          add_check(r, "full variable support exactly from the threshold on", inst,
                    full == above,
                    "radical is the variable ideal: " + yesno(full) + ", threshold " +
                        std::to_string(full_support_threshold(g)));
        }
      }
    }
  }

  r.note("brute-force oracle instances: " + std::to_string(tier_brute) +
         ", certificate oracle instances: " + std::to_string(tier_certificate));
  for (const auto& [key, count] : substituted)
    r.note("certificate oracle at m=" + std::to_string(key.first) + " j=" +
           std::to_string(key.second) + " on " + std::to_string(count) + " graph(s)");
  return r;
}

SuiteReport run_complete_graph_suite(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "complete-graphs";
  for (int n = 3; n <= 5; ++n) {
    Graph g = Graph::complete(n);
    const int m = g.m();
    MonomialIdeal ideal = edge_ideal(g);
    std::vector<Monomial> vars;
    for (int v = 0; v < n; ++v) vars.push_back(Monomial::var(v));
    MonomialIdeal variable_ideal(ideal.ring(), vars);

    for (int j = 0; j <= m; ++j) {
      ++r.instances;
      const std::string inst = "K" + std::to_string(n) + " j=" + std::to_string(j);
      MonomialIdeal formula = radical_fitting_formula(g, j, cfg.max_nodes);

      MonomialIdeal expected = MonomialIdeal::zero(ideal.ring());
      std::string piece;
      if (j == 0) {
        expected = MonomialIdeal::zero(ideal.ring());
        piece = "zero ideal";
      } else if (j <= n - 2) {
        expected = ideal;
        piece = "the edge ideal";
      } else if (j < m) {
        expected = variable_ideal;
        piece = "the variable ideal";
      } else {
        expected = MonomialIdeal::unit(ideal.ring());
        piece = "the unit ideal";
      }
      add_check(r, "piecewise table entry is " + piece, inst, formula == expected,
                "computed " + formula.str());

      if (j < m) {
        MonomialIdeal support = radical_fitting_support(ideal, j);
        add_check(r, "table entry agrees with the localization radical", inst,
                  formula == support, "localization " + support.str());
      }
    }
    r.note("K" + std::to_string(n) + " at j = " + std::to_string(n - 1) +
           ": the two proper pieces meet; the computed radical is the variable ideal, "
           "not the edge ideal");
  }
  return r;
}

SuiteReport run_semigroup_suite(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "semigroup";
  long twogen_count = 0, colon_count = 0, power_count = 0;

  for (const auto& s : small_semigroups()) {
    const long c = s.conductor();
    std::vector<long> elems;
    for (long x = 0; x <= c + 3; ++x)
      if (s.contains(x)) elems.push_back(x);

    std::vector<RelativeIdeal> ideals;
    for (size_t ai = 0; ai < elems.size(); ++ai)
      for (size_t bi = ai + 1; bi < elems.size(); ++bi) {
        if (s.contains(elems[bi] - elems[ai])) continue;
        ideals.emplace_back(s, std::vector<long>{elems[ai], elems[bi]});
      }

    for (const auto& ideal : ideals) {
      ++r.instances;
      ++twogen_count;
      RelativeIdeal trace = rel_trace(ideal);
      Fitting1Result res = fitting1_series(ideal, trace, cfg.max_nodes);
      add_check(r, "two-generator Fitting ideal equals the trace ideal",
                s.str() + " I = " + ideal.str(),
                res.equals_target && res.fitting == trace,
                "series verdict " + yesno(res.equals_target) + ", minors " +
                    res.fitting.str() + ", trace " + trace.str());
    }

    auto colon_check = [&](const RelativeIdeal& e, const RelativeIdeal& f) {
      ++r.instances;
      ++colon_count;
      RelativeIdeal q = rel_colon(e, f);
      const long fr = std::max(s.frobenius(), 0L);
      const long lo = e.min_gen() - f.gens().back() - 1;
      const long hi = q.min_gen() + c + fr + 2;
      bool ok = true;
      std::string witness;
      for (long z = lo; z <= hi && ok; ++z) {
        bool member = true;
        for (long gen : f.gens())
          if (!e.contains(z + gen)) {
            member = false;
            break;
          }
        if (member != q.contains(z)) {
          ok = false;
          witness = "degree " + std::to_string(z) + ": scan " + yesno(member) +
                    ", colon " + yesno(q.contains(z));
        }
      }
      add_check(r, "colon agrees with the exhaustive window scan",
                s.str() + " (" + e.str() + " : " + f.str() + ")", ok, witness);
    };
    if (ideals.size() >= 2) {
      colon_check(ideals.front(), ideals.back());
      colon_check(ideals.back(), ideals.front());
      colon_check(ideals[ideals.size() / 2], ideals[ideals.size() / 3]);
    }

    auto power_check = [&](const RelativeIdeal& ideal) {
      const int m = ideal.mu();
      if (m < 2 || m > 4) return;
      ++r.instances;
      ++power_count;
      RelativeIdeal f1 = fitting1_ideal(ideal, cfg.max_nodes);
      RelativeIdeal tp = rel_power(rel_trace(ideal), m - 1);
      bool ok = true;
      std::string witness;
      for (long gen : tp.gens())
        if (!f1.contains(gen)) {
          ok = false;
          witness = "t^" + std::to_string(gen) + " outside " + f1.str();
          break;
        }
      add_check(r, "trace power tr(I)^{m-1} lies inside Fitt_1",
                s.str() + " I = " + ideal.str(), ok, witness);
    };
    if (!ideals.empty()) {
      power_check(ideals.front());
      power_check(ideals[ideals.size() / 2]);
      power_check(ideals.back());
    }
    if (elems.size() >= 4)
      power_check(RelativeIdeal(s, {elems[1], elems[2], elems[3]}));
    if (elems.size() >= 6)
      power_check(RelativeIdeal(s, {elems[1], elems[3], elems[5]}));
    if (elems.size() >= 5)
      power_check(RelativeIdeal(s, {elems[1], elems[2], elems[3], elems[4]}));
  }

  // multiplicity-two family: the trace-fixed ideals below conductor + 2
  for (int k = 1; k <= 5; ++k) {
    NumericalSemigroup s = NumericalSemigroup::from_generators({2, 2L * k + 1});
    const long c = s.conductor();
    std::vector<long> pool;
    for (long x = 0; x <= c + 1; ++x)
      if (s.contains(x)) pool.push_back(x);

    std::set<std::vector<long>> seen;
    std::set<std::vector<long>> solutions;
    for (std::uint32_t mask = 1; mask < (1u << pool.size()); ++mask) {
      std::vector<long> gens;
      for (size_t p = 0; p < pool.size(); ++p)
        if (mask & (1u << p)) gens.push_back(pool[p]);
      RelativeIdeal ideal(s, gens);
      if (ideal.is_ring()) continue;
      if (!seen.insert(ideal.gens()).second) continue;
      ++r.instances;
      RelativeIdeal f1 = fitting1_ideal(ideal, cfg.max_nodes);
      RelativeIdeal trace = rel_trace(ideal);
      const bool fitting_fixed = f1 == ideal;
      const bool trace_fixed = trace == ideal;
      add_check(r, "Fitt_1(I) = I exactly when I is a trace ideal",
                s.str() + " I = " + ideal.str(), fitting_fixed == trace_fixed,
                "Fitt_1 " + f1.str() + ", trace " + trace.str());
      if (fitting_fixed) solutions.insert(ideal.gens());
    }

    std::set<std::vector<long>> expected;
    for (long i = 1; i <= k; ++i)
      expected.insert({2 * (k - i + 1), 2L * k + 1});
    std::string got;
    for (const auto& sol : solutions) {
      if (!got.empty()) got += " ";
      got += RelativeIdeal(s, sol).str();
    }
    add_check(r, "the Fitting-fixed ideals are exactly the two-generator family",
              s.str(), solutions == expected, "found " + got);
    ++r.instances;
  }

  // symmetric <=> type 1 <=> principal canonical ideal
  long equivalence_count = 0;
  enumerate_semigroups(cfg.max_genus, [&](const NumericalSemigroup& s) {
    ++r.instances;
    ++equivalence_count;
    const bool symmetric = s.is_symmetric();
    const bool type_one = s.type() == 1;
    const bool principal = canonical_ideal(s).mu() == 1;
    add_check(r, "symmetric, type one, and principal canonical ideal coincide", s.str(),
              symmetric == type_one && type_one == principal,
              "symmetric " + yesno(symmetric) + ", type " + std::to_string(s.type()) +
                  ", canonical " + canonical_ideal(s).str());
    return true;
  });

  r.note("two-generator oracle instances: " + std::to_string(twogen_count));
  r.note("colon window scans: " + std::to_string(colon_count));
  r.note("trace-power containments: " + std::to_string(power_count));
  r.note("Gorenstein equivalence sweep size: " + std::to_string(equivalence_count));
  return r;
}

SuiteReport run_semigroup_examples_suite(const SuiteConfig& cfg) {
  SuiteReport r;
  r.suite = "semigroup-examples";

  // the multiplicity-two family <2, 2k+1> with the fractional ideal (1, t^{2i-1})
  for (long k = 1; k <= 5; ++k) {
    NumericalSemigroup s = NumericalSemigroup::from_generators({2, 2 * k + 1});
    for (long i = 1; i <= k; ++i) {
      ++r.instances;
      const std::string inst =
          s.str() + " J = (0, " + std::to_string(2 * i - 1) + ")";
      RelativeIdeal fractional(s, {0, 2 * i - 1});
      RelativeIdeal expected(s, {2 * (k - i + 1), 2 * k + 1});

      RelativeIdeal honest = shift_into_ring(fractional);
      add_check(r, "the minimal shift lands on the predicted ideal", inst,
                honest == expected, "shifted to " + honest.str());

      RelativeIdeal trace = rel_trace(honest);
      add_check(r, "trace route gives the predicted ideal", inst, trace == expected,
                "trace " + trace.str());

      RelativeIdeal direct = fitting1_ideal(fractional, cfg.max_nodes);
      add_check(r, "Fitting ideal of the fractional ideal is shift invariant", inst,
                direct == expected, "computed " + direct.str());

      Fitting1Result res = fitting1_series(honest, expected, cfg.max_nodes);
      add_check(r, "series route confirms the predicted ideal", inst,
                res.equals_target && res.fitting == expected,
                "verdict " + yesno(res.equals_target) + ", minors " + res.fitting.str());
    }
  }

  // <4, 5> with the four-generator ideal fixed by Fitt_1
  {
    NumericalSemigroup s = NumericalSemigroup::from_generators({4, 5});
    RelativeIdeal ideal(s, {12, 13, 14, 15});
    ++r.instances;
    Fitting1Result res = fitting1_series(ideal, ideal, cfg.max_nodes);
    add_check(r, "Fitt_1((t^12, t^13, t^14, t^15)) equals the ideal itself",
              s.str() + " I = " + ideal.str(), res.equals_target,
              "minors gave " + res.fitting.str());

    RelativeIdeal maximal(s, {4, 5});
    ++r.instances;
    Fitting1Result res_m = fitting1_series(maximal, maximal, cfg.max_nodes);
    add_check(r, "Fitt_1 of the maximal ideal is the maximal ideal",
              s.str() + " I = " + maximal.str(), res_m.equals_target,
              "minors gave " + res_m.fitting.str());

    SemigroupPresentation pres = semigroup_presentation(ideal);
    ++r.instances;
    add_check(r, "pairwise relation matrix has one column per generator pair",
              s.str() + " I = " + ideal.str(),
              static_cast<int>(pres.columns.size()) >= 6 && pres.m() == 4,
              std::to_string(pres.columns.size()) + " columns");

    RelativeIdeal two(s, {12, 13});
    SemigroupPresentation pres2 = semigroup_presentation(two);
    std::vector<long> degrees;
    for (const auto& col : pres2.columns) degrees.push_back(col.d);
    ++r.instances;
    add_check(r, "the (t^12, t^13) relation degrees are 17 and 28",
              s.str() + " I = " + two.str(),
              degrees == std::vector<long>({17, 28}),
              "computed degrees " + std::to_string(degrees.size()) + " entries");
  }

  // relative-ideal arithmetic on <2, 5>
  {
    NumericalSemigroup s = NumericalSemigroup::from_generators({2, 5});
    RelativeIdeal j1(s, {0, 1});
    RelativeIdeal j3(s, {0, 3});
    ++r.instances;
    add_check(r, "(1, t) has inverse and trace (t^4, t^5)", s.str() + " J = " + j1.str(),
              rel_inverse(j1) == RelativeIdeal(s, {4, 5}) &&
                  rel_trace(j1) == RelativeIdeal(s, {4, 5}),
              "inverse " + rel_inverse(j1).str() + ", trace " + rel_trace(j1).str());
    ++r.instances;
    add_check(r, "(1, t^3) has inverse and trace (t^2, t^5)", s.str() + " J = " + j3.str(),
              rel_inverse(j3) == RelativeIdeal(s, {2, 5}) &&
                  rel_trace(j3) == RelativeIdeal(s, {2, 5}),
              "inverse " + rel_inverse(j3).str() + ", trace " + rel_trace(j3).str());
    RelativeIdeal principal(s, {4});
    ++r.instances;
    add_check(r, "a principal ideal has trace equal to the ring",
              s.str() + " J = " + principal.str(), rel_trace(principal).is_ring(),
              "trace " + rel_trace(principal).str());

    RelativeIdeal mx(s, {4, 5});
    SemigroupPresentation pres = semigroup_presentation(mx);
    std::vector<long> degrees;
    for (const auto& col : pres.columns) degrees.push_back(col.d);
    ++r.instances;
    add_check(r, "the (t^4, t^5) relation degrees are 9 and 10",
              s.str() + " I = " + mx.str(), degrees == std::vector<long>({9, 10}),
              "computed " + std::to_string(degrees.size()) + " entries");
  }

  // canonical ideals
  {
    NumericalSemigroup s34 = NumericalSemigroup::from_generators({3, 4});
    NumericalSemigroup s45 = NumericalSemigroup::from_generators({4, 5});
    NumericalSemigroup s345 = NumericalSemigroup::from_generators({3, 4, 5});
    ++r.instances;
    add_check(r, "<3, 4> has a principal canonical ideal", s34.str(),
              canonical_ideal(s34) == RelativeIdeal(s34, {0}),
              "canonical " + canonical_ideal(s34).str());
    ++r.instances;
    add_check(r, "<4, 5> has a principal canonical ideal", s45.str(),
              canonical_ideal(s45).mu() == 1, "canonical " + canonical_ideal(s45).str());
    RelativeIdeal omega = canonical_ideal(s345);
    ++r.instances;
    add_check(r, "<3, 4, 5> has canonical ideal (1, t) with two generators", s345.str(),
              omega == RelativeIdeal(s345, {0, 1}) && omega.mu() == s345.type(),
              "canonical " + omega.str() + ", type " + std::to_string(s345.type()));

    RelativeIdeal trace = rel_trace(omega);
    ++r.instances;
    add_check(r, "the canonical trace of <3, 4, 5> is the maximal ideal", s345.str(),
              trace == RelativeIdeal(s345, {3, 4, 5}), "trace " + trace.str());
    ++r.instances;
    add_check(r, "the canonical trace is not a shift of the canonical ideal", s345.str(),
              !ideal_equal_up_to_shift(trace, omega).has_value(),
              "unexpected shift match");
  }

  // shift detection
  {
    NumericalSemigroup s25 = NumericalSemigroup::from_generators({2, 5});
    NumericalSemigroup s345 = NumericalSemigroup::from_generators({3, 4, 5});
    ++r.instances;
    auto shift = ideal_equal_up_to_shift(RelativeIdeal(s25, {4, 5}),
                                         RelativeIdeal(s25, {0, 1}));
    add_check(r, "(t^4, t^5) is the shift of (1, t) by four", s25.str(),
              shift.has_value() && *shift == 4,
              shift ? "shift " + std::to_string(*shift) : "no shift found");
    ++r.instances;
    add_check(r, "(1, t) is not a shift of the maximal ideal of <3, 4, 5>", s345.str(),
              !ideal_equal_up_to_shift(RelativeIdeal(s345, {0, 1}),
                                       RelativeIdeal(s345, {3, 4, 5}))
                   .has_value(),
              "unexpected shift match");
  }

  return r;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "containment") return run_containment_suite(cfg);
  if (name == "radical") return run_radical_suite(cfg);
  if (name == "presentation") return run_presentation_invariance_suite(cfg);
  if (name == "tri-equivalence") return run_tri_equivalence_suite(cfg);
  if (name == "structure") return run_structure_suite(cfg);
  if (name == "edge-formula") return run_edge_formula_suite(cfg);
  if (name == "complete-graphs") return run_complete_graph_suite(cfg);
  if (name == "semigroup") return run_semigroup_suite(cfg);
  if (name == "semigroup-examples") return run_semigroup_examples_suite(cfg);
  throw PreconditionViolated("unknown suite: " + name);
}

std::vector<std::string> suite_names() {
  return {"containment",     "radical",  "presentation",
          "tri-equivalence", "structure", "edge-formula",
          "complete-graphs", "semigroup", "semigroup-examples"};
}

}  // namespace fitt
