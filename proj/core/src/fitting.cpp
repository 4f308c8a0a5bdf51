#include "fitt/fitting.hpp"

#include <algorithm>
#include <map>

#include "fitt/betti.hpp"
#include "fitt/errors.hpp"

namespace fitt {

Presentation taylor_presentation_of(const PolynomialRing& ring,
                                    const std::vector<Monomial>& generators) {
  const int m = static_cast<int>(generators.size());
  if (m == 0) throw PreconditionViolated("taylor presentation needs a nonzero ideal");
  PolyMatrix a(m, m * (m - 1) / 2);
  int col = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j, ++col) {
      Monomial l = generators[i].lcm(generators[j]);
      a.set(i, col, Polynomial(l / generators[i], 1));
      a.set(j, col, Polynomial(l / generators[j], -1));
    }
  }
  return {MonomialIdeal(ring, generators), std::move(a), generators};
}

Presentation taylor_presentation(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw PreconditionViolated("taylor presentation needs a nonzero ideal");
  return taylor_presentation_of(ideal.ring(), ideal.gens());
}

bool row_relation_holds(const Presentation& p) {
  const int m = p.matrix.rows();
  for (int c = 0; c < p.matrix.cols(); ++c) {
    Polynomial acc;
    for (int r = 0; r < m; ++r)
      acc += Polynomial(p.generator_order[r], 1) * p.matrix.at(r, c);
    if (!acc.is_zero()) return false;
  }
  return true;
}

namespace {

// rows with a nonzero entry in column c, restricted to the taylor structure
std::vector<int> nonzero_rows(const PolyMatrix& a, int c) {
  std::vector<int> out;
  for (int r = 0; r < a.rows(); ++r)
    if (!a.at(r, c).is_zero()) out.push_back(r);
  return out;
}

// greedy augmenting-path matching: can every chosen column be assigned a
// distinct row? columns have at most two candidate rows here.
struct ColumnMatcher {
  std::vector<std::vector<int>> candidates;  // per chosen column
  std::map<int, int> row_owner;              // row -> column position

  bool augment(int col, std::vector<char>& visited) {
    for (int r : candidates[col]) {
      if (visited[r]) continue;
      visited[r] = 1;
      auto it = row_owner.find(r);
      if (it == row_owner.end() || augment(it->second, visited)) {
        row_owner[r] = col;
        return true;
      }
    }
    return false;
  }

  // try to add a column with the given candidate rows; false when the
  // matching cannot be extended (and the column is not kept)
  bool push(const std::vector<int>& rows, int max_row_index) {
    candidates.push_back(rows);
    std::vector<char> visited(max_row_index + 1, 0);
    if (augment(static_cast<int>(candidates.size()) - 1, visited)) return true;
    candidates.pop_back();
    return false;
  }
  void pop(int col_position) {
    candidates.pop_back();
    for (auto it = row_owner.begin(); it != row_owner.end();) {
      if (it->second == col_position)
        it = row_owner.erase(it);
      else
        ++it;
    }
  }
};

}  // namespace

MonomialIdeal fitting_ideal_of_generators(const PolynomialRing& ring,
                                          const std::vector<Monomial>& generators, int j,
                                          std::int64_t max_minors) {
  if (j < 0) throw PreconditionViolated("fitting index must be non-negative");
  const int m = static_cast<int>(generators.size());
  if (m == 0) return MonomialIdeal::unit(ring);  // zero module
  if (j >= m) return MonomialIdeal::unit(ring);
  const int t = m - j;

  Presentation p = taylor_presentation_of(ring, generators);
  const PolyMatrix& a = p.matrix;
  if (t > a.cols()) return MonomialIdeal::zero(ring);

  const std::int64_t nr = binomial(m, t), nc = binomial(a.cols(), t);
  if (nr > max_minors / std::max<std::int64_t>(nc, 1) || nr * nc > max_minors)
    throw BudgetExceeded("fitting_ideal needs " + std::to_string(nr) + "*" +
                         std::to_string(nc) + " submatrices, budget " +
                         std::to_string(max_minors));

  std::vector<std::vector<int>> col_rows(a.cols());
  for (int c = 0; c < a.cols(); ++c) col_rows[c] = nonzero_rows(a, c);

  // keep the collected generators minimal as we go; large sweeps would
  // otherwise accumulate millions of dominated monomials
  std::vector<Monomial> basis, pending;
  auto fold = [&]() {
    if (pending.empty()) return;
    std::vector<Monomial> all = basis;
    all.insert(all.end(), pending.begin(), pending.end());
    basis = minimalize(ring, std::move(all)).gens();
    pending.clear();
  };
  auto offer = [&](const Monomial& mono) {
    for (const auto& b : basis)
      if (b.divides(mono)) return;
    for (const auto& q : pending)
      if (q.divides(mono)) return;
    pending.push_back(mono);
    if (pending.size() >= 1024) fold();
  };

  std::vector<int> rows(t);
  std::vector<char> in_row_set;
  std::vector<int> chosen_cols;

  // iterate row subsets lexicographically
  auto next_subset = [](std::vector<int>& s, int n) {
    int k = static_cast<int>(s.size());
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return false;
    ++s[i];
    for (int q = i + 1; q < k; ++q) s[q] = s[q - 1] + 1;
    return true;
  };

  for (int i = 0; i < t; ++i) rows[i] = i;
  do {
    in_row_set.assign(m, 0);
    for (int r : rows) in_row_set[r] = 1;

    ColumnMatcher matcher;
    chosen_cols.clear();

    // DFS over columns in increasing order; a column set without a perfect
    // matching into the row set has an identically zero minor and is pruned
    auto rec = [&](auto&& self, int from) -> void {
      if (static_cast<int>(chosen_cols.size()) == t) {
        Polynomial det = determinant(a.submatrix(rows, chosen_cols));
        for (const auto& [mono, coeff] : det.terms()) offer(mono);
        return;
      }
      const int need = t - static_cast<int>(chosen_cols.size());
      for (int c = from; c <= a.cols() - need; ++c) {
        std::vector<int> cand;
        for (int r : col_rows[c])
          if (in_row_set[r]) cand.push_back(r);
        if (cand.empty()) continue;
        if (!matcher.push(cand, m)) continue;
        chosen_cols.push_back(c);
        self(self, c + 1);
        chosen_cols.pop_back();
        matcher.pop(static_cast<int>(chosen_cols.size()));
      }
    };
    rec(rec, 0);
  } while (next_subset(rows, m));

  fold();
  return MonomialIdeal(ring, std::move(basis));
}

MonomialIdeal fitting_ideal(const MonomialIdeal& ideal, int j, std::int64_t max_minors) {
  if (ideal.is_zero()) return MonomialIdeal::unit(ideal.ring());
  return fitting_ideal_of_generators(ideal.ring(), ideal.gens(), j, max_minors);
}

std::vector<Polynomial> fitting_of_presentation(const PolyMatrix& matrix, int declared_rows,
                                                int j, std::int64_t max_minors) {
  if (j < 0) throw PreconditionViolated("fitting index must be non-negative");
  return minors(matrix, declared_rows - j, max_minors);
}

MonomialIdeal radical_fitting_support(const MonomialIdeal& ideal, int j) {
  if (j < 0) throw PreconditionViolated("fitting index must be non-negative");
  const PolynomialRing& ring = ideal.ring();
  if (ideal.is_zero()) return MonomialIdeal::unit(ring);

  std::uint32_t support = 0;
  for (const auto& g : ideal.gens()) support |= g.support_mask();
  std::vector<int> vars;
  for (int v = 0; v < 32; ++v)
    if (support & (1u << v)) vars.push_back(v);
  const int k = static_cast<int>(vars.size());

  // monomial primes qualify when mu(I_P) > j; qualification is upward closed
  std::vector<std::uint32_t> qualifying;
  for (std::uint32_t s = 0; s < (1u << k); ++s) {
    std::uint32_t mask = 0;
    for (int p = 0; p < k; ++p)
      if (s & (1u << p)) mask |= (1u << vars[p]);
    if (ideal.localized_mu(mask) > j) qualifying.push_back(mask);
  }
  if (qualifying.empty()) return MonomialIdeal::unit(ring);

  std::vector<std::uint32_t> minimal;
  for (auto q : qualifying) {
    bool keep = true;
    for (auto r : qualifying)
      if (r != q && (r & q) == r) {
        keep = false;
        break;
      }
    if (keep) minimal.push_back(q);
  }

  std::vector<Monomial> gens;
  for (auto t : minimal_transversals(std::move(minimal))) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < 32; ++v)
      if (t & (1u << v)) pairs.emplace_back(v, 1);
    gens.push_back(Monomial::from_pairs(std::move(pairs)));
  }
  return MonomialIdeal(ring, std::move(gens));
}

bool diagonal_products_within(const Presentation& p, int t, const MonomialIdeal& claimed,
                              std::int64_t max_nodes) {
  const PolyMatrix& a = p.matrix;
  if (t <= 0) return claimed.is_unit();
  if (t > a.rows() || t > a.cols()) return true;  // no products at all

  std::vector<std::vector<std::pair<int, Monomial>>> col_entries(a.cols());
  for (int c = 0; c < a.cols(); ++c)
    for (int r = 0; r < a.rows(); ++r)
      if (!a.at(r, c).is_zero())
        col_entries[c].emplace_back(r, a.at(r, c).leading().first);

  std::int64_t nodes = 0;
  auto rec = [&](auto&& self, int from, int need, std::uint32_t used_rows,
                 const Monomial& prod) -> bool {
    if (++nodes > max_nodes)
      throw BudgetExceeded("diagonal product certificate exceeded " +
                           std::to_string(max_nodes) + " nodes");
    if (claimed.contains(prod.squarefree_part())) return true;
    if (need == 0) return false;
    for (int c = from; c <= a.cols() - need; ++c) {
      for (const auto& [r, mono] : col_entries[c]) {
        if (used_rows & (1u << r)) continue;
        if (!self(self, c + 1, need - 1, used_rows | (1u << r), prod * mono))
          return false;
      }
    }
    return true;
  };
  return rec(rec, 0, t, 0, Monomial::one());
}

FittingReport verify_containment(const MonomialIdeal& ideal, std::int64_t max_minors) {
  if (ideal.is_zero() || ideal.is_unit())
    throw PreconditionViolated("verify_containment needs a proper nonzero ideal");
  FittingReport report;
  report.name = "containment";
  report.instance = ideal.str();

  const int m = ideal.mu();
  std::vector<MonomialIdeal> fitt;
  fitt.reserve(m + 1);
  for (int j = 0; j <= m; ++j) fitt.push_back(fitting_ideal(ideal, j, max_minors));

  const bool regular = ideal.is_regular_sequence();
  for (int j = 1; j <= m; ++j) {
    MonomialIdeal pw = ideal.power(m - j);
    report.check("I^(m-j) subseteq Fitt_j at j=" + std::to_string(j),
                 fitt[j].contains(pw), "power " + pw.str() + " vs " + fitt[j].str());
    if (regular)
      report.check("regular sequence equality at j=" + std::to_string(j),
                   fitt[j] == pw, fitt[j].str() + " != " + pw.str());
  }
  for (int j = 0; j < m; ++j)
    report.check("chain Fitt_" + std::to_string(j) + " subseteq Fitt_" + std::to_string(j + 1),
                 fitt[j + 1].contains(fitt[j]), fitt[j].str() + " vs " + fitt[j + 1].str());
  report.check("Fitt_m is the unit ideal", fitt[m].is_unit(), fitt[m].str());

  const int grade = ideal.height_and_grade().second;
  if (grade >= 1 && grade - 1 < m) {
    int j = grade - 1;
    report.check("Fitt_j subseteq I when grade = j+1 (j=" + std::to_string(j) + ")",
                 ideal.contains(fitt[j]), fitt[j].str() + " not inside " + ideal.str());
  }
  MonomialIdeal rad = ideal.radical();
  for (int i = 1; i <= grade - 1; ++i)
    report.check("sqrt Fitt_i = sqrt I at i=" + std::to_string(i),
                 fitt[i].radical() == rad, fitt[i].radical().str() + " != " + rad.str());
  return report;
}

FittingReport verify_radical(const MonomialIdeal& ideal, std::int64_t max_minors) {
  if (ideal.is_zero() || ideal.is_unit())
    throw PreconditionViolated("verify_radical needs a proper nonzero ideal");
  FittingReport report;
  report.name = "radical";
  report.instance = ideal.str();

  const int h = ideal.height();
  MonomialIdeal rad = ideal.radical();
  if (h <= 1) {
    report.notes.push_back("height 1: empty j range, vacuous pass");
    return report;
  }
  for (int j = 1; j <= h - 1; ++j) {
    MonomialIdeal fj = fitting_ideal(ideal, j, max_minors).radical();
    report.check("sqrt Fitt_j(I) = sqrt I at j=" + std::to_string(j), fj == rad,
                 fj.str() + " != " + rad.str());
    MonomialIdeal fr = fitting_ideal(rad, j, max_minors).radical();
    report.check("sqrt Fitt_j(I) = sqrt Fitt_j(sqrt I) at j=" + std::to_string(j),
                 fj == fr, fj.str() + " != " + fr.str());
  }
  return report;
}

TriEquivalence fitting_equality_classification(const MonomialIdeal& ideal, int j,
                                               std::int64_t max_minors) {
  if (!ideal.is_squarefree())
    throw PreconditionViolated("classification needs a squarefree ideal");
  if (j < 2) throw PreconditionViolated("classification needs j >= 2");
  const int grade = ideal.height_and_grade().second;
  if (grade < j) throw PreconditionViolated("classification needs grade >= j");

  TriEquivalence r;
  MonomialIdeal f = fitting_ideal(ideal, j - 1, max_minors);
  r.fitting_equals_ideal = (f == ideal);
  r.fitting_squarefree = f.is_squarefree();
  if (j == 2)
    r.structural = is_perfect_grade2(ideal);
  else
    r.structural = ideal.is_regular_sequence() && ideal.mu() == j;
  return r;
}

FittingReport structure_check(const MonomialIdeal& ideal, int j, std::int64_t max_minors) {
  if (!ideal.is_squarefree())
    throw PreconditionViolated("structure_check needs a radical ideal");
  if (j < 2) throw PreconditionViolated("structure_check needs j >= 2");
  const int grade = ideal.height_and_grade().second;
  if (grade < j) throw PreconditionViolated("structure_check needs grade >= j");

  FittingReport report;
  report.name = "structure";
  report.instance = ideal.str();

  MonomialIdeal f = fitting_ideal(ideal, j - 1, max_minors);
  const bool fixed_point = (f == ideal);

  if (j == 2 && fixed_point) {
    report.check("fixed point at j=2 implies height 2", ideal.height() == 2,
                 "height " + std::to_string(ideal.height()));
    const int pd = betti_pd(ideal).pd;
    report.check("fixed point at j=2 implies pd(S/I) = 2", pd == 2,
                 "pd " + std::to_string(pd));
  }

  if (fixed_point) {
    report.check("fixed point implies unmixed", ideal.is_unmixed(), "mixed heights");
    report.check("fixed point implies grade j", grade == j,
                 "grade " + std::to_string(grade));
    bool local_mu_ok = true;
    std::string bad;
    for (const auto& p : ideal.minimal_primes()) {
      std::uint32_t mask = 0;
      for (int v : p) mask |= (1u << v);
      if (ideal.localized_mu(mask) != j) {
        local_mu_ok = false;
        bad = "mu at localization differs from j";
        break;
      }
    }
    report.check("fixed point implies local mu = j at minimal primes", local_mu_ok, bad);
  }

  // hypothesis: mu(I_P) = j at every monomial prime containing I
  bool hypothesis = (grade == j);
  if (hypothesis) {
    const int n = ideal.ring().var_count();
    auto primes = ideal.minimal_primes();
    std::vector<std::uint32_t> prime_masks;
    for (const auto& p : primes) {
      std::uint32_t mask = 0;
      for (int v : p) mask |= (1u << v);
      prime_masks.push_back(mask);
    }
    for (std::uint32_t s = 0; s < (1u << n) && hypothesis; ++s) {
      bool contains_min = false;
      for (auto pm : prime_masks)
        if ((s & pm) == pm) {
          contains_min = true;
          break;
        }
      if (!contains_min) continue;
      if (ideal.localized_mu(s) != j) hypothesis = false;
    }
    if (hypothesis)
      report.check("uniform local mu = j forces Fitt_(j-1)(I) = I", fixed_point,
                   f.str() + " != " + ideal.str());
  }
  if (report.checks.empty())
    report.notes.push_back("no hypothesis triggered on this instance");
  return report;
}

}  // namespace fitt
