#pragma once
// Randomized identity suites shared between the unit tests and the
// acceptance gate.  Each suite returns the number of instances exercised and
// the number of failures; seeds are fixed by the caller for reproducibility.

#include <random>
#include <string>
#include <vector>

#include "specht/core.hpp"
#include "specht/combinatorics.hpp"
#include "specht/lattices.hpp"

namespace suites {

using namespace specht;

struct SuiteResult {
  long instances = 0;
  long failures = 0;
  std::vector<std::string> messages;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      if (messages.size() < 10) messages.push_back(what);
    }
  }
};

inline Permutation random_permutation(long n, std::mt19937& rng) {
  std::vector<long> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(std::move(im));
}

inline std::vector<long> random_subset(std::vector<long> pool, long k,
                                       std::mt19937& rng) {
  if (k > static_cast<long>(pool.size()))
    throw SpechtError("random_subset: k exceeds pool size");
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Identities for transposition sums against alternations across two columns
// of a tableau, on random tableaux of shapes with n <= 7.
inline SuiteResult garnir_identity_suite(unsigned seed, long target_instances) {
  SuiteResult res;
  std::mt19937 rng(seed);
  const std::vector<Partition> pool = {
      Partition::parse("3,2"),    Partition::parse("3,3"),
      Partition::parse("2,2,2"),  Partition::parse("3,3,1"),
      Partition::parse("4,3"),    Partition::parse("2,2,2,1"),
      Partition::parse("3,2,2"),  Partition::parse("2,2,1,1"),
  };
  while (res.instances < target_instances) {
    const Partition& lam = pool[rng() % pool.size()];
    long n = lam.n();
    Tableau a = act(Tableau::canonical(lam), random_permutation(n, rng));
    long p = 1 + static_cast<long>(rng() % (lam.cols() - 1));
    long q = p + 1;
    std::vector<long> colp = a.column_values(p);
    std::vector<long> colq = a.column_values(q);
    long lp = static_cast<long>(colp.size());
    long lq = static_cast<long>(colq.size());
    ++res.instances;

    // --- Recursion for the alternation over phi-union-psi, removing one
    // point from either side.
    {
      long fs = 1 + static_cast<long>(rng() % lp);
      long gs = 1 + static_cast<long>(rng() % lq);
      if (fs + gs <= 6) {
        auto phi = random_subset(colp, fs, rng);
        auto psi = random_subset(colq, gs, rng);
        long x = phi[rng() % phi.size()];
        long y = psi[rng() % psi.size()];
        FreeElement pa = polytabloid(a);
        std::vector<long> uni = phi;
        uni.insert(uni.end(), psi.begin(), psi.end());
        FreeElement lhs = column_alternate(pa, uni);
        auto minus = [](std::vector<long> v, long z) {
          v.erase(std::remove(v.begin(), v.end(), z), v.end());
          return v;
        };
        FreeElement paxy =
            act(pa, Permutation::transposition(n, x, y));
        {
          std::vector<long> rest = minus(uni, x);
          FreeElement rhs = column_alternate(pa, rest) * Int(fs) -
                            column_alternate(paxy, rest) * Int(gs);
          res.check(lhs == rhs, "one-point recursion (remove from phi), shape " +
                                    lam.str());
        }
        {
          std::vector<long> rest = minus(uni, y);
          FreeElement rhs = column_alternate(pa, rest) * Int(gs) -
                            column_alternate(paxy, rest) * Int(fs);
          res.check(lhs == rhs, "one-point recursion (remove from psi), shape " +
                                    lam.str());
        }
      }
    }

    // --- Equivariance of the transposition product under the symmetric
    // group on column p: <a>(phi,psi) s == <a>((phi)s, psi) sgn(s).
    {
      long fs = 1 + static_cast<long>(rng() % std::min(lp, lq));
      auto phi = random_subset(colp, fs, rng);
      auto psi = random_subset(colq, fs, rng);
      auto colgroup = symmetric_group_on(n, colp);
      const Permutation& s = colgroup[rng() % colgroup.size()];
      FreeElement lhs = act(multitranspose(a, phi, psi), s);
      std::vector<long> phis;
      for (long v : phi) phis.push_back(s(v));
      FreeElement rhs = multitranspose(a, phis, psi) * Int(s.sign());
      res.check(lhs == rhs, "column equivariance, shape " + lam.str());
    }

    // --- Bijection independence of the transposition product.
    {
      long fs = 1 + static_cast<long>(rng() % std::min(lp, lq));
      auto phi = random_subset(colp, fs, rng);
      auto psi = random_subset(colq, fs, rng);
      FreeElement viaSorted = multitranspose(a, phi, psi);
      std::vector<long> shuffled = psi;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      Permutation prod = Permutation::identity(n);
      for (size_t i = 0; i < phi.size(); ++i)
        prod = prod * Permutation::transposition(n, phi[i], shuffled[i]);
      res.check(viaSorted == act(polytabloid(a), prod),
                "bijection independence, shape " + lam.str());
    }

    // --- Full-column alternation collapses to a transposition sum
    // (the boundary case s + t = column length of p).
    if (lp >= 2 && lp - 1 <= lq && lp <= 5) {
      long t = 1 + static_cast<long>(rng() % std::min(lp - 1, lq));
      long s = lp - t;
      auto xi = random_subset(colp, s, rng);
      auto eta = random_subset(colq, t, rng);
      auto xibar = set_difference_sorted(colp, xi);
      std::vector<long> uni = xi;
      uni.insert(uni.end(), eta.begin(), eta.end());
      FreeElement lhs = column_alternate(polytabloid(a), uni);
      FreeElement rhs = multitranspose(a, xibar, eta) *
                        (factorial(s) * factorial(t));
      res.check(lhs == rhs, "boundary alternation collapse, shape " + lam.str());
    }

    // --- General-depth alternation: with s + t = lp + 1 - d, d >= 1:
    // (d-1)! <a> alt(xi u eta) == s! <a>(xi1bar, eta) alt(xibar).
    if (lp >= 2 && lp <= 5) {
      long smax = lp - 1;
      long s = 1 + static_cast<long>(rng() % smax);
      long tmax = std::min(lq, lp - s);
      if (tmax >= 1) {
        long t = 1 + static_cast<long>(rng() % tmax);
        long d = lp + 1 - s - t;  // >= 1
        auto xi = random_subset(colp, s, rng);
        auto eta = random_subset(colq, t, rng);
        auto xibar = set_difference_sorted(colp, xi);
        std::shuffle(xibar.begin(), xibar.end(), rng);
        std::vector<long> xibar1(xibar.begin(), xibar.begin() + t);
        std::sort(xibar.begin(), xibar.end());
        std::vector<long> uni = xi;
        uni.insert(uni.end(), eta.begin(), eta.end());
        FreeElement lhs =
            column_alternate(polytabloid(a), uni) * factorial(d - 1);
        FreeElement rhs =
            column_alternate(multitranspose(a, xibar1, eta), xibar) *
            factorial(s);
        res.check(lhs == rhs, "depth-d alternation, shape " + lam.str());

        // --- The same with an extra alternation over values from columns
        // left of p (cross-multiplied to stay integral).
        if (p >= 2 && s + t <= 4) {
          std::vector<long> left;
          for (long j = 1; j < p; ++j) {
            auto cj = a.column_values(j);
            left.insert(left.end(), cj.begin(), cj.end());
          }
          long fmax = std::min<long>(2, static_cast<long>(left.size()));
          long fsz = 1 + static_cast<long>(rng() % fmax);
          auto phi = random_subset(left, fsz, rng);
          std::vector<long> all = phi;
          all.insert(all.end(), uni.begin(), uni.end());
          FreeElement L = column_alternate(polytabloid(a), all) *
                          (factorial(s + t) * factorial(d - 1));
          FreeElement R =
              column_alternate(
                  column_alternate(multitranspose(a, xibar1, eta), xibar),
                  all) *
              factorial(s);
          res.check(L == R, "depth-d alternation with left factor, shape " +
                                lam.str());
        }
      }
    }

    // --- B/C expansion: C(i) == s!(t+i)! sum_{i0} binom(u-i0, i-i0) B(i0).
    if (lp >= 2 && lp <= 5) {
      long s = 1 + static_cast<long>(rng() % (lp - 1));
      long tmax = std::min(lq, lp - s);
      if (tmax >= 1) {
        long t = 1 + static_cast<long>(rng() % tmax);
        long u = lq - t;
        auto xi = random_subset(colp, s, rng);
        auto eta = random_subset(colq, t, rng);
        long i = static_cast<long>(rng() % (u + 1));
        if (s + t + i <= 6) {
          FreeElement lhs = eval_garnir_C(a, q, xi, eta, i);
          FreeElement rhs(a.shape());
          for (long i0 = 0; i0 <= std::min(i, s); ++i0)
            rhs += eval_garnir_B(a, q, xi, eta, i0) *
                   binomial(u - i0, i - i0);
          rhs = rhs * (factorial(s) * factorial(t + i));
          res.check(lhs == rhs, "B/C expansion, shape " + lam.str());
        }
      }
    }

    // --- B'/C' expansion.  The corrected collection identity (see the
    // decisions ledger): alternating over (xi \ psi) u phi,
    //   sum_phi <a> alt((xi\psi) u phi) alt(psi u eta)
    //     == (s-v)! v! t! i! sum_{i0} binom(t-i0,i-i0) B'(i0),
    // tested for arbitrary psi; the displayed form with alt(xi u phi) and
    // constant t!s!(i+v)! is additionally tested in its valid psi == xi case.
    if (lp >= 3 && lp <= 5) {
      long s = 2 + static_cast<long>(rng() % (lp - 2));
      long v = 1 + static_cast<long>(rng() % s);
      long tmax = std::min(lq, lp - s);
      if (tmax >= 1) {
        long t = 1 + static_cast<long>(rng() % tmax);
        auto xi = random_subset(colp, s, rng);
        auto psi = random_subset(xi, v, rng);
        auto eta = random_subset(colq, t, rng);
        long i = static_cast<long>(rng() % (t + 1));
        if (s + t + v + i <= 8) {
          FreeElement rhs(a.shape());
          for (long i0 = 0; i0 <= std::min(i, s - v); ++i0)
            rhs += eval_garnir_Bp(a, xi, psi, eta, i0) *
                   binomial(t - i0, i - i0);
          auto ximp = set_difference_sorted(xi, psi);
          std::vector<long> alt2 = psi;
          alt2.insert(alt2.end(), eta.begin(), eta.end());
          FreeElement lhs(a.shape());
          for (const auto& phi : subsets_of_size(eta, i)) {
            std::vector<long> alt1 = ximp;
            alt1.insert(alt1.end(), phi.begin(), phi.end());
            lhs += column_alternate(column_alternate(polytabloid(a), alt1),
                                    alt2);
          }
          res.check(lhs == rhs * (factorial(s - v) * factorial(v) *
                                  factorial(t) * factorial(i)),
                    "B'/C' corrected expansion, shape " + lam.str());
          if (v == s) {
            FreeElement stated = eval_garnir_Cp(a, xi, psi, eta, i);
            res.check(stated == rhs * (factorial(t) * factorial(s) *
                                       factorial(i + v)),
                      "B'/C' displayed expansion (psi == xi), shape " +
                          lam.str());
          }
        }
      }
    }
  }
  return res;
}

// Straightening cross-check: the tabloid-expansion oracle and Garnir
// rewriting agree on random non-standard polytabloids.
inline SuiteResult straightening_suite(unsigned seed, long per_shape,
                                       const std::vector<Partition>& shapes) {
  SuiteResult res;
  std::mt19937 rng(seed);
  for (const Partition& lam : shapes) {
    const SpechtBasis& basis = SpechtBasis::get(lam);
    long done = 0;
    while (done < per_shape) {
      Tableau t =
          act(Tableau::canonical(lam), random_permutation(lam.n(), rng));
      if (t.is_standard()) continue;
      ++done;
      ++res.instances;
      auto via_oracle = basis.straighten(polytabloid(t));
      auto via_rewrite = basis.straighten_by_rewriting(t);
      res.check(via_oracle == via_rewrite,
                "straightening routes disagree, shape " + lam.str());
    }
  }
  return res;
}

}  // namespace suites
