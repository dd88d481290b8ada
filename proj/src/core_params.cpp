#include "symdes/core_params.hpp"

#include <stdexcept>

namespace symdes {

AdmissibilityReport check_admissible(const Bigint& v, const Bigint& k,
                                     const Bigint& lambda) {
  AdmissibilityReport r{};
  r.identity_holds = k * (k - 1) == lambda * (v - 1);
  r.non_trivial = 2 < k && k < v - 2;
  r.flag_condition = lambda * v < k * k;
  return r;
}

DesignParams params_from_ratio(const Bigint& lambda, const Bigint& t) {
  if (lambda < 1) throw std::domain_error("params_from_ratio: lambda must be >= 1");
  if (t < 2) throw std::domain_error("params_from_ratio: t must be >= 2");
  DesignParams p{lambda * t * t - t + 1, lambda * t, lambda};
  if (p.k <= 2 || p.k >= p.v - 2)
    throw std::domain_error("params_from_ratio: trivial design (k out of (2, v-2))");
  return p;
}

ImprimitiveFamily imprimitive_family(const Bigint& lambda) {
  if (lambda < 2)
    throw std::domain_error("imprimitive_family: lambda=1 gives the trivial (3,2,1) structure");
  ImprimitiveFamily f;
  f.params = {lambda * lambda * (lambda + 2), lambda * (lambda + 1), lambda};
  f.triples = {ImprimitivityTriple{lambda * lambda, lambda + 2, lambda},
               ImprimitivityTriple{lambda + 2, lambda * lambda, 2}};
  // sanity: these identities are forced by the construction, but we refuse
  // to hand out a family object violating them.
  auto rep = check_admissible(f.params.v, f.params.k, f.params.lambda);
  if (!rep.identity_holds || !rep.non_trivial)
    throw std::logic_error("imprimitive_family: derived parameters inadmissible");
  for (const auto& tr : f.triples) {
    if (tr.c * tr.d != f.params.v || f.params.k % tr.l != 0 ||
        f.params.k / tr.l > tr.d)
      throw std::logic_error("imprimitive_family: invalid imprimitivity triple");
  }
  return f;
}

namespace {

bool is_square(const Bigint& n) {
  if (n < 0) return false;
  Bigint r = sqrt(n);
  return r * r == n;
}

// lambda = 2u^2 with u odd, u >= 3, and 2(u^2-1) a perfect square?
bool case_c_special(const Bigint& lambda) {
  if (lambda % 2 != 0) return false;
  Bigint half = lambda / 2;
  if (!is_square(half)) return false;
  Bigint u = sqrt(half);
  if (u % 2 == 0 || u < 3) return false;
  return is_square(2 * (u * u - 1));
}

}  // namespace

std::vector<CaseOutcome> praeger_zhou_filter(const Bigint& lambda) {
  if (lambda < 1) throw std::domain_error("praeger_zhou_filter: lambda must be >= 1");
  std::vector<CaseOutcome> out;

  // (a) k <= lambda(lambda-3)/2.  Incompatible with k >= lambda^2:
  // lambda^2 > lambda(lambda-3)/2 for every lambda >= 1.
  {
    CaseOutcome c{'a', false,
                  "k >= lambda^2 > lambda(lambda-3)/2 leaves no admissible k",
                  std::nullopt,
                  {}};
    out.push_back(std::move(c));
  }

  // (b) (v,k,lambda) = (l^2(l+2), l(l+1), l) with the two triples.
  {
    CaseOutcome c{'b', false, "", std::nullopt, {}};
    if (lambda < 2) {
      c.reason = "lambda=1 gives the trivial (3,2,1) structure";
    } else {
      auto fam = imprimitive_family(lambda);
      c.params = fam.params;
      c.triples.assign(fam.triples.begin(), fam.triples.end());
      c.survives = true;
    }
    out.push_back(std::move(c));
  }

  // (c) k = lambda^2/2 with congruence side conditions.  Even when those
  // hold, k < lambda^2, so the case dies under the standing hypothesis.
  {
    CaseOutcome c{'c', false, "", std::nullopt, {}};
    bool congruence = (lambda % 4 == 0) || case_c_special(lambda);
    if (!congruence) {
      c.reason = "congruence condition fails (lambda != 0 mod 4 and lambda != 2u^2 form)";
    } else {
      c.reason = "k = lambda^2/2 < lambda^2 violates k >= lambda^2";
      Bigint num_v = (lambda + 2) * (lambda * lambda - 2 * lambda + 2);
      if (num_v % 4 == 0) {
        c.params = DesignParams{num_v / 4, lambda * lambda / 2, lambda};
        c.triples = {{(lambda + 2) / 2, (lambda * lambda - 2 * lambda + 2) / 2, 2}};
      }
    }
    out.push_back(std::move(c));
  }

  // (d) k = lambda(lambda+5)/2, lambda = 1 or 3 mod 6.  k >= lambda^2
  // forces lambda <= 5, and the partition needs c,d >= 2.
  {
    CaseOutcome c{'d', false, "", std::nullopt, {}};
    Bigint m6 = lambda % 6;
    if (m6 != 1 && m6 != 3) {
      c.reason = "lambda != 1,3 mod 6";
    } else {
      Bigint k2 = lambda * (lambda + 5);  // 2k
      if (k2 < 2 * lambda * lambda) {
        c.reason = "k = lambda(lambda+5)/2 < lambda^2";
      } else {
        Bigint num_v = (lambda + 6) * (lambda * lambda + 4 * lambda - 1);
        Bigint num_d = lambda * lambda + 4 * lambda - 1;
        if (num_v % 4 != 0 || num_d % 4 != 0 || k2 % 2 != 0) {
          c.reason = "formulas non-integral";
        } else {
          DesignParams p{num_v / 4, k2 / 2, lambda};
          ImprimitivityTriple tr{lambda + 6, num_d / 4, 3};
          if (tr.c < 2 || tr.d < 2) {
            c.reason = "partition trivial (c or d < 2)";
          } else if (!check_admissible(p.v, p.k, p.lambda).identity_holds) {
            c.reason = "k(k-1) != lambda(v-1)";
          } else {
            c.params = p;
            c.triples = {tr};
            c.survives = true;
          }
        }
      }
    }
    out.push_back(std::move(c));
  }

  return out;
}

}  // namespace symdes
