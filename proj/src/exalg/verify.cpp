#include <string>

#include "swk/exalg_verify.hpp"

namespace swk {

namespace {

ExactScalar factorial(int n) {
  ExactScalar f = 1;
  for (int k = 2; k <= n; ++k) f *= ExactScalar(k);
  return f;
}

}  // namespace

IdentityReport verify_exalg_suite() {
  IdentityReport rep;
  rep.suite = "exalg";
  for (int n = 1; n <= 4; ++n) {
    const std::string tag = " (n=" + std::to_string(n) + ")";
    const int rdim = 2 * n;
    MultiVector w = MultiVector::omega(n);
    rep.add("omega^n / n! = dvol" + tag, power(w, n) * factorial(n).inverse() == MultiVector::dvol(n));

    bool star2 = true, star_inner = true, pq = true, wedge_sign = true, sd = true;
    const Mask full = (Mask(1) << rdim) - 1;
    for (Mask m = 0; m <= full; ++m) {
      MultiVector e = MultiVector::monomial(n, m);
      const int k = popcount(m);
      MultiVector ss = hodge_star(hodge_star(e));
      if (ss != ((k * (rdim - k)) % 2 ? -e : e)) star2 = false;
      if (wedge(e, hodge_star(e)) != inner(e, e) * MultiVector::dvol(n)) star_inner = false;
      if (pq_split(e).reassemble(n) != e) pq = false;
      if (rdim == 8 && k == 4) {
        SdAsdSplit s = sd_asd_split(e);
        if (s.plus + s.minus != e || hodge_star(s.plus) != s.plus || hodge_star(s.minus) != -s.minus) sd = false;
      }
      for (int a = 0; a < rdim; ++a) {
        MultiVector v = MultiVector::covector(rdim, a);
        if (wedge(v, e) != ((k % 2) ? -wedge(e, v) : wedge(e, v))) wedge_sign = false;
      }
    }
    rep.add("** = (-1)^{k(n-k)}" + tag, star2);
    rep.add("a ^ *a = <a,a> dvol" + tag, star_inner);
    rep.add("(p,q) components reassemble" + tag, pq);
    rep.add("1-forms graded-commute with k-forms" + tag, wedge_sign);
    if (rdim == 8) rep.add("self-dual / anti-self-dual split of 4-forms" + tag, sd);
    bool types = true;
    for (int k = 1; k <= n; ++k)
      if (pq_component(wedge(MultiVector::dz(n, k), MultiVector::dzbar(n, k)), 1, 1) !=
          wedge(MultiVector::dz(n, k), MultiVector::dzbar(n, k)))
        types = false;
    rep.add("dz_k ^ dzbar_k has type (1,1)" + tag, types);
  }
  MultiVector beta = MultiVector::dz(3, 1) + MultiVector::dzbar(3, 2);
  beta = wedge(wedge(beta, MultiVector::dz(3, 2) + MultiVector::dzbar(3, 3)), MultiVector::dzbar(3, 1) + MultiVector::dz(3, 3));
  beta = beta + conj(beta);
  Lefschetz3Split l = lefschetz_split_3form(beta, true);
  rep.add("Lefschetz split of a real 3-form reassembles", l.reassemble() == beta);
  rep.add("Lefschetz primitive parts satisfy gamma ^ omega = 0",
          wedge(l.gamma12, MultiVector::omega(3)).is_zero() && wedge(l.gamma21, MultiVector::omega(3)).is_zero());
  return rep;
}

}  // namespace swk
