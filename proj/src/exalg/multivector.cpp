#include <bit>
#include <sstream>

#include "swk/errors.hpp"
#include "swk/exalg.hpp"

namespace swk {

int popcount(Mask m) { return std::popcount(m); }

int merge_sign(Mask a, Mask b) {
  // Each element of a must pass every element of b that is smaller than it.
  int swaps = 0;
  for (Mask rest = a; rest; rest &= rest - 1) {
    Mask bit = rest & (~rest + 1);
    swaps += std::popcount(b & (bit - 1));
  }
  return (swaps & 1) ? -1 : 1;
}

MultiVector::MultiVector(int n) : rdim_(2 * n) {
  if (n < 1 || n > 4) throw DimensionError("complex dimension must be in 1..4");
}

MultiVector MultiVector::with_real_dim(int rdim) {
  if (rdim < 1 || rdim > 8) throw DimensionError("real dimension must be in 1..8");
  MultiVector v(1);
  v.rdim_ = rdim;
  return v;
}

MultiVector MultiVector::scalar(int n, const ExactScalar& c) { return monomial(n, 0, c); }

MultiVector MultiVector::monomial(int n, Mask m, const ExactScalar& c) {
  MultiVector v(n);
  if (m & ~v.full_mask()) throw DimensionError("monomial outside the fiber");
  v.add_term(m, c);
  return v;
}

MultiVector MultiVector::covector(int rdim, int i) {
  MultiVector v = with_real_dim(rdim);
  if (i < 0 || i >= rdim) throw DimensionError("covector index out of range");
  v.add_term(Mask(1) << i, 1);
  return v;
}

namespace {

void check_k(int n, int k) {
  if (k < 1 || k > n) throw DimensionError("coordinate index out of range");
}

}  // namespace

MultiVector MultiVector::dx(int n, int k) {
  check_k(n, k);
  return monomial(n, Mask(1) << (2 * k - 2));
}

MultiVector MultiVector::dy(int n, int k) {
  check_k(n, k);
  return monomial(n, Mask(1) << (2 * k - 1));
}

MultiVector MultiVector::dz(int n, int k) { return dx(n, k) + ExactScalar::i() * dy(n, k); }

MultiVector MultiVector::dzbar(int n, int k) { return dx(n, k) - ExactScalar::i() * dy(n, k); }

MultiVector MultiVector::omega(int n) {
  MultiVector w(n);
  for (int k = 0; k < n; ++k) w.add_term(Mask(3) << (2 * k), 1);
  return w;
}

MultiVector MultiVector::dvol(int n) {
  MultiVector v(n);
  v.add_term(v.full_mask(), 1);
  return v;
}

ExactScalar MultiVector::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ExactScalar() : it->second;
}

void MultiVector::add_term(Mask m, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> MultiVector::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = popcount(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (popcount(m) != d) return std::nullopt;
  return d;
}

bool MultiVector::is_homogeneous(int k) const {
  for (const auto& [m, c] : terms_)
    if (popcount(m) != k) return false;
  return true;
}

void require_same_dim(const MultiVector& a, const MultiVector& b) {
  if (a.rdim() != b.rdim()) throw DimensionError("forms live on fibers of different dimension");
}

MultiVector& MultiVector::operator+=(const MultiVector& o) {
  require_same_dim(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& o) {
  require_same_dim(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiVector& MultiVector::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string MultiVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (m == 0) continue;
    bool lead = true;
    for (int i = 0; i < rdim_; ++i) {
      if (!(m >> i & 1)) continue;
      if (!lead) os << "^";
      lead = false;
      if (i < 2 * n()) {
        os << (i % 2 ? "dy" : "dx") << (i / 2 + 1);
      } else {
        os << "e" << (i + 1);
      }
    }
  }
  return os.str();
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
  require_same_dim(a, b);
  MultiVector out = MultiVector::with_real_dim(a.rdim());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      ExactScalar c = ca * cb;
      if (merge_sign(ma, mb) < 0) c = -c;
      out.add_term(ma | mb, c);
    }
  return out;
}

MultiVector interior(int i, const MultiVector& xi) {
  MultiVector out = MultiVector::with_real_dim(xi.rdim());
  const Mask bit = Mask(1) << i;
  for (const auto& [m, c] : xi.terms()) {
    if (!(m & bit)) continue;
    out.add_term(m & ~bit, (popcount(m & (bit - 1)) & 1) ? -c : c);
  }
  return out;
}

MultiVector contract(const MultiVector& alpha, const MultiVector& xi) {
  require_same_dim(alpha, xi);
  if (!alpha.is_homogeneous(1)) throw ArgumentError("contract expects a 1-form");
  MultiVector out = MultiVector::with_real_dim(xi.rdim());
  for (const auto& [m, a] : alpha.terms()) out += a.conj() * interior(std::countr_zero(m), xi);
  return out;
}

MultiVector hodge_star(const MultiVector& xi) {
  MultiVector out = MultiVector::with_real_dim(xi.rdim());
  const Mask full = xi.full_mask();
  for (const auto& [m, c] : xi.terms()) {
    Mask comp = full & ~m;
    out.add_term(comp, merge_sign(m, comp) < 0 ? -c : c);
  }
  return out;
}

MultiVector conj(const MultiVector& xi) {
  MultiVector out = MultiVector::with_real_dim(xi.rdim());
  for (const auto& [m, c] : xi.terms()) out.add_term(m, c.conj());
  return out;
}

ExactScalar inner(const MultiVector& a, const MultiVector& b) {
  require_same_dim(a, b);
  ExactScalar s;
  for (const auto& [m, c] : a.terms()) {
    auto it = b.terms().find(m);
    if (it != b.terms().end()) s += c * it->second.conj();
  }
  return s;
}

MultiVector power(const MultiVector& a, int k) {
  MultiVector out = MultiVector::with_real_dim(a.rdim());
  out.add_term(0, 1);
  for (int j = 0; j < k; ++j) out = wedge(out, a);
  return out;
}

namespace {

struct PairTerm {
  unsigned pattern;
  ExactScalar c;
};

// Per coordinate pair, real pattern (bit0 dx, bit1 dy) to complex pattern (bit0 dz, bit1 dzbar).
const std::vector<PairTerm>& real_to_complex(unsigned pattern) {
  static const std::vector<PairTerm> table[4] = {
      {{0, 1}},
      {{1, ExactScalar::frac(1, 2)}, {2, ExactScalar::frac(1, 2)}},
      {{1, -ExactScalar::i() * ExactScalar::frac(1, 2)}, {2, ExactScalar::i() * ExactScalar::frac(1, 2)}},
      {{3, ExactScalar::i() * ExactScalar::frac(1, 2)}}};
  return table[pattern];
}

const std::vector<PairTerm>& complex_to_real(unsigned pattern) {
  static const std::vector<PairTerm> table[4] = {{{0, 1}},
                                                 {{1, 1}, {2, ExactScalar::i()}},
                                                 {{1, 1}, {2, -ExactScalar::i()}},
                                                 {{3, -ExactScalar::i() * ExactScalar(2)}}};
  return table[pattern];
}

template <class Table>
std::map<Mask, ExactScalar> change_basis(int n, const std::map<Mask, ExactScalar>& in, Table table) {
  std::map<Mask, ExactScalar> cur = in, next;
  for (int k = 0; k < n; ++k) {
    next.clear();
    const int sh = 2 * k;
    for (const auto& [m, c] : cur) {
      unsigned pat = (m >> sh) & 3u;
      Mask rest = m & ~(Mask(3) << sh);
      for (const auto& t : table(pat)) {
        auto& slot = next[rest | (Mask(t.pattern) << sh)];
        slot += c * t.c;
      }
    }
    cur.clear();
    for (auto& [m, c] : next)
      if (!c.is_zero()) cur.emplace(m, std::move(c));
  }
  return cur;
}

void require_even(const MultiVector& xi) {
  if (xi.rdim() % 2) throw DimensionError("complex structure needs an even-dimensional fiber");
}

}  // namespace

std::map<Mask, ExactScalar> to_complex_basis(const MultiVector& xi) {
  require_even(xi);
  return change_basis(xi.n(), xi.terms(), real_to_complex);
}

MultiVector from_complex_basis(int n, const std::map<Mask, ExactScalar>& c) {
  MultiVector out(n);
  for (auto& [m, v] : change_basis(n, c, complex_to_real)) out.add_term(m, v);
  return out;
}

std::pair<int, int> pq_type(Mask m) {
  return {popcount(m & 0x55555555u), popcount(m & 0xAAAAAAAAu)};
}

MultiVector PQSplit::component(int p, int q, int n) const {
  auto it = components.find({p, q});
  return it == components.end() ? MultiVector(n) : it->second;
}

MultiVector PQSplit::reassemble(int n) const {
  MultiVector out(n);
  for (const auto& [pq, v] : components) out += v;
  return out;
}

PQSplit pq_split(const MultiVector& xi) {
  std::map<std::pair<int, int>, std::map<Mask, ExactScalar>> parts;
  for (auto& [m, c] : to_complex_basis(xi)) parts[pq_type(m)].emplace(m, c);
  PQSplit out;
  for (const auto& [pq, cs] : parts) out.components.emplace(pq, from_complex_basis(xi.n(), cs));
  return out;
}

MultiVector pq_component(const MultiVector& xi, int p, int q) {
  std::map<Mask, ExactScalar> part;
  for (auto& [m, c] : to_complex_basis(xi))
    if (pq_type(m) == std::make_pair(p, q)) part.emplace(m, c);
  return from_complex_basis(xi.n(), part);
}

SdAsdSplit sd_asd_split(const MultiVector& xi) {
  require_even(xi);
  const int n = xi.n();
  if (!xi.is_homogeneous(n)) throw ArgumentError("sd/asd splitting needs a middle-degree form");
  const ExactScalar half = ExactScalar::frac(1, 2);
  MultiVector s = hodge_star(xi);
  if (n % 2) {
    // ** = -1: eigenvalues +-i.
    s *= ExactScalar::i();
    return {half * (xi - s), half * (xi + s)};
  }
  return {half * (xi + s), half * (xi - s)};
}

MultiVector Lefschetz3Split::reassemble() const {
  const MultiVector w = MultiVector::omega(3);
  return beta30 + beta03 + wedge(eta01 + eta10, w) + gamma12 + gamma21;
}

namespace {

// eta of the given type with eta^omega^2 = mixed^omega, and the primitive remainder.
std::pair<MultiVector, MultiVector> lefschetz_part(const MultiVector& mixed, bool bar) {
  const MultiVector w = MultiVector::omega(3);
  const MultiVector w2 = wedge(w, w);
  const MultiVector target = wedge(mixed, w);
  MultiVector eta(3);
  for (int k = 1; k <= 3; ++k) {
    MultiVector e = bar ? MultiVector::dzbar(3, k) : MultiVector::dz(3, k);
    MultiVector ew2 = wedge(e, w2);
    eta += (inner(target, ew2) / inner(ew2, ew2)) * e;
  }
  MultiVector gamma = mixed - wedge(eta, w);
  if (!wedge(gamma, w).is_zero()) throw ValidationError("Lefschetz remainder is not primitive");
  return {eta, gamma};
}

}  // namespace

Lefschetz3Split lefschetz_split_3form(const MultiVector& beta, bool require_real) {
  if (beta.rdim() != 6) throw DimensionError("Lefschetz splitting is implemented on C^3");
  if (!beta.is_homogeneous(3)) throw ArgumentError("Lefschetz splitting expects a 3-form");
  if (require_real && conj(beta) != beta) throw ValidationError("3-form is not real");
  PQSplit s = pq_split(beta);
  Lefschetz3Split out{s.component(3, 0, 3), s.component(0, 3, 3), MultiVector(3),
                      MultiVector(3),        MultiVector(3),        MultiVector(3)};
  std::tie(out.eta01, out.gamma12) = lefschetz_part(s.component(1, 2, 3), true);
  std::tie(out.eta10, out.gamma21) = lefschetz_part(s.component(2, 1, 3), false);
  return out;
}

}  // namespace swk
