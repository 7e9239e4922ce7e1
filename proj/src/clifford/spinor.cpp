#include <bit>
#include <map>
#include <mutex>
#include <sstream>

#include "swk/clifford.hpp"
#include "swk/errors.hpp"

namespace swk {

std::string to_string(Chirality c) {
  switch (c) {
    case Chirality::plus: return "plus";
    case Chirality::minus: return "minus";
    case Chirality::full: return "full";
    case Chirality::none: return "none";
  }
  return "?";
}

int full_module_rank(int dim) {
  switch (dim) {
    case 5: return 4;
    case 6: return 8;
    case 8: return 16;
    default: throw DimensionError("spinor modules exist for dims 5, 6, 8");
  }
}

int form_rdim(int dim) {
  full_module_rank(dim);
  return dim;
}

namespace {

std::string dzbar_label(const std::vector<int>& ks) {
  if (ks.empty()) return "1";
  std::string s;
  for (std::size_t j = 0; j < ks.size(); ++j) s += (j ? "^dzb" : "dzb") + std::to_string(ks[j]);
  return s;
}

void push(SpinorSpace& sp, int idx, int sign, const std::vector<int>& ks) {
  sp.index.push_back(idx);
  sp.sign.push_back(sign);
  sp.weight.push_back(1L << std::popcount(unsigned(idx)));
  sp.label.push_back(dzbar_label(ks));
}

// Sorted subsets of {1..n} of size q, in lexicographic order.
void subsets(int n, int q, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (int(cur.size()) == q) {
    out.push_back(cur);
    return;
  }
  for (int k = start; k <= n; ++k) {
    cur.push_back(k);
    subsets(n, q, k + 1, cur, out);
    cur.pop_back();
  }
}

SpinorSpace build_space(int dim, Chirality c) {
  SpinorSpace sp{dim, c, {}, {}, {}, {}};
  if (dim == 5) {
    if (c != Chirality::none) throw ArgumentError("the 5d module has no chirality");
    const char* names[4] = {"1(x)e1", "1(x)e2", "dzb(x)e1", "dzb(x)e2"};
    for (int a = 0; a < 4; ++a) {
      sp.index.push_back(a);
      sp.sign.push_back(1);
      sp.weight.push_back(a >= 2 ? 2 : 1);
      sp.label.push_back(names[a]);
    }
    return sp;
  }
  if (c == Chirality::none) throw ArgumentError("dims 6 and 8 need a chirality");
  const int n = dim / 2;
  if (dim == 6 && c == Chirality::plus) {
    // {1, dzb1^dzb2, dzb2^dzb3, dzb3^dzb1}
    push(sp, 0, 1, {});
    push(sp, 0b011, 1, {1, 2});
    push(sp, 0b110, 1, {2, 3});
    push(sp, 0b101, -1, {3, 1});
    return sp;
  }
  for (int q = 0; q <= n; ++q) {
    if (c == Chirality::plus && q % 2) continue;
    if (c == Chirality::minus && q % 2 == 0) continue;
    std::vector<std::vector<int>> subs;
    std::vector<int> cur;
    subsets(n, q, 1, cur, subs);
    for (const auto& ks : subs) {
      int idx = 0;
      for (int k : ks) idx |= 1 << (k - 1);
      push(sp, idx, 1, ks);
    }
  }
  return sp;
}

}  // namespace

const SpinorSpace& SpinorSpace::get(int dim, Chirality c) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, SpinorSpace> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(dim, int(c));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_space(dim, c)).first;
  return it->second;
}

std::vector<int> SpinorSpace::summand(int q) const {
  std::vector<int> out;
  for (int a = 0; a < rank(); ++a) {
    int deg = dim == 5 ? index[a] >> 1 : std::popcount(unsigned(index[a]));
    if (deg == q) out.push_back(a);
  }
  return out;
}

Spinor Spinor::zero(int dim, Chirality c) {
  return Spinor{dim, c, ExactVector(SpinorSpace::get(dim, c).rank())};
}

Spinor Spinor::basis(int dim, Chirality c, int a) {
  Spinor s = zero(dim, c);
  s.coeffs.at(a) = 1;
  return s;
}

Spinor& Spinor::operator+=(const Spinor& o) {
  if (dim != o.dim || chirality != o.chirality) throw DimensionError("spinors live in different modules");
  for (std::size_t a = 0; a < coeffs.size(); ++a) coeffs[a] += o.coeffs[a];
  return *this;
}

Spinor& Spinor::operator*=(const ExactScalar& c) {
  for (auto& x : coeffs) x *= c;
  return *this;
}

bool Spinor::is_zero() const {
  for (const auto& x : coeffs)
    if (!x.is_zero()) return false;
  return true;
}

std::string Spinor::str() const {
  const SpinorSpace& sp = space();
  std::ostringstream os;
  bool first = true;
  for (int a = 0; a < sp.rank(); ++a) {
    if (coeffs[a].is_zero()) continue;
    os << (first ? "" : " + ") << "(" << coeffs[a].str() << ")" << sp.label[a];
    first = false;
  }
  return first ? "0" : os.str();
}

ExactScalar hermitian(const Spinor& a, const Spinor& b) {
  if (a.dim != b.dim || a.chirality != b.chirality) throw DimensionError("spinors live in different modules");
  const SpinorSpace& sp = a.space();
  ExactScalar s;
  for (int i = 0; i < sp.rank(); ++i) s += ExactScalar(sp.weight[i]) * a.coeffs[i] * b.coeffs[i].conj();
  return s;
}

ExactScalar norm2(const Spinor& s) { return hermitian(s, s); }

namespace {

Mask index_to_complex_mask(int idx) {
  Mask m = 0;
  for (int k = 0; k < 4; ++k)
    if (idx >> k & 1) m |= Mask(1) << (2 * k + 1);
  return m;
}

int complex_mask_to_index(Mask m) {
  if (m & 0x55555555u) throw ArgumentError("form has (1,0) components and is not a spinor");
  int idx = 0;
  for (int k = 0; k < 4; ++k)
    if (m >> (2 * k + 1) & 1) idx |= 1 << k;
  return idx;
}

}  // namespace

MultiVector spinor_to_form(const Spinor& s) {
  if (s.dim == 5) throw ArgumentError("5d spinors are not forms on a complex fiber");
  const SpinorSpace& sp = s.space();
  std::map<Mask, ExactScalar> c;
  for (int a = 0; a < sp.rank(); ++a)
    if (!s.coeffs[a].is_zero())
      c[index_to_complex_mask(sp.index[a])] += sp.sign[a] < 0 ? -s.coeffs[a] : s.coeffs[a];
  return from_complex_basis(s.dim / 2, c);
}

Spinor form_to_spinor(const MultiVector& f, Chirality c) {
  const int dim = f.rdim();
  Spinor s = Spinor::zero(dim, c);
  const SpinorSpace& sp = s.space();
  for (const auto& [m, v] : to_complex_basis(f)) {
    int idx = complex_mask_to_index(m);
    int a = 0;
    while (a < sp.rank() && sp.index[a] != idx) ++a;
    if (a == sp.rank()) throw ArgumentError("form lies outside the " + to_string(c) + " module");
    s.coeffs[a] += sp.sign[a] < 0 ? -v : v;
  }
  return s;
}

Spinor tensor_spinor(const MultiVector& sigma_form, int e) {
  if (sigma_form.rdim() != 2) throw DimensionError("sigma factor must be a form on C");
  if (e != 0 && e != 1) throw ArgumentError("C^2 index must be 0 or 1");
  Spinor s = Spinor::zero(5, Chirality::none);
  for (const auto& [m, v] : to_complex_basis(sigma_form)) s.coeffs[2 * complex_mask_to_index(m) + e] += v;
  return s;
}

Spinor embed(const Spinor& s, Chirality target) {
  if (s.chirality == target) return s;
  if (s.dim == 5) throw ArgumentError("the 5d module has no chirality");
  return form_to_spinor(spinor_to_form(s), target);
}

}  // namespace swk
