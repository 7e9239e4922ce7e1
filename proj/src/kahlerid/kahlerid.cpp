#include "swk/kahlerid.hpp"

#include <map>
#include <random>

#include "swk/errors.hpp"

namespace swk {

namespace {

void check_n(int n) {
  if (n != 3 && n != 4) throw DimensionError("Kahler identities are checked on C^3 and C^4");
}

struct Identity {
  std::string name;
  MultiVector residual;
};

}  // namespace

HessianData HessianData::unit(int n, int j, int k) {
  check_n(n);
  HessianData h{n, ExactMatrix(n, n)};
  h.H(j, k) = 1;
  return h;
}

ExactScalar HessianData::laplacian() const { return ExactScalar(-4) * H.trace(); }

MultiVector ddbar_form(const HessianData& h) {
  check_n(h.n);
  if (h.H.rows() != h.n || h.H.cols() != h.n) throw DimensionError("Hessian shape mismatch");
  MultiVector out(h.n);
  for (int j = 0; j < h.n; ++j)
    for (int k = 0; k < h.n; ++k)
      if (!h.H(j, k).is_zero())
        out += h.H(j, k) * wedge(MultiVector::dz(h.n, j + 1), MultiVector::dzbar(h.n, k + 1));
  return out;
}

namespace {

std::vector<Identity> identities(const HessianData& h) {
  const int n = h.n;
  const ExactScalar I = ExactScalar::i();
  const MultiVector w = MultiVector::omega(n);
  const MultiVector w2 = wedge(w, w);
  const MultiVector x = ddbar_form(h);
  const ExactScalar lap = h.laplacian();
  std::vector<Identity> out;
  // <x, omega> two ways: coefficient pairing and *(x ^ *omega).
  const ExactScalar pair = inner(x, w);
  const MultiVector via_star = hodge_star(wedge(x, hodge_star(w)));
  out.push_back({"<ddbar h, omega> = (i/2) Delta h", MultiVector::scalar(n, pair - I * lap / ExactScalar(2))});
  out.push_back({"<ddbar h, omega> via *(ddbar h ^ *omega) agrees with the coefficient pairing",
                 via_star - MultiVector::scalar(n, pair)});
  if (n == 3) {
    out.push_back({"*(ddbar h ^ omega) = -ddbar h + (i/2) Delta h omega",
                   hodge_star(wedge(x, w)) - (-x + (I * lap / ExactScalar(2)) * w)});
  } else {
    out.push_back({"*(ddbar h ^ omega) = -ddbar h ^ omega + (i/4) Delta h omega^2",
                   hodge_star(wedge(x, w)) - (-wedge(x, w) + (I * lap / ExactScalar(4)) * w2)});
    out.push_back({"*(ddbar h ^ omega^2) = -2 ddbar h + i Delta h omega",
                   hodge_star(wedge(x, w2)) - (ExactScalar(-2) * x + (I * lap) * w)});
  }
  return out;
}

}  // namespace

IdentityReport check_star_identities(const HessianData& h) {
  check_n(h.n);
  IdentityReport rep;
  rep.suite = "kahler-n" + std::to_string(h.n);
  for (const auto& id : identities(h))
    rep.add(id.name, id.residual.is_zero(), id.residual.is_zero() ? "" : "residual " + id.residual.str());
  rep.require();
  return rep;
}

IdentityReport verify_kahler_suite(int n, int trials, std::uint64_t seed) {
  check_n(n);
  if (trials < 0) throw ArgumentError("trials must be nonnegative");
  std::vector<HessianData> cases;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) cases.push_back(HessianData::unit(n, j, k));
  const std::size_t units = cases.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  for (int t = 0; t < trials; ++t) {
    HessianData h{n, ExactMatrix(n, n)};
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        h.H(j, k) = GaussianRational(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
    cases.push_back(std::move(h));
  }
  std::map<std::string, std::pair<std::size_t, std::string>> passed;  // name -> (count, first failure)
  std::vector<std::string> order;
  for (std::size_t c = 0; c < cases.size(); ++c)
    for (const auto& id : identities(cases[c])) {
      auto [it, fresh] = passed.emplace(id.name, std::make_pair(std::size_t(0), std::string()));
      if (fresh) order.push_back(id.name);
      if (id.residual.is_zero()) {
        ++it->second.first;
      } else if (it->second.second.empty()) {
        it->second.second = (c < units ? "matrix unit " : "random trial ") + std::to_string(c) + ": residual " +
                            id.residual.str();
      }
    }
  IdentityReport rep;
  rep.suite = "kahler-n" + std::to_string(n);
  for (const auto& name : order) {
    const auto& [count, fail] = passed[name];
    rep.add(name + " (" + std::to_string(units) + " matrix units + " + std::to_string(trials) + " random)",
            count == cases.size(), fail);
  }
  return rep;
}

}  // namespace swk
