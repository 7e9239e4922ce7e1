#include "swk/spectral.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

namespace swk {

ScalarField laplacian(const ScalarField& u) { return ScalarField(u.grid, u.grid->laplacian(u.values)); }

FormField ddbar_scalar(const ScalarField& u) {
  const auto& g = *u.grid;
  FormField out{u.grid, {}};
  const int n = g.n();
  std::map<std::pair<int, int>, Array> d2;
  auto second = [&](int a, int b) -> const Array& {
    auto key = std::minmax(a, b);
    auto it = d2.find(key);
    if (it == d2.end()) it = d2.emplace(key, g.derivative(u.values, {a, b})).first;
    return it->second;
  };
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const int xj = 2 * j, yj = 2 * j + 1, xk = 2 * k, yk = 2 * k + 1;
      Eigen::ArrayXcd h(u.values.size());
      h.real() = 0.25 * (second(xj, xk) + second(yj, yk));
      h.imag() = 0.25 * (second(xj, yk) - second(yj, xk));
      out.coeffs.emplace(std::make_pair(j, k), std::move(h));
    }
  return out;
}

ScalarField poisson_solve(const ScalarField& f) {
  const double m = f.mean();
  const double scale = std::sqrt((f.values * f.values).mean());
  if (std::abs(m) > 1e-12 * std::max(scale, 1e-300) && std::abs(m) > 0)
    throw ConditionError("Poisson data has nonzero mean (integrability fails)");
  return ScalarField(f.grid, f.grid->shifted_inverse(f.values, 0));
}

namespace {

void write_header(std::ofstream& os, const std::vector<int>& dims, bool complex) {
  os.write("SWKFIELD", 8);
  std::uint32_t version = 1, count = std::uint32_t(dims.size());
  os.write(reinterpret_cast<const char*>(&version), 4);
  os.write(reinterpret_cast<const char*>(&count), 4);
  for (int d : dims) {
    std::uint32_t v = std::uint32_t(d);
    os.write(reinterpret_cast<const char*>(&v), 4);
  }
  char flag = complex ? 1 : 0;
  os.write(&flag, 1);
}

std::size_t product(const std::vector<int>& dims) {
  std::size_t s = 1;
  for (int d : dims) s *= std::size_t(d);
  return s;
}

}  // namespace

void write_field_dump(const std::string& path, const std::vector<int>& dims, const Array& values) {
  if (product(dims) != std::size_t(values.size())) throw DimensionError("dump dims do not match the data");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot open field dump for writing: " + path);
  write_header(os, dims, false);
  os.write(reinterpret_cast<const char*>(values.data()), std::streamsize(sizeof(double) * values.size()));
}

void write_field_dump(const std::string& path, const std::vector<int>& dims, const Eigen::ArrayXcd& values) {
  if (product(dims) != std::size_t(values.size())) throw DimensionError("dump dims do not match the data");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot open field dump for writing: " + path);
  write_header(os, dims, true);
  os.write(reinterpret_cast<const char*>(values.data()), std::streamsize(2 * sizeof(double) * values.size()));
}

FieldDump read_field_dump(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  char magic[8];
  if (!is.read(magic, 8) || std::memcmp(magic, "SWKFIELD", 8) != 0) throw ValidationError("not a field dump: " + path);
  std::uint32_t version = 0, count = 0;
  is.read(reinterpret_cast<char*>(&version), 4);
  is.read(reinterpret_cast<char*>(&count), 4);
  if (version != 1 || count > 16) throw ValidationError("unsupported field dump header");
  FieldDump out;
  for (std::uint32_t a = 0; a < count; ++a) {
    std::uint32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), 4);
    out.dims.push_back(int(v));
  }
  char flag = 0;
  is.read(&flag, 1);
  out.complex = flag != 0;
  out.data.resize(product(out.dims) * (out.complex ? 2 : 1));
  if (!is.read(reinterpret_cast<char*>(out.data.data()), std::streamsize(sizeof(double) * out.data.size())))
    throw ValidationError("truncated field dump");
  return out;
}

}  // namespace swk
