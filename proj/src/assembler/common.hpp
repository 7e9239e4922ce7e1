#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "swk/assembler.hpp"

namespace swk::detail {

struct FactorInfo {
  double degree_integral = 0;
  double certificate = 0;
};
FactorInfo factor_info(int degree);

Array section_density(const Discretization& g, const std::vector<int>& degrees, double scale2);
std::vector<double> chern_coeffs(const std::vector<int>& degrees, double sign, double& certificate);
double slope_or_throw(const std::vector<double>& coeffs, const std::string& clause);
void check_degrees(const std::vector<int>& degrees, int n, const std::string& which);

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace swk::detail
