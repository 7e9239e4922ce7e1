#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace swk::cli {

// Flat "section.key" -> value map; values keep their textual form.
class RunConfig {
 public:
  RunConfig(std::map<std::string, std::string> defaults, std::set<std::string> allowed);
  // Reads an INI file; unknown section.key pairs throw ConfigError.
  void load_file(const std::string& path);
  // "section.key=value".
  void set(const std::string& assignment);
  void set(const std::string& key, const std::string& value);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::string str(const std::string& key) const;
  double real(const std::string& key) const;
  int integer(const std::string& key) const;
  std::vector<int> integers(const std::string& key) const;
  std::vector<double> reals(const std::string& key) const;
  std::complex<double> complex(const std::string& key) const;
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
  std::set<std::string> allowed_;
};

std::complex<double> parse_complex(const std::string& s);
// Shortest round-trip decimal form.
std::string decimal(double x);

// Runs the command line; returns the process exit code (0 pass, 1 check failure, 2 config error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swk::cli
