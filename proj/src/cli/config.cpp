#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <sstream>

#include "swk/cli.hpp"
#include "swk/errors.hpp"

namespace swk::cli {

RunConfig::RunConfig(std::map<std::string, std::string> defaults, std::set<std::string> allowed)
    : values_(std::move(defaults)), allowed_(std::move(allowed)) {
  for (const auto& [k, v] : values_) allowed_.insert(k);
}

void RunConfig::load_file(const std::string& path) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError("cannot read config " + path + ": " + e.message());
  }
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError("config key outside a section: " + section);
    for (const auto& [key, value] : body) set(section + "." + key, value.data());
  }
}

void RunConfig::set(const std::string& assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ConfigError("expected section.key=value, got: " + assignment);
  set(assignment.substr(0, eq), assignment.substr(eq + 1));
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (!allowed_.count(key)) throw ConfigError("unknown config key: " + key);
  values_[key] = value;
}

std::string RunConfig::str(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing config key: " + key);
  return it->second;
}

double RunConfig::real(const std::string& key) const {
  std::string s = str(key);
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v))
    throw ConfigError("config key " + key + " is not a finite number: " + s);
  return v;
}

int RunConfig::integer(const std::string& key) const {
  std::string s = str(key);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ConfigError("config key " + key + " is not an integer: " + s);
  return v;
}

std::vector<int> RunConfig::integers(const std::string& key) const {
  std::istringstream is(str(key));
  std::vector<int> out;
  std::string tok;
  while (is >> tok) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw ConfigError("config key " + key + " has a non-integer entry: " + tok);
    out.push_back(v);
  }
  return out;
}

std::vector<double> RunConfig::reals(const std::string& key) const {
  std::string s = str(key);
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream is(s);
  std::vector<double> out;
  std::string tok;
  while (is >> tok) {
    double v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw ConfigError("config key " + key + " has a non-numeric entry: " + tok);
    out.push_back(v);
  }
  return out;
}

std::complex<double> RunConfig::complex(const std::string& key) const {
  try {
    return parse_complex(str(key));
  } catch (const ConfigError& e) {
    throw ConfigError("config key " + key + ": " + e.what());
  }
}

std::complex<double> parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ConfigError("empty complex number");
  auto number = [&](const std::string& t, double dflt) {
    if (t.empty() || t == "+") return dflt;
    if (t == "-") return -dflt;
    double v = 0;
    const char* b = t.data() + (t[0] == '+' ? 1 : 0);
    auto [p, ec] = std::from_chars(b, t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size()) throw ConfigError("not a complex number: " + text);
    return v;
  };
  if (s.back() != 'i') return {number(s, 0), 0};
  std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  if (split == std::string::npos) return {0, number(body, 1)};
  return {number(body.substr(0, split), 0), number(body.substr(split), 1)};
}

std::string decimal(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

}  // namespace swk::cli
