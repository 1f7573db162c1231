#include "parageo/cli/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <thread>

namespace parageo {

Json ExperimentConfig::to_json() const {
  Json j;
  j["command"] = command;
  j["algebra"] = algebra;
  j["type"] = type_spec;
  j["grid"] = grid ? Json(*grid) : Json(nullptr);
  j["orders"] = orders ? Json(*orders) : Json(nullptr);
  j["suite"] = suite;
  j["x"] = x;
  j["z"] = z;
  j["second"] = second;
  j["output"] = output_path;
  j["format"] = format;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Usage, "config must be a JSON object");
  static const std::set<std::string> keys{"command", "algebra", "type", "grid", "orders", "suite",
                                          "x",       "z",       "second", "output", "format"};
  for (const auto& [key, value] : j.items())
    if (!keys.count(key)) throw Error(ErrorCode::Usage, "unknown config key '" + key + "'");
  ExperimentConfig c;
  auto text = [&](const char* key, std::string& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_string()) throw Error(ErrorCode::Usage, std::string("config key '") + key + "' must be a string");
    out = j[key].get<std::string>();
  };
  text("command", c.command);
  text("algebra", c.algebra);
  text("type", c.type_spec);
  text("suite", c.suite);
  text("x", c.x);
  text("z", c.z);
  text("second", c.second);
  text("output", c.output_path);
  text("format", c.format);
  if (j.contains("grid") && !j["grid"].is_null()) {
    if (!j["grid"].is_number_integer()) throw Error(ErrorCode::Usage, "grid must be an integer");
    c.grid = j["grid"].get<int>();
  }
  if (j.contains("orders") && !j["orders"].is_null()) {
    if (!j["orders"].is_number_unsigned()) throw Error(ErrorCode::Usage, "orders must be a positive integer");
    c.orders = j["orders"].get<unsigned>();
  }
  return c;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

}  // namespace

AlgElem parse_element(const GradedAlgebra& g, const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty element");
  if (text.front() == '[') {
    if (text.back() != ']') throw Error(ErrorCode::ParseError, "unterminated coordinate list");
    Vector v;
    std::string body = text.substr(1, text.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t comma = std::min(body.find(',', start), body.size());
      v.push_back(Scalar::parse(trim(body.substr(start, comma - start))));
      start = comma + 1;
    }
    if (v.size() != g.n_dim())
      throw Error(ErrorCode::ParseError, "expected " + std::to_string(g.n_dim()) + " coordinates over n");
    return g.n_element(v);
  }
  if (text == "0") return g.zero();

  std::vector<std::size_t> by_length(g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a) by_length[a] = a;
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](std::size_t a, std::size_t b) { return g.label(a).size() > g.label(b).size(); });

  AlgElem out = g.zero();
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    Scalar sign(1);
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = Scalar(-1);
      ++pos;
      skip();
    } else if (!first) {
      throw Error(ErrorCode::ParseError, "expected '+' or '-' at position " + std::to_string(pos));
    }
    first = false;
    Scalar coef(1);
    std::size_t label_pos = pos;
    // coefficient: "(p/q)*" or "p/q*"
    if (pos < text.size() && text[pos] == '(') {
      const std::size_t close = text.find(')', pos);
      if (close == std::string::npos || close + 1 >= text.size() || text[close + 1] != '*')
        throw Error(ErrorCode::ParseError, "malformed coefficient at position " + std::to_string(pos));
      coef = Scalar::parse(text.substr(pos + 1, close - pos - 1));
      label_pos = close + 2;
    } else if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t star = text.find('*', pos);
      if (star == std::string::npos) throw Error(ErrorCode::ParseError, "coefficient without '*' label");
      coef = Scalar::parse(trim(text.substr(pos, star - pos)));
      label_pos = star + 1;
    }
    pos = label_pos;
    skip();
    bool matched = false;
    for (std::size_t a : by_length) {
      const std::string& label = g.label(a);
      if (text.compare(pos, label.size(), label) == 0) {
        out += g.basis_elem(a) * (sign * coef);
        pos += label.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw Error(ErrorCode::ParseError, "unknown basis label at '" + text.substr(pos) + "'");
  }
  return out;
}

Json scalar_json(const Scalar& s) { return s.str(); }

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(scalar_json(s));
  return a;
}

Json element_json(const AlgElem& x) {
  Json o = Json::object();
  for (std::size_t a = 0; a < x.coords().size(); ++a)
    if (!x.coord(a).is_zero()) o[x.algebra().label(a)] = scalar_json(x.coord(a));
  return o;
}

unsigned default_workers() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("PARAGEO_WORKERS");
  if (env == nullptr || *env == '\0') return hw;
  const std::string s(env);
  if (!std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) || s.size() > 6)
    throw Error(ErrorCode::Usage, "PARAGEO_WORKERS must be a positive integer");
  const unsigned n = static_cast<unsigned>(std::stoul(s));
  if (n == 0) throw Error(ErrorCode::Usage, "PARAGEO_WORKERS must be a positive integer");
  return std::min(n, hw);
}

}  // namespace parageo
