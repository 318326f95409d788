#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "planarharm/poly.hpp"

namespace planarharm {

template <class W>
nlohmann::ordered_json to_json(const BasicPoly<W>& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json t;
    std::vector<int> exps(m.nvars());
    for (std::size_t i = 0; i < m.nvars(); ++i) exps[i] = m[i];
    t["exps"] = exps;
    t["coef"] = to_string(c);
    terms.push_back(std::move(t));
  }
  nlohmann::ordered_json out;
  out["nvars"] = p.nvars();
  out["terms"] = std::move(terms);
  return out;
}

/// Accepts the canonical form; terms may come in any order and repeats add up.
template <class W = XVars>
BasicPoly<W> poly_from_json(const nlohmann::json& j) {
  const auto nvars = j.at("nvars").get<std::size_t>();
  if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("nvars out of range");
  BasicPoly<W> p(nvars);
  for (const auto& t : j.at("terms")) {
    const auto exps = t.at("exps").get<std::vector<int>>();
    if (exps.size() != nvars) throw std::invalid_argument("exponent vector length differs from nvars");
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars; ++i) m = m.with(i, exps[i]);
    p.add_term(m, parse_rational(t.at("coef").get<std::string>()));
  }
  return p;
}

template <class W>
std::string serialize(const BasicPoly<W>& p) {
  return to_json(p).dump();
}

template <class W = XVars>
BasicPoly<W> parse_poly(std::string_view text) {
  return poly_from_json<W>(nlohmann::json::parse(text));
}

namespace detail {

inline std::string latex_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

}  // namespace detail

/// e.g. "x_{1}^{2}-x_{2}^{2}".
template <class W>
std::string to_latex(const BasicPoly<W>& p, char symbol = 'x') {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (neg)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    if (m.degree() == 0 || mag != 1) out += detail::latex_rational(mag);
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      out += std::string(1, symbol) + "_{" + std::to_string(i + 1) + "}";
      if (m[i] > 1) out += "^{" + std::to_string(m[i]) + "}";
    }
  }
  return out;
}

/// Header "coef,x1,...,xN" then one row per term in grlex order.
template <class W>
std::string to_csv(const BasicPoly<W>& p, char symbol = 'x') {
  std::ostringstream os;
  os << "coef";
  for (std::size_t i = 1; i <= p.nvars(); ++i) os << ',' << symbol << i;
  os << '\n';
  for (const auto& [m, c] : p.terms()) {
    os << to_string(c);
    for (std::size_t i = 0; i < p.nvars(); ++i) os << ',' << static_cast<int>(m[i]);
    os << '\n';
  }
  return os.str();
}

}  // namespace planarharm
