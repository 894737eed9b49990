// Copyright 2026 The qmzv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "qmzv/poly.hpp"
#include "qmzv/qseries.hpp"
#include "qmzv/rational.hpp"
#include "qmzv/schemes.hpp"
#include "qmzv/series.hpp"
#include "qmzv/word.hpp"
#include "qmzv/zf.hpp"

namespace qmzv {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

// "b2.b0", "x0.x1", "y3"; the empty word prints as "1".
inline std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += '.';
    out += alphabet_letter(w.alphabet());
    out += std::to_string(l);
  }
  return out;
}

namespace detail {

// Shared sum layout: labeled terms joined with " + " / " - ", coefficient
// magnitudes prefixed with '*' unless they are 1, a bare constant when the
// label is empty, and "0" for no terms at all.
inline std::string joined_terms(const std::vector<std::pair<std::string, Rational>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [label, c] : terms) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (label.empty())
      out += rational_str(mag);
    else if (mag == 1)
      out += label;
    else
      out += rational_str(mag) + "*" + label;
  }
  return out;
}

}  // namespace detail

// "2*b1.b1 + b2"; the unit word appears as a bare constant.
inline std::string poly_str(const GradedPoly& p) {
  std::vector<std::pair<std::string, Rational>> labeled;
  for (const auto& [w, c] : p.terms()) labeled.emplace_back(w.empty() ? "" : word_str(w), c);
  return detail::joined_terms(labeled);
}

// "b2 (x) 1 + 1 (x) b2" for tensor polynomials.
inline std::string tensor_str(const TensorPoly& t) {
  std::vector<std::pair<std::string, Rational>> labeled;
  for (const auto& [k, c] : t.terms())
    labeled.emplace_back(word_str(k.first) + " (x) " + word_str(k.second), c);
  return detail::joined_terms(labeled);
}

// "b1*T + 2*b1.b0" — terms may carry powers of the formal variable T.
inline std::string poly_t_str(const PolyWithT& p) {
  std::vector<std::pair<std::string, Rational>> labeled;
  for (const auto& [key, c] : p.terms()) {
    const auto& [w, n] = key;
    std::string label = w.empty() ? "" : word_str(w);
    if (n > 0) {
      const std::string t = n == 1 ? "T" : "T^" + std::to_string(n);
      label = label.empty() ? t : label + "*" + t;
    }
    labeled.emplace_back(std::move(label), c);
  }
  return detail::joined_terms(labeled);
}

// An admissible word as "z[0,1;0,0,1]": letters grouped into blocks closed
// by each 1, so the blocks read off the index (k_1,...,k_d).
inline std::string zf_symbol_str(const Word& w) {
  std::string body;
  std::string block;
  for (int l : w.letters()) {
    if (!block.empty()) block += ',';
    block += std::to_string(l);
    if (l == 1) {
      if (!body.empty()) body += ';';
      body += block;
      block.clear();
    }
  }
  if (!block.empty()) {
    if (!body.empty()) body += ';';
    body += block;
  }
  return "z[" + body + "]";
}

// "1/2*z[0,1] - 3" for a constant plus admissible symbols.
inline std::string zf_str(const ZfElement& z) {
  std::vector<std::pair<std::string, Rational>> labeled;
  for (const auto& [w, c] : z.poly().terms())
    labeled.emplace_back(w.empty() ? "" : zf_symbol_str(w), c);
  return detail::joined_terms(labeled);
}

// "-1/24 + q + 3*q^2 + O(q^3)"; the truncation marker is always printed.
inline std::string qseries_str(const QSeries& f) {
  std::vector<std::pair<std::string, Rational>> labeled;
  for (int n = 0; n <= f.order(); ++n) {
    if (f.coeff(n) == 0) continue;
    const std::string label = n == 0 ? "" : (n == 1 ? "q" : "q^" + std::to_string(n));
    labeled.emplace_back(label, f.coeff(n));
  }
  const std::string tail = "O(q^" + std::to_string(f.order() + 1) + ")";
  if (labeled.empty()) return tail;
  return detail::joined_terms(labeled) + " + " + tail;
}

// Truncated series print as their polynomial part plus a truncation marker.
inline std::string series_str(const RationalSeries& s) {
  std::vector<std::pair<std::string, Rational>> labeled;
  for (const auto& [w, c] : s.terms()) labeled.emplace_back(w.empty() ? "" : word_str(w), c);
  std::string head = labeled.empty() ? "0" : detail::joined_terms(labeled);
  return head + " + O(weight " + std::to_string(s.bound() + 1) + ")";
}

// ---------------------------------------------------------------------------
// Word parsing
// ---------------------------------------------------------------------------

// Accepts space- or dot-separated letter tokens ("b2 b0", "b2.b0", "x0.x1");
// the alphabet is read off the letter prefixes and must be uniform.
inline Word parse_word(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (ch == ' ' || ch == '.' || ch == '\t') {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  if (tokens.empty()) throw std::invalid_argument("empty word: cannot infer an alphabet");

  auto alphabet_of = [](const std::string& tok) -> Alphabet {
    if (tok.size() < 2) throw std::invalid_argument("bad letter token '" + tok + "'");
    switch (tok.front()) {
      case 'x': return Alphabet::X;
      case 'y': return Alphabet::Y;
      case 'b': return Alphabet::B;
      default: throw std::invalid_argument("bad letter token '" + tok + "'");
    }
  };

  const Alphabet a = alphabet_of(tokens.front());
  std::vector<int> letters;
  letters.reserve(tokens.size());
  for (const std::string& tok : tokens) {
    if (alphabet_of(tok) != a)
      throw std::invalid_argument("word mixes alphabets at token '" + tok + "'");
    const std::string digits = tok.substr(1);
    for (char d : digits)
      if (d < '0' || d > '9') throw std::invalid_argument("bad letter token '" + tok + "'");
    int v = 0;
    try {
      v = std::stoi(digits);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad letter token '" + tok + "'");
    }
    if (!valid_letter(a, v)) throw std::invalid_argument("bad letter token '" + tok + "'");
    letters.push_back(v);
  }
  return Word(a, std::move(letters));
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline std::string alphabet_name(Alphabet a) { return std::string(1, alphabet_letter(a)); }

inline Alphabet alphabet_from_name(const std::string& s) {
  if (s == "x") return Alphabet::X;
  if (s == "y") return Alphabet::Y;
  if (s == "b") return Alphabet::B;
  throw std::invalid_argument("unknown alphabet '" + s + "'");
}

inline Json word_to_json(const Word& w) {
  return Json{{"alphabet", alphabet_name(w.alphabet())}, {"letters", w.letters()}};
}

inline Word word_from_json(const Json& j) {
  const Alphabet a = alphabet_from_name(j.at("alphabet").get<std::string>());
  return Word(a, j.at("letters").get<std::vector<int>>());
}

inline Json poly_to_json(const GradedPoly& p) {
  Json terms = Json::array();
  for (const auto& [w, c] : p.terms())
    terms.push_back(Json{{"word", w.letters()}, {"coeff", rational_str(c)}});
  return Json{{"alphabet", alphabet_name(p.alphabet())}, {"terms", std::move(terms)}};
}

inline GradedPoly poly_from_json(const Json& j) {
  const Alphabet a = alphabet_from_name(j.at("alphabet").get<std::string>());
  GradedPoly p(a);
  for (const Json& t : j.at("terms"))
    p.add_term(Word(a, t.at("word").get<std::vector<int>>()),
               parse_rational(t.at("coeff").get<std::string>()));
  return p;
}

inline Json tensor_to_json(const TensorPoly& t) {
  Json terms = Json::array();
  for (const auto& [k, c] : t.terms())
    terms.push_back(Json{{"left", k.first.letters()},
                         {"right", k.second.letters()},
                         {"coeff", rational_str(c)}});
  return Json{{"alphabet", alphabet_name(t.alphabet())}, {"terms", std::move(terms)}};
}

inline Json poly_t_to_json(const PolyWithT& p) {
  Json terms = Json::array();
  for (const auto& [key, c] : p.terms())
    terms.push_back(Json{{"word", key.first.letters()},
                         {"tpower", key.second},
                         {"coeff", rational_str(c)}});
  return Json{{"alphabet", "b"}, {"terms", std::move(terms)}};
}

inline Json qseries_to_json(const QSeries& f) {
  Json coeffs = Json::array();
  for (int n = 0; n <= f.order(); ++n) coeffs.push_back(rational_str(f.coeff(n)));
  return Json{{"order", f.order()}, {"coefficients", std::move(coeffs)}};
}

inline QSeries qseries_from_json(const Json& j) {
  const int order = j.at("order").get<int>();
  QSeries f(order);
  const Json& coeffs = j.at("coefficients");
  if (static_cast<int>(coeffs.size()) != order + 1)
    throw std::invalid_argument("coefficient count does not match the order");
  for (int n = 0; n <= order; ++n)
    f.set_coeff(n, parse_rational(coeffs[static_cast<size_t>(n)].get<std::string>()));
  return f;
}

inline Json zf_to_json(const ZfElement& z) {
  Json terms = Json::array();
  for (const auto& [w, c] : z.poly().terms()) {
    if (w.empty()) continue;
    terms.push_back(Json{{"word", w.letters()}, {"coeff", rational_str(c)}});
  }
  return Json{{"constant", rational_str(z.constant_term())}, {"terms", std::move(terms)}};
}

inline ZfElement zf_from_json(const Json& j) {
  GradedPoly p(Alphabet::X);
  p.add_term(Word::unit(Alphabet::X), parse_rational(j.at("constant").get<std::string>()));
  for (const Json& t : j.at("terms"))
    p.add_term(word_x(t.at("word").get<std::vector<int>>()),
               parse_rational(t.at("coeff").get<std::string>()));
  return ZfElement(std::move(p));
}

inline Json series_to_json(const RationalSeries& s) {
  Json terms = Json::array();
  for (const auto& [w, c] : s.terms())
    terms.push_back(Json{{"word", w.letters()}, {"coeff", rational_str(c)}});
  return Json{{"alphabet", alphabet_name(s.alphabet())},
              {"bound", s.bound()},
              {"terms", std::move(terms)}};
}

inline RationalSeries series_from_json(const Json& j) {
  const Alphabet a = alphabet_from_name(j.at("alphabet").get<std::string>());
  RationalSeries s(a, j.at("bound").get<int>());
  for (const Json& t : j.at("terms"))
    s.set_coeff(Word(a, t.at("word").get<std::vector<int>>()),
                parse_rational(t.at("coeff").get<std::string>()));
  return s;
}

inline Json scheme_report_to_json(const SchemeReport& r) {
  Json conditions = Json::array();
  for (const SchemeCondition& c : r.conditions) {
    Json witness = Json::array();
    for (const Word& w : c.witness) witness.push_back(word_to_json(w));
    conditions.push_back(Json{{"name", c.name},
                              {"checked", c.checked},
                              {"ok", c.ok},
                              {"witness", std::move(witness)}});
  }
  return Json{{"bound", r.bound}, {"ok", r.ok()}, {"conditions", std::move(conditions)}};
}

inline SchemeReport scheme_report_from_json(const Json& j) {
  SchemeReport r;
  r.bound = j.at("bound").get<int>();
  for (const Json& cj : j.at("conditions")) {
    SchemeCondition c;
    c.name = cj.at("name").get<std::string>();
    c.checked = cj.at("checked").get<bool>();
    c.ok = cj.at("ok").get<bool>();
    for (const Json& wj : cj.at("witness")) c.witness.push_back(word_from_json(wj));
    r.conditions.push_back(std::move(c));
  }
  return r;
}

// Human-readable report: one line per condition.
inline std::string scheme_report_str(const SchemeReport& r) {
  std::string out = "bound " + std::to_string(r.bound) + ": " + (r.ok() ? "PASS" : "FAIL") + "\n";
  for (const SchemeCondition& c : r.conditions) {
    out += "  " + c.name + ": ";
    if (!c.checked) {
      out += "not checked";
    } else if (c.ok) {
      out += "ok";
    } else {
      out += "FAIL";
      if (!c.witness.empty()) {
        out += " at";
        for (const Word& w : c.witness) out += " " + word_str(w);
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace qmzv
