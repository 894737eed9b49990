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

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qmzv/text_io.hpp"
#include "qmzv/verify.hpp"

// Command-line front end.  Every subcommand wraps exactly one library
// operation (or one verification suite) and supports text or JSON output.
// Exit codes: 0 on success, 1 when a requested check fails, 2 on usage or
// input errors.

namespace qmzv {
namespace cli_detail {

inline DiamondRule rule_from_name(const std::string& s) {
  if (s == "shuffle") return DiamondRule::Shuffle;
  if (s == "stuffle") return DiamondRule::Stuffle;
  if (s == "sz") return DiamondRule::SZStuffle;
  if (s == "balanced") return DiamondRule::Balanced;
  throw std::invalid_argument("unknown rule '" + s + "' (expected shuffle|stuffle|sz|balanced)");
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer token '" + cur + "'");
    }
    if (pos != cur.size()) throw std::invalid_argument("bad integer token '" + cur + "'");
    out.push_back(v);
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ',' || ch == ' ')
      flush();
    else
      cur += ch;
  }
  flush();
  return out;
}

// "a:b,c:d" -> {(a,b),(c,d)}
inline std::vector<std::pair<int, int>> parse_pair_list(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    const size_t colon = cur.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("bad exponent pair '" + cur + "' (expected a:b)");
    const std::vector<int> a = parse_int_list(cur.substr(0, colon));
    const std::vector<int> b = parse_int_list(cur.substr(colon + 1));
    if (a.size() != 1 || b.size() != 1)
      throw std::invalid_argument("bad exponent pair '" + cur + "' (expected a:b)");
    out.emplace_back(a[0], b[0]);
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ',')
      flush();
    else
      cur += ch;
  }
  flush();
  return out;
}

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

inline RationalSeries read_series(const std::string& path, std::istream& in) {
  return series_from_json(Json::parse(read_input(path, in)));
}

inline void require_alphabet(const Word& w, Alphabet a, const std::string& what) {
  if (w.alphabet() != a)
    throw std::invalid_argument(what + " expects a word over " + alphabet_name(a));
}

// The evaluation used by zf-reduce and zf-equal: X-words through the
// shuffle-regularized map, Y-words through the stuffle-regularized map,
// B-words through the projection p.
inline ZfElement evaluate_zf(const Word& w) {
  switch (w.alphabet()) {
    case Alphabet::X:
      return zeta_sh_f(w);
    case Alphabet::Y:
      return zeta_st_f(w);
    default:
      return p_project(w);
  }
}

}  // namespace cli_detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
  using namespace cli_detail;

  CLI::App app{"exact quasi-shuffle word algebras, graded quotients and q-series", "qmzv"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"text", "json"};

  // --- word-level algebra -----------------------------------------------
  std::string pr_u, pr_v, pr_rule, pr_format = "text";
  CLI::App* product = app.add_subcommand("product", "quasi-shuffle product of two words");
  product->add_option("u", pr_u, "left word, e.g. \"b1\" or \"b2 b0\"")->required();
  product->add_option("v", pr_v, "right word")->required();
  product->add_option("--rule", pr_rule, "shuffle|stuffle|sz|balanced")->required();
  product->add_option("--format", pr_format, "text|json")->check(CLI::IsMember(formats));

  std::string cp_w, cp_rule, cp_format = "text";
  CLI::App* coproduct = app.add_subcommand(
      "coproduct", "deconcatenation coproduct, or the product-dual coproduct with --rule");
  coproduct->add_option("w", cp_w, "word")->required();
  coproduct->add_option("--rule", cp_rule, "dualize this product instead: shuffle|stuffle|sz|balanced");
  coproduct->add_option("--format", cp_format, "text|json")->check(CLI::IsMember(formats));

  std::string an_w, an_format = "text";
  CLI::App* antipode = app.add_subcommand("antipode", "Hopf antipode of a B-word");
  antipode->add_option("w", an_w, "word over b")->required();
  antipode->add_option("--format", an_format, "text|json")->check(CLI::IsMember(formats));

  std::string ta_w, ta_format = "text";
  CLI::App* tau_cmd = app.add_subcommand("tau", "the involution tau on B-words");
  tau_cmd->add_option("w", ta_w, "word over b, not starting with b0")->required();
  tau_cmd->add_option("--format", ta_format, "text|json")->check(CLI::IsMember(formats));

  std::string rg_w, rg_kind = "balanced", rg_format = "text";
  CLI::App* reg = app.add_subcommand("reg", "regularization maps");
  reg->add_option("w", rg_w, "word")->required();
  reg->add_option("--kind", rg_kind, "balanced|shuffle|stuffle|t-inverse")
      ->check(CLI::IsMember({"balanced", "shuffle", "stuffle", "t-inverse"}));
  reg->add_option("--format", rg_format, "text|json")->check(CLI::IsMember(formats));

  // --- graded quotients ---------------------------------------------------
  std::string gr_w, gr_format = "text";
  CLI::App* gf_reduce = app.add_subcommand("gf-reduce", "normal form in the balanced quotient algebra");
  gf_reduce->add_option("w", gr_w, "word over b")->required();
  gf_reduce->add_option("--format", gr_format, "text|json")->check(CLI::IsMember(formats));

  int gd_weight = 6;
  CLI::App* gf_dim = app.add_subcommand("gf-dim", "graded dimension of the balanced quotient");
  gf_dim->add_option("--weight", gd_weight, "weight (default 6)");

  int rs_weight = 6;
  std::string rs_algebra = "gf", rs_format = "text";
  CLI::App* rel_space = app.add_subcommand("rel-space", "row-reduced basis of a relation space");
  rel_space->add_option("--weight", rs_weight, "weight (default 6)");
  rel_space->add_option("--algebra", rs_algebra, "gf|zf")->check(CLI::IsMember({"gf", "zf"}));
  rel_space->add_option("--format", rs_format, "text|json")->check(CLI::IsMember(formats));

  std::string zr_w, zr_format = "text";
  CLI::App* zf_reduce = app.add_subcommand(
      "zf-reduce", "evaluate a word in the formal value algebra and reduce it");
  zf_reduce->add_option("w", zr_w, "word over x, y or b")->required();
  zf_reduce->add_option("--format", zr_format, "text|json")->check(CLI::IsMember(formats));

  std::string ze_u, ze_v;
  int ze_weight = -1;
  CLI::App* zf_equal = app.add_subcommand(
      "zf-equal", "equality of two formal values modulo the double-shuffle relations");
  zf_equal->add_option("u", ze_u, "word over x, y or b")->required();
  zf_equal->add_option("v", ze_v, "word over x, y or b")->required();
  zf_equal->add_option("--weight", ze_weight, "comparison weight (default: max weight present)");

  std::string pp_w, pp_format = "text";
  int pp_weight = 6;
  bool pp_reduce = false;
  CLI::App* project = app.add_subcommand("project-p", "projection p of a B-word into the value algebra");
  project->add_option("w", pp_w, "word over b")->required();
  project->add_option("--weight", pp_weight, "maximum admissible weight (default 6)");
  project->add_flag("--reduce", pp_reduce, "print the double-shuffle normal form");
  project->add_option("--format", pp_format, "text|json")->check(CLI::IsMember(formats));

  // --- schemes and series --------------------------------------------------
  std::string cd_file, cd_lambda, cd_format = "text";
  CLI::App* check_dm_cmd = app.add_subcommand(
      "check-dm", "double-shuffle membership test on a series JSON file ('-' for stdin)");
  check_dm_cmd->add_option("file", cd_file, "series JSON file or -")->required();
  check_dm_cmd->add_option("--lambda", cd_lambda, "normalization value for the x0.x1 coefficient");
  check_dm_cmd->add_option("--format", cd_format, "text|json")->check(CLI::IsMember(formats));

  std::string cb_file, cb_norm, cb_format = "text";
  CLI::App* check_bm_cmd = app.add_subcommand(
      "check-bm", "balanced membership test on a series JSON file ('-' for stdin)");
  check_bm_cmd->add_option("file", cb_file, "series JSON file or -")->required();
  check_bm_cmd->add_option("--norm", cb_norm, "b2,b4,b6 normalization values, comma separated");
  check_bm_cmd->add_option("--format", cb_format, "text|json")->check(CLI::IsMember(formats));

  std::string th_file, th_format = "text";
  bool th_invert = false;
  CLI::App* theta_cmd = app.add_subcommand("theta", "embed an X-series into a B-series (or invert)");
  theta_cmd->add_option("file", th_file, "series JSON file or -")->required();
  theta_cmd->add_flag("--invert", th_invert, "restrict a B-series back to {b0,b1}");
  theta_cmd->add_option("--format", th_format, "text|json")->check(CLI::IsMember(formats));

  std::string ih_g, ih_h, ih_format = "text";
  CLI::App* ihara = app.add_subcommand("ihara", "Ihara product of two grouplike X-series");
  ihara->add_option("left", ih_g, "series JSON file or -")->required();
  ihara->add_option("right", ih_h, "series JSON file")->required();
  ihara->add_option("--format", ih_format, "text|json")->check(CLI::IsMember(formats));

  int ld_weight = 4;
  std::string ld_format = "text";
  CLI::App* lin_dm0 = app.add_subcommand("lin-dm0", "basis of the linearized double-shuffle space");
  lin_dm0->add_option("--weight", ld_weight, "weight (default 4)");
  lin_dm0->add_option("--format", ld_format, "text|json")->check(CLI::IsMember(formats));

  int lb_weight = 4;
  std::string lb_format = "text";
  CLI::App* lin_bm0 = app.add_subcommand("lin-bm0", "basis of the linearized balanced space");
  lin_bm0->add_option("--weight", lb_weight, "weight (default 4)");
  lin_bm0->add_option("--format", lb_format, "text|json")->check(CLI::IsMember(formats));

  // --- q-series --------------------------------------------------------------
  std::string qs_kind, qs_index, qs_pairs, qs_format = "text";
  int qs_order = 50, qs_k = 2, qs_m = 0;
  CLI::App* qseries = app.add_subcommand("qseries", "expand a q-series model to a truncation order");
  qseries->add_option("--kind", qs_kind, "zeta|bracket|gen|eisenstein")
      ->required()
      ->check(CLI::IsMember({"zeta", "bracket", "gen", "eisenstein"}));
  qseries->add_option("--index", qs_index, "exponent list for zeta/bracket, e.g. 2,1");
  qseries->add_option("--pairs", qs_pairs, "u:v exponent pairs for gen, e.g. 1:0,0:2");
  qseries->add_option("--k", qs_k, "upper index for eisenstein (default 2)");
  qseries->add_option("--m", qs_m, "lower index for eisenstein (default 0)");
  qseries->add_option("--order", qs_order, "truncation order (default 50)");
  qseries->add_option("--format", qs_format, "text|json")->check(CLI::IsMember(formats));

  std::string qc_check, qc_a, qc_b, qc_k, qc_m;
  int qc_order = 50;
  CLI::App* qcheck = app.add_subcommand("qcheck", "q-series cross-validation checks");
  qcheck->add_option("--check", qc_check, "stuffle|tau|binomial|derivative")
      ->required()
      ->check(CLI::IsMember({"stuffle", "tau", "binomial", "derivative"}));
  qcheck->add_option("--a", qc_a, "left exponent list for stuffle");
  qcheck->add_option("--b", qc_b, "right exponent list for stuffle");
  qcheck->add_option("--k", qc_k, "k index list");
  qcheck->add_option("--m", qc_m, "m index list");
  qcheck->add_option("--order", qc_order, "truncation order (default 50)");

  std::string sd_file;
  CLI::App* span_dim = app.add_subcommand(
      "span-dim", "rank of the span of q-series from a JSON array file ('-' for stdin)");
  span_dim->add_option("file", sd_file, "JSON array of q-series objects, or -")->required();

  // --- verification ------------------------------------------------------------
  std::string vf_suite, vf_format = "text";
  bool vf_all = false;
  CLI::App* verify = app.add_subcommand("verify", "run the built-in verification suites");
  verify->add_option("--suite", vf_suite, "run a single suite by name");
  verify->add_flag("--all", vf_all, "run every suite (the default)");
  verify->add_option("--format", vf_format, "text|json")->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (product->parsed()) {
      const DiamondRule rule = rule_from_name(pr_rule);
      const GradedPoly result = quasi_shuffle(parse_word(pr_u), parse_word(pr_v), rule);
      out << (pr_format == "json" ? poly_to_json(result).dump() : poly_str(result)) << "\n";
      return 0;
    }

    if (coproduct->parsed()) {
      const Word w = parse_word(cp_w);
      const TensorPoly result =
          cp_rule.empty() ? delta_dec(w) : delta_dual(w, rule_from_name(cp_rule));
      out << (cp_format == "json" ? tensor_to_json(result).dump() : tensor_str(result)) << "\n";
      return 0;
    }

    if (antipode->parsed()) {
      const Word w = parse_word(an_w);
      require_alphabet(w, Alphabet::B, "antipode");
      const GradedPoly result = antipode_b(w);
      out << (an_format == "json" ? poly_to_json(result).dump() : poly_str(result)) << "\n";
      return 0;
    }

    if (tau_cmd->parsed()) {
      const Word w = parse_word(ta_w);
      require_alphabet(w, Alphabet::B, "tau");
      const Word result = tau(w);
      out << (ta_format == "json" ? word_to_json(result).dump() : word_str(result)) << "\n";
      return 0;
    }

    if (reg->parsed()) {
      const Word w = parse_word(rg_w);
      if (rg_kind == "t-inverse") {
        require_alphabet(w, Alphabet::B, "reg --kind t-inverse");
        const PolyWithT result = reg_t_inverse(GradedPoly(w));
        out << (rg_format == "json" ? poly_t_to_json(result).dump() : poly_t_str(result)) << "\n";
        return 0;
      }
      GradedPoly result(w.alphabet());
      if (rg_kind == "balanced") {
        require_alphabet(w, Alphabet::B, "reg --kind balanced");
        result = reg_balanced(GradedPoly(w));
      } else if (rg_kind == "shuffle") {
        require_alphabet(w, Alphabet::X, "reg --kind shuffle");
        result = reg_shuffle(w);
      } else {
        require_alphabet(w, Alphabet::Y, "reg --kind stuffle");
        result = reg_stuffle(w);
      }
      out << (rg_format == "json" ? poly_to_json(result).dump() : poly_str(result)) << "\n";
      return 0;
    }

    if (gf_reduce->parsed()) {
      const Word w = parse_word(gr_w);
      require_alphabet(w, Alphabet::B, "gf-reduce");
      const GradedPoly result = verify_detail::gctx().reduce(GradedPoly(w)).rep;
      out << (gr_format == "json" ? poly_to_json(result).dump() : poly_str(result)) << "\n";
      return 0;
    }

    if (gf_dim->parsed()) {
      if (gd_weight < 0) throw std::invalid_argument("weight must be nonnegative");
      out << verify_detail::gctx().dim(gd_weight) << "\n";
      return 0;
    }

    if (rel_space->parsed()) {
      if (rs_weight < 0) throw std::invalid_argument("weight must be nonnegative");
      Json rows_json = Json::array();
      std::vector<std::string> rows_text;
      if (rs_algebra == "gf") {
        GfContext& ctx = verify_detail::gctx();
        for (const RatVector& v : ctx.rel(rs_weight).basis()) {
          const GradedPoly p = ctx.basis(rs_weight).to_poly(v, Alphabet::B);
          if (rs_format == "json")
            rows_json.push_back(poly_to_json(p));
          else
            rows_text.push_back(poly_str(p));
        }
      } else {
        ZfContext& ctx = verify_detail::zctx();
        for (const RatVector& v : ctx.rel(rs_weight).basis()) {
          const ZfElement z(ctx.basis(rs_weight).to_poly(v, Alphabet::X));
          if (rs_format == "json")
            rows_json.push_back(zf_to_json(z));
          else
            rows_text.push_back(zf_str(z));
        }
      }
      if (rs_format == "json") {
        out << Json{{"algebra", rs_algebra}, {"weight", rs_weight}, {"basis", std::move(rows_json)}}
                   .dump()
            << "\n";
      } else {
        out << "dim " << rows_text.size() << "\n";
        for (const std::string& row : rows_text) out << row << "\n";
      }
      return 0;
    }

    if (zf_reduce->parsed()) {
      const ZfElement value = verify_detail::zctx().reduce(evaluate_zf(parse_word(zr_w)));
      out << (zr_format == "json" ? zf_to_json(value).dump() : zf_str(value)) << "\n";
      return 0;
    }

    if (zf_equal->parsed()) {
      const ZfElement a = evaluate_zf(parse_word(ze_u));
      const ZfElement b = evaluate_zf(parse_word(ze_v));
      const int bound = ze_weight >= 0 ? ze_weight : std::max(a.max_weight(), b.max_weight());
      const bool equal = verify_detail::zctx().equal(a, b, bound);
      out << (equal ? "true" : "false") << "\n";
      return equal ? 0 : 1;
    }

    if (project->parsed()) {
      const Word w = parse_word(pp_w);
      require_alphabet(w, Alphabet::B, "project-p");
      ZfElement value = p_project(w, pp_weight);
      if (pp_reduce) value = verify_detail::zctx().reduce(value);
      out << (pp_format == "json" ? zf_to_json(value).dump() : zf_str(value)) << "\n";
      return 0;
    }

    if (check_dm_cmd->parsed()) {
      const RationalSeries phi = read_series(cd_file, in);
      std::optional<Rational> lambda;
      if (!cd_lambda.empty()) lambda = parse_rational(cd_lambda);
      const SchemeReport rep = check_dm(phi, lambda);
      out << (cd_format == "json" ? scheme_report_to_json(rep).dump() + "\n"
                                  : scheme_report_str(rep));
      return rep.ok() ? 0 : 1;
    }

    if (check_bm_cmd->parsed()) {
      const RationalSeries Phi = read_series(cb_file, in);
      std::optional<std::array<Rational, 3>> norms;
      if (!cb_norm.empty()) {
        std::array<Rational, 3> values;
        std::istringstream split(cb_norm);
        std::string tok;
        size_t i = 0;
        while (std::getline(split, tok, ',')) {
          if (i >= 3) throw std::invalid_argument("--norm takes exactly three values");
          values[i++] = parse_rational(tok);
        }
        if (i != 3) throw std::invalid_argument("--norm takes exactly three values");
        norms = values;
      }
      const SchemeReport rep = check_bm(Phi, norms);
      out << (cb_format == "json" ? scheme_report_to_json(rep).dump() + "\n"
                                  : scheme_report_str(rep));
      return rep.ok() ? 0 : 1;
    }

    if (theta_cmd->parsed()) {
      const RationalSeries input = read_series(th_file, in);
      const RationalSeries result = th_invert ? theta_invert(input) : theta_embed(input);
      out << (th_format == "json" ? series_to_json(result).dump() : series_str(result)) << "\n";
      return 0;
    }

    if (ihara->parsed()) {
      const RationalSeries g = read_series(ih_g, in);
      const RationalSeries h = read_series(ih_h, in);
      const RationalSeries result = ihara_mul(g, h);
      out << (ih_format == "json" ? series_to_json(result).dump() : series_str(result)) << "\n";
      return 0;
    }

    if (lin_dm0->parsed() || lin_bm0->parsed()) {
      const bool dm = lin_dm0->parsed();
      const int weight = dm ? ld_weight : lb_weight;
      const std::string format = dm ? ld_format : lb_format;
      if (weight < 0) throw std::invalid_argument("weight must be nonnegative");
      const std::vector<GradedPoly> basis = dm ? linearized_dm0(weight) : linearized_bm0(weight);
      if (format == "json") {
        Json rows = Json::array();
        for (const GradedPoly& p : basis) rows.push_back(poly_to_json(p));
        out << Json{{"weight", weight}, {"basis", std::move(rows)}}.dump() << "\n";
      } else {
        out << "dim " << basis.size() << "\n";
        for (const GradedPoly& p : basis) out << poly_str(p) << "\n";
      }
      return 0;
    }

    if (qseries->parsed()) {
      if (qs_order < 0) throw std::invalid_argument("order must be nonnegative");
      QSeries f(qs_order);
      if (qs_kind == "zeta")
        f = qzeta_sz(parse_int_list(qs_index), qs_order);
      else if (qs_kind == "bracket")
        f = bracket_g(parse_int_list(qs_index), qs_order);
      else if (qs_kind == "gen")
        f = gen_partition(parse_pair_list(qs_pairs), qs_order);
      else
        f = bi_eisenstein_depth1(qs_k, qs_m, qs_order);
      out << (qs_format == "json" ? qseries_to_json(f).dump() : qseries_str(f)) << "\n";
      return 0;
    }

    if (qcheck->parsed()) {
      if (qc_order < 0) throw std::invalid_argument("order must be nonnegative");
      bool ok = false;
      std::string what;
      if (qc_check == "stuffle") {
        const Word u = word_b(parse_int_list(qc_a));
        const Word v = word_b(parse_int_list(qc_b));
        const GradedPoly expansion = quasi_shuffle(u, v, DiamondRule::SZStuffle);
        ok = qzeta_sz(expansion, qc_order) == qzeta_sz(u, qc_order) * qzeta_sz(v, qc_order);
        what = "sz-stuffle expansion of " + word_str(u) + " , " + word_str(v);
      } else if (qc_check == "tau") {
        ok = sz_tau_invariance_check(parse_int_list(qc_k), parse_int_list(qc_m), qc_order);
        what = "tau invariance for (" + qc_k + "|" + qc_m + ")";
      } else if (qc_check == "binomial") {
        ok = sz_binomial_identity_check(parse_int_list(qc_k), parse_int_list(qc_m), qc_order);
        what = "binomial expansion for (" + qc_k + "|" + qc_m + ")";
      } else {
        const std::vector<int> ks = parse_int_list(qc_k);
        const std::vector<int> ms = parse_int_list(qc_m);
        if (ks.size() != 1 || ms.size() != 1)
          throw std::invalid_argument("derivative check takes a single k and a single m");
        const int k = ks[0], m = ms[0];
        const QSeries lhs = bi_eisenstein_depth1(k, m, qc_order);
        const QSeries rhs = q_derivative(bi_eisenstein_depth1(k - m, 0, qc_order), m)
                                .scaled(Rational(factorial(k - m - 1), factorial(k - 1)));
        ok = lhs == rhs;
        what = "derivative relation for G(" + std::to_string(k) + "|" + std::to_string(m) + ")";
      }
      out << (ok ? "ok" : "MISMATCH") << ": " << what << " to q^" << qc_order << "\n";
      return ok ? 0 : 1;
    }

    if (span_dim->parsed()) {
      const Json j = Json::parse(read_input(sd_file, in));
      std::vector<QSeries> fs;
      for (const Json& fj : j) fs.push_back(qseries_from_json(fj));
      out << span_dimension(fs) << "\n";
      return 0;
    }

    if (verify->parsed()) {
      std::vector<const Criterion*> selected;
      if (!vf_suite.empty()) {
        const Criterion* c = find_criterion(vf_suite);
        if (c == nullptr) {
          err << "error: unknown suite '" << vf_suite << "'; valid names:";
          for (const Criterion& k : acceptance_criteria()) err << " " << k.name;
          err << "\n";
          return 2;
        }
        selected.push_back(c);
      } else {
        for (const Criterion& c : acceptance_criteria()) selected.push_back(&c);
      }
      bool all_ok = true;
      Json suites = Json::array();
      for (const Criterion* c : selected) {
        const auto start = std::chrono::steady_clock::now();
        const CriterionResult r = c->run();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        all_ok = all_ok && r.ok;
        if (vf_format == "json") {
          suites.push_back(Json{
              {"name", c->name}, {"title", c->title}, {"ok", r.ok}, {"ms", ms}, {"lines", r.lines}});
        } else {
          out << (r.ok ? "PASS" : "FAIL") << "  " << c->name << "  (" << ms << " ms)  "
              << c->title << "\n";
          for (const std::string& line : r.lines) out << "      " << line << "\n";
        }
      }
      if (vf_format == "json") out << Json{{"ok", all_ok}, {"suites", std::move(suites)}}.dump() << "\n";
      return all_ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no subcommand\n";
  return 2;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("qmzv");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err, in);
}

}  // namespace qmzv
