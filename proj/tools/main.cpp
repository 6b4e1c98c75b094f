#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <thread>

#include "ordercalc/format.hpp"
#include "ordercalc/identities.hpp"
#include "ordercalc/orderings.hpp"
#include "ordercalc/parser.hpp"

using namespace ordercalc;

namespace {

// Exit codes: 0 success, 1 a verification or agreement check failed,
// 2 any other error (bad input, parse failure, domain violation).
constexpr int kExitVerifyFailed = 1;
constexpr int kExitError = 2;

std::optional<MPoly> parse_eps_flag(const std::string& value) {
  if (value.empty()) return std::nullopt;
  return MPoly{Rational::parse(value)};
}

int run_stirling(unsigned n_max, Style style) {
  for (unsigned n = 1; n <= n_max; ++n)
    std::cout << format_stirling_row(n, stirling_row(n), style) << "\n";
  return 0;
}

bool is_normal_shaped(const Word& w) {
  bool seen_a = false;
  for (const Letter l : w.letters) {
    if (l == Letter::Annihilate)
      seen_a = true;
    else if (seen_a)
      return false;
  }
  return true;
}

bool is_anti_shaped(const Word& w) {
  bool seen_ad = false;
  for (const Letter l : w.letters) {
    if (l == Letter::Create)
      seen_ad = true;
    else if (seen_ad)
      return false;
  }
  return true;
}

// Interpret a parsed operator expression as coefficients over the s-ordered
// basis. Words must be written in the shape the declared parameter implies:
// ad-first for s != -1, a-first for s = -1 (the anti-normal products).
SOrderCoeffs coeffs_from_expr(const OperatorExpr& e, const Rational& s) {
  SOrderCoeffs out;
  out.order_param = MPoly{s};
  const bool anti = s == Rational(-1);
  for (const auto& [w, c] : e.terms()) {
    if (!(anti ? is_anti_shaped(w) : is_normal_shaped(w)))
      throw Error("word '" + format_word(w) + "' is not written in the declared s=" + s.str() +
                  " ordering");
    unsigned p = 0;
    for (const Letter l : w.letters)
      if (l == Letter::Create) ++p;
    const PQ key{p, static_cast<unsigned>(w.size()) - p};
    const auto [it, inserted] = out.coeffs.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.coeffs.erase(it);
    }
  }
  return out;
}

int run_order(const std::string& expr, const std::string& from_s, const std::string& to_s,
              const std::string& eps_value, Style style) {
  const OperatorExpr e = parse_operator(expr);
  SOrderCoeffs src = coeffs_from_expr(e, Rational::parse(from_s));
  SOrderCoeffs dst = s_transform(src, MPoly{Rational::parse(to_s)});
  if (const auto eps_sub = parse_eps_flag(eps_value)) {
    SOrderCoeffs substituted;
    substituted.order_param = dst.order_param;
    for (const auto& [pq, c] : dst.coeffs) {
      MPoly v = c.substitute(Var::Eps, *eps_sub);
      if (!v.is_zero()) substituted.coeffs.emplace(pq, std::move(v));
    }
    dst = std::move(substituted);
  }
  std::cout << format(dst, style) << "\n";
  return 0;
}

int check_weyl_agreement(unsigned n, unsigned m, unsigned cap) {
  const NormalForm via_normal = weyl_from_normal(n, m);
  const NormalForm via_anti = weyl_from_antinormal(n, m);
  bool ok = via_normal == via_anti;
  if (ok && n + m <= cap) ok = normalize(brute_force_weyl(n, m, cap)) == via_normal;
  if (ok && n == m) {
    const MPoly lhs =
        balanced_to_npoly(via_normal).substitute(Var::Eps, MPoly{1});
    ok = lhs == weyl_symmetric(n).expand();
  }
  if (!ok) {
    std::cerr << "check failed: ordering routes disagree for n=" << n << " m=" << m << "\n";
    return kExitVerifyFailed;
  }
  std::cerr << "check: all ordering routes agree for n=" << n << " m=" << m << "\n";
  return 0;
}

int run_weyl(unsigned n, std::optional<unsigned> m_opt, const std::string& form, bool check,
             const std::string& eps_value, unsigned cap, Style style) {
  const unsigned m = m_opt.value_or(n);
  const auto eps_sub = parse_eps_flag(eps_value);

  if (form == "normal") {
    NormalForm nf = weyl_from_normal(n, m);
    if (eps_sub) nf = substitute_eps(nf, *eps_sub);
    std::cout << format(nf, style) << "\n";
  } else if (form == "antinormal") {
    OperatorExpr e = weyl_antinormal_expansion(n, m);
    if (eps_sub) e = substitute_eps(e, *eps_sub);
    std::cout << format(e, style) << "\n";
  } else if (form == "brute") {
    std::cout << format(brute_force_weyl(n, m, cap), style) << "\n";
  } else if (form == "symmetric") {
    if (n != m) throw Error("the symmetric form requires n = m");
    std::cout << format(weyl_symmetric(n), style) << "\n";
  } else {
    throw Error("unknown form '" + form + "'");
  }

  return check ? check_weyl_agreement(n, m, cap) : 0;
}

int run_verify(const std::string& identity, unsigned n_max, unsigned m_range,
               std::optional<unsigned> j_max, bool symbolic_eps, unsigned jobs) {
  std::vector<std::function<IdentityReport()>> points;

  if (identity == "noncom") {
    for (unsigned n = 0; n <= n_max; ++n)
      points.push_back([n] { return verify_noncom(n); });
  } else if (identity == "derivative") {
    for (unsigned n = 1; n <= n_max; ++n)
      points.push_back([n, symbolic_eps] { return verify_derivative_identity(n, symbolic_eps); });
  } else if (identity == "delta") {
    for (unsigned n = 1; n <= n_max; ++n)
      points.push_back([n, symbolic_eps] { return verify_delta_identity(n, symbolic_eps); });
  } else if (identity == "stirling_rel") {
    for (unsigned n = 1; n <= n_max; ++n) {
      const unsigned j_top = j_max.value_or((n - 1) / 2);
      for (unsigned j = 0; j <= j_top; ++j)
        points.push_back([n, j] { return verify_stirling_relation(n, j); });
    }
  } else if (identity == "general_rel") {
    for (unsigned n = 1; n <= n_max; ++n) {
      const long lo = -std::min<long>(m_range, static_cast<long>(n) - 1);
      for (long m = lo; m <= static_cast<long>(m_range); ++m) {
        const long top = m < 0 ? static_cast<long>(n) + m + 1 : static_cast<long>(n) + 1;
        for (long i = 1; i <= top; ++i)
          points.push_back(
              [n, m, i] { return verify_general_relation(n, m, static_cast<unsigned>(i)); });
      }
    }
  } else if (identity == "alpha_odd") {
    for (unsigned n = 1; n <= n_max; ++n)
      points.push_back([n] { return verify_alpha_odd(n); });
  } else {
    throw Error("unknown identity '" + identity +
                "' (expected noncom, derivative, delta, stirling_rel, general_rel, alpha_odd)");
  }

  // Points are independent; run them on a small pool and flush in order.
  std::vector<std::string> lines(points.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> all_hold{true};
  const unsigned worker_count = std::max(1u, std::min<unsigned>(jobs, points.size()));
  std::vector<std::thread> workers;
  workers.reserve(worker_count);
  for (unsigned w = 0; w < worker_count; ++w) {
    workers.emplace_back([&] {
      for (;;) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= lines.size()) return;
        const IdentityReport r = points[idx]();
        if (!r.holds) all_hold = false;
        lines[idx] = format_report(r);
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& line : lines) std::cout << line << "\n";
  return all_hold ? 0 : kExitVerifyFailed;
}

int run_bench(unsigned n_max, unsigned cap, Style style) {
  using clock = std::chrono::steady_clock;
  if (2 * n_max > cap)
    throw Error("--n-max " + std::to_string(n_max) + " needs 2n <= cap; raise --cap");

  bool all_equal = true;
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto t0 = clock::now();
    const OperatorExpr words = brute_force_weyl(n, n, cap);
    const NormalForm oracle = normalize(words);
    const auto t1 = clock::now();
    const NormalForm closed = weyl_from_normal(n, n);
    const auto t2 = clock::now();

    const bool equal = oracle == closed;
    all_equal = all_equal && equal;
    const auto us = [](auto d) {
      return std::chrono::duration_cast<std::chrono::microseconds>(d).count();
    };
    if (style == Style::Json) {
      std::cout << "{\"n\":" << n << ",\"words\":" << words.terms().size()
                << ",\"oracle_us\":" << us(t1 - t0) << ",\"closed_form_us\":" << us(t2 - t1)
                << ",\"equal\":" << (equal ? "true" : "false") << "}\n";
    } else {
      std::printf("n=%-2u words=%-5zu oracle_us=%-8lld closed_form_us=%-8lld equal=%s\n", n,
                  words.terms().size(), static_cast<long long>(us(t1 - t0)),
                  static_cast<long long>(us(t2 - t1)), equal ? "yes" : "NO");
    }
  }
  return all_equal ? 0 : kExitVerifyFailed;
}

int run_newton(const std::string& poly_text, const std::string& eps_value, Style style) {
  const MPoly p = parse_npoly(poly_text);
  FactorialBasisExpansion exp = newton_expand(p);
  if (const auto eps_sub = parse_eps_flag(eps_value)) {
    for (auto& c : exp.coefficients) c = c.substitute(Var::Eps, *eps_sub);
  }
  if (style == Style::Json) {
    std::string out = R"({"increment":"eps","coefficients":[)";
    for (std::size_t k = 0; k < exp.coefficients.size(); ++k) {
      if (k) out += ",";
      out += format(exp.coefficients[k], Style::Json);
    }
    std::cout << out << "]}\n";
    return 0;
  }
  for (std::size_t k = 0; k < exp.coefficients.size(); ++k)
    std::cout << "k=" << k << ": " << format(exp.coefficients[k], style) << "\n";
  return 0;
}

int run_eval(const std::string& expr, unsigned k, const std::string& eps_value, Style style) {
  const NormalForm nf = normalize(parse_operator(expr));
  MPoly v = eval_on_number_state(nf, k);
  if (const auto eps_sub = parse_eps_flag(eps_value)) v = v.substitute(Var::Eps, *eps_sub);
  std::cout << format(v, style) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact operator-ordering calculus for the boson algebra [a, ad] = eps"};
  app.require_subcommand(1);

  std::string style_name = "text";
  app.add_option("--style", style_name, "Output style")
      ->check(CLI::IsMember({"text", "latex", "json"}));

  unsigned cap = kDefaultWordCap;
  app.add_option("--cap", cap, "Word-enumeration letter cap")->check(CLI::Range(2u, 30u));

  std::string eps_value;

  auto* stirling =
      app.add_subcommand("stirling", "Print the Stirling triangle s(n, i)")->fallthrough();
  unsigned n_max = 1;
  stirling->add_option("--n-max", n_max, "Largest row")->required()->check(CLI::PositiveNumber);

  auto* weyl =
      app.add_subcommand("weyl", "Weyl-ordered ad^n a^m in a chosen representation")
          ->fallthrough();
  unsigned weyl_n = 0;
  std::optional<unsigned> weyl_m;
  std::string weyl_form = "normal";
  bool weyl_check = false;
  weyl->add_option("--n", weyl_n, "Creator count")->required();
  weyl->add_option("--m", weyl_m, "Annihilator count (defaults to n)");
  weyl->add_option("--form", weyl_form, "Representation")
      ->check(CLI::IsMember({"normal", "antinormal", "symmetric", "brute"}));
  weyl->add_flag("--check", weyl_check, "Cross-check every representation");
  weyl->add_option("--eps", eps_value, "Substitute a rational for eps");

  auto* order =
      app.add_subcommand("order", "Re-express an operator at another order parameter")
          ->fallthrough();
  std::string order_expr, from_s, to_s;
  order->add_option("--expr", order_expr, "Operator expression")->required();
  order->add_option("--from-s", from_s, "Source order parameter (1 normal, 0 Weyl, -1 anti)")
      ->required();
  order->add_option("--to-s", to_s, "Target order parameter")->required();
  order->add_option("--eps", eps_value, "Substitute a rational for eps");

  auto* verify =
      app.add_subcommand("verify", "Verify an identity family over a parameter grid")
          ->fallthrough();
  std::string identity;
  unsigned m_range = 6;
  std::optional<unsigned> j_max;
  bool symbolic_eps = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  verify->add_option("--identity", identity, "Identity family")->required();
  verify->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::PositiveNumber);
  verify->add_option("--m-range", m_range, "Largest |m| for general_rel");
  verify->add_option("--j-max", j_max, "Largest j for stirling_rel (default: all valid)");
  verify->add_flag("--symbolic-eps", symbolic_eps,
                   "Keep eps symbolic where the identity is stated at eps = 1");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* bench =
      app.add_subcommand("bench", "Time the brute-force oracle against the closed form")
          ->fallthrough();
  bench->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::PositiveNumber);

  auto* newton =
      app.add_subcommand("newton", "Newton expansion in the falling-factorial basis")
          ->fallthrough();
  std::string poly_text;
  newton->add_option("--poly", poly_text, "Polynomial in N, eps, t")->required();
  newton->add_option("--eps", eps_value, "Substitute a rational for eps");

  auto* eval =
      app.add_subcommand("eval", "Evaluate a balanced operator on the k-th number state")
          ->fallthrough();
  std::string eval_expr;
  unsigned eval_k = 0;
  eval->add_option("--expr", eval_expr, "Operator expression")->required();
  eval->add_option("--k", eval_k, "Number-state index")->required();
  eval->add_option("--eps", eps_value, "Substitute a rational for eps");

  CLI11_PARSE(app, argc, argv);

  try {
    const Style style = style_from_name(style_name);
    if (app.got_subcommand(stirling)) return run_stirling(n_max, style);
    if (app.got_subcommand(weyl))
      return run_weyl(weyl_n, weyl_m, weyl_form, weyl_check, eps_value, cap, style);
    if (app.got_subcommand(order)) return run_order(order_expr, from_s, to_s, eps_value, style);
    if (app.got_subcommand(verify))
      return run_verify(identity, n_max, m_range, j_max, symbolic_eps, jobs);
    if (app.got_subcommand(bench)) return run_bench(n_max, cap, style);
    if (app.got_subcommand(newton)) return run_newton(poly_text, eps_value, style);
    if (app.got_subcommand(eval)) return run_eval(eval_expr, eval_k, eps_value, style);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
