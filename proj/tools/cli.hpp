#pragma once

// Command-line front end. `run` takes explicit streams so the same code path
// serves the binary and the tests.
//
// Exit codes: 0 success / member, 1 non-member, 2 parse or usage error,
// 3 witness search exhausted.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "resmat/resmat.hpp"

namespace resmat::cli {

enum exit_code : int { ok = 0, non_member = 1, usage = 2, exhausted = 3 };

using json = nlohmann::ordered_json;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw error(errc::invalid_argument, "cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

template <int M>
json matrix_json(const RootMatrix<M>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) {
      if constexpr (M == 2) row.push_back(m.sign(i, j));
      else row.push_back(std::string(root_name(m.at(i, j))));
    }
    rows.push_back(row);
  }
  return rows;
}

inline json permutation_json(const Permutation& p) {
  json out = json::array();
  for (auto v : p.image()) out.push_back(v + 1);
  return out;
}

inline std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + std::to_string(v[k]);
  return out;
}

inline std::string join(const Permutation& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) out += (k ? " " : "") + std::to_string(p(k) + 1);
  return out;
}

inline json rational_json(const Rational& r) { return {{"numerator", r.numerator()}, {"denominator", r.denominator()}}; }

inline std::string rational_text(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// ---------------------------------------------------------------------------

struct CheckOptions {
  std::string file = "-";
  int m = 2;
  bool json = false;
};

inline int run_check(const CheckOptions& o, Streams io) {
  const std::string text = read_input(o.file, io.in);
  json j{{"m", o.m}};
  bool member = false;
  std::ostringstream out;
  if (o.m == 2) {
    const auto mat = parse_matrix<2>(text);
    const auto d = is_qr_matrix(mat);
    member = d.verdict;
    j["n"] = mat.size();
    j["verdict"] = member;
    j["diag"] = d.diag;
    out << "verdict: " << (member ? "yes" : "no") << '\n';
    if (member) {
      const auto bf = resmat::detail::block_form_from_diag(d.diag, *d.s);
      j["s"] = bf.s;
      j["permutation"] = permutation_json(bf.perm);
      out << "s: " << bf.s << '\n';
    }
    out << "diag: " << join(d.diag) << '\n';
    if (member) out << "permutation: " << join(resmat::detail::block_form_from_diag(d.diag, *d.s).perm) << '\n';
  } else if (o.m == 3) {
    const auto mat = parse_matrix<3>(text);
    member = is_cubic_residue_matrix(mat);
    j["n"] = mat.size();
    j["verdict"] = member;
    j["symmetric"] = member;
    out << "verdict: " << (member ? "yes" : "no") << '\n' << "symmetric: " << (member ? "yes" : "no") << '\n';
  } else {
    const auto mat = parse_matrix<4>(text);
    const auto d = is_quartic_residue_matrix(mat);
    member = d.verdict;
    j["n"] = mat.size();
    j["verdict"] = member;
    j["pairwise"] = d.pairwise_ok;
    out << "verdict: " << (member ? "yes" : "no") << '\n' << "pairwise: " << (d.pairwise_ok ? "ok" : "fail") << '\n';
    if (d.pairwise_ok) j["diag"] = d.diag;
    if (member) {
      const auto bf = resmat::detail::block_form_from_diag(d.diag, *d.s);
      j["s"] = bf.s;
      j["permutation"] = permutation_json(bf.perm);
      out << "s: " << bf.s << '\n';
    }
    if (d.pairwise_ok) out << "diag: " << join(d.diag) << '\n';
    if (member) out << "permutation: " << join(resmat::detail::block_form_from_diag(d.diag, *d.s).perm) << '\n';
  }
  if (o.json) io.out << j.dump() << '\n';
  else io.out << out.str();
  return member ? ok : non_member;
}

// ---------------------------------------------------------------------------

struct WitnessOptions {
  std::string file = "-";
  int m = 2;
  std::int64_t limit = 0;  // 0: per-modulus default
  bool json = false;
};

inline int run_witness(const WitnessOptions& o, Streams io) {
  const std::string text = read_input(o.file, io.in);
  json j{{"m", o.m}};
  std::vector<std::string> names;
  std::string recomputed;
  try {
    if (o.m == 2) {
      const auto mat = parse_matrix<2>(text);
      if (!is_qr_matrix(mat).verdict) throw error(errc::not_a_member, "not a QR matrix");
      const auto primes = witness_primes(mat, o.limit ? o.limit : 10'000'000);
      std::vector<std::int64_t> values(primes.begin(), primes.end());
      for (auto p : values) names.push_back(std::to_string(p));
      const auto back = qr_matrix_from_primes(values);
      j["verified"] = back == mat;
      j["recomputed"] = matrix_json(back);
      recomputed = format_matrix(back);
    } else if (o.m == 3) {
      const auto mat = parse_matrix<3>(text);
      const auto primes = cubic_witness(mat, o.limit ? o.limit : default_norm_limit);
      for (const auto& p : primes) names.push_back(p.element().to_string());
      const auto back = cubic_matrix(primes);
      j["verified"] = back == mat;
      j["recomputed"] = matrix_json(back);
      recomputed = format_matrix(back);
    } else {
      const auto mat = parse_matrix<4>(text);
      const auto primes = quartic_witness(mat, o.limit ? o.limit : default_norm_limit);
      for (const auto& p : primes) names.push_back(p.element().to_string());
      const auto back = quartic_matrix(primes);
      j["verified"] = back == mat;
      j["recomputed"] = matrix_json(back);
      recomputed = format_matrix(back);
    }
  } catch (const error& e) {
    if (e.code() == errc::not_a_member) {
      if (o.json) io.out << json{{"m", o.m}, {"verdict", false}}.dump() << '\n';
      io.err << "error: " << e.what() << '\n';
      return non_member;
    }
    throw;
  }
  j["witness"] = names;
  if (o.json) {
    io.out << j.dump() << '\n';
  } else {
    for (const auto& n : names) io.out << n << '\n';
    io.out << "recomputed:\n" << recomputed << "VERIFIED\n";
  }
  return ok;
}

// ---------------------------------------------------------------------------

struct CountOptions {
  std::size_t n = 0;
  std::string kind = "qr";
  bool classes = false;
  bool json = false;
  unsigned threads = 0;
};

inline int run_count(const CountOptions& o, Streams io) {
  if (o.n < min_count_dimension || o.n > max_count_dimension) {
    io.err << "error: --n must be between 2 and 6\n";
    return usage;
  }
  const MatrixKind kind = o.kind == "qr" ? MatrixKind::qr
                          : o.kind == "symmetric" ? MatrixKind::symmetric
                                                  : MatrixKind::skew;
  if (o.n == 6) io.err << "warning: n = 6 enumerates 2^30 matrices and may take a while\n";
  const unsigned threads = o.threads ? o.threads : default_thread_count();
  const std::uint64_t value = o.classes ? count_classes(kind, o.n) : count_matrices(kind, o.n, threads);
  if (o.json) io.out << json{{"kind", o.kind}, {"n", o.n}, {"classes", o.classes}, {"count", value}}.dump() << '\n';
  else io.out << value << '\n';
  return ok;
}

// ---------------------------------------------------------------------------

struct FreqOptions {
  std::int64_t bound = 0;
  bool exact = false;
  bool json = false;
  unsigned threads = 0;
};

inline int run_freq(const FreqOptions& o, Streams io) {
  if (o.exact == (o.bound != 0)) {
    io.err << "error: pass exactly one of --bound or --exact\n";
    return usage;
  }
  const unsigned threads = o.threads ? o.threads : default_thread_count();
  const FrequencyReport r = o.exact ? exact_frequencies() : empirical_scan(o.bound, threads);
  if (o.json) {
    json j;
    if (!o.exact) {
      j["bound"] = o.bound;
      j["total"] = r.total_triples;
    }
    json classes = json::array();
    for (const auto& c : r.classes) {
      json cj{{"class", c.config.class_id}, {"representative", matrix_json(c.config.representative)}};
      if (!o.exact) {
        cj["count"] = c.count;
        if (c.empirical) cj["empirical"] = rational_json(*c.empirical);
      }
      cj["outcomes"] = c.outcomes;
      cj["exact"] = rational_json(c.exact);
      classes.push_back(cj);
    }
    j["classes"] = classes;
    io.out << j.dump() << '\n';
    return ok;
  }
  if (o.exact) {
    io.out << "class\toutcomes\texact\n";
    for (const auto& c : r.classes)
      io.out << c.config.class_id << '\t' << c.outcomes << '\t' << rational_text(c.exact) << '\n';
  } else {
    io.out << "total: " << r.total_triples << '\n' << "class\tcount\tempirical\texact\n";
    for (const auto& c : r.classes)
      io.out << c.config.class_id << '\t' << c.count << '\t'
             << (c.empirical ? format_decimal(*c.empirical, 6) : std::string("-")) << '\t' << rational_text(c.exact)
             << '\n';
  }
  return ok;
}

// ---------------------------------------------------------------------------

struct SymbolOptions {
  std::string kind;
  std::string num;
  std::string den;
  bool primary = false;
  bool json = false;
};

inline std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (...) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw parse_error(1, 0, "not an integer: '" + s + "'");
  return v;
}

template <class Ring>
int run_residue_symbol(const SymbolOptions& o, Streams io) {
  auto num = parse_quadratic<Ring>(o.num);
  auto den = parse_quadratic<Ring>(o.den);
  if (o.primary) {
    den = primary_generator(den).element();
    if (!num.is_zero() && !num.is_unit() && is_prime_element(num) && num.norm() % Ring::ramified_prime != 0)
      num = primary_generator(num).element();
    if (!o.json) io.out << "num: " << num << '\n' << "den: " << den << '\n';
  }
  const auto q = PrimaryPrime<Ring>::from_primary(den);
  const auto value = resmat::detail::power_residue(num, q);
  const std::string name(root_name(value));
  if (o.json) {
    json j{{"kind", o.kind}, {"num", num.to_string()}, {"den", den.to_string()}, {"exponent", value.exponent()},
           {"value", name}};
    io.out << j.dump() << '\n';
  } else {
    io.out << name << '\n';
  }
  return ok;
}

inline int run_symbol(const SymbolOptions& o, Streams io) {
  if (o.kind == "cubic") return run_residue_symbol<eisenstein_ring>(o, io);
  if (o.kind == "quartic") return run_residue_symbol<gaussian_ring>(o, io);
  const std::int64_t a = parse_int(o.num);
  const std::int64_t n = parse_int(o.den);
  const int value = o.kind == "legendre" ? legendre(a, OddPrime(n)) : jacobi(a, n);
  if (o.json) io.out << json{{"kind", o.kind}, {"num", a}, {"den", n}, {"value", value}}.dump() << '\n';
  else io.out << value << '\n';
  return ok;
}

}  // namespace detail

/// Runs one CLI invocation; argv[0] is the program name.
inline int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Quadratic, cubic and quartic residue matrices", "resmat"};
  app.require_subcommand(1);

  detail::CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Decide whether a matrix is a residue matrix");
  check_cmd->add_option("--file", check.file, "Matrix file, or - for stdin")->capture_default_str();
  check_cmd->add_option("--m", check.m, "Root-of-unity order")->check(CLI::IsMember({2, 3, 4}))->capture_default_str();
  check_cmd->add_flag("--json", check.json, "Machine-readable output");

  detail::WitnessOptions witness;
  auto* witness_cmd = app.add_subcommand("witness", "Construct primes realizing a residue matrix");
  witness_cmd->add_option("--file", witness.file, "Matrix file, or - for stdin")->capture_default_str();
  witness_cmd->add_option("--m", witness.m, "Root-of-unity order")->check(CLI::IsMember({2, 3, 4}))->capture_default_str();
  witness_cmd->add_option("--limit", witness.limit, "Search limit (prime bound for m=2, norm bound otherwise)")
      ->check(CLI::PositiveNumber);
  witness_cmd->add_flag("--json", witness.json, "Machine-readable output");

  detail::CountOptions count;
  auto* count_cmd = app.add_subcommand("count", "Count sign matrices or their permutation classes");
  count_cmd->add_option("--n", count.n, "Dimension (2..6)")->required();
  count_cmd->add_option("--kind", count.kind, "qr, symmetric or skew")
      ->check(CLI::IsMember({"qr", "symmetric", "skew"}))
      ->capture_default_str();
  count_cmd->add_flag("--classes", count.classes, "Count permutation-equivalence classes");
  count_cmd->add_flag("--json", count.json, "Machine-readable output");
  count_cmd->add_option("--threads", count.threads, "Worker cap (default RESMAT_THREADS or all cores)");

  detail::FreqOptions freq;
  auto* freq_cmd = app.add_subcommand("freq", "Configuration-type frequencies of prime triples");
  auto* bound_opt = freq_cmd->add_option("--bound", freq.bound, "Scan all odd p < q < r with pqr <= BOUND")
                        ->check(CLI::Range(std::int64_t{105}, std::int64_t{1} << 40));
  auto* exact_flag = freq_cmd->add_flag("--exact", freq.exact, "Exact model frequencies");
  bound_opt->excludes(exact_flag);
  freq_cmd->add_flag("--json", freq.json, "Machine-readable output");
  freq_cmd->add_option("--threads", freq.threads, "Worker cap (default RESMAT_THREADS or all cores)");

  detail::SymbolOptions symbol;
  auto* symbol_cmd = app.add_subcommand("symbol", "Evaluate a residue symbol");
  symbol_cmd->add_option("--kind", symbol.kind, "legendre, jacobi, cubic or quartic")
      ->required()
      ->check(CLI::IsMember({"legendre", "jacobi", "cubic", "quartic"}));
  symbol_cmd->add_option("--num", symbol.num, "Numerator")->required()->allow_extra_args(false);
  symbol_cmd->add_option("--den", symbol.den, "Denominator")->required()->allow_extra_args(false);
  symbol_cmd->add_flag("--primary", symbol.primary, "Replace operands by their primary associates first");
  symbol_cmd->add_flag("--json", symbol.json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    return usage;
  }

  try {
    if (check_cmd->parsed()) return detail::run_check(check, io);
    if (witness_cmd->parsed()) return detail::run_witness(witness, io);
    if (count_cmd->parsed()) return detail::run_count(count, io);
    if (freq_cmd->parsed()) return detail::run_freq(freq, io);
    if (symbol_cmd->parsed()) return detail::run_symbol(symbol, io);
  } catch (const search_exhausted& e) {
    io.err << "error: " << e.what() << '\n';
    return exhausted;
  } catch (const error& e) {
    io.err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

}  // namespace resmat::cli
