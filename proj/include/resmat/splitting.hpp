#pragma once

/**
 * @file splitting.hpp
 * @brief Configuration types of prime triples.
 *
 * The type of a triple of distinct odd primes is the permutation class of its
 * 3 x 3 QR matrix; there are 10. Classes are numbered 1..10 in ascending
 * order of canonical representative.
 *
 * The exact frequencies come from 64 equiprobable outcomes: each prime is
 * independently 1 or 3 mod 4, and each unordered pair carries one free
 * symbol bit, the reverse symbol being its negation when both primes are
 * 3 mod 4 and equal to it otherwise.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include <boost/rational.hpp>

#include "resmat/error.hpp"
#include "resmat/integer.hpp"
#include "resmat/packed.hpp"
#include "resmat/parallel.hpp"
#include "resmat/qr.hpp"
#include "resmat/root_matrix.hpp"

namespace resmat {

using Rational = boost::rational<std::int64_t>;

/// Reference scan bound 15 * 163841, so r never exceeds the 15000th prime.
inline constexpr std::int64_t reference_product_bound = 2'457'615;

struct ConfigClass {
  std::size_t class_id = 0;  // 1-based
  SignMatrix representative;

  friend bool operator==(const ConfigClass&, const ConfigClass&) = default;
};

struct ClassFrequency {
  ConfigClass config;
  std::uint64_t count = 0;        // triples seen by a scan
  std::uint64_t outcomes = 0;     // of the 64 model outcomes
  Rational exact;                 // outcomes / 64
  std::optional<Rational> empirical;  // count / total, scans only
};

struct FrequencyReport {
  std::vector<ClassFrequency> classes;  // ordered by class_id
  std::uint64_t total_triples = 0;
};

/// The 10 classes of 3 x 3 QR matrices, with lookup by packed code.
class ConfigClassTable {
 public:
  ConfigClassTable() {
    const auto classes = matrix_classes(MatrixKind::qr, 3);
    for (std::size_t k = 0; k < classes.size(); ++k) {
      classes_.push_back({k + 1, classes[k].representative});
      for (const auto& m : sign_matrices(MatrixKind::qr, 3))
        if (canonical_form(m) == classes[k].representative) id_by_code_[packed::pack(m)] = k + 1;
    }
  }

  static const ConfigClassTable& instance() {
    static const ConfigClassTable table;
    return table;
  }

  const std::vector<ConfigClass>& classes() const { return classes_; }

  /// 1-based class id of a 3 x 3 QR matrix code.
  std::size_t id_of(std::uint64_t code) const {
    const auto id = id_by_code_[code];
    if (id == 0) fail(errc::not_a_member, "not a 3 x 3 QR matrix");
    return id;
  }

  const ConfigClass& of(const SignMatrix& m) const {
    require(m.size() == 3, errc::invalid_argument, "configuration classes are 3 x 3");
    return classes_[id_of(packed::pack(m)) - 1];
  }

 private:
  std::vector<ConfigClass> classes_;
  std::array<std::size_t, 64> id_by_code_{};
};

inline ConfigClass configuration_class(std::int64_t p, std::int64_t q, std::int64_t r) {
  return ConfigClassTable::instance().of(qr_matrix_from_primes({p, q, r}));
}

namespace detail {

inline FrequencyReport exact_report() {
  const auto& table = ConfigClassTable::instance();
  FrequencyReport report;
  for (const auto& c : table.classes()) report.classes.push_back({c, 0, 0, Rational(0), std::nullopt});
  for (unsigned outcome = 0; outcome < 64; ++outcome) {
    const unsigned three_mod_four = outcome & 7;  // bit i: prime i = 3 mod 4
    const unsigned symbols = outcome >> 3;        // bit k: pair k symbol is -1
    std::vector<std::vector<int>> s(3, std::vector<int>(3, 0));
    unsigned k = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j, ++k) {
        s[i][j] = (symbols >> k) & 1 ? -1 : 1;
        const bool both = ((three_mod_four >> i) & 1) && ((three_mod_four >> j) & 1);
        s[j][i] = both ? -s[i][j] : s[i][j];
      }
    ++report.classes[table.of(SignMatrix::from_signs(s)).class_id - 1].outcomes;
  }
  for (auto& c : report.classes) c.exact = Rational(static_cast<std::int64_t>(c.outcomes), 64);
  return report;
}

}  // namespace detail

/// Model frequencies of the 10 configuration types; no scan data.
inline FrequencyReport exact_frequencies() { return detail::exact_report(); }

/// Classifies every triple of odd primes p < q < r with p q r <= bound.
/// Work is split by the smallest prime; totals do not depend on `threads`.
inline FrequencyReport empirical_scan(std::int64_t product_bound, unsigned threads = default_thread_count()) {
  require(product_bound >= 105, errc::invalid_argument, "product bound must be at least 105");
  const auto& table = ConfigClassTable::instance();
  const packed::Layout layout(3);
  const auto all = sieve_primes(product_bound / 15 + 1);
  const std::vector<std::int64_t> primes(all.begin() + 1, all.end());  // odd only

  // the smallest prime is at most the cube root of the bound
  std::size_t p_count = 0;
  while (p_count < primes.size() &&
         static_cast<i128>(primes[p_count]) * primes[p_count] * primes[p_count] <= product_bound)
    ++p_count;

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(p_count, 1))));
  std::vector<std::array<std::uint64_t, 10>> partial(threads, std::array<std::uint64_t, 10>{});
  auto work = [&](unsigned worker) {
    auto& counts = partial[worker];
    for (std::size_t a = worker; a < p_count; a += threads) {
      const std::int64_t p = primes[a];
      const OddPrime op(p);
      for (std::size_t b = a + 1; b < primes.size(); ++b) {
        const std::int64_t q = primes[b];
        if (static_cast<i128>(p) * q * q > product_bound) break;
        const OddPrime oq(q);
        const int pq = legendre(p, oq), qp = legendre(q, op);
        for (std::size_t c = b + 1; c < primes.size(); ++c) {
          const std::int64_t r = primes[c];
          if (static_cast<i128>(p) * q * r > product_bound) break;
          const OddPrime orr(r);
          // entries (p,q) (p,r) (q,p) (q,r) (r,p) (r,q)
          const int sym[3][3] = {{0, pq, legendre(p, orr)}, {qp, 0, legendre(q, orr)}, {legendre(r, op), legendre(r, oq), 0}};
          std::uint64_t code = 0;
          for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
              if (i != j && sym[i][j] < 0) code |= std::uint64_t{1} << layout.bit(i, j);
          ++counts[table.id_of(code) - 1];
        }
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(work, t);
    for (auto& w : workers) w.join();
  }

  FrequencyReport report = detail::exact_report();
  for (std::size_t k = 0; k < report.classes.size(); ++k) {
    for (const auto& counts : partial) report.classes[k].count += counts[k];
    report.total_triples += report.classes[k].count;
  }
  if (report.total_triples > 0)
    for (auto& c : report.classes)
      c.empirical = Rational(static_cast<std::int64_t>(c.count), static_cast<std::int64_t>(report.total_triples));
  return report;
}

}  // namespace resmat
