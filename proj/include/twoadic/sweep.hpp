#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "twoadic/complexity.hpp"
#include "twoadic/correlation.hpp"
#include "twoadic/generators.hpp"
#include "twoadic/numtheory.hpp"

namespace twoadic::sweep {

// Hard caps; requests beyond these are rejected up front.
inline constexpr std::uint32_t nmax_cap = 20;
inline constexpr std::uint32_t pmax_cap = 100000;
inline constexpr std::uint32_t tpmax_cap = 100000;

struct SweepOptions {
  bool msequence = true;
  bool legendre = true;
  bool twinprime = true;
  std::uint32_t nmax = 16;   // m-sequence degrees 1..nmax
  std::uint32_t pmax = 2000; // Legendre primes p = 3 (mod 4), p <= pmax
  std::uint32_t tpmax = 5000; // twin-prime periods p(p+2) <= tpmax
  unsigned jobs = 1;
};

/// One row of batch verification output.
struct SweepRecord {
  sequences::Family family;
  std::uint32_t parameter = 0;
  std::uint64_t period = 0;
  bool is_ideal = false;
  bool is_max = false;
  adic::Verdict theorem1 = adic::Verdict::unset;
  adic::Verdict product_congruence = adic::Verdict::unset;
  adic::Verdict gcd_claim = adic::Verdict::unset;
  std::uint32_t q_digits = 0; // decimal digit count of the reduced denominator
  std::uint64_t elapsed_ms = 0;
};

/// Family members inside the bounds, ordered by (family, parameter).
inline std::vector<sequences::FamilySpec> enumerate_members(const SweepOptions& options) {
  using sequences::Family;
  if (options.nmax > nmax_cap)
    throw error(errc::bound_exceeded, "nmax exceeds hard cap " + std::to_string(nmax_cap));
  if (options.pmax > pmax_cap)
    throw error(errc::bound_exceeded, "pmax exceeds hard cap " + std::to_string(pmax_cap));
  if (options.tpmax > tpmax_cap)
    throw error(errc::bound_exceeded, "tpmax exceeds hard cap " + std::to_string(tpmax_cap));

  std::vector<sequences::FamilySpec> members;
  if (options.msequence)
    for (std::uint32_t n = 1; n <= options.nmax; ++n)
      members.push_back({Family::msequence, n});
  if (options.legendre)
    for (std::uint32_t p = 3; p <= options.pmax; ++p)
      if (p % 4 == 3 && is_prime(p))
        members.push_back({Family::legendre, p});
  if (options.twinprime)
    for (std::uint32_t p = 3; std::uint64_t{p} * (p + 2) <= options.tpmax; ++p)
      if (is_prime(p) && is_prime(std::uint64_t{p} + 2))
        members.push_back({Family::twinprime, p});
  return members;
}

inline SweepRecord evaluate_member(sequences::FamilySpec spec) {
  const auto start = std::chrono::steady_clock::now();
  const BinarySequence s = spec.family == sequences::Family::twinprime
                               ? sequences::gen_twin_prime(spec.parameter, /*verify_ideal=*/false)
                               : sequences::generate(spec);
  SweepRecord record;
  record.family = spec.family;
  record.parameter = spec.parameter;
  record.period = s.period();
  record.is_ideal = correlation::is_ideal_two_level(s);
  const adic::ComplexityReport report = adic::two_adic_complexity(s, /*verify=*/true);
  record.is_max = report.is_max;
  record.theorem1 = report.theorem1;
  record.product_congruence = report.product_congruence;
  record.gcd_claim = report.gcd_claim;
  record.q_digits = static_cast<std::uint32_t>(report.fraction.q.str().size());
  record.elapsed_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                     std::chrono::steady_clock::now() - start)
                                                     .count());
  return record;
}

/// Evaluates every member inside the bounds. Rows land in slots fixed by the
/// enumeration order and are sorted by (family, parameter) before returning,
/// so the result is identical for any jobs count.
inline std::vector<SweepRecord> run_sweep(const SweepOptions& options) {
  const auto members = enumerate_members(options);
  std::vector<SweepRecord> records(members.size());
  unsigned jobs = std::max(1u, options.jobs);
  if (members.size() < jobs)
    jobs = static_cast<unsigned>(std::max<std::size_t>(1, members.size()));

  if (jobs == 1) {
    for (std::size_t i = 0; i < members.size(); ++i)
      records[i] = evaluate_member(members[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= members.size())
          return;
        try {
          records[i] = evaluate_member(members[i]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure)
            failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back(worker);
    for (auto& t : pool)
      t.join();
    if (failure)
      std::rethrow_exception(failure);
  }

  std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return std::tuple(static_cast<int>(a.family), a.parameter) <
           std::tuple(static_cast<int>(b.family), b.parameter);
  });
  return records;
}

/// CSV schema 1. Timing is opt-in: wall-clock values would break the
/// byte-identical determinism contract and cross-run diffing.
inline void write_csv(std::ostream& out, const std::vector<SweepRecord>& records,
                      bool include_timing = false) {
  out << "# schema=1" << (include_timing ? " timing=1" : "") << "\n";
  out << "family,parameter,period,is_ideal,is_max,theorem1,product_congruence,gcd_claim,q_digits";
  if (include_timing)
    out << ",elapsed_ms";
  out << "\n";
  for (const auto& r : records) {
    out << sequences::family_name(r.family) << ',' << r.parameter << ',' << r.period << ','
        << (r.is_ideal ? "true" : "false") << ',' << (r.is_max ? "true" : "false") << ','
        << adic::to_string(r.theorem1) << ',' << adic::to_string(r.product_congruence) << ','
        << adic::to_string(r.gcd_claim) << ',' << r.q_digits;
    if (include_timing)
      out << ',' << r.elapsed_ms;
    out << "\n";
  }
}

/// Rows where the ideal gate and every verdict hold.
inline std::size_t count_all_true(const std::vector<SweepRecord>& records) {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const SweepRecord& r) {
    return r.is_ideal && r.is_max && r.theorem1 == adic::Verdict::holds &&
           r.product_congruence == adic::Verdict::holds && r.gcd_claim == adic::Verdict::holds;
  }));
}

} // namespace twoadic::sweep
