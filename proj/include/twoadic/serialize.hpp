#pragma once

#include <string>

#include <json.hpp>

#include "twoadic/complexity.hpp"
#include "twoadic/correlation.hpp"

namespace twoadic {

namespace detail {

// holds -> true, fails -> false, unset/degenerate -> null
inline nlohmann::ordered_json verdict_json(adic::Verdict v) {
  switch (v) {
    case adic::Verdict::holds: return true;
    case adic::Verdict::fails: return false;
    default: return nullptr;
  }
}

} // namespace detail

/// Report schema: big integers as decimal strings so no consumer loses
/// precision; phi is the only floating field.
inline nlohmann::ordered_json report_to_json(const adic::ComplexityReport& r) {
  nlohmann::ordered_json j;
  j["period"] = r.period;
  j["s2"] = r.s2.str();
  j["p"] = r.fraction.p.str();
  j["q"] = r.fraction.q.str();
  j["phi"] = r.phi;
  j["is_max"] = r.is_max;
  j["theorem1_holds"] = detail::verdict_json(r.theorem1);
  j["product_congruence_holds"] = detail::verdict_json(r.product_congruence);
  j["gcd_claim_holds"] = detail::verdict_json(r.gcd_claim);
  return j;
}

inline std::string spectrum_to_csv(const correlation::CorrelationSpectrum& spectrum) {
  std::string out = "tau,correlation\n";
  for (std::size_t tau = 0; tau < spectrum.period(); ++tau) {
    out += std::to_string(tau);
    out += ',';
    out += std::to_string(spectrum[tau]);
    out += '\n';
  }
  return out;
}

} // namespace twoadic
