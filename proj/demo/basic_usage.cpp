// Generates one member of each family, checks the two-level property and
// prints the complexity report, mirroring what the CLI does per file.

#include <iostream>

#include "twoadic/twoadic.hpp"

int main() {
  using namespace twoadic;

  const sequences::FamilySpec specs[] = {
      {sequences::Family::msequence, 5},
      {sequences::Family::legendre, 19},
      {sequences::Family::twinprime, 5},
  };

  for (const auto& spec : specs) {
    const BinarySequence s = sequences::generate(spec);
    std::cout << sequences::family_name(spec.family) << " " << spec.parameter
              << ": period " << s.period()
              << ", ideal two-level = " << std::boolalpha
              << correlation::is_ideal_two_level(s) << "\n";
    const auto report = adic::two_adic_complexity(s, /*verify=*/true);
    std::cout << report_to_json(report).dump(2) << "\n";
  }
  return 0;
}
