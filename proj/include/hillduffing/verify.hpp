#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hd::verify {

enum class Suite { Elliptic, ExactLines, Criteria, Tongues, Beam, All };

/// "elliptic", "exact-lines", "criteria", "tongues", "beam" or "all".
Suite parse_suite(std::string_view name);
std::string_view to_string(Suite s);

struct Check {
  std::string name;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;  // |measured - expected| <= tolerance; 0 for boolean checks
  bool pass = false;
};

std::vector<Check> run(Suite suite);

}  // namespace hd::verify
