// Worked examples with known answers, shared by the CLI and the acceptance run.
#pragma once

#include <string>
#include <vector>

namespace wngt {

struct FixtureResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<FixtureResult> worked_examples();

}  // namespace wngt
