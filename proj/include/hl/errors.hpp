#pragma once

#include <stdexcept>
#include <string>

namespace hl {

// Thrown when a mathematical invariant that the algorithms rely on is
// violated at runtime (non-exact division, a reflection producing an invalid
// column, a "mixed" classification, a folding tree exceeding its path guard,
// an expansion coefficient that is not a polynomial in q, ...).  The CLI maps
// this to exit code 3; library callers may catch it.
class invariant_error : public std::runtime_error {
 public:
  explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed caller input (non-dominant weight where dominance is
// required, unparseable tableau text, bad coordinate vectors).  The CLI maps
// this to exit code 2.
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hl
