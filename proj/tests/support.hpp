// Fixture loading shared by the test binaries.
#pragma once

#include <stdexcept>
#include <string>

#include "gorcheck/gorcheck.hpp"

namespace gorcheck::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(GORCHECK_FIXTURE_DIR) + "/" + name + ".alg";
}

/// Parses and validates a fixture; throws if either step fails.
inline BoundQuiver fixture(const std::string& name) {
  auto res = parse_algebra_file(fixture_path(name));
  if (!res.ok()) throw std::runtime_error("fixture " + name + " does not parse: " + res.errors.front().message);
  BoundQuiver bq = *res.algebra;
  if (!validate_string_quiver(bq).valid()) throw std::runtime_error("fixture " + name + " is not a string algebra");
  return bq;
}

inline BoundQuiver from_text(const std::string& text) {
  auto res = parse_algebra(text);
  if (!res.ok()) throw std::runtime_error("bad algebra text: " + res.errors.front().message);
  BoundQuiver bq = *res.algebra;
  validate_string_quiver(bq);
  return bq;
}

inline Path path_of(const BoundQuiver& bq, std::initializer_list<const char*> labels) {
  Path p;
  for (const char* l : labels) p.push_back(bq.quiver().find(l).value());
  return p;
}

}  // namespace gorcheck::testing
