#pragma once

#include <string>
#include <vector>

#include "homology/complex.hpp"

namespace gobelin {

// One verified statement: what was expected, what was computed.
struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

Check check_eq(std::string name, long expected, long actual);
Check check_true(std::string name, bool ok, const std::string& detail = {});
bool all_pass(const std::vector<Check>& checks);

// Maps given on coset coordinates.
bool is_injective(const Matrix& f);
bool is_surjective(const Matrix& g);
// ker g == im f as subspaces.
bool exact_at(const Matrix& f, const Matrix& g);

// 0 -> A -f-> B -g-> C -> 0 with f, g acting on ambient coordinates.
// Appends injectivity, middle exactness and surjectivity checks; a map that
// does not descend to the subquotients fails all three.
void check_short_exact(std::vector<Check>& out, const std::string& name, const Subquotient& a,
                       const Subquotient& b, const Subquotient& c, const Matrix& f, const Matrix& g);

std::string join_dims(const std::vector<std::size_t>& dims);

}  // namespace gobelin
