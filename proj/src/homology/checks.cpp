#include "homology/checks.hpp"

#include <sstream>

namespace gobelin {

Check check_eq(std::string name, long expected, long actual) {
  return {std::move(name), std::to_string(expected), std::to_string(actual), expected == actual};
}

Check check_true(std::string name, bool ok, const std::string& detail) {
  return {std::move(name), "true", ok ? "true" : (detail.empty() ? "false" : detail), ok};
}

bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

bool is_injective(const Matrix& f) { return rank(f) == f.cols(); }

bool is_surjective(const Matrix& g) { return rank(g) == g.rows(); }

bool exact_at(const Matrix& f, const Matrix& g) {
  if (f.rows() != g.cols()) throw Error(ErrorKind::Input, "exact_at: maps do not compose");
  return kernel_basis(g) == image(f);
}

void check_short_exact(std::vector<Check>& out, const std::string& name, const Subquotient& a,
                       const Subquotient& b, const Subquotient& c, const Matrix& f, const Matrix& g) {
  Matrix fi;
  Matrix gi;
  try {
    fi = induced_map(a, b, f);
    gi = induced_map(b, c, g);
  } catch (const Error& e) {
    out.push_back(check_true(name + ": injective", false, e.what()));
    out.push_back(check_true(name + ": exact in the middle", false, e.what()));
    out.push_back(check_true(name + ": surjective", false, e.what()));
    return;
  }
  out.push_back(check_eq(name + ": injective (rank)", static_cast<long>(a.dim()), static_cast<long>(rank(fi))));
  out.push_back(check_true(name + ": exact in the middle", exact_at(fi, gi)));
  out.push_back(check_eq(name + ": surjective (rank)", static_cast<long>(c.dim()), static_cast<long>(rank(gi))));
}

std::string join_dims(const std::vector<std::size_t>& dims) {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  return os.str();
}

}  // namespace gobelin
