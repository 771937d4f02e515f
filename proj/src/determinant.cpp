#include "minorcalc/determinant.hpp"

namespace minorcalc {

void check_quasiprincipal(const SubsetIndex& rows, const SubsetIndex& cols, int i, int j) {
  const int n = rows.ambient();
  if (cols.ambient() != n) throw InputError("I and J live in different ambient sets");
  if (i < 1 || i > n || j < 1 || j > n) {
    throw InputError("(i,j) = (" + std::to_string(i) + "," + std::to_string(j) +
                     ") outside [" + std::to_string(n) + "]");
  }
  if (i == j) throw InputError("quasiprincipal minors need i != j");
  if (!rows.contains(i)) {
    throw InputError("clause 'i in I' fails: " + std::to_string(i) + " not in " + rows.to_string());
  }
  if (!cols.contains(j)) {
    throw InputError("clause 'j in J' fails: " + std::to_string(j) + " not in " + cols.to_string());
  }
  if (rows.size() != cols.size()) {
    throw InputError("clause '|I| = |J|' fails: " + rows.to_string() + " vs " + cols.to_string());
  }
  if (rows.without(i).with(j) != cols) {
    throw InputError("clause 'J = (I \\ {i}) u {j}' fails: " + cols.to_string() +
                     " != " + rows.without(i).with(j).to_string());
  }
}

}  // namespace minorcalc
