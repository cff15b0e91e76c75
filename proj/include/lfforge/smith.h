#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lf {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Finitely generated abelian group Z^free_rank + sum Z/torsion[i] with
/// torsion[i] dividing torsion[i+1] and every factor at least 2.
struct FinAbGroup {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;

  bool operator==(const FinAbGroup&) const = default;
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// e.g. "Z^4 + Z/2", "0".
  std::string to_string() const;

  static FinAbGroup free(int rank) { return {rank, {}}; }
  /// Z^rank + Z/n, with n = 0 read as Z and n = 1 dropped.
  static FinAbGroup with_cyclic(int rank, std::int64_t n);
};

struct SmithForm {
  std::vector<std::int64_t> diagonal; // nonzero invariant factors, positive, divisibility chain
  int rows = 0, cols = 0;
};

/// Smith normal form by exact integer elimination; throws std::overflow_error
/// if an intermediate entry leaves the int64 range.
SmithForm smith_normal_form(IntMatrix m, int cols);

/// Cokernel of the map Z^rows.size() -> Z^n whose images are the given rows.
FinAbGroup cokernel_of_rows(const IntMatrix& rows, int n);

/// Rank of the kernel of the map Z^rows.size() -> Z^n (always free).
int kernel_rank_of_rows(const IntMatrix& rows, int n);

} // namespace lf
