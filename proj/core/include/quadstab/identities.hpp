#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadstab/equation.hpp"

namespace quadstab::funceq {

/// Catalog of dilation identities satisfied by every quadratic function.
/// Entries are labeled 2.1 through 2.28; together they form the chain that
/// connects the two-variable quadratic equation with its three-variable
/// dilation form in both directions. Parameterized entries carry integer
/// parameters with the constraints listed at each entry.
enum class IdentityName {
  I2_1,   // f(2x+y) + f(2x-y) = 8 f(x) + 2 f(y)
  I2_2,   // f(2x+y) + f(2x-y) = f(x+y) + f(x-y) + 6 f(x)
  I2_3,   // f(3x+y) + f(3x-y) = f(x+y) + f(x-y) + 16 f(x)
  I2_4,   // f(ax+y) + f(ax-y) = f(x+y) + f(x-y) + 2(a^2-1) f(x);    a != 0, +-1
  I2_8,   // f(ax+by) + f(ax-by) = b^2 f(x+y) + b^2 f(x-y) + 2(a^2-b^2) f(x);
          //                                                 a, b != 0, a != +-b
  I2_9,   // f((a+b)x+(a-b)y) + f((a-b)x+(a+b)y)
          //   = 4 b^2 (f(x)+f(y)) + 2(a^2-b^2) f(x+y);       a, b != 0, a != +-b
  I2_20,  // f(x+y+2abz) + f(x+y-2abz)
          //   = 2 f(x+y) + 2 a^2 b^2 (f(x+z)+f(x-z)+f(y+z)+f(y-z))
          //     - 4 a^2 b^2 (f(x)+f(y));          a, b != 0, a != +-1, a != +-b
  I2_21,  // c^2 [f((c+1)z) + f((c-1)z)] = 2 (c^2+1) f(cz);          c != 0, +-1
  I2_22,  // c^2 [f((c+2)z) + f((c-2)z)] = 2 (c^2+4) f(cz);          c != 0, +-1
  I2_23,  // c^2 [f((c+k)z) + f((c-k)z)] = 2 (c^2+k^2) f(cz);  c != 0, +-1; k != 0
  I2_24,  // f(x+2cz) + f(x-2cz)
          //   = 2 c^2 f(x+z) + 2 c^2 f(x-z) + 4 c^2 f(z) + 2(1-2c^2) f(x)
  I2_28,  // (2c^2-2) f(x+z) + (2c^2-2) f(x-z) = (4c^2-4) f(x) + (4c^2-4) f(z)
};

/// One catalog entry together with its integer parameters. Construction via
/// make() enforces the per-entry parameter constraints.
struct IdentityId {
  IdentityName name;
  std::optional<int> a, b, c, k;

  static IdentityId make(IdentityName name, std::optional<int> a = {},
                         std::optional<int> b = {}, std::optional<int> c = {},
                         std::optional<int> k = {});

  /// Catalog label, e.g. "2.23".
  std::string label() const;

  /// Maps a label such as "2.23" back to the entry name.
  static IdentityName name_from_label(const std::string& label);
};

/// Both sides of the identity as weighted affine evaluations of f.
struct IdentitySides {
  std::vector<AffineTerm> lhs, rhs;
};

IdentitySides identity_sides(const IdentityId& id);

struct IdentityVerdict {
  IdentityId id;
  bool holds;
  /// LHS - RHS expanded for f(x) = x^2 (the difference scales linearly in the
  /// quadratic coefficient, so this is the canonical representative).
  exact::Poly3 difference;
};

/// Substitutes f(x) = a x^2 for several rational quadratic coefficients a,
/// expands both sides exactly, and reports whether the difference vanishes
/// identically.
IdentityVerdict verify_identity(const IdentityId& id);

/// The default verification sweep: every catalog entry over
/// a, b in {+-2, +-3, +-5} (a != +-b where both appear), c in {+-2, +-3},
/// k in {1..6} and k = 3c.
std::vector<IdentityId> default_identity_sweep();

}  // namespace quadstab::funceq
