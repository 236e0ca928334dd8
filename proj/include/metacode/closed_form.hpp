#pragma once

#include <string>

#include "metacode/algebra.hpp"
#include "metacode/shoda.hpp"

namespace metacode {

// Printed: the table entry as it stands. Amended: the entry with the
// corrections listed in the README (sign of the j = 2 rows, conjugate merge
// for q = 1 mod 4, truncation only where the dropped traces vanish, trace
// exponent of the truncated p-power rows).
enum class Reading { Printed, Amended };

struct ClosedForm {
  Alg value;
  std::string table;  // "1", "2", "3" or "4"
  std::string row;    // e.g. "e2", "e_2^j:j=3:merged-truncated"
};

// Closed form of the pci of `p` labelled by k, for D_(2^(n+1)), the ordinary
// metacyclic G_(2^(n+1)), G_(p^(n+1)) and EX54/EX54S. Throws RegimeMismatch
// when the group, pair or q is outside the tables.
ClosedForm pci_table_closed_form(const Group& G, const Field& F, const ShodaPair& p, u64 k,
                                 Reading rd = Reading::Printed);

// closed-form family of G: 1 dihedral, 2 ordinary 2-group, 3 ordinary p-group,
// 4 the order 56595 product (and its scaled analogue), 0 none
int closed_form_table(const Group& G);

}  // namespace metacode
