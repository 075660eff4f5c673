#pragma once

// The 4x4 matrices T with rows (m00,0,n00,0), (m10,0,0,n10), (0,m01,n01,0),
// (0,m11,0,n11), shared by the dual-graph and group code.

#include "exotic/linalg.hpp"

namespace exotic {

struct XtParams {
  long m00 = 0, n00 = 0, m10 = 0, n10 = 0, m01 = 0, n01 = 0, m11 = 0, n11 = 0;

  // Throws WrongShape unless t is 4x4, non-negative and zero off the pattern.
  static XtParams from_matrix(const ZMatrix& t);
  // From (m00, n00, m10, n10, m01, n01, m11, n11).
  static XtParams from_list(const std::vector<long>& v);
  ZMatrix to_matrix() const;
};

}  // namespace exotic
