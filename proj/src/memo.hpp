#pragma once

#include "qftalg/hopf.hpp"

namespace qftalg::detail {

// Memo tables are thread_local. They are bypassed while a coproduct
// mutation is active so corrupted values never leak into later calls.
inline bool memo_enabled() {
#ifdef QFTALG_MUTATION_HOOKS
  return testing::coproduct_mutation() == testing::CoproductMutation::None;
#else
  return true;
#endif
}

}  // namespace qftalg::detail
