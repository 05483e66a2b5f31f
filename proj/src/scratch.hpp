#pragma once
#include <map>
#include <mutex>
#include <unordered_map>

#include "bw/homalg.hpp"
#include "bw/strings.hpp"

namespace bw {

/* Per-algebra mutable caches, guarded by one mutex.  Hidden behind an
 * incomplete type so the public headers stay acyclic. */
struct AlgebraScratch {
  std::mutex mu;
  std::vector<RepPtr> projectives;
  std::map<int, std::vector<StringWord>> strings_by_len;
  /* Definitive (exact/infinite) results only; at_least is budget-relative. */
  std::unordered_map<std::string, PdimResult> pdim_memo;
};

}  // namespace bw
