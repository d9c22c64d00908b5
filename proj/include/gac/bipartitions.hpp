#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gac {

/// One unordered split S|S-bar of n parties, stored as the sorted party set S.
///
/// Canonical form keeps the smaller side as S; for even splits (|S| = n/2)
/// the side containing party 0 is kept. Enumeration emits canonical members
/// only, so each unordered split appears exactly once; non-canonical
/// bipartitions remain constructible (e.g. as complements).
class Bipartition {
public:
  Bipartition(std::vector<int> parties, int n);

  const std::vector<int>& parties() const { return parties_; }
  int n() const { return n_; }
  std::vector<int> complement_parties() const;
  Bipartition complement() const;

  bool is_canonical() const;
  Bipartition canonical() const;

  /// Render as "S|S-bar", e.g. "0|12", "01|23". Comma-separated above 10 parties.
  std::string to_string() const;

  bool operator==(const Bipartition& other) const = default;

private:
  std::vector<int> parties_;
  int n_;
};

struct BipartitionSet {
  int n;
  std::vector<Bipartition> members;
};

/// All canonical bipartitions of n parties, ordered by |S| then
/// lexicographically. Deterministic across calls.
BipartitionSet enumerate_bipartitions(int n);

/// c(beta): the number of distinct bipartitions, via the piecewise binomial
/// sum (half weight on the middle binomial for even n). Equals 2^(n-1) - 1.
std::uint64_t cardinality(int n);

}  // namespace gac
