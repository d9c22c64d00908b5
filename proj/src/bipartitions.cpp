#include "gac/bipartitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace gac {

namespace {

void check_parties(const std::vector<int>& parties, int n) {
  if (n < 2) throw std::invalid_argument("bipartition needs at least 2 parties");
  if (parties.empty() || static_cast<int>(parties.size()) >= n)
    throw std::invalid_argument("side S must be a nonempty proper subset");
  for (std::size_t i = 0; i < parties.size(); ++i) {
    if (parties[i] < 0 || parties[i] >= n)
      throw std::invalid_argument("party index out of range");
    if (i > 0 && parties[i] <= parties[i - 1])
      throw std::invalid_argument("party indices must be strictly increasing");
  }
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Bipartition::Bipartition(std::vector<int> parties, int n)
    : parties_(std::move(parties)), n_(n) {
  check_parties(parties_, n_);
}

std::vector<int> Bipartition::complement_parties() const {
  std::vector<int> out;
  out.reserve(n_ - parties_.size());
  std::size_t j = 0;
  for (int p = 0; p < n_; ++p) {
    if (j < parties_.size() && parties_[j] == p) {
      ++j;
    } else {
      out.push_back(p);
    }
  }
  return out;
}

Bipartition Bipartition::complement() const {
  return Bipartition(complement_parties(), n_);
}

bool Bipartition::is_canonical() const {
  const int s = static_cast<int>(parties_.size());
  if (2 * s < n_) return true;
  if (2 * s > n_) return false;
  return parties_.front() == 0;
}

Bipartition Bipartition::canonical() const {
  return is_canonical() ? *this : complement();
}

std::string Bipartition::to_string() const {
  const char* sep = n_ > 10 ? "," : "";
  std::string out;
  bool first = true;
  for (int p : parties_) {
    if (!first) out += sep;
    out += std::to_string(p);
    first = false;
  }
  out += '|';
  first = true;
  for (int p : complement_parties()) {
    if (!first) out += sep;
    out += std::to_string(p);
    first = false;
  }
  return out;
}

BipartitionSet enumerate_bipartitions(int n) {
  if (n < 2) throw std::invalid_argument("enumerate_bipartitions: n must be >= 2");
  BipartitionSet set{n, {}};
  for (int s = 1; 2 * s <= n; ++s) {
    // lexicographic s-subsets of {0..n-1}
    std::vector<int> subset(s);
    for (int i = 0; i < s; ++i) subset[i] = i;
    while (true) {
      if (2 * s < n || subset.front() == 0)
        set.members.emplace_back(subset, n);
      int i = s - 1;
      while (i >= 0 && subset[i] == n - s + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < s; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return set;
}

std::uint64_t cardinality(int n) {
  if (n < 2) throw std::invalid_argument("cardinality: n must be >= 2");
  std::uint64_t c = 0;
  if (n % 2 == 1) {
    for (int m = 1; m <= (n - 1) / 2; ++m) c += binomial(n, m);
  } else {
    for (int m = 1; m <= (n - 2) / 2; ++m) c += binomial(n, m);
    c += binomial(n, n / 2) / 2;
  }
  return c;
}

}  // namespace gac
