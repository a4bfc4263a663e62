#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lrb {

// Finite poset stored as a dense order relation plus its Hasse diagram.
class Poset {
 public:
  Poset() = default;

  // `leq` is row-major n x n; leq[a*n+b] != 0 iff a <= b.  The partial
  // order axioms are verified unless `check` is false.
  static Poset from_leq(int n, std::vector<char> leq, bool check = true);
  // Cover pairs (a, b) meaning a is covered by b.  The transitive closure is
  // taken; cycles are rejected.
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * n_ + b] != 0; }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  const std::vector<int>& upper_covers(int a) const { return up_[a]; }
  const std::vector<int>& lower_covers(int a) const { return down_[a]; }
  std::vector<std::pair<int, int>> covers() const;

  // Bottom-up linear extension: by height, ties broken by index.
  std::vector<int> linear_extension() const;
  // Length of the longest chain ending at each element.
  const std::vector<int>& heights() const { return height_; }
  int length() const;  // longest chain length (number of steps)
  // Ranks if every cover raises the height by exactly one.
  bool is_graded() const;

  std::vector<int> minimal() const;
  std::vector<int> maximal() const;
  std::optional<int> minimum() const;
  std::optional<int> maximum() const;

  std::vector<int> strictly_below(int a) const;
  std::vector<int> strictly_above(int a) const;
  std::vector<int> closed_interval(int a, int b) const;
  std::vector<int> open_interval(int a, int b) const;

  // Sub-poset on `elems`; element i of the result is elems[i].
  Poset induced(const std::vector<int>& elems) const;
  Poset opposite() const;

  // mu(a, b) in row-major order; zero unless a <= b.
  std::vector<std::int64_t> mobius() const;

  std::vector<std::string> labels;

 private:
  void finish();

  int n_ = 0;
  std::vector<char> leq_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::vector<int> height_;
};

// Element counts by height; requires a graded poset.
std::vector<std::int64_t> f_vector(const Poset& p);
// Chain counts keyed by the set of heights visited (the flag vector).  The
// empty chain is not recorded.
std::map<std::vector<int>, std::int64_t> flag_vector(const Poset& p);
std::int64_t euler_characteristic(const Poset& p);
// Graded and every rank-2 closed interval has exactly four elements.
bool is_thin(const Poset& p);

}  // namespace lrb
