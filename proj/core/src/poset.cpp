#include "lrb/poset.hpp"

#include <algorithm>
#include <numeric>

#include "lrb/error.hpp"

namespace lrb {

Poset Poset::from_leq(int n, std::vector<char> leq, bool check) {
  Poset p;
  p.n_ = n;
  p.leq_ = std::move(leq);
  for (int a = 0; a < n && check; ++a) {
    if (!p.leq(a, a)) throw Error("NotReflexive", std::to_string(a));
  }
  for (int a = 0; a < n && check; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && p.leq(a, b) && p.leq(b, a)) {
        throw Error("NotAntisymmetric", std::to_string(a) + "," + std::to_string(b));
      }
    }
  }
  for (int a = 0; a < n && check; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!p.leq(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (p.leq(b, c) && !p.leq(a, c)) {
          throw Error("NotTransitive", std::to_string(a) + "," + std::to_string(b) +
                                           "," + std::to_string(c));
        }
      }
    }
  }
  p.finish();
  return p;
}

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<std::vector<int>> succ(n);
  for (const auto& [a, b] : covers) succ[a].push_back(b);
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    std::vector<int> stack{a};
    leq[static_cast<std::size_t>(a) * n + a] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : succ[x]) {
        if (y == a) throw Error("NotAcyclic", std::to_string(a));
        char& cell = leq[static_cast<std::size_t>(a) * n + y];
        if (!cell) {
          cell = 1;
          stack.push_back(y);
        }
      }
    }
  }
  Poset p;
  p.n_ = n;
  p.leq_ = std::move(leq);
  p.finish();
  return p;
}

void Poset::finish() {
  up_.assign(n_, {});
  down_.assign(n_, {});
  // Bitset form of the strict relation; a < b is a cover iff nothing lies
  // strictly between them.
  const std::size_t words = (static_cast<std::size_t>(n_) + 63) / 64;
  std::vector<std::uint64_t> above(words * n_, 0);
  std::vector<std::uint64_t> below(words * n_, 0);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (!lt(a, b)) continue;
      above[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
      below[b * words + a / 64] |= std::uint64_t{1} << (a % 64);
    }
  }
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (!lt(a, b)) continue;
      bool cover = true;
      for (std::size_t w = 0; w < words && cover; ++w) {
        if (above[a * words + w] & below[b * words + w]) cover = false;
      }
      if (cover) {
        up_[a].push_back(b);
        down_[b].push_back(a);
      }
    }
  }
  // Heights via a topological order on the strict relation.
  std::vector<int> nbelow(n_, 0);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (lt(b, a)) ++nbelow[a];
    }
  }
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return nbelow[x] < nbelow[y]; });
  height_.assign(n_, 0);
  for (int a : order) {
    for (int c : down_[a]) height_[a] = std::max(height_[a], height_[c] + 1);
  }
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a) {
    for (int b : up_[a]) out.emplace_back(a, b);
  }
  return out;
}

std::vector<int> Poset::linear_extension() const {
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return height_[x] < height_[y]; });
  return order;
}

int Poset::length() const {
  int m = 0;
  for (int h : height_) m = std::max(m, h);
  return n_ == 0 ? -1 : m;
}

bool Poset::is_graded() const {
  for (int a = 0; a < n_; ++a) {
    if (down_[a].empty() && height_[a] != 0) return false;
    for (int b : up_[a]) {
      if (height_[b] != height_[a] + 1) return false;
    }
  }
  return true;
}

std::vector<int> Poset::minimal() const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a) {
    if (down_[a].empty()) out.push_back(a);
  }
  return out;
}

std::vector<int> Poset::maximal() const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a) {
    if (up_[a].empty()) out.push_back(a);
  }
  return out;
}

std::optional<int> Poset::minimum() const {
  auto m = minimal();
  if (m.size() == 1) return m[0];
  return std::nullopt;
}

std::optional<int> Poset::maximum() const {
  auto m = maximal();
  if (m.size() == 1) return m[0];
  return std::nullopt;
}

std::vector<int> Poset::strictly_below(int a) const {
  std::vector<int> out;
  for (int b = 0; b < n_; ++b) {
    if (lt(b, a)) out.push_back(b);
  }
  return out;
}

std::vector<int> Poset::strictly_above(int a) const {
  std::vector<int> out;
  for (int b = 0; b < n_; ++b) {
    if (lt(a, b)) out.push_back(b);
  }
  return out;
}

std::vector<int> Poset::closed_interval(int a, int b) const {
  std::vector<int> out;
  for (int c = 0; c < n_; ++c) {
    if (leq(a, c) && leq(c, b)) out.push_back(c);
  }
  return out;
}

std::vector<int> Poset::open_interval(int a, int b) const {
  std::vector<int> out;
  for (int c = 0; c < n_; ++c) {
    if (lt(a, c) && lt(c, b)) out.push_back(c);
  }
  return out;
}

Poset Poset::induced(const std::vector<int>& elems) const {
  const int m = static_cast<int>(elems.size());
  std::vector<char> rel(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      rel[static_cast<std::size_t>(i) * m + j] = leq(elems[i], elems[j]) ? 1 : 0;
    }
  }
  Poset p;
  p.n_ = m;
  p.leq_ = std::move(rel);
  if (!labels.empty()) {
    for (int e : elems) p.labels.push_back(labels[e]);
  }
  p.finish();
  return p;
}

Poset Poset::opposite() const {
  std::vector<char> rel(leq_.size());
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      rel[static_cast<std::size_t>(a) * n_ + b] = leq(b, a) ? 1 : 0;
    }
  }
  Poset p;
  p.n_ = n_;
  p.leq_ = std::move(rel);
  p.labels = labels;
  p.finish();
  return p;
}

std::vector<std::int64_t> Poset::mobius() const {
  const std::vector<int> order = linear_extension();
  std::vector<std::int64_t> mu(static_cast<std::size_t>(n_) * n_, 0);
  for (int a = 0; a < n_; ++a) {
    mu[static_cast<std::size_t>(a) * n_ + a] = 1;
    for (int b : order) {
      if (!lt(a, b)) continue;
      std::int64_t s = 0;
      for (int c = 0; c < n_; ++c) {
        if (leq(a, c) && lt(c, b)) s += mu[static_cast<std::size_t>(a) * n_ + c];
      }
      mu[static_cast<std::size_t>(a) * n_ + b] = -s;
    }
  }
  return mu;
}

std::vector<std::int64_t> f_vector(const Poset& p) {
  if (!p.is_graded()) throw Error("NotGraded", "f-vector needs a graded poset");
  std::vector<std::int64_t> f(p.length() + 1, 0);
  for (int h : p.heights()) ++f[h];
  return f;
}

std::map<std::vector<int>, std::int64_t> flag_vector(const Poset& p) {
  if (!p.is_graded()) throw Error("NotGraded", "flag vector needs a graded poset");
  std::map<std::vector<int>, std::int64_t> out;
  std::vector<int> ranks;
  // Chains are extended upwards through every strictly larger element.
  std::vector<std::vector<int>> above(p.size());
  for (int a = 0; a < p.size(); ++a) above[a] = p.strictly_above(a);
  auto rec = [&](auto&& self, int a) -> void {
    ranks.push_back(p.heights()[a]);
    ++out[ranks];
    for (int b : above[a]) self(self, b);
    ranks.pop_back();
  };
  for (int a = 0; a < p.size(); ++a) rec(rec, a);
  return out;
}

std::int64_t euler_characteristic(const Poset& p) {
  std::int64_t chi = 0;
  for (int h : p.heights()) chi += (h % 2 == 0) ? 1 : -1;
  return chi;
}

bool is_thin(const Poset& p) {
  if (!p.is_graded()) return false;
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      if (p.leq(a, b) && p.heights()[b] - p.heights()[a] == 2 &&
          p.closed_interval(a, b).size() != 4) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace lrb
