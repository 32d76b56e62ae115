#include "rotsym/orbits.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rotsym {

CoordPerm CoordPerm::identity(unsigned n) {
  std::vector<std::uint8_t> map(n);
  std::iota(map.begin(), map.end(), std::uint8_t{0});
  return CoordPerm(std::move(map));
}

CoordPerm::CoordPerm(std::vector<std::uint8_t> map) : map_(std::move(map)) {
  const std::size_t n = map_.size();
  if (n == 0 || n > kMaxVars) {
    throw std::invalid_argument("permutation length must be in [1, " + std::to_string(kMaxVars) +
                                "]");
  }
  std::vector<bool> seen(n, false);
  for (auto v : map_) {
    if (v >= n || seen[v]) {
      throw std::invalid_argument("not a permutation of 0.." + std::to_string(n - 1) + ": " +
                                  to_string());
    }
    seen[v] = true;
  }
}

std::size_t CoordPerm::apply(std::size_t x) const noexcept {
  std::size_t y = 0;
  for (unsigned j = 0; j < map_.size(); ++j) y |= ((x >> map_[j]) & 1u) << j;
  return y;
}

CoordPerm operator*(const CoordPerm& p, const CoordPerm& q) {
  if (p.num_vars() != q.num_vars()) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::uint8_t> map(p.num_vars());
  for (unsigned j = 0; j < map.size(); ++j) map[j] = q.map_[p.map_[j]];
  return CoordPerm(std::move(map));
}

CoordPerm CoordPerm::inverse() const {
  std::vector<std::uint8_t> inv(map_.size());
  for (unsigned j = 0; j < map_.size(); ++j) inv[map_[j]] = static_cast<std::uint8_t>(j);
  return CoordPerm(std::move(inv));
}

bool CoordPerm::is_identity() const noexcept {
  for (unsigned j = 0; j < map_.size(); ++j) {
    if (map_[j] != j) return false;
  }
  return true;
}

std::vector<unsigned> CoordPerm::cycle_type() const {
  std::vector<unsigned> lengths;
  std::vector<bool> seen(map_.size(), false);
  for (unsigned s = 0; s < map_.size(); ++s) {
    if (seen[s]) continue;
    unsigned len = 0;
    for (unsigned j = s; !seen[j]; j = map_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::size_t CoordPerm::cycle_count() const noexcept {
  std::size_t count = 0;
  std::uint32_t seen = 0;
  for (unsigned s = 0; s < map_.size(); ++s) {
    if (seen & (1u << s)) continue;
    ++count;
    for (unsigned j = s; !(seen & (1u << j)); j = map_[j]) seen |= 1u << j;
  }
  return count;
}

std::uint64_t CoordPerm::order() const {
  std::uint64_t ord = 1;
  for (auto len : cycle_type()) ord = std::lcm(ord, std::uint64_t{len});
  return ord;
}

std::string CoordPerm::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < map_.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(map_[j]);
  }
  return s + ")";
}

CoordPerm rho(unsigned n, unsigned i) {
  if (n == 0 || n > kMaxVars) throw std::invalid_argument("rho: bad variable count");
  std::vector<std::uint8_t> map(n);
  for (unsigned j = 0; j < n; ++j) map[j] = static_cast<std::uint8_t>((j + i) % n);
  return CoordPerm(std::move(map));
}

CoordPerm tau(unsigned n) {
  if (n == 0 || n > kMaxVars) throw std::invalid_argument("tau: bad variable count");
  std::vector<std::uint8_t> map(n);
  for (unsigned j = 0; j < n; ++j) map[j] = static_cast<std::uint8_t>(n - 1 - j);
  return CoordPerm(std::move(map));
}

std::uint32_t OrbitPartition::max_orbit_size() const noexcept {
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

OrbitPartition orbit_partition(const GroupSpec& g) {
  if (g.n == 0 || g.n > kMaxVars) throw std::invalid_argument("orbit_partition: bad n");
  for (const auto& p : g.generators) {
    if (p.num_vars() != g.n) throw std::invalid_argument("generator size does not match n");
  }
  constexpr auto kUnvisited = std::numeric_limits<std::uint32_t>::max();
  const std::size_t size = std::size_t{1} << g.n;

  OrbitPartition part;
  part.n = g.n;
  part.orbit_of.assign(size, kUnvisited);

  std::vector<std::uint32_t> queue;
  queue.reserve(size);
  for (std::size_t start = 0; start < size; ++start) {
    if (part.orbit_of[start] != kUnvisited) continue;
    const auto id = static_cast<std::uint32_t>(part.reps.size());
    part.reps.push_back(static_cast<std::uint32_t>(start));
    queue.clear();
    queue.push_back(static_cast<std::uint32_t>(start));
    part.orbit_of[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& p : g.generators) {
        const std::size_t y = p.apply(queue[head]);
        if (part.orbit_of[y] == kUnvisited) {
          part.orbit_of[y] = id;
          queue.push_back(static_cast<std::uint32_t>(y));
        }
      }
    }
    part.sizes.push_back(static_cast<std::uint32_t>(queue.size()));
  }
  return part;
}

std::shared_ptr<const OrbitPartition> shared_orbit_partition(const GroupSpec& g) {
  return std::make_shared<const OrbitPartition>(orbit_partition(g));
}

std::vector<CoordPerm> group_closure(const GroupSpec& g, std::size_t cap) {
  std::set<CoordPerm> seen;
  std::vector<CoordPerm> elements;
  std::deque<CoordPerm> frontier;
  auto id = CoordPerm::identity(g.n);
  seen.insert(id);
  elements.push_back(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    const CoordPerm cur = frontier.front();
    frontier.pop_front();
    for (const auto& gen : g.generators) {
      CoordPerm next = gen * cur;
      if (seen.insert(next).second) {
        if (elements.size() >= cap) {
          throw std::length_error("group closure exceeds " + std::to_string(cap) + " elements");
        }
        elements.push_back(next);
        frontier.push_back(std::move(next));
      }
    }
  }
  return elements;
}

std::uint64_t burnside_count(const GroupSpec& g, std::size_t cap) {
  const auto elements = group_closure(g, cap);
  std::uint64_t fixed = 0;
  for (const auto& e : elements) fixed += std::uint64_t{1} << e.cycle_count();
  return fixed / elements.size();
}

std::uint64_t euler_phi(std::uint64_t t) {
  std::uint64_t result = t;
  for (std::uint64_t p = 2; p * p <= t; ++p) {
    if (t % p == 0) {
      while (t % p == 0) t /= p;
      result -= result / p;
    }
  }
  if (t > 1) result -= result / t;
  return result;
}

namespace {

void check_divides(unsigned n, unsigned k) {
  if (n == 0 || n > 62) throw std::invalid_argument("orbit count: n out of range");
  if (k == 0 || n % k != 0) {
    throw std::invalid_argument("k = " + std::to_string(k) + " does not divide n = " +
                                std::to_string(n));
  }
}

}  // namespace

std::uint64_t count_k_rsbf(unsigned n, unsigned k) {
  check_divides(n, k);
  const unsigned m = n / k;
  std::uint64_t sum = 0;
  for (unsigned t = 1; t <= m; ++t) {
    if (m % t == 0) sum += euler_phi(t) << (n / t);
  }
  return sum * k / n;
}

std::uint64_t count_k_dsbf(unsigned n, unsigned k) {
  const std::uint64_t g = count_k_rsbf(n, k);
  // twice the correction term l
  std::uint64_t two_l;
  if (n % 2 == 1) {
    two_l = std::uint64_t{1} << ((n + 1) / 2);
  } else if (k % 2 == 0) {
    two_l = std::uint64_t{1} << (n / 2);
  } else {
    two_l = std::uint64_t{3} << (n / 2 - 1);
  }
  return (g + two_l) / 2;
}

}  // namespace rotsym
