#include "rotsym/permclass.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace rotsym {

SimilarityFingerprint fingerprint(const gf2::Matrix& m) {
  const unsigned n = m.size();
  if (gf2::rank(m) != n) throw std::domain_error("fingerprint: matrix is singular");
  SimilarityFingerprint fp;
  for (auto p : gf2::irreducibles_dividing(n)) {
    const gf2::Matrix base = gf2::polyeval(p, m);
    unsigned rk = gf2::rank(base);
    if (rk == n) continue;  // p does not divide the characteristic polynomial
    gf2::Matrix pw = base;
    for (unsigned k = 1; k <= n; ++k) {
      if (k > 1) {
        pw = pw * base;
        rk = gf2::rank(pw);
      }
      fp.entries.push_back({p, k, rk});
    }
  }
  return fp;
}

SimilarityFingerprint fingerprint(const CoordPerm& p) { return fingerprint(gf2::perm_matrix(p)); }

namespace {

std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_classify_n(unsigned n) {
  if (n == 0 || n > kMaxClassifyVars) {
    throw std::invalid_argument("classify supports 1 <= n <= " + std::to_string(kMaxClassifyVars) +
                                ", got " + std::to_string(n));
  }
}

struct Bucket {
  std::vector<unsigned> type;
  CoordPerm first;
  std::uint64_t count;
};

std::vector<Bucket> bucket_by_cycle_type(unsigned n) {
  std::vector<Bucket> buckets;
  std::map<std::vector<unsigned>, std::size_t> index;
  std::vector<std::uint8_t> map(n);
  std::iota(map.begin(), map.end(), std::uint8_t{0});
  do {
    CoordPerm p(map);
    auto type = p.cycle_type();
    auto it = index.find(type);
    if (it == index.end()) {
      index.emplace(type, buckets.size());
      buckets.push_back({std::move(type), std::move(p), 1});
    } else {
      ++buckets[it->second].count;
    }
  } while (std::next_permutation(map.begin(), map.end()));
  return buckets;
}

}  // namespace

std::vector<PermClassRecord> classify(unsigned n) {
  check_classify_n(n);
  const auto buckets = bucket_by_cycle_type(n);

  std::vector<PermClassRecord> classes;
  for (const auto& b : buckets) {
    auto fp = fingerprint(b.first);
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const PermClassRecord& r) { return r.fp == fp; });
    if (it != classes.end()) {
      it->class_size += b.count;
      it->cycle_types.push_back(b.type);
      continue;
    }
    PermClassRecord rec{b.first, b.count, 0, 0, {b.type}, std::move(fp)};
    rec.max_orbit = b.first.order();
    rec.orbit_count = burnside_count(GroupSpec{n, {b.first}, b.first.to_string()});
    classes.push_back(std::move(rec));
  }

  std::uint64_t total = 0;
  for (const auto& c : classes) total += c.class_size;
  if (total != factorial(n)) throw std::logic_error("classify: class sizes do not sum to n!");
  return classes;
}

AuditReport audit_classification(unsigned n, const std::vector<PermClassRecord>& classes) {
  check_classify_n(n);
  std::map<std::vector<unsigned>, std::size_t> class_of_type;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const auto& t : classes[c].cycle_types) class_of_type[t] = c;
  }
  AuditReport report;
  std::vector<std::uint8_t> map(n);
  std::iota(map.begin(), map.end(), std::uint8_t{0});
  do {
    CoordPerm p(map);
    ++report.permutations;
    auto it = class_of_type.find(p.cycle_type());
    if (it == class_of_type.end() || fingerprint(p) != classes[it->second].fp) {
      ++report.mismatches;
    }
  } while (std::next_permutation(map.begin(), map.end()));
  return report;
}

std::vector<PermClassRecord> class_report(unsigned n) {
  auto classes = classify(n);
  std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    return std::tie(a.max_orbit, a.orbit_count, a.representative) <
           std::tie(b.max_orbit, b.orbit_count, b.representative);
  });
  return classes;
}

std::optional<std::size_t> find_class(const std::vector<PermClassRecord>& classes,
                                      const CoordPerm& p) {
  if (classes.empty() || classes.front().representative.num_vars() != p.num_vars()) {
    return std::nullopt;
  }
  const auto fp = fingerprint(p);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].fp == fp) return c;
  }
  return std::nullopt;
}

namespace {

std::string cycle_type_string(const std::vector<unsigned>& type) {
  std::string s;
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(type[i]);
  }
  return s;
}

}  // namespace

std::string render_class_table(const std::vector<PermClassRecord>& classes,
                               const BestNlByClass& best) {
  std::ostringstream os;
  const int rep_w = classes.empty() ? 14
                                    : std::max<int>(14, static_cast<int>(
                                          classes.front().representative.to_string().size()));
  os << std::left << std::setw(rep_w) << "representative" << "  " << std::right
     << std::setw(12) << "permutations" << "  " << std::setw(10) << "max_orbit" << "  "
     << std::setw(8) << "orbits" << "  " << std::setw(7) << "best_nl" << "  "
     << "cycle_type\n";
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& r = classes[c];
    total += r.class_size;
    std::string types;
    for (const auto& t : r.cycle_types) {
      if (!types.empty()) types += " | ";
      types += cycle_type_string(t);
    }
    auto it = best.find(c);
    os << std::left << std::setw(rep_w) << r.representative.to_string() << "  " << std::right
       << std::setw(12) << r.class_size << "  " << std::setw(10) << r.max_orbit << "  "
       << std::setw(8) << r.orbit_count << "  " << std::setw(7)
       << (it == best.end() ? std::string("-") : std::to_string(it->second)) << "  " << types
       << '\n';
  }
  os << classes.size() << " classes, " << total << " permutations\n";
  return os.str();
}

std::string class_records_jsonl(const std::vector<PermClassRecord>& classes,
                                const BestNlByClass& best) {
  std::string out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& r = classes[c];
    nlohmann::ordered_json j;
    j["representative"] = r.representative.to_string();
    j["class_size"] = r.class_size;
    j["max_orbit"] = r.max_orbit;
    j["orbit_count"] = r.orbit_count;
    j["cycle_types"] = r.cycle_types;
    if (auto it = best.find(c); it != best.end()) j["best_nl"] = it->second;
    else j["best_nl"] = nullptr;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace rotsym
