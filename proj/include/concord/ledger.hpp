#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "concord/invariants.hpp"
#include "concord/seifert.hpp"

namespace concord {

// Closed integer interval [lo, hi], optionally restricted to even values.
// Exact knowledge is lo == hi. Immutable.
class BoundedValue {
 public:
  BoundedValue(Int lo, Int hi, bool even_only = false)
      : lo_(std::move(lo)), hi_(std::move(hi)), even_only_(even_only) {
    if (lo_ > hi_) fail(errc::empty_interval, "lower bound exceeds upper bound");
    if (even_only_ && (!is_even(lo_) || !is_even(hi_)))
      fail(errc::empty_interval, "even-only interval needs even endpoints");
  }

  static BoundedValue exact(Int v, bool even_only = false) {
    Int copy = v;
    return BoundedValue(std::move(v), std::move(copy), even_only);
  }

  const Int& lo() const { return lo_; }
  const Int& hi() const { return hi_; }
  bool even_only() const { return even_only_; }
  bool is_exact() const { return lo_ == hi_; }

  bool contains(const Int& v) const {
    if (v < lo_ || v > hi_) return false;
    return !even_only_ || is_even(v);
  }

  // Minkowski sum; the parity restriction survives only if both sides carry it.
  BoundedValue sum(const BoundedValue& other) const {
    return BoundedValue(lo_ + other.lo_, hi_ + other.hi_, even_only_ && other.even_only_);
  }

  // Widen both endpoints by radius; parity survives only for even radii.
  BoundedValue widened(const Int& radius) const {
    return BoundedValue(lo_ - radius, hi_ + radius, even_only_ && is_even(radius));
  }

  // Intersect with [clamp_lo, clamp_hi], rounding inward to even endpoints
  // when the interval is even-only. Errors if the intersection is empty.
  BoundedValue clamped(const Int& clamp_lo, const Int& clamp_hi) const {
    Int lo = lo_ > clamp_lo ? lo_ : clamp_lo;
    Int hi = hi_ < clamp_hi ? hi_ : clamp_hi;
    if (even_only_) {
      if (!is_even(lo)) lo += 1;
      if (!is_even(hi)) hi -= 1;
    }
    if (lo > hi) fail(errc::empty_interval, "clamp leaves no admissible value");
    return BoundedValue(std::move(lo), std::move(hi), even_only_);
  }

  friend bool operator==(const BoundedValue& a, const BoundedValue& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.even_only_ == b.even_only_;
  }
  friend bool operator!=(const BoundedValue& a, const BoundedValue& b) { return !(a == b); }

  std::string to_string() const {
    return "[" + lo_.str() + ", " + hi_.str() + "]" + (even_only_ ? " even" : "");
  }

 private:
  Int lo_, hi_;
  bool even_only_;
};

// A named knot together with everything the ledger knows about it. The tau
// and s intervals come from cited facts, never from the matrix; s is always
// even-only. delta tags are opaque: only equality between them means anything.
struct KnotRecord {
  std::string name;
  std::optional<SeifertMatrix> matrix;
  BoundedValue tau;
  BoundedValue s;
  std::optional<std::string> delta_tag;
  std::vector<std::string> provenance;

  KnotRecord renamed(std::string new_name) const {
    KnotRecord copy = *this;
    copy.name = std::move(new_name);
    return copy;
  }
};

// Canonical names of the four built-in twisted doubles D+(T_{p,q}, framing).
namespace doubles {
inline constexpr std::string_view t23_framing2 = "D+(T2,3;2)";
inline constexpr std::string_view t25_framing4 = "D+(T2,5;4)";
inline constexpr std::string_view t23_framing0 = "D+(T2,3;0)";
inline constexpr std::string_view t25_framing0 = "D+(T2,5;0)";
}  // namespace doubles

// Read-only table of exact (tau, s) values for the twisted doubles, each
// entry carrying its literature citation. These values are imported facts:
// they cannot be computed from Seifert data at this level.
class AxiomStore {
 public:
  struct Entry {
    Int tau;
    Int s;
    Int framing;
    std::vector<std::string> citations;
    std::optional<std::string> delta_tag;
  };

  static AxiomStore builtin() {
    AxiomStore store;
    store.add(std::string(doubles::t23_framing2), Entry{0, 2, 2, {"[ho]"}, std::nullopt});
    store.add(std::string(doubles::t25_framing4), Entry{0, 2, 4, {"[ho]"}, std::nullopt});
    store.add(std::string(doubles::t23_framing0),
              Entry{1, 2, 0, {"[liv2]", "[mo]"}, "delta(D+(T2,3;0))"});
    store.add(std::string(doubles::t25_framing0),
              Entry{1, 2, 0, {"[liv2]", "[mo]"}, "delta(D+(T2,5;0))"});
    return store;
  }

  static AxiomStore empty() { return AxiomStore{}; }

  void add(std::string name, Entry entry) { table_.emplace(std::move(name), std::move(entry)); }

  bool contains(std::string_view name) const { return table_.find(name) != table_.end(); }

  KnotRecord known_double(std::string_view name) const {
    const auto it = table_.find(name);
    if (it == table_.end()) fail(errc::unknown_axiom, "no axiom for '" + std::string(name) + "'");
    const Entry& e = it->second;
    return KnotRecord{std::string(name),
                      double_seifert(e.framing),
                      BoundedValue::exact(e.tau),
                      BoundedValue::exact(e.s, /*even_only=*/true),
                      e.delta_tag,
                      e.citations};
  }

 private:
  std::map<std::string, Entry, std::less<>> table_;
};

inline KnotRecord known_double(std::string_view name) {
  return AxiomStore::builtin().known_double(name);
}

// Connected sum: tau and s are additive, so the intervals add. Matrices add
// as block sums when both are known; opaque delta tags do not combine.
inline KnotRecord connect_sum(const KnotRecord& a, const KnotRecord& b) {
  std::optional<SeifertMatrix> matrix;
  if (a.matrix && b.matrix) matrix = direct_sum(*a.matrix, *b.matrix);
  std::vector<std::string> provenance = a.provenance;
  provenance.insert(provenance.end(), b.provenance.begin(), b.provenance.end());
  return KnotRecord{a.name + " # " + b.name,
                    std::move(matrix),
                    a.tau.sum(b.tau),
                    a.s.sum(b.s),
                    std::nullopt,
                    std::move(provenance)};
}

// One band move: tau moves by at most +-1 and s by at most +-2, after which
// s is clamped to even values within [-2g, 2g] for the new genus g. The tau
// interval is deliberately not genus-clamped.
inline KnotRecord band_move_update(const KnotRecord& r, const SeifertMatrix& after,
                                   std::size_t band_index) {
  if (!r.matrix) fail(errc::missing_matrix, "band move needs the record's Seifert matrix");
  if (!is_band_move(*r.matrix, after, band_index))
    fail(errc::not_a_band_move, "matrices do not differ by a band move at index " +
                                    std::to_string(band_index));
  const Int genus_bound = Int(2) * static_cast<int>(genus(after));
  std::vector<std::string> provenance = r.provenance;
  provenance.push_back("[ln]");
  return KnotRecord{r.name,
                    after,
                    r.tau.widened(1),
                    r.s.widened(2).clamped(-genus_bound, genus_bound),
                    r.delta_tag,
                    std::move(provenance)};
}

enum class Certificate { certified, uncertified };

inline const char* to_string(Certificate c) {
  return c == Certificate::certified ? "certified" : "uncertified";
}

// Certified iff every tau in the interval differs from every s/2: the
// interval 2*tau lies strictly left or strictly right of the interval s.
// Uncertified asserts nothing.
inline Certificate tau_neq_s_half(const KnotRecord& r) {
  const bool disjoint = 2 * r.tau.hi() < r.s.lo() || 2 * r.tau.lo() > r.s.hi();
  return disjoint ? Certificate::certified : Certificate::uncertified;
}

// Rank-3 certificate for the homomorphisms (tau, s/2, delta) evaluated on
// (a, b, c). The certified pattern needs:
//   (i)   a and b exact with 2*tau = s and a common nonzero tau value,
//   (ii)  distinct delta tags on a and b,
//   (iii) a certified tau != s/2 gap on c.
// The value matrix then has determinant tau_a*(delta_a - delta_b)*(s_c/2 -
// tau_c) != 0. The common-nonzero-tau requirement keeps the certificate
// sound while delta stays opaque: without it the determinant would need
// arithmetic on delta values, which equality of tags cannot supply.
inline Certificate summand_rank3_certificate(const KnotRecord& a, const KnotRecord& b,
                                             const KnotRecord& c) {
  const auto exact_half_s = [](const KnotRecord& r) {
    return r.tau.is_exact() && r.s.is_exact() && 2 * r.tau.lo() == r.s.lo();
  };
  if (!exact_half_s(a) || !exact_half_s(b)) return Certificate::uncertified;
  if (a.tau.lo() != b.tau.lo() || a.tau.lo() == 0) return Certificate::uncertified;
  if (!a.delta_tag || !b.delta_tag || *a.delta_tag == *b.delta_tag)
    return Certificate::uncertified;
  if (tau_neq_s_half(c) != Certificate::certified) return Certificate::uncertified;
  return Certificate::certified;
}

enum class SliceStatus { topologically_slice, unknown };

inline const char* to_string(SliceStatus s) {
  return s == SliceStatus::topologically_slice ? "topologically_slice" : "unknown";
}

// Freedman's criterion as a labeling rule: a known matrix with trivial
// Alexander polynomial certifies topological sliceness. Anything else is
// unknown, never "not slice".
inline SliceStatus topologically_slice(const KnotRecord& r) {
  if (r.matrix && is_alexander_one(*r.matrix)) return SliceStatus::topologically_slice;
  return SliceStatus::unknown;
}

}  // namespace concord
