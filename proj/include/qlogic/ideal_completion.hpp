#pragma once

// Distributive-ideal completion DI(L) of explicit finite bounded lattices.
//
// A distributive ideal is a nonempty down-set I such that whenever a nonempty
// subset X of I has a distributive join, i.e. (∨X) ∧ y = ∨{x ∧ y : x ∈ X} for
// every y in L, then ∨X belongs to I. DI(L) ordered by inclusion is a
// distributive lattice; meets are intersections and joins are the least
// distributive ideal above the union.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <qlogic/error.hpp>

namespace qlogic {

using ElementMask = std::uint32_t;

class NotALattice : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FiniteLattice {
 public:
  static constexpr std::size_t kMaxElements = 24;

  /// `leq[i][j]` is i <= j. Rejects anything that is not a bounded lattice, and
  /// an `ortho` map that is not an order-reversing involutive complementation.
  FiniteLattice(std::vector<std::vector<bool>> leq, std::optional<std::vector<std::size_t>> ortho = {},
                std::vector<std::string> names = {})
      : n_(leq.size()), ortho_(std::move(ortho)), names_(std::move(names)) {
    if (n_ == 0 || n_ > kMaxElements)
      throw NotALattice("lattice size must be in 1.." + std::to_string(kMaxElements));
    down_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      if (leq[i].size() != n_) throw NotALattice("order relation is not square");
      for (std::size_t j = 0; j < n_; ++j)
        if (leq[j][i]) down_[i] |= bit(j);
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (!(down_[i] & bit(i))) throw NotALattice("order is not reflexive at " + std::to_string(i));
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && this->leq(i, j) && this->leq(j, i))
          throw NotALattice("order is not antisymmetric");
        if (this->leq(j, i) && (down_[j] & ~down_[i]))
          throw NotALattice("order is not transitive");
      }
    }
    meet_.assign(n_ * n_, 0);
    join_.assign(n_ * n_, 0);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        meet_[a * n_ + b] = extremum(down_[a] & down_[b], /*greatest=*/true, a, b);
        join_[a * n_ + b] = extremum(up(a) & up(b), /*greatest=*/false, a, b);
      }
    bottom_ = meet_all(full_mask());
    top_ = join_all(full_mask());
    if (names_.empty())
      for (std::size_t i = 0; i < n_; ++i) names_.push_back(std::to_string(i));
    if (names_.size() != n_) throw NotALattice("wrong number of element names");
    if (ortho_) check_ortho();
  }

  /// Builds the order from generating pairs (i, j) meaning i <= j, closing
  /// reflexively and transitively.
  static FiniteLattice from_relations(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                      std::optional<std::vector<std::size_t>> ortho = {},
                                      std::vector<std::string> names = {}) {
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
    for (auto [i, j] : pairs) {
      if (i >= n || j >= n) throw NotALattice("element index out of range");
      rel[i][j] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (rel[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (rel[k][j]) rel[i][j] = true;
    return FiniteLattice(std::move(rel), std::move(ortho), std::move(names));
  }

  std::size_t size() const { return n_; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  bool leq(std::size_t a, std::size_t b) const { return down_[b] & bit(a); }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * n_ + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * n_ + b]; }
  /// Mask of all elements <= a.
  ElementMask down_mask(std::size_t a) const { return down_[a]; }
  ElementMask full_mask() const { return n_ == 32 ? ~ElementMask{0} : (ElementMask{1} << n_) - 1; }
  const std::optional<std::vector<std::size_t>>& ortho() const { return ortho_; }
  const std::string& name(std::size_t a) const { return names_[a]; }

  /// Join of a mask; the empty mask joins to bottom.
  std::size_t join_all(ElementMask m) const {
    std::size_t acc = bottom_;
    if (m == 0) return acc;
    acc = std::countr_zero(m);
    for (m &= m - 1; m; m &= m - 1) acc = join(acc, std::countr_zero(m));
    return acc;
  }
  std::size_t meet_all(ElementMask m) const {
    std::size_t acc = std::countr_zero(m);
    for (m &= m - 1; m; m &= m - 1) acc = meet(acc, std::countr_zero(m));
    return acc;
  }

  static ElementMask bit(std::size_t i) { return ElementMask{1} << i; }

 private:
  ElementMask up(std::size_t a) const {
    ElementMask m = 0;
    for (std::size_t j = 0; j < n_; ++j)
      if (leq(a, j)) m |= bit(j);
    return m;
  }

  std::size_t extremum(ElementMask candidates, bool greatest, std::size_t a, std::size_t b) const {
    for (ElementMask rest = candidates; rest; rest &= rest - 1) {
      std::size_t c = std::countr_zero(rest);
      ElementMask related = greatest ? down_[c] : up(c);
      if ((related & candidates) == candidates) return c;
    }
    throw NotALattice(std::string("no ") + (greatest ? "meet" : "join") + " for elements " +
                      std::to_string(a) + " and " + std::to_string(b));
  }

  void check_ortho() const {
    const auto& o = *ortho_;
    if (o.size() != n_) throw NotALattice("ortho map has wrong size");
    for (std::size_t a = 0; a < n_; ++a) {
      if (o[a] >= n_ || o[o[a]] != a) throw NotALattice("ortho map is not an involution");
      if (meet(a, o[a]) != bottom_ || join(a, o[a]) != top_)
        throw NotALattice("ortho(" + std::to_string(a) + ") is not a complement");
      for (std::size_t b = 0; b < n_; ++b)
        if (leq(a, b) && !leq(o[b], o[a])) throw NotALattice("ortho map is not order-reversing");
    }
  }

  std::size_t n_;
  std::vector<ElementMask> down_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  std::optional<std::vector<std::size_t>> ortho_;
  std::vector<std::string> names_;
};

/// MO_n: bottom 0, atoms a, a', b, b', ... (pairwise incomparable), top 1.
/// Elements: 0 = bottom, 1..2n the atoms in pairs, 2n+1 = top.
inline FiniteLattice mo_lattice(std::size_t pairs) {
  if (pairs < 1 || 2 * pairs + 2 > FiniteLattice::kMaxElements)
    throw std::invalid_argument("MO_n needs 1 <= n <= 11");
  const std::size_t n = 2 * pairs + 2, top = n - 1;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  std::vector<std::size_t> ortho(n);
  std::vector<std::string> names(n);
  names[0] = "0";
  names[top] = "1";
  ortho[0] = top;
  ortho[top] = 0;
  for (std::size_t k = 1; k <= 2 * pairs; ++k) {
    rel.emplace_back(0, k);
    rel.emplace_back(k, top);
    ortho[k] = k % 2 ? k + 1 : k - 1;
    names[k] = std::string(1, static_cast<char>('a' + (k - 1) / 2)) + (k % 2 ? "" : "'");
  }
  return FiniteLattice::from_relations(n, rel, std::move(ortho), std::move(names));
}

/// Subsets of k atoms ordered by inclusion; element i is the subset with bitmask i.
inline FiniteLattice boolean_lattice(std::size_t atoms) {
  if (atoms > 4) throw std::invalid_argument("boolean_lattice supports at most 4 atoms");
  const std::size_t n = std::size_t{1} << atoms;
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  std::vector<std::size_t> ortho(n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    ortho[i] = (n - 1) & ~i;
    names[i] = "{";
    for (std::size_t a = 0; a < atoms; ++a)
      if (i >> a & 1) names[i] += static_cast<char>('a' + a);
    names[i] += "}";
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = (i & ~j) == 0;
  }
  return FiniteLattice(std::move(rel), std::move(ortho), std::move(names));
}

/// `mo<n>` or `bool<k>`.
inline FiniteLattice builtin_lattice(const std::string& name) {
  auto number = [&](std::size_t prefix) -> std::size_t {
    const std::string digits = name.substr(prefix);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("unknown lattice '" + name + "'");
    return std::stoul(digits);
  };
  if (name.rfind("mo", 0) == 0) return mo_lattice(number(2));
  if (name.rfind("bool", 0) == 0) return boolean_lattice(number(4));
  throw std::invalid_argument("unknown lattice '" + name + "'");
}

/// Text format: `lattice n=<N>`, then `leq i j`, `ortho i j` and `name i LABEL`
/// lines; `#` starts a comment.
inline FiniteLattice parse_lattice(std::istream& in) {
  std::optional<std::size_t> n;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  std::vector<std::pair<std::size_t, std::size_t>> ortho_pairs;
  std::vector<std::string> names;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword)) continue;
    auto fail = [&](const std::string& what) -> void {
      throw ParseError(0, "line " + std::to_string(line_no) + ": " + what);
    };
    if (keyword == "lattice") {
      std::string arg;
      if (n || !(words >> arg) || arg.rfind("n=", 0) != 0) fail("expected a single 'lattice n=<N>' header");
      try {
        n = std::stoul(arg.substr(2));
      } catch (const std::exception&) {
        fail("bad element count");
      }
      for (std::size_t i = 0; i < *n; ++i) names.push_back(std::to_string(i));
    } else if (keyword == "leq" || keyword == "ortho") {
      if (!n) fail("'lattice n=<N>' header must come first");
      std::size_t i = 0, j = 0;
      if (!(words >> i >> j)) fail("expected two element indices");
      if (i >= *n || j >= *n) fail("element index out of range");
      (keyword == "leq" ? rel : ortho_pairs).emplace_back(i, j);
    } else if (keyword == "name") {
      if (!n) fail("'lattice n=<N>' header must come first");
      std::size_t i = 0;
      std::string label;
      if (!(words >> i >> label)) fail("expected an element index and a label");
      if (i >= *n) fail("element index out of range");
      names[i] = label;
    } else {
      fail("unknown directive '" + keyword + "'");
    }
    std::string extra;
    if (words >> extra) fail("trailing token '" + extra + "'");
  }
  if (!n) throw ParseError(0, "missing 'lattice n=<N>' header");
  std::optional<std::vector<std::size_t>> ortho;
  if (!ortho_pairs.empty()) {
    std::vector<std::size_t> map(*n, *n);
    for (auto [i, j] : ortho_pairs) {
      map[i] = j;
      map[j] = i;
    }
    if (std::find(map.begin(), map.end(), *n) != map.end())
      throw NotALattice("ortho lines must cover every element");
    ortho = std::move(map);
  }
  return FiniteLattice::from_relations(*n, rel, std::move(ortho), std::move(names));
}

struct IdealSet {
  ElementMask members = 0;

  bool contains(std::size_t a) const { return members >> a & 1; }
  std::size_t size() const { return std::popcount(members); }
  friend auto operator<=>(const IdealSet&, const IdealSet&) = default;
};

inline bool is_subset(const IdealSet& a, const IdealSet& b) { return (a.members & ~b.members) == 0; }

inline std::string to_string(const FiniteLattice& l, const IdealSet& ideal) {
  std::string out = "{";
  bool first = true;
  for (std::size_t a = 0; a < l.size(); ++a)
    if (ideal.contains(a)) {
      if (!first) out += ",";
      out += l.name(a);
      first = false;
    }
  return out + "}";
}

/// (∨X) ∧ y = ∨{x ∧ y : x ∈ X} for every element y.
inline bool is_distributive_join(const FiniteLattice& l, ElementMask subset) {
  if (subset == 0) throw std::invalid_argument("distributive join of the empty subset");
  const std::size_t j = l.join_all(subset);
  for (std::size_t y = 0; y < l.size(); ++y) {
    std::size_t rhs = l.bottom();
    for (ElementMask rest = subset; rest; rest &= rest - 1) rhs = l.join(rhs, l.meet(std::countr_zero(rest), y));
    if (l.meet(j, y) != rhs) return false;
  }
  return true;
}

inline bool is_down_set(const FiniteLattice& l, ElementMask m) {
  for (ElementMask rest = m; rest; rest &= rest - 1)
    if (l.down_mask(std::countr_zero(rest)) & ~m) return false;
  return true;
}

/// Checked straight from the definition; exponential in |subset|.
inline bool is_distributive_ideal(const FiniteLattice& l, ElementMask subset) {
  if (subset == 0 || !is_down_set(l, subset)) return false;
  for (ElementMask sub = subset; sub; sub = (sub - 1) & subset)
    if (!(subset >> l.join_all(sub) & 1) && is_distributive_join(l, sub)) return false;
  return true;
}

inline IdealSet down(const FiniteLattice& l, std::size_t k) {
  if (k >= l.size()) throw std::out_of_range("element index out of range");
  return {l.down_mask(k)};
}

inline IdealSet di_meet(const IdealSet& a, const IdealSet& b) { return {a.members & b.members}; }

class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultEnumerationCap = 16;

/// Every distributive ideal of l, sorted by membership mask.
inline std::vector<IdealSet> enumerate_di(const FiniteLattice& l, std::size_t cap = kDefaultEnumerationCap) {
  const std::size_t n = l.size();
  if (n > cap) throw CapExceeded("lattice has " + std::to_string(n) + " elements; cap is " + std::to_string(cap));
  if (n > 20) throw CapExceeded("enumeration supports at most 20 elements");
  const std::size_t count = std::size_t{1} << n;

  // Tabulate the join and distributivity of every subset once.
  std::vector<std::uint8_t> join_of(count, static_cast<std::uint8_t>(l.bottom()));
  for (std::size_t m = 1; m < count; ++m) {
    const std::size_t low = std::countr_zero(m);
    const std::size_t rest = m & (m - 1);
    join_of[m] = static_cast<std::uint8_t>(rest ? l.join(join_of[rest], low) : low);
  }
  std::vector<bool> distributive(count, true);
  std::vector<std::uint8_t> rhs(count);
  for (std::size_t y = 0; y < n; ++y) {
    rhs[0] = static_cast<std::uint8_t>(l.bottom());
    for (std::size_t m = 1; m < count; ++m) {
      rhs[m] = static_cast<std::uint8_t>(l.join(rhs[m & (m - 1)], l.meet(std::countr_zero(m), y)));
      if (l.meet(join_of[m], y) != rhs[m]) distributive[m] = false;
    }
  }

  std::vector<IdealSet> out;
  for (std::size_t m = 1; m < count; ++m) {
    const auto mask = static_cast<ElementMask>(m);
    if (!is_down_set(l, mask)) continue;
    bool closed = true;
    for (ElementMask sub = mask; sub && closed; sub = (sub - 1) & mask)
      closed = !distributive[sub] || (mask >> join_of[sub] & 1);
    if (closed) out.push_back({mask});
  }
  return out;
}

/// DI(l) with its lattice and Heyting operations, computed over the enumeration.
class IdealCompletion {
 public:
  explicit IdealCompletion(FiniteLattice l, std::size_t cap = kDefaultEnumerationCap)
      : lattice_(std::move(l)), ideals_(enumerate_di(lattice_, cap)) {}

  const FiniteLattice& lattice() const { return lattice_; }
  const std::vector<IdealSet>& ideals() const { return ideals_; }

  std::size_t index_of(const IdealSet& ideal) const {
    auto it = std::lower_bound(ideals_.begin(), ideals_.end(), ideal);
    if (it == ideals_.end() || *it != ideal) throw std::invalid_argument("not a distributive ideal");
    return static_cast<std::size_t>(it - ideals_.begin());
  }

  IdealSet bottom() const { return down(lattice_, lattice_.bottom()); }
  IdealSet top() const { return {lattice_.full_mask()}; }

  /// Least distributive ideal containing every given member: the intersection of
  /// all enumerated ideals above the union.
  IdealSet join(std::span<const IdealSet> family) const {
    ElementMask united = 0;
    for (const auto& i : family) united |= i.members;
    ElementMask acc = lattice_.full_mask();
    for (const auto& i : ideals_)
      if ((united & ~i.members) == 0) acc &= i.members;
    return {acc};
  }
  IdealSet join(const IdealSet& a, const IdealSet& b) const {
    const IdealSet pair[] = {a, b};
    return join(pair);
  }
  IdealSet meet(const IdealSet& a, const IdealSet& b) const { return di_meet(a, b); }

  /// a -> b := ∨{ c : c ∧ a <= b }.
  IdealSet rpc(const IdealSet& a, const IdealSet& b) const {
    std::vector<IdealSet> below;
    for (const auto& c : ideals_)
      if (is_subset(di_meet(c, a), b)) below.push_back(c);
    return join(below);
  }

  IdealSet neg(const IdealSet& a) const { return rpc(a, bottom()); }

 private:
  FiniteLattice lattice_;
  std::vector<IdealSet> ideals_;
};

}  // namespace qlogic
