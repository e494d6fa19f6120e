#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mtopos {

/// Subset of a fixed indexed universe [0, n), stored as a bitset.
/// Used for subsets of monoid elements in all their roles: submonoids,
/// right/left/two-sided ideals, hom-sets fMe, saturations.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe);
  static ElementSet full(int universe);
  static ElementSet of(int universe, const std::vector<int>& members);

  int universe() const noexcept { return n_; }
  bool test(int i) const;
  void set(int i);
  void reset(int i);
  int count() const noexcept;
  bool none() const noexcept { return count() == 0; }
  bool any() const noexcept { return count() != 0; }
  bool is_full() const noexcept { return count() == n_; }

  std::vector<int> members() const;

  bool contains(const ElementSet& other) const;  // other ⊆ this
  ElementSet& operator&=(const ElementSet& o);
  ElementSet& operator|=(const ElementSet& o);

  bool operator==(const ElementSet& o) const;
  bool operator!=(const ElementSet& o) const { return !(*this == o); }

  /// Strict order by membership string (index 0 first, absent < present).
  bool lex_less(const ElementSet& o) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> blocks_;
};

ElementSet operator&(ElementSet a, const ElementSet& b);
ElementSet operator|(ElementSet a, const ElementSet& b);

/// Order by cardinality, ties by membership string. The canonical sort
/// order for ideal lists and lattice elements.
bool size_lex_less(const ElementSet& a, const ElementSet& b);

}  // namespace mtopos
