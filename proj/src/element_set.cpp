#include "mtopos/element_set.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace mtopos {

namespace {
constexpr int kBlockBits = 64;
int block_count(int n) { return (n + kBlockBits - 1) / kBlockBits; }
}  // namespace

ElementSet::ElementSet(int universe) : n_(universe), blocks_(block_count(universe), 0) {}

ElementSet ElementSet::full(int universe) {
  ElementSet s(universe);
  for (int i = 0; i < universe; ++i) s.set(i);
  return s;
}

ElementSet ElementSet::of(int universe, const std::vector<int>& members) {
  ElementSet s(universe);
  for (int m : members) s.set(m);
  return s;
}

bool ElementSet::test(int i) const {
  return (blocks_[i / kBlockBits] >> (i % kBlockBits)) & 1u;
}

void ElementSet::set(int i) { blocks_[i / kBlockBits] |= std::uint64_t(1) << (i % kBlockBits); }

void ElementSet::reset(int i) { blocks_[i / kBlockBits] &= ~(std::uint64_t(1) << (i % kBlockBits)); }

int ElementSet::count() const noexcept {
  int c = 0;
  for (auto b : blocks_) c += std::popcount(b);
  return c;
}

std::vector<int> ElementSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (int i = 0; i < n_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

bool ElementSet::contains(const ElementSet& other) const {
  assert(n_ == other.n_);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if ((other.blocks_[b] & ~blocks_[b]) != 0) return false;
  return true;
}

ElementSet& ElementSet::operator&=(const ElementSet& o) {
  assert(n_ == o.n_);
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] &= o.blocks_[b];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& o) {
  assert(n_ == o.n_);
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] |= o.blocks_[b];
  return *this;
}

bool ElementSet::operator==(const ElementSet& o) const {
  return n_ == o.n_ && blocks_ == o.blocks_;
}

bool ElementSet::lex_less(const ElementSet& o) const {
  assert(n_ == o.n_);
  // among equal-size sets this is member-list lexicographic order
  for (int i = 0; i < n_; ++i) {
    bool a = test(i), b = o.test(i);
    if (a != b) return a;
  }
  return false;
}

std::string ElementSet::to_string(const std::vector<std::string>& names) const {
  std::string out = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) out += ",";
    first = false;
    out += (static_cast<std::size_t>(i) < names.size()) ? names[i] : std::to_string(i);
  }
  out += "}";
  return out;
}

ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

bool size_lex_less(const ElementSet& a, const ElementSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.lex_less(b);
}

}  // namespace mtopos
