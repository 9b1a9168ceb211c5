#include "kfam/element_set.hpp"

#include <algorithm>

#include "kfam/errors.hpp"

namespace kfam {

ElementSet::ElementSet(std::initializer_list<int> elements) {
  for (int e : elements) insert(e);
}

ElementSet ElementSet::range(int lo, int hi) {
  ElementSet s;
  for (int e = std::max(lo, 1); e <= hi; ++e) s.insert(e);
  return s;
}

void ElementSet::insert(int e) {
  if (e < 1 || e > kMaxElement)
    throw DomainError("element " + std::to_string(e) + " outside [1,128]");
  const int b = e - 1;
  w_[b >> 6] |= std::uint64_t{1} << (b & 63);
}

void ElementSet::erase(int e) {
  if (e < 1 || e > kMaxElement) return;
  const int b = e - 1;
  w_[b >> 6] &= ~(std::uint64_t{1} << (b & 63));
}

int ElementSet::min_element() const {
  if (w_[0]) return std::countr_zero(w_[0]) + 1;
  if (w_[1]) return 64 + std::countr_zero(w_[1]) + 1;
  return 0;
}

int ElementSet::max_element() const {
  if (w_[1]) return 128 - std::countl_zero(w_[1]);
  if (w_[0]) return 64 - std::countl_zero(w_[0]);
  return 0;
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int e) { out.push_back(e); });
  return out;
}

std::string ElementSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](int e) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  });
  return s + "}";
}

bool lex_less(const ElementSet& a, const ElementSet& b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

}  // namespace kfam
