#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qpath/error.hpp"

namespace qpath {

// An ordered finite set of distinct labels. The order is the canonical index
// order used by matrices and serializations.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<std::string> labels)
      : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      auto [it, inserted] = index_.emplace(labels_[i], i);
      if (!inserted)
        throw semantic_error("duplicate vertex label '" + labels_[i] + "'");
    }
  }
  VertexSet(std::initializer_list<std::string> labels)
      : VertexSet(std::vector<std::string>(labels)) {}

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool contains(const std::string& label) const {
    return index_.count(label) > 0;
  }
  std::optional<std::size_t> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
      throw semantic_error("unknown vertex label '" + label + "'");
    return it->second;
  }

  bool operator==(const VertexSet& other) const {
    return labels_ == other.labels_;
  }
  bool operator!=(const VertexSet& other) const { return !(*this == other); }

  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

// A total function between two vertex sets, stored index-to-index.
class FiniteFunction {
 public:
  FiniteFunction() = default;
  FiniteFunction(VertexSet domain, VertexSet codomain,
                 std::vector<std::size_t> map)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        map_(std::move(map)) {
    if (map_.size() != domain_.size())
      throw semantic_error("function table size does not match its domain");
    for (std::size_t v : map_)
      if (v >= codomain_.size())
        throw semantic_error("function maps outside its codomain");
  }
  FiniteFunction(VertexSet domain, VertexSet codomain,
                 const std::map<std::string, std::string>& by_label)
      : domain_(std::move(domain)), codomain_(std::move(codomain)) {
    map_.reserve(domain_.size());
    for (const auto& d : domain_.labels()) {
      auto it = by_label.find(d);
      if (it == by_label.end())
        throw semantic_error("function is missing a value for '" + d + "'");
      map_.push_back(codomain_.index_of(it->second));
    }
  }

  static FiniteFunction identity(const VertexSet& x) {
    std::vector<std::size_t> m(x.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
    return FiniteFunction(x, x, std::move(m));
  }
  // Inclusion of each label of `sub` into `super`.
  static FiniteFunction inclusion(const VertexSet& sub,
                                  const VertexSet& super) {
    std::vector<std::size_t> m;
    m.reserve(sub.size());
    for (const auto& l : sub.labels()) m.push_back(super.index_of(l));
    return FiniteFunction(sub, super, std::move(m));
  }

  const VertexSet& domain() const { return domain_; }
  const VertexSet& codomain() const { return codomain_; }

  std::size_t apply_index(std::size_t i) const { return map_.at(i); }
  const std::string& apply(const std::string& label) const {
    return codomain_.label(map_.at(domain_.index_of(label)));
  }
  const std::vector<std::size_t>& table() const { return map_; }

  bool operator==(const FiniteFunction& other) const {
    return domain_ == other.domain_ && codomain_ == other.codomain_ &&
           map_ == other.map_;
  }

 private:
  VertexSet domain_, codomain_;
  std::vector<std::size_t> map_;
};

// g after f.
inline FiniteFunction compose(const FiniteFunction& g,
                              const FiniteFunction& f) {
  if (f.codomain() != g.domain())
    throw semantic_error("function composition: codomain/domain mismatch");
  std::vector<std::size_t> m;
  m.reserve(f.domain().size());
  for (std::size_t i = 0; i < f.domain().size(); ++i)
    m.push_back(g.apply_index(f.apply_index(i)));
  return FiniteFunction(f.domain(), g.codomain(), std::move(m));
}

}  // namespace qpath
