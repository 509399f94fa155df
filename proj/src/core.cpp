#include "greedylab/core.hpp"

#include <algorithm>
#include <cmath>

namespace greedylab {

SparseVector SparseVector::from_pairs(const std::vector<std::pair<int, double>>& pairs) {
  SparseVector v;
  for (const auto& [i, c] : pairs) {
    if (i < 1) throw std::invalid_argument("index must be positive: " + std::to_string(i));
    if (v.entries_.count(i)) throw std::invalid_argument("duplicate index: " + std::to_string(i));
    if (c != 0.0) v.entries_[i] = c;
    else v.entries_[i];  // placeholder to catch duplicates, erased below
  }
  std::erase_if(v.entries_, [](const auto& e) { return e.second == 0.0; });
  return v;
}

void SparseVector::set(int i, double v) {
  if (i < 1) throw std::invalid_argument("index must be positive");
  if (v == 0.0) entries_.erase(i);
  else entries_[i] = v;
}

std::vector<int> SparseVector::support() const {
  std::vector<int> s;
  s.reserve(entries_.size());
  for (const auto& [i, c] : entries_) s.push_back(i);
  return s;
}

double SparseVector::linf_norm() const {
  double m = 0.0;
  for (const auto& [i, c] : entries_) m = std::max(m, std::abs(c));
  return m;
}

double SparseVector::l1_norm() const {
  double s = 0.0;
  for (const auto& [i, c] : entries_) s += std::abs(c);
  return s;
}

double SparseVector::l2_norm() const {
  double s = 0.0;
  for (const auto& [i, c] : entries_) s += c * c;
  return std::sqrt(s);
}

SparseVector SparseVector::operator+(const SparseVector& o) const {
  SparseVector r = *this;
  for (const auto& [i, c] : o.entries_) r.set(i, r.coeff(i) + c);
  return r;
}

SparseVector SparseVector::operator-(const SparseVector& o) const {
  SparseVector r = *this;
  for (const auto& [i, c] : o.entries_) r.set(i, r.coeff(i) - c);
  return r;
}

SparseVector SparseVector::operator*(double t) const {
  SparseVector r;
  if (t == 0.0) return r;
  for (const auto& [i, c] : entries_) r.entries_[i] = t * c;
  return r;
}

double SparseVector::dot(const SparseVector& o) const {
  // iterate the smaller map
  const SparseVector* a = this;
  const SparseVector* b = &o;
  if (a->entries_.size() > b->entries_.size()) std::swap(a, b);
  double s = 0.0;
  for (const auto& [i, c] : a->entries_) s += c * b->coeff(i);
  return s;
}

json SparseVector::to_json() const {
  json j = json::array();
  for (const auto& [i, c] : entries_) j.push_back(json::array({i, c}));
  return j;
}

SparseVector SparseVector::from_json(const json& j) {
  std::vector<std::pair<int, double>> pairs;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("vector entry must be [index, value]");
    pairs.emplace_back(e[0].get<int>(), e[1].get<double>());
  }
  return from_pairs(pairs);
}

IndexSet::IndexSet(std::vector<int> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    if (elems_[k] < 1) throw std::invalid_argument("index must be positive");
    if (k > 0 && elems_[k] == elems_[k - 1]) throw std::invalid_argument("duplicate index in set");
  }
}

bool IndexSet::contains(int i) const {
  return std::binary_search(elems_.begin(), elems_.end(), i);
}

int IndexSet::min() const {
  if (elems_.empty()) throw std::logic_error("min of empty set");
  return elems_.front();
}

int IndexSet::max() const {
  if (elems_.empty()) throw std::logic_error("max of empty set");
  return elems_.back();
}

bool IndexSet::strictly_before(const IndexSet& a, const IndexSet& b) {
  if (a.empty() || b.empty()) return true;
  return a.max() < b.min();
}

IndexSet IndexSet::disjoint_union(const IndexSet& a, const IndexSet& b) {
  if (!a.disjoint_from(b)) throw std::invalid_argument("sets overlap");
  return set_union(a, b);
}

IndexSet IndexSet::set_union(const IndexSet& a, const IndexSet& b) {
  std::vector<int> u;
  std::set_union(a.elems_.begin(), a.elems_.end(), b.elems_.begin(), b.elems_.end(),
                 std::back_inserter(u));
  IndexSet r;
  r.elems_ = std::move(u);
  return r;
}

bool IndexSet::is_subset_of(const IndexSet& b) const {
  return std::includes(b.elems_.begin(), b.elems_.end(), elems_.begin(), elems_.end());
}

bool IndexSet::disjoint_from(const IndexSet& b) const {
  std::vector<int> inter;
  std::set_intersection(elems_.begin(), elems_.end(), b.elems_.begin(), b.elems_.end(),
                        std::back_inserter(inter));
  return inter.empty();
}

json IndexSet::to_json() const { return json(elems_); }

IndexSet IndexSet::from_json(const json& j) {
  return IndexSet(j.get<std::vector<int>>());
}

SignPattern::SignPattern(IndexSet domain, std::vector<int> signs)
    : domain_(std::move(domain)), signs_(std::move(signs)) {
  if (signs_.size() != domain_.size()) throw std::invalid_argument("sign count mismatch");
  for (int s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("sign must be +1 or -1");
}

SignPattern SignPattern::all_plus(const IndexSet& domain) {
  return SignPattern(domain, std::vector<int>(domain.size(), 1));
}

SignPattern SignPattern::alternating(const IndexSet& domain, int first) {
  std::vector<int> s(domain.size());
  int cur = first;
  for (std::size_t k = 0; k < s.size(); ++k) {
    s[k] = cur;
    cur = -cur;
  }
  return SignPattern(domain, std::move(s));
}

SignPattern SignPattern::from_mask(const IndexSet& domain, unsigned long long mask) {
  std::vector<int> s(domain.size());
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = (mask >> k) & 1ULL ? -1 : 1;
  return SignPattern(domain, std::move(s));
}

int SignPattern::sign(int i) const {
  const auto& e = domain_.elements();
  auto it = std::lower_bound(e.begin(), e.end(), i);
  if (it == e.end() || *it != i) throw std::invalid_argument("index outside sign domain");
  return signs_[static_cast<std::size_t>(it - e.begin())];
}

SignPattern SignPattern::restrict_to(const IndexSet& sub) const {
  if (!sub.is_subset_of(domain_)) throw std::invalid_argument("restriction target not a subset");
  std::vector<int> s;
  s.reserve(sub.size());
  for (int i : sub.elements()) s.push_back(sign(i));
  return SignPattern(sub, std::move(s));
}

json SignPattern::to_json() const {
  json j = json::array();
  const auto& e = domain_.elements();
  for (std::size_t k = 0; k < e.size(); ++k) j.push_back(json::array({e[k], signs_[k]}));
  return j;
}

SparseVector indicator(const IndexSet& a, const SignPattern& eps) {
  if (!(eps.domain() == a)) throw std::invalid_argument("sign pattern domain must equal the set");
  SparseVector v;
  const auto& e = a.elements();
  for (std::size_t k = 0; k < e.size(); ++k) v.set(e[k], eps.signs()[k]);
  return v;
}

SparseVector indicator(const IndexSet& a) { return indicator(a, SignPattern::all_plus(a)); }

SparseVector project(const SparseVector& x, const IndexSet& a) {
  SparseVector r;
  for (const auto& [i, c] : x.entries())
    if (a.contains(i)) r.set(i, c);
  return r;
}

SparseVector partial_sum(const SparseVector& x, int m) {
  if (m < 0) throw std::invalid_argument("partial sum order must be nonnegative");
  SparseVector r;
  for (const auto& [i, c] : x.entries()) {
    if (i > m) break;
    r.set(i, c);
  }
  return r;
}

}  // namespace greedylab
