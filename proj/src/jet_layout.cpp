#include <algorithm>
#include <map>
#include <mutex>

#include "fueter/jet.hpp"

namespace fueter {

namespace {

constexpr unsigned kNibble = 4;

void enumerate_degree(std::size_t num_vars, unsigned degree, std::size_t var, MultiIndex& cur,
                      std::vector<MultiIndex>& out) {
  if (var + 1 == num_vars) {
    cur[var] = degree;
    out.push_back(cur);
    return;
  }
  for (unsigned a = degree + 1; a-- > 0;) {
    cur[var] = a;
    enumerate_degree(num_vars, degree - a, var + 1, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::shared_ptr<const JetLayout> JetLayout::get(std::size_t num_vars, unsigned order) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, unsigned>, std::shared_ptr<const JetLayout>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{num_vars, order}];
  if (!slot) slot = std::make_shared<const JetLayout>(num_vars, order);
  return slot;
}

JetLayout::JetLayout(std::size_t num_vars, unsigned order) : num_vars_(num_vars), order_(order) {
  if (num_vars == 0 || num_vars > kMaxVars) throw InvalidParams("jet variable count out of range");
  if (order > kMaxOrder) throw InvalidParams("jet order out of range");

  std::vector<MultiIndex> monomials;
  MultiIndex cur(num_vars, 0);
  for (unsigned d = 0; d <= order; ++d) {
    enumerate_degree(num_vars, d, 0, cur, monomials);
    degree_end_.push_back(monomials.size());
  }
  keys_.reserve(monomials.size());
  for (const auto& m : monomials) {
    keys_.push_back(pack(m));
    unsigned deg = 0;
    BigInt w = 1;
    for (unsigned a : m) {
      deg += a;
      BigInt f;
      mpz_fac_ui(f.get_mpz_t(), a);
      w *= f;
    }
    degree_of_.push_back(deg);
    weight_.push_back(w);
  }
  sorted_keys_.reserve(keys_.size());
  for (std::size_t i = 0; i < keys_.size(); ++i)
    sorted_keys_.emplace_back(keys_[i], static_cast<std::uint32_t>(i));
  std::sort(sorted_keys_.begin(), sorted_keys_.end());

  offsets_.reserve(size() + 1);
  offsets_.push_back(0);
  for (std::size_t p = 0; p < size(); ++p) {
    const std::size_t partners = degree_end_[order_ - degree_of_[p]];
    // Nibble-packed exponents add without carries because every sum is <= order.
    for (std::size_t q = 0; q < partners; ++q)
      products_.push_back(static_cast<std::uint32_t>(lookup(keys_[p] + keys_[q])));
    offsets_.push_back(products_.size());
  }
}

std::uint64_t JetLayout::pack(std::span<const unsigned> alpha) const {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    key |= static_cast<std::uint64_t>(alpha[i]) << (kNibble * i);
  return key;
}

std::size_t JetLayout::lookup(std::uint64_t key) const {
  auto it = std::lower_bound(sorted_keys_.begin(), sorted_keys_.end(),
                             std::make_pair(key, std::uint32_t{0}));
  if (it == sorted_keys_.end() || it->first != key) throw OrderExceeded("monomial outside jet");
  return it->second;
}

MultiIndex JetLayout::exponents(std::size_t idx) const {
  MultiIndex out(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) out[i] = (keys_[idx] >> (kNibble * i)) & 0xF;
  return out;
}

std::size_t JetLayout::index_of(std::span<const unsigned> alpha) const {
  if (alpha.size() != num_vars_) throw DimensionMismatch("multi-index length mismatch");
  unsigned total = 0;
  for (unsigned a : alpha) total += a;
  if (total > order_) throw OrderExceeded("derivative order exceeds jet order");
  return lookup(pack(alpha));
}

std::size_t JetLayout::variable_index(std::size_t var) const {
  MultiIndex e(num_vars_, 0);
  e.at(var) = 1;
  return index_of(e);
}

}  // namespace fueter
