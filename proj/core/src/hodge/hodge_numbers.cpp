#include "vhs/hodge/hodge_numbers.hpp"

#include <numeric>
#include <sstream>

#include "vhs/error.hpp"

namespace vhs {

HodgeNumbers::HodgeNumbers(int weight, std::vector<std::size_t> h) : n_(weight), h_(std::move(h)) {
  if (n_ < 0) throw PreconditionError("weight must be nonnegative");
  if (h_.size() != static_cast<std::size_t>(n_) + 1)
    throw PreconditionError("Hodge vector of weight " + std::to_string(n_) + " needs " +
                            std::to_string(n_ + 1) + " entries, got " + std::to_string(h_.size()));
  for (std::size_t i = 0; i < h_.size(); ++i) {
    if (h_[i] != h_[h_.size() - 1 - i]) throw PreconditionError("Hodge vector must be palindromic: " + to_string());
  }
  if (total_dim() == 0) throw PreconditionError("Hodge vector is identically zero");
}

HodgeNumbers HodgeNumbers::parse(const std::string& text) {
  std::vector<std::size_t> h;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t()");
    const auto last = item.find_last_not_of(" \t()");
    if (first == std::string::npos) throw PreconditionError("empty entry in Hodge vector '" + text + "'");
    const std::string tok = item.substr(first, last - first + 1);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw PreconditionError("bad Hodge number '" + tok + "'");
    }
    if (used != tok.size() || v < 0) throw PreconditionError("bad Hodge number '" + tok + "'");
    h.push_back(static_cast<std::size_t>(v));
  }
  if (h.empty()) throw PreconditionError("empty Hodge vector");
  const int n = static_cast<int>(h.size()) - 1;
  return HodgeNumbers(n, std::move(h));
}

std::size_t HodgeNumbers::level_dim(int p) const {
  if (p < 0 || p > n_) return 0;
  return h_[static_cast<std::size_t>(n_ - p)];
}

std::size_t HodgeNumbers::f(int p) const {
  std::size_t acc = 0;
  for (int q = std::max(p, 0); q <= n_; ++q) acc += level_dim(q);
  return acc;
}

std::size_t HodgeNumbers::total_dim() const { return std::accumulate(h_.begin(), h_.end(), std::size_t{0}); }

bool HodgeNumbers::all_nonzero() const { return all_at_least(1); }

bool HodgeNumbers::all_at_least(std::size_t k) const {
  for (auto x : h_)
    if (x < k) return false;
  return true;
}

std::string HodgeNumbers::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < h_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(h_[i]);
  }
  return s + ")";
}

std::vector<HodgeNumbers> palindromic_sweep(int n, const std::vector<std::size_t>& values) {
  if (n < 0 || values.empty()) return {};
  const std::size_t free = static_cast<std::size_t>(n) / 2 + 1;
  std::vector<HodgeNumbers> out;
  std::vector<std::size_t> idx(free, 0);
  while (true) {
    std::vector<std::size_t> h(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < free; ++i) {
      h[i] = values[idx[i]];
      h[h.size() - 1 - i] = values[idx[i]];
    }
    std::size_t total = std::accumulate(h.begin(), h.end(), std::size_t{0});
    if (total > 0) out.emplace_back(n, h);
    std::size_t k = free;
    while (k > 0) {
      --k;
      if (++idx[k] < values.size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
  }
}

}  // namespace vhs
