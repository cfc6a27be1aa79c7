#include "glhecke/weight.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace glhecke {

IntegralWeight::IntegralWeight(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i] > entries_[i - 1]) {
      throw std::invalid_argument("weight is not weakly decreasing at position " +
                                  std::to_string(i + 1));
    }
  }
}

IntegralWeight IntegralWeight::from_rationals(std::span<const Rational> entries) {
  std::vector<std::int64_t> values;
  values.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].is_integer()) {
      throw std::invalid_argument("non-integral weight entry " + entries[i].str() +
                                  " at position " + std::to_string(i + 1));
    }
    values.push_back(entries[i].num());
  }
  return IntegralWeight(std::move(values));
}

IntegralWeight IntegralWeight::from_rationals(std::span<const Scalar> entries) {
  std::vector<Rational> values;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].is_real()) {
      throw std::invalid_argument("non-real weight entry " + entries[i].str() +
                                  " at position " + std::to_string(i + 1));
    }
    values.push_back(entries[i].re());
  }
  return from_rationals(values);
}

IntegralWeight IntegralWeight::parse(std::string_view text) {
  std::vector<Rational> values;
  std::size_t pos = 0;
  int index = 1;
  if (text.empty()) return {};
  while (true) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    try {
      values.push_back(Rational::parse(token));
    } catch (const std::exception& e) {
      throw std::invalid_argument("lambda entry " + std::to_string(index) + ": " + e.what());
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    ++index;
  }
  return from_rationals(values);
}

IntegralWeight IntegralWeight::consecutive(int n) {
  std::vector<std::int64_t> values;
  for (int i = n - 1; i >= 0; --i) values.push_back(i);
  return IntegralWeight(std::move(values));
}

std::vector<Scalar> IntegralWeight::as_scalars() const {
  return {entries_.begin(), entries_.end()};
}

std::vector<std::pair<std::int64_t, int>> IntegralWeight::columns() const {
  std::vector<std::pair<std::int64_t, int>> out;
  for (auto v : entries_) {
    if (!out.empty() && out.back().first == v) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

std::string IntegralWeight::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::vector<Scalar> rho(int n) {
  std::vector<Scalar> out;
  for (int i = 0; i < n; ++i) out.emplace_back(Rational(n - 1 - 2 * i, 2));
  return out;
}

std::vector<IntegralWeight> weights_in_window(int n, std::int64_t lo, std::int64_t hi) {
  std::vector<IntegralWeight> out;
  std::vector<std::int64_t> current;
  std::function<void(std::int64_t)> rec = [&](std::int64_t max_value) {
    if (static_cast<int>(current.size()) == n) {
      out.emplace_back(current);
      return;
    }
    for (std::int64_t v = max_value; v >= lo; --v) {
      current.push_back(v);
      rec(v);
      current.pop_back();
    }
  };
  rec(hi);
  return out;
}

std::vector<Scalar> sorted_multiset(std::vector<Scalar> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace glhecke
