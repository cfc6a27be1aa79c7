#include "glhecke/hecke_params.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace glhecke {

Segment::Segment(Scalar start, int len) : start_(start), len_(len) {
  if (len < 1) throw std::invalid_argument("segment length must be positive");
}

Segment Segment::from_center(Scalar center, int len) {
  return Segment(center - Scalar(Rational(len - 1, 2)), len);
}

std::vector<Scalar> Segment::entries() const {
  std::vector<Scalar> out;
  out.reserve(len_);
  for (int i = 0; i < len_; ++i) out.push_back(start_ + Scalar(i));
  return out;
}

std::string Segment::str() const {
  std::string out = "{";
  auto values = entries();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += values[i].str();
  }
  return out + "}";
}

bool dominant_less(const Segment& a, const Segment& b) {
  if (auto c = a.center().re() <=> b.center().re(); c != 0) return c > 0;
  if (a.len() != b.len()) return a.len() > b.len();
  if (auto c = a.start().re() <=> b.start().re(); c != 0) return c > 0;
  return a.center().im() < b.center().im();
}

Multisegment Multisegment::parse(std::string_view text) {
  std::vector<Segment> segments;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("multisegment text at offset " + std::to_string(pos) + ": " + what);
  };
  auto skip_separators = [&] {
    while (pos < text.size() && (text[pos] == ';' || text[pos] == ' ' || text[pos] == '(' ||
                                 text[pos] == ')' || text[pos] == ','))
      ++pos;
  };
  skip_separators();
  while (pos < text.size()) {
    if (text[pos] != '{') fail("expected '{'");
    auto close = text.find('}', pos);
    if (close == std::string_view::npos) fail("missing '}'");
    auto body = text.substr(pos + 1, close - pos - 1);
    std::vector<Scalar> values;
    std::size_t p = 0;
    while (p <= body.size()) {
      auto comma = body.find(',', p);
      auto token = body.substr(p, comma == std::string_view::npos ? body.npos : comma - p);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      try {
        values.push_back(Scalar::parse(token));
      } catch (const std::exception& e) {
        fail(e.what());
      }
      if (comma == std::string_view::npos) break;
      p = comma + 1;
    }
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i] - values[i - 1] != Scalar(1)) fail("consecutive entries must differ by 1");
    }
    segments.emplace_back(values.front(), static_cast<int>(values.size()));
    pos = close + 1;
    skip_separators();
  }
  return Multisegment(std::move(segments));
}

int Multisegment::total_length() const {
  int k = 0;
  for (const auto& s : segments_) k += s.len();
  return k;
}

std::vector<Scalar> Multisegment::support() const {
  std::vector<Scalar> out;
  for (const auto& s : segments_) {
    auto e = s.entries();
    out.insert(out.end(), e.begin(), e.end());
  }
  return sorted_multiset(std::move(out));
}

Multisegment Multisegment::reversed() const {
  return Multisegment(std::vector<Segment>(segments_.rbegin(), segments_.rend()));
}

bool Multisegment::is_dominant() const {
  for (std::size_t i = 1; i < segments_.size(); ++i) {
    if (segments_[i - 1].center().re() < segments_[i].center().re()) return false;
  }
  return true;
}

std::string Multisegment::str() const {
  std::string out;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i) out += ";";
    out += segments_[i].str();
  }
  return out;
}

std::vector<Scalar> block_coordinates(const Multisegment& ordered) {
  std::vector<Scalar> out;
  for (const auto& s : ordered.segments()) {
    auto e = s.entries();
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

HeckeParam HeckeParam::dominant_representative(const Multisegment& ms) {
  auto segments = ms.segments();
  std::stable_sort(segments.begin(), segments.end(), dominant_less);
  return HeckeParam(Multisegment(std::move(segments)));
}

bool operator<(const HeckeParam& a, const HeckeParam& b) {
  const auto& x = a.segments();
  const auto& y = b.segments();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [](const Segment& s, const Segment& t) {
                                        if (dominant_less(s, t)) return true;
                                        if (dominant_less(t, s)) return false;
                                        return s.start() < t.start();
                                      });
}

HeckeParam steinberg_param(int k) {
  if (k < 1) throw std::invalid_argument("Steinberg parameter needs k >= 1");
  return HeckeParam::dominant_representative(Multisegment({Segment::from_center(Scalar(0), k)}));
}

std::vector<HeckeParam> enumerate_multisegments(const IntegralWeight& lambda) {
  std::map<std::int64_t, int> remaining;  // increasing
  for (auto v : lambda.entries()) ++remaining[v];

  std::set<HeckeParam> found;
  std::vector<Segment> current;
  // The smallest remaining value starts exactly one segment; branch on its length.
  std::function<void()> rec = [&]() {
    auto low = std::find_if(remaining.begin(), remaining.end(), [](auto& kv) { return kv.second > 0; });
    if (low == remaining.end()) {
      found.insert(HeckeParam::dominant_representative(Multisegment(current)));
      return;
    }
    const std::int64_t a = low->first;
    std::vector<std::map<std::int64_t, int>::iterator> taken;
    for (std::int64_t v = a;; ++v) {
      auto it = remaining.find(v);
      if (it == remaining.end() || it->second == 0) break;
      --it->second;
      taken.push_back(it);
      current.emplace_back(Scalar(a), static_cast<int>(taken.size()));
      rec();
      current.pop_back();
    }
    for (auto it : taken) ++it->second;
  };
  rec();
  return {found.begin(), found.end()};
}

}  // namespace glhecke
