#pragma once

// Segments, multisegments and Langlands parameters for the graded Hecke
// algebra of gl(k).

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "glhecke/exact.hpp"
#include "glhecke/weight.hpp"

namespace glhecke {

/// {start, start+1, ..., start+len-1}.
class Segment {
 public:
  /// Throws std::invalid_argument if len < 1.
  Segment(Scalar start, int len);

  /// Segment with the given center and length, i.e. the block St (x) C_center.
  static Segment from_center(Scalar center, int len);

  [[nodiscard]] const Scalar& start() const { return start_; }
  [[nodiscard]] int len() const { return len_; }
  [[nodiscard]] Scalar end() const { return start_ + Scalar(len_ - 1); }
  [[nodiscard]] Scalar center() const { return (start_ + end()).half(); }
  [[nodiscard]] std::vector<Scalar> entries() const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  Scalar start_;
  int len_;
};

/// Dominant-representative order: Re(center) desc, len desc, Re(start)
/// desc, Im(center) asc.
bool dominant_less(const Segment& a, const Segment& b);

class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> segments) : segments_(std::move(segments)) {}

  /// Inline syntax "{a,...,b};{c,...}", each brace a run of consecutive values.
  static Multisegment parse(std::string_view text);

  [[nodiscard]] const std::vector<Segment>& segments() const { return segments_; }
  [[nodiscard]] int total_length() const;
  /// All entries, sorted descending.
  [[nodiscard]] std::vector<Scalar> support() const;
  [[nodiscard]] Multisegment reversed() const;
  /// Satisfies Re(center_1) >= ... >= Re(center_r).
  [[nodiscard]] bool is_dominant() const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Multisegment&, const Multisegment&) = default;

 private:
  std::vector<Segment> segments_;
};

/// Block-by-block coordinates (a, a+1, ..., b) of an ordered multisegment,
/// i.e. the concatenation of -rho(gl(L_i)) + center_i.
std::vector<Scalar> block_coordinates(const Multisegment& ordered);

/// A multisegment in its canonical dominant ordering.
class HeckeParam {
 public:
  /// The canonical dominant representative of the segment multiset.
  static HeckeParam dominant_representative(const Multisegment& ms);

  [[nodiscard]] const Multisegment& multisegment() const { return ms_; }
  [[nodiscard]] const std::vector<Segment>& segments() const { return ms_.segments(); }
  [[nodiscard]] int k() const { return ms_.total_length(); }
  [[nodiscard]] std::vector<Scalar> support() const { return ms_.support(); }
  /// Central character of the standard module, length k, in block order.
  [[nodiscard]] std::vector<Scalar> central_character() const { return block_coordinates(ms_); }
  [[nodiscard]] std::string str() const { return ms_.str(); }

  friend bool operator==(const HeckeParam&, const HeckeParam&) = default;
  friend bool operator<(const HeckeParam& a, const HeckeParam& b);

 private:
  explicit HeckeParam(Multisegment ms) : ms_(std::move(ms)) {}
  Multisegment ms_;
};

/// Single segment of length k centred at 0: the Steinberg module of H_k.
HeckeParam steinberg_param(int k);

/// One dominant representative per segment multiset with support lambda.
std::vector<HeckeParam> enumerate_multisegments(const IntegralWeight& lambda);

}  // namespace glhecke
