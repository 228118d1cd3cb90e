#pragma once

#include <array>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "framekit/common.hpp"

namespace framekit {

// The fixed 14-frame taxonomy used throughout the toolkit. Codes are the
// conventional x.0 numeric ids; "Other"/"None" are deliberately not members.
class Frame {
public:
  static constexpr int kCount = 14;

  constexpr Frame() : index_(0) {}

  static Frame from_index(int index) {  // 0-based
    if (index < 0 || index >= kCount) throw Error("frames", "frame index out of range");
    return Frame(index);
  }

  static Frame from_code(double code) {
    int c = static_cast<int>(code);
    if (c < 1 || c > kCount || static_cast<double>(c) != code)
      throw Error("frames", "unknown frame code: " + std::to_string(code));
    return Frame(c - 1);
  }

  // Accepts "7", "7.0" or the canonical name.
  static std::optional<Frame> parse(std::string_view text) {
    for (int i = 0; i < kCount; ++i)
      if (text == names()[i]) return Frame(i);
    try {
      size_t pos = 0;
      std::string s(text);
      double v = std::stod(s, &pos);
      if (pos != s.size()) return std::nullopt;
      int c = static_cast<int>(v);
      if (c >= 1 && c <= kCount && static_cast<double>(c) == v) return Frame(c - 1);
    } catch (...) {
    }
    return std::nullopt;
  }

  int index() const { return index_; }
  double code() const { return index_ + 1.0; }

  std::string code_string() const {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%d.0", index_ + 1);
    return buf;
  }

  const std::string& name() const { return names()[index_]; }

  bool operator==(const Frame& o) const { return index_ == o.index_; }
  bool operator!=(const Frame& o) const { return index_ != o.index_; }
  bool operator<(const Frame& o) const { return index_ < o.index_; }

  static const std::array<std::string, kCount>& names() {
    static const std::array<std::string, kCount> kNames = {
        "Economic",
        "Capacity and Resources",
        "Morality",
        "Fairness and Equality",
        "Legality, Constitutionality, Jurisdiction",
        "Policy Prescription and Evaluation",
        "Crime and Punishment",
        "Security and Defense",
        "Health and Safety",
        "Quality of Life",
        "Cultural Identity",
        "Public Sentiment",
        "Political",
        "External Regulation and Reputation",
    };
    return kNames;
  }

  static std::array<Frame, kCount> all() {
    std::array<Frame, kCount> out;
    for (int i = 0; i < kCount; ++i) out[i] = Frame(i);
    return out;
  }

private:
  explicit constexpr Frame(int index) : index_(index) {}
  int index_;
};

// Fixed-size per-frame value table, indexed by Frame.
template <typename T>
class FrameMap {
public:
  FrameMap() : values_{} {}
  explicit FrameMap(const T& init) { values_.fill(init); }

  T& operator[](Frame f) { return values_[f.index()]; }
  const T& operator[](Frame f) const { return values_[f.index()]; }

  auto begin() { return values_.begin(); }
  auto end() { return values_.end(); }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

private:
  std::array<T, Frame::kCount> values_;
};

}  // namespace framekit
