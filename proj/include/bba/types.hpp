#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bba {

// A set of worlds, one bit per world index.  Universes are capped at 32
// worlds, so a plain 32-bit mask suffices.
using WorldSet = std::uint32_t;

// A selection of agenda issues, one bit per issue index.  Agendas are capped
// at 32 issues for the same reason.
using IssueSel = std::uint32_t;

inline constexpr int kMaxWorlds = 32;
inline constexpr int kMaxIssues = 32;

enum class Errc {
  NonContingentIssue,
  NotComplementClosed,
  EmptyAgenda,
  LimitExceeded,
  NotASubset,
  IssueNotInAgenda,
  SizeMismatch,
  NotSystematic,
  SyntaxError,
  UnknownAtom,
  TooManyAtoms,
  BadInput,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

struct Universe {
  int size = 0;
  std::vector<std::string> labels;  // empty, or one label per world

  static Universe of(int size) {
    if (size < 1 || size > kMaxWorlds)
      throw Error(Errc::BadInput, "universe size must be in [1,32]");
    return Universe{size, {}};
  }

  static Universe named(std::vector<std::string> names) {
    Universe u = of(static_cast<int>(names.size()));
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j])
          throw Error(Errc::BadInput, "duplicate world label: " + names[i]);
    u.labels = std::move(names);
    return u;
  }

  WorldSet full() const {
    return size == 32 ? ~WorldSet{0} : (WorldSet{1} << size) - 1;
  }

  std::string world_name(int w) const {
    if (!labels.empty()) return labels[static_cast<std::size_t>(w)];
    return "w" + std::to_string(w);
  }

  bool operator==(const Universe& o) const { return size == o.size; }
};

inline int popcount(std::uint32_t x) { return std::popcount(x); }

// Lowest set bit index; undefined for 0.
inline int lowest_bit(std::uint32_t x) { return std::countr_zero(x); }

inline std::vector<int> bits_of(std::uint32_t x) {
  std::vector<int> out;
  for (std::uint32_t m = x; m; m &= m - 1) out.push_back(lowest_bit(m));
  return out;
}

}  // namespace bba
