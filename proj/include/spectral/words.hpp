#ifndef SPECTRAL_WORDS_HPP
#define SPECTRAL_WORDS_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spectral {

/// A vertex of the N-ary tree: a finite word over the alphabet {1..N}.
/// The empty word is the root.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int a : letters_)
      if (a < 1) throw std::invalid_argument("Word: letters must be >= 1");
  }

  /// Parse from a digit string, e.g. "121". Only single-digit alphabets
  /// (N <= 9) can round-trip through this form.
  static Word parse(const std::string& s) {
    std::vector<int> ls;
    ls.reserve(s.size());
    for (char c : s) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("Word::parse: expected digits 1..9");
      ls.push_back(c - '0');
    }
    return Word(std::move(ls));
  }

  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int letter(int k) const { return letters_.at(k); }  // 0-based position
  const std::vector<int>& letters() const { return letters_; }

  /// Drops the last letter; the root maps to itself.
  Word parent() const {
    if (letters_.empty()) return Word();
    return Word(std::vector<int>(letters_.begin(), letters_.end() - 1));
  }

  /// Adjoins the letter i at the end.
  Word child(int i) const {
    std::vector<int> ls = letters_;
    ls.push_back(i);
    return Word(std::move(ls));
  }

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }

  std::string str() const {
    if (letters_.empty()) return "@";  // root
    std::string s;
    for (int a : letters_) s += std::to_string(a);
    return s;
  }

private:
  std::vector<int> letters_;
};

/// The N children of w, in letter order.
inline std::vector<Word> children(const Word& w, int branching) {
  if (branching < 1) throw std::invalid_argument("children: branching must be >= 1");
  for (int a : w.letters())
    if (a > branching) throw std::invalid_argument("children: letter out of range");
  std::vector<Word> out;
  out.reserve(branching);
  for (int i = 1; i <= branching; ++i) out.push_back(w.child(i));
  return out;
}

inline Word parent(const Word& w) { return w.parent(); }

/// Length of the largest common prefix of a and b.
inline int common_prefix_len(const Word& a, const Word& b) {
  int m = std::min(a.length(), b.length());
  int p = 0;
  while (p < m && a.letter(p) == b.letter(p)) ++p;
  return p;
}

/// Graph distance in the tree: |a| + |b| - 2 * common prefix length.
inline int tree_path_length(const Word& a, const Word& b) {
  return a.length() + b.length() - 2 * common_prefix_len(a, b);
}

}  // namespace spectral

#endif
