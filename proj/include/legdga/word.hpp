#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace legdga {

// A word in the free noncommutative algebra: a sequence of generator ids.
// The empty word is the unit 1.
using Word = std::vector<int>;

// Degree-lexicographic order (length first, then ids left to right).
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Polynomial over Z/2 in the free noncommutative algebra: a word is present
// or absent. Canonically sorted deg-lex.
class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(Word w) { words_.insert(std::move(w)); }

  static NCPoly one() { return NCPoly(Word{}); }
  static NCPoly zero() { return NCPoly(); }
  static NCPoly gen(int g) { return NCPoly(Word{g}); }

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_.begin()->empty(); }
  bool contains(const Word& w) const { return words_.count(w) != 0; }
  std::size_t size() const { return words_.size(); }

  const std::set<Word, DegLexLess>& words() const { return words_; }

  // Z/2 addition: symmetric difference.
  void toggle(const Word& w) {
    auto it = words_.find(w);
    if (it == words_.end())
      words_.insert(w);
    else
      words_.erase(it);
  }

  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& w : o.words_) toggle(w);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) {
    a += b;
    return a;
  }
  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.words_ == b.words_;
  }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) {
    return !(a == b);
  }
  friend bool operator<(const NCPoly& a, const NCPoly& b) {
    return std::lexicographical_compare(
        a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end(),
        DegLexLess{});
  }

  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& u : a.words_)
      for (const auto& v : b.words_) {
        Word w = u;
        w.insert(w.end(), v.begin(), v.end());
        r.toggle(w);
      }
    return r;
  }

  // Largest word in deg-lex order; poly must be nonzero.
  const Word& leading() const { return *words_.rbegin(); }

  // Substitute generator g by poly p everywhere (expanding products).
  NCPoly substituted(int g, const NCPoly& p) const;

  // True if generator g occurs in some word.
  bool mentions(int g) const {
    for (const auto& w : words_)
      for (int x : w)
        if (x == g) return true;
    return false;
  }

  std::string render(const std::vector<std::string>& labels,
                     const std::string& unit = "1") const;

 private:
  std::set<Word, DegLexLess> words_;
};

std::string render_word(const Word& w, const std::vector<std::string>& labels,
                        const std::string& unit = "1");

}  // namespace legdga
