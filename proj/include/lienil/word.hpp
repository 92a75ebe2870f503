#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace lienil {

inline constexpr int kMaxGenerators = 64;

/// Exponent vector of a multihomogeneous element of A_n.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(int n) : exps_(static_cast<size_t>(n), 0) {}
  explicit MultiDegree(std::vector<int> exps);
  MultiDegree(std::initializer_list<int> exps) : MultiDegree(std::vector<int>(exps)) {}

  static MultiDegree unit_vector(int n, int generator);  // generator is 1-based
  static MultiDegree multilinear(int n) { return MultiDegree(std::vector<int>(static_cast<size_t>(n), 1)); }

  int n() const { return static_cast<int>(exps_.size()); }
  int total() const;
  int operator[](int generator0) const { return exps_[static_cast<size_t>(generator0)]; }
  const std::vector<int>& exponents() const { return exps_; }

  /// Componentwise partial order.
  bool leq(const MultiDegree& o) const;
  bool is_dominant() const;  // weakly decreasing
  MultiDegree sorted_descending() const;

  MultiDegree operator+(const MultiDegree& o) const;
  /// Componentwise difference; entries may become negative.
  MultiDegree operator-(const MultiDegree& o) const;
  bool has_negative() const;

  /// Degree-lexicographic: total degree first, then lexicographic on exponents.
  std::strong_ordering operator<=>(const MultiDegree& o) const;
  bool operator==(const MultiDegree& o) const = default;

  /// "(2,1,0)"
  std::string to_string() const;

 private:
  std::vector<int> exps_;
};

/// Monomial in noncommuting generators x_1..x_n; the empty word is the unit.
/// Letters are stored as bytes holding the 1-based generator index.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(const std::vector<int>& letters);

  static Word letter(int generator);
  static Word from_bytes(std::string bytes) { Word w; w.letters_ = std::move(bytes); return w; }

  size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](size_t pos) const { return static_cast<unsigned char>(letters_[pos]); }
  int max_letter() const;
  const std::string& bytes() const { return letters_; }
  std::vector<int> letters() const;

  Word operator*(const Word& o) const { return from_bytes(letters_ + o.letters_); }
  Word& operator*=(const Word& o) { letters_ += o.letters_; return *this; }

  /// Degree-lexicographic with x1 < x2 < ... < xn.
  std::strong_ordering operator<=>(const Word& o) const;
  bool operator==(const Word& o) const = default;

  /// "x1*x2*x1", or "1" for the unit word.
  std::string to_string() const;

 private:
  std::string letters_;
};

MultiDegree multidegree_of(const Word& w, int n);

/// All words of multidegree delta in deglex order.
std::vector<Word> words_of_degree(const MultiDegree& delta);

/// All multidegrees in n variables with total degree exactly d, deglex order.
std::vector<MultiDegree> multidegrees_of_total(int n, int d);
/// All multidegrees dominated componentwise by bound (including zero).
std::vector<MultiDegree> multidegrees_below(const MultiDegree& bound);

/// Multinomial |delta|! / prod delta_j!. Throws on overflow.
uint64_t multinomial(const MultiDegree& delta);

}  // namespace lienil
