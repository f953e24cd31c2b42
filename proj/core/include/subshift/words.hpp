#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subshift {

/// A finite word over an alphabet, stored as the letters themselves. The empty
/// string is the empty word; positions reported to callers are 1-based.
using Word = std::string;

/// Ordered finite set of single-character letters. The order fixes matrix
/// indexing and the lexicographic order on words.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string_view letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  const std::string& letters() const noexcept { return letters_; }

  bool contains(char c) const noexcept { return rank_[byte(c)] >= 0; }
  bool contains_all(std::string_view w) const noexcept;
  /// Position of `c` in the order; throws ArgumentError if absent.
  std::size_t index(char c) const;

  /// Alphabet-lexicographic comparison (shorter prefix first).
  bool less(std::string_view a, std::string_view b) const noexcept;

  /// The sub-alphabet of letters satisfying `keep`, in the same order.
  template <class Pred>
  Alphabet filter(Pred keep) const {
    std::string out;
    for (char c : letters_)
      if (keep(c)) out.push_back(c);
    return Alphabet(out);
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.letters_ == b.letters_;
  }

 private:
  static std::size_t byte(char c) noexcept {
    return static_cast<unsigned char>(c);
  }

  std::string letters_;
  std::array<std::int16_t, 256> rank_ = make_empty_rank();

  static std::array<std::int16_t, 256> make_empty_rank() {
    std::array<std::int16_t, 256> r{};
    r.fill(-1);
    return r;
  }
};

/// Orders words by the alphabet order; usable as a set/map comparator.
struct WordLess {
  const Alphabet* alphabet;
  bool operator()(std::string_view a, std::string_view b) const noexcept {
    return alphabet->less(a, b);
  }
};

/// A map from letters to nonempty words over the same alphabet.
class Substitution {
 public:
  Substitution() = default;
  /// `images[i]` is the image of `alphabet[i]`.
  Substitution(Alphabet alphabet, std::vector<Word> images);
  /// Convenience: rules in declaration order define the alphabet order.
  Substitution(std::initializer_list<std::pair<char, std::string_view>> rules);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Word& image(char c) const { return images_[alphabet_.index(c)]; }
  const Word& image_at(std::size_t i) const { return images_[i]; }
  const std::vector<Word>& images() const noexcept { return images_; }

  /// One application of the substitution to a word.
  Word operator()(std::string_view w) const;

  /// Restriction to a sub-alphabet closed under the substitution.
  Substitution restricted(const Alphabet& sub) const;
  /// Every image reversed; the mirror image of the system.
  Substitution reversed() const;
  /// The substitution a -> sigma^k(a).
  Substitution power(unsigned k) const;

  friend bool operator==(const Substitution& a, const Substitution& b) {
    return a.alphabet_ == b.alphabet_ && a.images_ == b.images_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

struct Occurrences {
  std::size_t count = 0;
  std::vector<std::size_t> positions;  // 1-based, increasing
};

/// All (possibly overlapping) occurrences of `u` in `v`. Throws ArgumentError
/// when `u` is empty.
Occurrences count_occurrences(std::string_view u, std::string_view v);
/// Number of occurrences only.
std::size_t occurrence_count(std::string_view u, std::string_view v);

/// sigma^k(w). k = 0 is accepted only with `allow_identity`; the result is
/// limited to `max_length` letters (BudgetExceeded otherwise).
Word apply(const Substitution& sigma, std::string_view w, unsigned k,
           bool allow_identity = false,
           std::uint64_t max_length = std::uint64_t{1} << 32);

/// |sigma^k(a)| for every letter, saturating at UINT64_MAX.
std::vector<std::uint64_t> image_lengths(const Substitution& sigma, unsigned k);

/// L_m(sigma): the length-m factors of sigma^n(a), n >= 1, sorted in the
/// alphabet order.
std::vector<Word> language(const Substitution& sigma, std::size_t m);

/// Lazily produces the letters of sigma^k(w) left to right without
/// materialising the whole word.
class PowerStream {
 public:
  PowerStream(const Substitution& sigma, std::string_view w, unsigned k);

  std::optional<char> next();

 private:
  struct Frame {
    const Word* word;  // nullptr refers to seed_
    std::size_t pos;
    unsigned depth;
  };

  const Substitution* sigma_;
  Word seed_;
  std::vector<Frame> stack_;
};

}  // namespace subshift
