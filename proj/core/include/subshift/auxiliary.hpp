#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "subshift/matrix.hpp"
#include "subshift/structure.hpp"
#include "subshift/words.hpp"

namespace subshift {

/// Half-open range [begin, end) of coordinates.
struct CoordRange {
  std::size_t begin = 0, end = 0;
  std::size_t size() const noexcept { return end - begin; }
  bool empty() const noexcept { return begin == end; }
  bool contains(std::size_t x) const noexcept { return x >= begin && x < end; }
};

/// sigma^(m) on the alphabet L_m(sigma). Coordinates are ordered
/// Q(1), G(1), Q(2), G(2), ..., G(n-1), Q(n), lexicographically inside each
/// block, where Q(i) = L_m(sigma_i) \ B_m(i-1) and G(i) = B_m(i) \ L_m(sigma_i).
/// With this order L_m(sigma_i) and B_m(i) are prefixes of the coordinates.
class AuxiliarySubstitution {
 public:
  AuxiliarySubstitution(const Substitution& sigma, const ComponentChain& chain,
                        std::size_t m);

  std::size_t window() const noexcept { return m_; }
  std::size_t levels() const noexcept { return q_.size(); }
  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<Word>& words() const noexcept { return words_; }
  const Word& word(std::size_t k) const { return words_.at(k); }
  std::optional<std::size_t> find(const Word& u) const;
  /// Coordinate of u; throws WordNotInLevelLanguage if u is not in L_m.
  std::size_t index(const Word& u) const;

  /// The image of coordinate k as a sequence of coordinates.
  const std::vector<std::size_t>& image(std::size_t k) const {
    return images_.at(k);
  }
  std::vector<Word> image_words(const Word& u) const;

  CoordRange q_block(std::size_t i) const { return q_.at(i - 1); }
  CoordRange g_block(std::size_t i) const { return g_.at(i - 1); }
  /// L_m(sigma_i), i = 0 gives the empty range.
  CoordRange language_range(std::size_t i) const {
    return {0, i == 0 ? 0 : q_.at(i - 1).end};
  }
  /// B_m(i), i = 0 gives the empty range.
  CoordRange boundary_range(std::size_t i) const {
    return {0, i == 0 ? 0 : g_.at(i - 1).end};
  }
  /// Level whose Q or G block holds coordinate k, and whether it is a G block.
  std::pair<std::size_t, bool> block_of(std::size_t k) const;

  IntMatrix matrix() const;

  /// Q_m(i) has no coordinates.
  bool level_empty_diag(std::size_t i) const { return q_block(i).empty(); }

 private:
  std::size_t m_;
  std::vector<Word> words_;
  std::unordered_map<Word, std::size_t> index_;
  std::vector<std::vector<std::size_t>> images_;
  std::vector<CoordRange> q_, g_;
};

}  // namespace subshift
