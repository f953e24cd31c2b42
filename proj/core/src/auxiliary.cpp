#include "subshift/auxiliary.hpp"

#include <algorithm>
#include <unordered_set>

#include "subshift/errors.hpp"

namespace subshift {

AuxiliarySubstitution::AuxiliarySubstitution(const Substitution& sigma,
                                             const ComponentChain& chain,
                                             std::size_t m)
    : m_(m) {
  if (m == 0) throw ArgumentError("window length must be positive");
  const std::size_t n = chain.size();
  std::vector<std::unordered_set<Word>> lang(n);
  for (std::size_t i = 1; i <= n; ++i) {
    auto L = language(sub_substitution(sigma, chain, i), m);
    lang[i - 1].insert(L.begin(), L.end());
  }

  // q[i-1] collects Q(i); g[i-1] collects G(i).
  std::vector<std::vector<Word>> q(n), g(n);
  WordLess less{&sigma.alphabet()};
  for (const Word& u : language(sigma, m)) {
    std::size_t j = static_cast<std::size_t>(chain.level_of(u[0]));
    std::size_t first = j;
    while (!lang[first - 1].count(u)) ++first;
    if (first == j)
      q[j - 1].push_back(u);
    else
      g[first - 2].push_back(u);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(q[i].begin(), q[i].end(), less);
    std::sort(g[i].begin(), g[i].end(), less);
    CoordRange r{words_.size(), words_.size() + q[i].size()};
    words_.insert(words_.end(), q[i].begin(), q[i].end());
    q_.push_back(r);
    if (i + 1 < n) {
      CoordRange s{words_.size(), words_.size() + g[i].size()};
      words_.insert(words_.end(), g[i].begin(), g[i].end());
      g_.push_back(s);
    }
  }
  for (std::size_t k = 0; k < words_.size(); ++k) index_.emplace(words_[k], k);

  images_.resize(words_.size());
  for (std::size_t k = 0; k < words_.size(); ++k) {
    const Word& u = words_[k];
    Word img = sigma(u);
    std::size_t len = sigma.image(u[0]).size();
    for (std::size_t j = 0; j < len; ++j)
      images_[k].push_back(index_.at(img.substr(j, m)));
  }
}

std::optional<std::size_t> AuxiliarySubstitution::find(const Word& u) const {
  auto it = index_.find(u);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t AuxiliarySubstitution::index(const Word& u) const {
  auto k = find(u);
  if (!k) throw WordNotInLevelLanguage("'" + u + "' is not in the language");
  return *k;
}

std::vector<Word> AuxiliarySubstitution::image_words(const Word& u) const {
  std::vector<Word> out;
  for (std::size_t k : images_.at(index(u))) out.push_back(words_[k]);
  return out;
}

std::pair<std::size_t, bool> AuxiliarySubstitution::block_of(std::size_t k) const {
  for (std::size_t i = 0; i < q_.size(); ++i) {
    if (q_[i].contains(k)) return {i + 1, false};
    if (i < g_.size() && g_[i].contains(k)) return {i + 1, true};
  }
  throw ArgumentError("coordinate out of range");
}

IntMatrix AuxiliarySubstitution::matrix() const {
  IntMatrix M(size(), size());
  for (std::size_t k = 0; k < size(); ++k)
    for (std::size_t v : images_[k]) ++M(k, v);
  return M;
}

}  // namespace subshift
