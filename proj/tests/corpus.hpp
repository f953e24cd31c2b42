#pragma once

#include <random>
#include <string>

#include "subshift/words.hpp"

namespace corpus {

using subshift::Substitution;

inline Substitution ex44i() { return {{'a', "aaaa"}, {'b', "abbb"}, {'c', "cbc"}}; }
inline Substitution ex44ii() {
  return {{'a', "aa"}, {'b', "abbbccc"}, {'c', "abccccc"}, {'d', "abcdd"}};
}
inline Substitution ex532() {
  return {{'a', "ab"}, {'b', "a"}, {'c', "acd"}, {'d', "adc"}, {'e', "dece"}};
}
inline Substitution chacon() { return {{'a', "a"}, {'b', "bbab"}}; }
inline Substitution ex36i() { return {{'a', "ab"}, {'b', "a"}, {'c', "abc"}}; }
inline Substitution ex36ii() {
  return {{'a', "abca"}, {'b', "bacb"}, {'c', "cbac"}, {'d', "abbcad"}};
}
inline Substitution ex36iii() {
  return {{'a', "a"}, {'b', "cba"}, {'c', "cbc"}, {'d', "dc"}, {'e', "bde"}};
}
inline Substitution ex39i() {
  return {{'a', "abca"}, {'b', "bacb"}, {'c', "cbac"}, {'d', "abadcac"}};
}
inline Substitution ex39ii() { return {{'a', "ab"}, {'b', "ab"}, {'c', "acb"}, {'d', "cdc"}}; }
inline Substitution fib_acc() { return {{'a', "ab"}, {'b', "a"}, {'c', "acc"}}; }

/// Random substitution on the first n letters of "abcde" with images of
/// length 1..max_len.
inline Substitution random_substitution(std::mt19937& rng, std::size_t n, std::size_t max_len) {
  const std::string letters = std::string("abcde").substr(0, n);
  std::uniform_int_distribution<std::size_t> len(1, max_len), pick(0, n - 1);
  std::vector<subshift::Word> images;
  for (std::size_t i = 0; i < n; ++i) {
    subshift::Word w;
    for (std::size_t k = len(rng); k > 0; --k) w.push_back(letters[pick(rng)]);
    images.push_back(w);
  }
  return Substitution(subshift::Alphabet(letters), images);
}

/// sigma^k(w) by plain repeated rewriting.
inline std::string expand(const Substitution& s, std::string w, unsigned k) {
  for (unsigned j = 0; j < k; ++j) {
    std::string next;
    for (char c : w) next += s.image(c);
    w = std::move(next);
  }
  return w;
}

inline std::size_t count(const std::string& v, const std::string& w) {
  std::size_t n = 0;
  for (std::size_t p = 0; p + v.size() <= w.size(); ++p)
    if (w.compare(p, v.size(), v) == 0) ++n;
  return n;
}

}  // namespace corpus
