#include "subshift/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_set>

#include "subshift/errors.hpp"

namespace subshift {

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

void add_factors(std::string_view w, std::size_t m,
                 std::unordered_set<Word>& out, std::vector<Word>* fresh) {
  if (w.size() < m) return;
  for (std::size_t j = 0; j + m <= w.size(); ++j) {
    auto [it, inserted] = out.emplace(w.substr(j, m));
    if (inserted && fresh) fresh->push_back(*it);
  }
}

}  // namespace

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  if (letters_.empty()) throw ArgumentError("alphabet must not be empty");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(letters_[i]);
    if (!std::isgraph(c))
      throw ArgumentError("letters must be printable non-whitespace characters");
    if (rank_[c] >= 0)
      throw ArgumentError(std::string("duplicate letter '") + letters_[i] + "'");
    rank_[c] = static_cast<std::int16_t>(i);
  }
}

bool Alphabet::contains_all(std::string_view w) const noexcept {
  return std::all_of(w.begin(), w.end(), [this](char c) { return contains(c); });
}

std::size_t Alphabet::index(char c) const {
  int r = rank_[byte(c)];
  if (r < 0) throw ArgumentError(std::string("letter '") + c + "' not in alphabet");
  return static_cast<std::size_t>(r);
}

bool Alphabet::less(std::string_view a, std::string_view b) const noexcept {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int ra = rank_[byte(a[i])], rb = rank_[byte(b[i])];
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

Substitution::Substitution(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size())
    throw ArgumentError("one image per letter is required");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].empty())
      throw ArgumentError(std::string("empty image for '") + alphabet_[i] + "'");
    if (!alphabet_.contains_all(images_[i]))
      throw ArgumentError(std::string("image of '") + alphabet_[i] +
                          "' uses a letter outside the alphabet");
  }
}

Substitution::Substitution(
    std::initializer_list<std::pair<char, std::string_view>> rules) {
  std::string letters;
  std::vector<Word> images;
  for (auto& [c, img] : rules) {
    letters.push_back(c);
    images.emplace_back(img);
  }
  *this = Substitution(Alphabet(letters), std::move(images));
}

Word Substitution::operator()(std::string_view w) const {
  Word out;
  for (char c : w) out += image(c);
  return out;
}

Substitution Substitution::restricted(const Alphabet& sub) const {
  std::vector<Word> imgs;
  imgs.reserve(sub.size());
  for (char c : sub.letters()) {
    const Word& img = image(c);
    if (!sub.contains_all(img))
      throw ArgumentError(std::string("sub-alphabet not closed: image of '") +
                          c + "' leaves it");
    imgs.push_back(img);
  }
  return Substitution(sub, std::move(imgs));
}

Substitution Substitution::reversed() const {
  std::vector<Word> imgs = images_;
  for (auto& w : imgs) std::reverse(w.begin(), w.end());
  return Substitution(alphabet_, std::move(imgs));
}

Substitution Substitution::power(unsigned k) const {
  if (k == 0) throw ArgumentError("power must be positive");
  std::vector<Word> imgs;
  imgs.reserve(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    imgs.push_back(apply(*this, std::string(1, alphabet_[i]), k));
  return Substitution(alphabet_, std::move(imgs));
}

Occurrences count_occurrences(std::string_view u, std::string_view v) {
  if (u.empty()) throw ArgumentError("cannot count occurrences of the empty word");
  Occurrences r;
  for (std::size_t pos = v.find(u); pos != std::string_view::npos;
       pos = v.find(u, pos + 1))
    r.positions.push_back(pos + 1);
  r.count = r.positions.size();
  return r;
}

std::size_t occurrence_count(std::string_view u, std::string_view v) {
  if (u.empty()) throw ArgumentError("cannot count occurrences of the empty word");
  std::size_t n = 0;
  for (std::size_t pos = v.find(u); pos != std::string_view::npos;
       pos = v.find(u, pos + 1))
    ++n;
  return n;
}

std::vector<std::uint64_t> image_lengths(const Substitution& sigma, unsigned k) {
  const Alphabet& A = sigma.alphabet();
  std::vector<std::uint64_t> len(A.size(), 1), next(A.size());
  for (unsigned step = 0; step < k; ++step) {
    for (std::size_t i = 0; i < A.size(); ++i) {
      std::uint64_t s = 0;
      for (char c : sigma.image_at(i)) s = saturating_add(s, len[A.index(c)]);
      next[i] = s;
    }
    len.swap(next);
  }
  return len;
}

Word apply(const Substitution& sigma, std::string_view w, unsigned k,
           bool allow_identity, std::uint64_t max_length) {
  if (k == 0 && !allow_identity)
    throw ArgumentError("k must be positive unless the identity is requested");
  if (!sigma.alphabet().contains_all(w))
    throw ArgumentError("word uses a letter outside the alphabet");
  auto len = image_lengths(sigma, k);
  std::uint64_t total = 0;
  for (char c : w) total = saturating_add(total, len[sigma.alphabet().index(c)]);
  if (total > max_length)
    throw BudgetExceeded("sigma^" + std::to_string(k) + " of the word exceeds " +
                         std::to_string(max_length) + " letters");
  Word cur(w);
  for (unsigned step = 0; step < k; ++step) cur = sigma(cur);
  return cur;
}

std::vector<Word> language(const Substitution& sigma, std::size_t m) {
  if (m == 0) throw ArgumentError("window length must be positive");
  std::unordered_set<Word> found;
  for (std::size_t i = 0; i < sigma.alphabet().size(); ++i) {
    Word w = sigma.image_at(i);
    std::unordered_set<Word> seen;
    while (w.size() < m && seen.insert(w).second) w = sigma(w);
    add_factors(w, m, found, nullptr);
  }
  std::vector<Word> work(found.begin(), found.end());
  while (!work.empty()) {
    Word w = std::move(work.back());
    work.pop_back();
    add_factors(sigma(w), m, found, &work);
  }
  std::vector<Word> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), WordLess{&sigma.alphabet()});
  return out;
}

PowerStream::PowerStream(const Substitution& sigma, std::string_view w,
                         unsigned k)
    : sigma_(&sigma), seed_(w) {
  stack_.push_back({nullptr, 0, k});
}

std::optional<char> PowerStream::next() {
  while (!stack_.empty()) {
    Frame& f = stack_.back();
    const Word& w = f.word ? *f.word : seed_;
    if (f.pos == w.size()) {
      stack_.pop_back();
      continue;
    }
    char c = w[f.pos++];
    if (f.depth == 0) return c;
    unsigned d = f.depth - 1;
    stack_.push_back({&sigma_->image(c), 0, d});
  }
  return std::nullopt;
}

}  // namespace subshift
