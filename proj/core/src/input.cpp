#include "subshift/input.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <vector>

#include "subshift/errors.hpp"

namespace subshift {

namespace {

bool blank(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

InputSpec parse_input(std::string_view text) {
  std::string letters;
  std::vector<Word> images;
  std::vector<std::size_t> image_lines;
  std::set<char> declared;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    char x = line[0];
    if (!std::isgraph(static_cast<unsigned char>(x)))
      throw ParseError(line_no, "rule must start with a printable letter");
    std::string_view rest = trim(line.substr(1));
    if (rest.substr(0, 2) != "->") throw ParseError(line_no, "expected 'X -> IMAGE'");
    std::string_view image = trim(rest.substr(2));
    if (image.empty())
      throw ParseError(line_no, std::string("empty image for '") + x + "'");
    for (char c : image)
      if (blank(c)) throw ParseError(line_no, "whitespace inside an image");
    if (!declared.insert(x).second)
      throw ParseError(line_no, std::string("duplicate rule for '") + x + "'");
    letters.push_back(x);
    images.emplace_back(image);
    image_lines.push_back(line_no);
  }

  for (std::size_t r = 0; r < images.size(); ++r)
    for (char c : images[r])
      if (!declared.count(c))
        throw ParseError(image_lines[r], std::string("undeclared letter '") + c + "'");
  if (letters.size() < 2)
    throw ParseError(line_no, "at least two letters are required");

  return {std::string(text), Substitution(Alphabet(letters), std::move(images))};
}

std::string emit(const Substitution& sigma) {
  std::ostringstream out;
  for (std::size_t i = 0; i < sigma.alphabet().size(); ++i)
    out << sigma.alphabet()[i] << " -> " << sigma.image_at(i) << '\n';
  return out.str();
}

}  // namespace subshift
