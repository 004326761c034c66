#include "cherednik/cartan_type.hpp"

#include <algorithm>
#include <cctype>

#include "cherednik/rational.hpp"

namespace cherednik {

namespace {

void validate(const Factor& f) {
  const auto bad = [&] {
    throw ValidationError("invalid Cartan type " + std::string(1, f.letter) + std::to_string(f.rank));
  };
  if (f.rank < 1) bad();
  switch (f.letter) {
    case 'A': break;
    case 'B':
    case 'C': if (f.rank < 2) bad(); break;
    case 'D': if (f.rank < 4) bad(); break;
    case 'E': if (f.rank < 6 || f.rank > 8) bad(); break;
    case 'F': if (f.rank != 4) bad(); break;
    case 'G': if (f.rank != 2) bad(); break;
    default: bad();
  }
}

void append_normalized(Factor f, std::vector<Factor>& out) {
  if ((f.letter == 'B' || f.letter == 'C') && f.rank == 1) f.letter = 'A';
  if (f.letter == 'C' && f.rank == 2) f.letter = 'B';
  if (f.letter == 'D' && f.rank == 3) f.letter = 'A';
  if (f.letter == 'D' && f.rank == 2) {
    out.push_back({'A', 1});
    out.push_back({'A', 1});
    return;
  }
  validate(f);
  out.push_back(f);
}

}  // namespace

std::string Factor::to_string() const { return std::string(1, letter) + std::to_string(rank); }

CartanType::CartanType(std::vector<Factor> factors) {
  for (const auto& f : factors) append_normalized(f, factors_);
  std::stable_sort(factors_.begin(), factors_.end());
}

CartanType CartanType::parse(std::string_view text) {
  std::vector<Factor> factors;
  std::size_t i = 0;
  const auto fail = [&] { throw ValidationError("cannot parse Cartan type '" + std::string(text) + "'"); };
  while (i < text.size()) {
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (letter < 'A' || letter > 'G') fail();
    ++i;
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || i - start > 4) fail();
    factors.push_back({letter, std::stoi(std::string(text.substr(start, i - start)))});
    if (i < text.size()) {
      if (text[i] != 'x' && text[i] != 'X' && text[i] != '*') fail();
      ++i;
      if (i == text.size()) fail();
    }
  }
  if (factors.empty()) fail();
  return CartanType(std::move(factors));
}

int CartanType::rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank;
  return r;
}

bool CartanType::simply_laced() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.simply_laced(); });
}

std::vector<ClassId> CartanType::classes() const {
  std::vector<ClassId> out;
  for (int i = 0; i < static_cast<int>(factors_.size()); ++i) {
    out.push_back({i, 0});
    if (!factors_[i].simply_laced()) out.push_back({i, 1});
  }
  return out;
}

std::size_t CartanType::class_index(ClassId id) const {
  const auto all = classes();
  const auto it = std::find(all.begin(), all.end(), id);
  if (it == all.end()) throw InvariantError("length class not present in " + to_string());
  return static_cast<std::size_t>(it - all.begin());
}

std::string CartanType::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += 'x';
    s += factors_[i].to_string();
  }
  return s;
}

}  // namespace cherednik
