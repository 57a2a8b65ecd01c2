#include "csg/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "csg/error.hpp"

namespace csg {

void throw_level_mismatch(const char* op, std::size_t lhs, std::size_t rhs) {
  throw Error(ErrorKind::LevelMismatch, std::string(op) + ": level mismatch (" + std::to_string(lhs) +
                                            " vs " + std::to_string(rhs) + ")");
}

void throw_index_out_of_range(const char* op, std::size_t index, std::size_t bound) {
  throw Error(ErrorKind::IndexOutOfRange, std::string(op) + ": index " + std::to_string(index) +
                                              " out of range [0, " + std::to_string(bound) + "]");
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw Error(ErrorKind::InvalidElement, "permutation must move at least one point");
  }
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v]) {
      throw Error(ErrorKind::InvalidElement, "not a bijection: " + to_string());
    }
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t level) {
  std::vector<int> images(level + 1);
  std::iota(images.begin(), images.end(), 0);
  return Perm(Unchecked{}, std::move(images));
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    inv[images_[x]] = static_cast<int>(x);
  }
  return Perm(Unchecked{}, std::move(inv));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

std::size_t Perm::inversions() const noexcept {
  std::size_t count = 0;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    for (std::size_t y = x + 1; y < images_.size(); ++y) {
      if (images_[x] > images_[y]) ++count;
    }
  }
  return count;
}

Perm operator*(const Perm& lhs, const Perm& rhs) {
  if (lhs.points() != rhs.points()) throw_level_mismatch("mul", lhs.level(), rhs.level());
  std::vector<int> out(rhs.points());
  for (std::size_t x = 0; x < out.size(); ++x) {
    out[x] = lhs.images_[rhs.images_[x]];
  }
  return Perm(Perm::Unchecked{}, std::move(out));
}

std::string Perm::to_string() const {
  std::string out = "[";
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (x) out += ',';
    out += std::to_string(images_[x]);
  }
  out += ']';
  return out;
}

Perm Perm::parse(std::string_view text) {
  auto fail = [&](std::size_t pos, const char* why) -> Perm {
    throw Error(ErrorKind::Parse, "bad permutation at offset " + std::to_string(pos) + ": " + why);
  };
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '[') return fail(pos, "expected '['");
  ++pos;
  std::vector<int> images;
  while (true) {
    skip();
    if (pos >= text.size()) return fail(pos, "unterminated literal");
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return fail(pos, "expected digit");
    int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) return fail(pos, "image too large");
      ++pos;
    }
    images.push_back(value);
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      break;
    }
    return fail(pos, "expected ',' or ']'");
  }
  skip();
  if (pos != text.size()) return fail(pos, "trailing characters");
  return Perm(std::move(images));
}

std::vector<Perm> all_perms(std::size_t level) {
  std::vector<int> images(level + 1);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(PermBuilder::adopt(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace csg
