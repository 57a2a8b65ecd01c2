#include "csg/braid.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "csg/error.hpp"
#include "csg/symmetric.hpp"

namespace csg {

BraidWord::BraidWord(std::size_t level, std::vector<Letter> letters)
    : level_(level), letters_(std::move(letters)) {
  for (const Letter& l : letters_) {
    if (l.gen >= level_ || (l.sign != 1 && l.sign != -1)) {
      throw Error(ErrorKind::InvalidElement, "generator s" + std::to_string(l.gen + 1) +
                                                 " is not defined on " + std::to_string(level_ + 1) +
                                                 " strands");
    }
  }
}

std::string BraidWord::to_string() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += 's';
    out += std::to_string(l.gen + 1);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

BraidWord BraidWord::parse(std::string_view text, std::size_t level) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> BraidWord {
    throw Error(ErrorKind::Parse, "bad braid word at offset " + std::to_string(pos) + ": " + why);
  };
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    if (text[pos] == 'e' && (pos + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
      ++pos;
      continue;
    }
    if (text[pos] != 's') return fail("expected 's<k>'");
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      return fail("expected generator number");
    }
    std::size_t k = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      k = k * 10 + static_cast<std::size_t>(text[pos] - '0');
      if (k > 100000) return fail("generator number too large");
      ++pos;
    }
    if (k == 0) return fail("generators are numbered from s1");
    int sign = 1;
    if (text.substr(pos).starts_with("^-1")) {
      sign = -1;
      pos += 3;
    } else if (text.substr(pos).starts_with("^1")) {
      pos += 2;
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      return fail("unexpected character");
    }
    if (k > level) return fail("s" + std::to_string(k) + " needs level >= " + std::to_string(k));
    letters.push_back({static_cast<std::uint32_t>(k - 1), sign});
  }
  return BraidWord(level, std::move(letters));
}

FreeWord FreeWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& x : out) x = -x;
  return FreeWord(std::move(out));
}

FreeWord operator*(const FreeWord& lhs, const FreeWord& rhs) {
  std::size_t cancel = 0;
  const std::size_t ln = lhs.letters_.size();
  while (cancel < ln && cancel < rhs.letters_.size() &&
         lhs.letters_[ln - 1 - cancel] == -rhs.letters_[cancel]) {
    ++cancel;
  }
  std::vector<int> out;
  out.reserve(ln + rhs.letters_.size() - 2 * cancel);
  out.insert(out.end(), lhs.letters_.begin(), lhs.letters_.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), rhs.letters_.begin() + static_cast<std::ptrdiff_t>(cancel), rhs.letters_.end());
  return FreeWord(std::move(out));
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (int x : letters_) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(std::abs(x) - 1);
    if (x < 0) out += "^-1";
  }
  return out;
}

BraidWord braid_one(std::size_t level) { return BraidWord(level); }

BraidWord braid_mul(const BraidWord& g, const BraidWord& h) {
  if (g.level() != h.level()) throw_level_mismatch("mul", g.level(), h.level());
  std::vector<Letter> letters = g.letters();
  letters.insert(letters.end(), h.letters().begin(), h.letters().end());
  return BraidWord(g.level(), std::move(letters));
}

BraidWord braid_inv(const BraidWord& g) {
  std::vector<Letter> letters(g.letters().rbegin(), g.letters().rend());
  for (Letter& l : letters) l.sign = -l.sign;
  return BraidWord(g.level(), std::move(letters));
}

BraidWord braid_pow(const BraidWord& g, int exponent) {
  const BraidWord base = exponent < 0 ? braid_inv(g) : g;
  BraidWord out = braid_one(g.level());
  for (int e = 0; e < std::abs(exponent); ++e) out = braid_mul(out, base);
  return out;
}

Perm braid_perm(const BraidWord& g) {
  std::vector<int> table(g.strands());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = static_cast<int>(x);
  for (const Letter& l : g.letters()) std::swap(table[l.gen], table[l.gen + 1]);
  return PermBuilder::adopt(std::move(table));
}

std::vector<FreeWord> artin_act(const BraidWord& g) {
  std::vector<FreeWord> images;
  images.reserve(g.strands());
  for (std::size_t k = 0; k < g.strands(); ++k) images.push_back(FreeWord::generator(k));
  // Right-multiplying the braid by a letter precomposes its automorphism, so
  // only the two affected images change.
  for (const Letter& l : g.letters()) {
    FreeWord& a = images[l.gen];
    FreeWord& b = images[l.gen + 1];
    if (l.sign > 0) {
      FreeWord conj = a * b * a.inverse();
      b = std::move(a);
      a = std::move(conj);
    } else {
      FreeWord conj = b.inverse() * a * b;
      a = std::move(b);
      b = std::move(conj);
    }
  }
  return images;
}

bool braids_equal(const BraidWord& g, const BraidWord& h) {
  if (g.level() != h.level()) throw_level_mismatch("braids_equal", g.level(), h.level());
  if (g == h) return true;
  if (braid_perm(g) != braid_perm(h)) return false;
  return artin_act(braid_mul(g, braid_inv(h))) == artin_act(braid_one(g.level()));
}

std::uint64_t artin_digest(const BraidWord& g) {
  // FNV-1a over the image letters, with a separator between images.
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto mix = [&hash](std::uint32_t value) {
    for (int shift = 0; shift < 32; shift += 8) {
      hash ^= (value >> shift) & 0xffU;
      hash *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint32_t>(g.strands()));
  for (const FreeWord& w : artin_act(g)) {
    for (int x : w.letters()) mix(static_cast<std::uint32_t>(x));
    mix(0);
  }
  return hash;
}

BraidWord face_braid(std::size_t i, const BraidWord& g) {
  if (g.level() == 0) throw Error(ErrorKind::IndexOutOfRange, "face: level 0 has no faces");
  if (i > g.level()) throw_index_out_of_range("face", i, g.level());
  std::vector<Letter> out;
  std::size_t p = i;
  for (const Letter& l : g.letters()) {
    if (p == l.gen) {
      p = l.gen + 1;
    } else if (p == l.gen + 1) {
      p = l.gen;
    } else if (l.gen > p) {
      out.push_back({l.gen - 1, l.sign});
    } else {
      out.push_back(l);
    }
  }
  return BraidWord(g.level() - 1, std::move(out));
}

BraidWord degeneracy_braid(std::size_t i, const BraidWord& g) {
  if (i > g.level()) throw_index_out_of_range("degeneracy", i, g.level());
  std::vector<Letter> out;
  out.reserve(g.length() + 8);
  std::size_t p = i;
  for (const Letter& l : g.letters()) {
    if (p == l.gen) {
      // The cable moves right past the strand now sitting at gen + 2.
      out.push_back({l.gen + 1, l.sign});
      out.push_back({l.gen, l.sign});
      p = l.gen + 1;
    } else if (p == l.gen + 1) {
      out.push_back({l.gen, l.sign});
      out.push_back({l.gen + 1, l.sign});
      p = l.gen;
    } else if (l.gen > p) {
      out.push_back({l.gen + 1, l.sign});
    } else {
      out.push_back(l);
    }
  }
  return BraidWord(g.level() + 1, std::move(out));
}

BraidWord s_left_braid(const BraidWord& g) {
  std::vector<Letter> out = g.letters();
  for (Letter& l : out) ++l.gen;
  return BraidWord(g.level() + 1, std::move(out));
}

BraidWord s_right_braid(const BraidWord& g) { return BraidWord(g.level() + 1, g.letters()); }

BraidWord permutation_braid(const Perm& sigma) {
  // Bubble sort the one-line table; each adjacent swap removes one inversion
  // and right-multiplies by a transposition, so the swaps read backwards
  // spell sigma.
  std::vector<int> table(sigma.images().begin(), sigma.images().end());
  std::vector<Letter> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < table.size(); ++k) {
      if (table[k] > table[k + 1]) {
        std::swap(table[k], table[k + 1]);
        swaps.push_back({static_cast<std::uint32_t>(k), 1});
        changed = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return BraidWord(sigma.level(), std::move(swaps));
}

bool section_is_simplicial(const Perm& sigma, std::size_t i) {
  const BraidWord lifted = permutation_braid(sigma);
  if (!braids_equal(permutation_braid(degeneracy_perm(i, sigma)), degeneracy_braid(i, lifted))) {
    return false;
  }
  if (sigma.level() == 0) return true;
  return braids_equal(permutation_braid(face_perm(i, sigma)), face_braid(i, lifted));
}

}  // namespace csg
