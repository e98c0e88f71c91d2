#include "braidval/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace braidval {

BraidWord::BraidWord(int n, std::vector<BraidLetter> ls) : strands(n), letters(std::move(ls)) {
  if (strands < 1) throw std::invalid_argument("BraidWord: strand count must be positive");
  for (const BraidLetter& l : letters) {
    if (l.index < 1 || l.index > strands - 1)
      throw std::invalid_argument("BraidWord: generator index out of range");
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("BraidWord: sign must be +-1");
  }
}

int BraidWord::exponent_sum() const {
  int e = 0;
  for (const BraidLetter& l : letters) e += l.sign;
  return e;
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> ls(letters.rbegin(), letters.rend());
  for (BraidLetter& l : ls) l.sign = -l.sign;
  return BraidWord(strands, std::move(ls));
}

BraidWord& BraidWord::append(const BraidWord& other) {
  if (other.strands != strands)
    throw std::invalid_argument("BraidWord::append: strand count mismatch");
  letters.insert(letters.end(), other.letters.begin(), other.letters.end());
  return *this;
}

BraidWord& BraidWord::append_letter(int index, int sign) {
  if (index < 1 || index > strands - 1)
    throw std::invalid_argument("append_letter: generator index out of range");
  letters.push_back({index, sign});
  return *this;
}

BraidWord BraidWord::freely_reduced() const {
  std::vector<BraidLetter> out;
  for (const BraidLetter& l : letters) {
    if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return BraidWord(strands, std::move(out));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out.append(b);
  return out;
}

namespace {

std::size_t skip_ws(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

long parse_int(std::string_view s, std::size_t& i) {
  const char* begin = s.data() + i;
  const char* end = s.data() + s.size();
  long value = 0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr == begin) throw ParseError("malformed integer", i);
  i += static_cast<std::size_t>(ptr - begin);
  return value;
}

void expect(std::string_view s, std::size_t& i, std::string_view token) {
  i = skip_ws(s, i);
  if (s.substr(i, token.size()) != token)
    throw ParseError("expected '" + std::string(token) + "'", i);
  i += token.size();
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  std::size_t i = 0;
  expect(text, i, "n");
  expect(text, i, ":");
  i = skip_ws(text, i);
  const std::size_t n_pos = i;
  const long n = parse_int(text, i);
  if (n < 1) throw ParseError("strand count must be positive", n_pos);
  expect(text, i, ";");
  expect(text, i, "word");
  expect(text, i, ":");
  std::vector<BraidLetter> letters;
  while (true) {
    i = skip_ws(text, i);
    if (i == text.size()) break;
    const std::size_t tok_pos = i;
    const long v = parse_int(text, i);
    if (v == 0) throw ParseError("zero is not a generator token", tok_pos);
    const long idx = std::abs(v);
    if (idx > n - 1)
      throw ParseError("generator index " + std::to_string(idx) + " out of range [1, " +
                           std::to_string(n - 1) + "]",
                       tok_pos);
    letters.push_back({static_cast<int>(idx), v > 0 ? +1 : -1});
  }
  return BraidWord(static_cast<int>(n), std::move(letters));
}

std::string format_braid(const BraidWord& b) {
  std::string s = "n:" + std::to_string(b.strands) + "; word:";
  for (const BraidLetter& l : b.letters) {
    s += ' ';
    if (l.sign < 0) s += '-';
    s += std::to_string(l.index);
  }
  return s;
}

BraidWord include_strand(const BraidWord& b) {
  return BraidWord(b.strands + 1, b.letters);
}

BraidWord include_strands(const BraidWord& b, int count) {
  if (count < 0) throw std::invalid_argument("include_strands: count must be >= 0");
  return BraidWord(b.strands + count, b.letters);
}

BraidWord markov_move(const BraidWord& b, const MarkovMove& move) {
  if (const auto* conj = std::get_if<ConjugateBy>(&move)) {
    if (conj->x.strands != b.strands)
      throw std::invalid_argument("markov_move: conjugator strand count mismatch");
    return conj->x * b * conj->x.inverse();
  }
  const auto& stab = std::get<Stabilize>(move);
  BraidWord out = BraidWord::identity(b.strands + 1);
  out.append_letter(b.strands, stab.sign);
  out.append(include_strand(b));
  return out;
}

TangleWord::TangleWord(BraidWord b, std::vector<int> cups)
    : braid_part(std::move(b)), cupcap_indices(std::move(cups)) {
  for (int i : cupcap_indices)
    if (i < 1 || i > braid_part.strands - 1)
      throw std::invalid_argument("TangleWord: cup-cap index out of range");
}

ClosureSpec ClosureSpec::trace(int n) {
  ClosureSpec s;
  s.kind = ClosureKind::Trace;
  s.p = 0;
  s.r = n;
  return s;
}

ClosureSpec ClosureSpec::plat(int n) {
  if (n % 2 != 0) throw std::invalid_argument("plat closure needs an even strand count");
  ClosureSpec s;
  s.kind = ClosureKind::Plat;
  s.p = n / 2;
  s.r = 0;
  return s;
}

ClosureSpec ClosureSpec::generalized(int p, int r) {
  if (p < 0 || r < 0) throw std::invalid_argument("generalized closure needs p, r >= 0");
  ClosureSpec s;
  s.kind = ClosureKind::Generalized;
  s.p = p;
  s.r = r;
  return s;
}

void ClosureSpec::validate(int n) const {
  if (p < 0 || r < 0) throw std::invalid_argument("closure: p and r must be >= 0");
  switch (kind) {
    case ClosureKind::Trace:
      if (p != 0 || r != n) throw std::invalid_argument("trace closure requires p=0, r=n");
      break;
    case ClosureKind::Plat:
      if (n % 2 != 0 || p != n / 2 || r != 0)
        throw std::invalid_argument("plat closure requires even n, p=n/2, r=0");
      break;
    case ClosureKind::Generalized:
      if (2 * p + r != n) throw std::invalid_argument("generalized closure requires 2p+r=n");
      break;
  }
  if (x.strands > 1 && x.strands != n)
    throw std::invalid_argument("closure: top braid strand count mismatch");
  if (y.strands > 1 && y.strands != n)
    throw std::invalid_argument("closure: bottom braid strand count mismatch");
}

BraidWord conjugator_braid(int p, int r) {
  if (p < 0 || r < 0) throw std::invalid_argument("conjugator_braid: p, r must be >= 0");
  const int n = 2 * p + 2 * r;
  BraidWord c = BraidWord::identity(std::max(n, 1));
  // sigma^{2p+2s+1}_{2p+s+1} for s = r-1 .. 1
  for (int s = r - 1; s >= 1; --s)
    for (int i = 2 * p + s + 1; i <= 2 * p + 2 * s; ++i) c.append_letter(i, +1);
  return c;
}

}  // namespace braidval
