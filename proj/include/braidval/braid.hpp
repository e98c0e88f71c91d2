#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace braidval {

struct BraidLetter {
  int index;  // generator index, 1 <= index <= strands-1
  int sign;   // +1 or -1

  auto operator<=>(const BraidLetter&) const = default;
};

// A word in the braid group B_n as a signed generator sequence. Letters
// listed left to right multiply left to right into representation matrices;
// no free reduction is ever applied implicitly, so length() and
// exponent_sum() always describe the input word.
struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<BraidLetter> ls);

  static BraidWord identity(int n) { return BraidWord(n, {}); }

  std::size_t length() const { return letters.size(); }
  int exponent_sum() const;
  BraidWord inverse() const;
  BraidWord& append(const BraidWord& other);  // same strand count
  BraidWord& append_letter(int index, int sign);

  // cancels adjacent sigma_i sigma_i^{-1} pairs; explicit opt-in pass
  BraidWord freely_reduced() const;

  auto operator<=>(const BraidWord&) const = default;
};

BraidWord operator*(const BraidWord& a, const BraidWord& b);

struct ParseError : std::runtime_error {
  std::size_t offset;  // byte offset into the input text
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Grammar: `n:<int>; word:(<signed-int> )*` where token i means sigma_i and
// -i means sigma_i^{-1}. Whitespace between tokens is free-form; the
// canonical formatter emits single spaces.
BraidWord parse_braid(std::string_view text);
std::string format_braid(const BraidWord& b);

// inclusion iota: B_n -> B_{n+1} (adds a trailing idle strand)
BraidWord include_strand(const BraidWord& b);
BraidWord include_strands(const BraidWord& b, int count);

// Markov moves
struct ConjugateBy {
  BraidWord x;
};
struct Stabilize {
  int sign;  // +1 or -1
};
using MarkovMove = std::variant<ConjugateBy, Stabilize>;

// type I: x b x^{-1}; type II: sigma_n^{+-1} iota(b)
BraidWord markov_move(const BraidWord& b, const MarkovMove& move);

// Braid-then-cupcaps tangle b*w with w a word in the diagram generators
// omega_i. Restricted to this shape by construction; there is no way to
// interleave braid letters after cup-caps.
struct TangleWord {
  BraidWord braid_part;
  std::vector<int> cupcap_indices;  // each in [1, strands-1]

  TangleWord(BraidWord b, std::vector<int> cups);
  int strands() const { return braid_part.strands; }
};

enum class ClosureKind { Trace, Plat, Generalized };

// How a braid on n strands closes into a link: p plat pairs on the left, r
// trace strands on the right, with framing braids x (top) and y (bottom)
// folded in as x b y.
struct ClosureSpec {
  ClosureKind kind = ClosureKind::Trace;
  int p = 0;
  int r = 0;
  BraidWord x;  // empty strands==0 means identity
  BraidWord y;

  static ClosureSpec trace(int n);
  static ClosureSpec plat(int n);
  static ClosureSpec generalized(int p, int r);

  // throws std::invalid_argument unless the spec is consistent with n
  void validate(int n) const;
};

// c = sigma^{2p+2r-1}_{2p+r} ... sigma^{2p+5}_{2p+3} sigma^{2p+3}_{2p+2} on
// 2p+2r strands, where sigma^j_i = sigma_i...sigma_{j-1} moves strand j above
// its left neighbors into position i. The plat closure of c^{-1} iota^r(b) c
// realizes the generalized (p,r)-closure of b.
BraidWord conjugator_braid(int p, int r);

}  // namespace braidval
