#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidval/rng.hpp"

namespace braidval {

using Complex = std::complex<double>;

// [d]_ell = sin(pi d / ell) / sin(pi / ell). Odd in d, [0] = 0, [1] = 1.
double quantum_integer(long d, int ell);

// Evaluation point q = e^{2 pi i / ell} together with the constants that keep
// showing up next to it. The square root of q is fixed to the principal
// branch e^{i pi / ell} throughout the library.
struct RootParams {
  int k;
  int ell;
  Complex q;
  Complex q_half;
  double two_q;  // [2]_ell
  double tau;    // [2]_ell^{-2}

  RootParams(int k, int ell);

  // q^{halves/2} with the fixed branch
  Complex q_pow_half(long halves) const;

  bool operator==(const RootParams& o) const { return k == o.k && ell == o.ell; }
};

// a_ell(d) = [d+1] / ([2][d]); satisfies a(d) + a(-d) = 1 = a(1).
// Throws std::domain_error when |[d]| < 1e-12 (degenerate axial distance,
// which signals an inadmissible tableau pair upstream).
double a_coefficient(long d, const RootParams& p);

struct YoungDiagram {
  std::vector<int> parts;  // weakly decreasing, trailing zeros stripped

  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> p);

  int boxes() const;
  int rows() const { return static_cast<int>(parts.size()); }
  int part(int i) const;  // 1-based, 0 beyond the last row
  int level(int k) const { return part(1) - part(k); }
  bool admissible(const RootParams& p) const;
  bool contains(const YoungDiagram& mu) const;
  YoungDiagram with_box(int row) const;     // add one box to 1-based row
  YoungDiagram without_box(int row) const;  // remove one box from 1-based row
  int hook_length(int row, int col) const;  // arm + leg + 1, 1-based coords

  std::string to_string() const;  // "[3,1]", "[]" for the empty diagram

  auto operator<=>(const YoungDiagram&) const = default;
};

// Standard tableau restricted to the (k,ell) Young graph, stored as the row
// word r(t): rows[i] is the 1-based row containing entry i+1. Column numbers
// and the prefix-shape path are derived.
class Tableau {
 public:
  Tableau(YoungDiagram shape, std::vector<int> rows);

  // builds from a path of prefix diagrams; inverse of path()
  static Tableau from_path(const std::vector<YoungDiagram>& path);

  int size() const { return static_cast<int>(rows_.size()); }
  const YoungDiagram& shape() const { return shape_; }
  const std::vector<int>& rows() const { return rows_; }
  int row(int i) const { return rows_[i - 1]; }       // 1-based entry
  int col(int i) const { return cols_[i - 1]; }
  long axial_distance(int i) const;                   // d_i(t), 1 <= i < n
  std::vector<YoungDiagram> path() const;             // empty diagram .. shape

  // swaps entries i and i+1; nullopt when the result is not a standard
  // tableau (i, i+1 share a row or column)
  std::optional<Tableau> swap_entries(int i) const;

  bool valid_for(const RootParams& p) const;  // every prefix admissible

  std::string to_string() const;  // rows of entries, e.g. "[1 3|2 4]"

  auto operator<=>(const Tableau&) const = default;

 private:
  YoungDiagram shape_;
  std::vector<int> rows_;
  std::vector<int> cols_;
};

// All n-box (k,ell)-diagrams in descending lexicographic order.
std::vector<YoungDiagram> enumerate_diagrams(int n, const RootParams& p);

// All (k,ell)-tableaux of shape lambda, ordered lexicographically by row
// word. Throws std::invalid_argument for an inadmissible shape.
std::vector<Tableau> enumerate_tableaux(const YoungDiagram& lambda, const RootParams& p);

// Layers 0..n of the restricted Young graph with exact path counts from the
// empty diagram. Immutable once built; shared by enumeration, sampling and
// the weight tables.
class YoungGraph {
 public:
  YoungGraph(int n, const RootParams& p);

  int depth() const { return n_; }
  const RootParams& params() const { return params_; }
  const std::vector<YoungDiagram>& layer(int i) const { return layers_.at(i); }
  const BigInt& path_count(const YoungDiagram& d) const;
  bool has(const YoungDiagram& d) const;

  // uniform over the (k,ell)-tableaux of shape lambda, by the reverse walk
  // weighted with exact path counts
  Tableau sample_tableau(const YoungDiagram& lambda, Rng& rng) const;

  std::string to_dot() const;

 private:
  int n_;
  RootParams params_;
  std::vector<std::vector<YoungDiagram>> layers_;
  std::vector<std::map<YoungDiagram, BigInt>> counts_;
};

// Markov weight s_lambda = [k]^{-n} prod [j-i+k]/[h(i,j)], evaluated at the
// root of unity with the matched zero factors cancelled in the limit.
double markov_weight(const YoungDiagram& lambda, const RootParams& p);

struct WeightEntry {
  YoungDiagram lambda;
  BigInt dim;
  double weight;
  double probability;  // s_lambda * d_lambda
};

// Weights, dimensions and probabilities for all of Lambda_n^{(k,ell)} in
// canonical order. Validates sum(prob) == 1 to 1e-10 on construction.
class MarkovWeightTable {
 public:
  MarkovWeightTable(int n, const RootParams& p);

  const std::vector<WeightEntry>& entries() const { return entries_; }
  int n() const { return n_; }
  const RootParams& params() const { return params_; }

  const YoungDiagram& sample_shape(Rng& rng) const;

  std::string to_csv() const;  // columns: lambda,dim,weight,probability

 private:
  int n_;
  RootParams params_;
  std::vector<WeightEntry> entries_;
};

}  // namespace braidval
