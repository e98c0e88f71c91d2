#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "braidval/braid.hpp"
#include "braidval/young.hpp"

namespace braidval {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Irreducible unitary representation pi_lambda^{(k,ell)} of B_n in the
// (k,ell)-tableau basis of shape lambda, with n the box count. Every
// generator image is stored as its partition of basis indices: fixed points
// carrying e_i-eigenvalue 0 or 1, and 2x2 pairs (t, s_i(t)) carrying the
// rank-one projection with entries a(d), sqrt(a(d)a(-d)). Generator unitaries
// are always assembled from this projection form, g = q - (1+q) e, which is
// manifestly unitary.
class IrrepBlock {
 public:
  IrrepBlock(YoungDiagram shape, const RootParams& params);

  const YoungDiagram& shape() const { return shape_; }
  const RootParams& params() const { return params_; }
  int strands() const { return n_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<Tableau>& basis() const { return basis_; }
  const Tableau& tableau(int idx) const { return basis_[idx]; }
  int index_of(const Tableau& t) const;             // -1 when absent
  int index_of(const std::vector<int>& rows) const;  // lookup by row word

  // Sparse partition of pi(e_i) for one generator. Each basis element
  // appears in exactly one cell. In a pair, a_coeff is a(d_i(t)) for the
  // lower index and the off-diagonal is sqrt(a_coeff (1 - a_coeff)).
  struct Pair {
    int lo;
    int hi;
    double a_coeff;
  };
  struct GeneratorAction {
    std::vector<Pair> pairs;
    std::vector<int> fixed_one;   // e|t> = |t>   (g eigenvalue -1)
    std::vector<int> fixed_zero;  // e|t> = 0     (g eigenvalue  q)
  };
  const GeneratorAction& action(int i) const { return actions_.at(i - 1); }

  // In-place sparse applications, each O(dimension)
  void apply_generator(int i, int sign, std::vector<Complex>& amps) const;
  void apply_projection(int i, std::vector<Complex>& amps) const;
  void apply_cupcap(int i, std::vector<Complex>& amps) const;  // [2] e_i, k = 2 only

  // word application, O(length * dimension); strand counts must match
  void apply_word(const BraidWord& b, std::vector<Complex>& amps) const;
  void apply_tangle(const TangleWord& w, std::vector<Complex>& amps) const;

  // single matrix element <bra| pi(b) |ket>
  Complex matrix_element(int bra, const BraidWord& b, int ket) const;

  // Dense images for oracle tests and the compiler; refuse blocks above the
  // cap to keep accidental blowups loud.
  Matrix projection_e(int i, int dense_cap = 4096) const;
  Matrix generator_unitary(int i, int sign, int dense_cap = 4096) const;
  Matrix cupcap_image(int i, int dense_cap = 4096) const;
  Matrix word_matrix(const BraidWord& b, int dense_cap = 4096) const;

  std::string matrix_csv(const Matrix& m) const;  // row,col,re,im triples

 private:
  YoungDiagram shape_;
  RootParams params_;
  int n_;
  std::vector<Tableau> basis_;
  std::map<std::vector<int>, int> index_;  // row word -> basis index
  std::vector<GeneratorAction> actions_;
};

struct RepVector {
  const IrrepBlock* block;
  std::vector<Complex> amps;

  explicit RepVector(const IrrepBlock& b) : block(&b), amps(b.dimension(), Complex(0, 0)) {}
  static RepVector basis_state(const IrrepBlock& b, int idx);

  double norm() const;
  Complex inner(const RepVector& other) const;  // <this|other>
};

RepVector apply_braid(const BraidWord& b, const IrrepBlock& block, const RepVector& v);

// Tableau concatenation t t': entries of t' shifted by |t| and placed to the
// right of the rectangular two-row tableau t. Realizes the embedding
// V_{[j,j]} (x) V_lambda -> V_{[j+lambda_1, j+lambda_2]}.
Tableau embed_tensor(const Tableau& t, const Tableau& tprime, const RootParams& p);

// the rectangular tableau t_{2p} with columns (2i-1, 2i)
Tableau plat_tableau(int two_p);

// Lazily built blocks shared across evaluations with the same parameters.
class BlockCache {
 public:
  explicit BlockCache(const RootParams& p) : params_(p) {}
  const IrrepBlock& block(const YoungDiagram& shape);
  const RootParams& params() const { return params_; }

 private:
  RootParams params_;
  std::map<YoungDiagram, IrrepBlock> blocks_;
};

}  // namespace braidval
