#include "braidval/rep.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace braidval {

IrrepBlock::IrrepBlock(YoungDiagram shape, const RootParams& params)
    : shape_(std::move(shape)), params_(params), n_(shape_.boxes()) {
  if (!shape_.admissible(params_))
    throw std::invalid_argument("IrrepBlock: shape is not (k,ell)-admissible");
  basis_ = enumerate_tableaux(shape_, params_);
  for (int i = 0; i < static_cast<int>(basis_.size()); ++i) index_[basis_[i].rows()] = i;

  actions_.resize(n_ >= 1 ? n_ - 1 : 0);
  for (int gi = 1; gi <= n_ - 1; ++gi) {
    GeneratorAction& act = actions_[gi - 1];
    for (int idx = 0; idx < dimension(); ++idx) {
      const Tableau& t = basis_[idx];
      if (t.row(gi) == t.row(gi + 1)) {
        act.fixed_zero.push_back(idx);
        continue;
      }
      if (t.col(gi) == t.col(gi + 1)) {
        act.fixed_one.push_back(idx);
        continue;
      }
      const auto partner = t.swap_entries(gi);
      const int pidx = partner->valid_for(params_) ? index_.at(partner->rows()) : -1;
      if (pidx >= 0) {
        if (pidx > idx) act.pairs.push_back({idx, pidx, a_coefficient(t.axial_distance(gi), params_)});
        continue;
      }
      // Partner tableau left the restricted graph. The projection block
      // degenerates there: a(d) is exactly 0 or 1 at the root of unity, so t
      // stays a fixed point with that eigenvalue.
      const double a = a_coefficient(t.axial_distance(gi), params_);
      if (std::abs(a) < 1e-9)
        act.fixed_zero.push_back(idx);
      else if (std::abs(a - 1.0) < 1e-9)
        act.fixed_one.push_back(idx);
      else
        throw std::logic_error("IrrepBlock: boundary tableau with nondegenerate coefficient");
    }
  }
}

int IrrepBlock::index_of(const Tableau& t) const { return index_of(t.rows()); }

int IrrepBlock::index_of(const std::vector<int>& rows) const {
  auto it = index_.find(rows);
  return it == index_.end() ? -1 : it->second;
}

void IrrepBlock::apply_generator(int i, int sign, std::vector<Complex>& amps) const {
  const GeneratorAction& act = action(i);
  const Complex q = params_.q;
  const Complex qg = sign > 0 ? q : std::conj(q);
  for (int idx : act.fixed_one) amps[idx] *= -1.0;
  for (int idx : act.fixed_zero) amps[idx] *= qg;
  const Complex one_plus_q = 1.0 + q;
  for (const Pair& pr : act.pairs) {
    const double a = pr.a_coeff;
    const double b = std::sqrt(std::max(0.0, a * (1.0 - a)));
    Complex g00 = q - one_plus_q * a;
    Complex g01 = -one_plus_q * b;
    Complex g11 = q - one_plus_q * (1.0 - a);
    if (sign < 0) {  // adjoint of the symmetric block
      g00 = std::conj(g00);
      g01 = std::conj(g01);
      g11 = std::conj(g11);
    }
    const Complex lo = amps[pr.lo], hi = amps[pr.hi];
    amps[pr.lo] = g00 * lo + g01 * hi;
    amps[pr.hi] = g01 * lo + g11 * hi;
  }
}

void IrrepBlock::apply_projection(int i, std::vector<Complex>& amps) const {
  const GeneratorAction& act = action(i);
  for (int idx : act.fixed_zero) amps[idx] = 0.0;
  for (const Pair& pr : act.pairs) {
    const double a = pr.a_coeff;
    const double b = std::sqrt(std::max(0.0, a * (1.0 - a)));
    const Complex lo = amps[pr.lo], hi = amps[pr.hi];
    amps[pr.lo] = a * lo + b * hi;
    amps[pr.hi] = b * lo + (1.0 - a) * hi;
  }
}

void IrrepBlock::apply_cupcap(int i, std::vector<Complex>& amps) const {
  if (params_.k != 2)
    throw std::invalid_argument("cup-cap images require k = 2 (Temperley-Lieb quotient)");
  apply_projection(i, amps);
  for (Complex& a : amps) a *= params_.two_q;
}

void IrrepBlock::apply_word(const BraidWord& b, std::vector<Complex>& amps) const {
  if (b.strands != n_)
    throw std::invalid_argument("apply_word: braid strand count does not match box count");
  // letters multiply left to right, so a column vector sees them reversed
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
    apply_generator(it->index, it->sign, amps);
}

void IrrepBlock::apply_tangle(const TangleWord& w, std::vector<Complex>& amps) const {
  for (auto it = w.cupcap_indices.rbegin(); it != w.cupcap_indices.rend(); ++it)
    apply_cupcap(*it, amps);
  apply_word(w.braid_part, amps);
}

Complex IrrepBlock::matrix_element(int bra, const BraidWord& b, int ket) const {
  std::vector<Complex> amps(dimension(), Complex(0, 0));
  amps[ket] = 1.0;
  apply_word(b, amps);
  return amps[bra];
}

namespace {
void check_cap(int dim, int cap) {
  if (dim > cap) throw std::length_error("dense matrix request above configured cap");
}
}  // namespace

Matrix IrrepBlock::projection_e(int i, int dense_cap) const {
  check_cap(dimension(), dense_cap);
  Matrix m = Matrix::Zero(dimension(), dimension());
  const GeneratorAction& act = action(i);
  for (int idx : act.fixed_one) m(idx, idx) = 1.0;
  for (const Pair& pr : act.pairs) {
    const double a = pr.a_coeff;
    const double b = std::sqrt(std::max(0.0, a * (1.0 - a)));
    m(pr.lo, pr.lo) = a;
    m(pr.lo, pr.hi) = b;
    m(pr.hi, pr.lo) = b;
    m(pr.hi, pr.hi) = 1.0 - a;
  }
  return m;
}

Matrix IrrepBlock::generator_unitary(int i, int sign, int dense_cap) const {
  check_cap(dimension(), dense_cap);
  Matrix m = Matrix::Identity(dimension(), dimension());
  for (int col = 0; col < dimension(); ++col) {
    std::vector<Complex> amps(dimension(), Complex(0, 0));
    amps[col] = 1.0;
    apply_generator(i, sign, amps);
    for (int row = 0; row < dimension(); ++row) m(row, col) = amps[row];
  }
  return m;
}

Matrix IrrepBlock::cupcap_image(int i, int dense_cap) const {
  check_cap(dimension(), dense_cap);
  if (params_.k != 2)
    throw std::invalid_argument("cup-cap images require k = 2 (Temperley-Lieb quotient)");
  return params_.two_q * projection_e(i, dense_cap);
}

Matrix IrrepBlock::word_matrix(const BraidWord& b, int dense_cap) const {
  check_cap(dimension(), dense_cap);
  Matrix m(dimension(), dimension());
  for (int col = 0; col < dimension(); ++col) {
    std::vector<Complex> amps(dimension(), Complex(0, 0));
    amps[col] = 1.0;
    apply_word(b, amps);
    for (int row = 0; row < dimension(); ++row) m(row, col) = amps[row];
  }
  return m;
}

std::string IrrepBlock::matrix_csv(const Matrix& m) const {
  std::ostringstream os;
  os.precision(15);
  os << "row,col,re,im\n";
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m(r, c) != Complex(0, 0))
        os << r << ',' << c << ',' << m(r, c).real() << ',' << m(r, c).imag() << '\n';
  return os.str();
}

RepVector RepVector::basis_state(const IrrepBlock& b, int idx) {
  RepVector v(b);
  v.amps.at(idx) = 1.0;
  return v;
}

double RepVector::norm() const {
  double s = 0;
  for (const Complex& a : amps) s += std::norm(a);
  return std::sqrt(s);
}

Complex RepVector::inner(const RepVector& other) const {
  Complex s = 0;
  for (size_t i = 0; i < amps.size(); ++i) s += std::conj(amps[i]) * other.amps[i];
  return s;
}

RepVector apply_braid(const BraidWord& b, const IrrepBlock& block, const RepVector& v) {
  RepVector out = v;
  out.block = &block;
  block.apply_word(b, out.amps);
  return out;
}

Tableau embed_tensor(const Tableau& t, const Tableau& tprime, const RootParams& p) {
  const YoungDiagram& s = t.shape();
  if (s.rows() != 2 || s.part(1) != s.part(2))
    throw std::invalid_argument("embed_tensor: left factor must have rectangular two-row shape");
  if (tprime.shape().rows() > 2)
    throw std::invalid_argument("embed_tensor: right factor must have at most two rows");
  std::vector<int> rows = t.rows();
  rows.insert(rows.end(), tprime.rows().begin(), tprime.rows().end());
  // pad the right factor's single-row shapes into row 1 as-is; rows are
  // already 1-based and compatible
  YoungDiagram shape({s.part(1) + tprime.shape().part(1), s.part(2) + tprime.shape().part(2)});
  Tableau out(shape, std::move(rows));
  if (!out.valid_for(p)) throw std::invalid_argument("embed_tensor: inadmissible result");
  return out;
}

Tableau plat_tableau(int two_p) {
  if (two_p < 2 || two_p % 2 != 0)
    throw std::invalid_argument("plat_tableau: need a positive even box count");
  std::vector<int> rows(two_p);
  for (int i = 0; i < two_p; ++i) rows[i] = (i % 2 == 0) ? 1 : 2;
  return Tableau(YoungDiagram({two_p / 2, two_p / 2}), std::move(rows));
}

const IrrepBlock& BlockCache::block(const YoungDiagram& shape) {
  auto it = blocks_.find(shape);
  if (it == blocks_.end()) it = blocks_.emplace(shape, IrrepBlock(shape, params_)).first;
  return it->second;
}

}  // namespace braidval
