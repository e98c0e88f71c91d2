#include "braidval/young.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace braidval {

namespace {
constexpr double kPi = std::numbers::pi;
}

double quantum_integer(long d, int ell) {
  if (ell < 3) throw std::invalid_argument("quantum_integer: ell must be >= 3");
  // reduce mod 2*ell first so large |d| stays accurate
  long m = d % (2L * ell);
  return std::sin(kPi * static_cast<double>(m) / ell) / std::sin(kPi / ell);
}

RootParams::RootParams(int k_, int ell_) : k(k_), ell(ell_) {
  if (k < 2 || ell <= k) throw std::invalid_argument("RootParams: need 2 <= k < ell");
  q = std::polar(1.0, 2.0 * kPi / ell);
  q_half = std::polar(1.0, kPi / ell);
  two_q = 2.0 * std::cos(kPi / ell);
  tau = 1.0 / (two_q * two_q);
}

Complex RootParams::q_pow_half(long halves) const {
  long m = halves % (2L * ell);
  return std::polar(1.0, kPi * static_cast<double>(m) / ell);
}

double a_coefficient(long d, const RootParams& p) {
  const double qd = quantum_integer(d, p.ell);
  if (std::abs(qd) < 1e-12)
    throw std::domain_error("a_coefficient: degenerate axial distance [d] = 0");
  return quantum_integer(d + 1, p.ell) / (p.two_q * qd);
}

YoungDiagram::YoungDiagram(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
      throw std::invalid_argument("YoungDiagram: parts must be weakly decreasing positives");
  }
}

int YoungDiagram::boxes() const {
  int n = 0;
  for (int p : parts) n += p;
  return n;
}

int YoungDiagram::part(int i) const {
  return (i >= 1 && i <= rows()) ? parts[i - 1] : 0;
}

bool YoungDiagram::admissible(const RootParams& p) const {
  return rows() <= p.k && level(p.k) <= p.ell - p.k;
}

bool YoungDiagram::contains(const YoungDiagram& mu) const {
  if (mu.rows() > rows()) return false;
  for (int i = 1; i <= mu.rows(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

YoungDiagram YoungDiagram::with_box(int row) const {
  std::vector<int> p = parts;
  if (row == rows() + 1)
    p.push_back(1);
  else if (row >= 1 && row <= rows())
    p[row - 1] += 1;
  else
    throw std::invalid_argument("with_box: row out of range");
  return YoungDiagram(std::move(p));
}

YoungDiagram YoungDiagram::without_box(int row) const {
  if (row < 1 || row > rows()) throw std::invalid_argument("without_box: row out of range");
  std::vector<int> p = parts;
  p[row - 1] -= 1;
  return YoungDiagram(std::move(p));
}

int YoungDiagram::hook_length(int row, int col) const {
  const int arm = part(row) - col;
  int leg = 0;
  for (int i = row + 1; i <= rows(); ++i)
    if (part(i) >= col) ++leg;
  return arm + leg + 1;
}

std::string YoungDiagram::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  s += ']';
  return s;
}

Tableau::Tableau(YoungDiagram shape, std::vector<int> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.boxes())
    throw std::invalid_argument("Tableau: row word length does not match shape");
  std::vector<int> fill(shape_.rows() + 2, 0);
  cols_.resize(rows_.size());
  for (size_t i = 0; i < rows_.size(); ++i) {
    const int r = rows_[i];
    if (r < 1 || r > shape_.rows())
      throw std::invalid_argument("Tableau: row index out of range");
    if (r > 1 && fill[r] >= fill[r - 1])
      throw std::invalid_argument("Tableau: not a standard filling");
    cols_[i] = ++fill[r];
  }
  for (int r = 1; r <= shape_.rows(); ++r)
    if (fill[r] != shape_.part(r))
      throw std::invalid_argument("Tableau: filling does not realize shape");
}

Tableau Tableau::from_path(const std::vector<YoungDiagram>& path) {
  if (path.empty() || path.front() != YoungDiagram())
    throw std::invalid_argument("from_path: path must start at the empty diagram");
  std::vector<int> rows;
  for (size_t i = 1; i < path.size(); ++i) {
    int grown = 0, at = 0;
    const int rmax = std::max(path[i - 1].rows(), path[i].rows());
    for (int r = 1; r <= rmax; ++r) {
      const int d = path[i].part(r) - path[i - 1].part(r);
      if (d == 1) {
        ++grown;
        at = r;
      } else if (d != 0) {
        grown = -1;
        break;
      }
    }
    if (grown != 1) throw std::invalid_argument("from_path: consecutive diagrams not one box apart");
    rows.push_back(at);
  }
  return Tableau(path.back(), std::move(rows));
}

long Tableau::axial_distance(int i) const {
  // walk distance from i to i+1; leftward and downward steps count positively
  return static_cast<long>(col(i)) - col(i + 1) - (row(i) - row(i + 1));
}

std::vector<YoungDiagram> Tableau::path() const {
  std::vector<YoungDiagram> out;
  out.reserve(rows_.size() + 1);
  YoungDiagram cur;
  out.push_back(cur);
  for (int r : rows_) {
    cur = cur.with_box(r);
    out.push_back(cur);
  }
  return out;
}

std::optional<Tableau> Tableau::swap_entries(int i) const {
  if (i < 1 || i >= size()) throw std::invalid_argument("swap_entries: index out of range");
  if (row(i) == row(i + 1) || col(i) == col(i + 1)) return std::nullopt;
  std::vector<int> r = rows_;
  std::swap(r[i - 1], r[i]);
  return Tableau(shape_, std::move(r));
}

bool Tableau::valid_for(const RootParams& p) const {
  YoungDiagram cur;
  for (int r : rows_) {
    cur = cur.with_box(r);
    if (!cur.admissible(p)) return false;
  }
  return true;
}

std::string Tableau::to_string() const {
  std::vector<std::vector<int>> grid(shape_.rows());
  for (int r = 1; r <= shape_.rows(); ++r) grid[r - 1].resize(shape_.part(r));
  for (int i = 1; i <= size(); ++i) grid[row(i) - 1][col(i) - 1] = i;
  std::string s = "[";
  for (size_t r = 0; r < grid.size(); ++r) {
    if (r) s += '|';
    for (size_t c = 0; c < grid[r].size(); ++c) {
      if (c) s += ' ';
      s += std::to_string(grid[r][c]);
    }
  }
  s += ']';
  return s;
}

namespace {

void gen_partitions(int remaining, int max_part, int rows_left, std::vector<int>& cur,
                    const RootParams& p, std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    YoungDiagram d(cur);
    if (d.admissible(p)) out.push_back(std::move(d));
    return;
  }
  if (rows_left == 0) return;
  // descending first part keeps the output in descending lexicographic order
  for (int first = std::min(remaining, max_part); first >= 1; --first) {
    // remaining boxes must fit under this part in the rows left
    if (static_cast<long>(first) * rows_left < remaining) return;
    cur.push_back(first);
    gen_partitions(remaining - first, first, rows_left - 1, cur, p, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> enumerate_diagrams(int n, const RootParams& p) {
  if (n < 0) throw std::invalid_argument("enumerate_diagrams: n must be >= 0");
  std::vector<YoungDiagram> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  gen_partitions(n, n, p.k, cur, p, out);
  return out;
}

namespace {

void gen_tableaux(const YoungDiagram& target, const RootParams& p, YoungDiagram& cur,
                  std::vector<int>& rows, std::vector<Tableau>& out) {
  if (static_cast<int>(rows.size()) == target.boxes()) {
    out.emplace_back(target, rows);
    return;
  }
  const int rmax = std::min(p.k, target.rows());
  for (int r = 1; r <= rmax; ++r) {
    if (cur.part(r) >= target.part(r)) continue;
    if (r > 1 && cur.part(r - 1) <= cur.part(r)) continue;
    YoungDiagram next = cur.with_box(r);
    if (!next.admissible(p)) continue;
    rows.push_back(r);
    std::swap(cur, next);
    gen_tableaux(target, p, cur, rows, out);
    std::swap(cur, next);
    rows.pop_back();
  }
}

}  // namespace

std::vector<Tableau> enumerate_tableaux(const YoungDiagram& lambda, const RootParams& p) {
  if (!lambda.admissible(p))
    throw std::invalid_argument("enumerate_tableaux: shape is not (k,ell)-admissible");
  std::vector<Tableau> out;
  YoungDiagram cur;
  std::vector<int> rows;
  gen_tableaux(lambda, p, cur, rows, out);
  return out;
}

YoungGraph::YoungGraph(int n, const RootParams& p) : n_(n), params_(p) {
  layers_.resize(n + 1);
  counts_.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    layers_[i] = enumerate_diagrams(i, p);
    for (const YoungDiagram& d : layers_[i]) {
      if (i == 0) {
        counts_[0][d] = 1;
        continue;
      }
      BigInt total = 0;
      for (int r = 1; r <= d.rows(); ++r) {
        if (d.part(r) == d.part(r + 1)) continue;  // box not removable
        auto it = counts_[i - 1].find(d.without_box(r));
        if (it != counts_[i - 1].end()) total += it->second;
      }
      counts_[i][d] = total;
    }
  }
}

const BigInt& YoungGraph::path_count(const YoungDiagram& d) const {
  const int n = d.boxes();
  if (n > n_) throw std::invalid_argument("path_count: diagram beyond table depth");
  auto it = counts_[n].find(d);
  if (it == counts_[n].end()) {
    static const BigInt zero = 0;
    return zero;
  }
  return it->second;
}

bool YoungGraph::has(const YoungDiagram& d) const {
  return d.boxes() <= n_ && counts_[d.boxes()].count(d) > 0;
}

Tableau YoungGraph::sample_tableau(const YoungDiagram& lambda, Rng& rng) const {
  if (!has(lambda) || path_count(lambda) == 0)
    throw std::invalid_argument("sample_tableau: shape unreachable in this graph");
  std::vector<YoungDiagram> rev;
  YoungDiagram cur = lambda;
  rev.push_back(cur);
  for (int i = lambda.boxes(); i >= 1; --i) {
    // predecessor chosen with probability proportional to its path count
    std::vector<std::pair<YoungDiagram, BigInt>> preds;
    BigInt total = 0;
    for (int r = 1; r <= cur.rows(); ++r) {
      if (cur.part(r) == cur.part(r + 1)) continue;
      YoungDiagram prev = cur.without_box(r);
      auto it = counts_[i - 1].find(prev);
      if (it == counts_[i - 1].end() || it->second == 0) continue;
      total += it->second;
      preds.emplace_back(std::move(prev), it->second);
    }
    BigInt u = rng.below_big(total);
    for (auto& [prev, cnt] : preds) {
      if (u < cnt) {
        cur = prev;
        break;
      }
      u -= cnt;
    }
    rev.push_back(cur);
  }
  std::reverse(rev.begin(), rev.end());
  return Tableau::from_path(rev);
}

std::string YoungGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph young {\n  rankdir=TB;\n";
  for (int i = 0; i <= n_; ++i) {
    for (const YoungDiagram& d : layers_[i]) {
      os << "  \"" << i << ':' << d.to_string() << "\" [label=\"" << d.to_string()
         << "\\n" << counts_[i].at(d).str() << "\"];\n";
      if (i == 0) continue;
      for (int r = 1; r <= d.rows(); ++r) {
        if (d.part(r) == d.part(r + 1)) continue;
        YoungDiagram prev = d.without_box(r);
        if (counts_[i - 1].count(prev))
          os << "  \"" << (i - 1) << ':' << prev.to_string() << "\" -> \"" << i << ':'
             << d.to_string() << "\";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

double markov_weight(const YoungDiagram& lambda, const RootParams& p) {
  if (!lambda.admissible(p))
    throw std::invalid_argument("markov_weight: shape is not (k,ell)-admissible");
  const int n = lambda.boxes();
  // At the root of unity individual factors [x] with ell | x vanish; they
  // occur in matched numerator/denominator pairs for admissible shapes, and
  // the limit of each pair [a*ell]/[b*ell] along the unit circle is
  // (-1)^{a-b} a/b.
  double value = 1.0;
  double zero_num = 1.0, zero_den = 1.0;
  int zeros_num = 0, zeros_den = 0;
  for (int i = 1; i <= lambda.rows(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      const long content = static_cast<long>(j) - i + p.k;
      if (content % p.ell == 0) {
        const long a = content / p.ell;
        zero_num *= (a % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(a);
        ++zeros_num;
      } else {
        value *= quantum_integer(content, p.ell);
      }
      const long hook = lambda.hook_length(i, j);
      if (hook % p.ell == 0) {
        const long b = hook / p.ell;
        zero_den *= (b % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(b);
        ++zeros_den;
      } else {
        value /= quantum_integer(hook, p.ell);
      }
    }
  }
  if (zeros_num != zeros_den)
    throw std::domain_error("markov_weight: unmatched vanishing factors for " + lambda.to_string());
  value *= zero_num / zero_den;
  value /= std::pow(quantum_integer(p.k, p.ell), n);
  if (!(value > 0))
    throw std::domain_error("markov_weight: nonpositive weight for " + lambda.to_string());
  return value;
}

MarkovWeightTable::MarkovWeightTable(int n, const RootParams& p) : n_(n), params_(p) {
  YoungGraph graph(n, p);
  double total = 0.0;
  for (const YoungDiagram& d : graph.layer(n)) {
    const BigInt& dim = graph.path_count(d);
    if (dim == 0) continue;
    const double w = markov_weight(d, p);
    const double prob = w * dim.convert_to<double>();
    entries_.push_back({d, dim, w, prob});
    total += prob;
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw std::domain_error("MarkovWeightTable: weights and dimensions do not sum to 1");
}

const YoungDiagram& MarkovWeightTable::sample_shape(Rng& rng) const {
  double u = rng.uniform01();
  for (const WeightEntry& e : entries_) {
    if (u < e.probability) return e.lambda;
    u -= e.probability;
  }
  return entries_.back().lambda;
}

std::string MarkovWeightTable::to_csv() const {
  std::ostringstream os;
  os << "lambda,dim,weight,probability\n";
  os.precision(15);
  for (const WeightEntry& e : entries_)
    os << "\"" << e.lambda.to_string() << "\"," << e.dim.str() << ',' << e.weight << ','
       << e.probability << '\n';
  return os.str();
}

}  // namespace braidval
