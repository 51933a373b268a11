#include "schurlab/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace schurlab {

Real to_real(const Rat& r) {
  return Real(boost::multiprecision::numerator(r)) /
         Real(boost::multiprecision::denominator(r));
}

double to_double(const Rat& r) { return static_cast<double>(to_real(r)); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::k() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  return (i >= 0 && i < rows()) ? parts_[i] : 0;
}

Partition Partition::transpose() const {
  std::vector<int> t;
  if (!parts_.empty()) {
    t.assign(parts_[0], 0);
    for (int j = 0; j < parts_[0]; ++j)
      for (int p : parts_)
        if (p >= j + 1) ++t[j];
  }
  return Partition(std::move(t));
}

Int Partition::content_sum() const {
  Int s = 0;
  for (int i = 1; i <= rows(); ++i)
    for (int j = 1; j <= parts_[i - 1]; ++j) s += j - i;
  return s;
}

int Partition::hook(int row, int col) const {
  if (row < 1 || row > rows() || col < 1 || col > parts_[row - 1])
    throw std::out_of_range("cell not in partition");
  const Partition t = transpose();
  return parts_[row - 1] - col + t.parts()[col - 1] - row + 1;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void enumerate_rec(int remaining, int max_part, int rows_left,
                   std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (rows_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    enumerate_rec(remaining - p, p, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int k, int max_rows) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate_rec(k, k == 0 ? 1 : k, max_rows < 0 ? k : max_rows, cur, out);
  if (k == 0) out.assign(1, Partition());
  return out;
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int dim_sym_irrep(const Partition& lambda) {
  const int k = lambda.k();
  Int hooks = 1;
  const Partition t = lambda.transpose();
  for (int i = 1; i <= lambda.rows(); ++i)
    for (int j = 1; j <= lambda.parts()[i - 1]; ++j)
      hooks *= lambda.parts()[i - 1] - j + t.parts()[j - 1] - i + 1;
  Int num = factorial(k);
  if (num % hooks != 0) throw std::logic_error("hook product does not divide k!");
  return num / hooks;
}

Int dim_unitary_irrep(const Partition& lambda, int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (lambda.rows() > d) return 0;
  // dim P_lambda * prod (d + j - i) / k!; the quotient is an integer.
  Int num = dim_sym_irrep(lambda);
  for (int i = 1; i <= lambda.rows(); ++i)
    for (int j = 1; j <= lambda.parts()[i - 1]; ++j) num *= d + j - i;
  Int den = factorial(lambda.k());
  if (num % den != 0) throw std::logic_error("dim_unitary_irrep: non-integral result");
  return num / den;
}

namespace {

Int count_syt_rec(std::vector<int>& filled, const Partition& lambda) {
  // filled[i] = number of entries already placed in row i
  bool done = true;
  Int total = 0;
  for (int i = 0; i < lambda.rows(); ++i)
    if (filled[i] < lambda.parts()[i]) done = false;
  if (done) return 1;
  for (int i = 0; i < lambda.rows(); ++i) {
    if (filled[i] >= lambda.parts()[i]) continue;
    if (i > 0 && filled[i - 1] <= filled[i]) continue;  // column condition
    ++filled[i];
    total += count_syt_rec(filled, lambda);
    --filled[i];
  }
  return total;
}

}  // namespace

Int count_syt_bruteforce(const Partition& lambda) {
  if (lambda.k() > 10)
    throw std::invalid_argument("count_syt_bruteforce: k > 10");
  std::vector<int> filled(lambda.rows(), 0);
  return count_syt_rec(filled, lambda);
}

}  // namespace schurlab
