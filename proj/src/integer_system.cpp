#include "gspline/integer_system.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace gspline {

namespace {

using Big = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<Big>>;

void swap_columns(BigMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

// col_j -= q * col_k
void subtract_column(BigMatrix& m, std::size_t j, std::size_t k, const Big& q) {
  for (auto& row : m) row[j] -= q * row[k];
}

void negate_column(BigMatrix& m, std::size_t k) {
  for (auto& row : m) row[k] = -row[k];
}

// Nearest integer to num / den (den > 0).
Big round_div(const Big& num, const Big& den) {
  Big twice = 2 * num + den;
  Big q = twice / (2 * den);
  if (twice < 0 && q * 2 * den != twice) q -= 1;
  return q;
}

// Integral LLL (delta = 3/4) on linearly independent row vectors, followed
// by nearest-plane size reduction of `target` against the reduced basis.
// All arithmetic is exact on integers via the d_i / lambda_ij recurrences.
class IntegralLll {
public:
  explicit IntegralLll(std::vector<std::vector<Big>> basis) : b_(std::move(basis)) {}

  const std::vector<std::vector<Big>>& basis() const { return b_; }

  void reduce() {
    const std::size_t n = b_.size();
    if (n == 0) return;
    lambda_.assign(n, std::vector<Big>(n, 0));
    d_.assign(n + 1, 0);
    d_[0] = 1;
    d_[1] = inner(b_[0], b_[0]);
    std::size_t k = 1, kmax = 0;
    while (k < n) {
      if (k > kmax) {
        kmax = k;
        gram_schmidt_row(b_[k], k, lambda_[k], d_[k + 1]);
      }
      red(k, k - 1);
      // Lovasz condition with delta = 3/4, indices shifted: d_[i+1] is d_i.
      if (4 * d_[k + 1] * d_[k - 1] < 3 * d_[k] * d_[k] - 4 * lambda_[k][k - 1] * lambda_[k][k - 1]) {
        swap(k, kmax);
        k = std::max<std::size_t>(1, k - 1);
      } else {
        for (std::size_t l = k - 1; l-- > 0;) red(k, l);
        ++k;
      }
    }
  }

  /// target - sum q_j b_j with the lambda-coefficients of the result small.
  std::vector<Big> size_reduce(std::vector<Big> target) const {
    const std::size_t n = b_.size();
    if (n == 0) return target;
    std::vector<Big> lam(n, 0);
    Big dummy;
    gram_schmidt_row(target, n, lam, dummy);
    for (std::size_t l = n; l-- > 0;) {
      if (2 * abs(lam[l]) <= d_[l + 1]) continue;
      const Big q = round_div(lam[l], d_[l + 1]);
      for (std::size_t r = 0; r < target.size(); ++r) target[r] -= q * b_[l][r];
      lam[l] -= q * d_[l + 1];
      for (std::size_t i = 0; i < l; ++i) lam[i] -= q * lambda_[l][i];
    }
    return target;
  }

private:
  static Big inner(const std::vector<Big>& a, const std::vector<Big>& b) {
    Big acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
  }

  // lambda-row of v against b_[0..k) and, when v is b_[k], its d.
  void gram_schmidt_row(const std::vector<Big>& v, std::size_t k, std::vector<Big>& lam, Big& dk) const {
    for (std::size_t j = 0; j <= k; ++j) {
      Big u = inner(v, j < k ? b_[j] : v);
      for (std::size_t i = 0; i < j; ++i) u = (d_[i + 1] * u - lam[i] * (j < k ? lambda_[j][i] : lam[i])) / d_[i];
      if (j < k) lam[j] = u;
      else dk = u;
      if (j == k) break;
    }
  }

  void red(std::size_t k, std::size_t l) {
    if (2 * abs(lambda_[k][l]) <= d_[l + 1]) return;
    const Big q = round_div(lambda_[k][l], d_[l + 1]);
    for (std::size_t r = 0; r < b_[k].size(); ++r) b_[k][r] -= q * b_[l][r];
    lambda_[k][l] -= q * d_[l + 1];
    for (std::size_t i = 0; i < l; ++i) lambda_[k][i] -= q * lambda_[l][i];
  }

  void swap(std::size_t k, std::size_t kmax) {
    std::swap(b_[k], b_[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lambda_[k][j], lambda_[k - 1][j]);
    const Big lam = lambda_[k][k - 1];
    const Big bnew = (d_[k - 1] * d_[k + 1] + lam * lam) / d_[k];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Big t = lambda_[i][k];
      lambda_[i][k] = (d_[k + 1] * lambda_[i][k - 1] - lam * t) / d_[k];
      lambda_[i][k - 1] = (bnew * t + lam * lambda_[i][k]) / d_[k + 1];
    }
    d_[k] = bnew;
  }

  std::vector<std::vector<Big>> b_;
  std::vector<std::vector<Big>> lambda_;
  std::vector<Big> d_;
};

}  // namespace

std::optional<std::vector<Int>> solve_integer_system(const IntMatrix& a, const std::vector<Int>& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw Error(ErrorCode::InvalidRing, "system right-hand side has wrong length");
  const std::size_t cols = rows == 0 ? 0 : a.front().size();

  BigMatrix h(rows, std::vector<Big>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) h[i][j] = a[i][j];
  BigMatrix u(cols, std::vector<Big>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1;

  // pivot_col[i] = column holding the pivot of row i, or cols if none.
  std::vector<std::size_t> pivot_col(rows, cols);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < rows && rank < cols; ++i) {
    // Euclid across the row: repeatedly move the smallest nonzero entry to the
    // pivot position and reduce the others by it.
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = rank; j < cols; ++j)
        if (h[i][j] != 0 && (best == cols || abs(h[i][j]) < abs(h[i][best]))) best = j;
      if (best == cols) break;
      if (best != rank) {
        swap_columns(h, rank, best);
        swap_columns(u, rank, best);
      }
      bool done = true;
      for (std::size_t j = rank + 1; j < cols; ++j) {
        if (h[i][j] == 0) continue;
        const Big q = h[i][j] / h[i][rank];
        subtract_column(h, j, rank, q);
        subtract_column(u, j, rank, q);
        if (h[i][j] != 0) done = false;
      }
      if (done) break;
    }
    if (h[i][rank] == 0) continue;
    if (h[i][rank] < 0) {
      negate_column(h, rank);
      negate_column(u, rank);
    }
    // Reduce entries left of the pivot to keep numbers small.
    for (std::size_t j = 0; j < rank; ++j) {
      const Big f = h[i][j] / h[i][rank];
      if (f == 0) continue;
      subtract_column(h, j, rank, f);
      subtract_column(u, j, rank, f);
    }
    pivot_col[i] = rank++;
  }

  std::vector<Big> y(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    Big acc = b[i];
    const std::size_t limit = pivot_col[i] == cols ? rank : pivot_col[i];
    for (std::size_t j = 0; j < limit; ++j) acc -= h[i][j] * y[j];
    if (pivot_col[i] == cols) {
      if (acc != 0) return std::nullopt;
      continue;
    }
    const Big& pivot = h[i][pivot_col[i]];
    if (acc % pivot != 0) return std::nullopt;
    y[pivot_col[i]] = acc / pivot;
  }

  std::vector<Big> sol(cols, 0);
  for (std::size_t r = 0; r < cols; ++r)
    for (std::size_t j = 0; j < rank; ++j) sol[r] += u[r][j] * y[j];

  // Columns rank.. of U span the integer kernel of A: LLL-reduce them and
  // pull the particular solution towards the origin.
  if (rank < cols) {
    std::vector<std::vector<Big>> kernel;
    for (std::size_t k = rank; k < cols; ++k) {
      std::vector<Big> col(cols);
      for (std::size_t r = 0; r < cols; ++r) col[r] = u[r][k];
      kernel.push_back(std::move(col));
    }
    IntegralLll lll(std::move(kernel));
    lll.reduce();
    sol = lll.size_reduce(std::move(sol));
  }

  std::vector<Int> c(cols, 0);
  for (std::size_t r = 0; r < cols; ++r) {
    const Big& v = sol[r];
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
      throw Error(ErrorCode::Overflow, "integer system solution exceeds 64 bits");
    c[r] = static_cast<Int>(v);
  }
  return c;
}

}  // namespace gspline
