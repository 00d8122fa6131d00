#include "critgroup/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

#include "critgroup/errors.hpp"

namespace critgroup {

namespace {

// Shared SNF driver; transforms accumulate only when `track` is set.
class SmithReducer {
 public:
  SmithReducer(const IntegerMatrix& a, bool track)
      : d_(a), rows_(a.rows()), cols_(a.cols()), track_(track) {
    if (track_) {
      left_ = IntegerMatrix::identity(rows_);
      right_ = IntegerMatrix::identity(cols_);
      right_inverse_ = IntegerMatrix::identity(cols_);
    }
  }

  void run() {
    const std::size_t limit = std::min(rows_, cols_);
    for (std::size_t t = 0; t < limit; ++t) {
      if (!reduce_at(t)) break;
      factors_.push_back(d_(t, t));
    }
  }

  std::vector<Integer>& factors() { return factors_; }
  IntegerMatrix& left() { return left_; }
  IntegerMatrix& right() { return right_; }
  IntegerMatrix& right_inverse() { return right_inverse_; }

 private:
  bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    Integer best;
    for (std::size_t r = t; r < rows_; ++r)
      for (std::size_t c = t; c < cols_; ++c) {
        const Integer& x = d_(r, c);
        if (sgn(x) == 0) continue;
        if (!found || mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) < 0) {
          best = x;
          pr = r;
          pc = c;
          found = true;
        }
      }
    return found;
  }

  void row_swap(std::size_t a, std::size_t b) {
    d_.swap_rows(a, b);
    if (track_) left_.swap_rows(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    d_.swap_cols(a, b);
    if (track_) {
      right_.swap_cols(a, b);
      right_inverse_.swap_rows(a, b);
    }
  }
  void row_add(std::size_t dst, std::size_t src, const Integer& q) {
    d_.add_row_multiple(dst, src, q);
    if (track_) left_.add_row_multiple(dst, src, q);
  }
  void col_add(std::size_t dst, std::size_t src, const Integer& q) {
    d_.add_col_multiple(dst, src, q);
    if (track_) {
      right_.add_col_multiple(dst, src, q);
      right_inverse_.add_row_multiple(src, dst, -q);
    }
  }

  // Brings d_(t, t) to the next invariant factor. Returns false when the
  // trailing block is zero.
  bool reduce_at(std::size_t t) {
    Integer q;
    for (;;) {
      std::size_t pr = 0, pc = 0;
      if (!find_pivot(t, pr, pc)) return false;
      row_swap(t, pr);
      col_swap(t, pc);
      const Integer pivot = d_(t, t);

      bool residue = false;
      for (std::size_t r = t + 1; r < rows_; ++r) {
        if (sgn(d_(r, t)) == 0) continue;
        q = d_(r, t) / pivot;
        row_add(r, t, -q);
        if (sgn(d_(r, t)) != 0) residue = true;
      }
      for (std::size_t c = t + 1; c < cols_; ++c) {
        if (sgn(d_(t, c)) == 0) continue;
        q = d_(t, c) / pivot;
        col_add(c, t, -q);
        if (sgn(d_(t, c)) != 0) residue = true;
      }
      if (residue) continue;  // a smaller entry now exists; re-pivot

      // Divisibility: fold any offending row into row t and start over.
      bool divisible = true;
      for (std::size_t r = t + 1; r < rows_ && divisible; ++r)
        for (std::size_t c = t + 1; c < cols_; ++c)
          if (!mpz_divisible_p(d_(r, c).get_mpz_t(), pivot.get_mpz_t())) {
            row_add(t, r, 1);
            divisible = false;
            break;
          }
      if (!divisible) continue;

      if (sgn(d_(t, t)) < 0) {
        d_.negate_row(t);
        if (track_) left_.negate_row(t);
      }
      return true;
    }
  }

  IntegerMatrix d_;
  std::size_t rows_;
  std::size_t cols_;
  bool track_;
  IntegerMatrix left_, right_, right_inverse_;
  std::vector<Integer> factors_;
};

}  // namespace

Integer CokernelStructure::torsion_order() const {
  Integer order = 1;
  for (const auto& f : torsion) order *= f;
  return order;
}

std::string CokernelStructure::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& f : torsion) {
    os << (first ? "" : " + ") << "Z/" << f;
    first = false;
  }
  if (free_rank > 0) {
    os << (first ? "" : " + ") << "Z";
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

SmithForm smith_normal_form(const IntegerMatrix& a) {
  SmithReducer reducer(a, true);
  reducer.run();
  SmithForm out;
  out.factors = std::move(reducer.factors());
  out.rank = out.factors.size();
  out.left = std::move(reducer.left());
  out.right = std::move(reducer.right());
  out.right_inverse = std::move(reducer.right_inverse());
  return out;
}

std::vector<Integer> invariant_factors(const IntegerMatrix& a) {
  SmithReducer reducer(a, false);
  reducer.run();
  return std::move(reducer.factors());
}

CokernelStructure cokernel_from_factors(std::size_t rows, const std::vector<Integer>& factors) {
  CokernelStructure out;
  out.free_rank = rows - factors.size();
  for (const auto& f : factors)
    if (f != 1) out.torsion.push_back(f);
  return out;
}

CokernelStructure cokernel(const IntegerMatrix& a) {
  return cokernel_from_factors(a.rows(), invariant_factors(a));
}

std::optional<IntegerVector> lattice_membership(const SmithForm& snf, const IntegerVector& v) {
  const std::size_t rows = snf.left.rows();
  const std::size_t cols = snf.right.rows();
  if (v.size() != rows) throw InputError("lattice_membership: vector length does not match rows");
  const IntegerVector uv = snf.left * v;
  IntegerVector y(cols);
  for (std::size_t j = 0; j < rows; ++j) {
    if (j < snf.rank) {
      if (!mpz_divisible_p(uv[j].get_mpz_t(), snf.factors[j].get_mpz_t())) return std::nullopt;
      mpz_divexact(y[j].get_mpz_t(), uv[j].get_mpz_t(), snf.factors[j].get_mpz_t());
    } else if (sgn(uv[j]) != 0) {
      return std::nullopt;
    }
  }
  return snf.right * y;
}

std::optional<IntegerVector> lattice_membership(const IntegerMatrix& a, const IntegerVector& v) {
  if (v.size() != a.rows()) throw InputError("lattice_membership: vector length does not match rows");
  return lattice_membership(smith_normal_form(a), v);
}

IntegerMatrix kernel_basis(const IntegerMatrix& a) {
  const SmithForm snf = smith_normal_form(a);
  std::vector<std::size_t> cols;
  for (std::size_t c = snf.rank; c < a.cols(); ++c) cols.push_back(c);
  return snf.right.select_columns(cols);
}

std::size_t rank(const IntegerMatrix& a) {
  IntegerMatrix m = a;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

Integer determinant(const IntegerMatrix& a) {
  if (!a.is_square()) throw InputError("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Integer det = m(n - 1, n - 1);
  return sign < 0 ? Integer(-det) : det;
}

// Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
// For integer A every division by k is exact.
std::vector<Integer> char_poly(const IntegerMatrix& a) {
  if (!a.is_square()) throw InputError("char_poly: matrix is not square");
  const std::size_t n = a.rows();
  std::vector<Integer> coeffs(n + 1);
  coeffs[n] = 1;
  IntegerMatrix m = IntegerMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntegerMatrix am = a * m;
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    Integer c = -trace;
    const Integer kk = static_cast<unsigned long>(k);
    if (!mpz_divisible_p(c.get_mpz_t(), kk.get_mpz_t()))
      throw std::logic_error("char_poly: inexact Faddeev-LeVerrier division");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), kk.get_mpz_t());
    coeffs[n - k] = c;
    if (k < n) {
      for (std::size_t i = 0; i < n; ++i) am(i, i) += c;
      m = std::move(am);
    }
  }
  return coeffs;
}

Integer pseudo_determinant(const IntegerMatrix& a) {
  if (!a.is_symmetric()) throw InputError("pseudo_determinant: matrix is not symmetric");
  const std::vector<Integer> coeffs = char_poly(a);
  for (const auto& c : coeffs)
    if (sgn(c) != 0) return abs(c);
  return 1;
}

}  // namespace critgroup
