#pragma once

#include <map>
#include <string>
#include <vector>

namespace svt {

// Laurent polynomial in v = chi_1(z), so u = z/zbar = v^2. Storing powers of v
// keeps half-integral u-exponents integral.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long long c) { if (c != 0) terms_[0] = c; }  // NOLINT
  static Laurent monomial(long long c, int e);

  bool is_zero() const { return terms_.empty(); }
  bool is_unit_monomial() const;  // +-v^e
  const std::map<int, long long>& terms() const { return terms_; }

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  bool operator==(const Laurent& o) const = default;

  Laurent bar() const;                 // v -> v^-1
  Laurent at_minus_one() const;        // v -> -1 (z = -1)
  Laurent unit_inverse() const;        // only for +-v^e
  std::string str() const;

 private:
  void add_term(int e, long long c);
  std::map<int, long long> terms_;
};

class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  static ExactMatrix identity(int n);
  static ExactMatrix diag(const std::vector<Laurent>& d);

  int size() const { return n_; }
  Laurent& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Laurent& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator-() const;
  ExactMatrix scaled(const Laurent& c) const;
  bool operator==(const ExactMatrix& o) const = default;

  ExactMatrix transpose() const;
  ExactMatrix bar() const;
  ExactMatrix at_minus_one() const;
  bool is_monomial() const;  // one unit entry per row and column
  ExactMatrix monomial_inverse() const;
  bool is_zero() const;
  bool is_diagonal() const;
  std::string str() const;

 private:
  int n_ = 0;
  std::vector<Laurent> a_;
};

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
// Square block matrix from a grid of blocks; rows of blocks must fit.
ExactMatrix blocks(const std::vector<std::vector<ExactMatrix>>& grid, const std::vector<int>& sizes);
ExactMatrix zero_matrix(int n);
ExactMatrix antidiag_ones(int n);  // K_n
ExactMatrix elementary(int n, int i, int j);

ExactMatrix w_matrix(int n);
ExactMatrix j_np(int n, int p);
ExactMatrix jprime_np(int n, int p);  // outer blocks K_p, identity in the middle
ExactMatrix t_2p(int p);
ExactMatrix tprime_2p(int n, int p);

// Pinned action g -> w ^t g^-1 w^-1 (g monomial) and its differential.
ExactMatrix sigma(const ExactMatrix& w, const ExactMatrix& g);
ExactMatrix dsigma(const ExactMatrix& w, const ExactMatrix& y);

struct GaloisElement {
  ExactMatrix m;
  bool j = false;
};
// (A, j)(B, g) = (A sigma(B), jg); j^2 is returned separately as a flag.
GaloisElement compose(const ExactMatrix& w, const GaloisElement& x, const GaloisElement& y, bool* j_squared);

struct IdentityCheck {
  std::string id;
  std::string params;
  bool pass = true;
  std::string delta;  // offending difference when failing
};

struct MatrixReport {
  std::vector<IdentityCheck> checks;
  int failures() const;
  void append(const MatrixReport& o);
};

MatrixReport check_xi_sp(int n, int p, int a, int b);
MatrixReport check_xi_so(int n, int p, int a_prime, int b);
// The literal j-image T'_{2p} w_n of the construction.
MatrixReport check_xi_so_printed(int n, int p, int a_prime, int b);
MatrixReport check_xi_pm(int n);
MatrixReport check_rank_one();
MatrixReport check_esp(int k);
MatrixReport check_all(int max_size);
MatrixReport check_all_serial(int max_size);

}  // namespace svt
