#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hvb {

using Q = mpq_class;
using Vec = std::vector<Q>;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Dense row-major rational matrix.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    Mat(int rows, int cols, std::vector<Q> entries);

    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }
    static Mat from_rows(const std::vector<Vec>& rows, int cols);
    static Mat from_cols(const std::vector<Vec>& cols, int rows);
    static Mat vstack(const std::vector<Mat>& blocks, int cols);
    static Mat hstack(const std::vector<Mat>& blocks, int rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    bool empty() const { return r_ == 0 || c_ == 0; }
    Q& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Q& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const std::vector<Q>& entries() const { return a_; }

    Vec row(int i) const;
    Vec col(int j) const;
    Mat block(int r0, int c0, int nr, int nc) const;
    void set_block(int r0, int c0, const Mat& b);
    void add_block(int r0, int c0, const Mat& b, int sign = 1);
    Mat transpose() const;
    Mat select_rows(const std::vector<int>& idx) const;
    Mat select_cols(const std::vector<int>& idx) const;

    bool is_zero() const;
    bool is_identity() const;
    Vec apply(const Vec& v) const;

    Mat operator*(const Mat& b) const;
    Mat operator+(const Mat& b) const;
    Mat operator-(const Mat& b) const;
    Mat operator-() const;
    Mat& operator+=(const Mat& b);
    Mat& operator-=(const Mat& b);
    Mat scaled(const Q& s) const;
    bool operator==(const Mat& b) const;
    bool operator!=(const Mat& b) const { return !(*this == b); }

    std::string str() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Q> a_;
};

Vec zero_vec(int n);
Vec unit_vec(int n, int i);
bool is_zero(const Vec& v);

struct Rref {
    Mat m;                // reduced row echelon form, zero rows dropped
    std::vector<int> pivots;
};
Rref rref(Mat a);
int rank(const Mat& a);

// Subspace of Q^ambient, represented by its RREF basis (rows).  Two equal
// subspaces have identical representations.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : n_(ambient), basis_(0, ambient) {}
    static Subspace zero(int ambient) { return Subspace(ambient); }
    static Subspace full(int ambient);
    // Span of the unit vectors e_begin, ..., e_{end-1}.
    static Subspace coordinate(int ambient, int begin, int end);
    static Subspace span_rows(const Mat& rows);
    static Subspace span_cols(const Mat& cols);
    static Subspace span(const std::vector<Vec>& vs, int ambient);

    int ambient() const { return n_; }
    int dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return piv_; }
    Mat basis_cols() const { return basis_.transpose(); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& s) const;
    // Coordinates of v in the RREF basis; v must lie in the subspace.
    Vec coords(const Vec& v) const;
    bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }

private:
    int n_ = 0;
    Mat basis_;
    std::vector<int> piv_;
};

Subspace kernel(const Mat& a);
Subspace image(const Mat& a);
Subspace image(const Mat& a, const Subspace& s);
Subspace preimage(const Mat& a, const Subspace& s);
Subspace intersect(const Subspace& s, const Subspace& t);
Subspace sum(const Subspace& s, const Subspace& t);
bool is_complement(const Subspace& s, const Subspace& t, int ambient);

enum class SolveStatus { Ok, NoSolution, NotUnique };
struct SolveResult {
    SolveStatus status;
    Vec x;
};
SolveResult solve_unique(const Mat& a, const Vec& b);

class SingularMatrix : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Mat inverse(const Mat& a);
// L with L * a = I, for a of full column rank.
Mat left_inverse(const Mat& a);
// Projection onto k along c, where k and c are complementary.
Mat projection(const Subspace& k, const Subspace& c);

// Compressed sparse row storage for structure maps that are mostly identity blocks.
class SparseMat {
public:
    SparseMat() : ptr_{0} {}
    SparseMat(int rows, int cols) : r_(rows), c_(cols), ptr_(rows + 1, 0) {}
    explicit SparseMat(const Mat& m);

    struct Entry {
        int i, j;
        Q v;
    };
    // Duplicates are summed and zeros dropped.
    static SparseMat from_entries(int rows, int cols, std::vector<Entry> e);

    int rows() const { return r_; }
    int cols() const { return c_; }
    std::size_t nnz() const { return val_.size(); }
    Mat dense() const;
    Vec apply(const Vec& v) const;
    bool is_identity() const;
    bool is_zero() const { return val_.empty(); }

    SparseMat operator*(const SparseMat& b) const;
    Mat operator*(const Mat& b) const;
    bool operator==(const SparseMat& b) const;
    bool operator!=(const SparseMat& b) const { return !(*this == b); }

    // Row i as parallel (column, value) ranges.
    int row_begin(int i) const { return ptr_[i]; }
    int row_end(int i) const { return ptr_[i + 1]; }
    int col_at(int p) const { return col_[p]; }
    const Q& val_at(int p) const { return val_[p]; }

private:
    int r_ = 0, c_ = 0;
    std::vector<int> ptr_, col_;
    std::vector<Q> val_;
};

std::string to_string(const Q& q);
Q parse_rational(const std::string& s);

}  // namespace hvb
