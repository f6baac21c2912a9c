#include "hvb/exactla.hpp"

#include <algorithm>
#include <sstream>

namespace hvb {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DimensionError(what);
}

}  // namespace

Mat::Mat(int rows, int cols, std::vector<Q> entries) : r_(rows), c_(cols), a_(std::move(entries)) {
    require(a_.size() == static_cast<std::size_t>(rows) * cols, "Mat: entry count != rows*cols");
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
    Mat m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.r_; ++i) {
        require(static_cast<int>(rows[i].size()) == cols, "from_rows: ragged rows");
        for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols, int rows) {
    Mat m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.c_; ++j) {
        require(static_cast<int>(cols[j].size()) == rows, "from_cols: ragged columns");
        for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Mat Mat::vstack(const std::vector<Mat>& blocks, int cols) {
    int r = 0;
    for (const auto& b : blocks) {
        require(b.c_ == cols, "vstack: column mismatch");
        r += b.r_;
    }
    Mat m(r, cols);
    int off = 0;
    for (const auto& b : blocks) {
        m.set_block(off, 0, b);
        off += b.r_;
    }
    return m;
}

Mat Mat::hstack(const std::vector<Mat>& blocks, int rows) {
    int c = 0;
    for (const auto& b : blocks) {
        require(b.r_ == rows, "hstack: row mismatch");
        c += b.c_;
    }
    Mat m(rows, c);
    int off = 0;
    for (const auto& b : blocks) {
        m.set_block(0, off, b);
        off += b.c_;
    }
    return m;
}

Vec Mat::row(int i) const {
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i) * c_, a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * c_);
}

Vec Mat::col(int j) const {
    Vec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Mat Mat::block(int r0, int c0, int nr, int nc) const {
    require(r0 >= 0 && c0 >= 0 && r0 + nr <= r_ && c0 + nc <= c_, "block: out of range");
    Mat m(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

void Mat::set_block(int r0, int c0, const Mat& b) {
    require(r0 >= 0 && c0 >= 0 && r0 + b.r_ <= r_ && c0 + b.c_ <= c_, "set_block: out of range");
    for (int i = 0; i < b.r_; ++i)
        for (int j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

void Mat::add_block(int r0, int c0, const Mat& b, int sign) {
    require(r0 >= 0 && c0 >= 0 && r0 + b.r_ <= r_ && c0 + b.c_ <= c_, "add_block: out of range");
    for (int i = 0; i < b.r_; ++i)
        for (int j = 0; j < b.c_; ++j) {
            const Q& x = b(i, j);
            if (sgn(x) == 0) continue;
            if (sign > 0)
                (*this)(r0 + i, c0 + j) += x;
            else
                (*this)(r0 + i, c0 + j) -= x;
        }
}

Mat Mat::transpose() const {
    Mat m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Mat Mat::select_rows(const std::vector<int>& idx) const {
    Mat m(static_cast<int>(idx.size()), c_);
    for (int i = 0; i < m.r_; ++i)
        for (int j = 0; j < c_; ++j) m(i, j) = (*this)(idx[i], j);
    return m;
}

Mat Mat::select_cols(const std::vector<int>& idx) const {
    Mat m(r_, static_cast<int>(idx.size()));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < m.c_; ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Mat::is_identity() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Vec Mat::apply(const Vec& v) const {
    require(static_cast<int>(v.size()) == c_, "apply: size mismatch");
    Vec out(r_);
    Q t;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            const Q& x = (*this)(i, j);
            if (sgn(x) == 0 || sgn(v[j]) == 0) continue;
            mpq_mul(t.get_mpq_t(), x.get_mpq_t(), v[j].get_mpq_t());
            out[i] += t;
        }
    return out;
}

Mat Mat::operator*(const Mat& b) const {
    require(c_ == b.r_, "operator*: inner dimension mismatch");
    Mat m(r_, b.c_);
    Q t;
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Q& x = (*this)(i, k);
            if (sgn(x) == 0) continue;
            for (int j = 0; j < b.c_; ++j) {
                const Q& y = b(k, j);
                if (sgn(y) == 0) continue;
                mpq_mul(t.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
                mpq_add(m(i, j).get_mpq_t(), m(i, j).get_mpq_t(), t.get_mpq_t());
            }
        }
    return m;
}

Mat Mat::operator+(const Mat& b) const {
    Mat m = *this;
    m += b;
    return m;
}

Mat Mat::operator-(const Mat& b) const {
    Mat m = *this;
    m -= b;
    return m;
}

Mat Mat::operator-() const {
    Mat m(r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
}

Mat& Mat::operator+=(const Mat& b) {
    require(r_ == b.r_ && c_ == b.c_, "operator+=: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (sgn(b.a_[i]) != 0) a_[i] += b.a_[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& b) {
    require(r_ == b.r_ && c_ == b.c_, "operator-=: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (sgn(b.a_[i]) != 0) a_[i] -= b.a_[i];
    return *this;
}

Mat Mat::scaled(const Q& s) const {
    Mat m(r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

bool Mat::operator==(const Mat& b) const { return r_ == b.r_ && c_ == b.c_ && a_ == b.a_; }

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < r_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < c_; ++j) os << (j ? " " : "") << to_string((*this)(i, j));
    }
    os << "]";
    return os.str();
}

Vec zero_vec(int n) { return Vec(n); }

Vec unit_vec(int n, int i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Rref rref(Mat a) {
    const int R = a.rows(), C = a.cols();
    std::vector<int> piv;
    int row = 0;
    Q f, t;
    for (int col = 0; col < C && row < R; ++col) {
        int p = -1;
        for (int i = row; i < R; ++i)
            if (sgn(a(i, col)) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < C; ++j) swap(a(p, j), a(row, j));
        if (a(row, col) != 1) {
            Q inv = 1 / a(row, col);
            for (int j = col; j < C; ++j)
                if (sgn(a(row, j)) != 0) a(row, j) *= inv;
        }
        for (int i = 0; i < R; ++i) {
            if (i == row || sgn(a(i, col)) == 0) continue;
            f = a(i, col);
            for (int j = col; j < C; ++j) {
                if (sgn(a(row, j)) == 0) continue;
                mpq_mul(t.get_mpq_t(), f.get_mpq_t(), a(row, j).get_mpq_t());
                mpq_sub(a(i, j).get_mpq_t(), a(i, j).get_mpq_t(), t.get_mpq_t());
            }
        }
        piv.push_back(col);
        ++row;
    }
    return {a.block(0, 0, row, C), piv};
}

int rank(const Mat& a) { return static_cast<int>(rref(a).pivots.size()); }

Subspace Subspace::full(int ambient) { return coordinate(ambient, 0, ambient); }

Subspace Subspace::coordinate(int ambient, int begin, int end) {
    require(0 <= begin && begin <= end && end <= ambient, "Subspace::coordinate: bad range");
    Subspace s(ambient);
    s.basis_ = Mat(end - begin, ambient);
    for (int t = begin; t < end; ++t) {
        s.basis_(t - begin, t) = 1;
        s.piv_.push_back(t);
    }
    return s;
}

Subspace Subspace::span_rows(const Mat& rows) {
    Subspace s(rows.cols());
    Rref r = rref(rows);
    s.basis_ = std::move(r.m);
    s.piv_ = std::move(r.pivots);
    return s;
}

Subspace Subspace::span_cols(const Mat& cols) { return span_rows(cols.transpose()); }

Subspace Subspace::span(const std::vector<Vec>& vs, int ambient) { return span_rows(Mat::from_rows(vs, ambient)); }

bool Subspace::contains(const Vec& v) const {
    require(static_cast<int>(v.size()) == n_, "contains: ambient mismatch");
    // Reduce v against the RREF basis.
    Vec w = v;
    Q t;
    for (int i = 0; i < dim(); ++i) {
        const Q c = w[piv_[i]];
        if (sgn(c) == 0) continue;
        for (int j = 0; j < n_; ++j) {
            if (sgn(basis_(i, j)) == 0) continue;
            mpq_mul(t.get_mpq_t(), c.get_mpq_t(), basis_(i, j).get_mpq_t());
            w[j] -= t;
        }
    }
    return is_zero(w);
}

bool Subspace::contains(const Subspace& s) const {
    require(s.n_ == n_, "contains: ambient mismatch");
    for (int i = 0; i < s.dim(); ++i)
        if (!contains(s.basis_.row(i))) return false;
    return true;
}

Vec Subspace::coords(const Vec& v) const {
    Vec c(dim());
    for (int i = 0; i < dim(); ++i) c[i] = v[piv_[i]];
    return c;
}

Subspace kernel(const Mat& a) {
    const int C = a.cols();
    Rref r = rref(a);
    std::vector<char> is_piv(C, 0);
    for (int p : r.pivots) is_piv[p] = 1;
    std::vector<Vec> basis;
    for (int f = 0; f < C; ++f) {
        if (is_piv[f]) continue;
        Vec v(C);
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.m(static_cast<int>(i), f);
        basis.push_back(std::move(v));
    }
    return Subspace::span(basis, C);
}

Subspace image(const Mat& a) { return Subspace::span_cols(a); }

Subspace image(const Mat& a, const Subspace& s) {
    require(a.cols() == s.ambient(), "image: ambient mismatch");
    if (s.dim() == 0) return Subspace(a.rows());
    return Subspace::span_cols(a * s.basis_cols());
}

Subspace preimage(const Mat& a, const Subspace& s) {
    require(a.rows() == s.ambient(), "preimage: ambient mismatch");
    // x with a x in s  <=>  a x has zero component along a complement of s.
    // Use the annihilator of s: rows y with y . s = 0.
    Subspace ann = kernel(s.dim() ? s.basis() : Mat(0, s.ambient()));
    if (ann.dim() == 0) return Subspace::full(a.cols());
    return kernel(ann.basis() * a);
}

Subspace intersect(const Subspace& s, const Subspace& t) {
    require(s.ambient() == t.ambient(), "intersect: ambient mismatch");
    const int n = s.ambient();
    if (s.dim() == 0 || t.dim() == 0) return Subspace(n);
    // Solve s^T a = t^T b.
    Mat m = Mat::hstack({s.basis_cols(), -t.basis_cols()}, n);
    Subspace k = kernel(m);
    std::vector<Vec> out;
    for (int i = 0; i < k.dim(); ++i) {
        Vec row = k.basis().row(i);
        Vec a(row.begin(), row.begin() + s.dim());
        out.push_back(s.basis_cols().apply(a));
    }
    return Subspace::span(out, n);
}

Subspace sum(const Subspace& s, const Subspace& t) {
    require(s.ambient() == t.ambient(), "sum: ambient mismatch");
    return Subspace::span_rows(Mat::vstack({s.basis(), t.basis()}, s.ambient()));
}

bool is_complement(const Subspace& s, const Subspace& t, int ambient) {
    require(s.ambient() == ambient && t.ambient() == ambient, "is_complement: ambient mismatch");
    return s.dim() + t.dim() == ambient && intersect(s, t).dim() == 0;
}

SolveResult solve_unique(const Mat& a, const Vec& b) {
    require(static_cast<int>(b.size()) == a.rows(), "solve_unique: rhs size mismatch");
    const int C = a.cols();
    Mat aug = Mat::hstack({a, Mat::from_cols({b}, a.rows())}, a.rows());
    Rref r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == C) return {SolveStatus::NoSolution, {}};
    if (static_cast<int>(r.pivots.size()) < C) return {SolveStatus::NotUnique, {}};
    Vec x(C);
    for (int i = 0; i < C; ++i) x[i] = r.m(i, C);
    return {SolveStatus::Ok, x};
}

Mat inverse(const Mat& a) {
    require(a.rows() == a.cols(), "inverse: not square");
    const int n = a.rows();
    Rref r = rref(Mat::hstack({a, Mat::identity(n)}, n));
    if (static_cast<int>(r.pivots.size()) < n || (n > 0 && r.pivots[n - 1] != n - 1))
        throw SingularMatrix("inverse: matrix is singular");
    return r.m.block(0, n, n, n);
}

Mat left_inverse(const Mat& a) {
    const int k = a.cols();
    Rref rt = rref(a.transpose());
    if (static_cast<int>(rt.pivots.size()) < k) throw SingularMatrix("left_inverse: rank deficient");
    Mat sq = a.select_rows(rt.pivots);
    Mat inv = inverse(sq);
    Mat l(k, a.rows());
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) l(i, rt.pivots[j]) = inv(i, j);
    return l;
}

Mat projection(const Subspace& k, const Subspace& c) {
    const int n = k.ambient();
    if (!is_complement(k, c, n)) throw DimensionError("projection: subspaces are not complementary");
    Mat m = Mat::hstack({k.basis_cols(), c.basis_cols()}, n);
    Mat mi = inverse(m);
    Mat keep(n, n);
    for (int i = 0; i < k.dim(); ++i) keep(i, i) = 1;
    return m * keep * mi;
}

SparseMat::SparseMat(const Mat& m) : r_(m.rows()), c_(m.cols()), ptr_(m.rows() + 1, 0) {
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j)
            if (sgn(m(i, j)) != 0) {
                col_.push_back(j);
                val_.push_back(m(i, j));
            }
        ptr_[i + 1] = static_cast<int>(val_.size());
    }
}

SparseMat SparseMat::from_entries(int rows, int cols, std::vector<Entry> e) {
    std::sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
    SparseMat s(rows, cols);
    for (std::size_t p = 0; p < e.size();) {
        require(e[p].i >= 0 && e[p].i < rows && e[p].j >= 0 && e[p].j < cols, "SparseMat::from_entries: index out of range");
        Q sum = e[p].v;
        std::size_t q = p + 1;
        for (; q < e.size() && e[q].i == e[p].i && e[q].j == e[p].j; ++q) sum += e[q].v;
        if (sgn(sum) != 0) {
            s.col_.push_back(e[p].j);
            s.val_.push_back(sum);
            s.ptr_[e[p].i + 1] = static_cast<int>(s.val_.size());
        }
        p = q;
    }
    for (int i = 0; i < rows; ++i) s.ptr_[i + 1] = std::max(s.ptr_[i + 1], s.ptr_[i]);
    return s;
}

Mat SparseMat::dense() const {
    Mat m(r_, c_);
    for (int i = 0; i < r_; ++i)
        for (int p = ptr_[i]; p < ptr_[i + 1]; ++p) m(i, col_[p]) = val_[p];
    return m;
}

Vec SparseMat::apply(const Vec& v) const {
    require(static_cast<int>(v.size()) == c_, "SparseMat::apply: size mismatch");
    Vec out(r_);
    for (int i = 0; i < r_; ++i)
        for (int p = ptr_[i]; p < ptr_[i + 1]; ++p)
            if (sgn(v[col_[p]]) != 0) out[i] += val_[p] * v[col_[p]];
    return out;
}

bool SparseMat::is_identity() const {
    if (r_ != c_ || static_cast<int>(val_.size()) != r_) return false;
    for (int i = 0; i < r_; ++i)
        if (ptr_[i + 1] - ptr_[i] != 1 || col_[ptr_[i]] != i || val_[ptr_[i]] != 1) return false;
    return true;
}

SparseMat SparseMat::operator*(const SparseMat& b) const {
    require(c_ == b.r_, "SparseMat*: inner dimension mismatch");
    SparseMat out(r_, b.c_);
    std::vector<Q> acc(b.c_);
    std::vector<char> touched(b.c_, 0);
    std::vector<int> cols;
    Q t;
    for (int i = 0; i < r_; ++i) {
        cols.clear();
        for (int p = ptr_[i]; p < ptr_[i + 1]; ++p) {
            const int k = col_[p];
            for (int q = b.ptr_[k]; q < b.ptr_[k + 1]; ++q) {
                const int j = b.col_[q];
                if (!touched[j]) {
                    touched[j] = 1;
                    cols.push_back(j);
                }
                mpq_mul(t.get_mpq_t(), val_[p].get_mpq_t(), b.val_[q].get_mpq_t());
                acc[j] += t;
            }
        }
        std::sort(cols.begin(), cols.end());
        for (int j : cols) {
            if (sgn(acc[j]) != 0) {
                out.col_.push_back(j);
                out.val_.push_back(acc[j]);
            }
            acc[j] = 0;
            touched[j] = 0;
        }
        out.ptr_[i + 1] = static_cast<int>(out.val_.size());
    }
    return out;
}

Mat SparseMat::operator*(const Mat& b) const {
    require(c_ == b.rows(), "SparseMat*Mat: inner dimension mismatch");
    Mat out(r_, b.cols());
    Q t;
    for (int i = 0; i < r_; ++i)
        for (int p = ptr_[i]; p < ptr_[i + 1]; ++p)
            for (int j = 0; j < b.cols(); ++j) {
                const Q& y = b(col_[p], j);
                if (sgn(y) == 0) continue;
                mpq_mul(t.get_mpq_t(), val_[p].get_mpq_t(), y.get_mpq_t());
                out(i, j) += t;
            }
    return out;
}

bool SparseMat::operator==(const SparseMat& b) const {
    return r_ == b.r_ && c_ == b.c_ && ptr_ == b.ptr_ && col_ == b.col_ && val_ == b.val_;
}

std::string to_string(const Q& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Q parse_rational(const std::string& s) {
    Q q;
    if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace hvb
