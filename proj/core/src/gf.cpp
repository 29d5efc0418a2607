#include "specht/gf.hpp"

#include <stdexcept>

#include "specht/numeric.hpp"

namespace specht {

namespace {

// Coefficients of the element encoded by v, least significant first.
std::vector<int> digits_of(int v, int p, int e) {
    std::vector<int> d(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) {
        d[static_cast<std::size_t>(i)] = v % p;
        v /= p;
    }
    return d;
}

int encode(const std::vector<int>& d, int p) {
    int v = 0;
    for (std::size_t i = d.size(); i-- > 0;)
        v = v * p + d[i];
    return v;
}

// Product of two residue polynomials modulo x^e + modulus (monic).
int poly_mul(int a, int b, int p, int e, const std::vector<int>& modulus) {
    std::vector<int> da = digits_of(a, p, e);
    std::vector<int> db = digits_of(b, p, e);
    std::vector<int> prod(static_cast<std::size_t>(2 * e - 1), 0);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                (prod[static_cast<std::size_t>(i + j)] +
                 da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) %
                p;
    for (int k = 2 * e - 2; k >= e; --k) {
        int c = prod[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        prod[static_cast<std::size_t>(k)] = 0;
        // x^k = x^{k-e} * (-modulus)
        for (int i = 0; i < e; ++i) {
            int& slot = prod[static_cast<std::size_t>(k - e + i)];
            slot = ((slot - c * modulus[static_cast<std::size_t>(i)]) % p + p) % p;
        }
    }
    prod.resize(static_cast<std::size_t>(e));
    return encode(prod, p);
}

// First monic irreducible x^e + c_{e-1} x^{e-1} + ... + c_0 over F_p.  For
// e in {2,3} irreducibility is exactly the absence of roots.
std::vector<int> find_modulus(int p, int e) {
    for (int tail = 0; tail < ipow(p, e); ++tail) {
        std::vector<int> c = digits_of(tail, p, e);
        bool has_root = false;
        for (int x = 0; x < p && !has_root; ++x) {
            int value = 1;  // leading coefficient
            for (int i = e - 1; i >= 0; --i)
                value = (value * x + c[static_cast<std::size_t>(i)]) % p;
            has_root = value == 0;
        }
        if (!has_root)
            return c;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

GaloisField::GaloisField(int p, int e) : p_(p), e_(e) {
    require_prime(p);
    if (e < 1 || e > 3)
        throw std::invalid_argument("extension degree must be between 1 and 3");
    q_ = static_cast<int>(ipow(p, e));

    std::vector<int> modulus =
        e > 1 ? find_modulus(p, e) : std::vector<int>{0};

    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(static_cast<std::size_t>(q_));
    inv_.assign(static_cast<std::size_t>(q_), 0);
    for (int a = 0; a < q_; ++a) {
        std::vector<int> da = digits_of(a, p, e);
        std::vector<int> dn(static_cast<std::size_t>(e));
        for (int i = 0; i < e; ++i)
            dn[static_cast<std::size_t>(i)] = (p - da[static_cast<std::size_t>(i)]) % p;
        neg_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(encode(dn, p));
        for (int b = 0; b < q_; ++b) {
            std::vector<int> db = digits_of(b, p, e);
            std::vector<int> ds(static_cast<std::size_t>(e));
            for (int i = 0; i < e; ++i)
                ds[static_cast<std::size_t>(i)] =
                    (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p;
            add_[static_cast<std::size_t>(a) * q_ + b] =
                static_cast<std::uint8_t>(encode(ds, p));
            mul_[static_cast<std::size_t>(a) * q_ + b] =
                e == 1 ? static_cast<std::uint8_t>(a * b % p)
                       : static_cast<std::uint8_t>(poly_mul(a, b, p, e, modulus));
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[static_cast<std::size_t>(a) * q_ + b] == 1) {
                inv_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
                break;
            }
}

std::uint8_t GaloisField::inv(std::uint8_t a) const {
    if (a == 0)
        throw std::domain_error("division by zero in GF(p^e)");
    return inv_[a];
}

std::uint8_t GaloisField::from_int(long long v) const {
    long long r = v % p_;
    if (r < 0)
        r += p_;
    return static_cast<std::uint8_t>(r);
}

GFpMatrix::GFpMatrix(const GaloisField* field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, 0) {}

GFpMatrix GFpMatrix::identity(const GaloisField* field, int n) {
    GFpMatrix m(field, n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

GFpMatrix GFpMatrix::operator*(const GFpMatrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix dimension mismatch");
    GFpMatrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            std::uint8_t aik = at(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < o.cols_; ++j) {
                std::uint8_t v = o.at(k, j);
                if (v == 0)
                    continue;
                r.set(i, j, field_->add(r.at(i, j), field_->mul(aik, v)));
            }
        }
    return r;
}

GFpMatrix GFpMatrix::operator+(const GFpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix dimension mismatch");
    GFpMatrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = field_->add(a_[i], o.a_[i]);
    return r;
}

GFpMatrix GFpMatrix::operator-(const GFpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix dimension mismatch");
    GFpMatrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = field_->sub(a_[i], o.a_[i]);
    return r;
}

GFpMatrix GFpMatrix::scaled(std::uint8_t c) const {
    GFpMatrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = field_->mul(a_[i], c);
    return r;
}

bool GFpMatrix::is_zero() const {
    for (std::uint8_t v : a_)
        if (v != 0)
            return false;
    return true;
}

long long GFpMatrix::rank() const {
    GFpMatrix copy = *this;
    return copy.rref_in_place();
}

long long GFpMatrix::rref_in_place(std::vector<int>* pivot_columns) {
    if (pivot_columns)
        pivot_columns->clear();
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows_; ++i)
            if (at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            for (int j = 0; j < cols_; ++j) {
                std::uint8_t t = at(rank, j);
                set(rank, j, at(pivot, j));
                set(pivot, j, t);
            }
        std::uint8_t scale = field_->inv(at(rank, col));
        for (int j = col; j < cols_; ++j)
            set(rank, j, field_->mul(at(rank, j), scale));
        for (int i = 0; i < rows_; ++i) {
            if (i == rank)
                continue;
            std::uint8_t factor = at(i, col);
            if (factor == 0)
                continue;
            for (int j = col; j < cols_; ++j)
                set(i, j, field_->sub(at(i, j), field_->mul(factor, at(rank, j))));
        }
        if (pivot_columns)
            pivot_columns->push_back(col);
        ++rank;
    }
    return rank;
}

}  // namespace specht
