#pragma once

#include <cstdint>
#include <vector>

namespace specht {

/* GF(p^e) for p prime and 1 <= e <= 3, with full add/mul lookup tables
 * (q <= 125, so the tables are small).  Elements are encoded as integers
 * 0..q-1 whose base-p digits are the coefficients of the residue polynomial,
 * least significant first.  For e >= 2 the modulus is the first monic
 * irreducible polynomial in lexicographic coefficient order, which keeps
 * every matrix and sweep output deterministic.
 */
class GaloisField {
public:
    GaloisField(int p, int e);

    int characteristic() const { return p_; }
    int degree() const { return e_; }
    int size() const { return q_; }

    std::uint8_t zero() const { return 0; }
    std::uint8_t one() const { return 1; }
    std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
        return add_[static_cast<std::size_t>(a) * q_ + b];
    }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg_[b]); }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
        return mul_[static_cast<std::size_t>(a) * q_ + b];
    }
    std::uint8_t inv(std::uint8_t a) const;  // throws on 0
    // Integer embedded through the prime subfield.
    std::uint8_t from_int(long long v) const;

private:
    int p_;
    int e_;
    int q_;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> mul_;
    std::vector<std::uint8_t> neg_;
    std::vector<std::uint8_t> inv_;
};

// Dense matrix over GF(p^e); the field must outlive the matrix.
class GFpMatrix {
public:
    GFpMatrix() = default;
    GFpMatrix(const GaloisField* field, int rows, int cols);
    static GFpMatrix identity(const GaloisField* field, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const GaloisField& field() const { return *field_; }

    std::uint8_t at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }
    void set(int i, int j, std::uint8_t v) {
        a_[static_cast<std::size_t>(i) * cols_ + j] = v;
    }

    GFpMatrix operator*(const GFpMatrix& o) const;
    GFpMatrix operator+(const GFpMatrix& o) const;
    GFpMatrix operator-(const GFpMatrix& o) const;
    GFpMatrix scaled(std::uint8_t c) const;
    bool is_zero() const;
    friend bool operator==(const GFpMatrix& a, const GFpMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    long long rank() const;  // Gaussian elimination on a copy

    /* In-place reduced row echelon form.  Returns the rank; nonzero rows end
     * up on top with pivot columns recorded in ascending order.
     */
    long long rref_in_place(std::vector<int>* pivot_columns = nullptr);

private:
    const GaloisField* field_ = nullptr;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> a_;
};

}  // namespace specht
